"""Exact matrix algebra over idempotent semifields and Green's-relation tools.

The Boolean semifield and max-plus over the rationals share one carrier
(``semiring``).  ``matrix`` holds dense square matrices, ``plusstar`` the
canonical idempotents A^(+) and A^(*) with residuals, ``finite_green``
brute-force Green's relations on Boolean matrix monoids, ``factorization``
idempotent factorisations of unitriangular matrices and ``deficiency`` path
deficiencies and tilde-H classes of triangular idempotents.
"""

from .matrix import Matrix, Shape
from .semiring import ONE, TOP, ZERO, Kind

__version__ = "0.1.0"

__all__ = ["Kind", "Matrix", "ONE", "Shape", "TOP", "ZERO", "__version__"]
