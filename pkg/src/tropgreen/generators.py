"""Seeded random matrices for property tests and experiments.

Finite entries are rationals k/d with k uniform in [-bound, bound] and d
uniform in [1, max_den].  ``zero_prob`` puts extra mass on the zero element
where the shape allows it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .matrix import Matrix, mat_mul
from .semiring import ONE, ZERO, Kind


@dataclass(frozen=True)
class SamplerConfig:
    bound: int = 10
    max_den: int = 4
    zero_prob: float = 0.0


DEFAULT = SamplerConfig()


def rational(rng: random.Random, cfg: SamplerConfig = DEFAULT) -> Fraction:
    return Fraction(rng.randint(-cfg.bound, cfg.bound), rng.randint(1, cfg.max_den))


def nonneg(rng: random.Random, cfg: SamplerConfig = DEFAULT) -> Fraction:
    return abs(rational(rng, cfg))


def entry(rng: random.Random, cfg: SamplerConfig = DEFAULT):
    if cfg.zero_prob and rng.random() < cfg.zero_prob:
        return ZERO
    return rational(rng, cfg)


def general(rng, n, cfg=DEFAULT) -> Matrix:
    return Matrix([[entry(rng, cfg) for _ in range(n)] for _ in range(n)])


def full_domain(rng, n, cfg=DEFAULT) -> Matrix:
    """A random matrix without zero rows (dom = [n])."""
    rows = []
    for _ in range(n):
        row = [entry(rng, cfg) for _ in range(n)]
        if all(v is ZERO for v in row):
            row[rng.randrange(n)] = rational(rng, cfg)
        rows.append(row)
    return Matrix(rows)


def upper(rng, n, cfg=DEFAULT, diagonal=None, positive=False) -> Matrix:
    """Upper triangular; ``diagonal`` is "unit", "full" or None (zeros allowed)."""
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if j < i:
                row.append(ZERO)
            elif j == i and diagonal == "unit":
                row.append(ONE)
            elif j == i and diagonal == "full":
                row.append(rational(rng, cfg))
            elif positive:
                row.append(rational(rng, cfg))
            else:
                row.append(entry(rng, cfg))
        rows.append(row)
    return Matrix(rows)


def full_diagonal(rng, n, cfg=DEFAULT) -> Matrix:
    return upper(rng, n, cfg, diagonal="full")


def positive_upper(rng, n, cfg=DEFAULT) -> Matrix:
    return upper(rng, n, cfg, diagonal="full", positive=True)


def unitriangular(rng, n, cfg=DEFAULT, positive=False) -> Matrix:
    return upper(rng, n, cfg, diagonal="unit", positive=positive)


def diagonal(rng, n, cfg=DEFAULT) -> Matrix:
    return Matrix([[rational(rng, cfg) if i == j else ZERO for j in range(n)] for i in range(n)])


def scalar(rng, cfg=DEFAULT) -> Fraction:
    return rational(rng, cfg)


def idempotent_unitriangular(rng, n, cfg=DEFAULT, positive=True) -> Matrix:
    """A random unit-diagonal idempotent: the Kleene closure of a random unitriangular X.

    For unitriangular X the powers increase and stabilise at X^(n-1), which is
    idempotent.
    """
    X = unitriangular(rng, n, cfg, positive=positive)
    P = X
    for _ in range(n):
        Q = mat_mul(P, P)
        if Q == P:
            return P
        P = Q
    raise AssertionError("unitriangular powers did not stabilise")


def bool_random(rng, n, density: float = 0.5) -> Matrix:
    return Matrix(
        [[ONE if rng.random() < density else ZERO for _ in range(n)] for _ in range(n)],
        Kind.BOOLEAN,
    )
