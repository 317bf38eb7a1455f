"""Proof objects: a claim, its inputs, checked facts, and a verdict."""

from __future__ import annotations

import json
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Any

from .matrix import Matrix
from .semiring import TOP, ZERO, format_value


def to_jsonable(obj: Any) -> Any:
    if isinstance(obj, Matrix):
        return {
            "n": obj.n,
            "kind": obj.kind.value,
            "rows": [[format_value(v, obj.kind) for v in r] for r in obj.rows],
        }
    if obj is ZERO:
        return "-inf"
    if obj is TOP:
        return "+top"
    if isinstance(obj, Fraction):
        if obj.denominator == 1:
            return str(obj.numerator)
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj, key=repr) if isinstance(obj, (set, frozenset)) else obj
        return [to_jsonable(v) for v in items]
    if hasattr(obj, "to_json"):
        return obj.to_json()
    return obj


@dataclass
class Certificate:
    label: str
    holds: bool
    detail: Any = None

    def to_json(self):
        return {"label": self.label, "holds": self.holds, "detail": to_jsonable(self.detail)}


@dataclass
class Proof:
    claim: str
    inputs: dict = field(default_factory=dict)
    certificates: list = field(default_factory=list)

    def check(self, label: str, holds: bool, detail: Any = None) -> bool:
        self.certificates.append(Certificate(label, bool(holds), detail))
        return bool(holds)

    @property
    def verdict(self) -> bool:
        return bool(self.certificates) and all(c.holds for c in self.certificates)

    def failures(self) -> list:
        return [c for c in self.certificates if not c.holds]

    def to_json(self):
        return {
            "claim": self.claim,
            "inputs": to_jsonable(self.inputs),
            "certificates": [c.to_json() for c in self.certificates],
            "verdict": "verified" if self.verdict else "failed",
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)
