"""Three-valued results for bounded verifiers."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


class Status(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a finite-scale check.

    ``HOLDS`` means nothing was refuted within ``bounds``; it is never a proof.
    ``FAILS`` always carries a concrete ``witness``. ``UNKNOWN`` always records
    the ``bounds`` that were searched.
    """

    status: Status
    witness: Any = None
    bounds: dict = field(default_factory=dict)
    reason: str = ""

    def __post_init__(self):
        if self.status is Status.FAILS and self.witness is None:
            raise ValueError("a failing verdict needs a witness")
        if self.status is Status.UNKNOWN and not self.bounds:
            raise ValueError("an unknown verdict needs the searched bounds")

    @classmethod
    def holds(cls, bounds=None, reason="", witness=None) -> Verdict:
        return cls(Status.HOLDS, witness, dict(bounds or {}), reason)

    @classmethod
    def fails(cls, witness, bounds=None, reason="") -> Verdict:
        return cls(Status.FAILS, witness, dict(bounds or {}), reason)

    @classmethod
    def unknown(cls, bounds, reason="", witness=None) -> Verdict:
        return cls(Status.UNKNOWN, witness, dict(bounds), reason)

    @property
    def ok(self) -> bool:
        return self.status is Status.HOLDS

    @property
    def failed(self) -> bool:
        return self.status is Status.FAILS

    @property
    def is_unknown(self) -> bool:
        return self.status is Status.UNKNOWN

    def describe(self) -> str:
        parts = [self.status.value]
        if self.reason:
            parts.append(self.reason)
        if self.witness is not None:
            parts.append("witness=" + render(self.witness))
        if self.bounds:
            parts.append("bounds=" + render(self.bounds))
        return " ".join(parts)


def render(obj: Any) -> str:
    """Deterministic text rendering of witness payloads (rationals as p/q)."""
    if isinstance(obj, Verdict):
        return "{" + obj.describe() + "}"
    if isinstance(obj, bool) or obj is None:
        return str(obj)
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        items = sorted(obj.items(), key=lambda kv: str(kv[0]))
        return "{" + ", ".join(f"{k}: {render(v)}" for k, v in items) + "}"
    if isinstance(obj, (list, tuple)):
        return "(" + ", ".join(render(v) for v in obj) + ")"
    if isinstance(obj, (set, frozenset)):
        return "{" + ", ".join(render(v) for v in sorted(obj)) + "}"
    if isinstance(obj, enum.Enum):
        return str(obj.value)
    return str(obj)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
