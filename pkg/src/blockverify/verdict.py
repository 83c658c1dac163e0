"""Exact outcome of a single inequality check."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable


def format_rational(x: Fraction) -> str:
    """Render as ``"num/den"`` (denominator always shown)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str | int) -> Fraction:
    if isinstance(text, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise TypeError(f"expected 'num/den' string, got {type(text).__name__}")
    return Fraction(text.strip())


@dataclass(frozen=True)
class Verdict:
    """Result of comparing ``lhs <= rhs`` in exact rational arithmetic.

    ``holds`` and ``equality`` are never free-standing flags: they are
    re-derived from ``lhs`` and ``rhs`` on construction and a mismatch
    raises.  Use :meth:`compare` to build one.
    """

    check_id: str
    lhs: Fraction
    rhs: Fraction
    holds: bool
    equality: bool
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "lhs", Fraction(self.lhs))
        object.__setattr__(self, "rhs", Fraction(self.rhs))
        object.__setattr__(self, "notes", tuple(self.notes))
        if self.holds != (self.lhs <= self.rhs):
            raise ValueError(f"{self.check_id}: holds flag disagrees with lhs <= rhs")
        if self.equality != (self.lhs == self.rhs):
            raise ValueError(f"{self.check_id}: equality flag disagrees with lhs == rhs")

    @classmethod
    def compare(
        cls, check_id: str, lhs, rhs, notes: Iterable[str] = ()
    ) -> "Verdict":
        lhs, rhs = Fraction(lhs), Fraction(rhs)
        return cls(check_id, lhs, rhs, lhs <= rhs, lhs == rhs, tuple(notes))

    @property
    def margin(self) -> Fraction:
        return self.rhs - self.lhs

    def with_notes(self, *notes: str) -> "Verdict":
        return replace(self, notes=self.notes + tuple(notes))

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
            "holds": self.holds,
            "equality": self.equality,
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Verdict":
        return cls(
            data["check_id"],
            parse_rational(data["lhs"]),
            parse_rational(data["rhs"]),
            bool(data["holds"]),
            bool(data["equality"]),
            tuple(data.get("notes", ())),
        )
