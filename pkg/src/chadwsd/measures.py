"""Set-overlap scores between gloss stem sets.

``ratio2``/``ratio3`` return exact :class:`fractions.Fraction` values and are
what the disambiguator compares; the float-valued helpers are for callers
that only want a number. Any zero denominator yields 0.
"""

from __future__ import annotations

import enum
from fractions import Fraction

ZERO = Fraction(0)


class MeasureKind(enum.Enum):
    DICE = "dice"
    JACCARD = "jaccard"
    OVERLAP = "overlap"

    def __str__(self):
        return self.value

    @classmethod
    def parse(cls, text: str) -> "MeasureKind":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ValueError(f"unknown measure {text!r}") from None


def ratio3(kind: MeasureKind, a, b, c) -> Fraction:
    if kind is MeasureKind.DICE:
        den = len(a) + len(b) + len(c)
        return Fraction(3 * len(a & b & c), den) if den else ZERO
    if kind is MeasureKind.JACCARD:
        den = len(a | b | c)
        return Fraction(len(a & b & c), den) if den else ZERO
    if kind is MeasureKind.OVERLAP:
        den = min(len(a), len(b), len(c))
        return Fraction(len(a & b & c), den) if den else ZERO
    raise ValueError(f"unknown measure {kind!r}")


def ratio2(kind: MeasureKind, a, b) -> Fraction:
    if kind is MeasureKind.DICE:
        den = len(a) + len(b)
        return Fraction(2 * len(a & b), den) if den else ZERO
    if kind is MeasureKind.JACCARD:
        den = len(a | b)
        return Fraction(len(a & b), den) if den else ZERO
    if kind is MeasureKind.OVERLAP:
        den = min(len(a), len(b))
        return Fraction(len(a & b), den) if den else ZERO
    raise ValueError(f"unknown measure {kind!r}")


def dice3(a, b, c) -> float:
    return float(ratio3(MeasureKind.DICE, a, b, c))


def jaccard3(a, b, c) -> float:
    return float(ratio3(MeasureKind.JACCARD, a, b, c))


def overlap3(a, b, c) -> float:
    return float(ratio3(MeasureKind.OVERLAP, a, b, c))


def score3(kind: MeasureKind, a, b, c) -> float:
    return float(ratio3(kind, a, b, c))


def score2(kind: MeasureKind, a, b) -> float:
    return float(ratio2(kind, a, b))


def lesk_count(gloss, context) -> int:
    """Number of stems a gloss shares with the context bag."""
    return len(gloss & context)
