"""Exact slope calculus on a boundary torus.

A slope a/b is the class a[mu] + b[lambda] in the meridian-longitude basis.
Slopes are stored normalized: gcd(|a|, |b|) = 1, b >= 0, and the meridian is
always 1/0. Python integers are unbounded, so products of cabling parameters
never wrap around.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

__all__ = [
    "Slope",
    "BasisChange",
    "normalize",
    "delta",
    "make_fill_basis_change",
    "apply_basis_change",
    "MERIDIAN",
]

_SLOPE_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(-?\d+)\s*)?$")


@dataclass(frozen=True, slots=True)
class Slope:
    num: int
    den: int

    def __post_init__(self) -> None:
        if (self.num, self.den) == (0, 0):
            raise ValueError("0/0 is not a slope")
        if gcd(self.num, self.den) != 1 or self.den < 0 or (self.den == 0 and self.num != 1):
            raise ValueError(
                f"{self.num}/{self.den} is not normalized; build slopes with normalize()"
            )

    @property
    def is_integral(self) -> bool:
        return self.den == 1

    @property
    def is_meridional(self) -> bool:
        return self.den == 0

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def to_json(self) -> list[int]:
        return [self.num, self.den]

    @classmethod
    def from_json(cls, pair) -> Slope:
        num, den = pair
        return normalize(int(num), int(den))

    @classmethod
    def parse(cls, text: str) -> Slope:
        """Parse ``"a/b"`` or a bare integer ``"a"`` (read as a/1)."""
        match = _SLOPE_RE.match(text)
        if match is None:
            raise ValueError(f"cannot parse slope {text!r}")
        num = int(match.group(1))
        den = int(match.group(2)) if match.group(2) is not None else 1
        return normalize(num, den)


MERIDIAN = Slope(1, 0)


def normalize(num: int, den: int) -> Slope:
    """Return the normalized slope of the class num[mu] + den[lambda]."""
    num, den = int(num), int(den)
    if num == 0 and den == 0:
        raise ValueError("(0, 0) does not determine a slope")
    if den == 0:
        return MERIDIAN
    g = gcd(num, den)
    num, den = num // g, den // g
    if den < 0:
        num, den = -num, -den
    return Slope(num, den)


def delta(s1: Slope, s2: Slope) -> int:
    """Minimal geometric intersection number |ad - bc| of s1 = a/b, s2 = c/d."""
    return abs(s1.num * s2.den - s1.den * s2.num)


@dataclass(frozen=True, slots=True)
class BasisChange:
    """Integer matrix ((a, b), (c, d)) acting on column vectors (num, den)."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if self.det not in (1, -1):
            raise ValueError(f"basis change must be unimodular, det = {self.det}")

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def entries(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    def compose(self, other: BasisChange) -> BasisChange:
        """Matrix product ``self @ other`` (apply ``other`` first)."""
        return BasisChange(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    @classmethod
    def identity(cls) -> BasisChange:
        return cls(1, 0, 0, 1)


def make_fill_basis_change(u: int, v: int) -> BasisChange:
    """Change of basis after Dehn filling a cable space along slope u/1.

    Curves of slope u/1 and 1/0 become 1/0 and v/-1 in the filled cable
    space; the matrix is (v, 1 - uv; -1, u) and has determinant +1.
    """
    return BasisChange(v, 1 - u * v, -1, u)


def apply_basis_change(m: BasisChange, s: Slope) -> Slope:
    return normalize(m.a * s.num + m.b * s.den, m.c * s.num + m.d * s.den)
