"""Incompressible surfaces in the cable space C_{p,q} and their boundary data.

The cable space is a solid torus minus a (p,q)-curve pushed into its
interior. Its outer boundary carries the solid torus basis; its inner
boundary carries the basis inherited from the torus knot. Every
incompressible, non-boundary-parallel surface is vertical or horizontal,
and horizontal ones are indexed by coprime (m, n) with n >= 0.

Boundary data is recorded per boundary torus as a component count plus the
slope shared by all components. A total homology class (a, b) splits into
gcd(|a|, |b|) parallel curves of slope (a/g)/(b/g).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .slopes import Slope, normalize

__all__ = [
    "CableSpace",
    "SurfaceKind",
    "BoundaryData",
    "SurfaceClass",
    "vertical_class",
    "horizontal_class",
    "planar_a_class",
    "planar_b_class",
    "integral_propagates",
    "meridional_iff",
    "planar_b_meridional_witnesses",
    "horizontal_equivalent",
    "cover_euler_torus_exterior",
    "cover_euler_cable",
    "min_euler_budget",
    "EULER_BUDGETS",
]


@dataclass(frozen=True, slots=True)
class CableSpace:
    p: int
    q: int

    def __post_init__(self) -> None:
        if self.q < 2:
            raise ValueError(f"cable space needs q >= 2, got q = {self.q}")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"cable space needs gcd(p, q) = 1, got gcd({self.p},{self.q}) = {gcd(self.p, self.q)}")

    @property
    def outer_fiber_slope(self) -> Slope:
        return normalize(self.p, self.q)

    @property
    def inner_fiber_slope(self) -> Slope:
        return normalize(self.p * self.q, 1)


class SurfaceKind(str, enum.Enum):
    VERTICAL = "vertical"
    HORIZONTAL = "horizontal"
    PLANAR_A = "planar-a"
    PLANAR_B = "planar-b"


@dataclass(frozen=True, slots=True)
class BoundaryData:
    count: int
    slope: Slope

    @classmethod
    def from_total(cls, num: int, den: int) -> BoundaryData:
        """Split the total class num[mu] + den[lambda] into parallel curves."""
        count = gcd(num, den)
        return cls(count, normalize(num // count, den // count))

    def to_json(self) -> dict:
        return {"count": self.count, "slope": self.slope.to_json()}


@dataclass(frozen=True, slots=True)
class SurfaceClass:
    kind: SurfaceKind
    params: tuple[tuple[str, int], ...]
    outer: BoundaryData
    inner: BoundaryData
    euler: int

    @property
    def boundary_count(self) -> int:
        return self.outer.count + self.inner.count

    @property
    def is_meridional(self) -> bool:
        return self.outer.slope.is_meridional or self.inner.slope.is_meridional

    def param(self, name: str) -> int:
        return dict(self.params)[name]

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "params": dict(self.params),
            "outer": self.outer.to_json(),
            "inner": self.inner.to_json(),
            "euler": self.euler,
        }


def _planar_euler(outer: BoundaryData, inner: BoundaryData) -> int:
    # connected planar surface: chi = 2 - (number of boundary circles)
    return 2 - outer.count - inner.count


def vertical_class(cs: CableSpace) -> SurfaceClass:
    return SurfaceClass(
        SurfaceKind.VERTICAL,
        (),
        BoundaryData(1, cs.outer_fiber_slope),
        BoundaryData(1, cs.inner_fiber_slope),
        0,
    )


def horizontal_class(cs: CableSpace, m: int, n: int) -> SurfaceClass:
    """Horizontal surface with total slopes (n+mp)/(qm) outside, q(n+mp)/m inside."""
    if n < 0:
        raise ValueError(f"horizontal class needs n >= 0, got n = {n}")
    if gcd(m, n) != 1:
        raise ValueError(f"horizontal class needs coprime (m, n), got ({m}, {n})")
    p, q = cs.p, cs.q
    top = n + m * p
    outer = BoundaryData.from_total(top, q * m)
    inner = BoundaryData.from_total(q * top, m)
    return SurfaceClass(SurfaceKind.HORIZONTAL, (("m", m), ("n", n)), outer, inner, n * (1 - q))


def planar_a_class(cs: CableSpace, l: int, m: int) -> SurfaceClass:
    if (l, m) == (0, 0):
        raise ValueError("planar-a class needs (l, m) != (0, 0)")
    # |lq - mp| = 1 also forces gcd(l, m) = 1
    if abs(l * cs.q - m * cs.p) != 1:
        raise ValueError(
            f"planar-a class needs Delta({l}/{m}, {cs.p}/{cs.q}) = 1, "
            f"got {abs(l * cs.q - m * cs.p)}"
        )
    outer = BoundaryData(cs.q, normalize(l, m))
    inner = BoundaryData(1, normalize(l * cs.q * cs.q, m))
    return SurfaceClass(SurfaceKind.PLANAR_A, (("l", l), ("m", m)), outer, inner, _planar_euler(outer, inner))


def planar_b_class(cs: CableSpace, k: int) -> SurfaceClass:
    p, q = cs.p, cs.q
    top = 1 + k * p * q
    outer = BoundaryData(1, normalize(top, k * q * q))
    inner = BoundaryData(q, normalize(top, k))
    return SurfaceClass(SurfaceKind.PLANAR_B, (("k", k),), outer, inner, _planar_euler(outer, inner))


def horizontal_equivalent(cs: CableSpace, cls: SurfaceClass) -> SurfaceClass | None:
    """Find the horizontal (m, n) class with the same total outer class, if any.

    Solves (n + m p, q m) = +-(count * a, count * b) for the outer boundary
    data of ``cls`` using only the horizontal formulas.
    """
    a = cls.outer.count * cls.outer.slope.num
    b = cls.outer.count * cls.outer.slope.den
    for sign in (1, -1):
        if (sign * b) % cs.q:
            continue
        m = sign * b // cs.q
        n = sign * a - m * cs.p
        if n >= 0 and gcd(m, n) == 1:
            return horizontal_class(cs, m, n)
    return None


def integral_propagates(cs: CableSpace, m: int, n: int) -> bool:
    """Integral outer components force integral inner components."""
    s = horizontal_class(cs, m, n)
    return (not s.outer.slope.is_integral) or s.inner.slope.is_integral


def meridional_iff(cs: CableSpace, m: int, n: int) -> bool:
    s = horizontal_class(cs, m, n)
    return s.outer.slope.is_meridional == s.inner.slope.is_meridional


def planar_b_meridional_witnesses(cs: CableSpace, ks) -> list[int]:
    """Values of k != 0 whose planar-b outer slope has the form 1/n.

    A planar surface whose single outer curve has slope 1/n is expected to be
    meridional, i.e. k = 0; any k returned here is a counterexample. Under
    den >= 0 normalization, 1/n with n < 0 is stored as -1/|n|.
    """
    out = []
    for k in ks:
        s = planar_b_class(cs, k)
        if abs(s.outer.slope.num) == 1 and k != 0:
            out.append(k)
    return out


def cover_euler_torus_exterior(p0: int, q0: int, d: int) -> int:
    """Euler characteristic of a degree-d horizontal cover of the base of E(K0) minus a regular fiber.

    The base is an annulus with cone points of orders |p0| and q0; removing
    the cone points leaves an orbifold of Euler characteristic -2.
    """
    a, b = abs(p0), q0
    if a < 2 or b < 2 or gcd(a, b) != 1:
        raise ValueError(f"torus knot exterior needs |p0|, q0 >= 2 coprime, got ({p0}, {q0})")
    if d <= 0 or d % a or d % b:
        raise ValueError(f"cover degree {d} must be a positive multiple of {a} and {b}")
    return -2 * d + d // a + d // b


def cover_euler_cable(q: int, d: int) -> int:
    if q < 2:
        raise ValueError(f"cable needs q >= 2, got {q}")
    if d <= 0 or d % q:
        raise ValueError(f"cover degree {d} must be a positive multiple of q = {q}")
    return -2 * d + d // q


# Certified upper bounds on chi(S) for a pseudohorizontal S, by configuration.
EULER_BUDGETS = {
    "torus-exterior-regular-fiber": -14,
    "torus-exterior-critical-fiber": -4,
    "cable-regular-fiber": -6,
    "cable-critical-fiber": -4,
    "adjacent-pair": -4,
}


def min_euler_budget(configuration: str) -> int:
    try:
        return EULER_BUDGETS[configuration]
    except KeyError:
        raise ValueError(
            f"unknown configuration {configuration!r}; expected one of {sorted(EULER_BUDGETS)}"
        ) from None
