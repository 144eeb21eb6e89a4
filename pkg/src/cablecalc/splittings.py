"""Genus and Euler characteristic bookkeeping for multiple splittings.

Nothing here builds a surface. A closed surface meeting the tower
C_l u ... u C_m is tracked as labelled pieces, one per Seifert piece (or
product region), each carrying the certified upper bound on its Euler
characteristic. Summing the pieces and comparing with -2(m-l)-2 replays the
lower bound g >= m-l+2 for the Heegaard genus of the segment.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .cablespace import min_euler_budget
from .spectrum import IteratedTorusKnot, _require_admissible

__all__ = [
    "SplittingLedger",
    "ChiPiece",
    "ChiAssembly",
    "amalgamation_genus",
    "segment_genus",
    "chi_assembly",
    "case1_configuration",
    "case2_configuration",
    "segment_configurations",
    "case2_planar_k_solutions",
    "forced_bridge_bound",
    "untelescoped_lower_bound",
]


@dataclass(frozen=True, slots=True)
class SplittingLedger:
    """Genera of the thick surfaces and of the thin surfaces between them."""

    thick: tuple[int, ...]
    thin: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "thick", tuple(self.thick))
        object.__setattr__(self, "thin", tuple(self.thin))

    def to_json(self) -> dict:
        return {"thick": list(self.thick), "thin": list(self.thin)}

    @classmethod
    def from_json(cls, obj: dict) -> SplittingLedger:
        return cls(tuple(obj["thick"]), tuple(obj.get("thin", ())))


def amalgamation_genus(ledger: SplittingLedger) -> int:
    if not ledger.thick:
        raise ValueError("a multiple splitting has at least one thick surface")
    if len(ledger.thin) != len(ledger.thick) - 1:
        raise ValueError(
            f"linear splitting needs one thin surface between consecutive thick ones: "
            f"{len(ledger.thick)} thick, {len(ledger.thin)} thin"
        )
    if any(g < 0 for g in (*ledger.thick, *ledger.thin)):
        raise ValueError("genera are nonnegative")
    genus = sum(ledger.thick) - sum(ledger.thin)
    if genus < 0:
        raise ValueError(f"amalgamation would have negative genus {genus}")
    return genus


def segment_genus(l: int, m: int) -> int:
    """Heegaard genus of C_l u ... u C_m, namely m - l + 2."""
    if l < 0 or l > m:
        raise ValueError(f"segment needs 0 <= l <= m, got l = {l}, m = {m}")
    return m - l + 2


@dataclass(frozen=True, slots=True)
class ChiPiece:
    label: str
    chi: int

    def to_json(self) -> dict:
        return {"label": self.label, "chi": self.chi}


@dataclass(frozen=True, slots=True)
class ChiAssembly:
    sum: int
    bound: int | None
    meets_bound: bool
    pieces: tuple[ChiPiece, ...]

    @property
    def genus_lower_bound(self) -> int:
        """Smallest g with 2 - 2g <= sum, for a closed surface."""
        return -(-(2 - self.sum) // 2)

    def to_json(self) -> dict:
        return {
            "sum": self.sum,
            "bound": self.bound,
            "meets_bound": self.meets_bound,
            "pieces": [p.to_json() for p in self.pieces],
        }


def chi_assembly(pieces: Iterable, segment: tuple[int, int] | None = None) -> ChiAssembly:
    """Sum the pieces and test them against -2(m-l)-2 for ``segment = (l, m)``.

    With no segment there is nothing to compare against and the bound is
    reported as None.
    """
    items = tuple(p if isinstance(p, ChiPiece) else ChiPiece(*p) for p in pieces)
    total = sum(p.chi for p in items)
    if segment is None:
        return ChiAssembly(total, None, True, items)
    l, m = segment
    segment_genus(l, m)
    bound = -2 * (m - l) - 2
    return ChiAssembly(total, bound, total <= bound, items)


_HORIZONTAL = -2  # separating horizontal surface: at least two pieces with chi <= -1
_VERTICAL = 0
_PRODUCT = -2  # tubed annuli in T x I


def _torus_exterior_active() -> int:
    return max(min_euler_budget("torus-exterior-regular-fiber"),
               min_euler_budget("torus-exterior-critical-fiber"))


def _cable_active() -> int:
    return max(min_euler_budget("cable-regular-fiber"), min_euler_budget("cable-critical-fiber"))


def case1_configuration(l: int, m: int, i: int) -> list[ChiPiece]:
    """Pieces when C_i carries the pseudohorizontal part of a strongly irreducible surface.

    Each piece takes the weakest bound over the subcases allowed for it, so
    the total is a bound valid in every subcase.
    """
    segment_genus(l, m)
    if not l <= i < m:
        raise ValueError(f"active piece C_{i} must satisfy l <= i < m for segment ({l}, {m})")
    if i == l and l != 0:
        raise ValueError("the active piece can be C_l only when l = 0")
    pieces: list[ChiPiece] = []
    if i == l:
        pieces.append(ChiPiece(f"C{i}:pseudohorizontal:torus-exterior", _torus_exterior_active()))
        rest = range(l + 1, m)
    elif i == l + 1:
        # C_l horizontal beside a general pseudohorizontal piece, or vertical beside the refined one
        pair = max(_HORIZONTAL + _cable_active(), _VERTICAL + min_euler_budget("cable-regular-fiber"))
        pieces.append(ChiPiece(f"C{l}+C{l + 1}:pseudohorizontal-pair", pair))
        rest = range(l + 2, m)
    else:
        pieces.append(ChiPiece(f"C{l}+C{l + 1}:adjacent-pair", min_euler_budget("adjacent-pair")))
        pieces.append(ChiPiece(f"C{i}:pseudohorizontal:cable", _cable_active()))
        rest = [j for j in range(l + 2, m) if j != i]
    pieces.extend(ChiPiece(f"C{j}:horizontal", _HORIZONTAL) for j in rest)
    pieces.append(ChiPiece(f"C{m}:vertical-annulus", _VERTICAL))
    return pieces


def case2_configuration(l: int, m: int, i: int) -> list[ChiPiece]:
    """Pieces when the active region is the product T_i x I, l+1 <= i <= m."""
    segment_genus(l, m)
    if not l + 1 <= i <= m:
        raise ValueError(f"active torus T_{i} must satisfy l+1 <= i <= m for segment ({l}, {m})")
    pieces = [ChiPiece(f"T{i}xI:tubed-annuli", _PRODUCT)]
    if i == l + 1:
        pieces.extend(ChiPiece(f"C{j}':horizontal", _HORIZONTAL) for j in range(l, m))
    else:
        pieces.append(ChiPiece(f"C{l}'+C{l + 1}':adjacent-pair", min_euler_budget("adjacent-pair")))
        pieces.extend(ChiPiece(f"C{j}':horizontal", _HORIZONTAL) for j in range(l + 2, m))
    pieces.append(ChiPiece(f"C{m}:vertical-annulus", _VERTICAL))
    return pieces


def segment_configurations(l: int, m: int) -> list[tuple[str, int, list[ChiPiece]]]:
    """Every active-region configuration for a segment with m > l, as (case, i, pieces)."""
    out = []
    for i in range(l, m):
        if i == l and l != 0:
            continue
        out.append(("case1", i, case1_configuration(l, m, i)))
    for i in range(l + 1, m + 1):
        out.append(("case2", i, case2_configuration(l, m, i)))
    return out


def case2_planar_k_solutions(knot: IteratedTorusKnot, level: int, ks: Iterable[int]) -> list[int]:
    """k with k q (p - c) in {0, -2} at cabling ``level``, c = p_{l} q_{l} q_{l+1}.

    A planar product-region piece needs such a k; admissibility leaves only k = 0.
    """
    q = knot.levels[level].q
    diff = knot.levels[level].p - knot.companion_fiber(level)
    return [k for k in ks if k * q * diff in (0, -2)]


def forced_bridge_bound(knot: IteratedTorusKnot, l: int, g: int) -> int:
    """Fewest bridges forced on a strongly irreducible genus-g surface for (V_l, K_n).

    V_l is the solid torus bounded by T_l (V_0 is the 3-sphere). The surface
    either restricts to a (g, b') surface for the companion with
    b >= q_n b', or has g > n - l, or sits at l = n-1, g = 1 with
    b >= |p_n - p_{n-1}q_{n-1}q_n|. Amalgamating with a minimal splitting of
    the outside of V_l gives the companion a genus g + l surface, so
    b' >= max(1, b_{g+l}(K_{n-1})). Returns 0 when no bound is forced.
    """
    _require_admissible(knot)
    n = knot.depth
    if not 0 <= l <= n - 1:
        raise ValueError(f"level l = {l} must satisfy 0 <= l <= n-1 = {n - 1}")
    if g < 0:
        raise ValueError(f"genus must be nonnegative, got {g}")
    if g > n - l:
        return 0
    q = knot.cables[-1].q
    forced = q * max(1, untelescoped_lower_bound(knot.parent, g + l))
    if (l, g) == (n - 1, 1):
        forced = min(forced, knot.p_star(n))
    return forced


def untelescoped_lower_bound(knot: IteratedTorusKnot, g: int) -> int:
    """Lower bound on b_g(K_n) from the strongly irreducible / untelescoped cases.

    A minimal genus-g surface is either strongly irreducible in the 3-sphere
    (l = 0) or untelescopes so that the piece meeting K_n is a genus
    g_d >= 1 surface in some V_l, l >= 1, with g >= g_d + l. The bound is the
    weakest of the bounds forced in these cases. Torus knots use
    min(|p0|, q0) at genus 0; every knot has b_g = 0 once g exceeds its
    depth.
    """
    _require_admissible(knot)
    n = knot.depth
    if g > n:
        return 0
    if n == 0:
        return min(abs(knot.base.p), knot.base.q)
    candidates = [forced_bridge_bound(knot, 0, g)]
    for l in range(1, n):
        for gd in range(1, g - l + 1):
            candidates.append(forced_bridge_bound(knot, l, gd))
    return min(candidates)
