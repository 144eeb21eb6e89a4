"""Property suites over finite grids, with witnesses for every failure.

Each suite checks one identity exhaustively over its grid and reports the
number of cases checked plus the first counterexample found. The spectrum
suites take ``(knot, multiplicity)`` pairs so they can run either knot by
knot or over the prefix classes of :func:`cablecalc.grid.admissible_classes`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import gcd
from typing import Callable, Iterable

from .cablespace import (
    CableSpace,
    cover_euler_cable,
    horizontal_equivalent,
    integral_propagates,
    meridional_iff,
    planar_a_class,
    planar_b_class,
    planar_b_meridional_witnesses,
    vertical_class,
)
from .grid import GridSpec, admissible_classes, enumerate_knots
from .slopes import (
    BasisChange,
    apply_basis_change,
    delta,
    make_fill_basis_change,
    normalize,
)
from .spectrum import (
    IteratedTorusKnot,
    bridge_spectrum,
    closed_form_b0,
    gaps,
    h_genus,
    index_n_entry,
    naive_upper_spectrum,
    tunnel_number,
)
from .splittings import (
    SplittingLedger,
    amalgamation_genus,
    chi_assembly,
    segment_configurations,
    segment_genus,
    untelescoped_lower_bound,
)

__all__ = ["SuiteResult", "VerifyConfig", "FAULTS", "run_all", "spectrum_suites", "cablespace_suites"]

# Test-only faults, each flipping one sign inside a checked computation.
FAULTS = ("index-n-sign", "planar-b-sign")


@dataclass
class SuiteResult:
    module: str
    name: str
    checked: int = 0
    witness: str | None = None
    note: str | None = None

    @property
    def passed(self) -> bool:
        return self.witness is None

    def check(self, ok: bool, witness: Callable[[], str], weight: int = 1) -> None:
        self.checked += weight
        if not ok and self.witness is None:
            self.witness = witness()

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.module}.{self.name}: {self.checked} cases"
        if self.witness is not None:
            text += f"; witness {self.witness}"
        if self.note:
            text += f" ({self.note})"
        return text

    def to_json(self) -> dict:
        return {
            "suite": f"{self.module}.{self.name}",
            "passed": self.passed,
            "checked": self.checked,
            "witness": self.witness,
            "note": self.note,
        }


@dataclass(frozen=True)
class VerifyConfig:
    grid: GridSpec = field(default_factory=lambda: GridSpec(p_max=10, q_max=4, depth_max=2))
    param_max: int = 20
    basis_max: int = 15
    fault: str | None = None
    use_classes: bool = False

    def __post_init__(self) -> None:
        if self.fault is not None and self.fault not in FAULTS:
            raise ValueError(f"unknown fault {self.fault!r}; expected one of {FAULTS}")


def slope_suites(cfg: VerifyConfig) -> list[SuiteResult]:
    r = cfg.basis_max
    span = range(-r, r + 1)
    slopes = sorted({normalize(a, b) for a in range(-6, 7) for b in range(0, 7) if (a, b) != (0, 0)},
                    key=lambda s: (s.num, s.den))

    fill_det = SuiteResult("slopes", "fill-basis-change-determinant")
    for u, v in product(range(-20, 21), repeat=2):
        m = make_fill_basis_change(u, v)
        fill_det.check(m.det == 1, lambda: f"u={u} v={v} det={m.det}")

    fill_formula = SuiteResult("slopes", "fill-basis-change-on-integral-slopes")
    for u, v, l in product(span, repeat=3):
        got = apply_basis_change(make_fill_basis_change(u, v), normalize(l, 1))
        want = normalize(1 - v * (u - l), u - l)
        fill_formula.check(got == want, lambda: f"u={u} v={v} l={l} got={got} want={want}")

    invariance = SuiteResult("slopes", "delta-invariant-under-basis-change")
    matrices = [make_fill_basis_change(u, v) for u, v in product(range(-3, 4), repeat=2)]
    matrices += [BasisChange(0, 1, 1, 0), BasisChange(1, 0, 0, -1)]
    for m in matrices:
        images = [apply_basis_change(m, s) for s in slopes]
        for (s1, i1), (s2, i2) in product(zip(slopes, images), repeat=2):
            invariance.check(delta(i1, i2) == delta(s1, s2), lambda: f"m={m.entries} s1={s1} s2={s2}")

    zero_iff = SuiteResult("slopes", "delta-zero-iff-equal")
    for s1, s2 in product(slopes, repeat=2):
        zero_iff.check((delta(s1, s2) == 0) == (s1 == s2), lambda: f"s1={s1} s2={s2}")

    norm = SuiteResult("slopes", "normalize-idempotent-and-sign-stable")
    for a, b in product(range(-12, 13), repeat=2):
        if (a, b) == (0, 0):
            continue
        s = normalize(a, b)
        norm.check(normalize(s.num, s.den) == s and normalize(-a, -b) == s, lambda: f"({a},{b}) -> {s}")

    return [fill_det, fill_formula, invariance, zero_iff, norm]


def _cable_spaces(p_max: int, q_max: int) -> list[CableSpace]:
    return [CableSpace(p, q) for p in range(-p_max, p_max + 1) for q in range(2, q_max + 1) if gcd(p, q) == 1]


def cablespace_suites(p_max: int, q_max: int, param_max: int, fault: str | None = None,
                      meridional_p_min: int = 2) -> list[SuiteResult]:
    """Surface-class suites over cable spaces with |p| <= p_max and 2 <= q <= q_max.

    The planar-b meridional check runs only over |p| >= ``meridional_p_min``;
    pass 0 to run it over every cable space.
    """
    spaces = _cable_spaces(p_max, q_max)
    r = range(-param_max, param_max + 1)

    planar = SuiteResult("cablespace", "planar-classes-match-horizontal")
    for cs in spaces:
        # the fault evaluates 1 + kpq with the sign of p flipped
        b_space = CableSpace(-cs.p, cs.q) if fault == "planar-b-sign" else cs
        candidates = [planar_b_class(b_space, k) for k in r]
        candidates += [planar_a_class(cs, l, m) for l, m in product(r, repeat=2)
                       if abs(l * cs.q - m * cs.p) == 1]
        for cls in candidates:
            twin = horizontal_equivalent(cs, cls)
            ok = (twin is not None and twin.outer == cls.outer and twin.inner == cls.inner
                  and twin.euler == cls.euler == 2 - cls.boundary_count)
            planar.check(ok, lambda: f"C({cs.p},{cs.q}) {cls.kind.value} {dict(cls.params)} horizontal={twin and dict(twin.params)}")

    integral = SuiteResult("cablespace", "integral-outer-forces-integral-inner")
    meridional = SuiteResult("cablespace", "outer-meridional-iff-inner-meridional")
    for cs in spaces:
        for m, n in product(r, range(param_max + 1)):
            if gcd(m, n) != 1:
                continue
            integral.check(integral_propagates(cs, m, n), lambda: f"C({cs.p},{cs.q}) m={m} n={n}")
            meridional.check(meridional_iff(cs, m, n), lambda: f"C({cs.p},{cs.q}) m={m} n={n}")

    only_k0 = SuiteResult("cablespace", "planar-b-outer-1/n-only-when-meridional")
    skipped = []
    for cs in spaces:
        bad = planar_b_meridional_witnesses(cs, r)
        if abs(cs.p) < meridional_p_min:
            skipped.extend(f"C({cs.p},{cs.q}) k={k}" for k in bad)
            continue
        only_k0.check(not bad, lambda: f"C({cs.p},{cs.q}) k={bad}", weight=len(r))
    if skipped:
        only_k0.note = f"|p| < {meridional_p_min} excluded; there 1/n occurs at " + ", ".join(skipped)

    fibers = SuiteResult("cablespace", "vertical-slopes-are-fiber-slopes")
    for cs in spaces:
        v = vertical_class(cs)
        fibers.check(delta(v.outer.slope, cs.outer_fiber_slope) == 0 and v.inner.slope == cs.inner_fiber_slope
                     and v.euler == 0, lambda: f"C({cs.p},{cs.q})")

    cover = SuiteResult("cablespace", "cable-cover-euler-bound")
    for q in range(2, max(q_max, 6) + 1):
        for d in range(q, 12 * q + 1, q):
            chi = cover_euler_cable(q, d)
            cover.check(chi <= -2 * q + 1 < 0 and (chi == -2 * q + 1) == (d == q), lambda: f"q={q} d={d} chi={chi}")

    return [planar, integral, meridional, only_k0, fibers, cover]


def spectrum_suites(pairs: Iterable[tuple[IteratedTorusKnot, int]], fault: str | None = None,
                    lower_bounds: bool = True) -> list[SuiteResult]:
    """Spectrum identities over admissible knots, each counted with its multiplicity."""
    naive = SuiteResult("spectrum", "naive-upper-bound-dominates")
    gap = SuiteResult("spectrum", "gap-at-every-index-1-to-n+1")
    zero = SuiteResult("spectrum", "first-zero-equals-tunnel-number-and-h-genus")
    b0 = SuiteResult("spectrum", "b0-equals-closed-form")
    index_n = SuiteResult("spectrum", "index-n-entry-from-slopes")
    stair = SuiteResult("spectrum", "staircase")
    lower = SuiteResult("splittings", "lower-bound-meets-spectrum")

    for knot, weight in pairs:
        s = bridge_spectrum(knot)
        e = s.entries
        n = knot.depth

        stair.check(all(e[g + 1] <= e[g] - 1 for g in range(len(e) - 1) if e[g] > 0),
                    lambda: f"{knot} spectrum={s}", weight)
        first = s.first_zero
        t = tunnel_number(knot)
        h = h_genus(knot)
        zero.check(first == t == h == n + 1, lambda: f"{knot} first_zero={first} t={t} h={h}", weight)
        cf = closed_form_b0(knot)
        b0.check(e[0] == cf, lambda: f"{knot} b0={e[0]} closed_form={cf}", weight)

        if n == 0:
            continue
        want = index_n_entry(knot)
        if fault == "index-n-sign":
            prev, cur = knot.levels[-2], knot.levels[-1]
            want = min(delta(normalize(cur.p, cur.q), normalize(-prev.p * prev.q, 1)), cur.q)
        index_n.check(s[n] == want, lambda: f"{knot} b_n={s[n]} expected={want}", weight)

        at = [r.index for r in gaps(s)]
        gap.check(at == list(range(1, n + 2)), lambda: f"{knot} spectrum={s} gaps at {at}", weight)

        u = naive_upper_spectrum(knot)
        ok = s.dominated_by(u) and all(s[g] == u[g] for g in range(n + 2) if g != n)
        naive.check(ok, lambda: f"{knot} spectrum={s} naive={u}", weight)

        if lower_bounds:
            lb = [untelescoped_lower_bound(knot, g) for g in range(n + 1)]
            lower.check(lb == list(e[: n + 1]), lambda: f"{knot} lower={lb} spectrum={s}", weight)

    out = [stair, zero, b0, index_n, gap, naive]
    return out + [lower] if lower_bounds else out


def splitting_suites(segment_max: int) -> list[SuiteResult]:
    amalg = SuiteResult("splittings", "amalgamated-tower-genus")
    for n in range(51):
        got = amalgamation_genus(SplittingLedger((2,) * (n + 1), (1,) * n))
        amalg.check(got == segment_genus(0, n) == n + 2, lambda: f"n={n} amalgamated={got}")

    chi = SuiteResult("splittings", "configuration-chi-meets-segment-genus")
    for l in range(segment_max + 1):
        for m in range(l + 1, segment_max + 1):
            target = 2 - 2 * segment_genus(l, m)
            for case, i, pieces in segment_configurations(l, m):
                a = chi_assembly(pieces, (l, m))
                chi.check(a.meets_bound and a.sum == target,
                          lambda: f"segment=({l},{m}) {case} i={i} sum={a.sum} target={target}")
    return [amalg, chi]


def run_all(cfg: VerifyConfig) -> list[SuiteResult]:
    grid = GridSpec(cfg.grid.p_max, cfg.grid.q_max, cfg.grid.depth_max, admissible_only=True)
    pairs = admissible_classes(grid) if cfg.use_classes else ((k, 1) for k in enumerate_knots(grid))
    return [
        *slope_suites(cfg),
        *cablespace_suites(cfg.grid.p_max, cfg.grid.q_max, cfg.param_max, cfg.fault),
        *spectrum_suites(pairs, cfg.fault),
        *splitting_suites(max(3, cfg.grid.depth_max + 1)),
    ]
