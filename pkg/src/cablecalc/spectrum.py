"""Iterated torus knots and their bridge spectra.

An iterated torus knot K_n = ((p0,q0),...,(pn,qn)) starts from the
(p0,q0)-torus knot and takes the (pi,qi)-cable at each later level. The
spectrum recursion only applies when every level is admissible, i.e.

    |p_i - p_{i-1} q_{i-1} q_i| > 1,

so adjacent regular fibers meet more than once on the companion torus.
Operations that rely on it refuse inadmissible knots instead of guessing.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from math import gcd, prod
from typing import Iterator

from .slopes import delta, normalize

__all__ = [
    "CablingParams",
    "IteratedTorusKnot",
    "Violation",
    "ValidationReport",
    "BridgeSpectrum",
    "GapReport",
    "KnotParseError",
    "InvalidKnotError",
    "InadmissibleKnotError",
    "validate",
    "bridge_spectrum",
    "closed_form_b0",
    "gaps",
    "tunnel_number",
    "h_genus",
    "naive_upper_spectrum",
    "index_n_entry",
    "spectrum_report",
]


class KnotParseError(ValueError):
    def __init__(self, message: str, token: str):
        super().__init__(message)
        self.token = token


class InvalidKnotError(ValueError):
    def __init__(self, report: ValidationReport):
        super().__init__("invalid knot: " + "; ".join(v.message for v in report.violations))
        self.report = report


class InadmissibleKnotError(ValueError):
    def __init__(self, report: ValidationReport):
        super().__init__("; ".join(v.message for v in report.violations))
        self.report = report


@dataclass(frozen=True, slots=True)
class CablingParams:
    p: int
    q: int

    def to_json(self) -> list[int]:
        return [self.p, self.q]

    def __str__(self) -> str:
        return f"({self.p},{self.q})"


_PAIR_RE = re.compile(r"\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)")


def _token_at(text: str, pos: int) -> str:
    rest = text[pos:]
    if not rest:
        return "<end of input>"
    end = rest.find(")")
    return rest[: end + 1] if end >= 0 else rest


@dataclass(frozen=True, slots=True)
class IteratedTorusKnot:
    base: CablingParams
    cables: tuple[CablingParams, ...] = ()

    @classmethod
    def from_pairs(cls, *pairs: tuple[int, int]) -> IteratedTorusKnot:
        if not pairs:
            raise ValueError("an iterated torus knot needs at least the base pair")
        levels = [CablingParams(int(p), int(q)) for p, q in pairs]
        return cls(levels[0], tuple(levels[1:]))

    @property
    def depth(self) -> int:
        """Number of cabling levels above the base torus knot."""
        return len(self.cables)

    @property
    def levels(self) -> tuple[CablingParams, ...]:
        return (self.base, *self.cables)

    @property
    def parent(self) -> IteratedTorusKnot:
        if not self.cables:
            raise ValueError("a torus knot has no companion in this family")
        return IteratedTorusKnot(self.base, self.cables[:-1])

    def cable(self, p: int, q: int) -> IteratedTorusKnot:
        return IteratedTorusKnot(self.base, (*self.cables, CablingParams(p, q)))

    def companion_fiber(self, i: int) -> int:
        """p_{i-1} q_{i-1} q_i: the companion's fiber slope on T_i, scaled by q_i."""
        prev, cur = self.levels[i - 1], self.levels[i]
        return prev.p * prev.q * cur.q

    def p_star(self, i: int) -> int:
        """|p_i - p_{i-1} q_{i-1} q_i| for 1 <= i <= depth."""
        if not 1 <= i <= self.depth:
            raise ValueError(f"level {i} out of range 1..{self.depth}")
        return abs(self.levels[i].p - self.companion_fiber(i))

    def to_json(self) -> dict:
        return {"base": self.base.to_json(), "cables": [c.to_json() for c in self.cables]}

    @classmethod
    def from_json(cls, obj) -> IteratedTorusKnot:
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            base = obj["base"]
            cables = obj.get("cables", [])
            return cls.from_pairs(tuple(base), *(tuple(c) for c in cables))
        except (KeyError, TypeError, ValueError) as exc:
            raise KnotParseError(f"malformed knot descriptor: {exc}", json.dumps(obj)) from None

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.levels)

    @classmethod
    def parse(cls, text: str) -> IteratedTorusKnot:
        """Parse ``"(p0,q0),(p1,q1),..."`` or a JSON descriptor."""
        stripped = text.strip()
        if stripped.startswith("{"):
            try:
                return cls.from_json(json.loads(stripped))
            except json.JSONDecodeError as exc:
                raise KnotParseError(f"malformed JSON descriptor: {exc.msg}", stripped[exc.pos:exc.pos + 12]) from None
        pairs = []
        pos = 0
        while True:
            while pos < len(stripped) and stripped[pos].isspace():
                pos += 1
            match = _PAIR_RE.match(stripped, pos)
            if match is None:
                raise KnotParseError(
                    f"cannot parse knot descriptor at token {_token_at(stripped, pos)!r}",
                    _token_at(stripped, pos),
                )
            pairs.append((int(match.group(1)), int(match.group(2))))
            pos = match.end()
            while pos < len(stripped) and stripped[pos].isspace():
                pos += 1
            if pos == len(stripped):
                break
            if stripped[pos] != ",":
                raise KnotParseError(
                    f"expected ',' between pairs, found {_token_at(stripped, pos)!r}",
                    _token_at(stripped, pos),
                )
            pos += 1
        return cls.from_pairs(*pairs)


@dataclass(frozen=True, slots=True)
class Violation:
    level: int
    rule: str
    message: str


@dataclass(frozen=True, slots=True)
class ValidationReport:
    valid: bool
    admissible: bool
    violations: tuple[Violation, ...] = ()

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "admissible": self.admissible,
            "violations": [{"level": v.level, "rule": v.rule, "message": v.message} for v in self.violations],
        }


def validate(knot: IteratedTorusKnot) -> ValidationReport:
    violations = []
    if abs(knot.base.p) < 2:
        violations.append(Violation(0, "nontrivial-base", f"torus knot needs |p0| >= 2, got p0 = {knot.base.p}"))
    for i, c in enumerate(knot.levels):
        if c.q < 2:
            violations.append(Violation(i, "q>=2", f"level {i}: q = {c.q} < 2"))
        if gcd(c.p, c.q) != 1:
            violations.append(Violation(i, "coprime", f"level {i}: gcd({c.p},{c.q}) = {gcd(c.p, c.q)}"))
    valid = not violations
    prev = knot.base
    for i, cur in enumerate(knot.cables, start=1):
        c = prev.p * prev.q * cur.q
        ps = abs(cur.p - c)
        if ps <= 1:
            shown = f"({c})" if c < 0 else str(c)
            violations.append(Violation(
                i, "admissible", f"not admissible at level {i}: |{cur.p} - {shown}| = {ps}"
            ))
        prev = cur
    admissible = valid and not violations
    return ValidationReport(valid, admissible, tuple(violations))


def _require_valid(knot: IteratedTorusKnot) -> ValidationReport:
    report = validate(knot)
    if not report.valid:
        raise InvalidKnotError(report)
    return report


def _require_admissible(knot: IteratedTorusKnot) -> None:
    report = _require_valid(knot)
    if not report.admissible:
        raise InadmissibleKnotError(report)


@dataclass(frozen=True, slots=True)
class GapReport:
    index: int
    order: int

    def to_json(self) -> dict:
        return {"index": self.index, "order": self.order}


@dataclass(frozen=True)
class BridgeSpectrum:
    """Genus-g bridge numbers (b0, b1, ...), stored through the first zero.

    Indexing past the stored entries returns 0, so spectra of different
    lengths compare as zero-extended sequences.
    """

    entries: tuple[int, ...] = field(default=(0,))

    def __post_init__(self) -> None:
        ent = tuple(int(b) for b in self.entries)
        if any(b < 0 for b in ent):
            raise ValueError(f"bridge numbers are nonnegative: {ent}")
        if 0 in ent:
            first = ent.index(0)
            if any(ent[first:]):
                raise ValueError(f"entries after the first zero must vanish: {ent}")
            ent = ent[: first + 1]
        else:
            ent = (*ent, 0)
        for g in range(len(ent) - 1):
            if ent[g + 1] > ent[g] - 1:
                raise ValueError(f"b_{g + 1} = {ent[g + 1]} exceeds b_{g} - 1 = {ent[g] - 1}")
        object.__setattr__(self, "entries", ent)

    def __getitem__(self, g: int) -> int:
        if g < 0:
            raise IndexError("genus index must be nonnegative")
        return self.entries[g] if g < len(self.entries) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    @property
    def first_zero(self) -> int:
        return len(self.entries) - 1

    def dominated_by(self, other: BridgeSpectrum) -> bool:
        n = max(len(self.entries), len(other.entries))
        return all(self[g] <= other[g] for g in range(n))

    def to_json(self) -> list[int]:
        return list(self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"


def bridge_spectrum(knot: IteratedTorusKnot) -> BridgeSpectrum:
    """b(K_n) = q_n b(K_{n-1}) + min(|p_n - p_{n-1}q_{n-1}q_n|, q_n) e_n."""
    _require_admissible(knot)
    prev = knot.base
    entries = [min(abs(prev.p), prev.q)]
    for cur in knot.cables:
        q = cur.q
        entries = [q * b for b in entries]
        entries.append(min(abs(cur.p - prev.p * prev.q * q), q))
        prev = cur
    entries.append(0)
    return BridgeSpectrum(tuple(entries))


def closed_form_b0(knot: IteratedTorusKnot) -> int:
    """Bridge number as min(|p0|, q0) times the product of the cable indices."""
    _require_valid(knot)
    return min(abs(knot.base.p), knot.base.q) * prod(c.q for c in knot.cables)


def index_n_entry(knot: IteratedTorusKnot) -> int:
    """min(Delta(p_n/q_n, p_{n-1}q_{n-1}/1), q_n), computed through slopes."""
    if knot.depth == 0:
        raise ValueError("the index-n formula needs at least one cable")
    prev, cur = knot.levels[-2], knot.levels[-1]
    return min(delta(normalize(cur.p, cur.q), normalize(prev.p * prev.q, 1)), cur.q)


def gaps(s: BridgeSpectrum) -> list[GapReport]:
    e = s.entries
    return [GapReport(g, e[g - 1] - e[g]) for g in range(1, len(e)) if e[g] < e[g - 1] - 1]


def tunnel_number(knot: IteratedTorusKnot) -> int:
    _require_admissible(knot)
    return knot.depth + 1


def h_genus(knot: IteratedTorusKnot) -> int:
    """Smallest g with b_g = 0, read off the spectrum."""
    return bridge_spectrum(knot).first_zero


def _staircase(entries: list[int]) -> list[int]:
    out = list(entries)
    for g in range(1, len(out)):
        out[g] = max(0, min(out[g], out[g - 1] - 1))
    return out


def naive_upper_spectrum(knot: IteratedTorusKnot) -> BridgeSpectrum:
    """Upper bound from cabling minimal surfaces of the companion.

    Each trivial arc of K_{n-1} is replaced by q_n arcs, so
    b_g(K_n) <= q_n b_g(K_{n-1}) for g < n, and perturbing a genus-n surface
    containing K_{n-1} gives b_n(K_n) <= q_n. The companion's exact spectrum
    is used when it is admissible, its own naive bound otherwise.
    """
    _require_valid(knot)
    if knot.depth == 0:
        return BridgeSpectrum((min(abs(knot.base.p), knot.base.q), 0))
    parent = knot.parent
    upper = bridge_spectrum(parent) if validate(parent).admissible else naive_upper_spectrum(parent)
    q = knot.cables[-1].q
    n = knot.depth
    entries = [q * upper[g] for g in range(n)] + [q, 0]
    return BridgeSpectrum(tuple(_staircase(entries)))


def spectrum_report(knot: IteratedTorusKnot) -> dict:
    """The spectrum JSON object for an admissible knot."""
    s = bridge_spectrum(knot)
    return {
        "spectrum": s.to_json(),
        "gaps": [g.to_json() for g in gaps(s)],
        "tunnel_number": tunnel_number(knot),
        "h_genus": h_genus(knot),
        "admissible": True,
    }
