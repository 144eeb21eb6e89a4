"""Finite parameter grids of iterated torus knots: enumeration, rows, search."""
from __future__ import annotations

import csv
import json
import os
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import islice
from math import gcd
from typing import Iterable, Iterator

from .spectrum import (
    BridgeSpectrum,
    CablingParams,
    GapReport,
    IteratedTorusKnot,
    bridge_spectrum,
    gaps,
    tunnel_number,
    validate,
)

__all__ = [
    "GridSpec",
    "SearchTarget",
    "base_pairs",
    "cable_pairs",
    "enumerate_knots",
    "knot_row",
    "compute_rows",
    "format_rows",
    "search",
    "worker_count",
    "admissible_classes",
]

CSV_FIELDS = ("knot", "depth", "admissible", "spectrum", "gaps", "tunnel_number")


@dataclass(frozen=True, slots=True)
class GridSpec:
    """All valid knots with |p_i| <= p_max, 2 <= q_i <= q_max and depth <= depth_max."""

    p_max: int = 10
    q_max: int = 4
    depth_max: int = 1
    admissible_only: bool = False

    def __post_init__(self) -> None:
        if self.p_max < 1:
            raise ValueError(f"p_max must be positive, got {self.p_max}")
        if self.q_max < 2:
            raise ValueError(f"q_max must be at least 2, got {self.q_max}")
        if self.depth_max < 0:
            raise ValueError(f"depth_max must be nonnegative, got {self.depth_max}")


def base_pairs(grid: GridSpec) -> list[CablingParams]:
    return [
        CablingParams(p, q)
        for p in range(-grid.p_max, grid.p_max + 1)
        for q in range(2, grid.q_max + 1)
        if abs(p) >= 2 and gcd(p, q) == 1
    ]


def cable_pairs(grid: GridSpec) -> list[CablingParams]:
    return [
        CablingParams(p, q)
        for p in range(-grid.p_max, grid.p_max + 1)
        for q in range(2, grid.q_max + 1)
        if gcd(p, q) == 1
    ]


def enumerate_knots(grid: GridSpec) -> Iterator[IteratedTorusKnot]:
    """Valid knots ordered by depth, then lexicographically by (p0, q0, p1, q1, ...).

    With ``admissible_only`` inadmissible prefixes are pruned, which is exact
    because admissibility is a per-level condition.
    """
    bases = base_pairs(grid)
    cables = cable_pairs(grid)

    def extend(knot: IteratedTorusKnot, remaining: int) -> Iterator[IteratedTorusKnot]:
        if remaining == 0:
            yield knot
            return
        for c in cables:
            child = IteratedTorusKnot(knot.base, (*knot.cables, c))
            if grid.admissible_only and child.p_star(child.depth) <= 1:
                continue
            yield from extend(child, remaining - 1)

    for depth in range(grid.depth_max + 1):
        for b in bases:
            yield from extend(IteratedTorusKnot(b), depth)


def knot_row(knot: IteratedTorusKnot) -> dict:
    report = validate(knot)
    row = {
        "knot": str(knot),
        "base": knot.base.to_json(),
        "cables": [c.to_json() for c in knot.cables],
        "depth": knot.depth,
        "admissible": report.admissible,
        "spectrum": None,
        "gaps": None,
        "tunnel_number": None,
    }
    if report.admissible:
        s = bridge_spectrum(knot)
        row["spectrum"] = s.to_json()
        row["gaps"] = [g.to_json() for g in gaps(s)]
        row["tunnel_number"] = tunnel_number(knot)
    return row


def worker_count() -> int:
    """Workers for grid evaluation, capped by CABLECALC_THREADS."""
    available = os.cpu_count() or 1
    cap = os.environ.get("CABLECALC_THREADS")
    if cap:
        try:
            available = min(available, max(1, int(cap)))
        except ValueError:
            raise ValueError(f"CABLECALC_THREADS must be an integer, got {cap!r}") from None
    return available


def _rows_for(knots: list[IteratedTorusKnot]) -> list[dict]:
    return [knot_row(k) for k in knots]


def _chunks(items: Iterable, size: int) -> Iterator[list]:
    it = iter(items)
    while chunk := list(islice(it, size)):
        yield chunk


def compute_rows(knots: Iterable[IteratedTorusKnot], workers: int | None = None) -> Iterator[dict]:
    """Rows in input order; chunks may be evaluated in worker processes."""
    workers = worker_count() if workers is None else workers
    if workers <= 1:
        yield from map(knot_row, knots)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map() yields in submission order, so output order is deterministic
        for rows in pool.map(_rows_for, _chunks(knots, 2048)):
            yield from rows


def _csv_row(row: dict) -> dict:
    def join(values, fmt=str):
        return "" if values is None else ";".join(fmt(v) for v in values)

    return {
        "knot": row["knot"],
        "depth": row["depth"],
        "admissible": str(row["admissible"]).lower(),
        "spectrum": join(row["spectrum"]),
        "gaps": join(row["gaps"], lambda g: f"{g['index']}:{g['order']}"),
        "tunnel_number": "" if row["tunnel_number"] is None else row["tunnel_number"],
    }


def format_rows(rows: Iterable[dict], fmt: str, out) -> int:
    """Write rows as ``csv`` or ``jsonl`` to the text stream ``out``; return the count."""
    count = 0
    if fmt == "csv":
        writer = csv.DictWriter(out, fieldnames=CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(_csv_row(row))
            count += 1
    elif fmt in ("jsonl", "json"):
        for row in rows:
            out.write(json.dumps(row, separators=(",", ":")) + "\n")
            count += 1
    else:
        raise ValueError(f"unknown row format {fmt!r}")
    return count


_GAP_RE = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


@dataclass(frozen=True, slots=True)
class SearchTarget:
    """Either an exact spectrum or an exact list of gaps to look for."""

    spectrum: BridgeSpectrum | None = None
    gap_vector: tuple[GapReport, ...] | None = None

    def __post_init__(self) -> None:
        if (self.spectrum is None) == (self.gap_vector is None):
            raise ValueError("a search target is either a spectrum or a gap vector")
        if self.gap_vector is not None:
            last = 0
            for gap in self.gap_vector:
                if gap.index <= last:
                    raise ValueError(f"gap indices must be positive and strictly increasing: {self.gap_vector}")
                if gap.order < 2:
                    raise ValueError(f"gap orders are at least 2, got {gap.order} at index {gap.index}")
                last = gap.index

    @classmethod
    def parse(cls, text: str) -> SearchTarget:
        """``spectrum=8,3,0``, ``gaps=(1,5),(2,3)``, or a bare spectrum ``8,3,0``."""
        key, sep, value = text.partition("=")
        if not sep:
            key, value = "spectrum", text
        key = key.strip().lower()
        value = value.strip()
        if key == "spectrum":
            body = value.strip("()[] ")
            try:
                entries = tuple(int(tok) for tok in body.split(","))
            except ValueError:
                raise ValueError(f"malformed spectrum target {value!r}") from None
            return cls(spectrum=BridgeSpectrum(entries))
        if key == "gaps":
            pairs = _GAP_RE.findall(value)
            if not pairs or _GAP_RE.sub("", value).replace(",", "").strip():
                raise ValueError(f"malformed gap target {value!r}")
            return cls(gap_vector=tuple(GapReport(int(i), int(o)) for i, o in pairs))
        raise ValueError(f"unknown target kind {key!r}; use spectrum=... or gaps=...")

    def matches(self, s: BridgeSpectrum) -> bool:
        if self.spectrum is not None:
            return s == self.spectrum
        return tuple(gaps(s)) == self.gap_vector


def search(grid: GridSpec, target: SearchTarget) -> list[IteratedTorusKnot]:
    """Admissible grid knots whose spectrum or gap list equals the target."""
    admissible = GridSpec(grid.p_max, grid.q_max, grid.depth_max, admissible_only=True)
    return [k for k in enumerate_knots(admissible) if target.matches(bridge_spectrum(k))]


def admissible_classes(grid: GridSpec) -> Iterator[tuple[IteratedTorusKnot, int]]:
    """Representatives of the admissible grid knots, one per prefix class, with multiplicities.

    Two admissible knots of equal depth n share a class when they have the
    same last cable and their companions K_{n-1} agree in spectrum and
    companion key. The companion key is p_{n-1} q_{n-1}, except that all
    values with 2|p_{n-1} q_{n-1}| >= p_max + q_max share one key: for
    those, every grid cable (p, q) has |p - p_{n-1} q_{n-1} q| >= q. Classes
    at depth n are grown from classes at depth n-1, so the multiplicities
    add up to the number of admissible grid knots.
    """
    bases = base_pairs(grid)
    cables = cable_pairs(grid)
    far = grid.p_max + grid.q_max

    def companion_key(c: int) -> int | None:
        return None if 2 * abs(c) >= far else c

    level: dict[tuple, list] = {}
    for b in bases:
        knot = IteratedTorusKnot(b)
        yield knot, 1
        key = (bridge_spectrum(knot).entries, companion_key(b.p * b.q))
        level.setdefault(key, [knot, 0])[1] += 1
    for depth in range(1, grid.depth_max + 1):
        nxt: dict[tuple, list] = {}
        for rep, count in level.values():
            for c in cables:
                child = IteratedTorusKnot(rep.base, (*rep.cables, c))
                if child.p_star(depth) <= 1:
                    continue
                yield child, count
                if depth < grid.depth_max:
                    key = (bridge_spectrum(child).entries, companion_key(c.p * c.q))
                    nxt.setdefault(key, [child, 0])[1] += count
        level = nxt
