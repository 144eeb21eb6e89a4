"""Which strictly decreasing sequences occur as spectra of grid knots?

Every spectrum of an admissible iterated torus knot has a gap at each index
1..n+1, so sequences with a step of exactly 1 can never occur in this
family. The probe lists, for each depth, the sequences with b0 <= B that do
occur and the gap-everywhere sequences that do not.
"""
import argparse
from itertools import combinations

from cablecalc import bridge_spectrum
from cablecalc.grid import GridSpec, admissible_classes


def gap_everywhere_sequences(depth: int, b0_max: int):
    """Decreasing (b0 > ... > bn > 0) with every step at least 2 and bn >= 2."""
    for tail in combinations(range(b0_max, 1, -1), depth + 1):
        if all(a - b >= 2 for a, b in zip(tail, tail[1:])):
            yield (*tail, 0)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p-max", type=int, default=30)
    ap.add_argument("--q-max", type=int, default=6)
    ap.add_argument("--depth", type=int, default=2)
    ap.add_argument("--b0-max", type=int, default=24)
    args = ap.parse_args()

    grid = GridSpec(args.p_max, args.q_max, args.depth, admissible_only=True)
    seen: dict[int, set] = {d: set() for d in range(args.depth + 1)}
    for rep, _ in admissible_classes(grid):
        s = bridge_spectrum(rep).entries
        if s[0] <= args.b0_max:
            seen[rep.depth].add(s)

    for depth in range(args.depth + 1):
        candidates = set(gap_everywhere_sequences(depth, args.b0_max))
        hit = sorted(candidates & seen[depth], reverse=True)
        missing = sorted(candidates - seen[depth], reverse=True)
        print(f"depth {depth}: {len(hit)} of {len(candidates)} gap-everywhere sequences with b0 <= {args.b0_max} occur")
        for s in missing[:20]:
            print(f"  absent: {s}")
        if len(missing) > 20:
            print(f"  ... {len(missing) - 20} more absent")


if __name__ == "__main__":
    main()
