"""Walk through the (21,4)-cable of the trefoil and one further cable, step by step."""
from cablecalc import IteratedTorusKnot, bridge_spectrum, gaps, naive_upper_spectrum, tunnel_number
from cablecalc.slopes import delta, normalize
from cablecalc.splittings import forced_bridge_bound


def show(text: str) -> None:
    knot = IteratedTorusKnot.parse(text)
    s = bridge_spectrum(knot)
    print(f"K = {knot}")
    if knot.depth:
        prev, cur = knot.levels[-2], knot.levels[-1]
        fiber_in, fiber_out = normalize(cur.p, cur.q), normalize(prev.p * prev.q, 1)
        print(f"  fiber slopes on the last torus: {fiber_in} and {fiber_out}, Delta = {delta(fiber_in, fiber_out)}")
        print("  bounds at the top genus: " + ", ".join(
            f"l={l}: {forced_bridge_bound(knot, l, knot.depth - l)}" for l in range(knot.depth)))
    print(f"  spectrum {s}, naive upper bound {naive_upper_spectrum(knot)}")
    print(f"  gaps {[(g.index, g.order) for g in gaps(s)]}, tunnel number {tunnel_number(knot)}")


if __name__ == "__main__":
    for text in ("(3,2)", "(3,2),(21,4)", "(3,2),(21,4),(171,2)"):
        show(text)
