from math import gcd

from hypothesis import strategies as st

from cablecalc import IteratedTorusKnot
from cablecalc.slopes import normalize

ints = st.integers(-40, 40)
slopes = st.tuples(ints, ints).filter(lambda t: t != (0, 0)).map(lambda t: normalize(*t))


@st.composite
def coprime_pair(draw, p_min=0, q_max=8):
    q = draw(st.integers(2, q_max))
    p = draw(st.integers(-60, 60).filter(lambda p: abs(p) >= p_min and gcd(p, q) == 1))
    return p, q


@st.composite
def admissible_knots(draw, max_depth=3):
    pairs = [draw(coprime_pair(p_min=2))]
    for _ in range(draw(st.integers(0, max_depth))):
        p0, q0 = pairs[-1]
        q = draw(st.integers(2, 6))
        p = draw(st.integers(-60, 60).filter(lambda p: gcd(p, q) == 1 and abs(p - p0 * q0 * q) > 1))
        pairs.append((p, q))
    return IteratedTorusKnot.from_pairs(*pairs)
