import pytest
from hypothesis import given
from hypothesis import strategies as st

from cablecalc.spectrum import InadmissibleKnotError, IteratedTorusKnot, bridge_spectrum
from cablecalc.splittings import (
    ChiPiece,
    SplittingLedger,
    amalgamation_genus,
    case1_configuration,
    case2_configuration,
    case2_planar_k_solutions,
    chi_assembly,
    forced_bridge_bound,
    segment_configurations,
    segment_genus,
    untelescoped_lower_bound,
)
from strategies import admissible_knots

K = IteratedTorusKnot.parse


@pytest.mark.parametrize("thick, thin, want", [((2, 2), (1,), 3), ((5,), (), 5), ((2, 2, 2), (1, 1), 4)])
def test_amalgamation_examples(thick, thin, want):
    assert amalgamation_genus(SplittingLedger(thick, thin)) == want


@pytest.mark.parametrize("thick, thin", [((), ()), ((2, 2), ()), ((1,), (1,)), ((1, 1), (3,)), ((2, -1), (0,))])
def test_amalgamation_rejects(thick, thin):
    with pytest.raises(ValueError):
        amalgamation_genus(SplittingLedger(thick, thin))


def test_ledger_json_round_trip():
    ledger = SplittingLedger([2, 2, 2], [1, 1])
    assert SplittingLedger.from_json(ledger.to_json()) == ledger


def test_tower_genus():
    for n in range(51):
        assert amalgamation_genus(SplittingLedger((2,) * (n + 1), (1,) * n)) == segment_genus(0, n) == n + 2


def test_segment_genus():
    assert segment_genus(0, 4) == 6
    assert segment_genus(3, 3) == 2
    assert segment_genus(1, 3) == 4
    with pytest.raises(ValueError):
        segment_genus(2, 1)


def test_chi_assembly_examples():
    a = chi_assembly([("a", -4), ("b", -2), ("c", 0)], segment=(1, 3))
    assert (a.sum, a.bound, a.meets_bound) == (-6, -6, True)
    assert a.genus_lower_bound == 4
    assert chi_assembly([ChiPiece("torus-exterior", -14)]).sum == -14
    empty = chi_assembly([])
    assert (empty.sum, empty.bound, empty.meets_bound, empty.pieces) == (0, None, True, ())
    assert chi_assembly([("x", -2)], segment=(0, 2)).meets_bound is False


def test_chi_assembly_json():
    obj = chi_assembly([("a", -4)], segment=(0, 1)).to_json()
    assert obj == {"sum": -4, "bound": -4, "meets_bound": True, "pieces": [{"label": "a", "chi": -4}]}


def test_configurations_match_segment_genus():
    for l in range(4):
        for m in range(l + 1, 8):
            configs = segment_configurations(l, m)
            assert configs
            for case, i, pieces in configs:
                a = chi_assembly(pieces, (l, m))
                assert a.sum == -2 * (m - l) - 2 == 2 - 2 * segment_genus(l, m), (case, l, m, i)
                assert a.genus_lower_bound == segment_genus(l, m)


def test_configuration_index_checks():
    with pytest.raises(ValueError):
        case1_configuration(1, 3, 1)
    with pytest.raises(ValueError):
        case1_configuration(0, 2, 2)
    with pytest.raises(ValueError):
        case2_configuration(0, 2, 0)


def test_labels_name_their_source():
    labels = [p.label for p in case1_configuration(0, 3, 2)]
    assert labels == ["C0+C1:adjacent-pair", "C2:pseudohorizontal:cable", "C3:vertical-annulus"]


@given(admissible_knots(max_depth=3), st.lists(st.integers(-50, 50), max_size=20))
def test_case2_only_k0(knot, ks):
    for level in range(1, knot.depth + 1):
        assert set(case2_planar_k_solutions(knot, level, [0, *ks])) == {0}


def test_forced_bridge_bound_examples():
    k1, k2 = K("(3,2),(21,4)"), K("(3,2),(21,4),(171,2)")
    assert forced_bridge_bound(k1, 0, 1) == 3
    assert forced_bridge_bound(k2, 1, 1) == 2
    assert forced_bridge_bound(k2, 1, 2) == 0
    assert forced_bridge_bound(k2, 0, 3) == 0
    with pytest.raises(ValueError):
        forced_bridge_bound(k2, 2, 1)
    with pytest.raises(InadmissibleKnotError):
        forced_bridge_bound(K("(3,2),(25,4)"), 0, 1)


@given(admissible_knots(max_depth=3))
def test_lower_bound_meets_spectrum(knot):
    s = bridge_spectrum(knot)
    assert [untelescoped_lower_bound(knot, g) for g in range(knot.depth + 3)] == [s[g] for g in range(knot.depth + 3)]
