import pytest
from hypothesis import given
from hypothesis import strategies as st

from cablecalc.slopes import (
    MERIDIAN,
    BasisChange,
    Slope,
    apply_basis_change,
    delta,
    make_fill_basis_change,
    normalize,
)
from strategies import ints, slopes


@pytest.mark.parametrize(
    "num, den, want",
    [(6, 4, (3, 2)), (-3, 0, (1, 0)), (21, 4, (21, 4)), (3, -4, (-3, 4)), (0, -7, (0, 1))],
)
def test_normalize_examples(num, den, want):
    assert normalize(num, den) == Slope(*want)


def test_zero_zero_rejected():
    with pytest.raises(ValueError):
        normalize(0, 0)
    with pytest.raises(ValueError):
        Slope(0, 0)


def test_unnormalized_construction_rejected():
    with pytest.raises(ValueError, match="normalized"):
        Slope(6, 4)
    with pytest.raises(ValueError):
        Slope(-1, 0)


def test_predicates_and_text():
    assert normalize(5, 1).is_integral
    assert MERIDIAN.is_meridional and str(MERIDIAN) == "1/0"
    assert Slope.parse(" -7 / 4 ") == Slope(-7, 4)
    assert Slope.parse("12") == Slope(12, 1)
    assert Slope.from_json([2, -4]) == Slope(-1, 2)
    with pytest.raises(ValueError):
        Slope.parse("1/2/3")


def test_delta_examples():
    assert delta(normalize(21, 4), normalize(6, 1)) == 3
    assert delta(normalize(3, 2), normalize(3, 2)) == 0
    assert delta(MERIDIAN, normalize(7, 5)) == 5


@given(slopes, slopes)
def test_delta_symmetric_and_zero_iff_equal(s1, s2):
    assert delta(s1, s2) == delta(s2, s1)
    assert (delta(s1, s2) == 0) == (s1 == s2)


@given(ints, ints)
def test_normalize_idempotent_and_sign_stable(a, b):
    if (a, b) == (0, 0):
        return
    s = normalize(a, b)
    assert normalize(s.num, s.den) == s == normalize(-a, -b)


@pytest.mark.parametrize("u, v, entries", [(2, 1, ((1, -1), (-1, 2))), (0, 0, ((0, 1), (-1, 0))), (5, -3, ((-3, 16), (-1, 5)))])
def test_fill_basis_change_examples(u, v, entries):
    m = make_fill_basis_change(u, v)
    assert m.entries == entries and m.det == 1


def test_fill_determinant_exhaustive():
    assert all(make_fill_basis_change(u, v).det == 1 for u in range(-20, 21) for v in range(-20, 21))


def test_apply_examples():
    assert apply_basis_change(make_fill_basis_change(2, 1), normalize(0, 1)) == Slope(-1, 2)
    assert apply_basis_change(make_fill_basis_change(3, 1), normalize(1, 1)) == Slope(-1, 2)
    s = normalize(17, 5)
    assert apply_basis_change(BasisChange.identity(), s) == s


def test_non_unimodular_rejected():
    with pytest.raises(ValueError, match="unimodular"):
        BasisChange(2, 0, 0, 1)


@given(st.integers(-9, 9), st.integers(-9, 9), slopes, slopes)
def test_delta_invariant_under_fill_change(u, v, s1, s2):
    m = make_fill_basis_change(u, v)
    assert delta(apply_basis_change(m, s1), apply_basis_change(m, s2)) == delta(s1, s2)


@given(st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9), slopes)
def test_compose_matches_sequential_application(u1, v1, u2, v2, s):
    a, b = make_fill_basis_change(u1, v1), make_fill_basis_change(u2, v2)
    assert apply_basis_change(a.compose(b), s) == apply_basis_change(a, apply_basis_change(b, s))


def test_large_products_stay_exact():
    big = 10**40 + 1
    assert delta(normalize(big, 1), normalize(big - 3, 1)) == 3
