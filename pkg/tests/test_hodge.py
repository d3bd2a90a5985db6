from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from wpstwist.errors import NegativeHodge, NonIntegralGenus, UnsupportedShape, ValidationError
from wpstwist.hodge import (
    ci_curve_genus,
    conifold_euler_shift,
    conifold_transition,
    cy3_hodge,
    fourfold_transition_report,
    geometric_genus,
    jordan_totient2,
    orbifold_euler,
)
from wpstwist.reference import K3_FIBERED_ROWS, LARGE_CHI_ROWS
from wpstwist.weights import realize, weighted_bezout


def _naive_chi(ws, d):
    """Unsimplified double sum over all pairs (l, r) in (Z/d)^2."""
    total = Fraction(0)
    for l in range(d):
        for r in range(d):
            term = Fraction(1)
            for w in ws:
                if (l * w) % d == 0 and (r * w) % d == 0:
                    term *= 1 - Fraction(d, w)
            total += term
    return total / d


@pytest.mark.parametrize(
    "ws,chi",
    [
        ((1, 1, 1, 1, 1), -200),
        ((1, 1, 1, 1, 2), -204),
        ((1, 1, 1, 1, 4), -296),
        ((1, 1, 1, 2, 5), -288),
        ((1, 1, 2, 2, 2), -168),
        ((1, 1, 2, 2, 6), -252),
        ((1, 1, 1, 6, 9), -540),
    ],
)
def test_known_euler_numbers(ws, chi):
    assert orbifold_euler(ws, sum(ws)) == chi
    assert _naive_chi(ws, sum(ws)) == chi


cy_weights = st.lists(st.integers(1, 6), min_size=5, max_size=5).filter(
    lambda ws: all(sum(ws) % w == 0 or any((sum(ws) - v) % w == 0 for v in ws) for w in ws)
)


@settings(max_examples=40, deadline=None)
@given(cy_weights)
def test_grouped_sum_matches_naive(ws):
    d = sum(ws)
    if realize(ws, d) is None:
        return
    assert orbifold_euler(ws, d) == _naive_chi(ws, d)


def test_jordan_totient():
    for n in range(1, 40):
        brute = sum(1 for a in range(n) for b in range(n) if gcd(gcd(a, b), n) == 1)
        assert jordan_totient2(n) == brute


def test_orbifold_euler_rejects():
    with pytest.raises(ValidationError):
        orbifold_euler((1, 1, 1, 1, 1), 6)
    with pytest.raises(UnsupportedShape):
        orbifold_euler((1, 1, 3, 4, 6), 15)


@pytest.mark.parametrize("row", K3_FIBERED_ROWS, ids=lambda r: str(r[:3]))
def test_k3_fibered_chi(row):
    _base, _fiber, _ell, image, degree, chi = row
    assert orbifold_euler(image, degree) == chi


@pytest.mark.parametrize("row", LARGE_CHI_ROWS, ids=lambda r: str(r[0]))
def test_large_chi_rows(row):
    _base, image, degree, chi, h11 = row
    assert orbifold_euler(image, degree, check=False) == chi
    pair = cy3_hodge(h11, chi)
    assert pair.euler == chi
    assert pair.h21 == h11 - chi // 2


def test_fibration_cross_check_for_2_1_1_rows():
    # N = 2l fibers with Euler number 24 - Milnor number of the Fermat fiber
    from wpstwist.fibration import fibration_euler

    expected = {(1, 1, 2, 4, 4): (12, 4), (1, 1, 4, 6, 12): (24, 9), (1, 1, 12, 28, 42): (84, 12)}
    for image, (N, e) in expected.items():
        assert orbifold_euler(image, sum(image)) == fibration_euler(N, e)


def test_cy3_hodge():
    assert cy3_hodge(491, 960).h21 == 11
    assert cy3_hodge(377, 720).h21 == 17
    with pytest.raises(NegativeHodge):
        cy3_hodge(1, 960)
    with pytest.raises(ValidationError):
        cy3_hodge(3, 7)


def test_conifold():
    pair = conifold_transition(5, 101, 32, 1)
    assert (pair.h11, pair.h21) == (6, 70)
    assert conifold_euler_shift(32) == 64
    before = 2 * (5 - 101)
    assert pair.euler - before == conifold_euler_shift(32)
    assert weighted_bezout((4, 4, 8, 8), (4, 4, 1, 1, 2)) == 32
    with pytest.raises(ValidationError):
        conifold_transition(5, 101, 1, 2)
    with pytest.raises(NegativeHodge):
        conifold_transition(0, 3, 10, 0)


def test_ci_curve_genus():
    assert ci_curve_genus(16, 16, (4, 2, 1, 1)) == 385
    assert ci_curve_genus(3, 3, (1, 1, 1, 1)) == 10
    assert ci_curve_genus(2, 2, (1, 1, 1, 1)) == 1
    with pytest.raises(NonIntegralGenus):
        ci_curve_genus(1, 1, (2, 3, 5, 7))
    with pytest.raises(ValidationError):
        ci_curve_genus(1, 1, (1, 1, 1))


def test_geometric_genus():
    assert geometric_genus((1, 1, 12, 44, 66), 132) == 9
    assert geometric_genus((1, 1, 1), 3) == 1
    assert geometric_genus((1, 1, 1), 6) == 10
    assert geometric_genus((1, 1, 1), 2) == 0


def test_fourfold_report():
    rep = fourfold_transition_report()
    assert rep.ok
    assert rep.fiber_image == "P(1,1,4,4,2)[12]"
    assert rep.ci_image == "P(1,1)xP(1,1,8,8,4,2)[[1,1],[8,16]]"
    assert rep.curve_genus == 385
    assert rep.nodes == 32
    assert rep.hypersurface == ((8, 8, 4, 2, 1, 1), 24)
    assert rep.complete_intersection == ((1, 8), (1, 16))


def test_fourfold_report_detects_wrong_expectation():
    rep = fourfold_transition_report(expected_fiber=((4, 4, 2, 2, 1), 13))
    assert not rep.fiber_ok and not rep.ok
