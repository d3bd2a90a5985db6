import warnings
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wpstwist.errors import EulerBoundWarning, UnsafeElimination, ValidationError
from wpstwist.fibration import (
    KODAIRA,
    alpha_necessary_condition,
    classify_elliptic_fibers,
    count_balanced_assignments,
    euler_bound_holds,
    extract_fiber,
    fibration_euler,
    k3_degenerate_fiber_euler,
    kodaira,
    milnor_number,
    picard_summands,
)
from wpstwist.reference import K3_FIBERED_ROWS, K3_ROWS
from wpstwist.twist import distinguished, fermat


@pytest.mark.parametrize("base,fiber,ell,image,degree,fibers", K3_ROWS, ids=lambda x: str(x))
def test_k3_rows_classified(base, fiber, ell, image, degree, fibers):
    report = classify_elliptic_fibers(distinguished(base, ell), fiber, ell)
    assert report.describe() == fibers
    assert report.alpha_sum == 2
    assert report.euler_sum == 24


def test_row_with_two_balanced_choices_is_flagged():
    report = classify_elliptic_fibers(distinguished((5, 2, 3), 6), (1, 2, 3), 6)
    assert report.ambiguous_balance
    assert not classify_elliptic_fibers(distinguished((2, 1, 1), 3), (1, 1, 1), 3).ambiguous_balance


def test_report_json_shape():
    d = classify_elliptic_fibers(distinguished((3, 1, 2), 4), (1, 1, 2), 4).as_dict()
    assert d["alpha_sum"] == "2/1"
    assert d["fibers"] == [{"type": "III", "count": 6}, {"type": "I0*", "count": 1}]
    assert d["euler_sum"] == 24


def test_kodaira_involution():
    for k in KODAIRA:
        assert k.dual().dual() == k
        assert k.alpha + k.dual().alpha == 1
        assert k.euler + k.dual().euler == 12
    assert kodaira("I0*").dual() == kodaira("I0*")
    with pytest.raises(ValidationError):
        kodaira("I5")


def test_alpha_condition():
    assert alpha_necessary_condition([(12, "II")]).is_cy_candidate
    check = alpha_necessary_condition([(132, Fraction(1, 66))])
    assert check.sum == 2 and check.is_cy_candidate
    empty = alpha_necessary_condition([])
    assert empty.sum == 0 and not empty.is_cy_candidate


def test_balanced_assignment_count():
    # only I0* closes a gap of 1/2
    assert count_balanced_assignments(Fraction(3, 2), 1) == 1
    assert count_balanced_assignments(Fraction(2), 0) == 1
    assert count_balanced_assignments(Fraction(1), 0) == 0


def test_picard_summands():
    assert picard_summands([(6, "IV")]) == "A2^6 ⊕ H"
    assert picard_summands([(4, "IV"), (1, "IV*")]) == "A2^4 ⊕ E6 ⊕ H"
    assert picard_summands([]) == "H"
    assert picard_summands([(12, "II")]) == "H"


def test_milnor():
    assert milnor_number((11, 3, 2)) == 20
    assert milnor_number((7, 3, 2)) == 12
    assert milnor_number((2,)) == 1
    assert k3_degenerate_fiber_euler((11, 3, 2)) == 4
    with pytest.raises(ValidationError):
        milnor_number((1, 3))


@given(st.lists(st.integers(2, 20), min_size=1, max_size=4), st.lists(st.integers(2, 20), min_size=1, max_size=4))
def test_milnor_multiplicative(a, b):
    assert milnor_number(a + b) == milnor_number(a) * milnor_number(b)


def test_fibration_euler_examples():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert fibration_euler(132, 4) == -2592
        assert fibration_euler(84, 12) == -960
        assert fibration_euler(0, 0) == 48


def test_fibration_euler_reports_violation():
    with pytest.warns(EulerBoundWarning):
        fibration_euler(2, 30)
    with pytest.raises(ValidationError):
        fibration_euler(-1, 4)


@given(st.integers(1, 300), st.integers(1, 23))
def test_fibration_euler_strictly_inside(N, e):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        value = fibration_euler(N, e)
    assert 48 - 24 * N < value < 48


def test_fibration_formula_matches_table_for_2_1_1_rows():
    hits = 0
    for base, fiber, ell, _image, degree, chi in K3_FIBERED_ROWS:
        if base != (2, 1, 1):
            continue
        # the base curve x0^l + x1^2l + x2^2l has 2l fixed points over P^1
        N = ell * base[0]
        # the degenerate fiber is the Fermat q(y1..y3) = 0 with exponents d / v_j
        exps = [ell * fiber[0] // v for v in fiber[1:]]
        e = 24 - milnor_number(exps)
        assert fibration_euler(N, e) == chi
        assert euler_bound_holds(chi, N // 2)
        hits += 1
    assert hits == 3


def test_euler_bound_examples():
    assert euler_bound_holds(-2592, 66)
    assert not euler_bound_holds(48, 7)
    assert not euler_bound_holds(-48 * 3 + 48, 3)


def test_extract_fiber_safe():
    x = distinguished((1, 2, 3, 6), 12)
    fib = extract_fiber(x, keep=0, eliminate=1, parameter=Fraction(1, 2))
    assert sorted(fib.weights) == [1, 1, 2]
    assert fib.degree == 4


def test_extract_fiber_quotient_rejected():
    x = distinguished((1, 2, 3, 6), 12)
    with pytest.raises(UnsafeElimination) as info:
        extract_fiber(x, keep=1, eliminate=0)
    assert str(info.value.result) == "P(1,1,1)[2]"


def test_extract_fiber_cover_rejected():
    x = fermat((2, 2, 1, 1, 6), 12)
    with pytest.raises(UnsafeElimination):
        extract_fiber(x, keep=1, eliminate=0)


def test_extract_fiber_bad_indices():
    x = fermat((1, 1, 1), 3)
    with pytest.raises(ValidationError):
        extract_fiber(x, 0, 0)
    with pytest.raises(ValidationError):
        extract_fiber(x, 0, 1, parameter=0)
