from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from wpstwist.errors import BadPartition, DegreeMismatch, ShapeError, WeightRelationViolated
from wpstwist.twist import (
    GeneralizedTwistInput,
    TwistInput,
    cy_conditions,
    distinguished,
    fermat,
    fermat_partition,
    generalized_twist,
    pullback_residual,
    quotient_check,
    twist,
    twist_weights,
    verify_generalized_identity,
    verify_twist_identity,
)
from wpstwist.weights import (
    WeightedHypersurface,
    WeightedPolynomial,
    WeightSystem,
    build_fermat,
    equivalent_up_to_rescaling,
    normalize,
)


def test_twist_k3_row():
    res = twist(fermat((2, 1, 1), 6), fermat((1, 1, 1), 3))
    assert str(res.image) == "P(1,1,2,2)[6]"
    assert str(res.image.polynomial) == "x0^6 + x1^6 - x2^3 - x3^3"
    assert res.quotient_order == 3 and res.generically_ell_to_one


def test_twist_weights_general():
    assert twist_weights((2, 1, 1), (4, 1, 1, 6)) == (4, 4, 2, 2, 12)


def test_twist_rejects_mismatched_exponents():
    with pytest.raises(DegreeMismatch):
        TwistInput.of(fermat((2, 1, 1), 6), fermat((1, 1, 2), 4))


def test_twist_rejects_mixed_x0():
    ws = WeightSystem((1, 1, 1))
    p = WeightedPolynomial.from_dict(ws, {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1, (1, 1, 1): 1})
    with pytest.raises(ShapeError):
        twist(WeightedHypersurface(ws, 3, p), fermat((1, 1, 1), 3))


def test_quotient_check():
    assert quotient_check(2, 4, 3).is_ell_to_one
    q = quotient_check(2, 4, 6)
    assert q.gcd == 2 and not q.is_ell_to_one


def test_distinguished_keeps_x0_pure():
    h = distinguished((11, 5, 6), 6)
    assert str(h.polynomial) == "x0^6 + x1^12*x2 + x2^11"


rationals = st.fractions(min_value=-3, max_value=3, max_denominator=7)


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from(
        [
            ((2, 1, 1), 6, (1, 2, 3), 6),
            ((11, 5, 6), 6, (1, 2, 3), 6),
            ((3, 1, 2), 4, (1, 1, 2), 4),
            ((2, 1, 1), 3, (4, 1, 1, 6), 3),
            ((4, 1, 1, 2), 3, (1, 1, 1), 3),
        ]
    ),
    st.lists(rationals, min_size=3, max_size=3),
    st.lists(rationals, min_size=3, max_size=3),
    rationals.filter(lambda t: t != 0),
    rationals.filter(lambda t: t != 0),
)
def test_pullback_identity_at_random_points(case, xs, ys, r, s):
    w, l1, v, l2 = case
    v1, v2 = distinguished(w, l1), distinguished(v, l2)
    lhs, rhs = pullback_residual(v1, v2, xs[: len(w) - 1], ys[: len(v) - 1], r, s)
    assert lhs == rhs
    assert isinstance(lhs, Fraction)


def test_symbolic_identity():
    assert verify_twist_identity(distinguished((11, 5, 6), 6), fermat((1, 2, 3), 6))


def test_cy_conditions_of_twist():
    v1, v2 = fermat((2, 1, 1), 12), fermat((1, 1, 1, 3), 6)
    image = twist(v1, v2).image
    rep = cy_conditions(image, TwistInput.of(v1, v2))
    assert rep.sufficient and rep.fiber_cy and rep.total_cy and rep.genus == 1
    assert not rep.needs_birational_modification


def test_cy_conditions_exceptional_candidate():
    rep = cy_conditions(fermat((1, 1, 1), 6))
    assert not rep.sufficient and rep.genus == 10
    rep = cy_conditions(WeightedHypersurface(WeightSystem((1, 1, 12, 44, 66)), 132))
    assert rep.genus == 9


def test_double_fibration():
    first = twist(fermat((2, 1, 1), 6), fermat((4, 1, 1, 6), 12)).image
    second = twist(fermat((2, 1, 1), 12), fermat((1, 1, 1, 3), 6)).image
    assert str(first) == "P(4,4,2,2,12)[24]"
    a = normalize(first).hypersurface
    b = normalize(second).hypersurface
    assert sorted(a.weights) == sorted(b.weights) == [1, 1, 2, 2, 6]
    assert equivalent_up_to_rescaling(a, b)
    assert equivalent_up_to_rescaling(a, fermat((2, 2, 1, 1, 6), 12))


def test_fermat_partition_quintic():
    tower = fermat_partition(5, 5, (2, 3))
    assert tower.group_orders == (5,)
    assert sorted(tower.result.weights) == [1, 1, 1, 1, 1]
    assert [len(f.weights) for f in tower.factors] == [3, 4]


def test_fermat_partition_three_parts():
    tower = fermat_partition(6, 6, (2, 2, 2))
    assert tower.group_orders == (6, 6)
    assert equivalent_up_to_rescaling(tower.result, fermat((1,) * 6, 6))


def test_fermat_partition_identity_and_errors():
    tower = fermat_partition(5, 5, (5,))
    assert tower.steps == () and tower.result == fermat((1,) * 5, 5)
    with pytest.raises(BadPartition):
        fermat_partition(5, 5, (2, 2))
    with pytest.raises(BadPartition):
        fermat_partition(5, 5, (4, 1))


def _hetsplit():
    v = (1, 2, 2, 1)
    rest = (2, 2, 1)
    p11 = build_fermat(rest, 2)
    p20 = build_fermat(rest, 4)
    return GeneralizedTwistInput(distinguished((2, 1, 1), 4), WeightSystem(v), 3, p11, p20)


def test_generalized_twist_hetsplit():
    inp = _hetsplit()
    assert inp.mu == 4
    assert inp.v2().configuration_matrix() == ((1, 1), (2, 4))
    res = generalized_twist(inp)
    assert tuple(res.image.factors[1]) == (1, 1, 4, 4, 2)
    assert res.image.configuration_matrix() == ((1, 1), (4, 8))
    assert res.image.is_cy
    assert verify_generalized_identity(res)


def test_generalized_twist_weight_relation():
    inp = _hetsplit()
    bad = GeneralizedTwistInput(inp.v1, inp.v, 4, inp.p11, inp.p20)
    with pytest.raises(WeightRelationViolated):
        generalized_twist(bad)


def test_generalized_twist_fourfold_side():
    rest = (4, 4, 2, 1)
    inp = GeneralizedTwistInput(
        distinguished((2, 1, 1), 8),
        WeightSystem((1, 4, 4, 2, 1)),
        3,
        build_fermat(rest, 4),
        build_fermat(rest, 8),
    )
    res = generalized_twist(inp)
    assert sorted(res.image.factors[1]) == [1, 1, 2, 4, 8, 8]
    assert res.image.configuration_matrix() == ((1, 1), (8, 16))
    assert verify_generalized_identity(res)
