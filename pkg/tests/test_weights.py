import itertools
import random
import warnings
from fractions import Fraction
from math import lcm

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from wpstwist.errors import (
    NonDivisibleDegree,
    NonFermatWeights,
    NonIntegerCount,
    UnsupportedShape,
    ValidationError,
)
from wpstwist.weights import (
    CompleteIntersection,
    WeightedHypersurface,
    WeightedPolynomial,
    WeightSystem,
    build_chain,
    build_fermat,
    count_monomials,
    delsarte_shape,
    equivalent_up_to_rescaling,
    general_polynomial,
    general_quasismooth,
    hypersurface_from_json,
    hypersurface_to_json,
    is_quasismooth,
    normalize,
    realize,
    weighted_bezout,
)


def hyper(ws, d):
    return WeightedHypersurface(WeightSystem(tuple(ws)), d, realize(ws, d))


def test_weight_system_rejects_nonpositive():
    with pytest.raises(ValidationError):
        WeightSystem((1, 0, 2))


def test_polynomial_merges_and_formats():
    p = WeightedPolynomial.from_dict((2, 1, 1), {(3, 0, 0): 1, (0, 6, 0): 2, (0, 0, 6): -1})
    assert p.is_homogeneous and p.degree() == 6
    assert str(p) == "x0^3 + 2*x1^6 - x2^6"
    q = p + WeightedPolynomial.from_dict((2, 1, 1), {(0, 6, 0): -2})
    assert len(q.terms) == 2


def test_hypersurface_requires_homogeneity():
    p = WeightedPolynomial.from_dict((2, 1, 1), {(3, 0, 0): 1, (0, 5, 0): 1})
    with pytest.raises(ValidationError):
        WeightedHypersurface(WeightSystem((2, 1, 1)), 6, p)


def test_normalize_common_factor():
    res = normalize(hyper((4, 4, 2, 2, 12), 24))
    assert tuple(res.hypersurface.weights) == (2, 2, 1, 1, 6)
    assert res.hypersurface.degree == 12
    assert res.steps[0].index is None and res.steps[0].factor == 2


def test_normalize_divides_exponent():
    # P(1,2,2)[4]: x0 carries the reduction
    h = WeightedHypersurface(
        WeightSystem((1, 2, 2)),
        4,
        WeightedPolynomial.from_dict((1, 2, 2), {(4, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1}),
    )
    res = normalize(h)
    assert tuple(res.hypersurface.weights) == (1, 1, 1)
    assert res.hypersurface.degree == 2
    assert str(res.hypersurface.polynomial) == "x0^2 + x1^2 + x2^2"


def test_normalize_rejects_indivisible_degree():
    with pytest.raises(NonDivisibleDegree):
        normalize(WeightedHypersurface(WeightSystem((2, 2, 2)), 7))


@settings(max_examples=1000, deadline=None)
@given(
    st.lists(st.integers(1, 60), min_size=2, max_size=6),
    st.integers(1, 3),
)
def test_normalize_idempotent(ws, k):
    d = lcm(*ws) * k
    once = normalize(WeightedHypersurface(WeightSystem(tuple(ws)), d)).hypersurface
    assert once.weights.is_normalized()
    twice = normalize(once)
    assert twice.steps == ()
    assert twice.hypersurface == once


def _brute_count(ws, d):
    ranges = [range(d // w + 1) for w in ws]
    return sum(1 for e in itertools.product(*ranges) if sum(a * w for a, w in zip(e, ws)) == d)


def _series_count(ws, d):
    t = sympy.Symbol("t")
    gen = sympy.prod([sum(t ** (w * k) for k in range(d // w + 1)) for w in ws])
    return sympy.Poly(sympy.expand(gen), t).coeff_monomial(t**d)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(1, 9), min_size=1, max_size=4), st.integers(0, 30))
def test_count_monomials_matches_series(ws, d):
    assert count_monomials(ws, d) == _series_count(ws, d) == _brute_count(ws, d)


def test_count_monomials_restricted():
    assert count_monomials((1, 2, 3), 6, restrict_to=[1, 2]) == 2
    assert count_monomials((1, 1, 12, 44, 66), 132 - 124) == 9


def test_weighted_bezout():
    assert weighted_bezout((4, 4, 8, 8), (4, 4, 1, 1, 2)) == 32
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        assert weighted_bezout((1,), (2, 1)) == Fraction(1, 2)
    assert any(issubclass(w.category, NonIntegerCount) for w in caught)


def test_build_fermat():
    assert str(build_fermat((1, 2, 3), 6)) == "x0^6 + x1^3 + x2^2"
    with pytest.raises(NonFermatWeights):
        build_fermat((1, 2, 5), 6)


def test_build_chain_table_example():
    p = build_chain((41, 42, 498), 3486)
    assert str(p) == "x0^84*x1 + x1^83 + x2^7"
    assert delsarte_shape(p) == "chain"


def test_build_chain_finds_loop():
    p = build_chain((31, 41, 391), 2778)
    assert delsarte_shape(p) == "loop"
    with pytest.raises(UnsupportedShape):
        build_chain((31, 41, 391), 2778, loops=False)


def test_realize_none():
    assert realize((28, 41, 414), 2898) is None


def test_delsarte_rejects_shared_partner():
    p = WeightedPolynomial.from_dict((1, 1, 1), {(2, 1, 0): 1, (0, 2, 1): 1, (1, 0, 2): 1, (3, 0, 0): 1})
    assert delsarte_shape(p) is None


def test_quasismooth_fermat_and_fallback():
    assert is_quasismooth(hyper((1, 1, 1, 1, 1), 5))
    # x*y*z is singular along the coordinate lines
    p = WeightedPolynomial.from_dict((1, 1, 1), {(1, 1, 1): 1})
    assert not is_quasismooth(WeightedHypersurface(WeightSystem((1, 1, 1)), 3, p))
    # a non-invertible smooth cubic goes through the Groebner fallback
    q = WeightedPolynomial.from_dict(
        (1, 1, 1), {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1, (1, 1, 1): 1}
    )
    assert is_quasismooth(WeightedHypersurface(WeightSystem((1, 1, 1)), 3, q))


def _random_member(poly, rng):
    terms = tuple((m, Fraction(rng.randint(1, 97))) for m, _ in poly.terms)
    return WeightedPolynomial(poly.weights, terms)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 7), min_size=2, max_size=3), st.integers(1, 4), st.randoms())
def test_general_quasismooth_against_groebner(ws, k, rnd):
    d = max(ws) * k + sum(ws)
    poly = general_polynomial(ws, d)
    if poly is None:
        assert not general_quasismooth(ws, d)
        return
    h = WeightedHypersurface(WeightSystem(tuple(ws)), d, _random_member(poly, random.Random(rnd.random())))
    assert is_quasismooth(h)


def test_general_quasismooth_examples():
    assert general_quasismooth((31, 36, 366), 2598)
    assert not general_quasismooth((2, 2, 3), 7)
    assert general_quasismooth((28, 41, 414, 966, 1449), 2898)


def test_equivalent_up_to_rescaling_permutes_equal_weights():
    a = hyper((2, 2, 1, 1, 6), 12)
    terms = tuple((m[1::-1] + m[2:], c) for m, c in a.polynomial.terms)
    b = a.with_polynomial(WeightedPolynomial(a.weights, terms))
    assert equivalent_up_to_rescaling(a, b)
    assert equivalent_up_to_rescaling(a, hyper((1, 1, 2, 2, 6), 12))
    chain = {m: c for m, c in a.polynomial.terms}
    del chain[(0, 0, 12, 0, 0)]
    chain[(0, 0, 11, 1, 0)] = 1
    c = a.with_polynomial(WeightedPolynomial.from_dict(a.weights, chain))
    assert not equivalent_up_to_rescaling(a, c)


def test_json_round_trip():
    h = hyper((1, 2, 3, 6), 12)
    assert hypersurface_from_json(hypersurface_to_json(h)) == h


def test_complete_intersection_cy():
    pp, ws = WeightSystem((1, 1)), WeightSystem((4, 4, 2, 1, 1))
    joint = WeightSystem((1, 1, 4, 4, 2, 1, 1))
    eq1 = WeightedPolynomial(joint, (((1, 0, 1, 0, 0, 0, 0), 1), ((0, 1, 0, 1, 0, 0, 0), 1)))
    eq2 = WeightedPolynomial(joint, (((1, 0, 2, 0, 0, 0, 0), 1), ((0, 1, 0, 0, 4, 0, 0), 1)))
    ci = CompleteIntersection((pp, ws), ((1, 4), (1, 8)), (eq1, eq2))
    assert ci.is_cy
    assert ci.configuration_matrix() == ((1, 1), (4, 8))
    assert str(ci) == "P(1,1)xP(4,4,2,1,1)[[1,1],[4,8]]"
