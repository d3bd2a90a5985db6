"""Twist maps between products of weighted hypersurfaces.

Given ``V1 = {x0^l + p(x) = 0}`` in ``P(w0,...,wn)`` and ``V2 = {y0^l + q(y) = 0}``
in ``P(v0,...,vm)``, the twist map sends a pair of points to

    z_i = y0^(w_i/w0) x_i,    t_j = x0^(v_j/v0) y_j

and its image is ``X = {p(z) - q(t) = 0}`` in ``P(v0 w1,...,v0 wn, w0 v1,...,w0 vm)``
of degree ``v0 w0 l``.  Fractional powers are never evaluated here; identities
are checked after writing ``x0 = r^v0`` and ``y0 = s^w0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

import sympy

from .errors import (
    BadPartition,
    DegreeMismatch,
    InvariantViolation,
    ShapeError,
    ValidationError,
    WeightRelationViolated,
)
from .weights import (
    CompleteIntersection,
    WeightedHypersurface,
    WeightedPolynomial,
    WeightSystem,
    as_weights,
    build_fermat,
    count_monomials,
    equivalent_up_to_rescaling,
    is_quasismooth,
    realize,
)


@dataclass(frozen=True)
class DistinguishedForm:
    """``coeff * x0^ell + rest`` where ``rest`` does not involve ``x0``."""

    ell: int
    coeff: Fraction
    rest: WeightedPolynomial  # in the variables x1..xn only


def split_distinguished(h: WeightedHypersurface) -> DistinguishedForm:
    if h.polynomial is None:
        raise ShapeError(f"{h} has no polynomial")
    poly = h.polynomial
    pure = [(m, c) for m, c in poly.terms if m[0] and not any(m[1:])]
    mixed = [m for m, _ in poly.terms if m[0] and any(m[1:])]
    if len(pure) != 1 or mixed:
        raise ShapeError(f"{h}: x0 must appear only in a single pure power")
    (m0, c0), = pure
    rest_ws = WeightSystem(tuple(h.weights)[1:]) if len(h.weights) > 1 else None
    if rest_ws is None:
        raise ShapeError("need at least one variable besides x0")
    rest_terms = tuple((m[1:], c) for m, c in poly.terms if not m[0])
    if not rest_terms:
        raise ShapeError(f"{h}: nothing besides the pure power of x0")
    rest = WeightedPolynomial(rest_ws, rest_terms)
    return DistinguishedForm(m0[0], c0, rest)


@dataclass(frozen=True)
class TwistInput:
    v1: WeightedHypersurface
    v2: WeightedHypersurface
    ell: int

    @classmethod
    def of(cls, v1: WeightedHypersurface, v2: WeightedHypersurface) -> "TwistInput":
        a, b = split_distinguished(v1), split_distinguished(v2)
        if a.ell != b.ell:
            raise DegreeMismatch(
                f"distinguished exponents differ: {a.ell} in {v1} and {b.ell} in {v2}"
            )
        if v1.degree != a.ell * v1.weights[0] or v2.degree != b.ell * v2.weights[0]:
            raise DegreeMismatch("degree must equal ell times the distinguished weight")
        return cls(v1, v2, a.ell)


@dataclass(frozen=True)
class TwistResult:
    source: TwistInput
    image: WeightedHypersurface
    quotient_order: int
    generically_ell_to_one: bool
    indeterminacy: str = "x0 = y0 = 0"


def twist_weights(w: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    w0, v0 = w[0], v[0]
    return tuple(v0 * wi for wi in w[1:]) + tuple(w0 * vj for vj in v[1:])


def twist(v1: WeightedHypersurface, v2: WeightedHypersurface, check: bool = True) -> TwistResult:
    """Image of ``V1 x V2`` under the twist map; weights are left unnormalized."""
    inp = TwistInput.of(v1, v2)
    if check:
        for factor in (v1, v2):
            if not is_quasismooth(factor):
                raise ShapeError(f"{factor} is not quasismooth")
    a, b = split_distinguished(v1), split_distinguished(v2)
    w, v = tuple(v1.weights), tuple(v2.weights)
    ws = WeightSystem(twist_weights(w, v))
    n, m = len(w) - 1, len(v) - 1
    p = a.rest.scale(1 / a.coeff).embed(ws, range(n))
    q = b.rest.scale(1 / b.coeff).embed(ws, range(n, n + m))
    degree = v[0] * w[0] * inp.ell
    image = WeightedHypersurface(ws, degree, p - q)
    g = quotient_gcd(w[0], v[0], inp.ell)
    return TwistResult(inp, image, inp.ell, g == 1)


def quotient_gcd(w0: int, v0: int, ell: int) -> int:
    return gcd(gcd(w0, v0), ell)


@dataclass(frozen=True)
class QuotientCheck:
    gcd: int
    is_ell_to_one: bool


def quotient_check(w0: int, v0: int, ell: int) -> QuotientCheck:
    """The twist map is generically ``ell:1`` exactly when ``gcd(w0, v0, ell) = 1``."""
    g = quotient_gcd(w0, v0, ell)
    return QuotientCheck(g, g == 1)


def pullback_residual(
    v1: WeightedHypersurface,
    v2: WeightedHypersurface,
    x: Sequence,
    y: Sequence,
    r,
    s,
) -> tuple[Fraction, Fraction]:
    """Evaluate both sides of the twist identity at a rational point.

    With ``x0 = r^v0``, ``y0 = s^w0``, ``z_i = s^w_i x_i`` and
    ``t_j = r^v_j y_j`` one has ``p(z) - q(t) = y0^l f1 - x0^l f2`` where
    ``f1``, ``f2`` are the equations of ``V1``, ``V2``.  Returns the pair
    (left side, right side).  ``x`` and ``y`` exclude the distinguished
    coordinates.
    """
    res = twist(v1, v2, check=False)
    a, b = split_distinguished(v1), split_distinguished(v2)
    w, v = tuple(v1.weights), tuple(v2.weights)
    r, s = Fraction(r), Fraction(s)
    x = [Fraction(t) for t in x]
    y = [Fraction(t) for t in y]
    z = [s ** wi * xi for wi, xi in zip(w[1:], x)]
    t = [r ** vj * yj for vj, yj in zip(v[1:], y)]
    lhs = res.image.polynomial.evaluate(z + t)
    x0, y0 = r ** v[0], s ** w[0]
    f1 = v1.polynomial.evaluate([x0] + x) / a.coeff
    f2 = v2.polynomial.evaluate([y0] + y) / b.coeff
    ell = res.quotient_order
    rhs = y0**ell * f1 - x0**ell * f2
    return lhs, rhs


def verify_twist_identity(v1: WeightedHypersurface, v2: WeightedHypersurface) -> bool:
    """Symbolic form of :func:`pullback_residual`."""
    res = twist(v1, v2, check=False)
    a, b = split_distinguished(v1), split_distinguished(v2)
    w, v = tuple(v1.weights), tuple(v2.weights)
    r, s = sympy.symbols("r s")
    xs = sympy.symbols(f"x1:{len(w)}")
    ys = sympy.symbols(f"y1:{len(v)}")
    z = [s**wi * xi for wi, xi in zip(w[1:], xs)]
    t = [r**vj * yj for vj, yj in zip(v[1:], ys)]
    lhs = res.image.polynomial.to_sympy(list(z) + list(t))
    x0, y0 = r ** v[0], s ** w[0]
    f1 = v1.polynomial.to_sympy([x0, *xs]) / _sym(a.coeff)
    f2 = v2.polynomial.to_sympy([y0, *ys]) / _sym(b.coeff)
    ell = res.quotient_order
    return sympy.expand(lhs - (y0**ell * f1 - x0**ell * f2)) == 0


def _sym(c: Fraction):
    return sympy.Rational(c.numerator, c.denominator)


@dataclass(frozen=True)
class CYReport:
    sufficient: bool
    fiber_cy: bool | None
    total_cy: bool | None
    genus: int
    exceptional_candidate: bool
    needs_birational_modification: bool

    def as_dict(self) -> dict:
        return {
            "sufficient": self.sufficient,
            "fiber_cy": self.fiber_cy,
            "total_cy": self.total_cy,
            "genus": self.genus,
            "exceptional_candidate": self.exceptional_candidate,
            "needs_birational_modification": self.needs_birational_modification,
        }


def cy_conditions(x: WeightedHypersurface, fibered_from: TwistInput | None = None) -> CYReport:
    """Calabi-Yau checks for a hypersurface, optionally seen as a twist image.

    ``genus`` counts monomials of degree ``d - sum(k)``, which is the number
    of holomorphic top forms of a quasismooth hypersurface; it is 0 when
    ``d < sum(k)``.
    """
    excess = x.degree - x.weights.total
    genus = count_monomials(x.weights, excess) if excess >= 0 else 0
    sufficient = excess == 0
    fiber_cy = total_cy = None
    birational = False
    if fibered_from is not None:
        w, v, ell = tuple(fibered_from.v1.weights), tuple(fibered_from.v2.weights), fibered_from.ell
        fiber_cy = sum(v) == ell * v[0]
        total_cy = v[0] * sum(w[1:]) + w[0] * sum(v[1:]) == v[0] * w[0] * ell
        birational = w[0] == 1
    return CYReport(
        sufficient=sufficient,
        fiber_cy=fiber_cy,
        total_cy=total_cy,
        genus=genus,
        exceptional_candidate=(not sufficient) and genus == 1,
        needs_birational_modification=birational,
    )


def distinguished(weights, ell: int) -> WeightedHypersurface | None:
    """``x0^ell + p(x1..xn)`` of degree ``ell * w0`` with ``p`` Fermat or chain.

    Returns None when no such ``p`` exists.
    """
    ws = as_weights(weights)
    d = ell * ws[0]
    rest = realize(WeightSystem(tuple(ws)[1:]), d)
    if rest is None:
        return None
    lead = WeightedPolynomial(ws, (((ell,) + (0,) * (len(ws) - 1), 1),))
    return WeightedHypersurface(ws, d, lead + rest.embed(ws, range(1, len(ws))))


def fermat(weights, d: int) -> WeightedHypersurface:
    ws = as_weights(weights)
    return WeightedHypersurface(ws, d, build_fermat(ws, d))


@dataclass(frozen=True)
class FermatTower:
    """Factorization of a Fermat hypersurface by repeated twists.

    ``factors[i]`` is the Fermat hypersurface of degree ``d`` in ``P^{n_i}``.
    Intermediate images get a fresh distinguished coordinate of weight 1 so
    that the next fold applies; the last image is the target itself.
    """

    degree: int
    partition: tuple[int, ...]
    factors: tuple[WeightedHypersurface, ...]
    steps: tuple[TwistResult, ...]
    group_orders: tuple[int, ...]
    result: WeightedHypersurface


def _augment(h: WeightedHypersurface) -> WeightedHypersurface:
    ws = WeightSystem((1,) + tuple(h.weights))
    poly = h.polynomial.embed(ws, range(1, len(ws)))
    lead = WeightedPolynomial(ws, (((h.degree,) + (0,) * len(h.weights), 1),))
    return WeightedHypersurface(ws, h.degree, lead + poly)


def fermat_partition(d: int, n: int, partition: Sequence[int]) -> FermatTower:
    """Fold Fermat hypersurfaces ``X_i`` in ``P^{n_i}`` into the Fermat ``P^{n-1}[d]``."""
    parts = tuple(int(k) for k in partition)
    if d < 1 or n < 1:
        raise BadPartition("degree and n must be positive")
    if sum(parts) != n or any(k < 1 for k in parts) or not parts:
        raise BadPartition(f"{parts} is not a partition of {n}")
    target = fermat((1,) * n, d)
    if len(parts) == 1:
        return FermatTower(d, parts, (target,), (), (), target)
    if any(k < 2 for k in parts):
        raise BadPartition("each part must be at least 2")
    factors = tuple(fermat((1,) * (k + 1), d) for k in parts)
    steps, orders = [], []
    current = factors[0]
    for i, nxt in enumerate(factors[1:], start=1):
        res = twist(current, nxt, check=False)
        steps.append(res)
        orders.append(res.quotient_order)
        current = _augment(res.image) if i < len(factors) - 1 else res.image
    if not equivalent_up_to_rescaling(current, target):
        raise InvariantViolation("twist tower did not land on the Fermat hypersurface")
    return FermatTower(d, parts, factors, tuple(steps), tuple(orders), current)


@dataclass(frozen=True)
class GeneralizedTwistInput:
    """``V1 = {x0^mu + p = 0}`` and the data of the complete intersection ``V2``.

    ``V2`` lives in ``P(1,1) x P(v0,...,vm)`` and is cut out by
    ``u0 y1 + u1 p11(y)`` and ``u0 (y0^mu + p20(y)) + u1 y1^(nu-1)``.  The
    polynomials ``p11`` and ``p20`` are given in ``y1..ym``.
    """

    v1: WeightedHypersurface
    v: WeightSystem
    nu: int
    p11: WeightedPolynomial
    p20: WeightedPolynomial

    @property
    def mu(self) -> int:
        return split_distinguished(self.v1).ell

    def v2(self) -> CompleteIntersection:
        v = tuple(self.v)
        pp = WeightSystem((1, 1))
        joint = WeightSystem((1, 1) + v)
        m = len(v)
        yshift = list(range(3, 2 + m))
        u0y1 = _mono(joint, {0: 1, 3: 1})
        eq1 = u0y1 + _times(self.p11.embed(joint, yshift), joint, {1: 1})
        y0mu = _mono(joint, {0: 1, 2: self.mu})
        eq2 = (
            y0mu
            + _times(self.p20.embed(joint, yshift), joint, {0: 1})
            + _mono(joint, {1: 1, 3: self.nu - 1})
        )
        d = sum(v)
        return CompleteIntersection((pp, WeightSystem(v)), ((1, v[1]), (1, d - v[1])), (eq1, eq2))


def _mono(ws: WeightSystem, exps: dict[int, int], coeff=1) -> WeightedPolynomial:
    m = [0] * len(ws)
    for i, e in exps.items():
        m[i] += e
    return WeightedPolynomial(ws, ((tuple(m), coeff),))


def _times(poly: WeightedPolynomial, ws: WeightSystem, exps: dict[int, int]) -> WeightedPolynomial:
    terms = []
    for m, c in poly.terms:
        m = list(m)
        for i, e in exps.items():
            m[i] += e
        terms.append((tuple(m), c))
    return WeightedPolynomial(ws, tuple(terms))


@dataclass(frozen=True)
class GeneralizedTwistResult:
    source: GeneralizedTwistInput
    image: CompleteIntersection
    mu: int
    nu: int
    quotient_order: int


def check_weight_relation(v: Sequence[int], mu: int, nu: int) -> None:
    d = sum(v)
    if v[0] * mu != d - v[1] or v[1] * (nu - 1) != v[0] * mu:
        raise WeightRelationViolated(
            f"need mu = v1(nu-1)/v0 = (d-v1)/v0; got mu={mu}, nu={nu}, v={tuple(v)}"
        )


def generalized_twist(inp: GeneralizedTwistInput) -> GeneralizedTwistResult:
    """Image of ``V1 x V2`` when ``V2`` is the codimension-two model above."""
    w = tuple(inp.v1.weights)
    v = tuple(inp.v)
    if len(v) < 2:
        raise ValidationError("the fiber needs at least two weights")
    form = split_distinguished(inp.v1)
    mu, nu = form.ell, inp.nu
    check_weight_relation(v, mu, nu)
    d = sum(v)
    if inp.p11.weights != WeightSystem(v[1:]) or inp.p20.weights != WeightSystem(v[1:]):
        raise ValidationError("p11 and p20 must be polynomials in y1..ym")
    if inp.p11.degree() != v[1] or inp.p20.degree() != d - v[1]:
        raise WeightRelationViolated("p11 must have degree v1 and p20 degree d - v1")
    n, m = len(w) - 1, len(v) - 1
    kw = WeightSystem(twist_weights(w, v))
    joint = WeightSystem((1, 1) + tuple(kw))
    zpos = list(range(2, 2 + n))
    tpos = list(range(2 + n, 2 + n + m))
    p = form.rest.scale(1 / form.coeff).embed(joint, zpos)
    p11 = inp.p11.embed(joint, tpos)
    p20 = inp.p20.embed(joint, tpos)
    t1 = tpos[0]
    eq1 = _mono(joint, {0: 1, t1: 1}) + _times(p11, joint, {1: 1})
    eq2 = _times(p20 - p, joint, {0: 1}) + _mono(joint, {1: 1, t1: nu - 1})
    image = CompleteIntersection(
        (WeightSystem((1, 1)), kw),
        ((1, v[1] * w[0]), (1, (d - v[1]) * w[0])),
        (eq1, eq2),
    )
    return GeneralizedTwistResult(inp, image, mu, nu, gcd(mu, nu))


def verify_generalized_identity(res: GeneralizedTwistResult) -> bool:
    """Check that both output equations pull back into the ideal of ``V1 x V2``.

    With ``x0 = r^v0``, ``y0 = s^w0``:  the first equation pulls back to
    ``r^v1 * g1`` and the second to ``r^(v0 mu) * g2 - u0 s^(w0 mu) * f1`` where
    ``f1`` defines ``V1`` and ``g1``, ``g2`` define ``V2``.
    """
    inp = res.source
    w, v = tuple(inp.v1.weights), tuple(inp.v)
    form = split_distinguished(inp.v1)
    mu = res.mu
    r, s, u0, u1 = sympy.symbols("r s u0 u1")
    xs = sympy.symbols(f"x1:{len(w)}")
    ys = sympy.symbols(f"y1:{len(v)}")
    z = [s**wi * xi for wi, xi in zip(w[1:], xs)]
    t = [r**vj * yj for vj, yj in zip(v[1:], ys)]
    eq1, eq2 = res.image.equations
    pull1 = eq1.to_sympy([u0, u1, *z, *t])
    pull2 = eq2.to_sympy([u0, u1, *z, *t])
    x0, y0 = r ** v[0], s ** w[0]
    f1 = inp.v1.polynomial.to_sympy([x0, *xs]) / _sym(form.coeff)
    g1, g2 = inp.v2().equations
    g1s = g1.to_sympy([u0, u1, y0, *ys])
    g2s = g2.to_sympy([u0, u1, y0, *ys])
    ok1 = sympy.expand(pull1 - r ** v[1] * g1s) == 0
    ok2 = sympy.expand(pull2 - (r ** (v[0] * mu) * g2s - u0 * s ** (w[0] * mu) * f1)) == 0
    return ok1 and ok2
