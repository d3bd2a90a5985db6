"""Euler numbers and Hodge numbers of Calabi-Yau hypersurfaces and their transitions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

from .errors import NegativeHodge, NonIntegralGenus, UnsupportedShape, ValidationError
from .twist import GeneralizedTwistInput, distinguished, generalized_twist, twist
from .weights import WeightedPolynomial, as_weights, count_monomials, realize, weighted_bezout


def _divisors(n: int) -> list[int]:
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
        k += 1
    return small + large[::-1]


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def jordan_totient2(n: int) -> int:
    """Number of pairs ``(l, r)`` mod ``n`` with ``gcd(l, r, n) = 1``."""
    value = n * n
    for p in _prime_factors(n):
        value = value // (p * p) * (p * p - 1)
    return value


def orbifold_euler(weights, d: int, check: bool = True) -> int:
    """Euler number of a Calabi-Yau hypersurface ``P(w)[d]`` from the Landau-Ginzburg orbifold.

    The sum runs over pairs ``(l, r)`` of elements of ``Z/d`` acting with
    charges ``q_i = w_i/d``; each pair contributes the product of
    ``1 - 1/q_i`` over the fields invariant under both.  Pairs only matter
    through ``g = gcd(l, r, d)``, so the double sum is grouped by divisors of
    ``d`` with Jordan's totient counting the pairs in each class.
    """
    ws = tuple(as_weights(weights))
    if d != sum(ws):
        raise ValidationError(f"degree {d} differs from the weight sum {sum(ws)}")
    if check and realize(ws, d) is None:
        raise UnsupportedShape(f"no Fermat or chain representative of P{ws}[{d}]")
    periods = [d // gcd(d, w) for w in ws]
    total = Fraction(0)
    for g in _divisors(d):
        term = Fraction(1)
        for w, period in zip(ws, periods):
            if g % period == 0:
                term *= Fraction(w - d, w)
        total += jordan_totient2(d // g) * term
    chi = total / d
    if chi.denominator != 1:
        raise ValidationError(f"orbifold Euler number {chi} is not an integer")
    return int(chi)


@dataclass(frozen=True)
class HodgePair:
    h11: int
    h21: int

    @property
    def euler(self) -> int:
        return 2 * (self.h11 - self.h21)


def cy3_hodge(h11: int, chi: int) -> HodgePair:
    """``h21 = h11 - chi/2`` for a Calabi-Yau threefold."""
    if chi % 2:
        raise ValidationError("the Euler number of a Calabi-Yau threefold is even")
    h21 = h11 - chi // 2
    if h11 < 0 or h21 < 0:
        raise NegativeHodge(f"h11={h11}, chi={chi} gives h21={h21}")
    return HodgePair(h11, h21)


def conifold_transition(h11: int, h21: int, nodes: int, relations: int) -> HodgePair:
    """Hodge numbers after degenerating through ``P`` nodes with ``R`` relations."""
    if nodes < 0 or relations < 0 or relations > nodes:
        raise ValidationError("need 0 <= R <= P")
    new = (h11 + relations, h21 - (nodes - relations))
    if min(new) < 0:
        raise NegativeHodge(f"transition gives {new}")
    return HodgePair(*new)


def conifold_euler_shift(nodes: int) -> int:
    """Change of Euler number across a conifold transition with ``P`` nodes."""
    return 2 * nodes


def ci_curve_genus(d1: int, d2: int, weights) -> int:
    """Genus of a complete intersection curve of degrees ``d1, d2`` in ``P(w0..w3)``.

    ``2g - 2 = d1 d2 (d1 + d2 - sum w) / prod w``.
    """
    ws = tuple(as_weights(weights))
    if len(ws) != 4:
        raise ValidationError("a curve complete intersection needs four weights")
    twice = Fraction(d1 * d2 * (d1 + d2 - sum(ws)), prod(ws)) + 2
    if twice.denominator != 1 or twice.numerator % 2:
        raise NonIntegralGenus(f"2g = {twice} is not an even integer")
    return twice.numerator // 2


def geometric_genus(weights, d: int) -> int:
    """Number of monomials of degree ``d - sum(w)``: holomorphic top forms of a quasismooth ``P(w)[d]``."""
    ws = as_weights(weights)
    excess = d - ws.total
    return count_monomials(ws, excess) if excess >= 0 else 0


@dataclass(frozen=True)
class FourfoldReport:
    """Checks on a fourfold transition between a hypersurface and a codimension-two model.

    ``fiber_image`` is the twist image giving the generic threefold fiber,
    ``ci_image`` the generalized twist image giving the complete intersection.
    """

    hypersurface: tuple[tuple[int, ...], int]
    complete_intersection: tuple[tuple[int, int], ...]
    fiber_image: str
    fiber_ok: bool
    ci_image: str
    ci_ok: bool
    curve_genus: int
    nodes: int

    @property
    def ok(self) -> bool:
        return self.fiber_ok and self.ci_ok


def _fermat_poly(weights, d: int) -> WeightedPolynomial:
    poly = realize(weights, d)
    if poly is None:
        raise UnsupportedShape(f"no Fermat or chain polynomial of degree {d} in {tuple(weights)}")
    return poly


def fourfold_transition_report(
    curve: tuple[int, ...] = (2, 1, 1),
    fiber: tuple[int, ...] = (1, 2, 2, 1),
    ci_fiber: tuple[int, ...] = (1, 4, 4, 2, 1),
    nu: int = 3,
    expected_fiber: tuple[tuple[int, ...], int] = ((4, 4, 2, 1, 1), 12),
    expected_ci: tuple[tuple[int, ...], tuple[tuple[int, int], ...]] = (
        (8, 8, 4, 2, 1, 1),
        ((1, 8), (1, 16)),
    ),
    singular_curve: tuple[tuple[int, int], tuple[int, ...]] = ((16, 16), (4, 2, 1, 1)),
    node_data: tuple[tuple[int, ...], tuple[int, ...]] = ((4, 4, 8, 8), (4, 4, 1, 1, 2)),
) -> FourfoldReport:
    """Weight and degree checks for a fourfold transition built from twists.

    The defaults describe ``P(8,8,4,2,1,1)[24]`` against the complete
    intersection of bidegrees ``(1,8), (1,16)`` in ``P(1,1) x P(8,8,4,2,1,1)``:
    the generic fiber ``P(4,4,2,1,1)[12]`` comes from ``P(2,1,1)[12] x
    P(1,2,2,1)[6]``, the complete intersection from the generalized twist of
    ``P(2,1,1)[16]`` with the codimension-two fiber over ``P(4,4,2,1,1)``.
    """
    ell = sum(fiber) // fiber[0]
    v1 = distinguished(curve, ell * fiber[0])
    v2 = distinguished(fiber, ell)
    if v1 is None or v2 is None:
        raise UnsupportedShape("no distinguished form for the fiber factorization")
    image = twist(v1, v2, check=False).image
    want_ws, want_d = expected_fiber
    fiber_ok = sorted(image.weights) == sorted(want_ws) and image.degree == want_d

    mu = (sum(ci_fiber) - ci_fiber[1]) // ci_fiber[0]
    base = distinguished(curve, mu)
    if base is None:
        raise UnsupportedShape(f"no curve x0^{mu} + p in P{tuple(curve)}")
    rest = as_weights(ci_fiber[1:])
    inp = GeneralizedTwistInput(
        base,
        as_weights(ci_fiber),
        nu,
        _fermat_poly(rest, ci_fiber[1]),
        _fermat_poly(rest, sum(ci_fiber) - ci_fiber[1]),
    )
    ci = generalized_twist(inp).image
    want_ws, want_rows = expected_ci
    rows = tuple(tuple(r) for r in ci.multidegrees)
    ci_ok = sorted(ci.factors[1]) == sorted(want_ws) and rows == tuple(want_rows)

    (d1, d2), cw = singular_curve
    nodes = weighted_bezout(*node_data)
    if nodes.denominator != 1:
        raise ValidationError(f"node count {nodes} is not an integer")
    return FourfoldReport(
        hypersurface=(tuple(sorted(want_ws, reverse=True)), sum(want_ws)),
        complete_intersection=rows,
        fiber_image=str(image),
        fiber_ok=fiber_ok,
        ci_image=str(ci),
        ci_ok=ci_ok,
        curve_genus=ci_curve_genus(d1, d2, cw),
        nodes=int(nodes),
    )
