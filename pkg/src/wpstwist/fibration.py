"""Singular fibers of constant-modulus elliptic fibrations.

The fibrations studied here come from a twist: a curve
``C = {x0^l + p(x1, x2) = 0}`` in ``P(w0, w1, w2)`` with its ``Z/l`` action,
and an elliptic curve ``E`` with a ``Z/l`` action on ``y0``.  The quotient
``(C x E)/Z_l`` maps to ``C/Z_l = P(w1, w2)`` with every smooth fiber
isomorphic to ``E``.

Fiber types are read off the local monodromy on the holomorphic 1-form of
``E``.  Over a base point ``b`` write ``theta(b)`` for the monodromy exponent;
the Kodaira fiber is the one whose alpha equals ``theta(b) mod 1`` (a zero
exponent means a smooth fiber).  With ``m`` the vanishing order of ``p`` at
``b``:

* ``b`` with both coordinates nonzero: ``theta = m / l``;
* ``b = [0:1]``: ``theta = m / (l w2) - e w0 / w2`` with ``e = w1^-1 mod w2``;
* ``b = [1:0]``: the same with the roles of ``w1`` and ``w2`` swapped.

The orbifold term comes from the weighted rescaling needed to close the loop
around a point with nontrivial isotropy.
"""

from __future__ import annotations

import itertools
import warnings
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Sequence

import sympy

from .errors import (
    EulerBoundWarning,
    ShapeError,
    UnbalancedFibration,
    UnsafeElimination,
    ValidationError,
)
from .twist import split_distinguished
from .weights import (
    WeightedHypersurface,
    WeightedPolynomial,
    WeightSystem,
    as_weights,
    delsarte_shape,
    normalize,
)


@dataclass(frozen=True)
class KodairaFiber:
    symbol: str
    euler: int
    alpha: Fraction
    ade: str  # "" for type II

    def dual(self) -> "KodairaFiber":
        return KODAIRA_BY_ALPHA[1 - self.alpha]

    def __str__(self) -> str:
        return self.symbol


KODAIRA = (
    KodairaFiber("II", 2, Fraction(1, 6), ""),
    KodairaFiber("III", 3, Fraction(1, 4), "A1"),
    KodairaFiber("IV", 4, Fraction(1, 3), "A2"),
    KodairaFiber("I0*", 6, Fraction(1, 2), "D4"),
    KodairaFiber("IV*", 8, Fraction(2, 3), "E6"),
    KodairaFiber("III*", 9, Fraction(3, 4), "E7"),
    KodairaFiber("II*", 10, Fraction(5, 6), "E8"),
)
KODAIRA_BY_SYMBOL = {k.symbol: k for k in KODAIRA}
KODAIRA_BY_ALPHA = {k.alpha: k for k in KODAIRA}
_ORDER = {k.symbol: i for i, k in enumerate(KODAIRA)}


def kodaira(symbol: str) -> KodairaFiber:
    try:
        return KODAIRA_BY_SYMBOL[symbol]
    except KeyError:
        raise ValidationError(f"unknown Kodaira symbol {symbol!r}") from None


@dataclass(frozen=True)
class FixedPoint:
    """A base point over which the fiber may be singular.

    ``location`` is ``"torus"`` for points with both coordinates nonzero,
    otherwise ``"x1=0"`` or ``"x2=0"``.  ``count`` points share the data.
    """

    location: str
    count: int
    vanishing_order: int
    isotropy: int
    theta: Fraction
    fiber: KodairaFiber | None


@dataclass(frozen=True)
class FibrationReport:
    base: WeightSystem
    fibers: tuple[tuple[int, KodairaFiber], ...]
    alpha_sum: Fraction
    euler_sum: int
    points: tuple[FixedPoint, ...] = ()
    balanced_alternatives: int = 1

    @property
    def discriminant_count(self) -> int:
        return sum(c for c, _ in self.fibers)

    @property
    def total_euler(self) -> int:
        # smooth elliptic fibers have Euler number 0
        return self.euler_sum

    @property
    def ambiguous_balance(self) -> bool:
        return self.balanced_alternatives > 1

    def describe(self) -> str:
        return ", ".join(f"{c}×{k.symbol}" for c, k in self.fibers)

    def as_dict(self) -> dict:
        return {
            "fibers": [{"type": k.symbol, "count": c} for c, k in self.fibers],
            "alpha_sum": f"{self.alpha_sum.numerator}/{self.alpha_sum.denominator}",
            "euler_sum": self.euler_sum,
            "chi": self.total_euler,
        }


def _binary_decomposition(p: WeightedPolynomial):
    """Write ``p(x1, x2) = x1^m1 x2^m2 * x2^k * h(x1^w2 / x2^w1)`` with ``h(0) != 0``."""
    w1, w2 = p.weights
    m1 = min(m[0] for m in p.monomials)
    m2 = min(m[1] for m in p.monomials)
    coeffs: dict[int, Fraction] = {}
    for (i, _), c in p.terms:
        t, rem = divmod(i - m1, w2)
        if rem:
            raise ShapeError("binary form is not weighted homogeneous")
        coeffs[t] = c
    return m1, m2, coeffs


def _root_multiplicities(coeffs: dict[int, Fraction]) -> list[tuple[int, int]]:
    """(multiplicity, number of distinct roots) for ``h(T) = sum c_t T^t``."""
    T = sympy.Symbol("T")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * T**t for t, c in coeffs.items())
    poly = sympy.Poly(expr, T, domain="QQ")
    if poly.degree() <= 0:
        return []
    _, factors = poly.sqf_list()
    out: Counter = Counter()
    for f, mult in factors:
        if f.degree() > 0:
            out[mult] += f.degree()
    return sorted(out.items())


def _orbifold_theta(m: int, ell: int, w0: int, w_other: int, w_here: int) -> Fraction:
    """Exponent at the coordinate point with isotropy ``w_here``."""
    if w_here == 1:
        return Fraction(m, ell)
    e = pow(w_other, -1, w_here)
    return Fraction(m, ell * w_here) - Fraction(e * w0, w_here)


def _fiber_for(theta: Fraction) -> KodairaFiber | None:
    alpha = theta - (theta.numerator // theta.denominator)
    if alpha == 0:
        return None
    try:
        return KODAIRA_BY_ALPHA[alpha]
    except KeyError:
        raise UnbalancedFibration(f"monodromy exponent {alpha} is not a Kodaira type") from None


def classify_elliptic_fibers(
    curve: WeightedHypersurface, elliptic, ell: int
) -> FibrationReport:
    """Singular fibers of ``(C x E)/Z_l`` over ``P(w1, w2)``.

    ``curve`` is ``x0^l + p(x1, x2)`` with pairwise coprime weights; ``elliptic``
    holds the weights ``(v0, v1, v2)`` of ``E = {y0^l + q = 0}`` with ``v0 = 1``.
    Raises :class:`UnbalancedFibration` if the fibers do not add up to a K3
    surface (sum of alphas 2, sum of Euler numbers 24).
    """
    v = tuple(as_weights(elliptic))
    w = tuple(curve.weights)
    if len(w) != 3 or len(v) != 3:
        raise ShapeError("need a curve in a weighted plane and an elliptic curve")
    if v[0] != 1 or sum(v) != ell * v[0]:
        raise ShapeError(f"{v} is not an elliptic curve with a Z/{ell} action on y0")
    if any(gcd(a, b) != 1 for a, b in itertools.combinations(w, 2)):
        raise ShapeError(f"curve weights {w} are not pairwise coprime")
    form = split_distinguished(curve)
    if form.ell != ell:
        raise ShapeError(f"curve has x0^{form.ell}, expected x0^{ell}")
    if delsarte_shape(curve.polynomial) is None:
        raise ShapeError("only Fermat and chain curves are supported")
    w0, w1, w2 = w
    m1, m2, coeffs = _binary_decomposition(form.rest)
    points: list[FixedPoint] = []
    for mult, count in _root_multiplicities(coeffs):
        theta = Fraction(mult, ell)
        points.append(FixedPoint("torus", count, mult, 1, theta, _fiber_for(theta)))
    for loc, m, other, here in (("x1=0", m1, w1, w2), ("x2=0", m2, w2, w1)):
        theta = _orbifold_theta(m, ell, w0, other, here)
        points.append(FixedPoint(loc, 1, m, here, theta, _fiber_for(theta)))

    tally: Counter = Counter()
    for pt in points:
        if pt.fiber is not None:
            tally[pt.fiber.symbol] += pt.count
    fibers = tuple((tally[s], KODAIRA_BY_SYMBOL[s]) for s in sorted(tally, key=_ORDER.get))
    alpha_sum = sum((c * k.alpha for c, k in fibers), Fraction(0))
    euler_sum = sum(c * k.euler for c, k in fibers)
    if alpha_sum != 2 or euler_sum != 24:
        raise UnbalancedFibration(
            f"fibers {fibers} give alpha sum {alpha_sum} and Euler sum {euler_sum}"
        )
    extra = [pt for pt in points if pt.location != "torus" and pt.fiber is not None]
    fixed = alpha_sum - sum(pt.fiber.alpha for pt in extra)
    alternatives = count_balanced_assignments(fixed, len(extra))
    return FibrationReport(
        base=WeightSystem((w1, w2)),
        fibers=fibers,
        alpha_sum=alpha_sum,
        euler_sum=euler_sum,
        points=tuple(points),
        balanced_alternatives=alternatives,
    )


def count_balanced_assignments(fixed_alpha: Fraction, slots: int, target: Fraction = Fraction(2)) -> int:
    """Number of fiber-type multisets for ``slots`` points that bring the sum to ``target``."""
    if slots == 0:
        return 1 if fixed_alpha == target else 0
    return sum(
        1
        for combo in itertools.combinations_with_replacement(KODAIRA, slots)
        if fixed_alpha + sum(k.alpha for k in combo) == target
    )


@dataclass(frozen=True)
class AlphaCheck:
    sum: Fraction
    is_cy_candidate: bool


def _expand_fibers(fibers) -> list[tuple[int, Fraction, KodairaFiber | None]]:
    out = []
    for item in fibers:
        count = 1
        if isinstance(item, tuple):
            count, item = item
        if isinstance(item, str):
            item = kodaira(item)
        if isinstance(item, KodairaFiber):
            out.append((count, item.alpha, item))
        else:
            out.append((count, Fraction(item), None))
    return out


def alpha_necessary_condition(fibers) -> AlphaCheck:
    """Sum of alpha exponents; a Calabi-Yau total space needs the sum to be 2.

    Items may be Kodaira fibers, symbols, bare exponents, or ``(count, item)``.
    """
    total = sum((c * a for c, a, _ in _expand_fibers(fibers)), Fraction(0))
    return AlphaCheck(total, total == 2)


def picard_summands(fibers) -> str:
    counts: Counter = Counter()
    for c, _, k in _expand_fibers(fibers):
        if k is None:
            raise ValidationError("lattice summands need Kodaira fibers")
        if k.ade:
            counts[k.symbol] += c
    parts = []
    for sym in sorted(counts, key=_ORDER.get):
        lattice = KODAIRA_BY_SYMBOL[sym].ade
        parts.append(lattice if counts[sym] == 1 else f"{lattice}^{counts[sym]}")
    parts.append("H")
    return " ⊕ ".join(parts)


@dataclass(frozen=True)
class K3FiberDatum:
    """Degenerate K3 fiber ``{q(y1..ym) = 0}`` with an isolated Fermat singularity."""

    fiber_exponents: tuple[int, ...]

    @property
    def milnor(self) -> int:
        return milnor_number(self.fiber_exponents)

    @property
    def euler(self) -> int:
        return 24 - self.milnor


def milnor_number(exponents: Sequence[int]) -> int:
    exps = tuple(exponents)
    if not exps or any(m < 2 for m in exps):
        raise ValidationError("Milnor number needs exponents >= 2")
    return prod(m - 1 for m in exps)


def k3_degenerate_fiber_euler(exponents: Sequence[int]) -> int:
    return K3FiberDatum(tuple(exponents)).euler


def euler_bound_holds(chi: int, d: int) -> bool:
    """``-48 d < chi - 48 < 0``: the range for a K3 fibration with ``2d`` singular fibers."""
    return -48 * d < chi - 48 < 0


def fibration_euler(N: int, fiber_euler: int, generic_euler: int = 24, base_euler: int = 2) -> int:
    """Euler number of a fibration with ``N`` equal singular fibers.

    For K3 fibers (``generic_euler = 24``) with ``N > 0`` the result should
    lie strictly between ``48 - 24N`` and 48; a violation is reported with an
    :class:`EulerBoundWarning`.
    """
    if N < 0:
        raise ValidationError("N must be non-negative")
    value = (base_euler - N) * generic_euler + N * fiber_euler
    if generic_euler == 24 and N > 0 and not (48 - 24 * N < value < 48):
        warnings.warn(
            f"Euler number {value} outside ({48 - 24 * N}, 48)", EulerBoundWarning, stacklevel=2
        )
    return value


def extract_fiber(
    x: WeightedHypersurface, keep: int, eliminate: int, parameter=1
) -> WeightedHypersurface:
    """Fiber of the pencil ``x_elim^b = c * x_keep^a`` obtained by eliminating ``x_elim``.

    ``a`` and ``b`` are the smallest exponents making the pencil homogeneous.
    The substitution only gives the true fiber when ``b = 1`` and one of the
    two pencil variables has weight 1; otherwise :class:`UnsafeElimination`
    is raised with the (normalized) cover or quotient attached.  The result
    is normalized.
    """
    if x.polynomial is None:
        raise ValidationError("fiber extraction needs an explicit polynomial")
    n = len(x.weights)
    if keep == eliminate or not (0 <= keep < n and 0 <= eliminate < n):
        raise ValidationError("keep and eliminate must be distinct variable indices")
    c = Fraction(parameter)
    if c == 0:
        raise ValidationError("the pencil parameter must be nonzero")
    wk, we = x.weights[keep], x.weights[eliminate]
    g = gcd(wk, we)
    a, b = we // g, wk // g
    terms = []
    for m, coeff in x.polynomial.terms:
        e = m[eliminate]
        if e % b:
            raise UnsafeElimination(
                f"x{eliminate}^{e} cannot be expressed through the pencil", None
            )
        k = e // b
        new = list(m)
        new[eliminate] = 0
        new[keep] += a * k
        terms.append((tuple(v for i, v in enumerate(new) if i != eliminate), coeff * c**k))
    ws = WeightSystem(tuple(w for i, w in enumerate(x.weights) if i != eliminate))
    poly = WeightedPolynomial(ws, tuple(terms))
    if poly.is_zero() or poly.degrees() != {x.degree}:
        raise ValidationError("this pencil member is degenerate")
    result = normalize(WeightedHypersurface(ws, x.degree, poly)).hypersurface
    if b != 1:
        raise UnsafeElimination(
            f"x{eliminate} enters the pencil with exponent {b}; "
            "the substitution describes a quotient of the fiber",
            result,
        )
    if min(wk, we) != 1:
        raise UnsafeElimination(
            "neither pencil variable has weight 1; the substitution describes a cover of the fiber",
            result,
        )
    return result
