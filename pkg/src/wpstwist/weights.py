"""Weighted projective spaces and weighted homogeneous polynomials.

The objects here are immutable and use exact arithmetic only: weights and
exponents are ``int``, coefficients are :class:`fractions.Fraction`.

A hypersurface ``P(w0,...,wn)[d]`` may carry an explicit polynomial.  The
polynomial is stored as a sorted tuple of ``(exponents, coefficient)`` pairs,
which keeps equality and hashing structural.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, prod
from typing import Iterable, Mapping, Sequence

import sympy

from .errors import (
    InvariantViolation,
    NonDivisibleDegree,
    NonDivisibleExponent,
    NonFermatWeights,
    NonIntegerCount,
    UnsupportedShape,
    ValidationError,
)

Monomial = tuple[int, ...]


def gcd_all(values: Iterable[int]) -> int:
    return reduce(gcd, values, 0)


def _fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise ValidationError("floating point coefficients are not accepted")
    return Fraction(value)


def format_fraction(value: Fraction) -> str:
    """Serialize a rational as ``"p/q"``."""
    value = _fraction(value)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class WeightSystem:
    """Positive integer weights ``(w0, ..., wn)`` of a weighted projective space."""

    weights: tuple[int, ...]

    def __post_init__(self):
        ws = tuple(self.weights)
        if not ws:
            raise ValidationError("a weight system needs at least one weight")
        for w in ws:
            if isinstance(w, bool) or not isinstance(w, int) or w < 1:
                raise ValidationError(f"weights must be positive integers, got {w!r}")
        object.__setattr__(self, "weights", ws)

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, i):
        return self.weights[i]

    def __str__(self) -> str:
        return "P(" + ",".join(map(str, self.weights)) + ")"

    @property
    def dimension(self) -> int:
        return len(self.weights) - 1

    @property
    def total(self) -> int:
        return sum(self.weights)

    def degree_of(self, exps: Monomial) -> int:
        if len(exps) != len(self.weights):
            raise ValidationError("monomial length does not match the number of weights")
        return sum(e * w for e, w in zip(exps, self.weights))

    def is_normalized(self) -> bool:
        """True when no ``n`` of the ``n+1`` weights share a factor > 1."""
        ws = self.weights
        if gcd_all(ws) != 1:
            return False
        return all(gcd_all(ws[:i] + ws[i + 1 :]) == 1 for i in range(len(ws)))


def as_weights(ws) -> WeightSystem:
    return ws if isinstance(ws, WeightSystem) else WeightSystem(tuple(ws))


@dataclass(frozen=True)
class WeightedPolynomial:
    """A polynomial with rational coefficients in variables of given weights."""

    weights: WeightSystem
    terms: tuple[tuple[Monomial, Fraction], ...]

    def __post_init__(self):
        ws = as_weights(self.weights)
        merged: dict[Monomial, Fraction] = {}
        for exps, coeff in self.terms:
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(ws):
                raise ValidationError("monomial length does not match the number of weights")
            if any(e < 0 for e in exps):
                raise ValidationError("negative exponent")
            merged[exps] = merged.get(exps, Fraction(0)) + _fraction(coeff)
        terms = tuple(sorted(((m, c) for m, c in merged.items() if c != 0), reverse=True))
        object.__setattr__(self, "weights", ws)
        object.__setattr__(self, "terms", terms)

    @classmethod
    def from_dict(cls, weights, mapping: Mapping[Monomial, object]) -> "WeightedPolynomial":
        return cls(as_weights(weights), tuple(mapping.items()))

    @property
    def nvars(self) -> int:
        return len(self.weights)

    @property
    def monomials(self) -> tuple[Monomial, ...]:
        return tuple(m for m, _ in self.terms)

    def coefficient(self, exps: Monomial) -> Fraction:
        for m, c in self.terms:
            if m == tuple(exps):
                return c
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {self.weights.degree_of(m) for m in self.monomials}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        degs = self.degrees()
        if len(degs) != 1:
            raise ValidationError("polynomial is zero or not weighted homogeneous")
        return degs.pop()

    def variables_used(self) -> set[int]:
        return {i for m in self.monomials for i, e in enumerate(m) if e}

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise ValidationError("point has the wrong number of coordinates")
        pt = [_fraction(x) for x in point]
        total = Fraction(0)
        for exps, coeff in self.terms:
            term = coeff
            for x, e in zip(pt, exps):
                if e:
                    term *= x**e
            total += term
        return total

    def scale(self, factor) -> "WeightedPolynomial":
        factor = _fraction(factor)
        return WeightedPolynomial(self.weights, tuple((m, c * factor) for m, c in self.terms))

    def __neg__(self) -> "WeightedPolynomial":
        return self.scale(-1)

    def __add__(self, other: "WeightedPolynomial") -> "WeightedPolynomial":
        if self.weights != other.weights:
            raise ValidationError("cannot add polynomials over different weight systems")
        return WeightedPolynomial(self.weights, self.terms + other.terms)

    def __sub__(self, other: "WeightedPolynomial") -> "WeightedPolynomial":
        return self + (-other)

    def embed(self, weights, positions: Sequence[int]) -> "WeightedPolynomial":
        """Re-express in a larger variable set; variable ``i`` goes to ``positions[i]``."""
        weights = as_weights(weights)
        size = len(weights)
        terms = []
        for exps, coeff in self.terms:
            new = [0] * size
            for i, e in enumerate(exps):
                if e:
                    new[positions[i]] += e
            terms.append((tuple(new), coeff))
        return WeightedPolynomial(weights, tuple(terms))

    def symbols(self, prefix: str = "x"):
        return sympy.symbols(f"{prefix}0:{self.nvars}")

    def to_sympy(self, syms=None):
        syms = syms if syms is not None else self.symbols()
        expr = sympy.Integer(0)
        for exps, coeff in self.terms:
            mono = sympy.Rational(coeff.numerator, coeff.denominator)
            for s, e in zip(syms, exps):
                mono *= s**e
            expr += mono
        return expr

    def format(self, names: Sequence[str] | None = None) -> str:
        names = list(names) if names is not None else [f"x{i}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        pieces = []
        for exps, coeff in self.terms:
            factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e]
            body = "*".join(factors)
            mag = abs(coeff)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            pieces.append(("-" if coeff < 0 else "+", text))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __str__(self) -> str:
        return self.format()


def monomial(*exps: int) -> Monomial:
    return tuple(exps)


@dataclass(frozen=True)
class WeightedHypersurface:
    """``P(w)[d]``, optionally with an explicit defining polynomial."""

    weights: WeightSystem
    degree: int
    polynomial: WeightedPolynomial | None = None

    def __post_init__(self):
        ws = as_weights(self.weights)
        object.__setattr__(self, "weights", ws)
        if not isinstance(self.degree, int) or self.degree < 1:
            raise ValidationError("degree must be a positive integer")
        poly = self.polynomial
        if poly is not None:
            if poly.weights != ws:
                raise ValidationError("polynomial weights differ from the ambient weights")
            if poly.is_zero():
                raise ValidationError("defining polynomial is zero")
            if poly.degrees() != {self.degree}:
                raise ValidationError(
                    f"polynomial is not weighted homogeneous of degree {self.degree}"
                )

    def __str__(self) -> str:
        return f"{self.weights}[{self.degree}]"

    @property
    def is_cy_sufficient(self) -> bool:
        return self.degree == self.weights.total

    def with_polynomial(self, poly: WeightedPolynomial) -> "WeightedHypersurface":
        return WeightedHypersurface(self.weights, self.degree, poly)


@dataclass(frozen=True)
class NormalizationStep:
    """One reduction.  ``index`` is None when all weights were divided."""

    index: int | None
    factor: int


@dataclass(frozen=True)
class Normalized:
    hypersurface: WeightedHypersurface
    steps: tuple[NormalizationStep, ...]


def normalize(h: WeightedHypersurface) -> Normalized:
    """Reduce to normalized weights without changing the variety.

    A common factor of all weights is removed first.  After that the rule is:
    find the largest ``a > 1`` dividing every weight except ``w_i`` (smallest
    ``i`` on ties), divide those weights and the degree by ``a`` and divide the
    exponent of ``x_i`` in every monomial by ``a``.  Repeat until no such pair
    exists.
    """
    ws = list(h.weights)
    d = h.degree
    terms = [(list(m), c) for m, c in h.polynomial.terms] if h.polynomial else None
    steps: list[NormalizationStep] = []
    while True:
        g = gcd_all(ws)
        if g > 1:
            if d % g:
                raise NonDivisibleDegree(f"degree {d} not divisible by common weight factor {g}")
            ws = [w // g for w in ws]
            d //= g
            steps.append(NormalizationStep(None, g))
            continue
        best = None
        for i in range(len(ws)):
            a = gcd_all(ws[:i] + ws[i + 1 :])
            if a > 1 and (best is None or a > best[0]):
                best = (a, i)
        if best is None:
            break
        a, i = best
        if d % a:
            raise NonDivisibleDegree(f"degree {d} not divisible by {a} (weights {tuple(ws)})")
        if terms is not None:
            for exps, _ in terms:
                if exps[i] % a:
                    raise NonDivisibleExponent(
                        f"exponent {exps[i]} of x{i} not divisible by {a}"
                    )
                exps[i] //= a
        ws = [w if j == i else w // a for j, w in enumerate(ws)]
        d //= a
        steps.append(NormalizationStep(i, a))
    new_ws = WeightSystem(tuple(ws))
    poly = None
    if terms is not None:
        poly = WeightedPolynomial(new_ws, tuple((tuple(m), c) for m, c in terms))
    return Normalized(WeightedHypersurface(new_ws, d, poly), tuple(steps))


def _term_options(exps: Monomial) -> list[tuple[int, int | None]]:
    support = [i for i, e in enumerate(exps) if e]
    if len(support) == 1:
        return [(support[0], None)]
    if len(support) == 2:
        i, j = support
        opts = []
        if exps[j] == 1:
            opts.append((i, j))
        if exps[i] == 1:
            opts.append((j, i))
        return opts
    return []


def _pointer_kind(pointer: dict[int, int | None]) -> str | None:
    """``"fermat"``, ``"chain"`` or ``"loop"`` for an injective partner map, else None."""
    targets = [j for j in pointer.values() if j is not None]
    if len(targets) != len(set(targets)):
        return None
    if not targets:
        return "fermat"
    for start in pointer:
        seen = {start}
        cur = pointer[start]
        while cur is not None:
            if cur in seen:
                return "loop"
            seen.add(cur)
            cur = pointer[cur]
    return "chain"


_RANK = {"fermat": 0, "chain": 1, "loop": 2}


def delsarte_shape(poly: WeightedPolynomial) -> str | None:
    """Classify a polynomial as ``"fermat"``, ``"chain"``, ``"loop"`` or neither.

    Every variable must own exactly one monomial, either ``x_i^a`` or
    ``x_i^a * x_j``, and no variable may be the partner of two monomials.
    Partners then form chains ending at a pure power (``"chain"``) and
    possibly closed cycles (``"loop"``).  Sums of these blocks are exactly
    the invertible polynomials with an isolated singularity.
    """
    n = poly.nvars
    if len(poly.terms) != n:
        return None
    options = [_term_options(m) for m in poly.monomials]
    if any(not o for o in options):
        return None
    best = None
    for choice in itertools.product(*options):
        owners = [own for own, _ in choice]
        if sorted(owners) != list(range(n)):
            continue
        kind = _pointer_kind({own: partner for own, partner in choice})
        if kind is not None and (best is None or _RANK[kind] < _RANK[best]):
            best = kind
            if kind == "fermat":
                break
    return best


def is_quasismooth(h: WeightedHypersurface, max_vars: int = 6) -> bool:
    """Decide whether the affine cone over ``h`` is smooth away from the vertex.

    Fermat, chain and loop polynomials are quasismooth outright.  Anything else
    falls back to checking that the partial derivatives have only the origin
    as common zero, via a Groebner basis over the rationals; that fallback is
    limited to ``max_vars`` variables.
    """
    if h.polynomial is None:
        raise ValidationError("quasismoothness needs an explicit polynomial")
    poly = h.polynomial
    if delsarte_shape(poly) is not None:
        return True
    if poly.nvars > max_vars:
        raise UnsupportedShape(
            f"{poly.nvars} variables exceed the brute-force limit of {max_vars}"
        )
    syms = poly.symbols()
    expr = poly.to_sympy(syms)
    partials = [sympy.diff(expr, s) for s in syms]
    partials = [p for p in partials if p != 0]
    if not partials:
        return False
    basis = sympy.groebner(partials, *syms, order="grevlex")
    if list(basis.exprs) == [1]:
        return True
    return bool(basis.is_zero_dimensional)


def _find_monomial(ws: Sequence[int], d: int, among: Sequence[int]) -> dict[int, int] | None:
    """Exponents on the variables ``among`` giving degree ``d``; the first variable is maximized."""
    if d == 0:
        return {}
    if not among:
        return None
    i, rest = among[0], among[1:]
    for a in range(d // ws[i], -1, -1):
        left = d - a * ws[i]
        if left and (not rest or count_monomials(ws, left, rest) == 0):
            continue
        sub = _find_monomial(ws, left, rest)
        if sub is not None:
            return {i: a, **sub} if a else sub
    return None


def _fletcher_failures(ws: Sequence[int], d: int, has_pure, has_partner):
    n = len(ws)
    for r in range(1, n + 1):
        for subset in itertools.combinations(range(n), r):
            if has_pure(subset):
                continue
            partners = [k for k in range(n) if k not in subset and has_partner(subset, k)]
            if len(partners) < r:
                yield subset, partners


def general_quasismooth(weights, d: int) -> bool:
    """Whether the general hypersurface of degree ``d`` in ``P(w)`` is quasismooth.

    For every nonempty set ``I`` of coordinates there must be a monomial of
    degree ``d`` in the ``x_i, i in I`` alone, or else at least ``|I|``
    distinct coordinates ``x_e`` outside ``I`` each admitting a monomial
    ``x_I^M x_e`` of degree ``d``.
    """
    ws = tuple(as_weights(weights))

    def pure(subset):
        return count_monomials(ws, d, subset) > 0

    def partner(subset, k):
        return ws[k] <= d and (ws[k] == d or count_monomials(ws, d - ws[k], subset) > 0)

    return next(_fletcher_failures(ws, d, pure, partner), None) is None


def general_polynomial(weights, d: int) -> WeightedPolynomial | None:
    """A sparse monomial support whose general member is quasismooth, with unit coefficients.

    Starts from one monomial ``x_i^a`` or ``x_i^a x_j`` per variable and adds
    witnesses for every coordinate stratum the criterion of
    :func:`general_quasismooth` still flags.  Returns None when the general
    member itself is not quasismooth.
    """
    ws = tuple(as_weights(weights))
    if not general_quasismooth(ws, d):
        return None
    n = len(ws)
    support: list[tuple[int, ...]] = []

    def add(exps: dict[int, int]) -> None:
        mono = tuple(exps.get(i, 0) for i in range(n))
        if mono not in support:
            support.append(mono)

    for i in range(n):
        opts = _variable_options(ws, d, i)
        if opts:
            a, j = opts[0]
            add({i: a, **({} if j is None else {j: 1})})

    def pure(subset):
        return any(all(m[k] == 0 for k in range(n) if k not in subset) for m in support)

    def partner(subset, e):
        return any(
            m[e] == 1 and all(m[k] == 0 for k in range(n) if k not in subset and k != e)
            for m in support
        )

    while True:
        failure = next(_fletcher_failures(ws, d, pure, partner), None)
        if failure is None:
            break
        subset, have = failure
        exps = _find_monomial(ws, d, subset)
        if exps is not None:
            add(exps)
            continue
        for e in range(n):
            if e in subset or e in have or ws[e] > d:
                continue
            exps = _find_monomial(ws, d - ws[e], subset)
            if exps is not None:
                add({**exps, e: 1})
                break
        else:
            raise InvariantViolation(f"no witness for the coordinate set {subset}")
    return WeightedPolynomial(WeightSystem(ws), tuple((m, 1) for m in support))


def count_monomials(weights, d: int, restrict_to: Iterable[int] | None = None) -> int:
    """Number of monomials of weighted degree ``d`` (optionally in a subset of variables)."""
    ws = as_weights(weights)
    if d < 0:
        return 0
    idx = range(len(ws)) if restrict_to is None else sorted(set(restrict_to))
    table = [1] + [0] * d
    for i in idx:
        w = ws[i]
        for k in range(w, d + 1):
            table[k] += table[k - w]
    return table[d]


def weighted_bezout(degrees: Sequence[int], weights) -> Fraction:
    """``prod(degrees) / prod(weights)`` for a complete intersection of points."""
    ws = as_weights(weights)
    if len(degrees) != ws.dimension:
        raise ValidationError("need one degree per dimension of the ambient space")
    value = Fraction(prod(degrees), prod(ws))
    if value.denominator != 1:
        warnings.warn(
            f"Bezout count {value} is not an integer; orbifold points are involved",
            NonIntegerCount,
            stacklevel=2,
        )
    return value


def build_fermat(weights, d: int) -> WeightedPolynomial:
    ws = as_weights(weights)
    bad = [w for w in ws if d % w]
    if bad:
        raise NonFermatWeights(f"weights {bad} do not divide degree {d}")
    n = len(ws)
    return WeightedPolynomial(
        ws, tuple((tuple(d // w if j == i else 0 for j in range(n)), 1) for i, w in enumerate(ws))
    )


def _variable_options(ws: Sequence[int], d: int, i: int) -> list[tuple[int, int | None]]:
    opts: list[tuple[int, int | None]] = []
    if d % ws[i] == 0:
        opts.append((d // ws[i], None))
    for j, wj in enumerate(ws):
        if j != i and d > wj and (d - wj) % ws[i] == 0:
            opts.append(((d - wj) // ws[i], j))
    return opts


def build_chain(weights, d: int, loops: bool = True) -> WeightedPolynomial:
    """Fermat, chain or loop polynomial of degree ``d``; simpler shapes are preferred.

    Each variable gets either ``x_i^a`` or ``x_i^a * x_j`` with the partner
    exponent fixed to 1.  The search is a small backtracking over partners in
    increasing index order, so the result is deterministic.  Closed partner
    cycles are only tried when no chain exists and ``loops`` is set.
    """
    ws = tuple(as_weights(weights))
    n = len(ws)
    options = [_variable_options(ws, d, i) for i in range(n)]
    if any(not o for o in options):
        raise UnsupportedShape(f"no invertible polynomial of degree {d} in {ws}")
    chosen: list[tuple[int, int | None]] = []

    def search(i: int, allowed) -> bool:
        if i == n:
            return _pointer_kind({k: chosen[k][1] for k in range(n)}) in allowed
        used = {p for _, p in chosen if p is not None}
        for a, partner in options[i]:
            if partner is not None and partner in used:
                continue
            chosen.append((a, partner))
            if search(i + 1, allowed):
                return True
            chosen.pop()
        return False

    found = search(0, ("fermat", "chain"))
    if not found and loops:
        found = search(0, ("loop",))
    if not found:
        raise UnsupportedShape(f"no invertible polynomial of degree {d} in {ws}")
    terms = []
    for i, (a, partner) in enumerate(chosen):
        exps = [0] * n
        exps[i] = a
        if partner is not None:
            exps[partner] = 1
        terms.append((tuple(exps), 1))
    return WeightedPolynomial(WeightSystem(ws), tuple(terms))


def realize(weights, d: int) -> WeightedPolynomial | None:
    """A Fermat polynomial if one exists, else a chain or loop polynomial, else None."""
    try:
        return build_fermat(weights, d)
    except NonFermatWeights:
        pass
    try:
        return build_chain(weights, d)
    except UnsupportedShape:
        return None


def equivalent_up_to_rescaling(a: WeightedHypersurface, b: WeightedHypersurface) -> bool:
    """Same hypersurface up to permuting variables of equal weight and rescaling them.

    Coefficients are only compared through their supports, which is exact when
    the exponent vectors are linearly independent (true for Fermat and chain
    polynomials): the torus then acts transitively on nonzero coefficients.
    """
    if a.degree != b.degree or sorted(a.weights) != sorted(b.weights):
        return False
    if a.polynomial is None or b.polynomial is None:
        return a.polynomial is None and b.polynomial is None
    pa, pb = a.polynomial, b.polynomial
    if len(pa.terms) != len(pb.terms):
        return False
    mat = sympy.Matrix([list(m) for m in pa.monomials])
    if mat.rank() != len(pa.terms):
        raise UnsupportedShape("coefficient comparison needs independent exponent vectors")
    target = set(pb.monomials)
    wa, wb = list(a.weights), list(b.weights)
    n = len(wa)
    candidates = [[j for j in range(n) if wb[j] == wa[i]] for i in range(n)]
    for perm in itertools.product(*candidates):
        if len(set(perm)) != n:
            continue
        moved = set()
        for m in pa.monomials:
            new = [0] * n
            for i, e in enumerate(m):
                new[perm[i]] = e
            moved.add(tuple(new))
        if moved == target:
            return True
    return False


@dataclass(frozen=True)
class CompleteIntersection:
    """Complete intersection in a product of weighted projective spaces.

    ``multidegrees[k]`` holds the degree of equation ``k`` in each factor.
    Equations, when given, are polynomials in the concatenated variables of
    all factors.
    """

    factors: tuple[WeightSystem, ...]
    multidegrees: tuple[tuple[int, ...], ...]
    equations: tuple[WeightedPolynomial, ...] | None = None

    def __post_init__(self):
        factors = tuple(as_weights(f) for f in self.factors)
        degs = tuple(tuple(int(x) for x in row) for row in self.multidegrees)
        object.__setattr__(self, "factors", factors)
        object.__setattr__(self, "multidegrees", degs)
        for row in degs:
            if len(row) != len(factors):
                raise ValidationError("each multidegree needs one entry per factor")
        if self.equations is not None:
            eqs = tuple(self.equations)
            object.__setattr__(self, "equations", eqs)
            if len(eqs) != len(degs):
                raise ValidationError("one equation per multidegree row expected")
            for eq, row in zip(eqs, degs):
                if eq.weights != self.joint_weights:
                    raise ValidationError("equation variables do not match the ambient factors")
                if self.equation_degrees(eq) != {row}:
                    raise ValidationError(f"equation is not multihomogeneous of degree {row}")

    @property
    def joint_weights(self) -> WeightSystem:
        return WeightSystem(tuple(w for f in self.factors for w in f))

    def _slices(self):
        out, start = [], 0
        for f in self.factors:
            out.append(slice(start, start + len(f)))
            start += len(f)
        return out

    def equation_degrees(self, eq: WeightedPolynomial) -> set[tuple[int, ...]]:
        found = set()
        for m in eq.monomials:
            found.add(
                tuple(f.degree_of(m[s]) for f, s in zip(self.factors, self._slices()))
            )
        return found

    def configuration_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Rows are factors, columns are equations."""
        return tuple(
            tuple(row[f] for row in self.multidegrees) for f in range(len(self.factors))
        )

    @property
    def dimension(self) -> int:
        return sum(f.dimension for f in self.factors) - len(self.multidegrees)

    def is_cy(self) -> bool:
        return all(
            sum(col) == f.total for f, col in zip(self.factors, self.configuration_matrix())
        )

    def __str__(self) -> str:
        amb = "x".join(str(f) for f in self.factors)
        rows = ",".join("[" + ",".join(map(str, r)) + "]" for r in self.configuration_matrix())
        return f"{amb}[{rows}]"


def polynomial_to_json(poly: WeightedPolynomial) -> list[dict]:
    return [{"exps": list(m), "coeff": format_fraction(c)} for m, c in poly.terms]


def hypersurface_to_json(h: WeightedHypersurface) -> dict:
    out: dict = {"weights": list(h.weights), "degree": h.degree}
    if h.polynomial is not None:
        out["terms"] = polynomial_to_json(h.polynomial)
    return out


def hypersurface_from_json(data: Mapping) -> WeightedHypersurface:
    try:
        ws = WeightSystem(tuple(data["weights"]))
        d = data["degree"]
        terms = data.get("terms")
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed hypersurface record: {exc}") from exc
    poly = None
    if terms is not None:
        try:
            poly = WeightedPolynomial(
                ws, tuple((tuple(t["exps"]), Fraction(str(t["coeff"]))) for t in terms)
            )
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"malformed term: {exc}") from exc
    return WeightedHypersurface(ws, d, poly)


def complete_intersection_to_json(ci: CompleteIntersection) -> dict:
    out: dict = {
        "factors": [list(f) for f in ci.factors],
        "multidegrees": [list(r) for r in ci.multidegrees],
        "configuration": [list(r) for r in ci.configuration_matrix()],
    }
    if ci.equations is not None:
        out["equations"] = [polynomial_to_json(eq) for eq in ci.equations]
    return out
