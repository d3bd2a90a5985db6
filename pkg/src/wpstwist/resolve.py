"""Cyclic quotient singularities, their resolution graphs and blowdowns."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import NotCoprime, NothingToContract, ValidationError


def hj_expand(alpha: int, beta: int) -> list[int]:
    """Hirzebruch-Jung continued fraction ``alpha/beta = b1 - 1/(b2 - ...)``.

    Requires ``0 < beta < alpha`` coprime; ``alpha = 1`` gives the empty chain.
    """
    if alpha == 1:
        return []
    if not 0 < beta < alpha:
        raise ValidationError(f"need 0 < beta < alpha, got ({alpha}, {beta})")
    if gcd(alpha, beta) != 1:
        raise NotCoprime(f"gcd({alpha}, {beta}) != 1")
    out = []
    a, b = alpha, beta
    while b:
        q = -(-a // b)  # ceiling
        out.append(q)
        a, b = b, q * b - a
    return out


def hj_value(chain: Sequence[int]) -> Fraction:
    """Inverse of :func:`hj_expand`."""
    if not chain:
        raise ValidationError("empty chain")
    value = Fraction(chain[-1])
    for b in reversed(chain[:-1]):
        value = b - 1 / value
    return value


def beta_from_weight(alpha: int, k: int) -> int:
    """The ``beta`` with ``k * beta = 1 mod alpha``."""
    if gcd(alpha, k) != 1:
        raise NotCoprime(f"gcd({alpha}, {k}) != 1")
    if alpha == 1:
        return 0
    return pow(k, -1, alpha)


def central_self_intersection(points: Iterable[tuple[int, int]], order: int) -> Fraction:
    """``b`` for the central curve: ``-1/order + sum(beta_i / alpha_i)``.

    The central curve then has self-intersection ``-b``.
    """
    pts = list(points)
    if order == 0:
        raise ValidationError("order must be nonzero")
    return Fraction(-1, order) + sum((Fraction(b, a) for a, b in pts), Fraction(0))


@dataclass(frozen=True)
class Curve:
    name: str
    self_intersection: int
    genus: int = 0
    arithmetic_genus: int = 0
    singularities: tuple[str, ...] = ()

    @property
    def is_exceptional(self) -> bool:
        """A smooth rational (-1)-curve."""
        return self.self_intersection == -1 and self.arithmetic_genus == 0


@dataclass(frozen=True)
class Point:
    """An intersection point with the local intersection numbers of curve pairs."""

    curves: frozenset[str]
    local: tuple[tuple[frozenset[str], int], ...]

    def mult(self, a: str, b: str) -> int:
        key = frozenset((a, b))
        return sum(v for k, v in self.local if k == key)


@dataclass(frozen=True)
class Configuration:
    """Curves on a smooth surface with their intersection points."""

    curves: tuple[Curve, ...]
    points: tuple[Point, ...] = ()

    @classmethod
    def from_edges(cls, curves: Sequence[Curve], edges: Iterable[tuple[str, str]]) -> "Configuration":
        names = {c.name for c in curves}
        pts = []
        for a, b in edges:
            if a not in names or b not in names or a == b:
                raise ValidationError(f"bad edge {a}-{b}")
            pts.append(Point(frozenset((a, b)), ((frozenset((a, b)), 1),)))
        return cls(tuple(curves), tuple(pts))

    def curve(self, name: str) -> Curve:
        for c in self.curves:
            if c.name == name:
                return c
        raise ValidationError(f"no curve named {name}")

    def intersection(self, a: str, b: str) -> int:
        if a == b:
            return self.curve(a).self_intersection
        return sum(p.mult(a, b) for p in self.points)

    def names(self) -> list[str]:
        return [c.name for c in self.curves]


def blowdown(config: Configuration, name: str | None = None) -> Configuration:
    """Contract one smooth rational (-1)-curve (the first one, unless named).

    Every curve ``D`` meeting the contracted curve ``E`` with ``m = D.E`` gains
    ``m^2`` in self-intersection and ``m(m-1)/2`` in arithmetic genus; all
    points of ``E`` collapse to one point where two such curves meet with
    additional multiplicity ``m_i m_j``.
    """
    if name is None:
        target = next((c for c in config.curves if c.is_exceptional), None)
        if target is None:
            raise NothingToContract("no smooth rational (-1)-curve")
    else:
        target = config.curve(name)
        if not target.is_exceptional:
            raise NothingToContract(f"{name} is not a smooth rational (-1)-curve")
    e = target.name
    on_e = [p for p in config.points if e in p.curves]
    off_e = [p for p in config.points if e not in p.curves]
    others = [c for c in config.curves if c.name != e]
    m = {c.name: sum(p.mult(c.name, e) for p in on_e) for c in others}

    new_curves = []
    for c in others:
        k = m[c.name]
        sing = c.singularities
        if k >= 2:
            local = [p.mult(c.name, e) for p in on_e if p.mult(c.name, e)]
            if local == [2]:
                sing = sing + ("cusp",)
            elif local == [1, 1]:
                sing = sing + ("node",)
            else:
                sing = sing + (f"singular point of multiplicity {k}",)
        new_curves.append(
            Curve(
                c.name,
                c.self_intersection + k * k,
                c.genus,
                c.arithmetic_genus + k * (k - 1) // 2,
                sing,
            )
        )

    through = sorted({n for p in on_e for n in p.curves if n != e})
    local: dict[frozenset[str], int] = {}
    for i, a in enumerate(through):
        for b in through[i + 1 :]:
            old = sum(p.mult(a, b) for p in on_e)
            value = old + m[a] * m[b]
            if value:
                local[frozenset((a, b))] = value
    new_points = list(off_e)
    if through:
        new_points.append(
            Point(frozenset(through), tuple(sorted(local.items(), key=lambda kv: sorted(kv[0]))))
        )
    return Configuration(tuple(new_curves), tuple(new_points))


def blowdown_all(config: Configuration) -> tuple[Configuration, list[str]]:
    """Contract (-1)-curves until none is left; returns the contracted names in order."""
    done = []
    while any(c.is_exceptional for c in config.curves):
        name = next(c.name for c in config.curves if c.is_exceptional)
        config = blowdown(config, name)
        done.append(name)
    return config, done


def star_configuration(
    central: int,
    arms: Sequence[tuple[int, int]],
    central_genus: int = 0,
    names: Sequence[Sequence[str]] | None = None,
) -> Configuration:
    """Central curve ``C`` of self-intersection ``central`` with one chain per ``(alpha, beta)``.

    Each arm is the Hirzebruch-Jung chain of ``alpha/beta``; its first curve
    meets the central curve.  Arm curves are called ``E{i}_{j}`` unless
    ``names`` supplies one list of names per arm.
    """
    curves = [Curve("C", central, central_genus, central_genus)]
    edges = []
    for i, (a, b) in enumerate(arms):
        chain = hj_expand(a, b)
        if names is not None and len(names[i]) != len(chain):
            raise ValidationError(f"arm {i} has {len(chain)} curves, got {len(names[i])} names")
        prev = "C"
        for j, bj in enumerate(chain):
            name = names[i][j] if names is not None else f"E{i}_{j}"
            curves.append(Curve(name, -bj))
            edges.append((prev, name))
            prev = name
    return Configuration.from_edges(curves, edges)


def exotic_configuration() -> Configuration:
    """The (-1)-curve ``C`` meeting chains for ``(2,1)``, ``(3,1)`` and ``(11,2)``.

    The ``(11,2)`` arm is ``F`` (self-intersection -6, meeting ``C``) followed
    by ``D`` (-2).  Contracting ``C``, then ``A``, then ``B`` turns ``F`` into
    a cuspidal curve of arithmetic genus 1 and square 0.
    """
    return star_configuration(-1, [(2, 1), (3, 1), (11, 2)], names=[["A"], ["B"], ["F", "D"]])


def cone_lattice_points(w0: int, w1: int, w2: int) -> list[tuple[int, int, int]]:
    """Lattice points ``(alpha, beta, gamma)`` over the singular point ``(1:0:0)``.

    For each ``1 <= alpha < w0`` take the smallest ``beta``, ``gamma`` with
    ``w0 beta > w1 alpha`` and ``w0 gamma > w2 alpha`` and keep the triple when
    ``alpha (w1 + w2) - w0 (beta + gamma) + w0 >= 0``.
    """
    for w in (w0, w1, w2):
        if w < 1:
            raise ValidationError("weights must be positive")
    out = []
    for a in range(1, w0):
        b = w1 * a // w0 + 1
        g = w2 * a // w0 + 1
        if a * (w1 + w2) - w0 * (b + g) + w0 >= 0:
            out.append((a, b, g))
    return out
