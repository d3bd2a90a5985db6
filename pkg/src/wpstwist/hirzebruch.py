"""Divisor classes on Hirzebruch surfaces ``F_n``.

Classes are written ``a C0 + b F`` where ``C0`` is a section with
``C0^2 = n`` and ``F`` is a fiber.  The negative section is
``Cinf = C0 - n F``.  The anticanonical class is ``2 C0 - (n - 2) F``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NoIntegralClass, ValidationError


@dataclass(frozen=True)
class HirzebruchClass:
    n: int
    a: int
    b: int

    def __post_init__(self):
        if self.n < 0:
            raise ValidationError("Hirzebruch index must be non-negative")

    def _check(self, other: "HirzebruchClass") -> None:
        if other.n != self.n:
            raise ValidationError("classes live on different Hirzebruch surfaces")

    def __add__(self, other: "HirzebruchClass") -> "HirzebruchClass":
        self._check(other)
        return HirzebruchClass(self.n, self.a + other.a, self.b + other.b)

    def __sub__(self, other: "HirzebruchClass") -> "HirzebruchClass":
        return self + other.scale(-1)

    def scale(self, k: int) -> "HirzebruchClass":
        return HirzebruchClass(self.n, k * self.a, k * self.b)

    def __rmul__(self, k: int) -> "HirzebruchClass":
        return self.scale(k)

    def dot(self, other: "HirzebruchClass") -> int:
        self._check(other)
        return self.n * self.a * other.a + self.a * other.b + self.b * other.a

    @property
    def self_intersection(self) -> int:
        return self.dot(self)

    def in_cinf_basis(self) -> tuple[int, int]:
        """Coefficients ``(a, b')`` with the class equal to ``a Cinf + b' F``."""
        return self.a, self.b + self.n * self.a

    @classmethod
    def from_cinf_basis(cls, n: int, a: int, b: int) -> "HirzebruchClass":
        return cls(n, a, b - n * a)

    def format_cinf(self) -> str:
        a, b = self.in_cinf_basis()
        return f"{a}C∞{b:+d}F".replace("+", " + ").replace("-", " - ")

    def __str__(self) -> str:
        return f"{self.a}C0{self.b:+d}F".replace("+", " + ").replace("-", " - ")


def section(n: int) -> HirzebruchClass:
    return HirzebruchClass(n, 1, 0)


def fiber(n: int) -> HirzebruchClass:
    return HirzebruchClass(n, 0, 1)


def negative_section(n: int) -> HirzebruchClass:
    return HirzebruchClass(n, 1, -n)


def canonical(n: int) -> HirzebruchClass:
    return HirzebruchClass(n, -2, n - 2)


def cover_euler(k: int, branch_points: int) -> int:
    """Riemann-Hurwitz for a ``k``-fold cover of P^1 totally branched at the given points."""
    if k < 1 or branch_points < 0:
        raise ValidationError("need k >= 1 and a non-negative number of branch points")
    return 2 * k - branch_points * (k - 1)


def class_from_adjunction(n: int, a: int, euler: int) -> HirzebruchClass:
    """Solve ``2g - 2 = C.(C + K)`` for ``C = a C0 + b F`` given ``a`` and ``e(C) = 2 - 2g``.

    For ``a = 1`` every ``b`` works and ``b = 0`` is returned.
    """
    # C.(C+K) = a^2 n + 2ab - a n - 2a - 2b
    lhs_without_b = a * a * n - a * n - 2 * a
    coeff_b = 2 * a - 2
    rhs = -euler
    if coeff_b == 0:
        if lhs_without_b != rhs:
            raise NoIntegralClass(f"no class with C.F = {a} and Euler number {euler} on F_{n}")
        return HirzebruchClass(n, a, 0)
    b = Fraction(rhs - lhs_without_b, coeff_b)
    if b.denominator != 1:
        raise NoIntegralClass(f"adjunction gives b = {b}, not an integer")
    return HirzebruchClass(n, a, int(b))


@dataclass(frozen=True)
class DiscriminantReport:
    cover_euler: int
    curve: HirzebruchClass
    delta: HirzebruchClass
    minus12K: HirzebruchClass
    matches: bool


def hirzebruch_discriminant(
    k: int,
    branch_points: int,
    n: int,
    alpha_curve: Fraction = Fraction(1, 6),
    alpha_infinity: Fraction = Fraction(1, 6),
) -> DiscriminantReport:
    """Compare the discriminant of a constant-modulus fibration with ``-12K``.

    The curve ``Sigma`` of singular fibers is a ``k``-fold cover of the base of
    ``F_n`` (so ``Sigma.F = k``), totally branched at ``branch_points`` points.
    The negative section carries fibers of exponent ``alpha_infinity``.  Each
    component enters the discriminant with multiplicity ``12 alpha``.
    """
    e = cover_euler(k, branch_points)
    curve = class_from_adjunction(n, k, e)
    mult_curve = 12 * Fraction(alpha_curve)
    mult_inf = 12 * Fraction(alpha_infinity)
    if mult_curve.denominator != 1 or mult_inf.denominator != 1:
        raise ValidationError("12 * alpha must be an integer")
    delta = curve.scale(int(mult_curve)) + negative_section(n).scale(int(mult_inf))
    minus12K = canonical(n).scale(-12)
    return DiscriminantReport(e, curve, delta, minus12K, delta == minus12K)
