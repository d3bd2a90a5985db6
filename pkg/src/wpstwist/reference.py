"""Fiber catalogs and known rows used as recall targets by the enumerators."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class FiberSpec:
    """A Fermat fiber ``y0^ell + q(y1..ym)`` with ``v0 = 1``."""

    name: str
    weights: tuple[int, ...]
    ell: int

    @property
    def degree(self) -> int:
        return self.ell * self.weights[0]


ELLIPTIC = (
    FiberSpec("E1", (1, 1, 1), 3),
    FiberSpec("E2", (1, 1, 2), 4),
    FiberSpec("E3", (1, 2, 3), 6),
)

K3 = (
    FiberSpec("K1", (1, 1, 2, 2), 6),
    FiberSpec("K2", (1, 2, 3, 6), 12),
    FiberSpec("K3", (1, 6, 14, 21), 42),
)

# Opt-in: these give the second fibration of (2,2,1,1,6)[12] but their
# total spaces fall outside the Euler range of a genuine K3 fibration.
K3_EXTRA = (
    FiberSpec("K4", (1, 1, 1, 3), 6),
    FiberSpec("K5", (4, 1, 1, 6), 3),
)

CATALOGS = {
    "elliptic": ELLIPTIC,
    "k3": K3,
    "k3-extra": K3_EXTRA,
}


def fiber_by_name(name: str) -> FiberSpec:
    for spec in ELLIPTIC + K3 + K3_EXTRA:
        if spec.name == name:
            return spec
    raise KeyError(name)


@dataclass(frozen=True)
class LatticeDatum:
    order: int
    picard: str
    transcendental: str


K3_LATTICES = (
    LatticeDatum(66, "U", "U⊕U⊕E8⊕E8"),
    LatticeDatum(44, "U", "U⊕U⊕E8⊕E8"),
    LatticeDatum(42, "U⊕E8", "U⊕U⊕E8"),
    LatticeDatum(36, "U⊕E8", "U⊕U⊕E8"),
    LatticeDatum(28, "U⊕E8", "U⊕U⊕E8"),
    LatticeDatum(12, "U⊕E8⊕E8", "U⊕U"),
)


@dataclass(frozen=True)
class AutomorphismCheck:
    admissible: bool
    lattice: LatticeDatum | None


def validate_k3_automorphism_order(ell: int) -> AutomorphismCheck:
    """Purely non-symplectic automorphisms of a K3 surface have order at most 66."""
    datum = next((x for x in K3_LATTICES if x.order == ell), None)
    return AutomorphismCheck(1 <= ell <= 66, datum)


# (base, fiber, ell, image, degree, fibers)
K3_ROWS = (
    ((2, 1, 1), (1, 1, 1), 3, (1, 1, 2, 2), 6, "6×IV"),
    ((2, 1, 1), (1, 1, 2), 4, (1, 1, 2, 4), 8, "8×III"),
    ((2, 1, 1), (1, 2, 3), 6, (1, 1, 4, 6), 12, "12×II"),
    ((3, 1, 2), (1, 1, 2), 4, (1, 2, 3, 6), 12, "6×III, 1×I0*"),
    ((3, 1, 2), (1, 2, 3), 6, (1, 2, 6, 9), 18, "9×II, 1×I0*"),
    ((4, 1, 3), (1, 1, 1), 3, (1, 3, 4, 4), 12, "4×IV, 1×IV*"),
    ((4, 1, 3), (1, 2, 3), 6, (1, 3, 8, 12), 24, "8×II, 1×IV*"),
    ((5, 1, 4), (1, 1, 2), 4, (1, 4, 5, 10), 20, "5×III, 1×III*"),
    ((7, 1, 6), (1, 2, 3), 6, (1, 6, 14, 21), 42, "7×II, 1×II*"),
    ((5, 2, 3), (1, 2, 3), 6, (2, 3, 10, 15), 30, "5×II, 1×I0*, 1×IV*"),
    ((11, 5, 6), (1, 2, 3), 6, (5, 6, 22, 33), 66, "2×II, 2×II*"),
)

# (base, fiber, ell, image, degree)
ELLIPTIC_CY3_ROWS = (
    ((3, 1, 1, 1), (1, 1, 1), 3, (1, 1, 1, 3, 3), 9),
    ((3, 1, 1, 1), (1, 1, 2), 4, (1, 1, 1, 3, 6), 12),
    ((3, 1, 1, 1), (1, 2, 3), 6, (1, 1, 1, 6, 9), 18),
    ((4, 1, 1, 2), (1, 1, 1), 3, (1, 1, 2, 4, 4), 12),
    ((4, 1, 1, 2), (1, 1, 2), 4, (1, 1, 2, 4, 8), 16),
    ((4, 1, 1, 2), (1, 2, 3), 6, (1, 1, 2, 8, 12), 24),
    ((5, 1, 1, 3), (1, 1, 1), 3, (1, 1, 3, 5, 5), 15),
    ((5, 1, 1, 3), (1, 2, 3), 6, (1, 1, 3, 10, 15), 30),
    ((5, 1, 2, 2), (1, 1, 2), 4, (1, 2, 2, 5, 10), 20),
    ((5, 1, 2, 2), (1, 2, 3), 6, (1, 2, 2, 10, 15), 30),
    ((6, 1, 1, 4), (1, 1, 2), 4, (1, 1, 4, 6, 12), 24),
    ((6, 1, 1, 4), (1, 2, 3), 6, (1, 1, 4, 12, 18), 36),
    ((6, 1, 2, 3), (1, 1, 1), 3, (1, 2, 3, 6, 6), 18),
    ((6, 1, 2, 3), (1, 1, 2), 4, (1, 2, 3, 6, 12), 24),
    ((6, 1, 2, 3), (1, 2, 3), 6, (1, 2, 3, 12, 18), 36),
    ((7, 1, 2, 4), (1, 1, 2), 4, (1, 2, 4, 7, 14), 28),
    ((7, 1, 3, 3), (1, 1, 1), 3, (1, 3, 3, 7, 7), 21),
    ((7, 1, 3, 3), (1, 2, 3), 6, (1, 3, 3, 14, 21), 42),
    ((7, 2, 2, 3), (1, 2, 3), 6, (2, 2, 3, 14, 21), 42),
    ((8, 1, 1, 6), (1, 1, 1), 3, (1, 1, 6, 8, 8), 24),
    ((8, 1, 1, 6), (1, 2, 3), 6, (1, 1, 6, 16, 24), 48),
    ((8, 1, 3, 4), (1, 2, 3), 6, (1, 3, 4, 16, 24), 48),
    ((8, 2, 3, 3), (1, 2, 3), 6, (2, 3, 3, 16, 24), 48),
    ((9, 1, 2, 6), (1, 1, 2), 4, (1, 2, 6, 9, 18), 36),
    ((9, 1, 2, 6), (1, 2, 3), 6, (1, 2, 6, 18, 27), 54),
    ((9, 1, 4, 4), (1, 1, 2), 4, (1, 4, 4, 9, 18), 36),
    ((9, 2, 3, 4), (1, 1, 2), 4, (2, 3, 4, 9, 18), 36),
    ((10, 1, 1, 8), (1, 1, 2), 4, (1, 1, 8, 10, 20), 40),
    ((10, 2, 3, 5), (1, 1, 1), 3, (2, 3, 5, 10, 10), 30),
    ((10, 2, 3, 5), (1, 2, 3), 6, (2, 3, 5, 20, 30), 60),
    ((10, 1, 3, 6), (1, 1, 1), 3, (1, 3, 6, 10, 10), 30),
    ((10, 1, 3, 6), (1, 2, 3), 6, (1, 3, 6, 20, 30), 60),
    ((10, 3, 3, 4), (1, 2, 3), 6, (3, 3, 4, 20, 30), 60),
    ((12, 1, 2, 9), (1, 1, 1), 3, (1, 2, 9, 12, 12), 36),
    ((12, 1, 2, 9), (1, 2, 3), 6, (1, 2, 9, 24, 36), 72),
    ((13, 1, 6, 6), (1, 2, 3), 6, (1, 6, 6, 26, 39), 78),
    ((14, 1, 1, 12), (1, 2, 3), 6, (1, 1, 12, 28, 42), 84),
)

# (base, image, degree, chi, h11); fiber (1,2,3), ell = 6
LARGE_CHI_ROWS = (
    ((581, 41, 42, 498), (41, 42, 498, 1162, 1743), 3486, 960, 491),
    ((498, 36, 41, 421), (36, 41, 421, 996, 1494), 2988, 960, 491),
    ((539, 36, 41, 462), (36, 41, 462, 1078, 1617), 3234, 900, 462),
    ((469, 31, 42, 396), (31, 42, 396, 938, 1407), 2814, 900, 462),
    ((463, 31, 41, 391), (31, 41, 391, 926, 1389), 2778, 900, 462),
    ((433, 31, 36, 366), (31, 36, 366, 866, 1299), 2598, 840, 433),
    ((483, 28, 41, 414), (28, 41, 414, 966, 1449), 2898, 804, 416),
    ((414, 24, 41, 349), (24, 41, 349, 828, 1242), 2484, 804, 416),
    ((385, 28, 31, 326), (28, 31, 326, 770, 1155), 2310, 744, 387),
    ((434, 21, 41, 372), (21, 41, 372, 868, 1302), 2604, 720, 377),
    ((372, 18, 41, 313), (18, 41, 313, 744, 1116), 2232, 720, 377),
)

# (base, fiber, ell, image, degree, chi)
K3_FIBERED_ROWS = (
    ((2, 1, 1), (1, 1, 2, 2), 6, (1, 1, 2, 4, 4), 12, -192),
    ((2, 1, 1), (1, 2, 3, 6), 12, (1, 1, 4, 6, 12), 24, -312),
    ((2, 1, 1), (1, 6, 14, 21), 42, (1, 1, 12, 28, 42), 84, -960),
    ((3, 1, 2), (1, 1, 2, 2), 6, (1, 2, 3, 6, 6), 18, -144),
    ((3, 1, 2), (1, 2, 3, 6), 12, (1, 2, 6, 9, 18), 36, -228),
    ((3, 1, 2), (1, 6, 14, 21), 42, (1, 2, 18, 42, 63), 126, -720),
    ((4, 1, 3), (1, 1, 2, 2), 6, (1, 3, 4, 8, 8), 24, -120),
    ((4, 1, 3), (1, 2, 3, 6), 12, (1, 3, 8, 12, 24), 48, -192),
    ((4, 1, 3), (1, 6, 14, 21), 42, (1, 3, 24, 56, 84), 168, -624),
    ((5, 1, 4), (1, 2, 3, 6), 12, (1, 4, 10, 15, 30), 60, -168),
    ((7, 1, 6), (1, 2, 3, 6), 12, (1, 6, 14, 21, 42), 84, -132),
    ((7, 1, 6), (1, 6, 14, 21), 42, (1, 6, 42, 98, 147), 294, -480),
    ((5, 2, 3), (1, 1, 2, 2), 6, (2, 3, 5, 10, 10), 30, -72),
    ((5, 2, 3), (1, 2, 3, 6), 12, (2, 3, 10, 15, 30), 60, -108),
    ((5, 2, 3), (1, 6, 14, 21), 42, (2, 3, 30, 70, 105), 210, -384),
)


def _key(base, fiber, ell, image, degree):
    return (tuple(base), tuple(fiber), ell, tuple(sorted(image)), degree)


KNOWN_KEYS = frozenset(
    [_key(*r[:5]) for r in K3_ROWS]
    + [_key(*r) for r in ELLIPTIC_CY3_ROWS]
    + [_key(r[0], (1, 2, 3), 6, r[1], r[2]) for r in LARGE_CHI_ROWS]
    + [_key(*r[:5]) for r in K3_FIBERED_ROWS]
)


def is_listed(base, fiber, ell, image, degree) -> bool:
    return _key(base, fiber, ell, image, degree) in KNOWN_KEYS
