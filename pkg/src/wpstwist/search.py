"""Bounded searches for twist-map images: K3 surfaces and Calabi-Yau threefolds.

Every search fixes a base ``{x0^l + p = 0}`` whose remaining weights add up
to ``w0`` and a Fermat fiber ``{y0^l + q = 0}`` from a catalog, then takes
the twist image.  Rows are sorted by ``(w0, w1, ..., l, fiber)`` and carry a
``known`` flag saying whether they occur in the reference lists.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Iterator, Sequence

from .errors import (
    InvariantViolation,
    NonFermatWeights,
    UnbalancedFibration,
    UnsupportedShape,
    ValidationError,
)
from .fibration import classify_elliptic_fibers
from .hodge import orbifold_euler
from .reference import CATALOGS, FiberSpec, is_listed
from .twist import twist, twist_weights
from .weights import (
    WeightedHypersurface,
    WeightedPolynomial,
    WeightSystem,
    as_weights,
    build_chain,
    build_fermat,
    delsarte_shape,
    general_polynomial,
    general_quasismooth,
    is_quasismooth,
    normalize,
)

ALLOWED_ELLS = (3, 4, 6, 12, 42)
SHAPES = ("fermat", "chain", "loop", "general", "image")


@dataclass(frozen=True)
class SearchBounds:
    max_w0: int
    min_w0: int = 1
    ells: tuple[int, ...] = ALLOWED_ELLS
    catalogs: tuple[str, ...] = ("elliptic", "k3")
    shapes: tuple[str, ...] = SHAPES
    workers: int = 1

    def __post_init__(self):
        if self.max_w0 < 1 or self.min_w0 < 1:
            raise ValidationError("w0 bounds must be positive")
        bad = set(self.ells) - set(ALLOWED_ELLS)
        if bad:
            raise ValidationError(f"unsupported ell values {sorted(bad)}")
        unknown = set(self.catalogs) - set(CATALOGS)
        if unknown:
            raise ValidationError(f"unknown fiber catalogs {sorted(unknown)}")
        if not self.shapes or set(self.shapes) - set(SHAPES):
            raise ValidationError(f"shapes must be a non-empty subset of {SHAPES}")
        if self.workers < 1:
            raise ValidationError("workers must be positive")

    def fibers(self, *kinds: str) -> tuple[FiberSpec, ...]:
        out = []
        for kind in kinds:
            if kind in self.catalogs:
                out.extend(s for s in CATALOGS[kind] if s.ell in self.ells)
        return tuple(out)

    @classmethod
    def parse(cls, text: str, **extra) -> "SearchBounds":
        """``"11"``, ``"5:11"`` or ``"min:max"`` for the ``w0`` window."""
        lo, sep, hi = text.partition(":")
        try:
            if sep:
                return cls(max_w0=int(hi), min_w0=int(lo), **extra)
            return cls(max_w0=int(lo), **extra)
        except ValueError as exc:
            if isinstance(exc, ValidationError):
                raise
            raise ValidationError(f"bad bounds {text!r}") from None


@dataclass(frozen=True)
class TableRow:
    base: tuple[int, ...]
    fiber: tuple[int, ...]
    ell: int
    image: tuple[int, ...]
    degree: int
    chi: int | None = None
    fibers: str | None = None
    shape: str = "fermat"
    known: bool = False
    polynomial: str = field(default="", compare=False)

    @property
    def sort_key(self):
        return (self.base, self.ell, self.fiber)

    def as_dict(self) -> dict:
        return {
            "base_weights": list(self.base),
            "fiber_weights": list(self.fiber),
            "ell": self.ell,
            "image_weights": list(self.image),
            "degree": self.degree,
            "chi": self.chi,
            "fibers": self.fibers,
            "shape": self.shape,
            "status": "listed" if self.known else "unlisted",
            "polynomial": self.polynomial,
        }


CSV_COLUMNS = ("base_weights", "fiber_weights", "ell", "image_weights", "degree", "chi", "fibers", "status")


def _fmt(ws: Sequence[int]) -> str:
    return "(" + ",".join(map(str, ws)) + ")"


def rows_to_csv(rows: Sequence[TableRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in rows:
        writer.writerow(
            [
                _fmt(r.base),
                _fmt(r.fiber),
                r.ell,
                _fmt(r.image),
                r.degree,
                "" if r.chi is None else r.chi,
                r.fibers or "",
                "listed" if r.known else "unlisted",
            ]
        )
    return buf.getvalue()


def rows_to_json(rows: Sequence[TableRow]) -> str:
    return json.dumps([r.as_dict() for r in rows], indent=2, ensure_ascii=False)


def _partitions(total: int, parts: int, smallest: int = 1) -> Iterator[tuple[int, ...]]:
    """Non-decreasing tuples of positive integers with the given sum."""
    if parts == 1:
        if total >= smallest:
            yield (total,)
        return
    for first in range(smallest, total // parts + 1):
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


def _has_monomial(ws: Sequence[int], d: int, i: int) -> bool:
    if d % ws[i] == 0:
        return True
    return any(j != i and d >= wj and (d - wj) % ws[i] == 0 for j, wj in enumerate(ws))


def _realize(ws: Sequence[int], d: int, shapes: Sequence[str]) -> tuple[str, WeightedPolynomial] | None:
    if "fermat" in shapes:
        try:
            return "fermat", build_fermat(ws, d)
        except NonFermatWeights:
            pass
    # every variable needs x_i^a or x_i^a x_j; this prunes almost every candidate
    if not all(_has_monomial(ws, d, i) for i in range(len(ws))):
        return None
    if "chain" in shapes or "loop" in shapes:
        try:
            poly = build_chain(ws, d, loops="loop" in shapes)
        except UnsupportedShape:
            poly = None
        if poly is not None and delsarte_shape(poly) in shapes:
            return delsarte_shape(poly), poly
    if "general" in shapes:
        poly = general_polynomial(ws, d)
        if poly is not None:
            return "general", poly
    return None


def _base(w0: int, rest: tuple[int, ...], ell: int, shapes) -> tuple[str, WeightedHypersurface] | None:
    ws = WeightSystem((w0,) + rest)
    found = _realize(rest, ell * w0, shapes)
    if found is None:
        return None
    shape, p = found
    lead = WeightedPolynomial(ws, (((ell,) + (0,) * len(rest), 1),))
    return shape, WeightedHypersurface(ws, ell * w0, lead + p.embed(ws, range(1, len(ws))))


def _fiber(spec: FiberSpec) -> WeightedHypersurface:
    ws = as_weights(spec.weights)
    return WeightedHypersurface(ws, spec.degree, build_fermat(ws, spec.degree))


def _image(base: WeightedHypersurface, spec: FiberSpec, shape: str) -> WeightedHypersurface:
    image = twist(base, _fiber(spec), check=False).image
    if shape == "general":
        ok = general_quasismooth(image.weights, image.degree)
    else:
        ok = is_quasismooth(image)
    if not ok:
        raise InvariantViolation(f"twist image {image} is not quasismooth")
    if image.degree != image.weights.total:
        raise InvariantViolation(f"twist image {image} is not Calabi-Yau")
    return image


def _row(kind: str, w: tuple[int, ...], spec: FiberSpec, shape: str, poly: str, image: WeightedHypersurface) -> TableRow:
    sorted_image = tuple(sorted(twist_weights(w, spec.weights)))
    chi = None
    if kind != "k3":
        flat = normalize(image).hypersurface
        chi = orbifold_euler(flat.weights, flat.degree, check=False)
    return TableRow(
        base=w,
        fiber=spec.weights,
        ell=spec.ell,
        image=sorted_image,
        degree=image.degree,
        chi=chi,
        shape=shape,
        known=is_listed(w, spec.weights, spec.ell, sorted_image, image.degree),
        polynomial=poly,
    )


def _twist_row(kind: str, base: WeightedHypersurface, shape: str, spec: FiberSpec) -> TableRow:
    w = tuple(base.weights)
    row = _row(kind, w, spec, shape, str(base.polynomial), _image(base, spec, shape))
    if kind == "k3":
        try:
            report = classify_elliptic_fibers(base, spec.weights, spec.ell)
        except UnbalancedFibration as exc:
            raise InvariantViolation(f"base {w} with {spec.name}: {exc}") from exc
        row = replace(row, fibers=report.describe())
    return row


def _image_row(kind: str, w: tuple[int, ...], spec: FiberSpec) -> TableRow | None:
    """Row for a base with no quasismooth ``x0^l + p`` whose image family is still quasismooth.

    The twist image ``p - q`` is then a singular member of a family whose
    general member is quasismooth; the polynomial column shows a support for
    that general member in the image coordinates.
    """
    ws = twist_weights(w, spec.weights)
    d = spec.ell * w[0] * spec.weights[0]
    if d != sum(ws) or not all(_has_monomial(ws, d, i) for i in range(len(ws))):
        return None
    poly = general_polynomial(ws, d)
    if poly is None:
        return None
    image = WeightedHypersurface(WeightSystem(ws), d, poly)
    return _row(kind, w, spec, "image", str(poly), image)


_LAYOUT = {
    # kind -> (number of weights after w0, fiber catalogs)
    "k3": (2, ("elliptic",)),
    "cy3-elliptic": (3, ("elliptic",)),
    "cy3-k3": (2, ("k3", "k3-extra")),
}


def rows_for_w0(kind: str, w0: int, bounds: SearchBounds) -> list[TableRow]:
    """All rows of one search with the given ``w0``."""
    parts, catalogs = _LAYOUT[kind]
    specs = bounds.fibers(*catalogs)
    # fibers are read off an explicit base curve, so K3 rows need one
    image_rows = "image" in bounds.shapes and kind != "k3"
    out = []
    for rest in _partitions(w0, parts):
        if not WeightSystem((w0,) + rest).is_normalized():
            continue
        for ell in sorted({s.ell for s in specs}):
            found = _base(w0, rest, ell, bounds.shapes)
            for spec in specs:
                if spec.ell != ell:
                    continue
                if found is not None:
                    out.append(_twist_row(kind, found[1], found[0], spec))
                elif image_rows:
                    row = _image_row(kind, (w0,) + rest, spec)
                    if row is not None:
                        out.append(row)
    return out


def _run(kind: str, bounds: SearchBounds) -> list[TableRow]:
    w0s = range(max(2, bounds.min_w0), bounds.max_w0 + 1)
    rows: list[TableRow] = []
    if bounds.workers > 1 and len(w0s) > 1:
        with ProcessPoolExecutor(max_workers=bounds.workers) as pool:
            for chunk in pool.map(rows_for_w0, [kind] * len(w0s), w0s, [bounds] * len(w0s)):
                rows.extend(chunk)
    else:
        for w0 in w0s:
            rows.extend(rows_for_w0(kind, w0, bounds))
    rows.sort(key=lambda r: r.sort_key)
    return rows


def enumerate_k3(bounds: SearchBounds) -> list[TableRow]:
    """Elliptic K3 surfaces ``(C x E)/Z_l`` over ``P^1`` with their singular fibers."""
    return _run("k3", bounds)


def enumerate_cy3_elliptic(bounds: SearchBounds) -> list[TableRow]:
    """Elliptic threefolds ``(S x E)/Z_l`` with ``S`` a surface ``x0^l + p(x1, x2, x3)``; ``chi`` attached."""
    return _run("cy3-elliptic", bounds)


def enumerate_cy3_k3fibered(bounds: SearchBounds) -> list[TableRow]:
    """K3-fibered threefolds ``(C x K)/Z_l`` over ``P^1``; ``chi`` attached.

    The ``k3-extra`` catalog is only searched when named in ``bounds.catalogs``.
    """
    return _run("cy3-k3", bounds)


ENUMERATORS = {
    "k3": enumerate_k3,
    "cy3-elliptic": enumerate_cy3_elliptic,
    "cy3-k3": enumerate_cy3_k3fibered,
}
