"""Command-line front end.

Hypersurfaces are written ``w0,w1,...:d`` (or ``P(w0,...)[d]``); without a
degree the Calabi-Yau degree ``sum(w)`` is used.  A Fermat, chain or loop
polynomial is picked automatically.  Exit status is 0 on success, 2 for
rejected input and 3 when an internal consistency check fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction

from . import fibration, hodge, resolve, search, twist
from .errors import InvariantViolation, ValidationError
from .reference import validate_k3_automorphism_order
from .weights import (
    WeightedHypersurface,
    as_weights,
    hypersurface_to_json,
    is_quasismooth,
    normalize,
    realize,
)

_SPEC = re.compile(r"^\s*P?\(?([\d,\s]+)\)?\s*(?:[:\[]\s*(\d+)\s*\]?)?\s*$")


def parse_weights(text: str) -> tuple[int, ...]:
    try:
        ws = tuple(int(t) for t in text.strip("()").split(",") if t.strip())
    except ValueError:
        raise ValidationError(f"bad weight list {text!r}") from None
    return tuple(as_weights(ws))


def parse_hypersurface(text: str) -> WeightedHypersurface:
    m = _SPEC.match(text)
    if not m:
        raise ValidationError(f"cannot read hypersurface {text!r}; use w0,w1,...:d")
    ws = parse_weights(m.group(1))
    d = int(m.group(2)) if m.group(2) else sum(ws)
    if d % ws[0] == 0:
        h = twist.distinguished(ws, d // ws[0])
        if h is not None:
            return h
    poly = realize(ws, d)
    if poly is None:
        raise ValidationError(f"no Fermat, chain or loop polynomial of degree {d} in P{ws}")
    return WeightedHypersurface(as_weights(ws), d, poly)


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _csv(payload) -> str:
    rows = payload if isinstance(payload, list) else [payload]
    rows = [r if isinstance(r, dict) else {"value": r} for r in rows]
    columns: list[str] = []
    for r in rows:
        columns.extend(k for k in r if k not in columns)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for r in rows:
        cells = []
        for c in columns:
            v = _jsonable(r.get(c, ""))
            cells.append(json.dumps(v, ensure_ascii=False) if isinstance(v, (list, dict)) else v)
        writer.writerow(cells)
    return buf.getvalue()


def _hyper(h: WeightedHypersurface) -> dict:
    out = hypersurface_to_json(h)
    out["text"] = str(h)
    out["polynomial_text"] = str(h.polynomial)
    return out


def cmd_normalize(args):
    h = parse_hypersurface(args.hypersurface)
    res = normalize(h)
    return {
        "input": str(h),
        "normalized": str(res.hypersurface),
        "polynomial": str(res.hypersurface.polynomial),
        "steps": [{"index": s.index, "factor": s.factor} for s in res.steps],
    }


def cmd_twist(args):
    v1, v2 = parse_hypersurface(args.v1), parse_hypersurface(args.v2)
    res = twist.twist(v1, v2)
    flat = normalize(res.image).hypersurface
    return {
        "v1": str(v1),
        "v2": str(v2),
        "image": _hyper(res.image),
        "normalized": str(flat),
        "quotient_order": res.quotient_order,
        "generically_ell_to_one": res.generically_ell_to_one,
    }


def cmd_check_cy(args):
    h = parse_hypersurface(args.hypersurface)
    source = None
    if args.fibered_from:
        source = twist.TwistInput.of(*(parse_hypersurface(t) for t in args.fibered_from))
    out = twist.cy_conditions(h, source).as_dict()
    out["hypersurface"] = str(h)
    out["quasismooth"] = is_quasismooth(h)
    return out


def cmd_classify(args):
    ws = parse_weights(args.curve)
    curve = twist.distinguished(ws, args.ell)
    if curve is None:
        raise ValidationError(f"no curve x0^{args.ell} + p in P{ws}")
    report = fibration.classify_elliptic_fibers(curve, parse_weights(args.elliptic), args.ell)
    out = report.as_dict()
    out["curve"] = str(curve)
    out["describe"] = report.describe()
    out["picard"] = fibration.picard_summands(report.fibers)
    out["balanced_alternatives"] = report.balanced_alternatives
    return out


def cmd_fib_euler(args):
    value = fibration.fibration_euler(args.N, args.fiber_euler, args.generic, args.base)
    return {"euler": value}


def cmd_euler(args):
    h = parse_hypersurface(args.hypersurface)
    flat = normalize(h).hypersurface
    chi = hodge.orbifold_euler(flat.weights, flat.degree)
    out = {"hypersurface": str(flat), "chi": chi}
    if args.h11 is not None:
        pair = hodge.cy3_hodge(args.h11, chi)
        out.update(h11=pair.h11, h21=pair.h21)
    return out


def cmd_resolve_hj(args):
    chain = resolve.hj_expand(args.alpha, args.beta)
    return {"alpha": args.alpha, "beta": args.beta, "chain": chain}


def cmd_cone(args):
    pts = resolve.cone_lattice_points(args.w0, args.w1, args.w2)
    return [{"alpha": a, "beta": b, "gamma": g} for a, b, g in pts]


def cmd_conifold(args):
    pair = hodge.conifold_transition(args.h11, args.h21, args.nodes, args.relations)
    return {
        "h11": pair.h11,
        "h21": pair.h21,
        "euler_shift": hodge.conifold_euler_shift(args.nodes),
    }


def cmd_genus(args):
    ws = parse_weights(args.weights)
    degrees = parse_weights(args.degrees)
    if len(degrees) == 2:
        return {"kind": "complete-intersection curve", "genus": hodge.ci_curve_genus(*degrees, ws)}
    if len(degrees) == 1:
        return {"kind": "geometric genus", "genus": hodge.geometric_genus(ws, degrees[0])}
    raise ValidationError("give one degree (hypersurface) or two (curve)")


def cmd_k3_order(args):
    check = validate_k3_automorphism_order(args.ell)
    out = {"ell": args.ell, "admissible": check.admissible}
    if check.lattice is not None:
        out.update(picard=check.lattice.picard, transcendental=check.lattice.transcendental)
    return out


def cmd_enumerate(args):
    extra = {"workers": 1 if args.seedless else args.workers}
    if args.ells:
        extra["ells"] = parse_weights(args.ells)
    if args.catalogs:
        extra["catalogs"] = tuple(args.catalogs.split(","))
    if args.shapes:
        extra["shapes"] = tuple(args.shapes.split(","))
    bounds = search.SearchBounds.parse(args.bounds or "11", **extra)
    return search.ENUMERATORS[args.kind](bounds)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--bounds", default=argparse.SUPPRESS, help="w0 window: MAX or MIN:MAX")
    common.add_argument("--seedless", action="store_true", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="wpstwist", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--bounds", default=None, help="w0 window: MAX or MIN:MAX")
    parser.add_argument(
        "--seedless",
        action="store_true",
        help="single-process run; output is byte-identical across runs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("normalize", cmd_normalize, "remove common factors from the weights")
    p.add_argument("hypersurface")

    p = add("twist", cmd_twist, "image of a product under the twist map")
    p.add_argument("v1")
    p.add_argument("v2")

    p = add("check-cy", cmd_check_cy, "Calabi-Yau conditions")
    p.add_argument("hypersurface")
    p.add_argument("--fibered-from", nargs=2, metavar=("V1", "V2"))

    p = add("classify-fibers", cmd_classify, "singular fibers of an elliptic K3 from a twist")
    p.add_argument("curve", help="curve weights w0,w1,w2")
    p.add_argument("elliptic", help="elliptic curve weights, e.g. 1,2,3")
    p.add_argument("--ell", type=int, required=True)

    p = add("fib-euler", cmd_fib_euler, "Euler number of a fibration with N equal singular fibers")
    p.add_argument("N", type=int)
    p.add_argument("fiber_euler", type=int)
    p.add_argument("--generic", type=int, default=24)
    p.add_argument("--base", type=int, default=2)

    p = add("euler", cmd_euler, "orbifold Euler number of a Calabi-Yau hypersurface")
    p.add_argument("hypersurface")
    p.add_argument("--h11", type=int)

    p = add("resolve-hj", cmd_resolve_hj, "Hirzebruch-Jung continued fraction")
    p.add_argument("alpha", type=int)
    p.add_argument("beta", type=int)

    p = add("cone", cmd_cone, "lattice points over the singular vertex of P(w0,w1,w2)")
    for name in ("w0", "w1", "w2"):
        p.add_argument(name, type=int)

    p = add("conifold", cmd_conifold, "Hodge numbers after a conifold transition")
    for name in ("h11", "h21", "nodes", "relations"):
        p.add_argument(name, type=int)

    p = add("genus", cmd_genus, "genus of a curve or geometric genus of a hypersurface")
    p.add_argument("weights")
    p.add_argument("degrees", help="d for a hypersurface, d1,d2 for a curve")

    p = add("k3-order", cmd_k3_order, "admissibility of a K3 automorphism order")
    p.add_argument("ell", type=int)

    p = add("enumerate", cmd_enumerate, "bounded table searches")
    p.add_argument("kind", choices=sorted(search.ENUMERATORS))
    p.add_argument("--ells")
    p.add_argument("--catalogs")
    p.add_argument("--shapes")
    p.add_argument("--workers", type=int, default=1)
    return parser


def render(payload, fmt: str) -> str:
    if isinstance(payload, list) and payload and isinstance(payload[0], search.TableRow):
        return search.rows_to_csv(payload) if fmt == "csv" else search.rows_to_json(payload) + "\n"
    if fmt == "csv":
        return _csv(payload)
    return json.dumps(_jsonable(payload), indent=2, ensure_ascii=False) + "\n"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload = args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    if payload == [] and args.command == "enumerate":
        payload = search.rows_to_csv([]) if args.format == "csv" else "[]\n"
        sys.stdout.write(payload)
        return 0
    sys.stdout.write(render(payload, args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
