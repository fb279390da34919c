"""JSON-in, JSON-out command-line front end.

Every subcommand is a thin delegate to a library function; output is a
single JSON document on stdout.  Exit codes: 0 on success, 1 on a domain
error (reported as an error JSON on stdout), 2 on a usage or schema
error (diagnostic on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys

from .characters import (
    Character,
    NSymSeries,
    char_to_series,
    convolve,
    series_inverse,
    series_mul,
)
from .compositions import iterated_restrict, restrict_contract
from .geometry import (
    Point,
    composition_of_point,
    max_face_vertices,
    normally_equivalent,
    orbit_vertices,
)
from .hopf_algebra import HopfElement, antipode, coproduct, inject
from .invariants import chi
from .jsonio import composition_from_json, composition_to_json, frac_from_str, frac_to_str
from .selftest import run_selftest


class SchemaError(Exception):
    """Malformed payload; maps to exit code 2."""


def _parse_json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{what}: invalid JSON ({exc})") from exc


def _parse_point(text: str) -> Point:
    data = _parse_json(text, "point")
    try:
        return Point.from_json(data)
    except ValueError as exc:
        raise SchemaError(f"point: {exc}") from exc


def _parse_composition(text: str):
    data = _parse_json(text, "composition")
    try:
        return composition_from_json(data)
    except ValueError as exc:
        raise SchemaError(f"composition: {exc}") from exc


def _parse_functional(text: str, point: Point) -> dict:
    data = _parse_json(text, "functional")
    if not isinstance(data, dict):
        raise SchemaError("functional: expected a JSON object of label -> rational")
    try:
        return {str(k): frac_from_str(v) for k, v in data.items()}
    except ValueError as exc:
        raise SchemaError(f"functional: {exc}") from exc


def _load_json_file(path: str, what: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise SchemaError(f"{what}: cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{what}: invalid JSON in {path} ({exc})") from exc


def _points_sorted(points) -> list[dict]:
    return [p.to_json() for p in sorted(points, key=lambda p: p.values)]


def cmd_classify(args) -> dict:
    p = _parse_point(args.point[0])
    return {"composition": composition_to_json(composition_of_point(p))}


def cmd_vertices(args) -> dict:
    p = _parse_point(args.point[0])
    return {"vertices": _points_sorted(orbit_vertices(p))}


def cmd_maxface(args) -> dict:
    p = _parse_point(args.point[0])
    y = _parse_functional(args.functional, p)
    if set(y) != set(p.ground.labels):
        raise SchemaError("functional: must be defined on exactly the point's labels")
    return {"vertices": _points_sorted(max_face_vertices(p, y))}


def cmd_normeq(args) -> dict:
    if len(args.point) != 2:
        raise SchemaError("normeq: expected exactly two --point arguments")
    p = _parse_point(args.point[0])
    q = _parse_point(args.point[1])
    return {"normally_equivalent": normally_equivalent(p, q)}


def cmd_delta(args) -> dict:
    alpha = _parse_composition(args.composition)
    if (args.size is None) == (args.sizes is None):
        raise SchemaError("delta: give exactly one of --size or --sizes")
    if args.size is not None:
        left, right = restrict_contract(alpha, args.size)
        return {
            "restricted": composition_to_json(left),
            "contracted": composition_to_json(right),
        }
    sizes = _parse_json(args.sizes, "sizes")
    if not isinstance(sizes, list) or any(not isinstance(s, int) or isinstance(s, bool) for s in sizes):
        raise SchemaError("sizes: expected a JSON array of integers")
    factors = iterated_restrict(alpha, sizes)
    return {"factors": [composition_to_json(f) for f in factors]}


def cmd_coproduct(args) -> dict:
    alpha = _parse_composition(args.composition)
    terms = coproduct(inject(alpha))
    ordered = sorted(
        terms.coeffs.items(),
        key=lambda kv: (kv[0][0].degree, tuple(a.parts for a in kv[0][0]), tuple(a.parts for a in kv[0][1])),
    )
    return {
        "terms": [
            {
                "coeff": frac_to_str(v),
                "left": [composition_to_json(a) for a in left],
                "right": [composition_to_json(a) for a in right],
            }
            for (left, right), v in ordered
        ]
    }


def cmd_antipode(args) -> dict:
    data = _parse_json(args.element, "element")
    try:
        x = HopfElement.from_json(data)
    except ValueError as exc:
        raise SchemaError(f"element: {exc}") from exc
    return {"element": antipode(x).to_json()}


def cmd_chi(args) -> dict:
    alpha = _parse_composition(args.composition)
    return chi(alpha).to_json(monomial=args.monomial)


def cmd_convolve(args) -> dict:
    if len(args.char) != 2:
        raise SchemaError("convolve: expected exactly two --char files")
    try:
        zeta = Character.from_json(_load_json_file(args.char[0], "char"), degree=args.degree)
        psi = Character.from_json(_load_json_file(args.char[1], "char"), degree=args.degree)
    except ValueError as exc:
        raise SchemaError(f"char: {exc}") from exc
    result = convolve(zeta, psi)
    return {"character": result.to_json(), "series": char_to_series(result).to_json()}


def _load_series(path: str) -> NSymSeries:
    try:
        return NSymSeries.from_json(_load_json_file(path, "series"))
    except ValueError as exc:
        raise SchemaError(f"series: {exc}") from exc


def cmd_series_mul(args) -> dict:
    if len(args.series) != 2:
        raise SchemaError("series-mul: expected exactly two --series files")
    f = _load_series(args.series[0])
    g = _load_series(args.series[1])
    return series_mul(f, g).to_json()


def cmd_series_inv(args) -> dict:
    f = _load_series(args.series[0])
    return series_inverse(f).to_json()


def cmd_count(args) -> dict:
    from .hopf_monoid import count_structures

    return {"count": count_structures(args.n)}


def cmd_selftest(args) -> dict:
    return run_selftest(args.max_n)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitopes",
        description="Exact calculations with orbit polytopes, compositions, and their Hopf structures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        return p

    p = add("classify", cmd_classify, help="composition of a point")
    p.add_argument("--point", action="append", required=True, help="JSON object label -> rational")

    p = add("vertices", cmd_vertices, help="orbit vertices of a point")
    p.add_argument("--point", action="append", required=True)

    p = add("maxface", cmd_maxface, help="vertices maximizing a functional")
    p.add_argument("--point", action="append", required=True)
    p.add_argument("--functional", required=True, help="JSON object label -> rational")

    p = add("normeq", cmd_normeq, help="normal equivalence of two points")
    p.add_argument("--point", action="append", required=True, help="give twice")

    p = add("delta", cmd_delta, help="cut a composition by weight(s)")
    p.add_argument("--composition", required=True, help="JSON array of parts")
    p.add_argument("--size", type=int, help="single cut weight")
    p.add_argument("--sizes", help="JSON array of piece weights")

    p = add("coproduct", cmd_coproduct, help="coproduct of a composition class")
    p.add_argument("--composition", required=True)

    p = add("antipode", cmd_antipode, help="antipode of an algebra element")
    p.add_argument("--element", required=True, help="JSON array of {coeff, multiset} terms")

    p = add("chi", cmd_chi, help="polynomial invariant of a composition class")
    p.add_argument("--composition", required=True)
    p.add_argument("--monomial", action="store_true", help="also expand in the monomial basis")

    p = add("convolve", cmd_convolve, help="convolve two characters from files")
    p.add_argument("--char", action="append", required=True, help="path to a character JSON file; give twice")
    p.add_argument("--degree", type=int, default=6)

    p = add("series-mul", cmd_series_mul, help="multiply two ribbon series from files")
    p.add_argument("--series", action="append", required=True, help="give twice")

    p = add("series-inv", cmd_series_inv, help="invert a ribbon series from a file")
    p.add_argument("--series", action="append", required=True)

    p = add("count", cmd_count, help="number of classes on n labels")
    p.add_argument("--n", type=int, required=True)

    p = add("selftest", cmd_selftest, help="run the oracle-equivalence suites")
    p.add_argument("--max-n", type=int, default=5, dest="max_n")

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        payload = args.fn(args)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(json.dumps({"error": str(exc)}))
        return 1
    print(json.dumps(payload))
    if args.command == "selftest" and payload.get("failed"):
        return 1
    return 0


def main() -> None:
    sys.exit(run())
