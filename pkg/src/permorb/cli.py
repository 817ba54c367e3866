"""Command-line front end.

Subcommands::

    permorb modules   gram.json [--json]
    permorb qdims     gram.json [--json]
    permorb fuse      gram.json LABEL LABEL [--json]
    permorb decompose gram.json LABEL [--json]
    permorb table     gram.json [--json|--csv] [--max-l N]
    permorb verify    gram.json [--json] [--max-l N]

The Gram matrix is read from a JSON document ``{"gram": [[...]]}``.  Labels
use the compact grammar ``D(coords;eps) | N(coords,coords) | T(coords;eps)``
with rational coordinates like ``1/2``.  Exit codes: 0 on success (and on a
fully passing verification), 1 when a verification check fails, 2 on any
input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction
from typing import List, Sequence

from . import __version__
from .errors import ParseError, PermorbError
from .lattice import GramLattice, Vector, validate_lattice
from .orbifold import (
    OrbifoldLabel,
    decompose_module,
    diag,
    enumerate_modules,
    fuse_orbifold,
    fusion_table,
    label_sort_key,
    nondiag,
    qdim_orbifold,
    twisted,
)
from .render import format_label, label_json, vl_json, vlplus_json
from .verify import verify

__all__ = ["parse_label", "load_gram", "run", "main"]

_LABEL_RE = re.compile(r"^\s*([DNT])\(([^()]*)\)\s*$")


def load_gram(path: str) -> GramLattice:
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict) or "gram" not in doc:
        raise ParseError(f"{path}: expected a JSON object with a 'gram' key")
    gram = doc["gram"]
    if not isinstance(gram, list) or not all(isinstance(r, list) for r in gram):
        raise ParseError(f"{path}: 'gram' must be a list of rows")
    for row in gram:
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ParseError(f"{path}: Gram entries must be integers, got {x!r}")
    return validate_lattice(gram)


def _parse_coords(text: str, dim: int) -> Vector:
    parts = [p for p in text.split(",") if p.strip()]
    if len(parts) != dim:
        raise ParseError(f"expected {dim} coordinates, got {len(parts)} in '{text}'")
    try:
        return tuple(Fraction(p.strip()) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational in '{text}': {exc}") from None


def parse_label(lat: GramLattice, text: str) -> OrbifoldLabel:
    """Parse compact label text and canonicalize against the lattice."""
    m = _LABEL_RE.match(text)
    if not m:
        raise ParseError(f"label '{text}' does not match D(..;e) | N(..,..) | T(..;e)")
    kind, body = m.group(1), m.group(2)
    if kind == "N":
        body = body.replace(";", ",")
        parts = [p for p in body.split(",") if p.strip()]
        if len(parts) != 2 * lat.dim:
            raise ParseError(
                f"off-diagonal label needs {2 * lat.dim} coordinates, got {len(parts)}"
            )
        x = _parse_coords(",".join(parts[: lat.dim]), lat.dim)
        y = _parse_coords(",".join(parts[lat.dim :]), lat.dim)
        return nondiag(lat, x, y)
    if ";" not in body:
        raise ParseError(f"label '{text}' is missing the ';eps' part")
    coords_text, eps_text = body.rsplit(";", 1)
    if eps_text.strip() not in ("0", "1"):
        raise ParseError(f"eps must be 0 or 1, got '{eps_text.strip()}'")
    eps = int(eps_text)
    x = _parse_coords(coords_text, lat.dim)
    return diag(lat, x, eps) if kind == "D" else twisted(lat, x, eps)


def _sorted_labels(lat: GramLattice, labels) -> List[OrbifoldLabel]:
    return sorted(labels, key=lambda m: label_sort_key(lat, m))


def _emit(doc: dict, as_json: bool, text_lines: Sequence[str]) -> None:
    if as_json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_modules(args) -> int:
    lat = load_gram(args.gram)
    mods = enumerate_modules(lat)
    doc = {
        "dim": lat.dim,
        "det": lat.det,
        "count": len(mods),
        "modules": [label_json(m) | {"label": format_label(m)} for m in mods],
    }
    _emit(doc, args.json, [format_label(m) for m in mods])
    return 0


def _cmd_qdims(args) -> int:
    lat = load_gram(args.gram)
    mods = enumerate_modules(lat)
    rows = [(format_label(m), str(qdim_orbifold(lat, m))) for m in mods]
    doc = {
        "det": lat.det,
        "qdims": [{"label": lab, "qdim": q} for lab, q in rows],
    }
    _emit(doc, args.json, [f"{lab}  {q}" for lab, q in rows])
    return 0


def _cmd_fuse(args) -> int:
    lat = load_gram(args.gram)
    a = parse_label(lat, args.a)
    b = parse_label(lat, args.b)
    prod = fuse_orbifold(lat, a, b)
    out = _sorted_labels(lat, prod)
    doc = {
        "a": format_label(a),
        "b": format_label(b),
        "result": [{"label": format_label(c), "multiplicity": prod[c]} for c in out],
    }
    _emit(doc, args.json, [format_label(c) for c in out])
    return 0


def _cmd_decompose(args) -> int:
    lat = load_gram(args.gram)
    m = parse_label(lat, args.label)
    parts = decompose_module(lat, m)
    doc = {
        "label": format_label(m),
        "summands": [{"vl": vl_json(v), "vlplus": vlplus_json(p)} for v, p in parts],
    }
    lines = [
        json.dumps({"vl": vl_json(v), "vlplus": vlplus_json(p)}, sort_keys=True)
        for v, p in parts
    ]
    _emit(doc, args.json, lines)
    return 0


def _cmd_table(args) -> int:
    lat = load_gram(args.gram)
    table = fusion_table(lat, max_l=args.max_l)
    labels = table.labels
    if args.csv:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["a", "b", "c", "multiplicity"])
        for a, b, prod in table.products():
            for c in _sorted_labels(lat, prod):
                writer.writerow([format_label(a), format_label(b), format_label(c), prod[c]])
        sys.stdout.write(buf.getvalue())
        return 0
    doc = {
        "labels": [format_label(m) for m in labels],
        "products": [
            {
                "a": format_label(a),
                "b": format_label(b),
                "result": [
                    {"label": format_label(c), "multiplicity": prod[c]}
                    for c in _sorted_labels(lat, prod)
                ],
            }
            for a, b, prod in table.products()
        ],
    }
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for a, b, prod in table.products():
            rhs = " + ".join(format_label(c) for c in _sorted_labels(lat, prod))
            print(f"{format_label(a)} x {format_label(b)} = {rhs}")
    return 0


def _cmd_verify(args) -> int:
    lat = load_gram(args.gram)
    report = verify(lat, max_l=args.max_l)
    doc = {
        "all_passed": report.all_passed,
        "checks": [
            {"name": r.name, "passed": r.passed, "detail": r.detail} for r in report.results
        ],
    }
    lines = [
        f"{'PASS' if r.passed else 'FAIL'} {r.name}" + (f": {r.detail}" if r.detail else "")
        for r in report.results
    ]
    _emit(doc, args.json, lines)
    return 0 if report.all_passed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permorb",
        description="Exact fusion data of 2-permutation orbifolds of lattice VOAs",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("gram", help="path to a JSON file {\"gram\": [[...]]}")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("modules", help="list the irreducible module labels")
    common(p)
    p.set_defaults(func=_cmd_modules)

    p = sub.add_parser("qdims", help="quantum dimension of every module")
    common(p)
    p.set_defaults(func=_cmd_qdims)

    p = sub.add_parser("fuse", help="fusion product of two modules")
    common(p)
    p.add_argument("a", help="first label, e.g. 'T(0;1)'")
    p.add_argument("b", help="second label")
    p.set_defaults(func=_cmd_fuse)

    p = sub.add_parser("decompose", help="constituents over the product subalgebra")
    common(p)
    p.add_argument("label", help="orbifold label to decompose")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("table", help="full fusion table")
    common(p)
    p.add_argument("--csv", action="store_true", help="CSV rows a,b,c,multiplicity")
    p.add_argument("--max-l", type=int, default=64, help="guard on the discriminant order")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="run the fusion-ring verification suite")
    common(p)
    p.add_argument("--max-l", type=int, default=64, help="guard on the discriminant order")
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv: Sequence[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 for --help/--version
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (PermorbError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
