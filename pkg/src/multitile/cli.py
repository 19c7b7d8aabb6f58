"""Command-line front end.

    multitile decide   PROBLEM.json
    multitile verify   PROBLEM.json [--samples N] [--seed S]
    multitile select   INSTANCE.json
    multitile subgroup VECTORS.json
    multitile render   PROBLEM.json [--out FILE] [--window XMIN XMAX YMIN YMAX]

Exit codes: 0 tiles / pass / found, 1 does not tile / no selection,
2 invalid input, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .decider import WitnessError, decide, level
from .numfield import QQ, FieldError, FieldSpec, parse_rational
from .oracle import sample_verify
from .planar import PolygonError, Vec, polygon_from_json
from .render import render_svg
from .selector import SelectorInstance, certificate, select_j
from .subgroup import LatticeBasis, is_discrete

EXIT_OK, EXIT_NO, EXIT_INVALID, EXIT_VERIFY_FAILED = 0, 1, 2, 3

log = logging.getLogger("multitile")


class InputError(ValueError):
    pass


def _field(doc) -> FieldSpec:
    if "field" not in doc:
        return QQ
    try:
        return FieldSpec.from_json(doc["field"])
    except FieldError as exc:
        raise InputError(f"field: {exc}") from None


def _require(doc, key):
    if key not in doc:
        raise InputError(f"missing required key {key!r}")
    return doc[key]


def _vectors(spec, doc, key) -> list:
    items = _require(doc, key)
    if not isinstance(items, list):
        raise InputError(f"{key}: expected a list of vectors")
    out = []
    for i, v in enumerate(items):
        try:
            out.append(Vec.from_json(spec, v))
        except FieldError as exc:
            raise InputError(f"{key}[{i}]: {exc}") from None
    return out


def load_problem(path) -> dict:
    """Parse a problem file into domain objects (keys present in the file only)."""
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON at line {exc.lineno}: {exc.msg}") from None
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    if not isinstance(doc, dict):
        raise InputError("top level must be a JSON object")
    spec = _field(doc)
    out = {"field": spec, "raw": doc}
    if "vertices" in doc:
        try:
            out["polygon"] = polygon_from_json(spec, doc["vertices"])
        except PolygonError as exc:
            raise InputError(f"vertices: {exc}") from None
        except FieldError as exc:
            raise InputError(f"vertices: {exc}") from None
    if "lattice" in doc:
        b = _vectors(spec, doc, "lattice")
        if len(b) != 2:
            raise InputError("lattice: expected two basis vectors")
        try:
            out["lattice"] = LatticeBasis(*b)
        except ValueError as exc:
            raise InputError(f"lattice: {exc}") from None
    if "level" in doc:
        if not isinstance(doc["level"], int) or doc["level"] < 1:
            raise InputError("level: expected a positive integer")
        out["level"] = doc["level"]
    return out


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def cmd_decide(args) -> int:
    prob = load_problem(args.file)
    if "polygon" not in prob:
        raise InputError("missing required key 'vertices'")
    verdict = decide(prob["polygon"])
    _emit(verdict.to_json())
    return EXIT_OK if verdict.tiles else EXIT_NO


def cmd_verify(args) -> int:
    prob = load_problem(args.file)
    P = prob.get("polygon")
    L = prob.get("lattice")
    if P is None or L is None:
        raise InputError("verify needs 'vertices' and 'lattice'")
    k = prob.get("level")
    if k is None:
        try:
            k = level(P, L)
        except WitnessError as exc:
            _emit({"pass": False, "reason": str(exc)})
            return EXIT_VERIFY_FAILED
    report = sample_verify(P, L, k, args.samples, args.seed)
    _emit(report.to_json())
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def cmd_select(args) -> int:
    prob = load_problem(args.file)
    spec = prob["field"]
    e = _vectors(spec, prob["raw"], "e")
    tau = _vectors(spec, prob["raw"], "tau")
    try:
        inst = SelectorInstance(e, tau)
    except ValueError as exc:
        raise InputError(f"instance: {exc}") from None
    J = select_j(inst)
    if J is None:
        _emit({"J": "none"})
        return EXIT_NO
    _emit({"J": list(J), "certificate": certificate(inst, J).to_json()})
    return EXIT_OK


def cmd_subgroup(args) -> int:
    prob = load_problem(args.file)
    vecs = _vectors(prob["field"], prob["raw"], "vectors")
    _emit(is_discrete(vecs).to_json())
    return EXIT_OK


def cmd_render(args) -> int:
    prob = load_problem(args.file)
    P = prob.get("polygon")
    if P is None:
        raise InputError("missing required key 'vertices'")
    L, k = prob.get("lattice"), prob.get("level")
    if L is None and not args.outline:
        verdict = decide(P)
        if verdict.tiles:
            L, k = verdict.lattice, verdict.level
    window = None
    if args.window:
        try:
            window = tuple(parse_rational(w) for w in args.window)
        except FieldError as exc:
            raise InputError(f"--window: {exc}") from None
    svg = render_svg(P, L, k, window)
    if args.out:
        Path(args.out).write_text(svg)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="multitile", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide multiple lattice tiling")
    p.add_argument("file")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("verify", help="sample the covering multiplicity of P + L")
    p.add_argument("file")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("select", help="choose tau_j or e_j per index to span a discrete group")
    p.add_argument("file")
    p.set_defaults(func=cmd_select)

    p = sub.add_parser("subgroup", help="discreteness of the Z-span of a list of vectors")
    p.add_argument("file")
    p.set_defaults(func=cmd_subgroup)

    p = sub.add_parser("render", help="SVG of the polygon or its tiling")
    p.add_argument("file")
    p.add_argument("--out")
    p.add_argument("--window", nargs=4, metavar=("XMIN", "XMAX", "YMIN", "YMAX"))
    p.add_argument("--outline", action="store_true", help="draw only P with its e/tau arrows")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
