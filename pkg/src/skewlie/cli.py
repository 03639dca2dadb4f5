"""Command-line front end: parse algebra documents, run analyses, print reports.

An algebra document is a JSON object ``{"dim": n, "products": [{"i": 1,
"j": 2, "c": ["0", "0", "1"]}, ...]}`` with 1-based indices i < j and exact
rational literals ("p/q" or "p"); pairs that are absent multiply to zero.
Reports are plain text by default or a single JSON object with ``--json``;
every number is serialized as an exact rational literal, and identical input
always produces byte-identical JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import algebra as alg
from . import structmats as sm
from .classify import classify as classify_algebra
from .classify import lie_type_constants
from .errors import InvariantError, ParseError, SkewlieError
from .qlinalg import (ExactMatrix, determinant, format_rational,
                      parse_rational, rank)
from .sampler import SampleConfig, run_experiment


def parse_algebra(text: str) -> alg.SkewAlgebra:
    """Parse an algebra document, validating indices, pairs, and literals."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from None
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    dim = doc.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise ParseError("field 'dim' must be an integer")
    products = doc.get("products", [])
    if not isinstance(products, list):
        raise ParseError("field 'products' must be a list")
    table: dict[tuple[int, int], list[Fraction]] = {}
    for pos, item in enumerate(products):
        where = f"products[{pos}]"
        if not isinstance(item, dict):
            raise ParseError(f"{where}: must be an object")
        i, j, c = item.get("i"), item.get("j"), item.get("c")
        if not isinstance(i, int) or not isinstance(j, int) or isinstance(i, bool) or isinstance(j, bool):
            raise ParseError(f"{where}: fields 'i' and 'j' must be integers")
        if i >= j:
            raise InvariantError(f"{where}: requires i < j, got i={i}, j={j}")
        if not (1 <= i and j <= dim):
            raise InvariantError(f"{where}: indices ({i},{j}) outside 1..{dim}")
        if (i, j) in table:
            raise InvariantError(f"{where}: duplicate pair ({i},{j})")
        if not isinstance(c, list):
            raise ParseError(f"{where}: field 'c' must be a list of rational literals")
        if len(c) != dim:
            raise ParseError(f"{where}: 'c' has {len(c)} entries, expected {dim}")
        coeffs = []
        for k, lit in enumerate(c):
            if isinstance(lit, bool) or not isinstance(lit, (str, int)):
                raise ParseError(f"{where}.c[{k}]: expected a rational literal string")
            try:
                coeffs.append(parse_rational(str(lit)))
            except ValueError as e:
                raise ParseError(f"{where}.c[{k}]: {e}") from None
        table[(i, j)] = coeffs
    try:
        return alg.SkewAlgebra(dim, table)
    except (ValueError, SkewlieError) as e:
        raise ParseError(str(e)) from None


def serialize_algebra(a: alg.SkewAlgebra) -> dict[str, Any]:
    """Canonical document for an algebra (nonzero pairs, sorted, exact literals)."""
    return {
        "dim": a.dim,
        "products": [
            {"i": i, "j": j, "c": [format_rational(x) for x in coeffs]}
            for (i, j), coeffs in sorted(a.products.items())
        ],
    }


def _matrix_rows(m: ExactMatrix) -> list[list[str]]:
    return [[format_rational(x) for x in m.row(i)] for i in range(m.rows)]


def _derivations_payload(a: alg.SkewAlgebra) -> dict[str, Any]:
    ders = sm.derivation_space(a)
    return {
        "matrix_shape": [a.dim * (a.dim * (a.dim - 1) // 2), a.dim * a.dim],
        "rank": sm.orbit_dimension(a),
        "derivation_dim": ders.dim,
        "aut_dim": sm.aut_dimension(a),
        "orbit_dim": sm.orbit_dimension(a),
        "basis": [_matrix_rows(f) for f in ders.basis],
    }


def _homlie_payload(a: alg.SkewAlgebra) -> dict[str, Any]:
    space = sm.homlie_space(a)
    payload: dict[str, Any] = {
        "is_homlie": sm.is_homlie(a),
        "kernel_dim": space.dim,
        "basis": [_matrix_rows(f) for f in space.basis],
    }
    if a.dim >= 3:
        hl = sm.build_HL(a)
        payload["matrix_shape"] = [hl.rows, hl.cols]
        payload["rank"] = rank(hl)
        if hl.is_square:
            payload["determinant"] = format_rational(determinant(hl))
    else:
        payload["matrix_shape"] = None
        payload["rank"] = 0
    return payload


def _killing_payload(a: alg.SkewAlgebra) -> dict[str, Any]:
    k = alg.killing_matrix(a)
    return {"matrix": _matrix_rows(k), "determinant": format_rational(determinant(k))}


def _classify_payload(a: alg.SkewAlgebra) -> dict[str, Any]:
    result = classify_algebra(a)
    return {
        "tag": result.tag,
        "params": {name: format_rational(v) for name, v in sorted(result.params.items())},
        "witness": _matrix_rows(result.witness),
        "lie": result.lie,
    }


def _lietype_payload(a: alg.SkewAlgebra) -> dict[str, Any]:
    sol = lie_type_constants(a)
    return {
        "particular": None if sol.particular is None
        else [format_rational(x) for x in sol.particular],
        "homogeneous": [[format_rational(x) for x in h] for h in sol.homogeneous],
        "admissible": sol.admissible,
    }


def _analyze_payload(a: alg.SkewAlgebra) -> dict[str, Any]:
    payload = {
        "lie": alg.is_lie(a),
        "nilpotent": alg.is_nilpotent(a),
        "solvable": alg.is_solvable(a),
        "central_series": list(alg.central_series(a).dims),
        "derived_series": list(alg.derived_series(a).dims),
        "derivations": _derivations_payload(a),
        "homlie": _homlie_payload(a),
        "killing": _killing_payload(a),
    }
    if a.dim == 3:
        payload["classify"] = _classify_payload(a)
        payload["lietype"] = _lietype_payload(a)
    return payload


def _print_matrix(m: list[list[str]], indent: str = "  ") -> None:
    width = max((len(x) for row in m for x in row), default=1)
    for row in m:
        print(indent + "[ " + "  ".join(x.rjust(width) for x in row) + " ]")


def _render_text(command: str, payload: dict[str, Any]) -> None:
    if command == "derivations":
        print(f"derivation matrix rank: {payload['rank']}")
        print(f"derivation space dimension: {payload['derivation_dim']}")
        print(f"automorphism group dimension: {payload['aut_dim']}")
        print(f"orbit dimension: {payload['orbit_dim']}")
        print("derivation basis:")
        for mat in payload["basis"]:
            _print_matrix(mat)
            print()
    elif command == "homlie":
        print("Hom-Lie" if payload["is_homlie"] else "not Hom-Lie")
        print(f"solution space dimension: {payload['kernel_dim']}")
        if payload.get("matrix_shape"):
            print(f"matrix shape: {payload['matrix_shape'][0]}x{payload['matrix_shape'][1]}"
                  f", rank {payload['rank']}")
        if "determinant" in payload:
            print(f"determinant: {payload['determinant']}")
    elif command == "classify":
        print(f"family: {payload['tag']}")
        if payload["params"]:
            print("parameters: " + ", ".join(f"{k} = {v}" for k, v in payload["params"].items()))
        print(f"Lie algebra: {'yes' if payload['lie'] else 'no'}")
        print("basis-change witness (columns are the adapted basis):")
        _print_matrix(payload["witness"])
    elif command == "killing":
        print("Killing form matrix:")
        _print_matrix(payload["matrix"])
        print(f"determinant: {payload['determinant']}")
    elif command == "lietype":
        if payload["particular"] is None:
            print("no coefficient pair (a, b) satisfies the relation")
        else:
            a0, b0 = payload["particular"]
            print(f"particular solution: (a, b) = ({a0}, {b0})")
            for h in payload["homogeneous"]:
                print(f"homogeneous generator: ({h[0]}, {h[1]})")
        print(f"admissible (a != 0 possible): {'yes' if payload['admissible'] else 'no'}")
    elif command == "analyze":
        print(f"Lie: {payload['lie']}  nilpotent: {payload['nilpotent']}  "
              f"solvable: {payload['solvable']}")
        print(f"central series dims: {payload['central_series']}")
        print(f"derived series dims: {payload['derived_series']}")
        print(f"derivation rank/dim: {payload['derivations']['rank']}"
              f"/{payload['derivations']['derivation_dim']}")
        print("Hom-Lie" if payload["homlie"]["is_homlie"] else "not Hom-Lie",
              f"(solution space dim {payload['homlie']['kernel_dim']})")
        print(f"Killing determinant: {payload['killing']['determinant']}")
        if "classify" in payload:
            print(f"family: {payload['classify']['tag']}")
    elif command == "sample":
        print(f"trials: {payload['trials']}  dim: {payload['dim']}  "
              f"seed: {payload['seed']}  height: {payload['height']}")
        for r in sorted(payload["rank_histogram"], key=int):
            print(f"  rank {r}: {payload['rank_histogram'][r]}")
        print(f"Hom-Lie count: {payload['homlie_count']}")
        print(f"Lie count: {payload['lie_count']}")


def _load(path: str) -> alg.SkewAlgebra:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_algebra(fh.read())
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewlie",
        description="Exact analysis of skew-symmetric algebras given by "
                    "rational structure constants")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
            ("analyze", "run every applicable analysis"),
            ("derivations", "derivation space and orbit/automorphism dimensions"),
            ("homlie", "Hom-Lie solution space and decision"),
            ("classify", "normal form, parameters, and basis-change witness (dim 3)"),
            ("killing", "Killing form matrix and determinant"),
            ("lietype", "constant coefficients of the Lie-type relation (dim 3)")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="algebra document (JSON)")
        p.add_argument("--json", action="store_true", help="emit a JSON report")
    p = sub.add_parser("sample", help="seeded genericity experiment")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--height", type=int, default=2)
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.command == "sample":
            cfg = SampleConfig(dim=args.dim, trials=args.trials,
                               seed=args.seed, height=args.height)
            report = run_experiment(cfg)
            payload: dict[str, Any] = {
                "dim": cfg.dim, "trials": cfg.trials, "seed": cfg.seed,
                "height": cfg.height,
                "rank_histogram": {str(k): v for k, v in
                                   sorted(report.rank_histogram_M.items())},
                "homlie_count": report.homlie_count,
                "lie_count": report.lie_count,
            }
            document = {"command": "sample", "result": payload}
        else:
            a = _load(args.file)
            builder = {
                "analyze": _analyze_payload,
                "derivations": _derivations_payload,
                "homlie": _homlie_payload,
                "classify": _classify_payload,
                "killing": _killing_payload,
                "lietype": _lietype_payload,
            }[args.command]
            payload = builder(a)
            document = {"command": args.command,
                        "input": serialize_algebra(a),
                        "result": payload}
    except (ParseError, InvariantError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except SkewlieError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(document, indent=2, sort_keys=True))
    else:
        _render_text(args.command, payload)
    return 0


if __name__ == "__main__":
    sys.exit(main())
