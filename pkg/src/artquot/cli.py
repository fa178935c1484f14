"""Command line interface.

Every command reads the ideal from --in FILE or stdin (except `verify`,
which generates its own instances) and prints a text report, or JSON with
--json.  Exit codes: 0 success, 1 domain error or failed verification,
2 usage error.  Stdout is deterministic for a fixed input and seed;
timing notes go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .diagram import diagram_ascii, diagram_cells, diagram_svg, diagram_svg_pair
from .inverse import (
    apolarity,
    dual_corners,
    hilbert_duality_check,
    inner_span,
    inverse_system,
)
from .linalg import mat_vec
from .quotient import HilbertSeries, QuotientModule, hilbert, poly_action_matrix
from .radical import satisfies_radical_formula
from .ring import (
    AlgebraError,
    InternalCheckError,
    MonomialIdeal,
    ParseError,
    Polynomial,
    VariableSet,
    monomial_str,
    parse_input,
    parse_polynomial_list,
    poly_monomial,
    render,
    total_degree,
    variable_polys,
)
from .reduced import largest_reduced_submodule, outside_corners
from .suites import SUITE_NAMES, run_suite
from .torsion import classify, from_quotient

_YES = {True: "yes", False: "no"}


def _read_module(args) -> QuotientModule:
    if args.infile:
        with open(args.infile, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    variables, ideal = parse_input(text)
    return QuotientModule(variables, ideal)


def _dumps(payload: dict) -> str:
    # exact rationals go out as "p/q" strings, never floats
    def fallback(obj):
        if isinstance(obj, Fraction):
            return str(obj)
        raise TypeError(f"not JSON serializable: {type(obj).__name__}")

    return json.dumps(payload, indent=2, default=fallback)


def _emit(args, payload: dict, lines: list[str]) -> int:
    if args.json:
        print(_dumps(payload))
    else:
        print("\n".join(lines))
    return 0


def _header(module: QuotientModule) -> str:
    return render(module.variables, module.ideal)


def _ideal_strs(variables: VariableSet, ideal: MonomialIdeal) -> list[str]:
    return [monomial_str(variables.names, g) for g in ideal.min_gens]


def cmd_basis(args) -> int:
    module = _read_module(args)
    payload = {
        "ring": list(module.variables.names),
        "ideal": _ideal_strs(module.variables, module.ideal),
        **module.to_json(),
    }
    lines = [
        _header(module),
        f"dim {module.dim}",
        f"hilbert {hilbert(module)}",
        "basis " + ", ".join(module.labels()),
    ]
    return _emit(args, payload, lines)


def cmd_socle(args) -> int:
    module = _read_module(args)
    report = outside_corners(module)
    span = largest_reduced_submodule(module)
    socle_hs = HilbertSeries.from_degrees(total_degree(e) for e in report.corners)
    corner_labels = [module.label(e) for e in report.corners]
    payload = {
        "ring": list(module.variables.names),
        "ideal": _ideal_strs(module.variables, module.ideal),
        "dim": span.dim,
        "corners": corner_labels,
        "hilbert": list(socle_hs.coeffs),
        "gorenstein": span.dim == 1,
    }
    lines = [
        _header(module),
        f"socle dim {span.dim}",
        "corners " + ", ".join(corner_labels),
        f"socle hilbert {socle_hs}",
        f"gorenstein {_YES[span.dim == 1]}",
    ]
    return _emit(args, payload, lines)


def cmd_dual(args) -> int:
    module = _read_module(args)
    system = inverse_system(module.variables, module.ideal)
    corners = dual_corners(system)
    corner_set = set(corners)
    inner = [e for e in system.dual_basis if e not in corner_set]
    payload = {
        "ring": list(module.variables.names),
        "ideal": _ideal_strs(module.variables, module.ideal),
        "dim": system.dim,
        "dual_basis": system.labels(),
        "hilbert": list(system.grading.coeffs),
        "dual_corners": [system.label(e) for e in corners],
        "inner": [system.label(e) for e in inner],
    }
    lines = [
        _header(module),
        f"dual dim {system.dim}",
        "dual basis " + ", ".join(system.labels()),
        f"hilbert {system.grading}",
        "dual corners " + ", ".join(system.label(e) for e in corners),
        "inner " + ", ".join(system.label(e) for e in inner),
    ]
    return _emit(args, payload, lines)


def cmd_hilbert(args) -> int:
    module = _read_module(args)
    hs_m, hs_d, hs_r, hs_rd = hilbert_duality_check(module)
    payload = {
        "ring": list(module.variables.names),
        "ideal": _ideal_strs(module.variables, module.ideal),
        "module": list(hs_m.coeffs),
        "dual": list(hs_d.coeffs),
        "socle": list(hs_r.coeffs),
        "socle_dual": list(hs_rd.coeffs),
        "module_equals_dual": hs_m == hs_d,
        "socle_equals_dual": hs_r == hs_rd,
    }
    lines = [
        _header(module),
        f"module {hs_m}",
        f"dual {hs_d}",
        f"socle {hs_r}",
        f"socle dual {hs_rd}",
        f"module = dual {_YES[hs_m == hs_d]}",
        f"socle = socle dual {_YES[hs_r == hs_rd]}",
    ]
    return _emit(args, payload, lines)


def cmd_classify(args) -> int:
    module = _read_module(args)
    if args.ideal:
        gens = parse_polynomial_list(args.ideal, module.variables)
    else:
        gens = tuple(poly_monomial(g) for g in module.ideal.min_gens)
    fm = from_quotient(module)
    tag = classify(fm, gens)
    gen_strs = [g.to_str(module.variables.names) for g in gens]
    payload = {
        "ring": list(module.variables.names),
        "ideal": _ideal_strs(module.variables, module.ideal),
        "relative_to": gen_strs,
        "tag": tag.tag,
        "reduced": tag.j_reduced,
        "coreduced": tag.j_coreduced,
        "gamma_dim": tag.gamma_dim,
        "lambda_dim": tag.lambda_dim,
    }
    lines = [
        _header(module),
        "relative to " + ", ".join(gen_strs),
        f"tag {tag.tag}",
        f"J-reduced {_YES[tag.j_reduced]}",
        f"J-coreduced {_YES[tag.j_coreduced]}",
        f"gamma dim {tag.gamma_dim}",
        f"lambda dim {tag.lambda_dim}",
    ]
    return _emit(args, payload, lines)


def cmd_radical(args) -> int:
    module = _read_module(args)
    report = satisfies_radical_formula(module, seed=args.seed)
    payload = {
        "ring": list(module.variables.names),
        "ideal": _ideal_strs(module.variables, module.ideal),
        "envelope_dim": report.envelope_dim,
        "jacobson_dim": report.jacobson_dim,
        "semiprime_dim": report.semiprime_dim,
        "semiprime_unique": report.semiprime_unique,
        "enumeration_skipped": report.enumeration_skipped,
        "spot_checks": report.spot_checks,
        "strf": report.satisfies,
    }
    semiprime = (
        "skipped" if report.enumeration_skipped else str(report.semiprime_dim)
    )
    unique = (
        "skipped"
        if report.semiprime_unique is None
        else _YES[report.semiprime_unique]
    )
    lines = [
        _header(module),
        f"envelope dim {report.envelope_dim}",
        f"jacobson dim {report.jacobson_dim}",
        f"semiprime dim {semiprime}",
        f"semiprime unique {unique}",
        f"spot checks {report.spot_checks}",
        f"satisfies radical formula {_YES[report.satisfies]}",
    ]
    return _emit(args, payload, lines)


def cmd_diagram(args) -> int:
    module = _read_module(args)
    if args.format == "json":
        payload = {"cells": diagram_cells(module)}
        if args.dual:
            payload["dual_cells"] = diagram_cells(module, dual=True)
        print(_dumps(payload))
    elif args.format == "svg":
        print(diagram_svg_pair(module) if args.dual else diagram_svg(module))
    else:
        out = diagram_ascii(module)
        if args.dual:
            out += "\n\n" + diagram_ascii(module, dual=True)
        print(out)
    return 0


def _report_rows(module: QuotientModule) -> list[dict]:
    system = inverse_system(module.variables, module.ideal)
    corner_report = outside_corners(module)
    reduced = largest_reduced_submodule(module)
    d_corners = dual_corners(system)
    inner = inner_span(system)
    hs_m, hs_d, hs_r, hs_rd = hilbert_duality_check(module)
    p_labels = [module.label(e) for e in corner_report.corners]
    d_labels = [system.label(e) for e in d_corners]
    dim = module.dim
    rows = [
        {
            "row": 1,
            "left": f"dim M = {dim}",
            "right": f"dim dual = {system.dim}",
            "remark": "the two have the same dimension",
            "ok": dim == system.dim,
        },
        {
            "row": 2,
            "left": "reduced part generated by " + ", ".join(p_labels),
            "right": "dual quotient generated by " + ", ".join(d_labels),
            "remark": "generated by the outside corner elements",
            "ok": sorted(corner_report.corners) == sorted(d_corners),
        },
        {
            "row": 3,
            "left": f"M / (m M) = k, dim {dim - _positive_degree_dim(module)}",
            "right": "span{1} = k in the dual",
            "remark": "the residue field appears on both sides",
            "ok": dim - _positive_degree_dim(module) == 1,
        },
        {
            "row": 4,
            "left": f"dim M / reduced = {dim - reduced.dim}",
            "right": f"dim (m o dual) = {inner.dim}",
            "remark": "generated by the inner elements",
            "ok": dim - reduced.dim == inner.dim,
        },
        {
            "row": 5,
            "left": "reduced part embeds in M",
            "right": "dual surjects onto dual/(m o dual)",
            "remark": "an embedding and a surjection respectively",
            "ok": reduced.dim == system.dim - inner.dim,
        },
        {
            "row": 6,
            "left": "M surjects onto M/mbar = k",
            "right": "reduced part of the dual embeds as span{1}",
            "remark": "a surjection and an embedding respectively",
            "ok": _dual_socle_is_constants(module, system),
        },
        {
            "row": 7,
            "left": "m kills the reduced part of M",
            "right": "m o (dual/(m o dual)) = 0",
            "remark": "both sides are semisimple",
            "ok": _m_kills_reduced(module, reduced),
        },
        {
            "row": 8,
            "left": f"reduced part = socle, dim {reduced.dim}",
            "right": "dual reduced part = dual socle, dim 1",
            "remark": "the reduced submodule and the socle coincide",
            "ok": _dual_socle_is_constants(module, system),
        },
        {
            "row": 9,
            "left": f"socle = (0 : m) in M, hilbert {hs_r}",
            "right": f"dual socle hilbert {hs_rd}",
            "remark": "the socle is the annihilator of m",
            "ok": hs_m == hs_d and hs_r == hs_rd,
        },
    ]
    return rows


def _positive_degree_dim(module: QuotientModule) -> int:
    """Dimension of m*M: everything of positive degree in the staircase."""
    return sum(1 for e in module.basis if total_degree(e) > 0)


def _m_kills_reduced(module: QuotientModule, reduced) -> bool:
    for poly in variable_polys(module.n):
        mat = poly_action_matrix(module, poly)
        for row in reduced.rows:
            if any(c != 0 for c in mat_vec(mat, row)):
                return False
    return True


def _dual_socle_is_constants(module: QuotientModule, system) -> bool:
    """The dual elements killed by every variable are exactly the constants."""
    killed = []
    for e in system.dual_basis:
        if all(
            apolarity(v, poly_monomial(e)) == Polynomial()
            for v in variable_polys(module.n)
        ):
            killed.append(e)
    return killed == [(0,) * module.n]


def cmd_report(args) -> int:
    module = _read_module(args)
    rows = _report_rows(module)
    payload = {
        "ring": list(module.variables.names),
        "ideal": _ideal_strs(module.variables, module.ideal),
        "rows": rows,
        "ok": all(r["ok"] for r in rows),
    }
    width_l = max(len(r["left"]) for r in rows)
    width_r = max(len(r["right"]) for r in rows)
    lines = [_header(module)]
    for r in rows:
        lines.append(
            f"{r['row']}. {r['left']:<{width_l}}  <->  "
            f"{r['right']:<{width_r}}  [{'ok' if r['ok'] else 'FAIL'}] "
            f"{r['remark']}"
        )
    lines.append("all rows ok" if payload["ok"] else "SOME ROWS FAILED")
    rc = _emit(args, payload, lines)
    return rc if payload["ok"] else 1


def cmd_verify(args) -> int:
    if args.suite not in SUITE_NAMES:
        print(
            f"error: unknown suite {args.suite!r}; choose from "
            + ", ".join(SUITE_NAMES),
            file=sys.stderr,
        )
        return 2
    started = time.monotonic()
    result = run_suite(args.suite, args.count, args.seed)
    elapsed = time.monotonic() - started
    if args.json:
        print(_dumps(result.to_json()))
    else:
        print(
            f"suite {result.suite} seed {result.seed}: "
            f"{result.passed}/{result.count} pass"
        )
        for f in result.failures:
            print(f"  instance {f['index']} seed {f['seed']}: {f['error']}")
            print(f"  repro: {f['repro']}")
    print(f"elapsed {elapsed:.2f}s", file=sys.stderr)
    return 0 if result.ok else 1


def _add_io(sub, with_json: bool = True):
    sub.add_argument(
        "--in",
        dest="infile",
        metavar="FILE",
        default=None,
        help="read the ideal from FILE instead of stdin",
    )
    if with_json:
        sub.add_argument(
            "--json", action="store_true", help="machine-readable output"
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="artquot",
        description=(
            "exact structure reports for finite quotients of a polynomial "
            "ring by a monomial ideal"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", help="staircase basis and Hilbert series")
    _add_io(p)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("socle", help="outside corners and the reduced part")
    _add_io(p)
    p.set_defaults(func=cmd_socle)

    p = sub.add_parser("dual", help="inverse system under apolarity")
    _add_io(p)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("hilbert", help="Hilbert series equalities")
    _add_io(p)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("classify", help="torsion-theory tag of the quotient")
    _add_io(p)
    p.add_argument(
        "--ideal",
        metavar="POLYS",
        default=None,
        help="comma-separated polynomial generators of the reference ideal "
        "(default: the defining ideal)",
    )
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("radical", help="radical-formula quantities")
    _add_io(p)
    p.add_argument("--seed", type=int, default=0, help="spot-check seed")
    p.set_defaults(func=cmd_radical)

    p = sub.add_parser("diagram", help="Young diagram of the staircase")
    _add_io(p, with_json=False)
    p.add_argument(
        "--format",
        choices=("ascii", "svg", "json"),
        default="ascii",
        help="output format (default ascii)",
    )
    p.add_argument(
        "--dual",
        action="store_true",
        help="also render the dual diagram with dual labels",
    )
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("report", help="the nine-row correspondence table")
    _add_io(p)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("verify", help="run a named random-instance suite")
    p.add_argument("--suite", required=True, help="suite name")
    p.add_argument("--count", type=int, default=100, help="instances to run")
    p.add_argument("--seed", type=int, default=0, help="master seed")
    p.add_argument(
        "--json", action="store_true", help="machine-readable output"
    )
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalCheckError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
