"""Command-line front end.

Commands mirror the library: code analytics on generator-matrix files,
bound calculators, exact chi evaluation, gap certificates, and the full
verification sweep.  Every command emits either a text report or, with
--json, a structured report with identical numeric content.

Node/coordinate indices in all I/O are 0-based (classical sources often
number nodes from 1).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

from . import certificates, formulas, gf2, surfaces, verification
from .surfaces import STRICT, WEAK


def _fraction_str(value: Fraction) -> str:
    return str(int(value)) if value.denominator == 1 else str(value)


def _load_code(path: str) -> gf2.LinearCode:
    text = Path(path).read_text(encoding="utf-8")
    return gf2.code_from_rows(gf2.parse_generator_matrix(text))


def cmd_code_analyze(args) -> dict[str, Any]:
    code = _load_code(args.file)
    distribution = gf2.weight_distribution(code)
    payload = {
        "file": args.file,
        "n": code.length,
        "k": code.dimension,
        "minimum_distance": gf2.minimum_distance(code) if code.dimension else None,
        "weight_distribution": {str(w): c for w, c in distribution.items()},
        "parity_class": gf2.classify_parity(code),
        "self_orthogonal": gf2.is_self_orthogonal(code),
        "dual_dimension": code.length - code.dimension,
    }
    return {"command": "code analyze", "status": "info", "payload": payload}


def cmd_code_project(args) -> dict[str, Any]:
    code = _load_code(args.file)
    word = gf2.BitWord.from_string(args.word)
    image, kernel_dim = gf2.project_onto_support(code, word)
    payload = {
        "file": args.file,
        "word": args.word,
        "image_n": image.length,
        "image_k": image.dimension,
        "kernel_dimension": kernel_dim,
        "image_weight_distribution": {
            str(w): c for w, c in gf2.weight_distribution(image).items()},
    }
    return {"command": "code project", "status": "info", "payload": payload}


def cmd_griesmer(args) -> dict[str, Any]:
    if (args.n is None) == (args.k is None):
        raise SystemExit("griesmer: provide exactly one of --n and --k")
    if args.k is not None:
        payload = {"k": args.k, "d": args.d,
                   "n_min": gf2.griesmer_min_length(args.k, args.d)}
    else:
        payload = {"n": args.n, "d": args.d,
                   "k_max": gf2.griesmer_max_dim(args.n, args.d)}
    return {"command": "griesmer", "status": "info", "payload": payload}


def cmd_chi(args) -> dict[str, Any]:
    value = formulas.chi(args.degree, args.twist, args.weight)
    payload = {
        "degree": args.degree,
        "twist": args.twist,
        "weight": args.weight,
        "chi": _fraction_str(value),
        "is_integer": value.denominator == 1,
        "serre_dual_twist": formulas.serre_dual_twist(args.degree, args.twist),
    }
    return {"command": "chi", "status": "info", "payload": payload}


def cmd_emin(args) -> dict[str, Any]:
    if args.weak:
        value = formulas.e_bar_min(args.degree)
    else:
        value = formulas.e_min(args.degree)
    payload = {"degree": args.degree,
               "parity": WEAK if args.weak else STRICT,
               "min_weight": value}
    return {"command": "emin", "status": "info", "payload": payload}


def cmd_gaps(args) -> dict[str, Any]:
    cert = certificates.derive_gaps(args.degree, args.parity)
    status = "pass" if cert.validate() else "fail"
    return {"command": "gaps", "status": status, "payload": cert.to_dict()}


def cmd_surface_bounds(args) -> dict[str, Any]:
    surface = surfaces.NodalSurface(args.degree, args.nodes)
    profile = surfaces.surface_profile(surface)
    payload = {
        "degree": args.degree,
        "nodes": args.nodes,
        "b2_resolution": surfaces.b2_resolution(args.degree),
        "dim_lower_bound_strict": profile.dim_lower_bound_strict,
        "dim_lower_bound_even": profile.dim_lower_bound_even,
        "strict_weight_modulus": profile.strict_modulus,
        "weak_weight_residue": profile.weak_residue,
    }
    return {"command": "surface bounds", "status": "info", "payload": payload}


def cmd_verify_paper(args) -> dict[str, Any]:
    data_dir = Path(args.data_dir) if args.data_dir else None
    sweep = verification.run_full_verification(data_dir)
    return {"command": "verify paper",
            "status": "pass" if sweep["pass"] else "fail",
            "payload": sweep}


def _render_text(report: dict[str, Any]) -> str:
    lines = [f"command: {report['command']}", f"status: {report['status']}"]
    payload = report["payload"]
    if "checks" in payload:
        for check in payload["checks"]:
            verdict = "pass" if check["pass"] else "FAIL"
            lines.append(f"[{verdict}] {check['name']}: expected "
                         f"{check['expected']!r}, got {check['actual']!r}")
        lines.append(f"checks passed: "
                     f"{sum(c['pass'] for c in payload['checks'])}"
                     f"/{len(payload['checks'])}")
    elif "steps" in payload:
        report_gap = payload["conclusion"]
        for i, step in enumerate(payload["steps"], start=1):
            detail = f" -- {step['note']}" if step["note"] else ""
            lines.append(f"step {i} [{step['rule']}] "
                         f"inputs={json.dumps(step['inputs'], sort_keys=True)} "
                         f"=> {step['asserted_output']}{detail}")
        lines.append(f"conclusion: {json.dumps(report_gap, sort_keys=True)}")
    else:
        for key, value in payload.items():
            lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def _emit(report: dict[str, Any], args) -> int:
    if args.json:
        text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    else:
        text = _render_text(report)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0 if report["status"] in ("pass", "info") else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evensets",
        description="Binary-code analytics for even sets of nodes on nodal "
                    "surfaces (all node indices 0-based)")
    parser.add_argument("--json", action="store_true",
                        help="emit a structured JSON report")
    parser.add_argument("--output", metavar="PATH",
                        help="write the report to a file instead of stdout")

    # The global flags are also accepted after the subcommand; SUPPRESS keeps
    # the leaf parsers from clobbering values parsed at the top level.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--output", metavar="PATH", default=argparse.SUPPRESS)

    sub = parser.add_subparsers(dest="command", required=True)

    code = sub.add_parser("code", help="generator-matrix analytics")
    code_sub = code.add_subparsers(dest="subcommand", required=True)
    analyze = code_sub.add_parser("analyze", parents=[common], help="basic code statistics")
    analyze.add_argument("file")
    analyze.set_defaults(func=cmd_code_analyze)
    project = code_sub.add_parser("project", parents=[common],
                                  help="project the code onto a codeword support")
    project.add_argument("file")
    project.add_argument("--word", required=True, metavar="BITS")
    project.set_defaults(func=cmd_code_project)

    griesmer = sub.add_parser("griesmer", parents=[common], help="Griesmer bound calculator")
    griesmer.add_argument("--n", type=int)
    griesmer.add_argument("--k", type=int)
    griesmer.add_argument("--d", type=int, required=True)
    griesmer.set_defaults(func=cmd_griesmer)

    chi = sub.add_parser("chi", parents=[common], help="exact Euler characteristic")
    chi.add_argument("--degree", type=int, required=True)
    chi.add_argument("--twist", type=int, required=True)
    chi.add_argument("--weight", type=int, required=True)
    chi.set_defaults(func=cmd_chi)

    emin = sub.add_parser("emin", parents=[common], help="minimal even-set weight")
    emin.add_argument("--degree", type=int, required=True)
    emin.add_argument("--weak", action="store_true")
    emin.set_defaults(func=cmd_emin)

    gaps = sub.add_parser("gaps", parents=[common], help="gap certificate for one degree")
    gaps.add_argument("--degree", type=int, required=True)
    gaps.add_argument("--parity", choices=(STRICT, WEAK), required=True)
    gaps.set_defaults(func=cmd_gaps)

    surface = sub.add_parser("surface", help="surface constraints")
    surface_sub = surface.add_subparsers(dest="subcommand", required=True)
    bounds = surface_sub.add_parser("bounds", parents=[common])
    bounds.add_argument("--degree", type=int, required=True)
    bounds.add_argument("--nodes", type=int, required=True)
    bounds.set_defaults(func=cmd_surface_bounds)

    verify = sub.add_parser("verify", help="regression sweeps")
    verify_sub = verify.add_subparsers(dest="subcommand", required=True)
    paper = verify_sub.add_parser("paper", parents=[common], help="run every pinned check")
    paper.add_argument("--data-dir", metavar="PATH",
                       help="override the bundled generator-matrix files")
    paper.set_defaults(func=cmd_verify_paper)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except (ValueError, OSError, gf2.EnumerationCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return _emit(report, args)


if __name__ == "__main__":
    sys.exit(main())
