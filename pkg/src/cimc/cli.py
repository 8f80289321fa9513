"""Command line front end: ``cimc analyze | family | hilbert | scan-rossi | verify``.

Reports go to stdout (text or JSON), diagnostics to stderr.  Exit codes:
0 success, 2 bad parameters, 1 internal diagnostic.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .cmcheck import PreconditionError, analyze_tangent_cone, cm_case_a, shibuta_sufficient
from .families import (
    family_point,
    predicted_generators,
    rossi_family,
    shift_vector,
    shifted_curve,
    verify_ci,
)
from .gbase import BinomialityError, CompletionLimitError
from .hilbert import (
    MonomialIdeal,
    divide_one_minus_t,
    hilbert_numerator,
    is_nondecreasing,
    series_coefficients,
)
from .numsg import (
    CaseAParams,
    CaseBParams,
    MonomialCurve,
    NotCoprime,
    critical_exponent,
    gcd4,
    is_member,
    normalize_case_a,
)

SCHEMA = "cimc/1"


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# argument helpers
# ---------------------------------------------------------------------------


def int_list(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


def int_range(text: str) -> tuple:
    """'3' -> (3, 3); '0..10' -> (0, 10)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}")
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"range {text!r} must satisfy 0 <= lo <= hi")
    return lo, hi


def params_from_args(args):
    if args.case == "A":
        if args.a is None or args.u is None:
            raise UsageError("case A needs --a and --u")
        return CaseAParams(args.a, args.u)
    if args.a is None or args.u is None or args.v is None:
        raise UsageError("case B needs --a, --u and --v")
    return CaseBParams(args.a, args.u, args.v)


def _map(fn, items, workers):
    items = list(items)
    if workers and workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


# ---------------------------------------------------------------------------
# commands; each returns a JSON-ready dict
# ---------------------------------------------------------------------------


def cmd_analyze(params, priority=(4, 3, 2, 1), hf_terms=None) -> dict:
    curve = params.curve()
    if not curve.is_coprime:
        raise UsageError(f"parameters give n = {list(curve.n)} with gcd {curve.gcd} != 1")
    gens = params.binomials()
    analysis = analyze_tangent_cone(curve, gens, priority, hf_terms)
    report = {"schema": SCHEMA, "command": "analyze", "params": params.as_dict()}
    report.update(analysis.as_dict())
    report["ci_verified"] = verify_ci(curve, gens)
    report["shibuta_sufficient"] = shibuta_sufficient(analysis.mu)
    closed = None
    if isinstance(params, CaseAParams):
        norm = normalize_case_a(params)
        try:
            closed = cm_case_a(norm).as_dict()
        except PreconditionError as exc:
            closed = {"skipped": str(exc)}
        report["normalized_params"] = norm.as_dict()
    report["cm_closed_form"] = closed
    report["cm_verdict"] = analysis.cm.is_cm
    return report


def _family_job(job):
    case, index, params, w, with_cm, priority = job
    return family_point(case, index, params, w, with_cm, priority).as_dict()


def cmd_family(case, index, params, w_lo, w_hi, with_cm=True, priority=(4, 3, 2, 1), workers=1) -> dict:
    vec = shift_vector(case, index, params)
    jobs = [(case, index, params, w, with_cm, priority) for w in range(w_lo, w_hi + 1)]
    points = _map(_family_job, jobs, workers)
    points.sort(key=lambda r: r["w"])
    return {
        "schema": SCHEMA,
        "command": "family",
        "case": case,
        "index": index,
        "params": params.as_dict(),
        "vector": list(vec.entries),
        "shift_slots": list(vec.slots),
        "rule_status": vec.status,
        "points": [r for r in points if r["gcd_ok"]],
        "skipped_gcd": [r["w"] for r in points if not r["gcd_ok"]],
    }


def cmd_hilbert(ideal: MonomialIdeal, terms: int = 15) -> dict:
    p = hilbert_numerator(ideal)
    dim, reduced = 4, p
    while dim > 0 and sum(reduced) == 0 and any(reduced):
        reduced = divide_one_minus_t(reduced)
        dim -= 1
    if not any(p):
        dim, reduced = None, [0]
    hf = series_coefficients(p, 4, terms)
    return {
        "schema": SCHEMA,
        "command": "hilbert",
        "ideal": str(ideal),
        "generators": [list(g) for g in ideal.gens],
        "numerator": p,
        "krull_dimension": dim,
        "reduced_numerator": reduced,
        "hf_prefix": hf,
        "hf_nondecreasing": is_nondecreasing(hf),
        "multiplicity": sum(reduced) if dim is not None else 0,
    }


def _rossi_job(job):
    m, w, hf_terms = job
    try:
        curve, gens = rossi_family(m, w)
    except NotCoprime as exc:
        return {"m": m, "w": w, "gcd_ok": False, "reason": str(exc)}
    analysis = analyze_tangent_cone(curve, gens, (4, 3, 2, 1), hf_terms)
    hf = analysis.hf_prefix
    return {
        "m": m,
        "w": w,
        "n": list(curve.n),
        "gcd_ok": True,
        "cm": analysis.cm.is_cm,
        "mu": analysis.mu,
        "hf_prefix": hf,
        "hf_nondecreasing": is_nondecreasing(hf),
        "reduced_numerator": analysis.reduced_numerator,
        "multiplicity": analysis.multiplicity,
    }


def cmd_scan_rossi(m_lo, m_hi, w_lo, w_hi, workers=1, hf_terms=None) -> dict:
    jobs = [(m, w, hf_terms) for m in range(m_lo, m_hi + 1) for w in range(w_lo, w_hi + 1)]
    grid = _map(_rossi_job, jobs, workers)
    grid.sort(key=lambda r: (r["m"], r["w"]))
    findings = []
    for r in grid:
        if not r["gcd_ok"]:
            continue
        if not r["hf_nondecreasing"]:
            findings.append(f"FINDING: Hilbert function decreases at m={r['m']}, w={r['w']}")
        if r["cm"]:
            findings.append(f"FINDING: tangent cone is CM at m={r['m']}, w={r['w']}")
    return {"schema": SCHEMA, "command": "scan-rossi", "grid": grid, "findings": findings}


def cmd_verify(case, index, params, w) -> dict:
    curve = shifted_curve(case, index, params, w)
    gens = predicted_generators(case, index, params, w)
    out = {
        "schema": SCHEMA,
        "command": "verify",
        "case": case,
        "index": index,
        "params": params.as_dict(),
        "w": w,
        "n": list(curve.n),
        "gcd": curve.gcd,
        "generators": [str(b) for b in gens],
        "in_lattice": [curve.contains(b) for b in gens],
    }
    out["ci_verified"] = verify_ci(curve, gens) if curve.is_coprime else None
    return out


def cmd_raw_n(n, member=None) -> dict:
    out = {"schema": SCHEMA, "command": "verify", "n": list(n), "gcd": gcd4(n)}
    if out["gcd"] == 1:
        curve = MonomialCurve(n)
        out["critical_exponents"] = [critical_exponent(i, curve) for i in range(1, 5)]
    if member is not None:
        out["member"] = {"s": member, "in_semigroup": is_member(member, n)}
    return out


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def render_text(report: dict) -> str:
    lines = []

    def emit(key, value, indent=""):
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            for k, v in value.items():
                emit(k, v, indent + "  ")
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{indent}{key}:")
            for item in value:
                lines.append(f"{indent}  -")
                for k, v in item.items():
                    emit(k, v, indent + "    ")
        else:
            lines.append(f"{indent}{key}: {value}")

    for k, v in report.items():
        emit(k, v)
    return "\n".join(lines)


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2)
    return render_text(report)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_params(p, required=True):
    p.add_argument("--case", choices=["A", "B"], type=str.upper, required=required)
    p.add_argument("--a", type=int_list, help="a1,a2,a3,a4")
    p.add_argument("--u", type=int_list, help="u1,u2,u3,u4 (case A) or u1,u2 (case B)")
    p.add_argument("--v", type=int_list, help="v1,v2,v3 (case B)")


def _add_output(p):
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--json", dest="format", action="store_const", const="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cimc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="standard basis, tangent cone, CM verdict and Hilbert data")
    _add_params(p)
    p.add_argument("--priority", type=int_list, default=(4, 3, 2, 1))
    p.add_argument("--hf-terms", type=int, default=None)
    _add_output(p)

    p = sub.add_parser("family", help="scan n + w*v_i over a range of w")
    _add_params(p)
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--w", type=int_range, default=(0, 10))
    p.add_argument("--no-cm", action="store_true", help="skip the tangent cone computation")
    p.add_argument("--priority", type=int_list, default=(4, 3, 2, 1))
    p.add_argument("--workers", type=int, default=1)
    _add_output(p)

    p = sub.add_parser("hilbert", help="Hilbert series of K[x1..x4]/I for a monomial ideal")
    p.add_argument("--ideal", required=True, help='e.g. "x2^2,x3^2,x4^7"')
    p.add_argument("--terms", type=int, default=15)
    _add_output(p)

    p = sub.add_parser("scan-rossi", help="check the Rossi family over an (m, w) grid")
    p.add_argument("--m", type=int_range, default=(1, 3))
    p.add_argument("--w", type=int_range, default=(0, 5))
    p.add_argument("--workers", type=int, default=1)
    _add_output(p)

    p = sub.add_parser("verify", help="complete intersection certificate at one family point")
    _add_params(p, required=False)
    p.add_argument("--index", type=int)
    p.add_argument("--w", type=int, default=1)
    p.add_argument("--raw-n", type=int_list, help="gcd / critical exponents of a raw sequence")
    p.add_argument("--member", type=int, help="with --raw-n: test semigroup membership")
    _add_output(p)
    return parser


def run(args) -> dict:
    if args.command == "analyze":
        return cmd_analyze(params_from_args(args), args.priority, args.hf_terms)
    if args.command == "family":
        lo, hi = args.w
        return cmd_family(args.case, args.index, params_from_args(args), lo, hi,
                          not args.no_cm, args.priority, args.workers)
    if args.command == "hilbert":
        return cmd_hilbert(MonomialIdeal.parse(args.ideal), args.terms)
    if args.command == "scan-rossi":
        (m_lo, m_hi), (w_lo, w_hi) = args.m, args.w
        if m_lo < 1:
            raise UsageError("m must be at least 1")
        return cmd_scan_rossi(m_lo, m_hi, w_lo, w_hi, args.workers)
    if args.command == "verify":
        if args.raw_n is not None:
            if len(args.raw_n) != 4 or any(x < 1 for x in args.raw_n):
                raise UsageError("--raw-n needs four positive integers")
            return cmd_raw_n(args.raw_n, args.member)
        if args.case is None or args.index is None:
            raise UsageError("verify needs --raw-n, or --case and --index with parameters")
        if args.w < 0:
            raise UsageError("w must be non-negative")
        return cmd_verify(args.case, args.index, params_from_args(args), args.w)
    raise UsageError(f"unknown command {args.command!r}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = run(args)
    except (UsageError, NotCoprime, PreconditionError, IndexError, ValueError) as exc:
        print(f"cimc: error: {exc}", file=sys.stderr)
        return 2
    except (CompletionLimitError, BinomialityError, ArithmeticError) as exc:
        print(f"cimc: internal diagnostic: {exc}", file=sys.stderr)
        return 1
    print(render(report, args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
