"""Command-line front end: ``oracle-usd <command> ...``.

Exit codes: 0 ok, 1 precondition/verification failure, 2 parse or usage
error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor

from . import operators as ops
from . import verify as verify_mod
from .functions import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    FunctionSetFormatError,
    enumerate_tif_sets,
    is_classically_distinguishable,
    is_totally_indistinguishable,
    load_function_set,
)
from .gram import (
    analysis_record,
    coincidence_matrix,
    exact_determinant,
    grover_gamma_closed_form,
    grover_phase_gram_det,
    grover_set,
)
from .multicall import distinguishable_with_calls, minimal_calls_search, sufficient_calls_bound
from .tif import (
    NotTotallyIndistinguishable,
    build_graph,
    column_profile,
    graph_to_text,
    m2_tif_verdict,
    tif4_det,
    tif4_verdict,
)

EXIT_OK, EXIT_ERROR, EXIT_PARSE, EXIT_BUDGET = 0, 1, 2, 3
BRUTE_FORCE_MAX_DIM = 64
TEXT_DET_DIGITS = 40


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_ERROR):
        super().__init__(message)
        self.code = code


def _fmt_det(det: int, verbose: bool) -> str:
    text = str(det)
    if verbose or len(text) <= TEXT_DET_DIGITS:
        return text
    return f"{text[:12]}...{text[-6:]} ({len(text)} digits)"


def _matrix_text(rows) -> str:
    width = max(len(str(v)) for r in rows for v in r)
    return "\n".join("  " + " ".join(str(v).rjust(width) for v in r) for r in rows)


def _emit(args, record: dict, text: str):
    if args.format == "json":
        print(json.dumps(record))
    else:
        print(text)


def _load(path):
    try:
        return load_function_set(path)
    except FileNotFoundError:
        raise CliError(f"{path}: no such file", EXIT_PARSE) from None
    except FunctionSetFormatError as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from None


# -- commands ----------------------------------------------------------------


def cmd_analyze(args) -> int:
    s = _load(args.file)
    rec = analysis_record(s)
    x0 = is_classically_distinguishable(s)
    rec["classical_x0"] = x0
    rec["totally_indistinguishable"] = is_totally_indistinguishable(s)
    if args.brute_force:
        if s.m * s.n > BRUTE_FORCE_MAX_DIM:
            raise CliError(
                f"brute force needs M*N <= {BRUTE_FORCE_MAX_DIM}, got {s.m * s.n}", EXIT_BUDGET
            )
        try:
            bf = ops.brute_force_linear_independence(ops.standard_oracles(s))
        except ops.TriviallyDependentError:
            bf = False
        if bf != rec["distinguishable"]:
            raise CliError("brute-force rank disagrees with the coincidence determinant")
        rec["brute_force"] = bf
    det = int(rec["det"])
    lines = [
        f"functions: K={s.k}, M={s.m}, N={s.n}",
        "Gamma:",
        _matrix_text(rec["gamma"]),
        f"det(Gamma) = {_fmt_det(det, args.verbose)}",
        "unambiguously distinguishable" if det > 0 else "NOT unambiguously distinguishable",
        f"classically distinguishable at x0 = {x0}" if x0 is not None else "not classically distinguishable",
        f"totally indistinguishable: {'yes' if rec['totally_indistinguishable'] else 'no'}",
    ]
    if args.brute_force:
        lines.append("brute-force operator rank: agrees")
    _emit(args, rec, "\n".join(lines))
    return EXIT_OK


def _tif_record(s) -> dict:
    gamma = coincidence_matrix(s)
    det = exact_determinant(gamma)
    return {"functions": s.rows(), "det": str(det), "distinguishable": det > 0}


def cmd_enumerate_tif(args) -> int:
    found = []
    complete = True
    try:
        for s in enumerate_tif_sets(args.m, args.n, args.k, budget=args.budget):
            found.append(s)
    except BudgetExceeded:
        complete = False
    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        records = list(pool.map(_tif_record, found))
    summary = {
        "m": args.m,
        "n": args.n,
        "k": args.k,
        "count": len(records),
        "distinguishable": sum(r["distinguishable"] for r in records),
        "complete": complete,
    }
    if args.format == "json":
        print(json.dumps({"sets": records, "summary": summary}))
    else:
        for r in records:
            verdict = "distinguishable" if r["distinguishable"] else "not distinguishable"
            print(f"{r['functions']}  det={r['det']}  {verdict}")
        print(
            f"{summary['count']} TIF sets, {summary['distinguishable']} distinguishable"
            + ("" if complete else " (INCOMPLETE: budget exceeded)")
        )
    return EXIT_OK if complete else EXIT_BUDGET


def cmd_grover(args) -> int:
    m = args.m
    if m < 2:
        raise CliError("grover needs m >= 2")
    closed = grover_gamma_closed_form(m)
    exact = exact_determinant(coincidence_matrix(grover_set(m)))
    rec = {
        "m": m,
        "det_closed_form": str(closed.determinant),
        "det_exact": str(exact),
        "eigenvalues": [[str(v), mult] for v, mult in closed.eigenvalues],
        "agree": exact == closed.determinant,
    }
    lines = [
        f"Grover set M={m}: det closed form {closed.determinant}, exact {exact}",
        "eigenvalues: " + ", ".join(f"{v} (x{mult})" for v, mult in closed.eigenvalues),
    ]
    if args.theta is not None:
        formula = grover_phase_gram_det(m, args.theta)
        numeric = ops.grover_phase_gram_det_numeric(m, args.theta)
        rec.update({"theta": args.theta, "phase_det_formula": formula, "phase_det_numeric": numeric})
        scale = max(abs(formula), 1.0)
        rec["phase_agree"] = abs(formula - numeric) <= 1e-9 * scale
        lines.append(f"phase oracles theta={args.theta}: formula {formula:.12g}, numeric {numeric:.12g}")
    _emit(args, rec, "\n".join(lines))
    agree = rec["agree"] and rec.get("phase_agree", True)
    return EXIT_OK if agree else EXIT_ERROR


def cmd_graph(args) -> int:
    s = _load(args.file)
    if s.m != 2:
        raise CliError(f"graph needs m = 2, got m = {s.m}")
    g = build_graph(s)
    try:
        verdict = m2_tif_verdict(s)
    except NotTotallyIndistinguishable as exc:
        raise CliError(f"precondition failed: {exc}") from None
    cycles = [list(c.vertices) for c in verdict.cycles]
    rec = {
        "vertices": [[j, x, y] for j, (x, y) in g.vertices],
        "edges": [[a, b, ax] for a, b, ax in g.edges],
        "cycles": cycles,
        "det": str(verdict.det),
        "distinguishable": verdict.distinguishable,
    }
    text = graph_to_text(g) + "".join(
        f"# cycle {i}: {' '.join(map(str, c))}\n" for i, c in enumerate(cycles)
    ) + f"# det(Gamma) = {verdict.det}: NOT unambiguously distinguishable"
    _emit(args, rec, text)
    return EXIT_OK


def cmd_multicall(args) -> int:
    if args.c_max < 1:
        raise CliError("--c-max must be >= 1", EXIT_PARSE)
    s = _load(args.file)
    if s.k < 2:
        raise CliError("multicall needs at least two functions")
    reports = [distinguishable_with_calls(s, c).to_json() for c in range(1, args.c_max + 1)]
    search = minimal_calls_search(s, args.c_max)
    bound = sufficient_calls_bound(s)
    rec = {"reports": reports, "minimal_calls": search.calls, "reason": search.reason, "sufficient_bound": bound}
    lines = [
        f"c={r['c']}: det={_fmt_det(int(r['det']), args.verbose)} "
        f"{'distinguishable' if r['distinguishable'] else 'not distinguishable'}"
        f"{', strictly dominant' if r['dominant'] else ''}"
        for r in reports
    ]
    found = search.calls if search.calls is not None else f"none ({search.reason})"
    lines.append(f"minimal calls: {found}; sufficient bound: {bound}; delta_min: {reports[0]['delta_min']}")
    _emit(args, rec, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(verify_mod.SUITES) if args.scope == "all" else [args.scope]
    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        results = list(pool.map(lambda name: verify_mod.SUITES[name](args.seed), names))
    checks = [c for group in results for c in group]
    ok = all(c.passed for c in checks)
    if args.format == "json":
        print(json.dumps({"checks": [c._asdict() for c in checks], "passed": ok}))
    else:
        for c in checks:
            mark = "PASS" if c.passed else "FAIL"
            print(f"[{mark}] {c.name}" + (f"  ({c.detail})" if c.detail and (args.verbose or not c.passed) else ""))
        print(f"{sum(c.passed for c in checks)}/{len(checks)} checks passed")
    return EXIT_OK if ok else EXIT_ERROR


def cmd_characterize4(args) -> int:
    s = _load(args.file)
    if s.k != 4:
        raise CliError(f"characterize4 needs exactly 4 functions, got {s.k}")
    if not is_totally_indistinguishable(s):
        raise CliError("precondition failed: set is not totally indistinguishable")
    try:
        p = column_profile(s)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    det = tif4_det(p, s.m)
    exact = exact_determinant(coincidence_matrix(s))
    rec = {
        "profile": list(p.as_tuple()),
        "det": str(det),
        "det_exact": str(exact),
        "distinguishable": tif4_verdict(p),
    }
    text = (
        f"column profile (N1, N2, N3, N4) = {p.as_tuple()}\n"
        f"det = 16(M+N1)N2N3N4 = {det} (exact {exact})\n"
        + ("unambiguously distinguishable" if rec["distinguishable"] else "NOT unambiguously distinguishable")
    )
    _emit(args, rec, text)
    return EXIT_OK if det == exact else EXIT_ERROR


# -- parser ------------------------------------------------------------------


def _positive(value: str) -> int:
    iv = int(value)
    if iv < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return iv


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET, help="enumeration cap")
    common.add_argument("--jobs", type=_positive, default=1, help="worker threads")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="oracle-usd",
        description="Exact unambiguous-discrimination analysis for quantum oracle operators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="coincidence matrix, determinant, verdict")
    p.add_argument("file")
    p.add_argument("--brute-force", action="store_true", help="cross-check with explicit operator rank")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("enumerate-tif", parents=[common], help="list totally indistinguishable sets")
    p.add_argument("m", type=_positive)
    p.add_argument("n", type=_positive)
    p.add_argument("k", type=_positive)
    p.set_defaults(func=cmd_enumerate_tif)

    p = sub.add_parser("grover", parents=[common], help="Grover closed forms vs exact/numeric determinants")
    p.add_argument("m", type=int)
    p.add_argument("--theta", type=float, default=None)
    p.set_defaults(func=cmd_grover)

    p = sub.add_parser("graph", parents=[common], help="M=2 graph edge list and cycle witnesses")
    p.add_argument("file")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("multicall", parents=[common], help="parallel-call Hadamard-power analysis")
    p.add_argument("file")
    p.add_argument("--c-max", type=int, default=4)
    p.set_defaults(func=cmd_multicall)

    p = sub.add_parser("verify", parents=[common], help="run built-in verification suites")
    p.add_argument("--scope", choices=("all", *verify_mod.SUITES), default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("characterize4", parents=[common], help="four-function column profile")
    p.add_argument("file")
    p.set_defaults(func=cmd_characterize4)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "theta", None) is not None and not math.isfinite(args.theta):
        parser.error("--theta must be finite")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"oracle-usd: error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
