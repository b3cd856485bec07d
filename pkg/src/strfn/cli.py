"""Command-line front door: deterministic JSON reports over spec files.

Exit codes: 0 = property holds / construction succeeded; 1 = property
fails (the report carries a witness); 2 = input or usage error; 3 =
inconclusive — a vacuous verdict, a truncated/skipped-incomplete scan,
or a horizon too short to decide.  Reports go to standard output as
JSON; a one-line human summary goes to standard error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any, Mapping

from .checkers import (
    FAILS,
    VACUOUS,
    CheckReport,
    check_associative_full,
    check_associative_reduced,
    check_equivalent_definitions,
    check_idempotent,
    check_injective_rigidity,
    check_m_bounded,
    check_m_determined_range,
    check_preassociative,
    check_standard,
)
from .core import Alphabet
from .errors import (
    ConditionsFailedError,
    InsufficientHorizonError,
    StrfnError,
    UnevaluableError,
)
from .extension import extend
from .factorization import factorize
from .lengthbased import (
    AlphaFn,
    check_alpha_equations,
    check_length_based,
    check_weakly_length_based,
    classify_alpha,
    minimal_period,
    synthesize_alpha,
)
from .quotient import ThetaSpec, preceq, theta_class, theta_rep_fn
from .specio import (
    _read,
    alpha_to_json,
    factorization_to_json,
    function_to_json,
    load_function,
    load_partial,
    report_to_json,
    reports_to_json,
    theta_class_to_json,
    to_text,
    value_to_json,
)

DEFAULT_BOUND = 6


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="strfn", description="bounded-domain algebra of string functions"
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, inputs: bool = True) -> None:
        if inputs:
            p.add_argument("--input", action="append", default=[],
                           help="input spec file (JSON)")
        p.add_argument("--bound", type=int, default=DEFAULT_BOUND,
                       help="domain bound L (default 6)")
        p.add_argument("--output", help="also write the JSON report to this file")

    p = sub.add_parser("eval", help="evaluate a function at one string")
    common(p)
    p.add_argument("string", help="input string (empty string allowed)")

    p = sub.add_parser("check", help="run one property checker")
    common(p)
    p.add_argument("property", choices=[
        "assoc", "assoc-reduced", "preassoc", "standard", "idempotent",
        "bounded", "range", "equiv-defs", "rigidity", "weakly-length", "length",
    ])
    p.add_argument("--m", type=int, help="output-length bound for bounded/range")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")

    p = sub.add_parser("extend", help="grow a low-arity package to X^<=L")
    common(p)

    p = sub.add_parser("factorize", help="split into relabeling . associative core")
    common(p)

    p = sub.add_parser("alpha", help="length-profile analysis")
    p.add_argument("action", choices=["check", "classify", "synth", "minimize"])
    common(p)

    p = sub.add_parser("theta", help="block-substitution classes and chain")
    p.add_argument("action", choices=["class", "rep", "chain"])
    p.add_argument("string", nargs="?", help="input string for 'class'")
    common(p, inputs=False)
    p.add_argument("--alphabet", required=True,
                   help="alphabet letters in order, e.g. 'ab'")
    p.add_argument("--x0", required=True)
    p.add_argument("--x1", required=True)
    p.add_argument("--m-exp", type=int, default=1, dest="m_exp",
                   help="exponent index m (block length 2^m)")

    p = sub.add_parser("compare", help="kernel quasiorder of two functions")
    common(p)
    return top


def _one_input(args: argparse.Namespace) -> str:
    if len(args.input) != 1:
        raise StrfnError(f"expected exactly one --input, got {len(args.input)}")
    return args.input[0]


def _report_exit(report: CheckReport) -> int:
    if report.verdict == FAILS:
        return 1
    if report.verdict == VACUOUS or report.skipped > 0:
        return 3
    return 0


def _reports_exit(reports: Mapping[str, CheckReport]) -> int:
    codes = {_report_exit(r) for r in reports.values()}
    if 1 in codes:
        return 1
    if 3 in codes:
        return 3
    return 0


def _emit(obj: Any, args: argparse.Namespace, summary: str) -> None:
    text = to_text(obj)
    sys.stdout.write(text)
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    sys.stderr.write(summary + "\n")


def _summarize(name: str, report: CheckReport) -> str:
    line = f"{name}: {report.verdict} (checked {report.checked}, skipped {report.skipped})"
    if report.detail:
        line += f" — {report.detail}"
    return line


def _run_eval(args: argparse.Namespace) -> int:
    fn = load_function(_one_input(args))
    value = fn.eval(args.string)
    _emit({"value": value_to_json(value)}, args, f"eval({args.string!r}) done")
    return 0


def _run_check(args: argparse.Namespace) -> int:
    fn = load_function(_one_input(args))
    level, jobs = args.bound, args.jobs
    needs_m = args.property in ("bounded", "range")
    if needs_m and args.m is None:
        raise StrfnError(f"check {args.property} requires --m")
    if args.property == "assoc":
        result: Any = check_associative_full(fn, level, jobs=jobs)
    elif args.property == "assoc-reduced":
        result = check_associative_reduced(fn, level, jobs=jobs)
    elif args.property == "preassoc":
        result = check_preassociative(fn, level, jobs=jobs)
    elif args.property == "standard":
        result = check_standard(fn, level)
    elif args.property == "idempotent":
        result = check_idempotent(fn, level)
    elif args.property == "bounded":
        result = check_m_bounded(fn, args.m, level)
    elif args.property == "range":
        result = check_m_determined_range(fn, args.m, level)
    elif args.property == "equiv-defs":
        result = check_equivalent_definitions(fn, level)
    elif args.property == "rigidity":
        result = check_injective_rigidity(fn, level)
    elif args.property == "weakly-length":
        result = check_weakly_length_based(fn, level)
    else:
        result = check_length_based(fn, level)

    if isinstance(result, CheckReport):
        _emit(report_to_json(result), args, _summarize(args.property, result))
        return _report_exit(result)
    _emit(reports_to_json(result), args,
          "; ".join(_summarize(k, r) for k, r in result.items()))
    return _reports_exit(result)


def _run_extend(args: argparse.Namespace) -> int:
    spec = load_partial(_one_input(args))
    grown = extend(spec, args.bound)
    _emit(function_to_json(grown), args,
          f"extended to bound {args.bound} ({len(grown.value_map())} entries)")
    return 0


def _run_factorize(args: argparse.Namespace) -> int:
    fn = load_function(_one_input(args))
    fact = factorize(fn, args.bound)
    _emit(factorization_to_json(fact), args,
          "; ".join(_summarize(k, r) for k, r in fact.checks.items()))
    return _reports_exit({
        k: fact.checks[k] for k in ("source-preassociative", "inner-associative")
    })


def _alpha_values(obj: Any) -> list[int]:
    if isinstance(obj, Mapping):
        obj = obj.get("values")
    if not isinstance(obj, list) or not all(isinstance(v, int) for v in obj):
        raise StrfnError("profile input must be an array of integers "
                         "(or an object with a 'values' array)")
    return obj


def _run_alpha(args: argparse.Namespace) -> int:
    data = _read(_one_input(args))
    if args.action == "check":
        report = check_alpha_equations(_alpha_values(data))
        _emit(report_to_json(report), args, _summarize("alpha equations", report))
        return _report_exit(report)
    if args.action == "classify":
        shape = classify_alpha(_alpha_values(data))
        if isinstance(shape, AlphaFn):
            _emit(alpha_to_json(shape), args, f"classified: {shape.kind}")
            return 0
        _emit({"rejected": shape.condition, "message": shape.message},
              args, f"rejected: {shape.message}")
        return 1
    if args.action == "synth":
        if not isinstance(data, Mapping):
            raise StrfnError("synth input must be {n1, ell, window}")
        made = synthesize_alpha(
            data.get("n1"), data.get("ell"), data.get("window", [])
        )
        if isinstance(made, AlphaFn):
            _emit(alpha_to_json(made), args, "synthesized")
            return 0
        _emit({"rejected": made.condition, "message": made.message},
              args, f"rejected: {made.message}")
        return 1
    if not isinstance(data, Mapping) or "witnesses" not in data:
        raise StrfnError("minimize input must be {values, witnesses}")
    start, period = minimal_period(
        _alpha_values(data), [tuple(w) for w in data["witnesses"]]
    )
    _emit({"start": start, "period": period}, args,
          f"minimal combined witness ({start}, {period})")
    return 0


def _run_theta(args: argparse.Namespace) -> int:
    alphabet = Alphabet(tuple(args.alphabet))
    spec = ThetaSpec(args.x0, args.x1, args.m_exp)
    if args.action == "class":
        if args.string is None:
            raise StrfnError("theta class needs a string argument")
        cls = theta_class(args.string, spec, args.bound, alphabet)
        _emit(theta_class_to_json(cls), args,
              f"class of {args.string!r}: {len(cls)} members"
              + (" (truncated)" if cls.truncated else ""))
        return 3 if cls.truncated else 0
    if args.action == "rep":
        fn = theta_rep_fn(alphabet, args.bound, spec)
        _emit(function_to_json(fn), args,
              f"representative table up to bound {args.bound}")
        return 0
    rows = []
    for m in range(1, max(args.m_exp, 2)):
        lo = theta_rep_fn(alphabet, args.bound, ThetaSpec(args.x0, args.x1, m))
        hi = theta_rep_fn(alphabet, args.bound, ThetaSpec(args.x0, args.x1, m + 1))
        cmp = preceq(lo, hi, args.bound)
        rows.append({
            "m": m,
            "relation": cmp.relation,
            "separating": list(cmp.separating) if cmp.separating else None,
        })
    _emit({"chain": rows}, args,
          "; ".join(f"F^{r['m']} {r['relation']} F^{r['m'] + 1}" for r in rows))
    return 0


def _run_compare(args: argparse.Namespace) -> int:
    if len(args.input) != 2:
        raise StrfnError("compare needs exactly two --input files")
    first = load_function(args.input[0])
    second = load_function(args.input[1])
    cmp = preceq(first, second, args.bound)
    _emit({
        "relation": cmp.relation,
        "first_below_second": cmp.first_below_second,
        "second_below_first": cmp.second_below_first,
        "separating": list(cmp.separating) if cmp.separating else None,
    }, args, f"kernel comparison: {cmp.relation}")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    runners = {
        "eval": _run_eval,
        "check": _run_check,
        "extend": _run_extend,
        "factorize": _run_factorize,
        "alpha": _run_alpha,
        "theta": _run_theta,
        "compare": _run_compare,
    }
    try:
        return runners[args.command](args)
    except ConditionsFailedError as exc:
        sys.stdout.write(to_text({
            "error": str(exc), "reports": reports_to_json(exc.reports),
        }))
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except (InsufficientHorizonError, UnevaluableError) as exc:
        sys.stdout.write(to_text({"error": str(exc)}))
        sys.stderr.write(f"inconclusive: {exc}\n")
        return 3
    except StrfnError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
