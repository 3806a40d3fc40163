"""Command-line front end.

Exit codes: 0 success, 1 parse/usage error, 2 not quasi-homogeneous,
3 non-isolated singularity, 4 smooth at the origin, 5 failed self-check.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import __version__
from .checks import default_degree_bound, run_checks
from .grading import NotQuasiHomogeneousError
from .groebner import DEFAULT_MAX_DEGREE, GroebnerDegreeError
from .hamiltonian import mf_generators
from .invariants import (
    InconsistentInvariantsError,
    NonIsolatedSingularityError,
    SmoothAtOriginError,
    analyze,
)
from .poly import ParseError, format_rational, identifiers, parse_polynomial

EXIT_USAGE = 1
EXIT_NOT_QH = 2
EXIT_NON_ISOLATED = 3
EXIT_SMOOTH = 4
EXIT_CHECK_FAILED = 5

_RATIONAL = re.compile(r"^\s*[+-]?\d+(/\d+)?\s*$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors, which is reserved here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    if not _RATIONAL.match(text) or Fraction(text.replace(" ", "")).denominator == 0:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}")
    return Fraction(text.strip())


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("polynomial", help="polynomial text, or '-' to read standard input")
    common.add_argument("--vars", help="comma-separated variable names (default: sorted identifiers)")
    common.add_argument("--weights", help="comma-separated positive weights overriding detection")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-gb-degree", type=int, default=DEFAULT_MAX_DEGREE,
                        help="weighted-degree cap for S-polynomials")

    parser = _Parser(prog="qhsing", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"qhsing {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("analyze", parents=[common], help="full invariant report")
    p = sub.add_parser("lengths", parents=[common], help="lengths of D f^lam / D f^(lam+1)")
    p.add_argument("--lambda", dest="lambdas", action="append", type=_rational, default=[],
                   help="exact rational lambda (repeatable); default: every b-root")
    sub.add_parser("bfunction", parents=[common], help="roots of the b-function")
    sub.add_parser("spectrum", parents=[common], help="spectrum table")
    p = sub.add_parser("hamiltonian", parents=[common], help="generators of M(f)")
    p.add_argument("--degree-bound", type=int, default=None)
    p = sub.add_parser("check", parents=[common], help="run the internal-consistency suite")
    p.add_argument("--degree-bound", type=int, default=None)
    return parser


def _read_input(args):
    text = sys.stdin.read() if args.polynomial == "-" else args.polynomial
    text = text.strip()
    if args.vars:
        names = [v.strip() for v in args.vars.split(",")]
        if not all(names):
            raise UsageError("empty variable name in --vars")
        if len(set(names)) != len(names):
            raise UsageError("variable names must be distinct")
    else:
        names = identifiers(text)
        if not names:
            raise UsageError("no variables found; pass --vars")
    weights = None
    if args.weights:
        try:
            weights = [int(w) for w in args.weights.split(",")]
        except ValueError:
            raise UsageError(f"bad --weights {args.weights!r}") from None
    f = parse_polynomial(text, names)
    if f.nvars < 3:
        raise UsageError("at least 3 variables are required")
    return text, names, f, weights


def _frac_pair(q) -> list:
    q = Fraction(q)
    return [q.numerator, q.denominator]


def _provenance(text, names, report) -> dict:
    return {
        "tool": f"qhsing {__version__}",
        "input": text,
        "polynomial": report.f.to_string(names),
        "variables": list(names),
        "weights": list(report.grading.weights),
        "degree": report.grading.degree,
    }


def _report_dict(report, names) -> dict:
    s = report.summary
    return {
        "mu": report.mu,
        "hilbert": [[k, v] for k, v in sorted(report.jacobi.hilbert.items())],
        "genus": report.genus,
        "h": report.h,
        "b_roots": [_frac_pair(r) + [m] for r, m in report.bfunction.roots],
        "b_function": str(report.bfunction),
        "lengths": [_frac_pair(lam) + [v] for lam, v in sorted(report.lengths.items(), reverse=True)],
        "len_ds": s.len_ds,
        "len_Mf": s.len_Mf,
        "len_H1f": s.len_H1f,
        "len_D_inverse": s.len_D_inverse,
        "kernels": {"p": s.ker_p, "q_minus1": s.ker_q_minus1, "pi": s.ker_pi},
        "generated_by_inverse": s.generated_by_inverse,
        "structure": {
            "delta_summand": report.structure.delta_summand,
            "N_layers": [
                {"delta": report.structure.bottom},
                {"IC": 1},
                {"delta": report.structure.top},
            ],
        },
        "spectrum": [
            {"beta": _frac_pair(e.beta), "j": e.j, "dim": e.dim} for e in report.spectrum
        ],
    }


def _header(text, names, report) -> list:
    g = report.grading
    return [
        f"qhsing {__version__}",
        f"input: {report.f.to_string(names)}",
        f"variables: {', '.join(names)}",
        f"weights: {', '.join(map(str, g.weights))}",
        f"degree: {g.degree}",
    ]


def _spectrum_lines(report) -> list:
    lines = ["spectrum (beta, j, dim; eigenvalue exp(-2 pi i beta)):"]
    for e in report.spectrum:
        lines.append(f"  {format_rational(e.beta)}\t{e.j}\t{e.dim}")
    return lines


def _analyze_text(text, names, report) -> str:
    s = report.summary
    hil = " ".join(f"{k}:{v}" for k, v in sorted(report.jacobi.hilbert.items()))
    lines = _header(text, names, report) + [
        f"milnor number: {report.mu}",
        f"hilbert function: {hil}",
        f"reduced genus: {report.genus}",
        f"h (dim H^(n-2) of the punctured zero set): {report.h}",
        f"b-function: {report.bfunction}",
        "lengths of D f^lam / D f^(lam+1):",
    ]
    for lam, v in sorted(report.lengths.items(), reverse=True):
        lines.append(f"  {format_rational(lam)}: {v}")
    lines += [
        f"length D[s]f^s / D[s]f^(s+1): {s.len_ds}",
        f"length M(f): {s.len_Mf}",
        f"length H^1_f(R): {s.len_H1f}",
        f"length D(1/f) / R: {s.len_D_inverse}",
        f"kernels: p = δ^{s.ker_p}, q_-1 = δ^{s.ker_q_minus1}, pi = δ^{s.ker_pi}",
        f"R[1/f] generated by 1/f: {'yes' if s.generated_by_inverse else 'no'}",
        f"structure: {report.structure}",
    ]
    lines += _spectrum_lines(report)
    return "\n".join(lines)


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(text + "\n")


def _run(args) -> int:
    text, names, f, weights = _read_input(args)
    report = analyze(f, weights=weights, max_degree=args.max_gb_degree)
    prov = _provenance(text, names, report)

    if args.command == "analyze":
        _emit(args, {"provenance": prov, **_report_dict(report, names)},
              _analyze_text(text, names, report))
        return 0

    if args.command == "lengths":
        lams = args.lambdas or sorted(report.bfunction.root_set, reverse=True)
        rows = [(lam, report.length(lam)) for lam in lams]
        _emit(args, {"provenance": prov, "lengths": [_frac_pair(l) + [v] for l, v in rows]},
              "\n".join(f"{format_rational(l)}\t{v}" for l, v in rows))
        return 0

    if args.command == "bfunction":
        _emit(args, {"provenance": prov,
                     "b_roots": [_frac_pair(r) + [m] for r, m in report.bfunction.roots],
                     "b_function": str(report.bfunction)},
              "\n".join([f"b-function: {report.bfunction}"] +
                        [f"{format_rational(r)}\t{m}" for r, m in report.bfunction.roots]))
        return 0

    if args.command == "spectrum":
        _emit(args, {"provenance": prov,
                     "spectrum": _report_dict(report, names)["spectrum"]},
              "\n".join(_spectrum_lines(report)))
        return 0

    if args.command == "hamiltonian":
        bound = default_degree_bound(report) if args.degree_bound is None else args.degree_bound
        if bound < 0:
            raise UsageError("--degree-bound must be nonnegative")
        gens = mf_generators(f, report.grading, bound)
        note = (f"truncated: monomial forms of weighted degree <= {bound}; "
                "no bound is known after which new forms add no generators")
        if args.format == "json":
            payload = {
                "provenance": prov,
                "degree_bound": bound,
                "truncation_note": note,
                "generators": [g.to_string(names) for g in gens],
            }
            _emit(args, payload, "")
        else:
            lines = [f"# {note}"] + [g.to_string(names) for g in gens]
            _emit(args, {}, "\n".join(lines))
        return 0

    if args.command == "check":
        results = run_checks(report, args.degree_bound)
        ok = all(r.passed for r in results)
        _emit(args, {"provenance": prov,
                     "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail}
                                for r in results],
                     "passed": ok},
              "\n".join([r.line() for r in results] + ["ALL PASS" if ok else "SOME CHECKS FAILED"]))
        return 0 if ok else EXIT_CHECK_FAILED

    raise UsageError(f"unknown command {args.command}")


def _join_lambda_values(argv):
    # "--lambda -4/3" would otherwise be read as an unknown option
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--lambda":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--lambda={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = _build_parser().parse_args(_join_lambda_values(argv))
    try:
        return _run(args)
    except NotQuasiHomogeneousError as e:
        code, msg = EXIT_NOT_QH, str(e)
    except NonIsolatedSingularityError as e:
        code, msg = EXIT_NON_ISOLATED, str(e)
    except SmoothAtOriginError as e:
        code, msg = EXIT_SMOOTH, str(e)
    except InconsistentInvariantsError as e:
        code, msg = EXIT_CHECK_FAILED, f"internal inconsistency: {e}"
    except (ParseError, UsageError, GroebnerDegreeError, ValueError) as e:
        code, msg = EXIT_USAGE, str(e)
    sys.stderr.write(f"error: {msg}\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
