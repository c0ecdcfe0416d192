"""Command line entry point: ``tmcf <subcommand> --i I [--depth D | --length L] ...``."""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Callable

from . import conjecture, verify
from .cfengine import cf_of_series
from .exactalg import format_polynomial, format_rational
from .words import to_ab, to_signs, word_prefix

SUBCOMMANDS = ("word", "series", "cf", "predict", "verify", "measure", "ppoly", "lambda")


class UsageError(Exception):
    pass


@dataclass
class CommandConfig:
    subcommand: str
    i: int
    n: int  # depth or length, depending on the subcommand
    precision: int | None = None
    format: str = "text"
    output: str | None = None
    alphabet: str = "ab"
    timing: bool = False


def _quotient_line(n, q) -> str:
    return f"{n}: lambda = {format_rational(q.leading_coefficient)}, b = {format_polynomial(q.monic())}"


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _precision(cfg: CommandConfig, warn: Callable[[str], None]) -> int:
    needed = verify.required_precision(cfg.i, cfg.n)
    if cfg.precision is None:
        return needed
    if cfg.precision < 1:
        raise UsageError("--precision must be >= 1")
    if cfg.precision < needed:
        warn(
            f"warning: precision {cfg.precision} is below the {needed} needed to certify "
            f"{cfg.n} quotients; fewer may be reported"
        )
    return cfg.precision


def _word(cfg, warn):
    w = word_prefix(cfg.i, cfg.n)
    if cfg.format == "json":
        return 0, _dump({"i": cfg.i, "length": cfg.n, "word": to_ab(w), "letters": list(w)})
    return 0, (to_ab(w) if cfg.alphabet == "ab" else to_signs(w)) + "\n"


def _series(cfg, warn):
    s = verify.theta_series(cfg.i, cfg.n)
    if cfg.format == "json":
        return 0, _dump(
            {
                "i": cfg.i,
                "precision": s.precision,
                "top": s.top,
                "coefficients": [format_rational(c) for c in s.coeffs],
            }
        )
    return 0, f"{s}\n"


def _cf(cfg, warn):
    N = _precision(cfg, warn)
    exp = cf_of_series(verify.theta_series(cfg.i, N))
    qs = exp.quotients[: cfg.n]
    if len(qs) < cfg.n:
        warn(f"warning: only {len(qs)} quotients certified at precision {N}")
    if cfg.format == "json":
        return 0, _dump([format_polynomial(exp.cf.a0)] + [format_polynomial(q) for q in qs])
    return 0, "".join(_quotient_line(n, q) + "\n" for n, q in enumerate(qs, 1))


def _predict(cfg, warn):
    qs = conjecture.predicted_expansion(cfg.i, cfg.n)
    if cfg.format == "json":
        return 0, _dump(
            [
                {
                    "index": n,
                    "lambda": format_rational(q.leading_coefficient),
                    "b": format_polynomial(q.monic()),
                    "quotient": format_polynomial(q),
                }
                for n, q in enumerate(qs, 1)
            ]
        )
    return 0, "".join(_quotient_line(n, q) + "\n" for n, q in enumerate(qs, 1))


def _verify(cfg, warn):
    N = _precision(cfg, warn)
    report = verify.verify_expansion(cfg.i, cfg.n, precision=N)
    code = 0 if report.ok else 1
    if cfg.format == "json":
        return code, _dump(report.to_dict(include_elapsed=cfg.timing))
    lines = [f"theta_{cfg.i}: precision {report.precision_used}, certified {report.depth_certified}"]
    for m in report.matches:
        status = "ok" if m.equal else ("uncertified" if m.computed is None else "MISMATCH")
        lines.append(f"{m.index}: {status}  predicted {format_polynomial(m.predicted)}")
        if m.computed is not None and not m.equal:
            lines.append(f"{m.index}:           computed  {format_polynomial(m.computed)}")
    lines.append(f"{report.n_equal}/{report.depth_requested} quotients match")
    if report.measure_estimate is not None:
        lines.append(f"irrationality measure estimate: {format_rational(report.measure_estimate)}")
    if cfg.timing:
        lines.append(f"elapsed: {report.elapsed:.3f} s")
    return code, "\n".join(lines) + "\n"


def _measure(cfg, warn):
    if cfg.n < 3:
        raise UsageError("measure needs --depth >= 3")
    est = verify.irrationality_estimate(cfg.i, cfg.n)
    if cfg.format == "json":
        return 0, _dump(
            {"i": est.i, "depth": est.depth, "value": format_rational(est.value), "method": verify.MEASURE_METHOD}
        )
    return 0, f"{format_rational(est.value)} (~{float(est.value):.6f}, target {2 * cfg.i})\n"


def _ppoly(cfg, warn):
    if cfg.i < 2:
        raise UsageError("ppoly needs --i >= 2")
    values = conjecture.p_values_at_one(cfg.i, cfg.n)
    rows = []
    for m, (v, dv) in enumerate(values, 1):
        p = conjecture.p_poly(cfg.i, m)
        rows.append({"m": m, "degree": p.degree, "P": format_polynomial(p), "P_at_1": format_rational(v), "dP_at_1": format_rational(dv)})
    if cfg.format == "json":
        return 0, _dump(rows)
    return 0, "".join(
        f"{r['m']}: deg = {r['degree']}, P(1) = {r['P_at_1']}, P'(1) = {r['dP_at_1']}, P = {r['P']}\n" for r in rows
    )


def _lambda(cfg, warn):
    vals = conjecture.lambda_sequence(cfg.i).table(cfg.n)
    if cfg.format == "json":
        return 0, _dump({"i": cfg.i, "lambda": [format_rational(v) for v in vals]})
    return 0, "".join(f"{n}: lambda = {format_rational(v)}\n" for n, v in enumerate(vals, 1))


HANDLERS = {
    "word": _word,
    "series": _series,
    "cf": _cf,
    "predict": _predict,
    "verify": _verify,
    "measure": _measure,
    "ppoly": _ppoly,
    "lambda": _lambda,
}


def run(cfg: CommandConfig, warn: Callable[[str], None] | None = None) -> tuple[int, str]:
    """Dispatch one command; returns (exit code, rendered output)."""
    if warn is None:
        def warn(msg):
            print(msg, file=sys.stderr)
    if cfg.subcommand not in HANDLERS:
        raise UsageError(f"unknown subcommand {cfg.subcommand!r}")
    if cfg.i < 1:
        raise UsageError("--i must be >= 1")
    if cfg.n < 1:
        raise UsageError("--depth/--length must be >= 1")
    return HANDLERS[cfg.subcommand](cfg, warn)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tmcf",
        description="Continued fractions of the Thue-Morse-type series theta_i in Q((1/T)).",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)
    helps = {
        "word": "prefix of the word W(i)",
        "series": "theta_i truncated at T^-N",
        "cf": "certified continued fraction of theta_i",
        "predict": "predicted partial quotients",
        "verify": "compare computed and predicted expansions",
        "measure": "irrationality measure estimate",
        "ppoly": "P polynomials with P(1), P'(1)",
        "lambda": "leading coefficients lambda_{i,n}",
    }
    for name in SUBCOMMANDS:
        p = sub.add_parser(name, help=helps[name])
        p.add_argument("--i", type=int, required=True, help="family index i >= 1")
        if name in ("word", "series"):
            p.add_argument("--length", "--depth", dest="n", type=int, required=True)
        else:
            p.add_argument("--depth", "--length", dest="n", type=int, required=True)
        if name in ("cf", "verify"):
            p.add_argument("--precision", type=int, default=None, help="override the series precision N")
        if name == "word":
            p.add_argument("--alphabet", choices=("ab", "pm"), default="ab", help="letters as a/b or +1,-1")
        if name == "verify":
            p.add_argument("--timing", action="store_true", help="report wall time")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--output", default=None, help="write to this file instead of stdout")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = CommandConfig(
        subcommand=args.subcommand,
        i=args.i,
        n=args.n,
        precision=getattr(args, "precision", None),
        format=args.format,
        output=args.output,
        alphabet=getattr(args, "alphabet", "ab"),
        timing=getattr(args, "timing", False),
    )
    try:
        code, text = run(cfg)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"tmcf: error: {exc}", file=sys.stderr)
        return 2
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
