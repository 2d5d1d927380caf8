"""Command line front end: ``beatty-kloosterman SUBCOMMAND ...``.

Exit codes: 0 success, 2 config error, 3 precision exhausted,
4 precondition violation.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from pathlib import Path
from typing import Dict, List, Optional

from . import beatty, discrepancy, expsums, harness, hyperbola, irrational
from .errors import ConfigError, PrecisionExhausted, PreconditionError

EXIT_OK, EXIT_CONFIG, EXIT_PRECISION, EXIT_PRECONDITION = 0, 2, 3, 4


def _emit(rows: List[Dict[str, object]], fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        payload = rows[0] if len(rows) == 1 else rows
        out.write(json.dumps(payload, indent=2, default=str) + "\n")
        return
    cols: List[str] = []
    for r in rows:
        cols += [k for k in r if k not in cols]
    w = csv.writer(out, lineterminator="\n")
    w.writerow(cols)
    for r in rows:
        w.writerow([harness._fmt(r.get(c, "")) for c in cols])


def _sum_row(v) -> Dict[str, object]:
    return {"re": v.re, "im": v.im, "abs": abs(v), "err": v.err}


def _beatty_args(args):
    if args.alpha is None:
        if args.beta is not None:
            raise PreconditionError("--beta needs --alpha")
        return None, None
    return irrational.parse_slope(args.alpha), irrational.parse_shift(args.beta or "0")


def cmd_kloosterman(args):
    v = expsums.kloosterman(args.p, args.x, args.y)
    return [dict(p=args.p, x=args.x, y=args.y, **_sum_row(v), weil_bound=expsums.weil_bound(args.p, args.x, args.y))]


def cmd_beatty_sum(args):
    v = expsums.beatty_kloosterman(args.p, irrational.parse_slope(args.alpha),
                                   irrational.parse_shift(args.beta), args.N, args.x, args.y)
    return [dict(p=args.p, alpha=args.alpha, beta=args.beta, N=args.N, x=args.x, y=args.y, **_sum_row(v))]


def cmd_discrepancy(args):
    alpha, beta = irrational.parse_slope(args.alpha), irrational.parse_shift(args.beta)
    d = discrepancy.beatty_discrepancy(alpha, beta, args.N)
    s = discrepancy.star_discrepancy(discrepancy.beatty_points(alpha, beta, args.N))
    return [dict(alpha=args.alpha, beta=args.beta, N=args.N, discrepancy=d.value,
                 x=d.x, y=d.y, x_limit=d.x_limit, y_limit=d.y_limit, star=s.value)]


def cmd_hyperbola(args):
    alpha, beta = _beatty_args(args)
    window = beatty.window_for(alpha, beta, args.p - 1) if alpha is not None else None
    rows = []
    for pt in hyperbola.hyperbola_points(args.p, args.z):
        row = dict(m=pt.m, m_tilde=pt.m_tilde)
        if window is not None:
            row["in_beatty"] = pt.m in window
        rows.append(row)
    return rows


def cmd_least_max(args):
    alpha, beta = _beatty_args(args)
    row = dict(p=args.p, z=args.z % args.p)
    if alpha is None:
        F, pt = hyperbola.least_max(args.p, args.z)
    else:
        res = hyperbola.least_max_beatty(args.p, args.z, alpha, beta)
        if res is None:
            return [dict(row, F="none", m="", m_tilde="")]
        F, pt = res
    bound = hyperbola.theorem1_bound(args.p, args.log_base)
    return [dict(row, F=F, m=pt.m, m_tilde=pt.m_tilde, theorem1_bound=bound)]


def cmd_detector(args):
    r = hyperbola.detector(args.p, irrational.parse_slope(args.alpha), irrational.parse_shift(args.beta),
                           args.M, log_base=args.log_base)
    return [dict(p=r.p, alpha=args.alpha, beta=args.beta, M=r.M, lhs=r.lhs, lhs_with_zero=r.lhs_with_zero,
                 rhs=r.rhs, holds=r.holds, degenerate=r.degenerate, members=r.members)]


def cmd_moments(args):
    sigma = expsums.fourth_moment_sigma(args.p)
    tot = expsums.xu_total(args.p, "exhaustive")
    rhs = args.p**2 * tot.total_below_p
    return [dict(p=args.p, sigma=sigma, p2_xu_sum_below_p=rhs, rel_error=abs(sigma - rhs) / rhs)]


def cmd_xu(args):
    mode = "exhaustive" if args.p <= expsums.EXHAUSTIVE_LIMIT else "structured"
    rows = [dict(p=args.p, u=u, count=c) for u, c in enumerate(expsums.xu_counts(args.p, mode), 1)]
    tot = expsums.xu_total(args.p, mode)
    rows.append(dict(p=args.p, u="total", count=tot.total, total_below_p=tot.total_below_p,
                     bound=tot.count_bound, within_bound=tot.within_bound))
    return rows


def cmd_figure1(args):
    rows = harness.emit_figure1(args.p, args.z, irrational.parse_slope(args.alpha),
                                irrational.parse_shift(args.beta), args.output)
    return [dict(p=args.p, z=args.z % args.p, rows=rows, path=args.output)]


def cmd_experiment(args):
    cfg = harness.load_config(args.config)
    name = Path(cfg.output).name if cfg.output else f"{cfg.kind}.{args.format}"
    if Path(name).suffix.lstrip(".") != args.format:
        name = f"{Path(name).stem}.{args.format}"
    cfg.output = str(Path(args.output) / name)  # figure1 CSVs land next to the record file
    records = harness.run_grid(cfg, threads=args.threads)
    out_dir = Path(args.output)
    harness.write_records(records, out_dir / name, args.format)
    failed = sum(r.status != "ok" for r in records)
    summary = dict(kind=cfg.kind, records=len(records), failed=failed, path=str(out_dir / name))
    ratios = [v for r in records for v in r.ratios.values() if r.status == "ok" and math.isfinite(v)]
    if ratios:
        summary["max_ratio"] = max(ratios)
    return [summary]


def cmd_theorem_bound(args):
    r = hyperbola.theorem_bound(args.p, irrational.parse_slope(args.alpha), irrational.parse_shift(args.beta),
                                log_base=args.log_base)
    ex = hyperbola.exponent_check()
    return [dict(p=args.p, N=r.N, bound=r.bound, simplified_lhs=r.simplified_lhs,
                 trivial_at_scale=r.trivial_at_scale, exponent=str(ex), exponent_negative=ex < 0)]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--log-base", choices=["e", "2"], default=argparse.SUPPRESS)
    common.add_argument("--precision-bits", type=int, default=argparse.SUPPRESS, metavar="B")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS, metavar="T")
    common.add_argument("--format", choices=["csv", "json"], default=argparse.SUPPRESS)

    ap = argparse.ArgumentParser(prog="beatty-kloosterman", parents=[common],
                                 description="Kloosterman sums along Beatty sequences and modular hyperbolas.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, *positional, help=None):
        sp = sub.add_parser(name, parents=[common], help=help)
        for arg, kind in positional:
            sp.add_argument(arg, type=kind)
        sp.set_defaults(func=func)
        return sp

    add("kloosterman", cmd_kloosterman, ("p", int), ("x", int), ("y", int), help="complete sum Kl_p(x, y)")
    add("beatty-sum", cmd_beatty_sum, ("p", int), ("alpha", str), ("beta", str), ("N", int),
        ("x", int), ("y", int), help="sum over the first N Beatty terms")
    add("discrepancy", cmd_discrepancy, ("alpha", str), ("beta", str), ("N", int),
        help="extreme and star discrepancy of {n alpha + beta}")
    for name, func in (("hyperbola", cmd_hyperbola), ("least-max", cmd_least_max)):
        sp = add(name, func, ("p", int), ("z", int),
                 help="points of m*mt = z mod p" if name == "hyperbola" else "least max(m, mt)")
        sp.add_argument("--alpha")
        sp.add_argument("--beta")
    add("detector", cmd_detector, ("p", int), ("alpha", str), ("beta", str), ("M", int),
        help="sufficient condition for F(z mod p) <= M")
    add("moments", cmd_moments, ("p", int), help="fourth moment identity")
    add("xu", cmd_xu, ("p", int), help="solution counts #X_u")
    sp = add("figure1", cmd_figure1, ("p", int), ("z", int), ("alpha", str), ("beta", str),
             help="hyperbola points with Beatty membership")
    sp.add_argument("-o", "--output", required=True)
    exp = sub.add_parser("experiment", parents=[common], help="config-driven sweeps")
    exp_sub = exp.add_subparsers(dest="action", required=True)
    run = exp_sub.add_parser("run", parents=[common])
    run.add_argument("config")
    run.add_argument("-o", "--output", required=True, metavar="DIR")
    run.set_defaults(func=cmd_experiment)
    add("theorem-bound", cmd_theorem_bound, ("p", int), ("alpha", str), ("beta", str),
        help="final bound quantities at p")
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    for key, default in (("log_base", "e"), ("precision_bits", None), ("threads", 1), ("format", "csv")):
        if not hasattr(args, key):
            setattr(args, key, default)
    try:
        if args.precision_bits is not None:
            try:
                irrational.set_default_budget(args.precision_bits)
            except ValueError as exc:
                raise ConfigError(str(exc), "--precision-bits") from None
        rows = args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except PrecisionExhausted as exc:
        print(f"precision exhausted: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except (PreconditionError, ValueError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    _emit(rows, args.format)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
