"""Command-line front end: compute, verify, table, corollary.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .finite_field import MAX_ORDER, is_prime, prime_power
from .verify import SUITES, compute_report, corollary_reconstruction, run_suite, table_row

WHAT = ("rq", "xq", "det", "aq", "decomp", "all")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _s(v):
    return None if v is None else str(v)


def _valid_q(q: int) -> int:
    pf = prime_power(q) if q > 1 else None
    if pf is None or q % 2 == 0:
        raise UsageError(f"q must be an odd prime power, got {q}")
    if q > MAX_ORDER:
        raise UsageError(f"q = {q} exceeds the supported bound {MAX_ORDER}")
    return q


def cmd_compute(args, out) -> int:
    q = _valid_q(args.q)
    if args.what == "decomp" and (prime_power(q)[1] != 1 or q % 4 != 1):
        raise UsageError(f"decomp needs a prime = 1 mod 4, got {q}")
    rep = compute_report(q, args.what)
    if args.format == "json":
        out.write(_dump({"config": {"q": q, "what": args.what}, "reports": [rep.to_json()]}) + "\n")
    else:
        fields = {
            "rq": ("R",), "xq": ("x",), "det": ("det",), "aq": ("a",), "decomp": ("c", "d"),
            "all": ("n", "e", "R", "x", "det", "a", "c", "d"),
        }[args.what]
        out.write(f"q = {q} (p = {rep.p}, f = {rep.f})\n")
        for name in fields:
            v = getattr(rep, name)
            if v is not None:
                out.write(f"{name} = {v}\n")
        for c in rep.checks:
            line = f"[{c.status}] {c.name}"
            out.write(line + (f": {c.detail}" if c.detail else "") + "\n")
    return 1 if rep.failed else 0


def cmd_verify(args, out) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    if args.qmin is not None and args.qmax is not None and args.qmin > args.qmax:
        raise UsageError("--qmin exceeds --qmax")
    results = [run_suite(n, args.qmin, args.qmax, args.jobs) for n in names]
    total = {"pass": 0, "fail": 0, "audit": 0, "skip": 0}
    for r in results:
        for k, v in r["summary"].items():
            total[k] += v
    if args.format == "json":
        doc = {
            "config": {"suite": args.suite, "qmin": args.qmin, "qmax": args.qmax},
            "reports": [rep for r in results for rep in r["reports"]],
            "summary": total,
        }
        out.write(_dump(doc) + "\n")
    else:
        for r in results:
            cfg, s = r["config"], r["summary"]
            out.write(
                f"{cfg['suite']} [{cfg['qmin']}, {cfg['qmax']}]: "
                f"{s['pass']} pass, {s['fail']} fail, {s['audit']} audit, {s['skip']} skip\n"
            )
            for rep in r["reports"]:
                for c in rep["checks"]:
                    if c["status"] in ("fail", "audit"):
                        wit = f" (witness {c['witness']})" if "witness" in c else ""
                        out.write(f"  {c['status'].upper()} {rep['item']} {c['check']}: {c['detail']}{wit}\n")
        out.write(f"total: {total['pass']} pass, {total['fail']} fail, {total['audit']} audit\n")
    return 1 if total["fail"] else 0


def cmd_table(args, out) -> int:
    if args.qmin > args.qmax:
        raise UsageError("--qmin exceeds --qmax")
    from .finite_field import odd_prime_powers

    rows = [table_row(q) for q in odd_prime_powers(args.qmin, args.qmax)]
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["q", "R_q", "x_q", "source", "published_R_q"])
        for r in rows:
            w.writerow([r["q"], r["R_q"], r["x_q"], r["source"], "" if r["published_R_q"] is None else r["published_R_q"]])
        out.write(buf.getvalue())
    else:
        doc = {
            "config": {"qmin": args.qmin, "qmax": args.qmax},
            "rows": [
                {"q": str(r["q"]), "R_q": str(r["R_q"]), "x_q": str(r["x_q"]), "source": r["source"],
                 "published_R_q": _s(r["published_R_q"]), "audit": r["audit"]}
                for r in rows
            ],
            "summary": {
                "pass": sum(r["paths_agree"] for r in rows),
                "fail": sum(not r["paths_agree"] for r in rows),
                "audit": sum(r["source"] == "mismatch" for r in rows),
            },
        }
        out.write(_dump(doc) + "\n")
    return 0 if all(r["paths_agree"] for r in rows) else 1


def cmd_corollary(args, out) -> int:
    p = args.p
    if not is_prime(p) or p % 4 != 3:
        raise UsageError(f"p must be a prime = 3 mod 4, got {p}")
    res = corollary_reconstruction(p)
    if args.format == "json":
        out.write(_dump({k: (v if isinstance(v, bool) else _s(v)) for k, v in res.items()}) + "\n")
    else:
        out.write(f"p = {p}\n")
        out.write(f"-2^(n-1) det A_p = {res['radicand']}\n")
        out.write(f"sqrt = {res['root']}\n")
        out.write(f"delta = {res['delta']}\n")
        out.write(f"reconstructed R_p = {res['reconstructed']}\n")
        out.write(f"direct R_p = {res['R']}\n")
        out.write(("match" if res["ok"] else "MISMATCH") + "\n")
    return 0 if res["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="jacobi-products", description="Exact verification of Jacobi-sum products R_q.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    c = sub.add_parser("compute", help="R_q, x_q, det A_q, a_q, or p = c^2 + 4d^2 for one q")
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--what", choices=WHAT, default="all")
    c.add_argument("--format", choices=("json", "text"), default="text")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="run a verification suite over a range")
    v.add_argument("--suite", choices=list(SUITES) + ["all"], required=True)
    v.add_argument("--qmin", type=int)
    v.add_argument("--qmax", type=int)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=("json", "text"), default="text")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="R_q and x_q against the published table")
    t.add_argument("--qmin", type=int, default=7)
    t.add_argument("--qmax", type=int, default=29)
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.set_defaults(func=cmd_table)

    k = sub.add_parser("corollary", help="recover R_p from det A_p for p = 3 mod 4")
    k.add_argument("--p", type=int, required=True)
    k.add_argument("--format", choices=("json", "text"), default="text")
    k.set_defaults(func=cmd_corollary)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_entry()
