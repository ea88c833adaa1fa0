"""Command line driver: verify suites, print the Stirling table, enumerate arrays.

Exit codes: 0 when every selected check passes, 1 on any failing check,
2 on a usage error.  YB_LAB_THREADS caps the number of worker processes.
"""

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict

from . import transcomb as tc
from .suites import SUITES, RunConfig, list_suites

VERSION = "0.1.0"
SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parser():
    p = _Parser(prog="yblab")
    sub = p.add_subparsers(dest="command")

    v = sub.add_parser("verify")
    v.add_argument("--suite", default="all")
    v.add_argument("--family")
    v.add_argument("--n", type=int)
    v.add_argument("--m", type=int)
    v.add_argument("--ell", type=int, default=3)
    v.add_argument("--colors", type=int)
    v.add_argument("--tier", default="required")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--format", dest="fmt", default="json")
    v.add_argument("--out")

    t = sub.add_parser("table")
    t.add_argument("--stirling", action="store_true")
    t.add_argument("--n-max", type=int, default=7)
    t.add_argument("--tier", default="required")
    t.add_argument("--format", dest="fmt", default="csv")
    t.add_argument("--out")

    e = sub.add_parser("enumerate")
    kind = e.add_mutually_exclusive_group()
    kind.add_argument("--matrices", action="store_true")
    kind.add_argument("--arrays", action="store_true")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--colors", type=int, default=2)
    e.add_argument("--count-only", action="store_true")
    e.add_argument("--out")

    sub.add_parser("list-suites")
    return p


def threads():
    cap = os.environ.get("YB_LAB_THREADS")
    n = os.cpu_count() or 1
    if cap:
        try:
            n = max(1, min(n, int(cap)))
        except ValueError:
            raise UsageError("YB_LAB_THREADS must be an integer")
    return n


def _run_suite(args):
    name, cfg = args
    recs = SUITES[name][0](cfg)
    for r in recs:
        r["suite"] = name
    return recs


def run(cfg):
    """Run the selected suites; returns (exit code, report dict)."""
    cfg.validate()
    if cfg.suite == "all":
        names = list(SUITES)
    else:
        names = cfg.suite.split(",")
        unknown = [s for s in names if s not in SUITES]
        if unknown:
            raise UsageError("unknown suite(s): %s" % ", ".join(unknown))
    t0 = time.perf_counter()
    jobs = [(s, cfg) for s in names]
    workers = min(threads(), len(jobs))
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            parts = list(ex.map(_run_suite, jobs))
    else:
        parts = [_run_suite(j) for j in jobs]
    checks = [r for part in parts for r in part]
    ok = all(r["status"] == "pass" for r in checks)
    report = {
        "schema_version": SCHEMA_VERSION,
        "version": VERSION,
        "config": asdict(cfg),
        "status": "pass" if ok else "fail",
        "checks": checks,
        "wall_clock": round(time.perf_counter() - t0, 3),
    }
    return (0 if ok else 1), report


def report_csv(report):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["suite", "name", "status", "passed", "total", "anchor"])
    for r in report["checks"]:
        c = r["counts"]
        w.writerow([r["suite"], r["name"], r["status"], c.get("passed", ""), c.get("total", ""), r["anchor"]])
    return buf.getvalue()


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_verify(ns):
    cfg = RunConfig(command="verify", suite=ns.suite, family=ns.family, n=ns.n, m=ns.m, ell=ns.ell,
                    colors=ns.colors, tier=ns.tier, seed=ns.seed, fmt=ns.fmt, out=ns.out)
    try:
        cfg.validate()
    except ValueError as e:
        raise UsageError(str(e))
    code, report = run(cfg)
    text = json.dumps(report, indent=2) + "\n" if cfg.fmt == "json" else report_csv(report)
    _emit(text, cfg.out)
    for r in report["checks"]:
        print("%-4s %s/%s" % (r["status"], r["suite"], r["name"]), file=sys.stderr)
    return code


def _cmd_table(ns):
    if not ns.stirling:
        raise UsageError("table needs --stirling")
    if ns.fmt != "csv":
        raise UsageError("table supports --format csv only")
    if not 2 <= ns.n_max <= 9:
        raise UsageError("--n-max must lie in 2..9")
    if ns.n_max > 7 and ns.tier != "stretch":
        raise UsageError("--n-max above 7 needs --tier stretch")
    _emit(tc.stirling_table_csv(ns.n_max), ns.out)
    return 0


def _cmd_enumerate(ns):
    if ns.n < 1 or ns.n > 7 or ns.colors < 1 or ns.colors > 6:
        raise UsageError("--n must lie in 1..7 and --colors in 1..6")
    gen = tc.enumerate_transitive_arrays(ns.n, ns.colors) if ns.arrays \
        else tc.enumerate_transitive_matrices(ns.n, ns.colors)
    if ns.count_only:
        _emit("%d\n" % sum(1 for _ in gen), ns.out)
    else:
        _emit("".join(" ".join(map(str, x.entries)) + "\n" for x in gen), ns.out)
    return 0


def main(argv=None):
    try:
        ns = _parser().parse_args(argv)
        if ns.command == "verify":
            return _cmd_verify(ns)
        if ns.command == "table":
            return _cmd_table(ns)
        if ns.command == "enumerate":
            return _cmd_enumerate(ns)
        if ns.command == "list-suites":
            print("\n".join(list_suites()))
            return 0
        raise UsageError("missing command")
    except UsageError as e:
        print("usage error: %s" % e, file=sys.stderr)
        return 2
