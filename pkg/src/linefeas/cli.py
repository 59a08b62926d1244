"""Command-line front end.

Exit status: 0 success / feasible, 1 negative result, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from math import comb

from . import closed_form, constructors, oracle
from .graph_core import Pattern, has_induced

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _graph_text(args, w: constructors.Witness) -> str:
    if args.dot:
        return w.graph.to_dot()
    return w.graph.to_edge_list()


def _emit_witness(args, w: constructors.Witness, extra: dict | None = None) -> None:
    cert = w.certificate()
    if extra:
        cert.update(extra)
    if args.json:
        data = dict(cert, vertex_count=w.graph.vertex_count, edges=w.graph.sorted_edges())
        _emit(args, json.dumps(data, separators=(",", ":")) + "\n")
        return
    _emit(args, _graph_text(args, w))
    stream = sys.stdout if args.output else sys.stderr
    print(json.dumps(cert, separators=(",", ":")), file=stream)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise UsageError(message)


def cmd_intervals(args) -> int:
    _require(args.n >= 1, "N must be >= 1")
    iv = closed_form.nonfeasible_intervals(args.n)
    if args.json:
        print(iv.to_json())
    elif not iv.intervals:
        print(f"N={args.n}: all pairs feasible")
    else:
        for lo, hi in iv:
            print(f"[{lo},{hi}]")
    return EXIT_OK


def cmd_check(args) -> int:
    n, m = args.n, args.m
    _require(n >= 1, "N must be >= 1")
    _require(0 <= m <= comb(n, 2), f"M must lie in [0, {comb(n, 2)}]")
    hit = closed_form.nonfeasible_intervals(n).find(m)
    if args.json:
        print(json.dumps({"n": n, "m": m, "feasible": hit is None,
                          "interval": list(hit) if hit else None}, separators=(",", ":")))
    elif hit is None:
        print(f"({n},{m}) feasible")
    else:
        print(f"({n},{m}) non-feasible: M in [{hit[0]},{hit[1]}]")
    return EXIT_OK if hit is None else EXIT_NEGATIVE


def cmd_witness(args) -> int:
    n, m = args.n, args.m
    _require(n >= 1, "N must be >= 1")
    _require(0 <= m <= comb(n, 2), f"M must lie in [0, {comb(n, 2)}]")
    try:
        w = constructors.witness(n, m)
    except constructors.NotFeasible as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    _emit_witness(args, w)
    return EXIT_OK


def cmd_table(args) -> int:
    _require(args.n_max >= 1, "N_max must be >= 1")
    rows = [(n, closed_form.min_nonfeasible(n)) for n in range(1, args.n_max + 1)]
    if args.json:
        print(json.dumps([{"n": n, "min_nonfeasible": m} for n, m in rows], separators=(",", ":")))
    else:
        print("N\tM")
        for n, m in rows:
            print(f"{n}\t{'*' if m is None else m}")
    return EXIT_OK


def cmd_verify(args) -> int:
    lo, hi = args.n_lo, args.n_hi
    _require(1 <= lo <= hi, "need 1 <= N_lo <= N_hi")
    _require(hi <= args.limit, f"N_hi={hi} exceeds oracle limit {args.limit} (use --limit)")
    all_ok = True
    records = []
    start = time.perf_counter()
    for n in range(lo, hi + 1):
        report = oracle.feasible_set(n, limit=args.limit, workers=args.workers)
        expected = closed_form.nonfeasible_intervals(n).as_set()
        got = set(report.nonfeasible_m)
        ok = expected == got
        all_ok &= ok
        diff = sorted(expected ^ got)
        records.append({"n": n, "match": ok, "first_difference": diff[0] if diff else None,
                        "nonfeasible_count": len(got),
                        "sequences_examined": report.sequences_examined,
                        "elapsed": round(report.elapsed, 4)})
        if not args.json:
            status = "ok" if ok else f"MISMATCH at M={diff[0]}"
            print(f"N={n:3d}  non-feasible={len(got):4d}  sequences={report.sequences_examined:8d}  "
                  f"{report.elapsed:7.3f}s  {status}")
    if args.json:
        print(json.dumps({"match": all_ok, "results": records}, separators=(",", ":")))
    else:
        verdict = "all match" if all_ok else "mismatches found"
        print(f"{verdict} ({time.perf_counter() - start:.2f}s)")
    return EXIT_OK if all_ok else EXIT_NEGATIVE


def cmd_fexact(args) -> int:
    n, delta = args.n, args.delta
    _require(1 <= delta <= n, "need 1 <= delta <= N")
    _require(n <= args.limit, f"N={n} exceeds oracle limit {args.limit} (use --limit)")
    value = oracle.f_exact(n, delta, limit=args.limit)
    if args.json:
        print(json.dumps({"n": n, "delta": delta, "f": value}, separators=(",", ":")))
    else:
        print(value)
    return EXIT_OK


def cmd_acyclic(args) -> int:
    n = args.n
    _require(n >= 1, "N must be >= 1")
    _require(n <= args.limit, f"N={n} exceeds acyclic oracle limit {args.limit} (use --limit)")
    report = oracle.feasible_set_acyclic(n, limit=args.limit, workers=args.workers)
    data = report.to_dict()
    data["min_nonfeasible"] = report.min_nonfeasible()
    data["lower_bound"] = comb(max(n - closed_form.star_forest_cover_cutoff(n), 0), 2)
    if n >= 2:
        t = closed_form.acyclic_gap_t(n)
        data["upper_bound"] = comb(n - t + 1, 2) - 1
    if args.json:
        print(json.dumps(data, separators=(",", ":")))
    else:
        for key in ("n", "min_nonfeasible", "lower_bound", "upper_bound", "count_feasible",
                    "sequences_examined"):
            if key in data:
                print(f"{key}: {data[key]}")
        print(f"nonfeasible: {data['nonfeasible']}")
    return EXIT_OK


def cmd_pawfree(args) -> int:
    n, m = args.n, args.m
    _require(n >= 1 and 0 <= m <= comb(n, 2), "need n >= 1 and 0 <= m <= C(n, 2)")
    w = constructors.paw_free_witness(n, m)
    paw_free = not has_induced(w.graph, Pattern.PAW)
    _emit_witness(args, w, {"paw_free": paw_free})
    if not args.json:
        print(f"paw-free: {str(paw_free).lower()}", file=sys.stderr)
    return EXIT_OK if paw_free else EXIT_NEGATIVE


def cmd_uep(args) -> int:
    n, m = args.n, args.m
    _require(n >= 1 and 0 <= m <= comb(n, 2), "need n >= 1 and 0 <= m <= C(n, 2)")
    p, q, r = constructors.uep_parameters(n, m)
    w = constructors.uep_graph(n, m)
    _emit_witness(args, w, {"H": [p, q, r]})
    if not args.json:
        print(f"H({p},{q},{r})", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="linefeas", description="Feasible (N, M) pairs for line graphs.")
    sub = parser.add_subparsers(dest="command", required=True)
    workers_default = os.cpu_count() or 1

    def add(name, func, help_text, graph=False, workers=False, limit=None):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="JSON output")
        if graph:
            fmt = p.add_mutually_exclusive_group()
            fmt.add_argument("--dot", action="store_true", help="DOT output")
            fmt.add_argument("--edges", action="store_true", help="edge-list output (default)")
            p.add_argument("-o", "--output", metavar="PATH", help="write the graph to PATH")
        if workers:
            p.add_argument("--workers", type=int, default=workers_default, metavar="K")
        if limit is not None:
            p.add_argument("--limit", type=int, default=limit, metavar="N", help="oracle cap")
        return p

    add("intervals", cmd_intervals, "non-feasible M intervals for N").add_argument("n", type=int)
    p = add("check", cmd_check, "is (N, M) feasible?")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p = add("witness", cmd_witness, "emit a graph G with e(G)=N, e(L(G))=M", graph=True)
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    add("table", cmd_table, "smallest non-feasible M for N=1..N_max").add_argument(
        "n_max", type=int, nargs="?", default=30)
    p = add("verify", cmd_verify, "closed form vs brute-force oracle", workers=True,
            limit=oracle.DEFAULT_LIMIT)
    p.add_argument("n_lo", type=int)
    p.add_argument("n_hi", type=int)
    p = add("fexact", cmd_fexact, "exact f(N, delta) by enumeration", limit=oracle.DEFAULT_LIMIT)
    p.add_argument("n", type=int)
    p.add_argument("delta", type=int)
    p = add("acyclic", cmd_acyclic, "feasible pairs for line graphs of forests", workers=True,
            limit=oracle.DEFAULT_ACYCLIC_LIMIT)
    p.add_argument("n", type=int)
    p = add("pawfree", cmd_pawfree, "paw-free graph with n vertices and m edges", graph=True)
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p = add("uep", cmd_uep, "elimination-procedure snapshot H(p,q,r)", graph=True)
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
