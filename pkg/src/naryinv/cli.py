"""Command-line interface.

Subcommands::

    nu <n> <d> <k>                    invariant dimension (signed orbit sum)
    gamma <n> <d> <k> --lambda W      highest-weight multiplicity
    count <n> <d> <k> --mu W          weight multiplicity
    orbit <n> [--lambda W]            signed Weyl-orbit terms
    table <n> <d> --kmax K            invariant dimensions for k = 0..K
    series <n> <d> <k> [--dump FILE]  invariant dimension via the series
    check <n> <d> [--kmax K]          cross-check against all oracles

Weights are comma-separated integers of length n - 1, e.g. ``--lambda 1,1``.
Common flags: ``--format plain|json|csv`` (default plain), ``--cache``
(enable the on-disk memo rooted at ``$NARY_CACHE_DIR``), ``--limit-states N``
(cap on dynamic-programming states).  Results are always printed as decimal
strings; they can exceed 64 bits.  Diagnostics go to stderr, results to
stdout.

Exit codes: 0 success, 2 invalid arguments, 3 resource limit exceeded,
4 oracle disagreement (from ``check``).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from .counting import (
    MAX_DP_STATES,
    CountCache,
    cache_from_env,
    weight_multiplicity,
)
from .dimensions import (
    highest_weight_multiplicity,
    hilbert_series_prefix,
    invariant_dimension,
    ternary_invariant_dimension,
)
from .errors import ResourceLimitError
from .oracles import binary_invariant_dimension, brute_character, strip_decompose
from .series import (
    dump_series,
    expand_generating_series,
    invariant_dimension_by_series,
)
from .weights import signed_orbit_terms

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_DISAGREEMENT = 4

CSV_HEADER = ["n", "d", "k", "mu_or_lambda", "result", "method"]


def parse_weight(text: str, n: int, option: str) -> tuple[int, ...]:
    parts = text.split(",")
    if len(parts) != n - 1:
        raise ValueError(
            f"{option} must have n - 1 = {n - 1} comma-separated integers, "
            f"got {len(parts)}"
        )
    values = []
    for pos, raw in enumerate(parts, start=1):
        raw = raw.strip()
        try:
            values.append(int(raw))
        except ValueError:
            raise ValueError(
                f"{option} position {pos}: {raw!r} is not an integer"
            ) from None
    return tuple(values)


def _weight_str(weight) -> str:
    return ",".join(str(x) for x in weight)


def _emit_records(records: list[dict], fmt: str, out) -> None:
    """Render query/result records.

    plain: one result per line (``k`` prefixed for multi-row commands);
    json: one object per line with the full record; csv: fixed header
    ``n,d,k,mu_or_lambda,result,method``.
    """
    if fmt == "json":
        for rec in records:
            obj = {
                "n": rec["n"],
                "d": rec["d"],
                "k": rec["k"],
                "mu_or_lambda": list(rec["weight"]) if rec["weight"] is not None else None,
                "result": str(rec["result"]),
                "method": rec["method"],
                "elapsed_ms": rec["elapsed_ms"],
            }
            out.write(json.dumps(obj) + "\n")
    elif fmt == "csv":
        writer = csv.writer(out)
        writer.writerow(CSV_HEADER)
        for rec in records:
            writer.writerow(
                [
                    rec["n"],
                    rec["d"],
                    rec["k"],
                    _weight_str(rec["weight"]) if rec["weight"] is not None else "",
                    str(rec["result"]),
                    rec["method"],
                ]
            )
    else:
        if len(records) == 1:
            out.write(f"{records[0]['result']}\n")
        else:
            for rec in records:
                out.write(f"{rec['k']} {rec['result']}\n")


def _record(n, d, k, weight, result, method, elapsed_ms) -> dict:
    return {
        "n": n,
        "d": d,
        "k": k,
        "weight": weight,
        "result": result,
        "method": method,
        "elapsed_ms": round(elapsed_ms, 3),
    }


def _timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, (time.perf_counter() - start) * 1000.0


def _open_cache(enabled: bool) -> CountCache | None:
    if not enabled:
        return None
    cache = cache_from_env()
    if cache is None:
        print(
            "warning: --cache requested but NARY_CACHE_DIR is unset; "
            "caching disabled",
            file=sys.stderr,
        )
    return cache


def cmd_nu(args, out) -> int:
    cache = _open_cache(args.cache)
    value, ms = _timed(
        lambda: invariant_dimension(
            args.n, args.d, args.k, max_states=args.limit_states, cache=cache
        )
    )
    _emit_records(
        [_record(args.n, args.d, args.k, None, value, "theorem1", ms)],
        args.format,
        out,
    )
    return EXIT_OK


def cmd_gamma(args, out) -> int:
    highest = parse_weight(args.highest, args.n, "--lambda")
    cache = _open_cache(args.cache)
    value, ms = _timed(
        lambda: highest_weight_multiplicity(
            args.n, args.d, args.k, highest,
            max_states=args.limit_states, cache=cache,
        )
    )
    _emit_records(
        [_record(args.n, args.d, args.k, highest, value, "theorem2", ms)],
        args.format,
        out,
    )
    return EXIT_OK


def cmd_count(args, out) -> int:
    weight = parse_weight(args.mu, args.n, "--mu")
    cache = _open_cache(args.cache)
    value, ms = _timed(
        lambda: weight_multiplicity(
            args.n, args.d, args.k, weight,
            max_states=args.limit_states, cache=cache,
        )
    )
    _emit_records(
        [_record(args.n, args.d, args.k, weight, value, "counting", ms)],
        args.format,
        out,
    )
    return EXIT_OK


def cmd_orbit(args, out) -> int:
    shift = None
    if args.highest is not None:
        shift = parse_weight(args.highest, args.n, "--lambda")
    terms = signed_orbit_terms(args.n, shift=shift)
    if args.format == "json":
        obj = {
            "n": args.n,
            "shift": list(shift) if shift is not None else None,
            "terms": [
                {"weight": list(t.dominant), "coefficient": t.coefficient}
                for t in terms
            ],
        }
        out.write(json.dumps(obj) + "\n")
    elif args.format == "csv":
        writer = csv.writer(out)
        writer.writerow(["weight", "coefficient"])
        for t in terms:
            writer.writerow([_weight_str(t.dominant), t.coefficient])
    else:
        for t in terms:
            out.write(f"({_weight_str(t.dominant)}) {t.coefficient:+d}\n")
    return EXIT_OK


def cmd_table(args, out) -> int:
    cache = _open_cache(args.cache)
    start = time.perf_counter()
    values = hilbert_series_prefix(
        args.n, args.d, args.kmax, max_states=args.limit_states, cache=cache
    )
    ms = (time.perf_counter() - start) * 1000.0 / max(len(values), 1)
    records = [
        _record(args.n, args.d, k, None, v, "theorem1", ms)
        for k, v in enumerate(values)
    ]
    _emit_records(records, args.format, out)
    return EXIT_OK


def cmd_series(args, out) -> int:
    def run():
        series = expand_generating_series(args.n, args.d, args.k)
        value = invariant_dimension_by_series(args.n, args.d, args.k, series)
        return series, value

    (series, value), ms = _timed(run)
    if args.dump:
        with open(args.dump, "w", encoding="utf-8") as fh:
            written = dump_series(series, fh)
        print(f"wrote {written} coefficients to {args.dump}", file=sys.stderr)
    _emit_records(
        [_record(args.n, args.d, args.k, None, value, "series", ms)],
        args.format,
        out,
    )
    return EXIT_OK


def cmd_check(args, out) -> int:
    """Compare the signed-orbit dimension against every applicable oracle."""
    cache = _open_cache(args.cache)
    n, d = args.n, args.d
    records = []
    disagreements = []
    series = expand_generating_series(n, d, args.kmax)
    for k in range(args.kmax + 1):
        start = time.perf_counter()
        main = invariant_dimension(n, d, k, max_states=args.limit_states, cache=cache)
        ms = (time.perf_counter() - start) * 1000.0
        others = {}
        others["series"], _ = _timed(
            lambda: invariant_dimension_by_series(n, d, k, series)
        )
        others["stripping"], _ = _timed(
            lambda: strip_decompose(brute_character(n, d, k)).get((0,) * (n - 1), 0)
        )
        if n == 2:
            others["classical-binary"], _ = _timed(
                lambda: binary_invariant_dimension(d, k)
            )
        if n == 3:
            others["ternary"], _ = _timed(
                lambda: ternary_invariant_dimension(d, k, max_states=args.limit_states)
            )
        records.append(_record(n, d, k, None, main, "theorem1", ms))
        for method, value in others.items():
            records.append(_record(n, d, k, None, value, method, 0.0))
            if value != main:
                disagreements.append((k, method, main, value))
        if args.format == "plain":
            detail = " ".join(f"{m}={v}" for m, v in others.items())
            status = "ok" if all(v == main for v in others.values()) else "MISMATCH"
            out.write(f"k={k} theorem1={main} {detail} {status}\n")
    if args.format != "plain":
        _emit_records(records, args.format, out)
    if disagreements:
        for k, method, main, value in disagreements:
            print(
                f"disagreement at k={k}: theorem1={main} but {method}={value}",
                file=sys.stderr,
            )
        return EXIT_DISAGREEMENT
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="naryinv",
        description="Exact dimension counts for invariants of n-ary forms.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=["plain", "json", "csv"], default="plain",
        help="output format (default plain)",
    )
    common.add_argument(
        "--cache", action="store_true",
        help="memoise weight multiplicities under $NARY_CACHE_DIR",
    )
    common.add_argument(
        "--limit-states", type=int, default=MAX_DP_STATES, metavar="N",
        help="cap on dynamic-programming states",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, *, k=True, d=True):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("n", type=int)
        if d:
            p.add_argument("d", type=int)
        if k:
            p.add_argument("k", type=int)
        return p

    add("nu", "invariant dimension")
    p = add("gamma", "highest-weight multiplicity")
    p.add_argument("--lambda", dest="highest", required=True, metavar="W",
                   help="dominant weight, comma-separated, length n-1")
    p = add("count", "multiplicity of a weight in the degree-k piece")
    p.add_argument("--mu", required=True, metavar="W",
                   help="weight, comma-separated, length n-1")
    p = add("orbit", "signed Weyl-orbit terms", k=False, d=False)
    p.add_argument("--lambda", dest="highest", default=None, metavar="W",
                   help="optional dominant shift, comma-separated, length n-1")
    p = add("table", "invariant dimensions for k = 0..K", k=False)
    p.add_argument("--kmax", type=int, required=True, metavar="K")
    p = add("series", "invariant dimension via the generating series")
    p.add_argument("--dump", metavar="FILE",
                   help="write the truncated series as JSON lines")
    p = add("check", "cross-check against all applicable oracles", k=False)
    p.add_argument("--kmax", type=int, default=6, metavar="K")
    return parser


HANDLERS = {
    "nu": cmd_nu,
    "gamma": cmd_gamma,
    "count": cmd_count,
    "orbit": cmd_orbit,
    "table": cmd_table,
    "series": cmd_series,
    "check": cmd_check,
}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    try:
        return HANDLERS[args.command](args, out)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
