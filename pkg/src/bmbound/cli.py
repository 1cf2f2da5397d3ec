"""Command line front end.

This is the only module that touches stdout, stderr, or the filesystem.
Exit codes: 0 on success, 1 for invalid input or a failed check, 2 for
overflow or an internal error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .bound import BoundEntry, build_table
from .checks import run_all_checks
from .curve import derive_params
from .errors import BmboundError, ParamOverflow
from .semigroup import from_generators, p1_generators, q1_generators
from .tau import tau_range, taumap_for

DEFAULT_CHECK_PARAMS = ((2, 3), (2, 5), (3, 3))
CACHE_ENV_VAR = "BMBOUND_CACHE_DIR"


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; the exit-code
    contract reserves 2 for internal errors, so remap those to 1."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


@dataclass(frozen=True)
class CacheRecord:
    """On-disk form of a computed table, keyed by curve and tool version."""

    q: int
    n: int
    tool_version: str
    created_at: str
    table: list[dict]


def _cache_path(cache_dir: Path, q: int, n: int) -> Path:
    return cache_dir / f"table_q{q}_n{n}.json"


def cache_store(
    cache_dir: Path, q: int, n: int, entries: tuple[BoundEntry, ...]
) -> None:
    cache_dir.mkdir(parents=True, exist_ok=True)
    record = CacheRecord(
        q=q,
        n=n,
        tool_version=__version__,
        created_at=datetime.now(timezone.utc).isoformat(),
        table=[
            {"k": e.dim, "a": e.a, "b": e.b, "d": e.d, "goppa": e.goppa}
            for e in entries
        ],
    )
    _cache_path(cache_dir, q, n).write_text(
        json.dumps(asdict(record), separators=(",", ":")) + "\n"
    )


def cache_lookup(
    cache_dir: Path, q: int, n: int
) -> tuple[BoundEntry, ...] | None:
    """Entries from a previous run, or None on miss, version change, or
    an unreadable file (unreadable ones get a stderr warning)."""
    path = _cache_path(cache_dir, q, n)
    if not path.exists():
        return None
    try:
        record = json.loads(path.read_text())
        if (
            record["tool_version"] != __version__
            or record["q"] != q
            or record["n"] != n
        ):
            return None
        return tuple(
            BoundEntry(
                dim=int(row["k"]),
                a=int(row["a"]),
                b=int(row["b"]),
                d=int(row["d"]),
                goppa=int(row["goppa"]),
            )
            for row in record["table"]
        )
    except (json.JSONDecodeError, KeyError, TypeError, ValueError):
        print(f"warning: ignoring unreadable cache file {path}", file=sys.stderr)
        return None


def render_csv(entries: tuple[BoundEntry, ...]) -> str:
    lines = ["k,a,b,d,goppa"]
    lines += [f"{e.dim},{e.a},{e.b},{e.d},{e.goppa}" for e in entries]
    return "\n".join(lines)


def render_json(q: int, n: int, entries: tuple[BoundEntry, ...]) -> str:
    payload = {
        "q": q,
        "n": n,
        "entries": [
            {"k": e.dim, "a": e.a, "b": e.b, "d": e.d, "goppa": e.goppa}
            for e in entries
        ],
    }
    return json.dumps(payload, separators=(",", ":"))


def render_md(entries: tuple[BoundEntry, ...], paper_layout: bool = False) -> str:
    if not paper_layout:
        lines = ["| k | a | b | d | goppa |", "| --- | --- | --- | --- | --- |"]
        lines += [
            f"| {e.dim} | {e.a} | {e.b} | {e.d} | {e.goppa} |" for e in entries
        ]
        return "\n".join(lines)
    # Compact three-column layout: entries run down each group in turn.
    groups = 3
    rows = -(-len(entries) // groups)
    lines = [
        "| k | (a, b) | d " * groups + "|",
        "| --- | --- | --- " * groups + "|",
    ]
    for r in range(rows):
        cells = []
        for grp in range(groups):
            idx = grp * rows + r
            if idx < len(entries):
                e = entries[idx]
                cells += [str(e.dim), f"({e.a}, {e.b})", str(e.d)]
            else:
                cells += ["", "", ""]
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _cmd_params(args: argparse.Namespace) -> int:
    params = derive_params(args.q, args.n)
    print(json.dumps(asdict(params), separators=(",", ":")))
    return 0


def _cmd_tau(args: argparse.Namespace) -> int:
    params = derive_params(args.q, args.n)
    values = tau_range(params, args.lo, args.hi)
    for i, t in zip(range(args.lo, args.hi + 1), values):
        print(f"{i},{int(t)}")
    return 0


def _cmd_semigroup(args: argparse.Namespace) -> int:
    params = derive_params(args.q, args.n)
    payload = {}
    for key, gens in (("p1", p1_generators(params)), ("q1", q1_generators(params))):
        sg = from_generators(gens, 2 * params.genus + max(gens))
        payload[key] = {
            "generators": list(sg.generators),
            "gaps": sg.gaps(),
            "genus": sg.gap_count,
            "conductor": sg.conductor(),
        }
    print(json.dumps(payload, separators=(",", ":")))
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    if args.paper_layout and args.format != "md":
        raise ValueError("--paper-layout requires --format md")
    params = derive_params(args.q, args.n)
    cache_dir = args.cache or os.environ.get(CACHE_ENV_VAR)
    entries = None
    if cache_dir:
        entries = cache_lookup(Path(cache_dir), args.q, args.n)
    if entries is None:
        _, table = build_table(params)
        entries = table.entries
        if cache_dir:
            cache_store(Path(cache_dir), args.q, args.n, entries)
    if args.format == "csv":
        text = render_csv(entries)
    elif args.format == "json":
        text = render_json(args.q, args.n, entries)
    else:
        text = render_md(entries, paper_layout=args.paper_layout)
    _emit(text, args.out)
    return 0


def _cmd_matrix(args: argparse.Namespace) -> int:
    params = derive_params(args.q, args.n)
    mat, _ = build_table(params)
    out = ["a,b,d"]
    for a in range(mat.delta_cap + 1):
        row = mat.cells[a]
        out += [f"{a},{b},{int(row[b])}" for b in range(mat.delta_cap + 1 - a)]
    print("\n".join(out))
    return 0


def _cmd_plot_data(args: argparse.Namespace) -> int:
    params = derive_params(args.q, args.n)
    window = args.window if args.window is not None else 2 * params.period
    points = taumap_for(params).window_points(window)
    print("\n".join(["i,j"] + [f"{i},{j}" for i, j in points]))
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    if (args.q is None) != (args.n is None):
        raise ValueError("give both q and n, or neither")
    pairs = [(args.q, args.n)] if args.q is not None else list(DEFAULT_CHECK_PARAMS)
    failed = 0
    for q, n in pairs:
        params = derive_params(q, n)
        for result in run_all_checks(params):
            status = "PASS" if result.passed else "FAIL"
            print(f"{status} {result.name} (q={q}, n={n}): {result.detail}")
            failed += not result.passed
    return 1 if failed else 0


def _add_qn(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument(
        "--q", type=int, required=required, help="prime power curve parameter"
    )
    parser.add_argument(
        "--n", type=int, required=required, help="odd exponent >= 3"
    )


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="bmbound",
        description=(
            "Order bounds on the minimum distance of duals of two-point AG "
            "codes on the Beelen-Montanucci curves"
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="curve invariants as JSON")
    _add_qn(p)
    p.set_defaults(func=_cmd_params)

    p = sub.add_parser("tau", help="tau on an integer range, as i,tau CSV rows")
    _add_qn(p)
    p.add_argument(
        "--from", dest="lo", type=int, required=True,
        help="first input, inclusive",
    )
    p.add_argument(
        "--to", dest="hi", type=int, required=True,
        help="last input, inclusive",
    )
    p.set_defaults(func=_cmd_tau)

    p = sub.add_parser(
        "semigroup", help="one-point Weierstrass semigroups at P1 and Q1 as JSON"
    )
    _add_qn(p)
    p.set_defaults(func=_cmd_semigroup)

    p = sub.add_parser("table", help="per-dimension bound table")
    _add_qn(p)
    p.add_argument(
        "--format", choices=("csv", "md", "json"), default="csv",
        help="output format (default csv)",
    )
    p.add_argument("--out", help="write to this file instead of stdout")
    p.add_argument(
        "--cache",
        help=f"cache directory (overrides ${CACHE_ENV_VAR})",
    )
    p.add_argument(
        "--paper-layout", action="store_true",
        help="three-column markdown layout with (a, b) witness pairs",
    )
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("matrix", help="full bound matrix as a,b,d CSV rows")
    _add_qn(p)
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser(
        "plot-data", help="two-point semigroup members in a window, as i,j CSV rows"
    )
    _add_qn(p)
    p.add_argument(
        "--window", type=int,
        help="open window half-width (default 2*period)",
    )
    p.set_defaults(func=_cmd_plot_data)

    p = sub.add_parser("check", help="run the consistency checks")
    _add_qn(p, required=False)
    p.set_defaults(func=_cmd_check)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help exits 0, usage errors exit 1
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 1
    try:
        return args.func(args)
    except (ParamOverflow, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (BmboundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # exit-code contract: internal errors are 2
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
