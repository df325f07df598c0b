"""Command-line front end: orbit tables, correspondence tables, branching
queries and the verification suite.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
Output is byte-deterministic for fixed inputs and version; JSON is the
primary format, CSV and TeX are flat renderings of the same document.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .degeneration import symbol_branch
from .orbit import (
    LieCase,
    a_group_order,
    enumerate_orbits,
    is_degenerate,
    parse_orbit,
    render_orbit,
)
from .springer import table
from .symbol import InvalidSymbolError, parse_symbol, render_symbol
from .verify import run_verification


class UsageError(ValueError):
    pass


def _case(value: str) -> LieCase:
    try:
        return LieCase(value)
    except ValueError:
        raise UsageError(f"unknown case {value!r}") from None


def _cases(value: str) -> list[LieCase]:
    if value == "all":
        return list(LieCase)
    return [_case(value)]


def render_character(character) -> str:
    if not character:
        return "1"
    return "".join(
        "{" + ",".join(map(str, interval)) + "}"
        for interval in sorted(character)
    )


def _partition_list(p) -> list[int]:
    return list(p)


def cmd_orbits(args) -> dict:
    case = _case(args.case)
    wanted = None
    if args.orbit is not None:
        wanted = parse_orbit(args.orbit, case, args.n)
    entries = []
    for datum in enumerate_orbits(case, args.n):
        if wanted is not None and datum != wanted:
            continue
        entry = {
            "orbit": render_orbit(datum),
            "group_order": a_group_order(datum),
        }
        if case is LieCase.EO:
            entry["degenerate"] = is_degenerate(datum)
        entries.append(entry)
    return {
        "tool": "springer2",
        "version": __version__,
        "command": "orbits",
        "case": case.value,
        "n": args.n,
        "entries": entries,
    }


def cmd_springer(args) -> dict:
    case = _case(args.case)
    wanted = None
    if args.orbit is not None:
        wanted = parse_orbit(args.orbit, case, args.n)
    grouped: dict[str, dict] = {}
    for entry in table(case, args.n):
        if wanted is not None and entry.orbit != wanted:
            continue
        key = render_orbit(entry.orbit)
        group = grouped.setdefault(
            key,
            {
                "orbit": key,
                "group_order": a_group_order(entry.orbit),
                **(
                    {"degenerate": entry.degenerate}
                    if case is LieCase.EO
                    else {}
                ),
                "rows": [],
            },
        )
        bp = entry.bipartition
        group["rows"].append(
            {
                "character": render_character(entry.character),
                "symbol": render_symbol(entry.symbol),
                "mu": _partition_list(bp.mu),
                "nu": _partition_list(bp.nu),
            }
        )
    return {
        "tool": "springer2",
        "version": __version__,
        "command": "springer",
        "case": case.value,
        "n": args.n,
        "entries": list(grouped.values()),
    }


def cmd_branch(args) -> dict:
    case = _case(args.case)
    sym = parse_symbol(args.symbol, case.space(args.n))
    targets = symbol_branch(sym, case, args.n)
    return {
        "tool": "springer2",
        "version": __version__,
        "command": "branch",
        "case": case.value,
        "n": args.n,
        "symbol": render_symbol(sym),
        "targets": [render_symbol(t) for t in targets],
    }


def cmd_verify(args) -> tuple[dict, int]:
    cases = _cases(args.case)
    results = run_verification(cases, args.max_n)
    doc = {
        "tool": "springer2",
        "version": __version__,
        "command": "verify",
        "case": args.case,
        "max_n": args.max_n,
        "criteria": [
            {
                "number": r.number,
                "name": r.name,
                "ok": r.ok,
                "detail": r.detail,
            }
            for r in results
        ],
    }
    code = 0 if all(r.ok for r in results) else 1
    return doc, code


# -- rendering ---------------------------------------------------------------


def _flat_rows(doc: dict) -> tuple[list[str], list[list]]:
    command = doc["command"]
    if command == "orbits":
        header = ["case", "n", "orbit", "group_order"]
        has_flag = any("degenerate" in e for e in doc["entries"])
        if has_flag:
            header.append("degenerate")
        rows = []
        for e in doc["entries"]:
            row = [doc["case"], doc["n"], e["orbit"], e["group_order"]]
            if has_flag:
                row.append(e["degenerate"])
            rows.append(row)
        return header, rows
    if command == "springer":
        header = ["case", "n", "orbit", "group_order", "character", "symbol", "mu", "nu"]
        rows = []
        for e in doc["entries"]:
            for r in e["rows"]:
                rows.append(
                    [
                        doc["case"],
                        doc["n"],
                        e["orbit"],
                        e["group_order"],
                        r["character"],
                        r["symbol"],
                        " ".join(map(str, r["mu"])),
                        " ".join(map(str, r["nu"])),
                    ]
                )
        return header, rows
    if command == "branch":
        return ["symbol", "target"], [
            [doc["symbol"], t] for t in doc["targets"]
        ]
    header = ["number", "name", "status", "detail"]
    rows = [
        [c["number"], c["name"], "PASS" if c["ok"] else "FAIL", c["detail"]]
        for c in doc["criteria"]
    ]
    return header, rows


def render_document(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    header, rows = _flat_rows(doc)
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buffer.getvalue()
    # tex
    def esc(x) -> str:
        return str(x).replace("_", r"\_").replace("{", r"\{").replace("}", r"\}")

    lines = [
        r"\begin{tabular}{" + "l" * len(header) + "}",
        " & ".join(esc(h) for h in header) + r" \\ \hline",
    ]
    for row in rows:
        lines.append(" & ".join(esc(x) for x in row) + r" \\")
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


# -- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="springer2",
        description="Exact Springer correspondence tables for classical "
        "Lie algebras and their duals in characteristic 2.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_n=True):
        p.add_argument("--case", required=True,
                       choices=[c.value for c in LieCase])
        if with_n:
            p.add_argument("--n", type=int, required=True)
        p.add_argument("--format", choices=["json", "csv", "tex"],
                       default="json")

    p = sub.add_parser("orbits", help="nilpotent orbits with group orders")
    common(p)
    p.add_argument("--orbit", help="restrict to one orbit (grammar string)")

    p = sub.add_parser("springer", help="full correspondence table")
    common(p)
    p.add_argument("--orbit", help="restrict to one orbit (grammar string)")

    p = sub.add_parser("branch", help="restriction targets of a symbol")
    common(p)
    p.add_argument("--symbol", required=True, help='e.g. "A=0,8;B=3"')

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--case", default="all",
                   choices=[c.value for c in LieCase] + ["all"])
    p.add_argument("--max-n", type=int, default=8, dest="max_n")
    p.add_argument("--format", choices=["json", "csv", "tex"], default="json")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            doc, code = cmd_verify(args)
            for c in doc["criteria"]:
                status = "PASS" if c["ok"] else "FAIL"
                tail = f" ({c['detail']})" if c["detail"] else ""
                print(f"{status} {c['number']:2d} {c['name']}{tail}",
                      file=sys.stderr)
            sys.stdout.write(render_document(doc, args.format))
            return code
        if args.command == "orbits":
            doc = cmd_orbits(args)
        elif args.command == "springer":
            doc = cmd_springer(args)
        else:
            if args.n < 1:
                raise UsageError("branch needs --n >= 1")
            doc = cmd_branch(args)
    except (UsageError, InvalidSymbolError, ValueError) as exc:
        print(f"springer2: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(render_document(doc, args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
