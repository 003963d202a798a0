"""Command-line interface: ``atomkit {witness,atoms,bounds,table,verify,export}``.

Exit status is 0 on success, 1 when a verification finds a mismatch and 2
for usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import sys

from . import io
from .atoms import MAX_SOURCE_STATES, atom_reports, atom_subset_dfa, atomaton
from .automata import Dfa, NotMinimalError, determinize, reverse
from .bounds import atom_bound, decimal_string, table_rows
from .stateset import StateSet
from .verify import verify_witness
from .witness import witness, witness_atomaton_direct

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise UsageError(message)


def _load_dfa(args) -> Dfa:
    if args.input is not None:
        try:
            with open(args.input) as f:
                obj = io.loads(f.read())
        except OSError as e:
            raise UsageError(f"cannot read {args.input}: {e}") from e
        except io.FormatError as e:
            raise UsageError(f"{args.input}: {e}") from e
        _require(isinstance(obj, Dfa), f"{args.input}: expected a DFA")
        return obj
    _require(args.n is not None, "give --n or --input")
    _require(2 <= args.n <= MAX_SOURCE_STATES, f"--n must be in 2..{MAX_SOURCE_STATES}")
    return witness(args.n)


def _emit(obj, fmt: str, out, names=None) -> None:
    if fmt == "dot":
        out.write(io.to_dot(obj, names))
    else:
        out.write(io.dumps(obj, indent=2) + "\n")


def cmd_witness(args, out) -> int:
    _require(2 <= args.n <= MAX_SOURCE_STATES, f"--n must be in 2..{MAX_SOURCE_STATES}")
    _emit(witness(args.n), args.format, out)
    return EXIT_OK


def cmd_atoms(args, out) -> int:
    d = _load_dfa(args)
    try:
        A = atomaton(d)
    except NotMinimalError as e:
        raise UsageError(f"input DFA is not minimal: {e}") from e
    reports = atom_reports(A, args.workers)
    if args.json:
        out.write(json.dumps(io.reports_to_json(reports), indent=2) + "\n")
        return EXIT_OK
    header = ("P", "r", "complexity", "bound", "tight")
    rows = [(r.label.label(), str(r.r), str(r.complexity), str(r.bound), "yes" if r.tight else "no")
            for r in reports]
    widths = [max(len(h), *(len(row[i]) for row in rows)) for i, h in enumerate(header)]
    out.write("  ".join(h.rjust(w) for h, w in zip(header, widths)) + "\n")
    for row in rows:
        out.write("  ".join(c.rjust(w) for c, w in zip(row, widths)) + "\n")
    tight = sum(r.tight for r in reports)
    out.write(f"{tight} of {len(reports)} atoms meet their bound\n")
    return EXIT_OK


def cmd_bounds(args, out) -> int:
    _require(args.n >= 1, "--n must be >= 1")
    if args.all:
        for r in range(args.n + 1):
            out.write(f"{r} {atom_bound(args.n, r)}\n")
        return EXIT_OK
    _require(args.r is not None, "give --r or --all")
    _require(0 <= args.r <= args.n, f"--r must be in 0..{args.n}")
    out.write(f"{atom_bound(args.n, args.r)}\n")
    return EXIT_OK


def format_table(max_n: int, max_r: int | None = None, as_csv: bool = False) -> str:
    data = table_rows(max_n, max_r)
    ns, maxima = data["n"], data["max"]
    if as_csv:
        buf = _io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["row"] + ns)
        for r, vals in enumerate(data["values"]):
            w.writerow([f"r={r}"] + ["" if v is None else v for v in vals])
        w.writerow(["max"] + maxima)
        w.writerow(["ratio"] + ["" if x is None else decimal_string(x, 2) for x in data["ratio"]])
        return buf.getvalue()

    def cell(v, col):
        if v is None:
            return "- "
        return f"{v:,}" + ("*" if v == maxima[col] else " ")

    body = [["n"] + [f"{n} " for n in ns]]
    for r, vals in enumerate(data["values"]):
        body.append([f"r={r}"] + [cell(v, i) for i, v in enumerate(vals)])
    body.append(["max"] + [f"{m:,} " for m in maxima])
    body.append(["ratio"] + ["- " if x is None else decimal_string(x, 2) + " " for x in data["ratio"]])
    widths = [max(len(row[i]) for row in body) for i in range(len(body[0]))]
    lines = []
    for row in body:
        first = row[0].ljust(widths[0])
        lines.append((first + " | " + " ".join(c.rjust(w) for c, w in zip(row[1:], widths[1:]))).rstrip())
    lines.insert(1, "-" * len(lines[0]))
    return "\n".join(lines) + "\n"


def cmd_table(args, out) -> int:
    _require(args.max_n >= 1, "--max-n must be >= 1")
    _require(args.max_r is None or args.max_r >= 0, "--max-r must be >= 0")
    out.write(format_table(args.max_n, args.max_r, args.csv))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    limit = 8 if args.deep else 7
    _require(2 <= args.n <= limit, f"--n must be in 2..{limit}" + ("" if args.deep else " (8 needs --deep)"))
    verdict = verify_witness(args.n, deep=args.deep, workers=args.workers)
    if args.json or not verdict["ok"]:
        out.write(json.dumps(verdict, indent=2) + "\n")
    else:
        for c in verdict["checks"]:
            status = "skipped" if "skipped" in c else ("ok" if c["ok"] else "FAIL")
            out.write(f"{c['check']:<18} {status}\n")
        out.write(f"n={args.n}: all {2 ** args.n} atoms tight, max complexity {verdict['max_complexity']}\n")
    return EXIT_OK if verdict["ok"] else EXIT_MISMATCH


def _parse_label(text: str, n: int) -> StateSet:
    if text in ("{}", "", "-"):
        return StateSet.empty(n)
    parts = text.split(",") if "," in text else list(text)
    try:
        return StateSet.of((int(p) for p in parts), n)
    except ValueError as e:
        raise UsageError(f"bad atom label {text!r}: {e}") from e


def cmd_export(args, out) -> int:
    d = _load_dfa(args)
    what = args.what
    if what == "dfa":
        _emit(d, args.format, out)
    elif what == "reverse":
        _emit(reverse(d), args.format, out)
    elif what == "rd":
        rd, subsets = determinize(reverse(d))
        _emit(rd, args.format, out, [s.label() for s in subsets])
    elif what == "atomaton-direct":
        _require(args.input is None, "atomaton-direct is only defined for the witness family (--n)")
        _emit(witness_atomaton_direct(args.n), args.format, out)
    else:
        try:
            A = atomaton(d)
        except NotMinimalError as e:
            raise UsageError(f"input DFA is not minimal: {e}") from e
        if what == "atomaton":
            _emit(A, args.format, out)
        else:
            _require(args.P is not None, "--what atom needs --P")
            P = _parse_label(args.P, d.n)
            _require(P in set(A.labels), f"{P.label()} is not an atom label")
            dfa, collections = atom_subset_dfa(A, P)
            names = ["{" + ",".join(p.label() for p in sorted(c)) + "}" for c in collections]
            _emit(dfa, args.format, out, names)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="atomkit", description="Atoms of regular languages.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("witness", help="print the witness DFA with n states")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_witness)

    def source(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--n", type=int, help="use the witness DFA with n states")
        g.add_argument("--input", help="JSON file holding a minimal DFA")

    p = sub.add_parser("atoms", help="quotient complexity of every atom")
    source(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--workers", type=int, default=None, help="processes (default: one per CPU)")
    p.set_defaults(func=cmd_atoms)

    p = sub.add_parser("bounds", help="evaluate the atom complexity bound")
    p.add_argument("--n", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--r", type=int)
    g.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("table", help="table of bounds for n = 1..max-n")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--max-r", type=int, default=None)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="check the witness atoms against bounds and oracles")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--deep", action="store_true", help="allow n = 8 and run the tuple oracle")
    p.add_argument("--json", action="store_true")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="export an automaton derived from a DFA")
    source(p)
    p.add_argument("--what", choices=("dfa", "reverse", "rd", "atomaton", "atomaton-direct", "atom"),
                   default="atomaton")
    p.add_argument("--P", help="atom label for --what atom, e.g. 01 or 0,1 or {}")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_OK
    try:
        return args.func(args, out)
    except UsageError as e:
        err.write(f"atomkit {args.command}: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
