"""Command-line entry point: ``lame-dessins <command> ...``.

Exit codes: 0 success or feasible, 1 validation failure or infeasible, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import documents
from .enumerator import DEFAULT_CAP, DegreeCapExceeded, enumerate_marked, enumerate_passport
from .fuchsian import RationalParseError, format_rational, parse_rational, schwarz_signature
from .generators import generate
from .hypermap import MarkedDessin, Passport, genus, passport, perm_cycles
from .monodromy import parent_group_order, pulled_back_monodromy_order
from .tables import CASES, case_parameter, derive_tables, render_table, table_for_case
from .validation import all_pass, run_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _cycle_str(p) -> str:
    cyc = perm_cycles(p, singletons=False)
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"


def _describe(obj) -> str:
    d = obj.dessin if isinstance(obj, MarkedDessin) else obj
    s = f"black {_cycle_str(d.black)}  white {_cycle_str(d.white)}"
    if isinstance(obj, MarkedDessin):
        s += "  marks " + ", ".join(f"{lab}={f.kind}{f.cycle}" for lab, f in obj.marks)
    return s


def cmd_tables(args) -> int:
    try:
        n = parse_rational(args.n)
    except RationalParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    found = derive_tables(schwarz_signature(args.group), n)
    if args.realizable:
        kept = []
        for t in found:
            if t.degree > args.cap:
                print(f"note: degree {t.degree} exceeds --cap {args.cap}; kept unchecked")
                kept.append(t)
            elif enumerate_marked(t, cap=args.cap):
                kept.append(t)
        found = kept
    if not found:
        print(f"no consistent table for {args.group}, n = {format_rational(n)}")
        return EXIT_FAIL
    print(f"{len(found)} table(s) for {args.group}, n = {format_rational(n)}")
    for t in found:
        print()
        print(render_table(t), end="")
    return EXIT_OK


def cmd_generate(args) -> int:
    m = generate(args.case, args.k)
    parent, n = case_parameter(args.case, args.k)
    try:
        documents.write(m, args.output)
    except OSError as exc:
        print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    d = m.dessin
    print(f"case {args.case}, k = {args.k}")
    print(f"degree {d.degree}")
    print(f"passport {passport(d)}")
    print(f"genus {genus(d)}")
    print(f"certifies n = {format_rational(n)} over {parent}")
    got, full = pulled_back_monodromy_order(d, parent), parent_group_order(parent)
    note = "" if got == full else " (proper subgroup: the exponent at infinity is an integer)"
    print(f"pulled-back projective monodromy order {got} of {full}{note}")
    print(f"written to {args.output}")
    return EXIT_OK


def _load_doc(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise documents.DocumentError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise documents.DocumentError(f"{path} is not valid JSON: {exc}") from None


def cmd_validate(args) -> int:
    try:
        doc = _load_doc(args.path)
    except documents.DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    checks = run_checks(doc, table_for_case(args.case, args.k))
    for c in checks:
        print(c.line())
    ok = all_pass(checks)
    print("all checks passed" if ok else "validation failed")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_enumerate(args) -> int:
    try:
        if args.passport:
            try:
                p = Passport.parse(args.passport)
            except ValueError as exc:
                print(f"error: bad passport {args.passport!r}: {exc}", file=sys.stderr)
                return EXIT_USAGE
            found = enumerate_passport(p, cap=args.cap, workers=args.workers)
            print(f"passport {p}: {len(found)} class(es)")
        else:
            if args.case is None or args.k is None:
                print("error: give --passport or both --case and --k", file=sys.stderr)
                return EXIT_USAGE
            t = table_for_case(args.case, args.k)
            found = enumerate_marked(t, cap=args.cap, workers=args.workers)
            print(f"case {args.case}, k = {args.k}, degree {t.degree}: {len(found)} marked class(es)")
    except DegreeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("hint: exhaustive search grows factorially; pass --cap N to allow degree N "
              "if you accept the runtime", file=sys.stderr)
        return EXIT_FAIL
    for i, obj in enumerate(found, 1):
        print(f"[{i}] {_describe(obj)}")
        if args.out_dir:
            os.makedirs(args.out_dir, exist_ok=True)
            documents.write(obj, os.path.join(args.out_dir, f"class_{i:03d}.json"))
    return EXIT_OK


def cmd_export(args) -> int:
    try:
        obj = documents.from_document(_load_doc(args.path))
    except (documents.DocumentError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(documents.to_dot(obj) if args.format == "dot" else documents.to_json_graph(obj))
    return EXIT_OK


def _nonneg(text) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if k < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return k


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="lame-dessins",
                 description="Ramification tables and dessins for Lame operators with finite monodromy.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("tables", help="derive every consistent ramification table")
    p.add_argument("--group", required=True, choices=("octahedral", "icosahedral"))
    p.add_argument("--n", required=True, help="Lame parameter as p/q, e.g. 3/4")
    p.add_argument("--realizable", action="store_true",
                   help="drop tables with no genus-0 marked dessin (exhaustive search)")
    p.add_argument("--cap", type=_nonneg, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("generate", help="write the marked dessin for a case")
    p.add_argument("--case", required=True, choices=CASES)
    p.add_argument("--k", required=True, type=_nonneg)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("validate", help="check a dessin document against a case table")
    p.add_argument("path")
    p.add_argument("--case", required=True, choices=CASES)
    p.add_argument("--k", required=True, type=_nonneg)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("enumerate", help="list dessin classes by exhaustive search")
    p.add_argument("--case", choices=CASES)
    p.add_argument("--k", type=_nonneg)
    p.add_argument("--passport", help='e.g. "1,1,1;3;3" (black;white;face)')
    p.add_argument("--cap", type=_nonneg, default=DEFAULT_CAP)
    p.add_argument("--workers", type=_nonneg, default=1)
    p.add_argument("--out-dir", help="write each class as a document into this directory")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("export", help="render a dessin document as DOT or graph JSON")
    p.add_argument("path")
    p.add_argument("--format", required=True, choices=("dot", "json"))
    p.set_defaults(func=cmd_export)
    return ap


def _glue_negative(argv):
    # argparse reads "--n -1/4" as two options; turn it into "--n=-1/4"
    out = []
    it = iter(argv)
    for a in it:
        if a == "--n":
            nxt = next(it, None)
            out.append(a if nxt is None else f"--n={nxt}")
        else:
            out.append(a)
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_glue_negative(argv))
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
