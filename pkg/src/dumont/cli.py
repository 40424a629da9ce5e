"""Command-line front end: ``dumont <command> ...``.

Exit codes: 0 success, 2 bad usage or input, 3 generation cap exceeded,
4 a verification row failed, 5 input outside the bijection's family.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from itertools import permutations
from typing import Optional, Sequence

from .errors import DumontError, LimitExceeded, NotInFamily
from .families import DumontKind, count_avoiders, iter_members
from .perm import format_permutation, parse_pattern_set, parse_permutation
from .sequences import sequence_terms
from .series import format_rational
from .structure import (
    DyckPath,
    WeakComposition,
    composition_to_d2_231,
    d2_231_to_composition,
    d2_3142_to_dyck,
    dyck_to_d2_3142,
)
from .theorems import TheoremId, verify_all, verify_theorem

EXIT_OK, EXIT_USAGE, EXIT_LIMIT, EXIT_VERIFY, EXIT_FAMILY = 0, 2, 3, 4, 5
EMPTY_TEXT = "(empty)"


def _show(p) -> str:
    return format_permutation(p) if len(p) else EMPTY_TEXT


def _n_range(text: str) -> range:
    """``5`` or ``0..5`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        return range(int(text), int(text) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad n range {text!r}; use N or A..B") from None


def _patterns(args) -> frozenset:
    pats = set()
    if getattr(args, "avoid", None):
        pats |= parse_pattern_set(args.avoid)
    if getattr(args, "avoid_file", None):
        with open(args.avoid_file) as fh:
            for line in fh:
                line = line.split("#", 1)[0].strip()
                if line:
                    pats |= parse_pattern_set(line)
    return frozenset(pats)


def _csv(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


# --- commands ---------------------------------------------------------------


def cmd_enumerate(args) -> int:
    kind = DumontKind.parse(args.kind)
    members = iter_members(kind, args.n, _patterns(args))
    if args.format == "json":
        _emit(json.dumps([format_permutation(p) for p in members]))
    elif args.format == "csv":
        _emit(_csv([["permutation"]] + [[format_permutation(p)] for p in members]))
    else:
        for p in members:
            print(_show(p))
    return EXIT_OK


def cmd_count(args) -> int:
    kind = DumontKind.parse(args.kind)
    pats = _patterns(args)
    rows = [(n, count_avoiders(kind, pats, n, workers=args.parallel)) for n in args.n]
    if args.format == "json":
        _emit(json.dumps([{"n": n, "count": c} for n, c in rows]))
    elif args.format == "csv":
        _emit(_csv([["n", "count"]] + [list(r) for r in rows]))
    else:
        for n, c in rows:
            print(f"{n}\t{c}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.theorem == "all":
        reports = verify_all(args.n_max, workers=args.parallel)
    else:
        reports = [verify_theorem(args.theorem, args.n_max, workers=args.parallel)]
    if args.format == "json":
        payload = [r.to_dict() for r in reports]
        _emit(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2))
    elif args.format == "csv":
        table = [["theorem", "n", "observed", "expected", "pass"]]
        for r in reports:
            for row in r.rows:
                table.append([r.theorem.value, row.n, json.dumps(row.observed), json.dumps(row.expected), row.passed])
        _emit(_csv(table))
    else:
        for r in reports:
            flag = " (conjecture)" if r.conjecture else ""
            print(f"{r.theorem.value}{flag}: {'pass' if r.overall else 'FAIL'}")
            for row in r.rows:
                mark = "ok" if row.passed else "FAIL"
                extra = f"  [{row.note}]" if row.note else ""
                print(f"  n={row.n}  observed={row.observed}  expected={row.expected}  {mark}{extra}")
    return EXIT_OK if all(r.overall for r in reports) else EXIT_VERIFY


def cmd_sequence(args) -> int:
    values = sequence_terms(args.id, args.terms)
    text = [format_rational(v) if isinstance(v, Fraction) else str(v) for v in values]
    if args.format == "json":
        _emit(json.dumps(text))
    elif args.format == "csv":
        _emit(_csv([["index", "value"]] + [[i, v] for i, v in enumerate(text)]))
    else:
        for v in text:
            print(v)
    return EXIT_OK


def cmd_bijection(args) -> int:
    if args.name == "d2-231-composition":
        if args.inverse:
            if not args.composition:
                raise argparse.ArgumentTypeError("--inverse needs --composition")
            out = _show(composition_to_d2_231(WeakComposition.parse(args.composition)))
        else:
            out = str(d2_231_to_composition(parse_permutation(_need_perm(args))))
    else:
        if args.inverse:
            if not args.path:
                raise argparse.ArgumentTypeError("--inverse needs --path")
            out = _show(dyck_to_d2_3142(DyckPath(args.path.strip().upper())))
        else:
            out = str(d2_3142_to_dyck(parse_permutation(_need_perm(args))))
    if args.format == "json":
        _emit(json.dumps(out))
    else:
        print(out)
    return EXIT_OK


def _need_perm(args) -> str:
    if args.perm is None:
        raise argparse.ArgumentTypeError("--perm is required")
    return args.perm


def wilf_classes(kind: DumontKind, length: int, n_max: int, workers: int = 1) -> list[tuple[tuple[int, ...], list[str]]]:
    """Group single patterns of the given length by their counts for n = 0..n_max."""
    groups: dict[tuple[int, ...], list[str]] = {}
    for tau in permutations(range(1, length + 1)):
        fp = tuple(count_avoiders(kind, [tau], n, workers=workers) for n in range(n_max + 1))
        groups.setdefault(fp, []).append(format_permutation(tau))
    return sorted(groups.items())


def cmd_wilf(args) -> int:
    kind = DumontKind.parse(args.kind)
    classes = wilf_classes(kind, args.length, args.n_max, args.parallel)
    if args.format == "json":
        _emit(json.dumps([{"fingerprint": list(fp), "members": m} for fp, m in classes]))
    elif args.format == "csv":
        _emit(_csv([["fingerprint", "members"]] + [[",".join(map(str, fp)), " ".join(m)] for fp, m in classes]))
    else:
        for fp, members in classes:
            print(f"{','.join(map(str, fp))}: {' '.join(members)}")
    return EXIT_OK


# --- parser -----------------------------------------------------------------


def _theorem_arg(text: str) -> str:
    if text == "all":
        return text
    try:
        return TheoremId.parse(text).value
    except DumontError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dumont", description="Pattern avoidance in Dumont permutations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_format="plain"):
        p.add_argument("--format", choices=("plain", "json", "csv"), default=default_format)
        p.add_argument("--parallel", type=int, default=1, metavar="WORKERS", help="worker processes")

    def kind_and_patterns(p):
        p.add_argument("--kind", default="1", help="1, 2, dl1 or dl2")
        p.add_argument("--avoid", help="comma-separated patterns, e.g. 1342,2413")
        p.add_argument("--avoid-file", help="file with patterns, one set per line")

    p = sub.add_parser("enumerate", help="list members in lexicographic order")
    kind_and_patterns(p)
    p.add_argument("--n", type=int, required=True, help="half the length")
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="count avoiders for each n")
    kind_and_patterns(p)
    p.add_argument("--n", type=_n_range, required=True, help="N or A..B")
    common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="check a registered result against exhaustive data")
    p.add_argument("--theorem", type=_theorem_arg, required=True, help="theorem id (e.g. table-4-1) or 'all'")
    p.add_argument("--n-max", type=int, default=5)
    common(p, default_format="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sequence", help="print a reference sequence or series")
    p.add_argument("--id", required=True, help="catalan, little-schroeder, genocchi, gf-F, ...")
    p.add_argument("--terms", type=int, default=10)
    common(p)
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("bijection", help="apply one of the explicit bijections")
    p.add_argument("name", choices=("d2-231-composition", "d2-3142-dyck"))
    p.add_argument("--perm")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--path", help="Dyck word over U/D (inverse direction)")
    p.add_argument("--composition", help="parts joined by '+' (inverse direction)")
    common(p)
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("wilf", help="group single patterns by their counting sequence")
    p.add_argument("--kind", default="1")
    p.add_argument("--length", type=int, choices=(3, 4), required=True)
    p.add_argument("--n-max", type=int, default=5)
    common(p)
    p.set_defaults(func=cmd_wilf)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except NotInFamily as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAMILY
    except (DumontError, ValueError, argparse.ArgumentTypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
