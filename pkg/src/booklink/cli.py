"""Command-line interface: ``booklink <command> ...``.

Exit status is 0 on success, 1 for domain errors (bad words, failed checks,
mismatched rows) and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import inspect
import sys
from pathlib import Path
from typing import Callable, Sequence

from . import moves
from .errors import BooklinkError
from .identify import dt_code, identify, jones
from .polynomial import format_polynomial
from .spectrum import (
    composite_combine,
    is_concave,
    parse_spectrum,
    spectrum_violations,
    split_combine,
)
from .table import emit, load_knot_data, load_witnesses, regenerate_table
from .word import (
    BooklinkWord,
    braid_count,
    bridge_index,
    check,
    mirror,
    parse_word,
    rotate,
    serialize_word,
    trace_components,
    validate,
)


def _read(path: str) -> BooklinkWord:
    return parse_word(Path(path).read_text())


def _max_crossings(args) -> int | None:
    return None if args.no_limit else args.max_crossings


def cmd_validate(args) -> int:
    v = validate(_read(args.file))
    if v.ok:
        print(f"ok ({len(v.profile.counts) - 1} generators, seam {v.profile.counts[0]})")
        return 0
    for problem in v.violations:
        print(problem)
    return 1


def cmd_invariants(args) -> int:
    w = _read(args.file)
    check(w)
    print(f"d={bridge_index(w)} n={braid_count(w)} components={trace_components(w).components}")
    return 0


def cmd_identify(args) -> int:
    table = load_knot_data(args.table) if args.table else None
    result = identify(_read(args.file), table, max_crossings=_max_crossings(args))
    print(" ".join(result.candidates))
    if not result.exact:
        print(f"note: {len(result.candidates)} knots share this Jones polynomial", file=sys.stderr)
    return 0


def cmd_jones(args) -> int:
    print(format_polynomial(jones(_read(args.file), max_crossings=_max_crossings(args)), "t", 4))
    return 0


def cmd_dt(args) -> int:
    print(dt_code(_read(args.file)))
    return 0


def _regroup(tokens: list[str], op: str) -> list[str]:
    # An unquoted {3,1,0} reaches us brace-expanded as "3 1 0"; each
    # spectrum ends at its zero, so the groups can be recovered.
    bare = [t.lstrip("-").isdigit() for t in tokens]
    if op == "check" and all(bare):
        return [",".join(tokens)]
    groups, cur = [], []
    for t, is_bare in zip(tokens, bare):
        if not is_bare:
            groups += [",".join(cur)] if cur else []
            groups.append(t)
            cur = []
            continue
        cur.append(t)
        if int(t) == 0:
            groups.append(",".join(cur))
            cur = []
    return groups + ([",".join(cur)] if cur else [])


def cmd_spectrum(args) -> int:
    if args.op == "check":
        problems = spectrum_violations(_ints(args.spectra[0]))
        for p in problems:
            print(p)
        if problems:
            return 1
        s = parse_spectrum(args.spectra[0])
        concave = is_concave(s)
        print(f"ok {s} (d={s.bridge_index} n={s.braid_index}, "
              + ("concave)" if concave.concave else f"not concave at d={concave.index})"))
        return 0
    a, b = (parse_spectrum(x) for x in args.spectra)
    combine = split_combine if args.op == "split" else composite_combine
    print(combine(a, b))
    return 0


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.strip().strip("{}()[]").split(",")]
    except ValueError:
        raise ValueError(f"not a spectrum literal: {text!r}") from None


def _usage_error(message: str) -> int:
    print(f"booklink: error: {message}", file=sys.stderr)
    return 2


MOVES: dict[str, tuple[Callable[..., BooklinkWord], tuple[str, ...]]] = {
    "add-critical-pair": (moves.add_critical_pair, ("slice", "position")),
    "cancel-critical-pair": (moves.cancel_critical_pair, ("slice",)),
    "stabilize": (moves.stabilize, ("slice", "sign")),
    "destabilize": (moves.destabilize, ()),
    "exchange": (moves.exchange_move, ("site",)),
    "plat-free-strand-resolve": (moves.plat_free_strand_resolve, ()),
    "push-strand": (moves.push_strand_through_binding, ("start", "end")),
    "resolve-bridge": (moves.resolve_bridge, ("arc", "routing")),
    "simplify-braid": (moves.simplify_braid, ()),
    "mirror": (mirror, ()),
    "rotate": (rotate, ("k",)),
}


def cmd_move(args) -> int:
    fn, params = MOVES[args.name]
    if len(args.args) > len(params):
        return _usage_error(f"{args.name} takes at most {len(params)} arguments "
                            f"({' '.join(params) or 'none'})")
    values = []
    for p, raw in zip(params, args.args):
        if p == "routing":
            values.append(raw)
            continue
        try:
            values.append(int(raw))
        except ValueError:
            return _usage_error(f"{p} must be an integer, got {raw!r}")
    w = _read(args.file)
    try:
        inspect.signature(fn).bind(w, *values)
    except TypeError:
        return _usage_error(f"{args.name} expects: {' '.join(params)}")
    print(serialize_word(fn(w, *values)), end="")
    return 0


def cmd_to_braid(args) -> int:
    w = _read(args.file)
    if args.exhaustive is not None:
        out = moves.to_braid(w, "exhaustive", budget=args.exhaustive)
    else:
        out = moves.to_braid(w)
    print(serialize_word(out), end="")
    return 0


def cmd_table(args) -> int:
    records = load_knot_data(args.knots)
    witnesses = load_witnesses(args.witnesses, records)
    doc = regenerate_table(records, witnesses)
    text = emit(doc, args.format)
    if args.out:
        Path(args.out).write_text(text)
    else:
        print(text, end="")
    shared = [r for r in doc.reports if not r.unique]
    for r in shared:
        print(f"note: {r.knot} witness Jones polynomial also matches "
              f"{', '.join(k for k in r.candidates if k != r.knot)}", file=sys.stderr)
    print(f"{len(doc.rows)}/{len(records)} rows match", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="booklink",
                                 description="Booklink words, knot identification and spectra.")
    sub = ap.add_subparsers(dest="command", required=True)

    def word_cmd(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("file", help="word file (.blw)")
        p.set_defaults(func=func)
        return p

    def limit(p):
        p.add_argument("--max-crossings", type=int, default=24,
                       help="refuse words with more crossings (default 24)")
        p.add_argument("--no-limit", action="store_true", help="lift the crossing limit")

    word_cmd("validate", cmd_validate, "check a word's structure")
    word_cmd("invariants", cmd_invariants, "print bridge count, braid count, components")
    p = word_cmd("identify", cmd_identify, "name the knot by its Jones polynomial")
    p.add_argument("--table", help="knots.csv to match against (default: bundled)")
    limit(p)
    limit(word_cmd("jones", cmd_jones, "print the Jones polynomial"))
    word_cmd("dt", cmd_dt, "print the canonical DT code")

    p = sub.add_parser("spectrum", help="spectrum algebra")
    p.add_argument("op", choices=("split", "compose", "check"))
    p.add_argument("spectra", nargs="+", metavar="SPECTRUM", help="e.g. {3,1,0}")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("move", help="apply one move and print the new word")
    p.add_argument("name", choices=sorted(MOVES))
    p.add_argument("file")
    p.add_argument("args", nargs="*")
    p.set_defaults(func=cmd_move)

    p = word_cmd("to-braid", cmd_to_braid, "resolve all critical pairs")
    p.add_argument("--exhaustive", type=int, metavar="N",
                   help="search all resolution orders with a budget of N steps")

    p = sub.add_parser("table", help="knot table tools")
    tsub = p.add_subparsers(dest="table_command", required=True)
    r = tsub.add_parser("regenerate", help="recompute every spectrum row")
    r.add_argument("--knots", help="knots.csv (default: bundled)")
    r.add_argument("--witnesses", help="witness directory (default: bundled)")
    r.add_argument("--out", help="output file (default: stdout)")
    r.add_argument("--format", choices=("markdown", "csv"), default="markdown")
    r.set_defaults(func=cmd_table)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "spectrum":
        args.spectra = _regroup(args.spectra, args.op)
        want = 1 if args.op == "check" else 2
        if len(args.spectra) != want:
            return _usage_error(f"spectrum {args.op} takes {want} spectra")
    try:
        return args.func(args)
    except (BooklinkError, OSError) as exc:
        print(f"booklink: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        return _usage_error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
