"""Command-line entry point.

Exit codes: 0 when every requested check passes, 1 when a check fails,
2 for usage errors (bad arguments, unknown ids, malformed specs).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import config
from .automata import Automaton, closed_state_sets, dumps_machine, from_groupoids, run_auto, run_semi, to_dot
from .census import census, parse_range, write_csv, write_jsonl
from .errors import MagmaError
from .fixtures import fixture_check_all
from .identities import LawId, check_law
from .magma import FiniteMagma, basic_report
from .smarandache import SmarandacheProfile
from .substructures import IdealSide, enumerate_closed, enumerate_ideals, enumerate_subsemigroups
from .theorems import Status, theorem_ids, verify_theorem
from .zn import ZnSpec, build_zn

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# Errors caused by the caller's input rather than by a failed check.
_USAGE_CODES = {"INVALID_SPEC", "UNKNOWN_THEOREM", "UNKNOWN_FIXTURE", "PARSE_ERROR", "BOUND_EXCEEDED",
                "ORDER_TOO_LARGE", "INVALID_LOOP_PARAMS", "INDEX_OUT_OF_RANGE"}


def _spec(text: str) -> ZnSpec:
    try:
        return ZnSpec.parse(text)
    except MagmaError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _laws(text: str) -> list[LawId]:
    try:
        return [LawId.parse(name.strip()) for name in text.split(",") if name.strip()]
    except MagmaError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _range(text: str) -> tuple[int, int]:
    try:
        return parse_range(text)
    except MagmaError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _word(text: str) -> list[int]:
    parts = text.split(",") if "," in text else list(text)
    try:
        return [int(p) for p in parts if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad word {text!r}; use digits or comma-separated letters") from None


def format_table(m: FiniteMagma) -> str:
    width = max(len(m.label(i)) for i in m.elements())
    head = "*".rjust(width) + " | " + " ".join(m.label(i).rjust(width) for i in m.elements())
    lines = [head, "-" * len(head)]
    for a in m.elements():
        row = " ".join(m.label(m(a, b)).rjust(width) for b in m.elements())
        lines.append(m.label(a).rjust(width) + " | " + row)
    return "\n".join(lines)


def cmd_table(args) -> int:
    print(format_table(build_zn(args.spec)))
    return EXIT_OK


def cmd_check(args) -> int:
    m = build_zn(args.spec)
    failed = False
    for law in args.laws:
        rep = check_law(m, law, skip_degenerate=args.skip_degenerate)
        line = f"{law.value}: {'PASS' if rep.holds else 'FAIL'} checked={rep.checked}"
        if rep.skipped:
            line += f" skipped={rep.skipped}"
        if rep.witness is not None:
            w = rep.witness
            line += f" witness={w.elems} lhs={w.lhs} rhs={w.rhs}"
        print(line)
        failed |= not rep.holds
    return EXIT_FAIL if failed else EXIT_OK


def cmd_subs(args) -> int:
    m = build_zn(args.spec)
    bound = config.enumeration_bound()
    if args.kind == "closed":
        fam = enumerate_closed(m, max_order=bound)
    elif args.kind == "semigroup":
        fam = enumerate_subsemigroups(m, max_order=bound)
    else:
        side = IdealSide.LEFT if args.kind == "ideal-left" else IdealSide.RIGHT
        fam = enumerate_ideals(m, side, max_order=bound)
    for s in fam.members:
        print(s)
    print(f"# {len(fam.members)} {args.kind} subsets")
    return EXIT_OK


def cmd_sg(args) -> int:
    m = build_zn(args.spec)
    rep = basic_report(m)
    prof = SmarandacheProfile(m, max_order=config.enumeration_bound())
    w = prof.witness
    print(f"spec: {args.spec}")
    print(f"order: {m.order}")
    print(f"commutative: {rep.commutative}  associative: {rep.associative}")
    print(f"closed subsets: {len(prof.closed)}  subsemigroups: {len(prof.semigroups)}")
    print(f"S-subgroupoids: {len(prof.s_subgroupoids)}")
    if w is None:
        print("smarandache: no")
        return EXIT_FAIL
    print(f"smarandache: yes  witness={w.subset} trivial={w.is_trivial} commutative={w.commutative}")
    return EXIT_OK


def cmd_census(args) -> int:
    records = census(args.n, args.classes, workers=args.workers)
    out_path = Path(args.out) if args.out else None
    jsonl = bool(out_path and out_path.suffix in (".jsonl", ".json"))
    writer = write_jsonl if jsonl else write_csv
    if out_path is None:
        count = writer(records, sys.stdout)
    else:
        with out_path.open("w", newline="") as fh:
            count = writer(records, fh)
        print(f"wrote {count} rows to {out_path}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    ids = theorem_ids() if args.theorem == "all" else [args.theorem]
    failed = False
    for tid in ids:
        rep = verify_theorem(tid, args.n)
        print(rep.summary())
        for spec, detail in rep.failures:
            print(f"  FAIL {spec}: {detail}")
        for spec, eid, detail in rep.errata:
            print(f"  ERRATUM {eid} {spec}: {detail}")
        failed |= rep.status is Status.FAIL
    return EXIT_FAIL if failed else EXIT_OK


def cmd_automaton(args) -> int:
    k = from_groupoids(args.z, args.a, args.b)
    print(dumps_machine(k), end="")
    for s in closed_state_sets(k):
        print(f"# closed state set {s}")
    if args.dot:
        Path(args.dot).write_text(to_dot(k))
    if args.run is not None:
        bad = [a for a in args.run if not 0 <= a < k.input_count]
        if bad:
            print(f"letter {bad[0]} outside alphabet of size {k.input_count}", file=sys.stderr)
            return EXIT_USAGE
        if isinstance(k, Automaton):
            outs, final = run_auto(k, args.start, args.run)
            print(f"run: final={final} outputs={','.join(map(str, outs))}")
        else:
            print(f"run: final={run_semi(k, args.start, args.run)}")
    return EXIT_OK


def cmd_fixtures(args) -> int:
    if not args.check:
        from .fixtures import fixture_names
        print("\n".join(fixture_names()))
        return EXIT_OK
    rep = fixture_check_all()
    for line in rep.lines():
        print(line)
    return EXIT_OK if rep.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="magmalab", description="Finite groupoids over Z_n and their Smarandache structure.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("table", help="print the Cayley table of n:t:u[+e]")
    s.add_argument("spec", type=_spec)
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("check", help="check identities over the whole carrier")
    s.add_argument("spec", type=_spec)
    s.add_argument("--laws", type=_laws, default=list(LawId), help="comma list of moufang,bol,p,lalt,ralt,alt")
    s.add_argument("--skip-degenerate", action="store_true", help="ignore tuples touching the adjoined identity")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("subs", help="list closed subsets, subsemigroups or ideals")
    s.add_argument("spec", type=_spec)
    s.add_argument("--kind", choices=["closed", "semigroup", "ideal-left", "ideal-right"], default="closed")
    s.set_defaults(func=cmd_subs)

    s = sub.add_parser("sg", help="Smarandache report")
    s.add_argument("spec", type=_spec)
    s.set_defaults(func=cmd_sg)

    s = sub.add_parser("census", help="classify every member of the chosen classes")
    s.add_argument("--class", dest="classes", action="append", choices=["z", "zs", "zss", "zsss", "adj"],
                   help="repeatable; defaults to z")
    s.add_argument("--n", type=_range, required=True, help="A..B")
    s.add_argument("--out", help="output file; .jsonl selects JSON lines, anything else CSV")
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("verify", help="replay a registered theorem")
    s.add_argument("--theorem", required=True, help="theorem id, or 'all'")
    s.add_argument("--n", type=_range, default=None, help="A..B; defaults per theorem")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("automaton", help="machine built from Z_n groupoids")
    s.add_argument("--z", type=_spec, required=True, help="state groupoid")
    s.add_argument("--a", type=_spec, required=True, help="input groupoid")
    s.add_argument("--b", type=_spec, default=None, help="output groupoid")
    s.add_argument("--dot", help="write the state graph here")
    s.add_argument("--run", type=_word, default=None, help="input word, e.g. 0121 or 0,1,2")
    s.add_argument("--start", type=int, default=0)
    s.set_defaults(func=cmd_automaton)

    s = sub.add_parser("fixtures", help="list fixtures or recheck their claims")
    s.add_argument("--check", action="store_true")
    s.set_defaults(func=cmd_fixtures)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if getattr(args, "classes", None) is None and args.command == "census":
        args.classes = ["z"]
    try:
        return args.func(args)
    except MagmaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE if exc.code in _USAGE_CODES else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
