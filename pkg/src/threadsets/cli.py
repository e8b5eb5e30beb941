"""Command-line front end.

Exit codes: 0 on success or when every checked property holds, 1 on a
property failure (a failing verification suite, or ``eq`` deciding
"unequal"), 2 on usage or parse errors.  With ``--format json`` errors are
emitted as ``{"error": {"code": ..., "message": ...}}``.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import catalog as catalog_mod
from . import serialize, verify
from .classify import normal_form
from .errors import SpectrumError
from .families import thread_sets, threads
from .poset import Poset
from .tuples import (SubsetTuple, canonical, collapse, prune_downward,
                     prune_to_threads, prune_upward)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SpectrumError(f"cannot read {path}: {exc}") from None


def _load_poset(args) -> Poset:
    if not args.poset:
        raise SpectrumError("this command needs --poset FILE")
    return serialize.load_poset(_read(args.poset))


def _load_tuples(args, P: Poset, count: int) -> list[SubsetTuple]:
    paths = args.tuple or []
    if len(paths) != count:
        raise SpectrumError(
            f"this command needs exactly {count} --tuple FILE argument(s)")
    return [serialize.tuple_from_lists(P, serialize.loads(_read(p)))
            for p in paths]


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        sys.stdout.write(serialize.dumps(payload))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _set_text(P: Poset, mask: int) -> str:
    return "{%s}" % ", ".join(P.labels(mask))


def _tuple_text(P: Poset, parts: SubsetTuple) -> str:
    return "(%s)" % ", ".join(_set_text(P, part) for part in parts)


def _cmd_reduce(args) -> int:
    P = _load_poset(args)
    (t,) = _load_tuples(args, P, 1)
    stages = {
        "input": t,
        "prune_upward": prune_upward(P, t),
        "prune_downward": prune_downward(P, t),
        "prune_to_threads": prune_to_threads(P, t),
        "collapse": collapse(t),
        "canonical": canonical(P, t),
    }
    payload = {k: serialize.tuple_to_lists(P, v) for k, v in stages.items()}
    text = "\n".join(f"{k}: {_tuple_text(P, v)}" for k, v in stages.items())
    _emit(args, payload, text)
    return 0


def _cmd_threads(args) -> int:
    P = _load_poset(args)
    (t,) = _load_tuples(args, P, 1)
    found = list(threads(P, t))
    payload = {"threads": [list(th.labels(P)) for th in found]}
    text = "\n".join(" >= ".join(th.labels(P)) for th in found) or "(none)"
    _emit(args, payload, text)
    return 0


def _cmd_tset(args) -> int:
    P = _load_poset(args)
    (t,) = _load_tuples(args, P, 1)
    F = thread_sets(P, t)
    text = "\n".join(_set_text(P, g) for g in F.sorted_generators()) or "(empty)"
    _emit(args, serialize.family_to_dict(P, F), text)
    return 0


def _cmd_eq(args) -> int:
    P = _load_poset(args)
    first, second = _load_tuples(args, P, 2)
    F, G = thread_sets(P, first), thread_sets(P, second)
    if F == G:
        _emit(args, {"equal": True}, "equal")
        return 0
    onesided = F.generators - G.generators | G.generators - F.generators
    witness = min(onesided, key=lambda m: (m.bit_count(),
                                           tuple(P.labels(m))))
    side = "first" if F.member(witness) else "second"
    payload = {"equal": False, "witness": list(P.labels(witness)),
               "witness_only_in": side}
    _emit(args, payload,
          f"unequal: generator {_set_text(P, witness)} only in the {side} tuple")
    return 1


def _cmd_classify(args) -> int:
    P = _load_poset(args)
    (t,) = _load_tuples(args, P, 1)
    nf = normal_form(P, t)
    _emit(args, serialize.form_to_dict(P, nf), nf.describe(P))
    return 0


def _cmd_dot(args) -> int:
    P = _load_poset(args)
    sys.stdout.write(serialize.poset_to_dot(P))
    return 0


def _cmd_catalog(args) -> int:
    if args.action == "list":
        payload = {"entries": catalog_mod.names()}
        _emit(args, payload, "\n".join(catalog_mod.names()))
        return 0
    if not args.name:
        raise SpectrumError("catalog emit needs an entry name")
    entry = catalog_mod.catalog(args.name, *(args.params or []))
    if args.format == "dot":
        sys.stdout.write(serialize.poset_to_dot(entry.poset))
        return 0
    payload = {
        "name": entry.name,
        "params": list(entry.params),
        "poset": serialize.poset_to_dict(entry.poset),
        "tuples": {k: serialize.tuple_to_lists(entry.poset, v)
                   for k, v in entry.tuples.items()},
        "notes": entry.notes,
    }
    lines = [f"{entry.name}{entry.params}: {entry.notes}",
             serialize.poset_to_text(entry.poset).rstrip()]
    for tname, t in entry.tuples.items():
        lines.append(f"tuple {tname}: {_tuple_text(entry.poset, t)}")
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_verify(args) -> int:
    bounds = verify.Bounds(max_k=args.max_k, budget=args.budget,
                           exhaustive=True if args.exhaustive else None,
                           seed=args.seed)
    posets = None
    if args.poset:
        posets = [(args.poset, serialize.load_poset(_read(args.poset)))]
    reports = verify.run_suite(args.suite, posets, bounds)
    failed = sum(1 for r in reports if not r.passed)
    if args.format == "json":
        payload = {"reports": [r.to_dict() for r in reports],
                   "passed": failed == 0}
        sys.stdout.write(serialize.dumps(payload))
    else:
        for r in reports:
            sys.stdout.write(r.to_text() + "\n")
        total = sum(r.cases for r in reports)
        status = "pass" if failed == 0 else f"FAIL in {failed} report(s)"
        sys.stdout.write(f"== {len(reports)} reports, {total} cases: {status}\n")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="threadsets",
        description=("Combinatorics of iterated localizations over a finite "
                     "prime poset: tuple reductions, thread sets, normal "
                     "forms and verification suites."))
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, tuples=0):
        p.add_argument("--poset", help="poset file (JSON or text)")
        if tuples:
            p.add_argument("--tuple", action="append",
                           help="tuple file (JSON), repeatable")
        p.add_argument("--format", choices=("text", "json"), default="text")

    common(sub.add_parser("reduce", help="print all reductions of a tuple"),
           tuples=1)
    common(sub.add_parser("threads", help="enumerate the threads of a tuple"),
           tuples=1)
    common(sub.add_parser("tset",
                          help="minimal generators of the thread sets"),
           tuples=1)
    common(sub.add_parser("eq", help="compare the thread sets of two tuples"),
           tuples=2)
    common(sub.add_parser("classify", help="normal form of a tuple"),
           tuples=1)
    dot = sub.add_parser("dot", help="emit the cover relation as DOT")
    dot.add_argument("--poset", help="poset file (JSON or text)")

    cat = sub.add_parser("catalog", help="list or emit example spectra")
    cat.add_argument("action", choices=("list", "emit"))
    cat.add_argument("name", nargs="?")
    cat.add_argument("params", nargs="*", type=int)
    cat.add_argument("--format", choices=("text", "json", "dot"),
                     default="text")

    ver = sub.add_parser("verify", help="run verification suites")
    ver.add_argument("suite", choices=verify.SUITE_NAMES)
    ver.add_argument("--poset", help="verify this poset instead of the corpus")
    ver.add_argument("--format", choices=("text", "json"), default="text")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--exhaustive", action="store_true",
                     help="force exhaustive enumeration (may exceed budget)")
    ver.add_argument("--max-k", type=int, default=2, dest="max_k")
    ver.add_argument("--budget", type=int, default=1 << 20)
    return parser


_COMMANDS = {
    "reduce": _cmd_reduce,
    "threads": _cmd_threads,
    "tset": _cmd_tset,
    "eq": _cmd_eq,
    "classify": _cmd_classify,
    "dot": _cmd_dot,
    "catalog": _cmd_catalog,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _COMMANDS[args.command](args)
    except SpectrumError as exc:
        if getattr(args, "format", "text") == "json":
            sys.stdout.write(serialize.dumps(
                {"error": {"code": exc.code, "message": str(exc)}}))
        else:
            sys.stderr.write(f"error[{exc.code}]: {exc}\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
