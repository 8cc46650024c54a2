"""Command-line front end: ``python3 -m tqft1d <subcommand> ...``.

Exit status: 0 success, 1 semantic failure (rejection, mismatch, invalid
structure), 2 input error, 3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import cobordism, quasi, tqft
from .automaton import AlphabetError, Nfa, accepts, nfa_from_json, nfa_to_dot, nfa_to_json, words_up_to
from .regex import RegexSyntaxError, compile_regex, parse_regex
from .semimodule import DimensionError, Matrix
from .semiring import INTEGER, get_semiring, qbinom

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_json(path: str):
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=False))


def _automaton(args) -> Nfa:
    if getattr(args, "regex", None) is not None:
        alphabet = args.alphabet.split(",") if getattr(args, "alphabet", None) else None
        try:
            return compile_regex(parse_regex(args.regex), alphabet)
        except RegexSyntaxError as exc:
            raise InputError(f"regex: {exc}") from None
        except ValueError as exc:
            raise InputError(str(exc)) from None
    if getattr(args, "json", None) is not None:
        try:
            return nfa_from_json(_load_json(args.json))
        except (ValueError, TypeError, AttributeError) as exc:
            raise InputError(f"automaton: {exc}") from None
    raise InputError("give an automaton with --regex or --json")


def _add_automaton_args(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--regex", help="regular expression, e.g. '(a+b)*b(a+b)'")
    g.add_argument("--json", metavar="FILE", help="automaton in JSON form")
    p.add_argument("--alphabet", help="comma-separated alphabet for --regex (default: letters used)")


# --- nfa -----------------------------------------------------------------

def cmd_nfa(args) -> int:
    nfa = _automaton(args)
    try:
        verdicts = [(w, accepts(nfa, w)) for w in args.word + args.accept + args.reject]
    except AlphabetError as exc:
        raise InputError(str(exc)) from None
    if args.dot:
        sys.stdout.write(nfa_to_dot(nfa))
    elif not verdicts:
        _emit(nfa_to_json(nfa))
    for w, ok in verdicts:
        print(f"{w or 'ε'}\t{'accept' if ok else 'reject'}")
    status = EXIT_OK
    for w in args.accept:
        if not accepts(nfa, w):
            status = EXIT_FAIL
    for w in args.reject:
        if accepts(nfa, w):
            status = EXIT_FAIL
    return status


# --- tqft-check ------------------------------------------------------------

def _integer_data(nfa: Nfa) -> tqft.TqftData:
    b = tqft.from_automaton(nfa)

    def conv(m: Matrix) -> Matrix:
        return Matrix(m.rows, m.cols, tuple(int(x) for x in m.entries), INTEGER)

    return tqft.TqftData(INTEGER, b.rank, {a: conv(m) for a, m in b.maps.items()}, conv(b.v0), conv(b.vstar))


def _load_data(path: str) -> tqft.TqftData:
    try:
        return tqft.TqftData.from_json(_load_json(path))
    except (ValueError, TypeError, KeyError, DimensionError) as exc:
        raise InputError(f"TQFT data: {exc}") from None


def cmd_tqft_check(args) -> int:
    if args.max_len < 0:
        raise InputError("--max-len must be >= 0")
    data = _load_data(args.data) if args.data else None
    need_nfa = data is None or data.semiring.name == "boolean"
    nfa = _automaton(args) if (need_nfa or args.regex or args.json) else None
    if data is None and args.semiring != "boolean":
        if args.semiring != "integer":
            raise InputError("an automaton gives boolean or integer data; pass --data for other semirings")
        data = _integer_data(nfa)
    if data is not None and data.semiring.name != "boolean":
        alphabet = nfa.alphabet if nfa else data.alphabet
        table = {}
        for w in words_up_to(alphabet, args.max_len):
            table[w] = data.semiring.to_text(tqft.evaluate_closed(data, "floating", w))
        _emit({"semiring": data.semiring.name, "values": table})
        return EXIT_OK
    report = tqft.check_correspondence(nfa, args.max_len, data)
    _emit(report)
    return EXIT_OK if report["status"] == "ok" else EXIT_FAIL


# --- eval-cobordism ------------------------------------------------------

def cmd_eval(args) -> int:
    try:
        morph = cobordism.Morphism.from_json(_load_json(args.morphism))
    except cobordism.CobordismError as exc:
        raise InputError(f"morphism: {exc}") from None
    data = _load_data(args.data) if args.data else tqft.from_automaton(_automaton(args))
    missing = morph.letters() - set(data.alphabet)
    if missing:
        raise InputError(f"morphism uses letters without operators: {sorted(missing)}")
    m = tqft.evaluate(data, morph)
    if args.format == "json":
        _emit(m.to_json())
    elif m.shape == (1, 1):
        print(data.semiring.to_text(m.item()))
    else:
        print(m.format())
    return EXIT_OK


# --- quasi ---------------------------------------------------------------

_LATTICES = {
    "sierpinski": quasi.sierpinski_lattice,
    "chain": quasi.chain_lattice,
    "discrete2": lambda: quasi.discrete_lattice([0, 1]),
}


def cmd_quasi(args) -> int:
    status = EXIT_OK
    out: dict = {}
    if args.json:
        try:
            qa = quasi.QuasiAutomaton.from_json(_load_json(args.json))
        except ValueError as exc:
            raise InputError(str(exc)) from None
        rep = quasi.validate(qa)
        out["validate"] = rep
        if not rep["valid"]:
            status = EXIT_FAIL
        elif args.word:
            try:
                out["words"] = {w: int(quasi.evaluate_word(qa, w)) for w in args.word}
            except AlphabetError as exc:
                raise InputError(str(exc)) from None
        lattice = qa.lattice
    elif args.lattice:
        lattice = _LATTICES[args.lattice]()
    else:
        raise InputError("give --json FILE or --lattice NAME")
    if args.retract is not None:
        try:
            r = quasi.retract_check(lattice, args.retract, budget=args.budget)
        except quasi.RetractBudgetExceeded as exc:
            print(str(exc), file=sys.stderr)
            return EXIT_BUDGET
        except ValueError as exc:
            raise InputError(str(exc)) from None
        if r is None:
            out["retract"] = {"found": False, "n": args.retract}
            status = EXIT_FAIL
        else:
            enc = lambda u: sorted(u, key=repr)  # noqa: E731
            out["retract"] = {
                "found": True,
                "n": r.n,
                "p_basis": [enc(u) for u in r.p_basis],
                "iota": [[enc(u), sorted(r.iota[u])] for u in lattice.opens],
            }
    _emit(out)
    return status


# --- homfly --------------------------------------------------------------

def _diagram(args):
    from .skein import braid_closure, parse_pd
    from .skein.diagram import DiagramError, PDParseError

    try:
        if args.braid is not None:
            word = [int(x) for x in args.braid.replace(" ", "").split(",") if x]
            return braid_closure(word)
        if args.pd is not None:
            return parse_pd(args.pd)
        if args.file is not None:
            return parse_pd(_read(args.file))
    except (PDParseError, DiagramError, ValueError) as exc:
        raise InputError(f"diagram: {exc}") from None
    raise InputError("give a PD file, --pd TEXT or --braid WORD")


def cmd_homfly(args) -> int:
    from .skein import SkeinBudgetExceeded, homfly, specialize

    d = _diagram(args)
    if d.components() == 0 and args.normalization == "reduced":
        raise InputError("the reduced invariant is undefined on the empty link")
    if args.normalization == "unreduced" and any(n < 1 for n in args.n):
        raise InputError("the unreduced invariant needs N >= 1: the unknot value [0] is 0")
    try:
        p = homfly(d, args.normalization, seed=args.seed, max_nodes=args.max_nodes)
    except SkeinBudgetExceeded as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_BUDGET
    specs = {n: specialize(p, n, args.normalization) for n in args.n}
    if args.format == "json":
        out = {"homfly": str(p), "jones": str(specialize(p, 2, args.normalization))}
        out["pN"] = {str(n): str(v) for n, v in specs.items()}
        _emit(out)
    elif specs:
        for v in specs.values():
            print(v)
    else:
        print(p)
    return EXIT_OK


# --- qbinom --------------------------------------------------------------

def cmd_qbinom(args) -> int:
    try:
        print(qbinom(args.n, args.k))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tqft1d", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nfa", help="compile or load an automaton; test words")
    _add_automaton_args(p)
    p.add_argument("--accept", action="append", default=[], metavar="WORD", help="fail unless WORD is accepted")
    p.add_argument("--reject", action="append", default=[], metavar="WORD", help="fail unless WORD is rejected")
    p.add_argument("--word", action="append", default=[], help="report acceptance of WORD")
    p.add_argument("--dot", action="store_true", help="print Graphviz DOT instead of JSON")
    p.set_defaults(func=cmd_nfa)

    p = sub.add_parser("tqft-check", help="compare TQFT evaluation with acceptance")
    _add_automaton_args(p)
    p.add_argument("--max-len", type=int, default=8)
    p.add_argument("--semiring", default="boolean", choices=["boolean", "integer"],
                   help="integer prints accepting-path counts per word")
    p.add_argument("--data", metavar="FILE", help="TQFT data JSON to use instead of the automaton's")
    p.set_defaults(func=cmd_tqft_check)

    p = sub.add_parser("eval-cobordism", help="evaluate a cobordism JSON")
    p.add_argument("morphism", metavar="MORPHISM_JSON")
    _add_automaton_args(p)
    p.add_argument("--data", metavar="FILE", help="TQFT data JSON (any semiring)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("quasi", help="validate and evaluate quasi-automata; search retracts")
    p.add_argument("--json", metavar="FILE")
    p.add_argument("--lattice", choices=sorted(_LATTICES))
    p.add_argument("--word", action="append", default=[])
    p.add_argument("--retract", type=int, metavar="N", help="search for a retraction of B^N")
    p.add_argument("--budget", type=int, default=200_000)
    p.set_defaults(func=cmd_quasi)

    p = sub.add_parser("homfly", help="HOMFLYPT polynomial and P_N specializations")
    p.add_argument("file", nargs="?", help="PD code file ('-' for stdin)")
    p.add_argument("--pd", help="PD code text")
    p.add_argument("--braid", help="braid word, e.g. '1,1,1' or '1,-2,1,-2'")
    p.add_argument("--n", type=int, action="append", default=[], help="print P_N (repeatable)")
    p.add_argument("--normalization", choices=["reduced", "unreduced"], default="reduced")
    p.add_argument("--max-nodes", type=int, default=2_000_000)
    p.add_argument("--seed", type=int, help="random base points (result is the same)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_homfly)

    p = sub.add_parser("qbinom", help="quantum binomial coefficient")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_qbinom)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
