"""Command-line front end.

Exit codes: 0 for success (including positive decisions), 1 for negative
answers (not a member, not equivalent, empty intersection), 2 for usage
errors, malformed inputs, and exceeded resource budgets.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import automata, circuits, decision, enumeration, gadgets, game, oracle
from .automata import Dfa, FormatError


def _read_dfa(path: str) -> Dfa:
    return automata.parse_dfa(Path(path).read_text())


def _emit_dfa(d: Dfa, fmt: str) -> str:
    if fmt == "dot":
        return automata.to_dot(d)
    if fmt == "json":
        return automata.dfa_to_json(d)
    return automata.dfa_to_text(d)


def _check_turn_word(w: str) -> str:
    if any(c not in ("A", "B") for c in w):
        raise FormatError(f"turn word must be over A/B, got {w!r}")
    return w


def _target(spec: str, n: int) -> oracle.TargetPredicate:
    if spec == "dyck":
        return oracle.dyck_predicate(n)
    if spec == "parity":
        return oracle.parity_predicate(n)
    if spec == "contains-011":
        return oracle.contains_011_predicate(n)
    if spec.startswith("exact-ones:"):
        return oracle.exact_ones_predicate(n, int(spec.split(":", 1)[1]))
    return oracle.dfa_predicate(_read_dfa(spec), n)


def _parse_bits(text: str) -> tuple[bool, ...]:
    lookup = {"T": True, "F": False, "1": True, "0": False}
    try:
        return tuple(lookup[c] for c in text)
    except KeyError:
        raise FormatError(f"assignment must be over T/F (or 1/0), got {text!r}")


def _cmd_wdfa(args) -> int:
    print(_emit_dfa(game.winset_dfa(_read_dfa(args.dfa)), args.emit), end="")
    return 0


def _cmd_minimize(args) -> int:
    print(_emit_dfa(automata.minimize(_read_dfa(args.dfa)), args.emit), end="")
    return 0


def _cmd_equiv(args) -> int:
    ok = automata.equivalent(_read_dfa(args.a), _read_dfa(args.b))
    print("equivalent" if ok else "not equivalent")
    return 0 if ok else 1


def _cmd_congruent(args) -> int:
    d = automata.minimize(_read_dfa(args.dfa))
    ok = automata.congruent(d, args.v, args.w)
    print("congruent" if ok else "not congruent")
    return 0 if ok else 1


def _cmd_decide_member(args) -> int:
    ok = decision.member(_read_dfa(args.dfa), _check_turn_word(args.word))
    print("member" if ok else "not member")
    return 0 if ok else 1


def _cmd_decide_intersect(args) -> int:
    b = automata.parse_nfa(Path(args.nfa).read_text())
    witness = decision.intersect_nonempty(_read_dfa(args.dfa), b, budget=args.budget)
    if witness is None:
        print("empty", file=sys.stderr)
        return 1
    print(witness)
    return 0


def _cmd_oracle_member(args) -> int:
    w = _check_turn_word(args.word)
    ok = oracle.alice_wins(_target(args.target, len(w)), w)
    print("member" if ok else "not member")
    return 0 if ok else 1


def _cmd_oracle_slice(args) -> int:
    for w in sorted(oracle.winning_slice(_target(args.target, args.n))):
        print(w)
    return 0


_GADGETS = {
    "gen-subset": lambda n: gadgets.gen_subset(n).dfa,
    "gen-state": lambda n: gadgets.gen_state(n).dfa,
    "testing": lambda n: gadgets.testing(n).dfa,
    "lower-bound": gadgets.lower_bound_dfa,
    "exact-ones": gadgets.exact_ones_dfa,
}


def _cmd_gadget(args) -> int:
    if args.name == "circuit":
        return _cmd_gadget_circuit(args)
    if args.n is None:
        raise FormatError("gadget size argument required")
    n = int(args.n)
    if args.name == "chain":
        d = gadgets.chain_dfa(n, args.finals or [])
    else:
        try:
            d = _GADGETS[args.name](n)
        except KeyError:
            raise FormatError(f"unknown gadget {args.name!r}")
    print(_emit_dfa(d, args.emit), end="")
    return 0


def _cmd_gadget_circuit(args) -> int:
    c = circuits.parse_circuit(Path(args.n).read_text())
    if args.value is not None:
        dfa, word = circuits.circuit_value_instance(c, _parse_bits(args.value))
        print(_emit_dfa(dfa, args.emit), end="")
        print(f"word {word}")
        return 0
    if args.iterate is not None:
        bits, idx = args.iterate
        dfa, base, period = circuits.iterated_instance(
            c, _parse_bits(bits), int(idx)
        )
        print(_emit_dfa(dfa, args.emit), end="")
        print(f"base {base}")
        print(f"period {period}")
        return 0
    art = circuits.circuit_to_dfa(c)
    print(_emit_dfa(art.dfa, args.emit), end="")
    print(f"rounds {art.p}")
    return 0


def _cmd_enumerate(args) -> int:
    if args.jobs != 1:
        print("note: running on a single worker", file=sys.stderr)

    def progress(done: int, total: int):
        if done % 500 == 0:
            print(f"{done}/{total} structures", file=sys.stderr)

    result = enumeration.max_winset_complexity(
        args.n, budget_seconds=args.budget, progress=progress
    )
    if args.emit_witness and result.witness is not None:
        Path(args.emit_witness).write_text(automata.dfa_to_text(result.witness))
    print(f"n={args.n} max={result.max_size} exhausted={str(result.exhausted).lower()}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="winset",
        description="Winning sets of binary regular languages under "
        "two-player word-construction games.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def emit_flag(p, choices=("text", "dot", "json")):
        p.add_argument("--emit", choices=choices, default="text")

    p = sub.add_parser("wdfa", help="minimal winning-set DFA of a host DFA")
    p.add_argument("dfa")
    emit_flag(p)
    p.set_defaults(func=_cmd_wdfa)

    p = sub.add_parser("minimize", help="canonical minimal DFA")
    p.add_argument("dfa")
    emit_flag(p)
    p.set_defaults(func=_cmd_minimize)

    p = sub.add_parser("equiv", help="language equivalence of two DFAs")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("congruent", help="syntactic congruence of two words")
    p.add_argument("dfa")
    p.add_argument("v")
    p.add_argument("w")
    p.set_defaults(func=_cmd_congruent)

    p = sub.add_parser("decide", help="winning-set decision procedures")
    dsub = p.add_subparsers(dest="decide_command", required=True)
    q = dsub.add_parser("member", help="is the turn word in the winning set")
    q.add_argument("dfa")
    q.add_argument("word")
    q.set_defaults(func=_cmd_decide_member)
    q = dsub.add_parser("intersect", help="winning set meets a regular set?")
    q.add_argument("dfa")
    q.add_argument("nfa")
    q.add_argument("--budget", type=int, default=decision.DEFAULT_PRODUCT_BUDGET)
    q.set_defaults(func=_cmd_decide_intersect)

    p = sub.add_parser("oracle", help="brute-force ground truth")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    q = osub.add_parser("member", help="decide one turn word by brute force")
    q.add_argument("target", help="DFA file or builtin "
                   "(dyck, parity, contains-011, exact-ones:<k>)")
    q.add_argument("word")
    q.set_defaults(func=_cmd_oracle_member)
    q = osub.add_parser("slice", help="all winning turn words of one length")
    q.add_argument("target")
    q.add_argument("n", type=int)
    q.set_defaults(func=_cmd_oracle_slice)

    p = sub.add_parser("gadget", help="generate an automaton family member")
    p.add_argument("name", help="gen-subset | gen-state | testing | "
                   "lower-bound | chain | exact-ones | circuit")
    p.add_argument("n", nargs="?", help="size, or circuit file for 'circuit'")
    p.add_argument("--finals", type=int, nargs="*", help="finals for 'chain'")
    p.add_argument("--value", help="input assignment, e.g. TFT")
    p.add_argument("--iterate", nargs=2, metavar=("BITS", "INDEX"))
    emit_flag(p)
    p.set_defaults(func=_cmd_gadget)

    p = sub.add_parser("enumerate", help="worst-case winning-set size for n states")
    p.add_argument("n", type=int)
    p.add_argument("--budget", type=float, default=None, metavar="SECONDS")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--emit-witness", metavar="FILE")
    p.set_defaults(func=_cmd_enumerate)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except game.BudgetExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (FormatError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
