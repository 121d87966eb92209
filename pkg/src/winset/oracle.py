"""Ground-truth game solver, straight from the inductive definition.

Everything here is deliberately brute force over {0,1}^n.  The automata
constructions in :mod:`winset.game` are tested against these verdicts, so
this module favors being obviously correct over being fast.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .automata import Dfa, accepts

SLICE_LIMIT = 24  # 2^n table entries; past this the "oracle" stops being one


@dataclass(frozen=True)
class TargetPredicate:
    """A target set T of binary words of one fixed length, as a membership test."""

    length: int
    member: Callable[[str], bool]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("length must be nonnegative")


def alice_wins(t: TargetPredicate, w: str) -> bool:
    """Can Alice force the constructed word into the target on turn order w?

    Positions are filled left to right; at an A the builder picks the bit,
    at a B the opponent does.  Memoized on the constructed prefix, whose
    length always matches the number of turns consumed.
    """
    if len(w) != t.length:
        raise ValueError(f"turn word length {len(w)} != target length {t.length}")
    for c in w:
        if c not in ("A", "B"):
            raise ValueError(f"turn symbol must be A or B, got {c!r}")
    memo: dict[str, bool] = {}

    def wins(prefix: str) -> bool:
        if len(prefix) == t.length:
            return bool(t.member(prefix))
        cached = memo.get(prefix)
        if cached is not None:
            return cached
        zero = wins(prefix + "0")
        one = wins(prefix + "1")
        result = (zero or one) if w[len(prefix)] == "A" else (zero and one)
        memo[prefix] = result
        return result

    return wins("")


def winning_slice(t: TargetPredicate) -> set[str]:
    """All winning turn orders of length n, by the set recursion.

    The target is packed into a bitmask indexed by the word's value (first
    symbol most significant), so the two residuals are the low and high
    halves.  Independent of :func:`alice_wins`, which recurses on prefixes
    instead — the two routes cross-check each other.
    """
    n = t.length
    if n > SLICE_LIMIT:
        raise ValueError(f"slice length {n} exceeds the limit {SLICE_LIMIT}")
    table = 0
    for v in range(1 << n):
        word = format(v, f"0{n}b") if n else ""
        if t.member(word):
            table |= 1 << v

    memo: dict[tuple[int, int], frozenset[str]] = {}

    def slice_of(m: int, tab: int) -> frozenset[str]:
        if m == 0:
            return frozenset({""}) if tab & 1 else frozenset()
        key = (m, tab)
        cached = memo.get(key)
        if cached is not None:
            return cached
        half = 1 << (m - 1)
        low = slice_of(m - 1, tab & ((1 << half) - 1))
        high = slice_of(m - 1, tab >> half)
        result = frozenset("A" + w for w in low | high) | frozenset(
            "B" + w for w in low & high
        )
        memo[key] = result
        return result

    return set(slice_of(n, table))


# ---------------------------------------------------------------------------
# predicate constructors


def dyck_predicate(n: int) -> TargetPredicate:
    """Balanced-parentheses words of length n; 0 opens, 1 closes."""
    if n < 0 or n % 2:
        raise ValueError(f"no balanced word has odd length {n}")

    def member(v: str) -> bool:
        depth = 0
        for ch in v:
            depth += 1 if ch == "0" else -1
            if depth < 0:
                return False
        return depth == 0

    return TargetPredicate(length=n, member=member, name=f"dyck[{n}]")


def parity_predicate(n: int) -> TargetPredicate:
    return TargetPredicate(
        length=n, member=lambda v: v.count("1") % 2 == 1, name=f"parity[{n}]"
    )


def contains_011_predicate(n: int) -> TargetPredicate:
    return TargetPredicate(
        length=n, member=lambda v: "011" in v, name=f"contains-011[{n}]"
    )


def exact_ones_predicate(n: int, k: int) -> TargetPredicate:
    return TargetPredicate(
        length=n, member=lambda v: v.count("1") == k, name=f"exact-ones:{k}[{n}]"
    )


def dfa_predicate(d: Dfa, n: int) -> TargetPredicate:
    if d.alphabet != ("0", "1"):
        raise ValueError("predicate DFA must be over the 01 alphabet")
    return TargetPredicate(length=n, member=lambda v: accepts(d, v), name=f"dfa[{n}]")
