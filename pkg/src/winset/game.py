"""Winning-set constructions over a host DFA.

A *game state* is a collection of state-sets of a binary host DFA: the
outer collection tracks the choices still open to the word-builder (Alice),
the inner sets the uncertainty left to her opponent.  State-sets are stored
as int bitmasks; a game state is a sorted tuple of masks.  The empty tuple
is the rejecting sink; ``(0,)`` — the collection holding the empty set —
means Alice has already won, since the empty set is a subset of any final
set and stays empty forever.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .automata import Dfa, Nfa, minimize

GameState = tuple[int, ...]

TURNS = ("A", "B")


class BudgetExceededError(RuntimeError):
    """A construction hit its configured resource cap (not a wrong answer)."""


def game_state(sets: Iterable[Iterable[int]]) -> GameState:
    """Build a (possibly unnormalized) game state from collections of states."""
    masks = set()
    for s in sets:
        m = 0
        for q in s:
            m |= 1 << q
        masks.add(m)
    return tuple(sorted(masks))


def state_sets(g: GameState) -> list[list[int]]:
    out = []
    for m in g:
        bits = []
        q = 0
        while m:
            if m & 1:
                bits.append(q)
            m >>= 1
            q += 1
        out.append(bits)
    return out


def format_game_state(g: GameState) -> str:
    inner = ",".join("{" + ",".join(map(str, s)) + "}" for s in state_sets(g))
    return "{" + inner + "}"


def parse_game_state(text: str) -> GameState:
    text = "".join(text.split())
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError(f"bad game state {text!r}")
    body = text[1:-1]
    sets: list[list[int]] = []
    depth = 0
    current: list[str] = []
    buf = ""
    for ch in body:
        if ch == "{":
            if depth != 0:
                raise ValueError(f"bad game state {text!r}")
            depth = 1
            current = []
            buf = ""
        elif ch == "}":
            if depth != 1:
                raise ValueError(f"bad game state {text!r}")
            if buf:
                current.append(buf)
            sets.append(current)
            depth = 0
            buf = ""
        elif ch == ",":
            if depth == 1:
                if buf:
                    current.append(buf)
                buf = ""
            # commas between members are ignored
        else:
            if depth != 1:
                raise ValueError(f"bad game state {text!r}")
            buf += ch
    if depth != 0:
        raise ValueError(f"bad game state {text!r}")
    return game_state([[int(tok) for tok in s] for s in sets])


# ---------------------------------------------------------------------------
# per-host tables


@dataclass(frozen=True)
class _HostTables:
    fmask: int
    coacc: int       # states with some path into F
    acc_sink: int    # final states looping to themselves on both symbols


@lru_cache(maxsize=None)
def _tables(host: Dfa) -> _HostTables:
    fmask = 0
    for q in host.finals:
        fmask |= 1 << q
    # reverse BFS from the finals
    preds: list[set[int]] = [set() for _ in range(host.state_count)]
    for q, (t0, t1) in enumerate(host.delta):
        preds[t0].add(q)
        preds[t1].add(q)
    coacc = set(host.finals)
    frontier = list(host.finals)
    while frontier:
        nxt = []
        for q in frontier:
            for p in preds[q]:
                if p not in coacc:
                    coacc.add(p)
                    nxt.append(p)
        frontier = nxt
    coacc_mask = 0
    for q in coacc:
        coacc_mask |= 1 << q
    acc_sink = 0
    for q in host.finals:
        if host.delta[q] == (q, q):
            acc_sink |= 1 << q
    return _HostTables(fmask=fmask, coacc=coacc_mask, acc_sink=acc_sink)


@lru_cache(maxsize=None)
def _a_images(delta: tuple[tuple[int, int], ...], mask: int) -> tuple[int, ...]:
    """All images of the set ``mask`` under choice functions into {0,1}."""
    images = [0]
    m = mask
    while m:
        q = (m & -m).bit_length() - 1
        m &= m - 1
        t0, t1 = delta[q]
        b0, b1 = 1 << t0, 1 << t1
        if b0 == b1:
            images = [img | b0 for img in images]
        else:
            seen = set()
            nxt = []
            for img in images:
                for b in (b0, b1):
                    x = img | b
                    if x not in seen:
                        seen.add(x)
                        nxt.append(x)
            images = nxt
    return tuple(sorted(set(images)))


@lru_cache(maxsize=None)
def _b_image(delta: tuple[tuple[int, int], ...], mask: int) -> int:
    out = 0
    m = mask
    while m:
        q = (m & -m).bit_length() - 1
        m &= m - 1
        t0, t1 = delta[q]
        out |= (1 << t0) | (1 << t1)
    return out


# ---------------------------------------------------------------------------
# game-state algebra


def normalize(host: Dfa, g: Iterable[int]) -> GameState:
    """Reduce a game state without changing its winning language.

    In order: strip accepting sink states out of every member (once in such
    a state, staying accepted costs nothing); drop members containing a
    state from which no final state is reachable (the opponent parks there);
    drop strict supersets of other members (more uncertainty never helps
    Alice).  Result is a sorted antichain.
    """
    t = _tables(host)
    members = set()
    for m in g:
        m &= ~t.acc_sink
        if m & ~t.coacc:
            continue
        members.add(m)
    # supersets last, so a kept mask can only be covered by an earlier one
    ordered = sorted(members, key=lambda m: (_popcount(m), m))
    kept: list[int] = []
    for m in ordered:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


def _popcount(m: int) -> int:
    return bin(m).count("1")


def is_accepting(host: Dfa, g: GameState) -> bool:
    """A game state accepts iff some member is contained in the finals."""
    fmask = _tables(host).fmask
    return any(m & ~fmask == 0 for m in g)


def winning_step(host: Dfa, g: Iterable[int], c: str, *, normalized: bool = True) -> GameState:
    """One game-automaton transition: union of per-member successor sets.

    On A every member expands to its images under all choice functions; on B
    each member collapses to the single set of all possible successors.
    """
    out = set()
    if c == "A":
        for m in g:
            out.update(_a_images(host.delta, m))
    elif c == "B":
        for m in g:
            out.add(_b_image(host.delta, m))
    else:
        raise ValueError(f"turn symbol must be A or B, got {c!r}")
    raw = tuple(sorted(out))
    return normalize(host, raw) if normalized else raw


def winning_run(host: Dfa, g: Iterable[int], word: str, *, normalized: bool = True) -> GameState:
    cur = normalize(host, g) if normalized else tuple(sorted(set(g)))
    for c in word:
        cur = winning_step(host, cur, c, normalized=normalized)
    return cur


def leq(g: GameState, h: GameState) -> bool:
    """g <= h iff every member of g is witnessed by a subset in h.

    A smaller game state is weaker for Alice; the step function is monotone
    for this order.
    """
    return all(any(r & s == r for r in h) for s in g)


# ---------------------------------------------------------------------------
# automata for the winning set


def winset_nfa(host: Dfa) -> Nfa:
    """The canonical NFA for the winning set of the host's language.

    States are the host state-sets reachable from {q0}; a set is final iff
    it sits inside the host finals.  Only reachable sets are materialized.
    """
    _require_binary(host)
    start = 1 << host.initial
    index = {start: 0}
    order = [start]
    rows: list[tuple[frozenset[int], frozenset[int]]] = []
    i = 0
    while i < len(order):
        m = order[i]
        a_targets = _a_images(host.delta, m)
        b_target = _b_image(host.delta, m)
        for tm in a_targets:
            if tm not in index:
                index[tm] = len(order)
                order.append(tm)
        if b_target not in index:
            index[b_target] = len(order)
            order.append(b_target)
        rows.append(
            (frozenset(index[tm] for tm in a_targets), frozenset({index[b_target]}))
        )
        i += 1
    fmask = _tables(host).fmask
    finals = frozenset(index[m] for m in order if m & ~fmask == 0)
    return Nfa(alphabet=TURNS, delta=tuple(rows), initial=frozenset({0}), finals=finals)


def winset_dfa(host: Dfa, *, max_game_states: int = 2_000_000) -> Dfa:
    """Minimal DFA for the winning set, via subset construction over
    normalized game states.

    Raises :class:`BudgetExceededError` once more than ``max_game_states``
    distinct game states get materialized; the winning-set DFA can be doubly
    exponential in the host, so silent truncation is never an option.
    """
    _require_binary(host)
    start = normalize(host, (1 << host.initial,))
    index: dict[GameState, int] = {start: 0}
    order = [start]
    delta: list[tuple[int, int]] = []
    i = 0
    while i < len(order):
        g = order[i]
        row = []
        for c in TURNS:
            h = winning_step(host, g, c)
            if h not in index:
                if len(order) >= max_game_states:
                    raise BudgetExceededError(
                        f"more than {max_game_states} game states materialized"
                    )
                index[h] = len(order)
                order.append(h)
            row.append(index[h])
        delta.append((row[0], row[1]))
        i += 1
    finals = frozenset(i for i, g in enumerate(order) if is_accepting(host, g))
    return minimize(Dfa(alphabet=TURNS, delta=tuple(delta), initial=0, finals=finals))


def _require_binary(host: Dfa):
    if host.alphabet != ("0", "1"):
        raise ValueError("host DFA must be over the 01 alphabet")


@dataclass(frozen=True)
class ReversalDfa:
    """Lazy DFA on host state-sets recognizing the reversed winning set.

    Start at the host finals; reading A keeps the states with *some*
    predecessor move into the current set, reading B those with *both*.
    A set is final iff it contains the host initial state.  Transitions are
    computed per step, so membership queries never materialize 2^n states.
    """

    host: Dfa

    def __post_init__(self):
        _require_binary(self.host)

    @property
    def initial_mask(self) -> int:
        return _tables(self.host).fmask

    def step(self, mask: int, c: str) -> int:
        if c not in TURNS:
            raise ValueError(f"turn symbol must be A or B, got {c!r}")
        out = 0
        for q, (t0, t1) in enumerate(self.host.delta):
            in0 = (mask >> t0) & 1
            in1 = (mask >> t1) & 1
            hit = (in0 | in1) if c == "A" else (in0 & in1)
            out |= hit << q
        return out

    def is_final(self, mask: int) -> bool:
        return bool((mask >> self.host.initial) & 1)

    def accepts(self, word: str) -> bool:
        m = self.initial_mask
        for c in word:
            m = self.step(m, c)
        return self.is_final(m)

    def to_dfa(self, *, max_states: int = 2_000_000) -> Dfa:
        """Materialize the reachable part as an explicit DFA."""
        index = {self.initial_mask: 0}
        order = [self.initial_mask]
        delta: list[tuple[int, int]] = []
        i = 0
        while i < len(order):
            m = order[i]
            row = []
            for c in TURNS:
                t = self.step(m, c)
                if t not in index:
                    if len(order) >= max_states:
                        raise BudgetExceededError(
                            f"more than {max_states} subset states materialized"
                        )
                    index[t] = len(order)
                    order.append(t)
                row.append(index[t])
            delta.append((row[0], row[1]))
            i += 1
        finals = frozenset(i for i, m in enumerate(order) if self.is_final(m))
        return Dfa(alphabet=TURNS, delta=tuple(delta), initial=0, finals=finals)


def reverse_winset_dfa(host: Dfa) -> ReversalDfa:
    return ReversalDfa(host)


def game_states_equivalent(host: Dfa, g: Iterable[int], h: Iterable[int]) -> bool:
    """Do two game states accept the same turn-order language?

    Lazy bisimulation with union-find: merge the pair, bail out on an
    acceptance mismatch, and chase successors of merged representatives only.
    """
    gn = normalize(host, g)
    hn = normalize(host, h)
    parent: dict[GameState, GameState] = {}

    def find(x: GameState) -> GameState:
        while x in parent:
            x = parent[x]
        return x

    stack = [(gn, hn)]
    while stack:
        p, q = stack.pop()
        rp, rq = find(p), find(q)
        if rp == rq:
            continue
        if is_accepting(host, rp) != is_accepting(host, rq):
            return False
        parent[rq] = rp
        for c in TURNS:
            stack.append((winning_step(host, rp, c), winning_step(host, rq, c)))
    return True
