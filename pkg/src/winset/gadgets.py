"""Automaton families with known winning-set behavior.

The generators here build the hosts used to probe extremes of the winning
set: a factory that manufactures arbitrary antichains of state-sets (the
doubly-exponential lower bound), chain automata with rich congruences, the
exact-ones language with a cubic-size winning set, and closed-form bounds
for bounded languages and the Dyck intersection.

Figures in the source material leave 0/1 edge labels open; winning sets do
not depend on them, so the first-listed edge always gets 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .automata import Dfa
from .game import (
    GameState,
    game_state,
    game_states_equivalent,
    normalize,
    winning_step,
)


class GraphBuilder:
    """Assemble a DFA from named states and labeled arcs.

    ``arc(src, x)`` sends both symbols to x; ``arc(src, x, y)`` sends 0 to x
    and 1 to y.  States spring into existence on first mention, numbered in
    mention order, which keeps layouts deterministic.
    """

    def __init__(self):
        self._names: list[str] = []
        self._index: dict[str, int] = {}
        self._trans: dict[tuple[int, int], int] = {}
        self._finals: set[int] = set()

    def state(self, name: str, *, final: bool = False) -> int:
        idx = self._index.get(name)
        if idx is None:
            idx = len(self._names)
            self._index[name] = idx
            self._names.append(name)
        if final:
            self._finals.add(idx)
        return idx

    def arc(self, src: str, target0: str, target1: Optional[str] = None):
        s = self.state(src)
        t0 = self.state(target0)
        t1 = t0 if target1 is None else self.state(target1)
        for sym, t in ((0, t0), (1, t1)):
            if (s, sym) in self._trans and self._trans[(s, sym)] != t:
                raise ValueError(f"conflicting transition from {src!r} on {sym}")
            self._trans[(s, sym)] = t
        return s

    @property
    def labels(self) -> dict[str, int]:
        return dict(self._index)

    def build(self, initial: str) -> Dfa:
        n = len(self._names)
        delta = []
        for q in range(n):
            row = []
            for sym in range(2):
                t = self._trans.get((q, sym))
                if t is None:
                    raise ValueError(
                        f"state {self._names[q]!r} has no transition on {sym}"
                    )
                row.append(t)
            delta.append((row[0], row[1]))
        return Dfa(
            alphabet=("0", "1"),
            delta=tuple(delta),
            initial=self._index[initial],
            finals=frozenset(self._finals),
        )


@dataclass(frozen=True)
class Gadget:
    """A closed DFA together with the name -> index map of its states."""

    dfa: Dfa
    labels: dict[str, int]
    entry: str

    def __getitem__(self, name: str) -> int:
        return self.labels[name]

    def named_state(self, names: Iterable[str]) -> GameState:
        """Game state holding one set built from the given state names."""
        return game_state([[self.labels[x] for x in names]])


def _close(builder: GraphBuilder, exit_name: str, closure: str):
    if closure == "reject":
        builder.arc(exit_name, exit_name)
    elif closure == "accept":
        builder.state(exit_name, final=True)
        builder.arc(exit_name, exit_name)
    else:
        raise ValueError(f"closure must be 'reject' or 'accept', got {closure!r}")


# ---------------------------------------------------------------------------
# the subset / game-state factory and the tester


def _add_gen_subset(b: GraphBuilder, n: int, exit_target: str):
    """States b,c,d,s,e of the subset factory; the e-chain ends in
    ``exit_target`` on both symbols.  7n-1 states in total.

    Two-symbol blocks starting from b_i either skip index i (reading AB puts
    the surviving branch at b_{i+1} alone) or commit it (reading BA leaves a
    companion token at e_{3i-2}); committed tokens then ride the forced
    e-chain, two positions per later block, ending at e_{2n+i-2}.
    """
    for i in range(1, n + 1):
        b.arc(f"b{i}", f"d{i}", f"c{i}")
        b.arc(f"d{i}", f"b{i + 1}")
        b.arc(f"c{i}", f"s{i}", f"e{3 * i - 2}")
        b.arc(f"s{i}", f"s{i}")
    for j in range(1, 3 * n - 2):
        b.arc(f"e{j}", f"e{j + 1}")
    b.arc(f"e{3 * n - 2}", exit_target)
    b.state(f"b{n + 1}", final=True)
    b.arc(f"b{n + 1}", f"b{n + 1}")


def gen_subset(n: int, *, closure: str = "reject") -> Gadget:
    """Standalone subset factory; the dangling e-chain exit is closed with a
    sink (nonaccepting by default)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    b = GraphBuilder()
    b.state("b1")
    _add_gen_subset(b, n, "exit")
    _close(b, "exit", closure)
    return Gadget(dfa=b.build("b1"), labels=b.labels, entry="b1")


def subset_word(n: int, s: Iterable[int]) -> str:
    """Driver word of length 2n: block i is BA to commit index i, AB to skip."""
    chosen = set(s)
    if not chosen <= set(range(1, n + 1)):
        raise ValueError(f"subset {sorted(chosen)} not within 1..{n}")
    return "".join("BA" if i in chosen else "AB" for i in range(1, n + 1))


def subset_targets(n: int, s: Iterable[int]) -> list[str]:
    """The o-states (rightmost e-states) a committed subset ends up on."""
    return [f"e{2 * n + i - 2}" for i in sorted(set(s))]


def _add_gen_state(b: GraphBuilder, n: int, exit_target: str):
    """The a-cycle, subset factory, and r-cycle of the game-state factory."""
    cyc = 3 * n + 1
    b.arc("a1", "a2", "b1")
    for i in range(2, cyc + 1):
        b.arc(f"a{i}", f"a{i % cyc + 1}")
    _add_gen_subset(b, n, "r1")
    b.arc("r1", "r2", exit_target)
    for i in range(2, cyc + 1):
        b.arc(f"r{i}", f"r{i % cyc + 1}")


def gen_state(n: int, *, closure: str = "reject") -> Gadget:
    if n < 1:
        raise ValueError("n must be >= 1")
    b = GraphBuilder()
    b.state("a1")
    _add_gen_state(b, n, "exit")
    _close(b, "exit", closure)
    return Gadget(dfa=b.build("a1"), labels=b.labels, entry="a1")


def state_word(n: int, antichain: Iterable[Iterable[int]]) -> str:
    """Driver that plants one r-cycle set per antichain member.

    Each block A·subset_word·A^n has length 3n+1, the cycle length, so sets
    already parked in the r-cycle rotate back into place while a new one is
    being manufactured.
    """
    members = [frozenset(s) for s in antichain]
    for s in members:
        if not s:
            raise ValueError("antichain members must be nonempty")
        if not s <= set(range(1, n + 1)):
            raise ValueError(f"member {sorted(s)} not within 1..{n}")
    for x, y in combinations(members, 2):
        if x <= y or y <= x:
            raise ValueError("members must form an antichain")
    return "".join("A" + subset_word(n, s) + "A" * n for s in members)


def testing(n: int) -> Gadget:
    """Chain q_1..q_2n with accepting upper half; B at the midpoint kills.

    The only branch point is q_n: reading B there drops into the sink r, any
    other read advances one step.  After 2n steps everything is stuck in a
    nonaccepting sink.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    b = GraphBuilder()
    b.state("q1")
    for i in range(1, 2 * n):
        if i == n:
            b.arc(f"q{n}", "r", f"q{n + 1}")
        else:
            b.arc(f"q{i}", f"q{i + 1}")
    b.arc(f"q{2 * n}", "r'")
    b.arc("r", "r")
    b.arc("r'", "r'")
    for i in range(n + 1, 2 * n + 1):
        b.state(f"q{i}", final=True)
    return Gadget(dfa=b.build("q1"), labels=b.labels, entry="q1")


def test_word(n: int, p: Iterable[int]) -> str:
    """Length-n probe accepting exactly the planted sets inside p."""
    chosen = set(p)
    if not chosen <= set(range(1, n + 1)):
        raise ValueError(f"subset {sorted(chosen)} not within 1..{n}")
    return "".join("A" if n - i + 1 in chosen else "B" for i in range(1, n + 1))


def lower_bound_gadget(n: int) -> Gadget:
    """Factory plus tester, 15n+3 states; its winning-set DFA needs at least
    as many states as there are antichains over an n-set."""
    if n < 1:
        raise ValueError("n must be >= 1")
    b = GraphBuilder()
    b.state("a1")
    _add_gen_state(b, n, "q1")
    for i in range(1, 2 * n):
        if i == n:
            b.arc(f"q{n}", "r", f"q{n + 1}")
        else:
            b.arc(f"q{i}", f"q{i + 1}")
    b.arc(f"q{2 * n}", "r'")
    b.arc("r", "r")
    b.arc("r'", "r'")
    for i in range(n + 1, 2 * n + 1):
        b.state(f"q{i}", final=True)
    return Gadget(dfa=b.build("a1"), labels=b.labels, entry="a1")


def lower_bound_dfa(n: int) -> Dfa:
    return lower_bound_gadget(n).dfa


# ---------------------------------------------------------------------------
# chain automata and the exact-ones language


def chain_dfa(n: int, finals: Iterable[int]) -> Dfa:
    """1-bounded chain: 0 loops in place, 1 advances, the last state traps."""
    if n < 1:
        raise ValueError("n must be >= 1")
    fin = frozenset(finals)
    if n - 1 in fin:
        raise ValueError("the trap state cannot be final")
    if not fin <= set(range(n)):
        raise ValueError("final states out of range")
    delta = tuple((i, min(i + 1, n - 1)) for i in range(n))
    return Dfa(alphabet=("0", "1"), delta=delta, initial=0, finals=fin)


def exact_ones_dfa(n: int) -> Dfa:
    """Minimal DFA for words with exactly n ones: a counting chain plus an
    overflow sink."""
    if n < 1:
        raise ValueError("n must be >= 1")
    delta = tuple((i, i + 1) for i in range(n + 1)) + ((n + 1, n + 1),)
    return Dfa(alphabet=("0", "1"), delta=delta, initial=0, finals=frozenset({n}))


def exact_ones_wsize(n: int) -> int:
    """Closed-form size of the minimal winning-set DFA: n^3/6 + n^2 + 11n/6 + 2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    num = n**3 + 6 * n**2 + 11 * n + 12
    assert num % 6 == 0
    return num // 6


def exact_ones_winset_member(n: int, w: str) -> bool:
    """Suffix law: enough A's, not too many B's, and no suffix majority of B's."""
    if any(c not in ("A", "B") for c in w):
        raise ValueError("turn word must be over A, B")
    if w.count("A") < n or w.count("B") > n:
        return False
    deficit = 0
    for c in reversed(w):
        deficit += 1 if c == "B" else -1
        if deficit > 0:
            return False
    return True


# ---------------------------------------------------------------------------
# bounds for bounded languages


def bounded_upper_bound(cycle_lengths: Sequence[int], ell: int) -> int:
    """Size bound for winning-set DFAs of bounded languages.

    For a host whose cycles are p disjoint cycles of the given lengths plus
    ell other states, the bound is sum over m = 0..ell+p+1 of
    (p*max_lcm_pair + 2*ell + 2*lcm_all)^m, in exact integer arithmetic.
    With a single cycle the pairwise term degenerates to that cycle's
    length; with none, to zero.
    """
    ks = tuple(int(k) for k in cycle_lengths)
    if any(k < 1 for k in ks):
        raise ValueError("cycle lengths must be >= 1")
    if ell < 0:
        raise ValueError("ell must be >= 0")
    p = len(ks)
    if p >= 2:
        pair = max(math.lcm(x, y) for x, y in combinations(ks, 2))
    elif p == 1:
        pair = ks[0]
    else:
        pair = 0
    base = p * pair + 2 * ell + 2 * math.lcm(*ks)
    return sum(base**m for m in range(ell + p + 2))


def cycle_profile(host: Dfa) -> tuple[tuple[int, ...], int]:
    """Cycle lengths and leftover-state count of the trim part of a host.

    Raises ValueError when some trim state lies on two cycles — those hosts
    have non-bounded languages and the A-period bound does not apply.
    """
    reach = {host.initial}
    stack = [host.initial]
    while stack:
        q = stack.pop()
        for t in host.delta[q]:
            if t not in reach:
                reach.add(t)
                stack.append(t)
    preds: list[set[int]] = [set() for _ in range(host.state_count)]
    for q, (t0, t1) in enumerate(host.delta):
        preds[t0].add(q)
        preds[t1].add(q)
    coacc = set(host.finals)
    stack = list(host.finals)
    while stack:
        q = stack.pop()
        for p in preds[q]:
            if p not in coacc:
                coacc.add(p)
                stack.append(p)
    trim = reach & coacc

    # Tarjan over the trim subgraph
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on: set[int] = set()
    order: list[int] = []
    sccs: list[list[int]] = []
    counter = [0]

    def strong(v: int):
        work = [(v, iter([t for t in host.delta[v] if t in trim]))]
        index[v] = low[v] = counter[0]
        counter[0] += 1
        order.append(v)
        on.add(v)
        while work:
            node, it = work[-1]
            advanced = False
            for t in it:
                if t not in index:
                    index[t] = low[t] = counter[0]
                    counter[0] += 1
                    order.append(t)
                    on.add(t)
                    work.append((t, iter([u for u in host.delta[t] if u in trim])))
                    advanced = True
                    break
                elif t in on:
                    low[node] = min(low[node], index[t])
            if advanced:
                continue
            work.pop()
            if work:
                low[work[-1][0]] = min(low[work[-1][0]], low[node])
            if low[node] == index[node]:
                comp = []
                while True:
                    w = order.pop()
                    on.discard(w)
                    comp.append(w)
                    if w == node:
                        break
                sccs.append(comp)

    for v in sorted(trim):
        if v not in index:
            strong(v)

    cycles: list[int] = []
    ell = 0
    for comp in sccs:
        members = set(comp)
        inner = sum(
            1 for q in comp for t in host.delta[q] if t in members
        )
        if len(comp) == 1:
            if inner == 0:
                ell += 1
            elif inner == 1:
                cycles.append(1)
            else:
                raise ValueError("a trim state carries two self-loops; cycles overlap")
        else:
            if inner != len(comp):
                raise ValueError("a strongly connected part is not a simple cycle")
            cycles.append(len(comp))
    return tuple(sorted(cycles)), ell


def a_period_bound_check(
    host: Dfa, g: Iterable[int]
) -> Optional[tuple[int, int]]:
    """Least (k, m) with the A-iterates of g equivalent at steps k and k+m.

    Searches only within the bounds the theory promises for hosts with
    disjoint cycles — k at most lcm + 2*states + max pairwise lcm, m at most
    the lcm of the cycle lengths — and returns None if no pair exists there,
    which would refute the bound.
    """
    ks, _ = cycle_profile(host)
    p = len(ks)
    lcm_all = math.lcm(*ks) if p else 1
    if p >= 2:
        pair = max(math.lcm(x, y) for x, y in combinations(ks, 2))
    elif p == 1:
        pair = ks[0]
    else:
        pair = 0
    k_bound = lcm_all + 2 * host.state_count + pair
    m_bound = lcm_all

    iterates = [normalize(host, tuple(g))]
    for _ in range(k_bound + m_bound):
        iterates.append(winning_step(host, iterates[-1], "A"))
    for k in range(k_bound + 1):
        for m in range(1, m_bound + 1):
            if game_states_equivalent(host, iterates[k], iterates[k + m]):
                return (k, m)
    return None


# ---------------------------------------------------------------------------
# the Dyck intersection


def dyck_closed_form(i: int, j: int, k: int) -> bool:
    """Does A^2i B^2j A^2k win on the balanced-parentheses target?

    The builder must pre-open whatever the opponent may close (i >= j) and
    be able to close everything the opponent may have opened (k >= 2j).
    """
    if min(i, j, k) < 0:
        raise ValueError("block lengths must be nonnegative")
    return i >= j and k >= 2 * j
