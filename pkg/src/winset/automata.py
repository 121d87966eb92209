"""Core automata types and classical algorithms.

All automata here are over a two-symbol alphabet: either ``0``/``1`` for
target languages or ``A``/``B`` for turn-order languages.  DFAs are always
complete; partial transition tables are rejected at construction time.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections import deque
from typing import Iterable

BINARY = ("0", "1")
TURNS = ("A", "B")

_ALPHABETS = {"01": BINARY, "AB": TURNS}


class FormatError(ValueError):
    """Raised for malformed automaton text."""


@dataclass(frozen=True)
class Dfa:
    """A complete deterministic finite automaton.

    ``delta[q]`` is a pair of target states, indexed by symbol position in
    ``alphabet``.  Instances are immutable and hashable, so they can be used
    as cache keys and shared freely between threads.
    """

    alphabet: tuple[str, str]
    delta: tuple[tuple[int, int], ...]
    initial: int
    finals: frozenset[int]

    def __post_init__(self):
        n = len(self.delta)
        if n == 0:
            raise ValueError("a DFA needs at least one state")
        if len(self.alphabet) != 2:
            raise ValueError("alphabet must have exactly 2 symbols")
        if not 0 <= self.initial < n:
            raise ValueError(f"initial state {self.initial} out of range")
        for q, row in enumerate(self.delta):
            if len(row) != 2:
                raise ValueError(f"state {q}: need a target per symbol")
            for t in row:
                if not 0 <= t < n:
                    raise ValueError(f"state {q}: target {t} out of range")
        for q in self.finals:
            if not 0 <= q < n:
                raise ValueError(f"final state {q} out of range")

    @property
    def state_count(self) -> int:
        return len(self.delta)

    def symbol_index(self, symbol: str) -> int:
        try:
            return self.alphabet.index(symbol)
        except ValueError:
            raise ValueError(
                f"symbol {symbol!r} not in alphabet {''.join(self.alphabet)}"
            ) from None

    def step(self, state: int, symbol: str) -> int:
        return self.delta[state][self.symbol_index(symbol)]

    def run(self, word: str) -> int:
        """State reached from the initial state after reading ``word``."""
        q = self.initial
        for s in word:
            q = self.delta[q][self.symbol_index(s)]
        return q


@dataclass(frozen=True)
class Nfa:
    """A nondeterministic finite automaton with a set of initial states."""

    alphabet: tuple[str, str]
    delta: tuple[tuple[frozenset[int], frozenset[int]], ...]
    initial: frozenset[int]
    finals: frozenset[int]

    def __post_init__(self):
        n = len(self.delta)
        if len(self.alphabet) != 2:
            raise ValueError("alphabet must have exactly 2 symbols")
        for q, row in enumerate(self.delta):
            for targets in row:
                for t in targets:
                    if not 0 <= t < n:
                        raise ValueError(f"state {q}: target {t} out of range")
        for q in self.initial | self.finals:
            if not 0 <= q < n:
                raise ValueError(f"state {q} out of range")

    @property
    def state_count(self) -> int:
        return len(self.delta)


def as_nfa(d: Dfa) -> Nfa:
    return Nfa(
        alphabet=d.alphabet,
        delta=tuple(
            (frozenset({row[0]}), frozenset({row[1]})) for row in d.delta
        ),
        initial=frozenset({d.initial}),
        finals=d.finals,
    )


def accepts(d: Dfa, word: str) -> bool:
    """True iff iterated delta from the initial state lands in a final state."""
    return d.run(word) in d.finals


def nfa_accepts(n: Nfa, word: str) -> bool:
    current = set(n.initial)
    for s in word:
        i = n.alphabet.index(s)
        current = set().union(*(n.delta[q][i] for q in current)) if current else set()
    return bool(current & n.finals)


# ---------------------------------------------------------------------------
# text format


def parse_dfa(text: str) -> Dfa:
    """Parse the line-oriented DFA text format.

    Header ``dfa <state_count> <alphabet>``, then ``initial <q>``, then
    ``finals <q>...``, then one ``<q> <symbol> <target>`` line per
    (state, symbol) pair.  ``#`` starts a comment; blank lines are ignored.
    Missing or duplicate transitions are errors.
    """
    lines: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append((lineno, stripped.split()))

    def fail(lineno: int, msg: str):
        raise FormatError(f"line {lineno}: {msg}")

    if not lines:
        raise FormatError("empty input")
    lineno, header = lines[0]
    if len(header) != 3 or header[0] != "dfa":
        fail(lineno, "expected header 'dfa <state_count> <alphabet>'")
    try:
        n = int(header[1])
    except ValueError:
        fail(lineno, f"bad state count {header[1]!r}")
    if n <= 0:
        fail(lineno, "state count must be positive")
    alphabet = _ALPHABETS.get(header[2])
    if alphabet is None:
        fail(lineno, f"alphabet must be 01 or AB, got {header[2]!r}")

    def state(tok: str, lineno: int) -> int:
        try:
            q = int(tok)
        except ValueError:
            fail(lineno, f"bad state index {tok!r}")
        if not 0 <= q < n:
            fail(lineno, f"state index {q} out of range 0..{n - 1}")
        return q

    if len(lines) < 3:
        raise FormatError("missing 'initial' or 'finals' line")
    lineno, init_line = lines[1]
    if len(init_line) != 2 or init_line[0] != "initial":
        fail(lineno, "expected 'initial <q>'")
    initial = state(init_line[1], lineno)

    lineno, finals_line = lines[2]
    if finals_line[0] != "finals":
        fail(lineno, "expected 'finals <q>...'")
    finals = frozenset(state(tok, lineno) for tok in finals_line[1:])

    table: dict[tuple[int, int], int] = {}
    for lineno, parts in lines[3:]:
        if len(parts) != 3:
            fail(lineno, "expected '<state> <symbol> <target>'")
        q = state(parts[0], lineno)
        if parts[1] not in alphabet:
            fail(lineno, f"symbol {parts[1]!r} not in alphabet")
        i = alphabet.index(parts[1])
        if (q, i) in table:
            fail(lineno, f"duplicate transition for state {q} symbol {parts[1]}")
        table[(q, i)] = state(parts[2], lineno)

    delta = []
    for q in range(n):
        row = []
        for i, sym in enumerate(alphabet):
            if (q, i) not in table:
                raise FormatError(f"missing transition for state {q} symbol {sym}")
            row.append(table[(q, i)])
        delta.append((row[0], row[1]))
    return Dfa(alphabet=alphabet, delta=tuple(delta), initial=initial, finals=finals)


def dfa_to_text(d: Dfa) -> str:
    out = [f"dfa {d.state_count} {''.join(d.alphabet)}"]
    out.append(f"initial {d.initial}")
    out.append("finals " + " ".join(str(q) for q in sorted(d.finals)))
    for q in range(d.state_count):
        for i, sym in enumerate(d.alphabet):
            out.append(f"{q} {sym} {d.delta[q][i]}")
    return "\n".join(out).rstrip() + "\n"


def parse_nfa(text: str) -> Nfa:
    """Parse an NFA from text; ``dfa`` headers are accepted as a special case.

    The NFA format mirrors the DFA one with header ``nfa``, an ``initial``
    line that may list several states, and transition lines
    ``<q> <symbol> <target>...`` with zero or more targets, at most one line
    per (state, symbol) pair.  Omitted pairs mean no successor.
    """
    for raw in text.splitlines():
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            if stripped.split()[0] == "dfa":
                return as_nfa(parse_dfa(text))
            break

    lines: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append((lineno, stripped.split()))

    def fail(lineno: int, msg: str):
        raise FormatError(f"line {lineno}: {msg}")

    if not lines:
        raise FormatError("empty input")
    lineno, header = lines[0]
    if len(header) != 3 or header[0] != "nfa":
        fail(lineno, "expected header 'nfa <state_count> <alphabet>'")
    n = int(header[1])
    alphabet = _ALPHABETS.get(header[2])
    if alphabet is None:
        fail(lineno, f"alphabet must be 01 or AB, got {header[2]!r}")

    def state(tok: str, lineno: int) -> int:
        q = int(tok)
        if not 0 <= q < n:
            fail(lineno, f"state index {q} out of range")
        return q

    lineno, init_line = lines[1]
    if init_line[0] != "initial":
        fail(lineno, "expected 'initial <q>...'")
    initial = frozenset(state(t, lineno) for t in init_line[1:])
    lineno, finals_line = lines[2]
    if finals_line[0] != "finals":
        fail(lineno, "expected 'finals <q>...'")
    finals = frozenset(state(t, lineno) for t in finals_line[1:])

    table: dict[tuple[int, int], frozenset[int]] = {}
    for lineno, parts in lines[3:]:
        if len(parts) < 2:
            fail(lineno, "expected '<state> <symbol> <target>...'")
        q = state(parts[0], lineno)
        if parts[1] not in alphabet:
            fail(lineno, f"symbol {parts[1]!r} not in alphabet")
        i = alphabet.index(parts[1])
        if (q, i) in table:
            fail(lineno, f"duplicate transition line for state {q}")
        table[(q, i)] = frozenset(state(t, lineno) for t in parts[2:])

    empty = frozenset()
    delta = tuple(
        (table.get((q, 0), empty), table.get((q, 1), empty)) for q in range(n)
    )
    return Nfa(alphabet=alphabet, delta=delta, initial=initial, finals=finals)


def nfa_to_text(n: Nfa) -> str:
    out = [f"nfa {n.state_count} {''.join(n.alphabet)}"]
    out.append("initial " + " ".join(str(q) for q in sorted(n.initial)))
    out.append("finals " + " ".join(str(q) for q in sorted(n.finals)))
    for q in range(n.state_count):
        for i, sym in enumerate(n.alphabet):
            targets = n.delta[q][i]
            if targets:
                out.append(f"{q} {sym} " + " ".join(str(t) for t in sorted(targets)))
    return "\n".join(out).rstrip() + "\n"


def to_dot(d: Dfa, name: str = "dfa") -> str:
    """Graphviz DOT export: doubled circles for finals, edge labels are symbols."""
    out = [f"digraph {name} {{", "  rankdir=LR;", '  __start [shape=point, label=""];']
    for q in range(d.state_count):
        shape = "doublecircle" if q in d.finals else "circle"
        out.append(f"  q{q} [shape={shape}, label=\"{q}\"];")
    out.append(f"  __start -> q{d.initial};")
    for q in range(d.state_count):
        by_target: dict[int, list[str]] = {}
        for i, sym in enumerate(d.alphabet):
            by_target.setdefault(d.delta[q][i], []).append(sym)
        for t, syms in sorted(by_target.items()):
            out.append(f"  q{q} -> q{t} [label=\"{','.join(syms)}\"];")
    out.append("}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# classical constructions


def dfa_to_json(d: Dfa) -> str:
    """JSON mirror of the text format, field for field."""
    import json

    return json.dumps(
        {
            "states": d.state_count,
            "alphabet": "".join(d.alphabet),
            "initial": d.initial,
            "finals": sorted(d.finals),
            "transitions": [
                [q, sym, d.delta[q][i]]
                for q in range(d.state_count)
                for i, sym in enumerate(d.alphabet)
            ],
        },
        indent=2,
    )


def determinize(n: Nfa) -> Dfa:
    """Subset construction; only reachable subsets are materialized.

    The empty subset becomes an explicit (rejecting) sink state when it is
    reachable, keeping the result a complete DFA.
    """
    start = frozenset(n.initial)
    index: dict[frozenset[int], int] = {start: 0}
    order = [start]
    delta: list[tuple[int, int]] = []
    i = 0
    while i < len(order):
        subset = order[i]
        row = []
        for sym in range(2):
            target = frozenset().union(*(n.delta[q][sym] for q in subset)) if subset else frozenset()
            if target not in index:
                index[target] = len(order)
                order.append(target)
            row.append(index[target])
        delta.append((row[0], row[1]))
        i += 1
    finals = frozenset(
        index[s] for s in order if s & n.finals
    )
    return Dfa(alphabet=n.alphabet, delta=tuple(delta), initial=0, finals=finals)


def _reachable(d: Dfa) -> list[int]:
    seen = {d.initial}
    queue = deque([d.initial])
    order = [d.initial]
    while queue:
        q = queue.popleft()
        for t in d.delta[q]:
            if t not in seen:
                seen.add(t)
                order.append(t)
                queue.append(t)
    return order


def _hopcroft_classes(d: Dfa, states: list[int]) -> dict[int, int]:
    """Hopcroft partition refinement restricted to ``states``.

    Returns a map from state to block id.  Blocks are not canonically
    numbered; callers renumber.
    """
    state_set = set(states)
    finals = d.finals & state_set
    nonfinals = state_set - finals
    # reverse transition table
    preimage: list[dict[int, set[int]]] = [dict() for _ in range(2)]
    for q in states:
        for sym in range(2):
            preimage[sym].setdefault(d.delta[q][sym], set()).add(q)

    blocks: list[set[int]] = []
    block_of: dict[int, int] = {}

    def add_block(b: set[int]) -> int:
        idx = len(blocks)
        blocks.append(b)
        for q in b:
            block_of[q] = idx
        return idx

    for part in (finals, nonfinals):
        if part:
            add_block(set(part))
    worklist = set(range(len(blocks)))
    while worklist:
        a = worklist.pop()
        splitter = set(blocks[a])
        for sym in range(2):
            x = set()
            for q in splitter:
                x |= preimage[sym].get(q, set())
            touched: dict[int, set[int]] = {}
            for q in x:
                touched.setdefault(block_of[q], set()).add(q)
            for bidx, inter in touched.items():
                block = blocks[bidx]
                if len(inter) == len(block):
                    continue
                rest = block - inter
                blocks[bidx] = inter
                for q in inter:
                    block_of[q] = bidx
                new_idx = add_block(rest)
                if bidx in worklist:
                    worklist.add(new_idx)
                else:
                    worklist.add(new_idx if len(rest) < len(inter) else bidx)
                    # refining by the smaller half keeps Hopcroft's bound
    return block_of


def minimize(d: Dfa) -> Dfa:
    """Minimal DFA for the same language, in canonical BFS numbering.

    Unreachable states are dropped first, then equivalent states are merged
    by Hopcroft partition refinement.  States of the result are numbered in
    breadth-first order from the initial state, visiting symbols in alphabet
    order, so equal languages give byte-identical serializations.
    """
    states = _reachable(d)
    block_of = _hopcroft_classes(d, states)

    # canonical BFS renumbering over the quotient
    start = block_of[d.initial]
    number = {start: 0}
    order = [start]
    rep = {block_of[q]: q for q in reversed(states)}
    i = 0
    while i < len(order):
        b = order[i]
        q = rep[b]
        for sym in range(2):
            t = block_of[d.delta[q][sym]]
            if t not in number:
                number[t] = len(order)
                order.append(t)
        i += 1
    delta = []
    for b in order:
        q = rep[b]
        delta.append(tuple(number[block_of[d.delta[q][sym]]] for sym in range(2)))
    finals = frozenset(number[b] for b in order if rep[b] in d.finals)
    return Dfa(alphabet=d.alphabet, delta=tuple(delta), initial=0, finals=finals)


def minimize_moore(d: Dfa) -> Dfa:
    """Moore's algorithm; kept as an independent check of :func:`minimize`."""
    states = _reachable(d)
    cls = {q: int(q in d.finals) for q in states}
    while True:
        sig = {
            q: (cls[q], cls[d.delta[q][0]], cls[d.delta[q][1]]) for q in states
        }
        renum: dict[tuple[int, int, int], int] = {}
        new_cls = {}
        for q in states:
            new_cls[q] = renum.setdefault(sig[q], len(renum))
        if len(set(new_cls.values())) == len(set(cls.values())):
            cls = new_cls
            break
        cls = new_cls
    start = cls[d.initial]
    rep = {cls[q]: q for q in reversed(states)}
    number = {start: 0}
    order = [start]
    i = 0
    while i < len(order):
        q = rep[order[i]]
        for sym in range(2):
            t = cls[d.delta[q][sym]]
            if t not in number:
                number[t] = len(order)
                order.append(t)
        i += 1
    delta = tuple(
        tuple(number[cls[d.delta[rep[b]][sym]]] for sym in range(2)) for b in order
    )
    finals = frozenset(number[b] for b in order if rep[b] in d.finals)
    return Dfa(alphabet=d.alphabet, delta=delta, initial=0, finals=finals)


def equivalent(a: Dfa, b: Dfa) -> bool:
    """Language equality, decided by Hopcroft-Karp union-find on the product."""
    if a.alphabet != b.alphabet:
        raise ValueError("alphabet mismatch")
    parent: dict[tuple[int, int], tuple[int, int]] = {}

    def find(x):
        while x in parent:
            x = parent[x]
        return x

    stack = [((0, a.initial), (1, b.initial))]
    while stack:
        p, q = stack.pop()
        rp, rq = find(p), find(q)
        if rp == rq:
            continue
        p_final = (rp[1] in a.finals) if rp[0] == 0 else (rp[1] in b.finals)
        q_final = (rq[1] in a.finals) if rq[0] == 0 else (rq[1] in b.finals)
        if p_final != q_final:
            return False
        parent[rq] = rp
        for sym in range(2):
            sp = (0, a.delta[rp[1]][sym]) if rp[0] == 0 else (1, b.delta[rp[1]][sym])
            sq = (0, a.delta[rq[1]][sym]) if rq[0] == 0 else (1, b.delta[rq[1]][sym])
            stack.append((sp, sq))
    return True


def transformation(d: Dfa, word: str) -> tuple[int, ...]:
    """The state transformation induced by ``word``: q -> delta(q, word)."""
    current = list(range(d.state_count))
    for s in word:
        i = d.symbol_index(s)
        current = [d.delta[q][i] for q in current]
    return tuple(current)


def congruent(d: Dfa, v: str, w: str) -> bool:
    """Syntactic congruence of two words on a minimal DFA.

    On a minimal DFA, v and w are congruent by the language iff they induce
    the same transformation of the state set.  Minimize first if unsure.
    """
    return transformation(d, v) == transformation(d, w)


def enumerate_words(alphabet: Iterable[str], length: int) -> list[str]:
    words = [""]
    for _ in range(length):
        words = [w + s for w in words for s in alphabet]
    return words


def language_slice(d: Dfa, length: int) -> set[str]:
    """All accepted words of exactly the given length (brute force)."""
    return {w for w in enumerate_words(d.alphabet, length) if accepts(d, w)}


def count_words(d: Dfa, length: int) -> int:
    """Number of accepted words of the given length, by dynamic programming."""
    counts = [0] * d.state_count
    counts[d.initial] = 1
    for _ in range(length):
        nxt = [0] * d.state_count
        for q, c in enumerate(counts):
            if c:
                nxt[d.delta[q][0]] += c
                nxt[d.delta[q][1]] += c
        counts = nxt
    return sum(c for q, c in enumerate(counts) if q in d.finals)
