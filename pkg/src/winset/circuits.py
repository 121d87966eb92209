"""Boolean circuits and their encoding as acyclic winning-set hosts.

A circuit is compiled into a DFA read from the output side toward the
inputs: truth values ride dual rails (a T-state and an F-state per wire),
and each reading of AAB pushes a game state one gadget layer down,
replacing a set over output rails by all sets over argument rails that
evaluate to it.  Sets that pick both rails of some wire are "excessive"
and stay excessive forever, so they never become accepting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterable, Optional

from .automata import Dfa

GATE_ARITY = {"AND": 2, "OR": 2, "NOT": 1}


@dataclass(frozen=True)
class Circuit:
    """A gate-level DAG; ``gates`` is topologically ordered by construction,
    since every argument must already be defined."""

    inputs: tuple[str, ...]
    gates: tuple[tuple[str, str, tuple[str, ...]], ...]
    outputs: tuple[tuple[str, str], ...]

    def __post_init__(self):
        seen: set[str] = set()
        for name in self.inputs:
            if name in seen:
                raise ValueError(f"duplicate node name {name!r}")
            seen.add(name)
        for name, kind, args in self.gates:
            if name in seen:
                raise ValueError(f"duplicate node name {name!r}")
            if kind not in GATE_ARITY:
                raise ValueError(f"unknown gate kind {kind!r}")
            if len(args) != GATE_ARITY[kind]:
                raise ValueError(
                    f"gate {name!r}: {kind} takes {GATE_ARITY[kind]} arguments"
                )
            for a in args:
                if a not in seen:
                    raise ValueError(f"gate {name!r}: unknown argument {a!r}")
            seen.add(name)
        if not self.outputs:
            raise ValueError("a circuit needs at least one output")
        for name, src in self.outputs:
            if name in seen:
                raise ValueError(f"duplicate node name {name!r}")
            seen.add(name)
            if src not in set(self.inputs) | {g[0] for g in self.gates}:
                raise ValueError(f"output {name!r}: unknown source {src!r}")

    @property
    def input_count(self) -> int:
        return len(self.inputs)

    @property
    def output_count(self) -> int:
        return len(self.outputs)

    def evaluate(self, bits: Iterable[bool]) -> tuple[bool, ...]:
        values = dict(zip(self.inputs, bits, strict=True))
        for name, kind, args in self.gates:
            vals = [values[a] for a in args]
            if kind == "AND":
                values[name] = vals[0] and vals[1]
            elif kind == "OR":
                values[name] = vals[0] or vals[1]
            else:
                values[name] = not vals[0]
        return tuple(values[src] for _, src in self.outputs)


def parse_circuit(text: str) -> Circuit:
    """Line format: ``input x``, ``gate g OR a b`` (or the shorthand
    ``or g a b`` / ``and`` / ``not``), ``output y src``; # comments."""
    inputs: list[str] = []
    gates: list[tuple[str, str, tuple[str, ...]]] = []
    outputs: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        parts = stripped.split()
        head = parts[0].lower()
        try:
            if head == "input" and len(parts) == 2:
                inputs.append(parts[1])
            elif head == "gate" and len(parts) >= 3:
                gates.append((parts[1], parts[2].upper(), tuple(parts[3:])))
            elif head in ("and", "or", "not") and len(parts) >= 2:
                gates.append((parts[1], head.upper(), tuple(parts[2:])))
            elif head == "output" and len(parts) == 3:
                outputs.append((parts[1], parts[2]))
            else:
                raise ValueError(f"unrecognized line {stripped!r}")
        except ValueError as e:
            raise ValueError(f"line {lineno}: {e}") from None
    try:
        return Circuit(tuple(inputs), tuple(gates), tuple(outputs))
    except ValueError as e:
        raise ValueError(str(e)) from None


@dataclass(frozen=True)
class ReductionArtifact:
    """The compiled host: acyclic apart from sinks, read in rounds of AAB.

    ``input_states[j]`` and ``output_states[i]`` are (T-state, F-state)
    pairs; the dfa's default initial state is the first output's T-rail.
    """

    dfa: Dfa
    p: int
    input_states: tuple[tuple[int, int], ...]
    output_states: tuple[tuple[int, int], ...]


# ---------------------------------------------------------------------------
# leveled intermediate form


def _levelize(c: Circuit):
    """Flatten to a DAG where every edge joins adjacent levels and each
    output node has a dedicated predecessor at the top gate level.

    Returns (d, lgates, out_srcs): lgates maps node id -> (level, kind,
    args); inputs appear as ("in", j) at level 0; pads are PASS gates.
    """
    gate_map = {g[0]: g for g in c.gates}
    # keep only gates that feed some output
    live: set[str] = set()
    stack = [src for _, src in c.outputs if src in gate_map]
    while stack:
        g = stack.pop()
        if g in live:
            continue
        live.add(g)
        stack.extend(a for a in gate_map[g][2] if a in gate_map)

    level: dict[str, int] = {name: 0 for name in c.inputs}
    for name, _, args in c.gates:
        if name in live:
            level[name] = 1 + max(level[a] for a in args)
    d_raw = 1 + max(level[src] for _, src in c.outputs)

    consumers: dict[str, int] = {}
    for name, _, args in c.gates:
        if name in live:
            for a in args:
                consumers[a] = consumers.get(a, 0) + 1
    for _, src in c.outputs:
        consumers[src] = consumers.get(src, 0) + 1

    bump = d_raw < 2 or any(
        level[src] == d_raw - 1 and consumers[src] > 1 for _, src in c.outputs
    )
    d = d_raw + 1 if bump else d_raw

    in_index = {name: j for j, name in enumerate(c.inputs)}
    lgates: dict[tuple, tuple[int, str, tuple[tuple, ...]]] = {}
    pad_counter = [0]

    def node_id(name: str):
        return ("in", in_index[name]) if name in in_index else ("gate", name)

    def pad_chain(src: str, upto_level: int) -> tuple:
        """PASS gates at levels level[src]+1 .. upto_level; returns the id of
        the node now sitting at upto_level."""
        cur = node_id(src)
        for lv in range(level[src] + 1, upto_level + 1):
            pid = ("pad", pad_counter[0])
            pad_counter[0] += 1
            lgates[pid] = (lv, "PASS", (cur,))
            cur = pid
        return cur

    for name, kind, args in c.gates:
        if name not in live:
            continue
        lv = level[name]
        srcs = tuple(pad_chain(a, lv - 1) for a in args)
        lgates[("gate", name)] = (lv, kind, srcs)

    out_srcs = []
    for _, src in c.outputs:
        if level[src] == d - 1:
            # dedicated by the bump rule: consumers[src] == 1 here
            out_srcs.append(node_id(src))
        else:
            out_srcs.append(pad_chain(src, d - 1))
    return d, lgates, tuple(out_srcs)


# ---------------------------------------------------------------------------
# DFA assembly


def _assemble(c: Circuit, *, merge: bool = False) -> ReductionArtifact:
    d, lgates, out_srcs = _levelize(c)
    k, m = c.input_count, c.output_count

    # consumer slots of every non-top node, in deterministic order
    slots: dict[tuple, list[tuple]] = {}
    gate_order = sorted(lgates, key=lambda gid: (lgates[gid][0], repr(gid)))
    for gid in gate_order:
        _, _, srcs = lgates[gid]
        for pos, src in enumerate(srcs):
            slots.setdefault(src, []).append((gid, pos))

    index: dict[tuple, int] = {}
    trans: dict[tuple[int, int], int] = {}

    def st(name: tuple) -> int:
        if name not in index:
            index[name] = len(index)
        return index[name]

    def arc(src: int, t0: int, t1: Optional[int] = None):
        trans[(src, 0)] = t0
        trans[(src, 1)] = t0 if t1 is None else t1

    def q_state(j: int, b: str) -> int:
        # merged automata identify input rails with output rails
        return st(("p", j, b)) if merge else st(("q", j, b))

    # rails come first so artifact indices are stable and readable
    for i in range(m):
        st(("p", i, "T"))
        st(("p", i, "F"))
    if not merge:
        for j in range(k):
            st(("q", j, "T"))
            st(("q", j, "F"))

    fresh_counter = [0]

    def fresh() -> int:
        fresh_counter[0] += 1
        return st(("x", fresh_counter[0]))

    def t_slot(gid: tuple, b: str) -> int:
        """Where gate gid's result rail lives: the output rail for top-level
        gates, otherwise the collect side of its fanout gadget."""
        if gid in top_of:
            return st(("p", top_of[gid], b))
        return st(("fan_in", gid, b))

    def s_slot(gid: tuple, pos: int, b: str) -> int:
        src = lgates[gid][2][pos]
        if src[0] == "in":
            return q_state(src[1], b)
        j = slots[src].index((gid, pos))
        return st(("fan_out", src, j, b))

    top_of = {gid: i for i, gid in enumerate(out_srcs)}

    for gid in gate_order:
        lv, kind, srcs = lgates[gid]
        if kind in ("OR", "AND"):
            hi, lo = ("T", "F") if kind == "OR" else ("F", "T")
            a1, a2, a3 = fresh(), fresh(), fresh()
            b1, b2, b3, b4 = fresh(), fresh(), fresh(), fresh()
            arc(t_slot(gid, hi), a1, a2)
            arc(t_slot(gid, lo), a3)
            arc(a1, b1, b2)
            arc(a2, b3)
            arc(a3, b4)
            arc(b1, s_slot(gid, 0, hi), s_slot(gid, 1, hi))
            arc(b2, s_slot(gid, 0, hi), s_slot(gid, 1, lo))
            arc(b3, s_slot(gid, 0, lo), s_slot(gid, 1, hi))
            arc(b4, s_slot(gid, 0, lo), s_slot(gid, 1, lo))
        else:  # NOT and PASS: forced three-step chains, NOT crossing rails
            for b_in, b_out in (("T", "F"), ("F", "T")) if kind == "NOT" else (
                ("T", "T"),
                ("F", "F"),
            ):
                u, v = fresh(), fresh()
                arc(t_slot(gid, b_in), u)
                arc(u, v)
                arc(v, s_slot(gid, 0, b_out))
        if gid not in top_of:
            # fanout gadget: all copies funnel back to the single result rail
            for b in ("T", "F"):
                u, v = fresh(), fresh()
                for j in range(len(slots.get(gid, []))):
                    arc(st(("fan_out", gid, j, b)), u)
                arc(u, v)
                arc(v, st(("fan_in", gid, b)))

    if not merge:
        sink = st(("sink",))
        arc(sink, sink)
        for j in range(k):
            arc(q_state(j, "T"), sink)
            arc(q_state(j, "F"), sink)

    n = len(index)
    delta = []
    for q in range(n):
        row = []
        for sym in range(2):
            if (q, sym) not in trans:
                raise AssertionError("incomplete reduction automaton")
            row.append(trans[(q, sym)])
        delta.append((row[0], row[1]))
    dfa = Dfa(
        alphabet=("0", "1"),
        delta=tuple(delta),
        initial=index[("p", 0, "T")],
        finals=frozenset(),
    )
    input_states = tuple(
        (index[("p" if merge else "q", j, "T")], index[("p" if merge else "q", j, "F")])
        for j in range(k)
    )
    output_states = tuple(
        (index[("p", i, "T")], index[("p", i, "F")]) for i in range(m)
    )
    return ReductionArtifact(
        dfa=dfa, p=2 * d - 3, input_states=input_states, output_states=output_states
    )


def circuit_to_dfa(c: Circuit) -> ReductionArtifact:
    """Compile a circuit; reading (AAB)^p from a set of output rails yields
    exactly the consistent input-rail sets evaluating to it, plus excessive
    leftovers."""
    return _assemble(c, merge=False)


def consistent_inputs(
    art: ReductionArtifact, raw_state: Iterable[int]
) -> set[tuple[bool, ...]]:
    """Input vectors encoded by the consistent members of a raw game state."""
    rail_of = {}
    for j, (t, f) in enumerate(art.input_states):
        rail_of[t] = (j, True)
        rail_of[f] = (j, False)
    found = set()
    for mask in raw_state:
        assignment: dict[int, bool] = {}
        ok = True
        m = mask
        while m:
            q = (m & -m).bit_length() - 1
            m &= m - 1
            if q not in rail_of:
                ok = False
                break
            j, val = rail_of[q]
            if assignment.setdefault(j, val) != val:
                ok = False  # both rails of one wire: excessive
                break
        if ok and len(assignment) == len(art.input_states):
            found.add(tuple(assignment[j] for j in range(len(art.input_states))))
    return found


def circuit_value_instance(
    c: Circuit, a: Iterable[bool]
) -> tuple[Dfa, str]:
    """Membership instance whose answer is the circuit's value on ``a``:
    start at the output's T-rail, accept on the input rails spelling ``a``."""
    if c.output_count != 1:
        raise ValueError("the value instance needs exactly one output")
    bits = tuple(a)
    if len(bits) != c.input_count:
        raise ValueError("assignment length must match the input count")
    art = _assemble(c, merge=False)
    finals = frozenset(
        pair[0] if bit else pair[1] for pair, bit in zip(art.input_states, bits)
    )
    dfa = replace(art.dfa, initial=art.output_states[0][0], finals=finals)
    return dfa, "AAB" * art.p


def iterated_instance(
    c: Circuit, a: Iterable[bool], i: int
) -> tuple[Dfa, str, str]:
    """Cyclic instance tracking repeated application of the circuit.

    The circuit (equal input and output arity) is first modified so output j
    computes y_j = x_j or x_i, making wire i's truth persistent; input and
    output rails are then merged into one cyclic automaton, entered through
    a fan-in tree that seeds every input's T-rail.  Returns (dfa, base,
    period): base·period^t is in the winning set iff t-fold application of
    the modified circuit to ``a`` gives all-true.
    """
    k = c.input_count
    if c.output_count != k:
        raise ValueError("iterated instances need matching input/output arity")
    if not 0 <= i < k:
        raise ValueError("persistent index out of range")
    bits = tuple(a)
    if len(bits) != k:
        raise ValueError("assignment length must match the input count")

    prime = or_with_index(c, i)
    art = _assemble(prime, merge=True)
    finals = frozenset(
        pair[0] if bit else pair[1] for pair, bit in zip(art.input_states, bits)
    )
    dfa = art.dfa
    if k == 1:
        dfa = replace(dfa, initial=art.input_states[0][0], finals=finals)
        return dfa, "", "AAB" * art.p

    # fan-in tree: L rounds of AAB turn {root} into all k T-rails
    depth = math.ceil(math.log2(k))
    n0 = dfa.state_count
    extra: list[tuple[int, int]] = []

    def new_state(t0: int, t1: int) -> int:
        extra.append((t0, t1))
        return n0 + len(extra) - 1

    def build(lo: int, hi: int, lv: int) -> int:
        if lv == depth:
            return art.input_states[min(lo, k - 1)][0]
        mid = (lo + hi) // 2
        left = build(lo, mid, lv + 1)
        right = build(mid, hi, lv + 1)
        v = new_state(left, right)
        u = new_state(v, v)
        return new_state(u, u)

    root = build(0, 1 << depth, 0)
    dfa = Dfa(
        alphabet=dfa.alphabet,
        delta=dfa.delta + tuple(extra),
        initial=root,
        finals=finals,
    )
    return dfa, "AAB" * depth, "AAB" * art.p


def or_with_index(c: Circuit, i: int) -> Circuit:
    """Replace each output y_j by y_j or y_i (computed on fresh OR gates)."""
    srcs = [src for _, src in c.outputs]
    gates = list(c.gates)
    outputs = []
    for j, src in enumerate(srcs):
        name = f"$or{j}"
        gates.append((name, "OR", (src, srcs[i])))
        outputs.append((f"$y{j}", name))
    return Circuit(c.inputs, tuple(gates), tuple(outputs))
