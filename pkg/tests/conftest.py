import random

import pytest

from winset.automata import Dfa
from winset.enumeration import host_corpus


@pytest.fixture(scope="session")
def small_hosts():
    """Every host with at most 3 states, up to relabeling."""
    return [d for n in (1, 2, 3) for d in host_corpus(n)]


@pytest.fixture(scope="session")
def sampled_hosts(small_hosts):
    """A fixed 60-host sample for the more expensive per-host properties."""
    rng = random.Random(20240917)
    return rng.sample(small_hosts, 60)


def random_host(rng: random.Random, n: int) -> Dfa:
    delta = tuple(
        (rng.randrange(n), rng.randrange(n)) for _ in range(n)
    )
    finals = frozenset(q for q in range(n) if rng.random() < 0.5)
    return Dfa(alphabet=("0", "1"), delta=delta, initial=0, finals=finals)


def words_upto(alphabet: str, max_len: int) -> list[str]:
    """All words over the alphabet of length 0 through max_len."""
    from winset.automata import enumerate_words

    return [w for n in range(max_len + 1) for w in enumerate_words(alphabet, n)]


def random_circuit(rng: random.Random, n_inputs: int, n_gates: int, n_outputs: int = 1):
    from winset.circuits import GATE_ARITY, Circuit

    inputs = tuple(f"x{j}" for j in range(n_inputs))
    avail = list(inputs)
    gates = []
    for g in range(n_gates):
        kind = rng.choice(sorted(GATE_ARITY))
        args = tuple(rng.choice(avail) for _ in range(GATE_ARITY[kind]))
        gates.append((f"g{g}", kind, args))
        avail.append(f"g{g}")
    outputs = tuple((f"y{i}", rng.choice(avail)) for i in range(n_outputs))
    return Circuit(inputs, tuple(gates), outputs)
