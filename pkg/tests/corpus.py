"""Random small instances shared by the cross-check tests."""

from __future__ import annotations

import random

from abvass.core import Instance, Semantics, System


def random_system(rng: random.Random, n_states=4, dim=2, max_abs=2, zero_tests=True) -> System:
    nq = rng.randint(2, n_states)
    d = rng.randint(1, dim)
    Q = [f"q{i}" for i in range(nq)]
    unary = []
    for _ in range(rng.randint(1, 5)):
        delta = tuple(rng.randint(-max_abs, max_abs) for _ in range(d))
        unary.append((rng.choice(Q), delta, rng.choice(Q)))
    fork = [(rng.choice(Q), rng.choice(Q), rng.choice(Q)) for _ in range(rng.randint(0, 1))]
    split = [(rng.choice(Q), rng.choice(Q), rng.choice(Q)) for _ in range(rng.randint(0, 2))]
    zero = []
    if zero_tests:
        zero = [(rng.choice(Q), rng.choice(Q)) for _ in range(rng.randint(0, 1))]
    return System(tuple(Q), d, unary, fork, split, zero)


def random_instance(rng: random.Random, mode="lossy", zero_tests=True, leaf_condition="zero", **kw) -> Instance:
    sys = random_system(rng, zero_tests=zero_tests, **kw)
    root_vec = tuple(rng.randint(0, 2) for _ in range(sys.dim))
    leaves = frozenset(rng.sample(sys.states, rng.randint(1, 2)))
    return Instance(sys, sys.states[0], leaves, Semantics(mode), root_vec, leaf_condition)


def corpus(seed: int, n: int, **kw) -> list:
    rng = random.Random(seed)
    return [random_instance(rng, **kw) for _ in range(n)]


def random_minsky(rng: random.Random, n_states=4, n_counters=2):
    from abvass.gadgets import MinskyMachine
    Q = [f"m{i}" for i in range(rng.randint(2, n_states))]
    C = [f"c{i}" for i in range(rng.randint(1, n_counters))]
    rules = []
    for _ in range(rng.randint(1, 5)):
        rules.append((rng.choice(Q), rng.choice(("inc", "dec", "zero")), rng.choice(C), rng.choice(Q)))
    return MinskyMachine(tuple(Q), tuple(C), tuple(rules), Q[0], Q[-1])


def minsky_corpus(seed: int, n: int, **kw) -> list:
    rng = random.Random(seed)
    return [random_minsky(rng, **kw) for _ in range(n)]
