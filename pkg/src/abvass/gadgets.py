"""Generators for the hardness constructions and worked examples."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .core import LOSSY, STRICT, Instance, System, UnaryRule, ForkRule, SplitRule


@dataclass(frozen=True)
class GadgetInstance:
    instance: Instance
    legend: dict  # coordinate -> role name

    @property
    def system(self) -> System:
        return self.instance.system


@dataclass(frozen=True)
class MinskyMachine:
    """Counter program; rules are ``(q, op, counter, q1)`` with op in inc/dec/zero."""

    states: tuple
    counters: tuple
    rules: tuple
    start: str | None = None
    halt: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "counters", tuple(self.counters))
        object.__setattr__(self, "rules", tuple(tuple(r) for r in self.rules))
        known = set(self.states)
        for q, op, c, q1 in self.rules:
            if op not in ("inc", "dec", "zero"):
                raise ValueError(f"unknown Minsky operation {op!r}")
            if q not in known or q1 not in known:
                raise ValueError(f"rule {q} {op} {c} {q1} uses an unknown state")
            if c not in self.counters:
                raise ValueError(f"rule {q} {op} {c} {q1} uses an undeclared counter")


# ------------------------------------------------------------- worked example

def gen_example_bvass(m: int = 0) -> GadgetInstance:
    """Five-state BVASS over counters (c, d, d'); coverable from (q0, (m,0,0)) iff m >= 4."""
    sys = System(
        ("q0", "q1", "q2", "q3", "q4"),
        3,
        unary=[
            ("q0", (0, 1, 0), "q1"),
            ("q1", (0, -1, 2), "q1"),
            ("q1", (0, 0, 0), "q2"),
            ("q2", (0, 1, -1), "q2"),
            ("q3", (0, 0, 0), "q0"),
            ("q3", (-1, -2, 0), "q4"),
        ],
        split=[("q2", "q3", "q3")],
    )
    inst = Instance(sys, "q0", {"q4"}, LOSSY, (m, 0, 0), leaf_condition="any")
    return GadgetInstance(inst, {0: "c", 1: "d", 2: "d'"})


# ------------------------------------------------------------- B_k hierarchy

def bk_state(kind: str, j: int | None = None) -> str:
    return "$Bk.leaf" if kind == "leaf" else f"$Bk.{kind}.{j}"


def _bk_rules(k: int, dim: int, d_idx, dp_idx):
    """States and rules of B_k embedded in ``dim`` coordinates.

    ``d_idx[j]`` / ``dp_idx[j]`` give the coordinates of d_j / d'_j (1-based j).
    """

    def e(i, x=1):
        return [(i, x)]

    def add(*parts):
        v = [0] * dim
        for p in parts:
            for i, x in p:
                v[i] += x
        return tuple(v)

    states = [bk_state("init", 1)]
    unary = [UnaryRule(bk_state("init", 1), add(e(d_idx[1], -2)), bk_state("leaf"))]
    split = []
    for j in range(2, k + 1):
        init, one, two, loop = (bk_state(x, j) for x in ("init", "one", "two", "loop"))
        states += [init, one, two, loop]
        a, b = d_idx[j - 1], dp_idx[j - 1]
        unary += [
            UnaryRule(init, add(e(a)), one),
            UnaryRule(one, add(e(a, -1), e(b, 2)), one),
            UnaryRule(one, (0,) * dim, two),
            UnaryRule(two, add(e(b, -1), e(a)), two),
            UnaryRule(loop, (0,) * dim, init),
            UnaryRule(loop, add(e(d_idx[j], -1)), bk_state("init", j - 1)),
        ]
        split.append(SplitRule(two, loop, loop))
    states.append(bk_state("leaf"))
    return states, unary, split


def gen_tower_bvass(k: int, n: int = 0) -> GadgetInstance:
    """B_k over d_1..d_k, d'_1..d'_{k-1}; coverable from n * e_{d_k} iff n >= tower(k)."""
    if k < 1:
        raise ValueError("B_k needs k >= 1")
    dim = 2 * k - 1
    d_idx = {j: j - 1 for j in range(1, k + 1)}
    dp_idx = {j: k + j - 1 for j in range(1, k)}
    states, unary, split = _bk_rules(k, dim, d_idx, dp_idx)
    sys = System(tuple(states), dim, tuple(unary), (), tuple(split), ())
    root = [0] * dim
    root[d_idx[k]] = n
    inst = Instance(sys, bk_state("init", k), {bk_state("leaf")}, LOSSY, tuple(root), leaf_condition="any")
    legend = {d_idx[j]: f"d{j}" for j in d_idx}
    legend.update({dp_idx[j]: f"d'{j}" for j in dp_idx})
    return GadgetInstance(inst, legend)


# ------------------------------------------------------------- Minsky machines

def simulate_minsky_bounded(M: MinskyMachine, q0: str, value_bound: int, guard: int = 10**6) -> set:
    """All ``(state, valuation)`` reachable from ``(q0, 0)`` with every counter <= bound."""
    idx = {c: i for i, c in enumerate(M.counters)}
    out_rules: dict = {}
    for q, op, c, q1 in M.rules:
        out_rules.setdefault(q, []).append((op, idx[c], q1))
    start = (q0, (0,) * len(M.counters))
    seen = {start}
    todo = deque([start])
    while todo:
        q, v = todo.popleft()
        for op, i, q1 in out_rules.get(q, ()):
            w = list(v)
            if op == "inc":
                if w[i] + 1 > value_bound:
                    continue
                w[i] += 1
            elif op == "dec":
                if w[i] == 0:
                    continue
                w[i] -= 1
            elif w[i] != 0:
                continue
            nxt = (q1, tuple(w))
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > guard:
                    raise RuntimeError(f"Minsky state space exceeds {guard}")
                todo.append(nxt)
    return seen


def minsky_reaches(M: MinskyMachine, q0: str, qH: str, value_bound: int) -> bool:
    return any(q == qH for q, _ in simulate_minsky_bounded(M, q0, value_bound))


# ------------------------------------------------------------- weak tower computer

@dataclass
class Fragment:
    """A VASS piece: unary rules between fresh states, entered at ``entry``, left at ``exit``."""

    states: list
    unary: list
    entry: str
    exit: str
    dim: int
    legend: dict = field(default_factory=dict)

    def system(self) -> System:
        return System(tuple(self.states), self.dim, tuple(self.unary))


def gen_weak_tower_initializer(K: int, targets, dim: int, prefix: str = "$wt") -> Fragment:
    """Weakly put tower(K) into each target coordinate.

    Per target it uses scratch counters b_0..b_{K-1} and t_1..t_K appended
    after ``dim``; b_K is the target itself.  All b_j start at 1 and stage
    j doubles b_j once per unit taken from b_{j-1}.  Every loop may stop
    early, so any run leaves at most tower(K) in the target.
    """
    if K < 1:
        raise ValueError("initializer needs K >= 1")
    states, unary, legend = [], [], {}
    cur_dim = dim
    entry = f"{prefix}.entry"
    states.append(entry)
    prev = entry
    for ti, tgt in enumerate(targets):
        base = cur_dim
        b = {j: base + j for j in range(K)}
        b[K] = tgt
        t = {j: base + K + j - 1 for j in range(1, K + 1)}
        for j in range(K):
            legend[b[j]] = f"scratch:b{j}[{tgt}]"
        for j in range(1, K + 1):
            legend[t[j]] = f"scratch:t{j}[{tgt}]"
        cur_dim += 2 * K
        p = f"{prefix}.{ti}"
        stage_states = {j: (f"{p}.{j}.outer", f"{p}.{j}.dbl", f"{p}.{j}.tr") for j in range(1, K + 1)}
        for j in range(1, K + 1):
            states.extend(stage_states[j])
        unary.append(("init", prev, [(b[j], 1) for j in range(K + 1)], stage_states[1][0]))
        for j in range(1, K + 1):
            outer, dbl, tr = stage_states[j]
            unary.append(("", outer, [(b[j - 1], -1)], dbl))
            unary.append(("", dbl, [(b[j], -1), (t[j], 2)], dbl))
            unary.append(("", dbl, [], tr))
            unary.append(("", tr, [(t[j], -1), (b[j], 1)], tr))
            unary.append(("", tr, [], outer))
        prev = stage_states[K][0]
    exit_ = f"{prefix}.exit"
    states.append(exit_)
    unary.append(("", prev, [], exit_))
    rules = []
    for _, src, parts, dst in unary:
        v = [0] * cur_dim
        for i, x in parts:
            v[i] += x
        rules.append(UnaryRule(src, tuple(v), dst))
    return Fragment(states, rules, entry, exit_, cur_dim, legend)


def _widen(rules, dim):
    out = []
    for r in rules:
        if isinstance(r, UnaryRule):
            out.append(UnaryRule(r.src, tuple(r.delta) + (0,) * (dim - len(r.delta)), r.dst))
        else:
            out.append(r)
    return out


def gen_minsky_sim(M: MinskyMachine, q0: str, qH: str, K: int) -> GadgetInstance:
    """Lossy BVASS whose coverability matches tower(K)-bounded runs of ``M`` to ``qH``.

    Each counter c gets c, its complement c^ and a copy buffer c'; a zero
    test moves c^ into d_K (through c') and splits off a B_K check that
    d_K reached tower(K).
    """
    if K < 1:
        raise ValueError("K >= 1")
    C = list(M.counters)
    nC = len(C)
    cidx = {c: 3 * i for i, c in enumerate(C)}
    hidx = {c: 3 * i + 1 for i, c in enumerate(C)}
    pidx = {c: 3 * i + 2 for i, c in enumerate(C)}
    d_idx = {j: 3 * nC + j - 1 for j in range(1, K + 1)}
    dp_idx = {j: 3 * nC + K + j - 1 for j in range(1, K)}
    base_dim = 3 * nC + 2 * K - 1
    legend = {}
    for c in C:
        legend[cidx[c]] = c
        legend[hidx[c]] = f"^{c}"
        legend[pidx[c]] = f"{c}'"
    legend.update({d_idx[j]: f"d{j}" for j in d_idx})
    legend.update({dp_idx[j]: f"d'{j}" for j in dp_idx})

    frag = gen_weak_tower_initializer(K, [hidx[c] for c in C], base_dim, prefix="$sim.wt")
    dim = frag.dim
    legend.update(frag.legend)

    def vec(*parts):
        v = [0] * dim
        for i, x in parts:
            v[i] += x
        return tuple(v)

    bk_states, bk_unary, bk_split = _bk_rules(K, dim, d_idx, dp_idx)
    states = ["$sim.init"] + list(M.states)
    unary = [UnaryRule("$sim.init", vec(), frag.entry)] + _widen(frag.unary, dim)
    unary.append(UnaryRule(frag.exit, vec(), q0))
    split = []
    for i, (q, op, c, q1) in enumerate(M.rules):
        if op == "inc":
            unary.append(UnaryRule(q, vec((cidx[c], 1), (hidx[c], -1)), q1))
        elif op == "dec":
            unary.append(UnaryRule(q, vec((cidx[c], -1), (hidx[c], 1)), q1))
        else:
            s1, s2 = f"$sim.{i}.1", f"$sim.{i}.2"
            states += [s1, s2]
            unary += [
                UnaryRule(q, vec(), s1),
                UnaryRule(s1, vec((hidx[c], -1), (d_idx[K], 1), (pidx[c], 1)), s1),
                UnaryRule(s1, vec(), s2),
                UnaryRule(s2, vec((pidx[c], -1), (hidx[c], 1)), s2),
            ]
            split.append(SplitRule(s2, q1, bk_state("init", K)))
    states += frag.states + bk_states
    unary += bk_unary
    split += bk_split
    sys = System(tuple(states), dim, tuple(unary), (), tuple(split), ())
    inst = Instance(sys, "$sim.init", {qH, bk_state("leaf")}, LOSSY, leaf_condition="any")
    return GadgetInstance(inst, legend)


def minsky_to_avass(M: MinskyMachine, q0: str, qH: str) -> GadgetInstance:
    """Strict AVASS: zero tests become forks into a branch that drains the other counters.

    Halting at ``qH`` drains every counter before the leaf, so the
    instance is reachable iff ``M`` reaches ``qH`` with any valuation.
    """
    C = list(M.counters)
    d = len(C)
    idx = {c: i for i, c in enumerate(C)}
    zero = (0,) * d

    def unit(i, x):
        v = [0] * d
        v[i] = x
        return tuple(v)

    leaf = "$avass.leaf"
    halt = "$avass.halt"
    states = list(M.states)
    unary, fork = [], []
    checks = {}
    for q, op, c, q1 in M.rules:
        if op == "inc":
            unary.append(UnaryRule(q, unit(idx[c], 1), q1))
        elif op == "dec":
            unary.append(UnaryRule(q, unit(idx[c], -1), q1))
        else:
            chk = f"$avass.chk.{c}"
            if chk not in checks:
                checks[chk] = c
                states.append(chk)
                for other in C:
                    if other != c:
                        unary.append(UnaryRule(chk, unit(idx[other], -1), chk))
                unary.append(UnaryRule(chk, zero, leaf))
            fork.append(ForkRule(q, q1, chk))
    states += [halt, leaf]
    unary.append(UnaryRule(qH, zero, halt))
    for i in range(d):
        unary.append(UnaryRule(halt, unit(i, -1), halt))
    unary.append(UnaryRule(halt, zero, leaf))
    sys = System(tuple(states), d, tuple(unary), tuple(fork), (), ())
    inst = Instance(sys, q0, {leaf}, STRICT)
    return GadgetInstance(inst, {i: c for i, c in enumerate(C)})
