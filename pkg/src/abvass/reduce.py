"""Instance-to-instance reductions and witness back-translation.

Every pass returns the new instance together with a ``ReductionTrace``
whose maps are total on the output system.  ``back_translate`` turns a
witness for the output into a witness for the input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .core import (
    LEAF,
    Configuration,
    DeductionTree,
    Instance,
    Semantics,
    SplitRule,
    Step,
    System,
    UnaryRule,
    ZeroRule,
    ForkRule,
    pseudo_unary,
    split_delta,
    unit_add,
)
from ._vec import vec_add


@dataclass
class ReductionTrace:
    pass_name: str
    state_map: dict = field(default_factory=dict)
    dim_map: dict = field(default_factory=dict)
    rule_map: dict = field(default_factory=dict)


def _identity_trace(name: str, sys: System) -> ReductionTrace:
    return ReductionTrace(
        name,
        {q: q for q in sys.states},
        {i: i for i in range(sys.dim)},
        {(k, i): (k, i) for k in ("unary", "fork", "split", "zero") for i in range(len(sys.rule_list(k)))},
    )


# ------------------------------------------------------------- zero tests

def zt_state(i: int, q: str) -> str:
    return f"$zt.{i}.{q}"


def eliminate_zero_tests(inst: Instance) -> tuple[Instance, ReductionTrace]:
    """Replace full zero tests by block switches over ``|Q|`` copies of the counters.

    State ``(i, q)`` runs ``q`` on the i-th block of ``d`` coordinates; a
    zero test ``q -> q'`` becomes a 0-delta move ``(i, q) -> (i+1, q')``
    and the leaf condition checks that abandoned blocks were empty.
    """
    sem = inst.semantics
    if sem.mode == "increasing":
        raise ValueError("zero rules are jumps under increasing semantics; use increasing_view")
    if inst.root_condition != "exact":
        raise ValueError("zero-test elimination needs an exact root vector")
    if sem.mode in ("strict", "expansive") and inst.leaf_condition != "zero":
        raise ValueError("zero-test elimination needs zero leaves unless losses are allowed")
    if sem.mode == "strict" and sem.zero_reading != "test":
        raise ValueError("strict zero-test elimination needs the test reading")
    sys = inst.system
    if not sys.zero:
        return inst, _identity_trace("eliminate-zero-tests", sys)

    d = sys.dim
    n = len(sys.states) + (1 if any(inst.root_vector) else 0)
    states, smap = [], {}
    for i in range(1, n + 1):
        for q in sys.states:
            s = zt_state(i, q)
            states.append(s)
            smap[s] = (i, q)
    dmap = {b * d + c: (b, c) for b in range(n) for c in range(d)}
    unary, fork, split, rmap = [], [], [], {}
    for i in range(1, n + 1):
        off = (i - 1) * d
        for j, r in enumerate(sys.unary):
            delta = [0] * (n * d)
            delta[off:off + d] = r.delta
            rmap[("unary", len(unary))] = ("unary", j)
            unary.append(UnaryRule(zt_state(i, r.src), tuple(delta), zt_state(i, r.dst)))
        if i < n:
            for j, r in enumerate(sys.zero):
                rmap[("unary", len(unary))] = ("zero", j)
                unary.append(UnaryRule(zt_state(i, r.src), (0,) * (n * d), zt_state(i + 1, r.dst)))
        for j, r in enumerate(sys.fork):
            rmap[("fork", len(fork))] = ("fork", j)
            fork.append(ForkRule(zt_state(i, r.src), zt_state(i, r.left), zt_state(i, r.right)))
        for j, r in enumerate(sys.split):
            rmap[("split", len(split))] = ("split", j)
            split.append(SplitRule(zt_state(i, r.src), zt_state(i, r.left), zt_state(i, r.right)))
    out = System(tuple(states), n * d, tuple(unary), tuple(fork), tuple(split), ())
    root = tuple(inst.root_vector) + (0,) * ((n - 1) * d)
    leaves = {zt_state(i, q) for i in range(1, n + 1) for q in inst.leaf_states}
    new = Instance(out, zt_state(1, inst.root_state), leaves, sem, root, inst.leaf_condition)
    return new, ReductionTrace("eliminate-zero-tests", smap, dmap, rmap)


def root_states(sys: System, leaf_states, oracle: Callable) -> frozenset:
    """Least fixpoint of root states reachable from ``(q, 0)`` with zero leaves.

    ``oracle(system, q, X)`` decides reachability of ``X x {0}`` from
    ``(q, 0)`` in a system without zero rules, under whatever semantics
    the caller has in mind.
    """
    base = sys.without_zero_rules()

    def root(x):
        x = frozenset(x)
        return frozenset(q for q in sys.states if oracle(base, q, x))

    zinv = {}
    for r in sys.zero:
        zinv.setdefault(r.dst, set()).add(r.src)
    leaves = frozenset(leaf_states)
    base_roots = root(leaves)
    x: frozenset = frozenset()
    for _ in range(len(sys.states) + 2):
        pre = set(x)
        for q in x:
            pre |= zinv.get(q, set())
        nxt = base_roots | root(pre) if pre else base_roots
        if nxt == x:
            return x
        x = nxt
    raise AssertionError("root-state fixpoint did not converge within |Q| rounds")


# ------------------------------------------------------------- ordinary form

def ord_state(j: int, k: int) -> str:
    return f"$ord.{j}.{k}"


def _unit_steps(delta) -> list:
    """Unit deltas of a rule: all decrements first, then increments."""
    d = len(delta)
    steps = []
    for i, x in enumerate(delta):
        steps += [unit_vec(d, i, -1)] * max(0, -x)
    for i, x in enumerate(delta):
        steps += [unit_vec(d, i, 1)] * max(0, x)
    return steps


def unit_vec(d, i, k):
    return tuple(k if j == i else 0 for j in range(d))


def to_ordinary(sys: System) -> tuple[System, ReductionTrace]:
    """Split multi-unit deltas into chains of unit steps through fresh states.

    Rules whose delta is zero or a single unit vector are kept as they are.
    """
    states = list(sys.states)
    smap = {q: q for q in sys.states}
    unary, rmap = [], {}
    for j, r in enumerate(sys.unary):
        steps = _unit_steps(r.delta)
        if len(steps) <= 1:
            rmap[("unary", len(unary))] = ("unary", j, 0, 1)
            unary.append(r)
            continue
        chain = [r.src] + [ord_state(j, k) for k in range(1, len(steps))] + [r.dst]
        for k in range(1, len(steps)):
            states.append(chain[k])
            smap[chain[k]] = ("generated", j, k)
        for k, u in enumerate(steps):
            rmap[("unary", len(unary))] = ("unary", j, k, len(steps))
            unary.append(UnaryRule(chain[k], u, chain[k + 1]))
    for kind in ("fork", "split", "zero"):
        for i in range(len(sys.rule_list(kind))):
            rmap[(kind, i)] = (kind, i)
    out = System(tuple(states), sys.dim, tuple(unary), sys.fork, sys.split, sys.zero)
    return out, ReductionTrace("ordinary", smap, {i: i for i in range(sys.dim)}, rmap)


def ordinary_instance(inst: Instance) -> tuple[Instance, ReductionTrace]:
    if inst.semantics.mode == "increasing":
        raise ValueError("ordinary form is not defined for increasing semantics")
    sys, tr = to_ordinary(inst.system)
    return inst.replace(system=sys), tr


# ------------------------------------------------------------- semantic views

def coverability_view(inst: Instance) -> tuple[Instance, ReductionTrace]:
    """Fold losses into reset zero rules and unconstrained leaves (strict reading)."""
    if inst.semantics.mode != "lossy":
        raise ValueError("coverability_view needs lossy semantics")
    view = inst.replace(semantics=Semantics("strict", "reset"), leaf_condition="any")
    return view, _identity_trace("coverability-view", inst.system)


def increasing_view(inst: Instance) -> tuple[Instance, ReductionTrace]:
    """Bottom-up form: forks as meets, zero rules as jumps, root vector covered."""
    if inst.semantics.mode != "increasing":
        raise ValueError("increasing_view needs increasing semantics")
    view = inst.replace(
        semantics=Semantics("strict", "jump", "meet"),
        leaf_condition="zero",
        root_condition="cover",
    )
    return view, _identity_trace("increasing-view", inst.system)


def to_pseudo_increasing(inst: Instance) -> tuple[Instance, ReductionTrace]:
    if inst.semantics.mode != "increasing":
        raise ValueError("to_pseudo_increasing needs increasing semantics")
    s = inst.semantics
    out = inst.replace(semantics=Semantics("increasing", s.zero_reading, s.fork_reading, True))
    return out, _identity_trace("pseudo-increasing", inst.system)


# ------------------------------------------------------------- back-translation

def _rebuild(tree: DeductionTree, fn) -> DeductionTree:
    """Post-order rebuild without recursion: ``fn(node, new_children)``."""
    done: dict = {}
    keep = []
    stack = [(tree, False)]
    while stack:
        node, ready = stack.pop()
        if id(node) in done:
            continue
        if ready:
            done[id(node)] = fn(node, [done[id(c)] for c in node.children])
            keep.append(node)
        else:
            stack.append((node, True))
            for c in node.children:
                if id(c) not in done:
                    stack.append((c, False))
    return done[id(tree)]


def lower_with(kind: str, state: str, start: tuple, end: tuple, below: DeductionTree) -> DeductionTree:
    """Chain of single-coordinate ``kind`` steps from ``start`` to ``end``, then ``below``.

    ``kind`` is ``loss`` (``start >= end``) or ``increase``/``expand``
    (``start <= end``).
    """
    moves = []
    cur = list(start)
    for i in range(len(start)):
        diff = start[i] - end[i]
        moves += [i] * abs(diff)
    labels = []
    sign = -1 if kind == "loss" else 1
    for i in moves:
        labels.append((tuple(cur), i))
        cur[i] += sign
    assert tuple(cur) == tuple(end)
    t = below
    for vec, i in reversed(labels):
        t = DeductionTree(Configuration(state, vec), Step(kind, coord=i), (t,))
    return t


def _lossy_leaf(state, v):
    return lower_with("loss", state, v, (0,) * len(v), DeductionTree(Configuration(state, (0,) * len(v))))


def back_translate(trace: ReductionTrace, tree: DeductionTree, source: Instance) -> DeductionTree:
    """Witness for ``source`` from a witness of the pass output."""
    name = trace.pass_name
    if name == "eliminate-zero-tests":
        return _back_zt(trace, tree, source)
    if name == "ordinary":
        return _back_ordinary(trace, tree, source)
    if name == "coverability-view":
        return _back_cover(tree, source)
    if name == "increasing-view":
        return _back_increasing(tree, source)
    if name == "pseudo-increasing":
        return tree
    raise ValueError(f"unknown pass {name!r}")


def _back_zt(trace, tree, source):
    if not source.system.zero:
        return tree
    d = source.system.dim
    lossy = source.semantics.mode == "lossy"
    reset = source.semantics.zero_reading == "reset"
    zero_leaves = source.leaf_condition == "zero"

    def proj(label):
        i, q = trace.state_map[label.state]
        return i, Configuration(q, tuple(label.vector[(i - 1) * d:i * d]))

    def fn(node, kids):
        i, lab = proj(node.label)
        st = node.step
        if st.kind == "leaf":
            if zero_leaves and any(lab.vector):
                return _lossy_leaf(lab.state, lab.vector)
            return DeductionTree(lab)
        if st.is_semantic:
            b, c = trace.dim_map[st.coord]
            if b != i - 1:
                return kids[0]
            return DeductionTree(lab, Step(st.kind, coord=c), tuple(kids))
        if st.kind == "unary":
            kind, j = trace.rule_map[("unary", st.index)]
            if kind == "zero":
                if reset:
                    return DeductionTree(lab, Step("zero", j), tuple(kids))
                zero = (0,) * d
                t = DeductionTree(Configuration(lab.state, zero), Step("zero", j), tuple(kids))
                if any(lab.vector):
                    if not lossy:
                        raise ValueError("non-empty block at a zero test outside lossy semantics")
                    t = lower_with("loss", lab.state, lab.vector, zero, t)
                return t
            return DeductionTree(lab, Step("unary", j), tuple(kids))
        kind, j = trace.rule_map[(st.kind, st.index)]
        return DeductionTree(lab, Step(kind, j), tuple(kids))

    return _rebuild(tree, fn)


def _back_ordinary(trace, tree, source):
    sys = source.system

    def fn(node, kids):
        st = node.step
        if st.kind != "unary":
            if node.label.state not in sys.state_set:
                # inside a chain: handled by the chain head
                return ("chain", node, kids)
            return DeductionTree(node.label, st, tuple(_resolve(k) for k in kids))
        _, j, pos, length = trace.rule_map[("unary", st.index)]
        if length == 1:
            return DeductionTree(node.label, Step("unary", j), tuple(_resolve(k) for k in kids))
        if pos != 0:
            return ("chain", node, kids)
        return _collapse_chain(node, kids, j, length, sys)

    return _resolve(_rebuild(tree, fn))


def _resolve(x):
    if isinstance(x, tuple) and x and x[0] == "chain":
        raise ValueError("dangling chain state in witness")
    return x


def _collapse_chain(head, kids, j, length, sys):
    rule = sys.unary[j]
    minus = sum(-x for x in rule.delta if x < 0)
    before, after = [], []
    units = 0
    cur = kids[0]
    # walk the chain: unit rule nodes interleaved with semantic steps
    while True:
        if isinstance(cur, tuple) and cur[0] == "chain":
            _, node, nkids = cur
            if node.step.kind == "unary":
                units += 1
                if units == length:
                    raise AssertionError("chain longer than the rule")
                cur = nkids[0]
                continue
            if node.step.is_semantic:
                tgt = before if (node.step.kind == "expand" and units + 1 <= minus) else after
                tgt.append(node.step)
                cur = nkids[0]
                continue
            raise ValueError("branching inside a unit chain")
        break
    tail = cur  # translated subtree rooted at rule.dst
    v = tuple(head.label.vector)
    for st in before:
        v = unit_add(v, st.coord, 1)
    mid = vec_add(v, rule.delta)
    vecs = []
    w = mid
    for st in after:
        vecs.append(w)
        w = unit_add(w, st.coord, -1 if st.kind == "loss" else 1)
    t = tail
    for st, vec in zip(reversed(after), reversed(vecs)):
        t = DeductionTree(Configuration(rule.dst, vec), st, (t,))
    t = DeductionTree(Configuration(rule.src, v), Step("unary", j), (t,))
    v = tuple(head.label.vector)
    pre = []
    for st in before:
        pre.append(v)
        v = unit_add(v, st.coord, 1)
    for st, vec in zip(reversed(before), reversed(pre)):
        t = DeductionTree(Configuration(rule.src, vec), st, (t,))
    return t


def _back_cover(tree, source):
    zero_test = source.semantics.zero_reading == "test"
    need_zero_leaf = source.leaf_condition == "zero"

    def fn(node, kids):
        lab = node.label
        st = node.step
        if st.kind == "leaf":
            if need_zero_leaf and any(lab.vector):
                return _lossy_leaf(lab.state, tuple(lab.vector))
            return DeductionTree(lab)
        if st.kind == "zero" and zero_test and any(lab.vector):
            zero = (0,) * len(lab.vector)
            t = DeductionTree(Configuration(lab.state, zero), st, tuple(kids))
            return lower_with("loss", lab.state, tuple(lab.vector), zero, t)
        return DeductionTree(lab, st, tuple(kids))

    return _rebuild(tree, fn)


def _back_increasing(tree, source):
    pseudo = source.semantics.pseudo
    jump = source.semantics.zero_reading == "jump"
    if pseudo:
        raise ValueError("pseudo-increasing witnesses have no free increases to place meets")

    def fn(node, kids):
        lab = node.label
        st = node.step
        if st.kind == "fork":
            v = tuple(lab.vector)
            new = []
            for k in kids:
                new.append(lower_with("increase", k.label.state, v, tuple(k.label.vector), k))
            return DeductionTree(lab, st, tuple(new))
        if st.kind == "zero" and not jump:
            k = kids[0]
            zero = (0,) * len(lab.vector)
            return DeductionTree(lab, st, (lower_with("increase", k.label.state, zero, tuple(k.label.vector), k),))
        return DeductionTree(lab, st, tuple(kids))

    t = _rebuild(tree, fn)
    root = tuple(source.root_vector)
    if tuple(t.label.vector) != root:
        t = lower_with("increase", t.label.state, root, tuple(t.label.vector), t)
    return t
