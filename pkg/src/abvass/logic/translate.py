"""Translations between ILZ provability and ABVASS reachability.

``ilz_to_abvass`` builds the system whose counters count occurrences of
subformulas on the left of a sequent and whose control state carries
the stored !-formulas plus the consequent.  ``abvass_to_theory`` goes
the other way: each rule becomes a non-logical axiom and a configuration
``(q, v)`` becomes ``|- q^perp, (e_i^perp)^v(i)``.
"""

from __future__ import annotations

import re
from collections import deque
from itertools import product

from ..core import EXPANSIVE, LOSSY, STRICT, Instance, System
from ..decide import Decision, decide_expansive, decide_lossy, decide_strict_bounded
from .syntax import (
    BOT,
    Formula,
    Sequent,
    Theory,
    atom,
    big,
    connectives,
    natom,
    par,
    plus,
    subformulas,
    tensor,
    whynot,
)

ILZ_OPS = frozenset({"atom", "tensor", "with", "plus", "one", "bot", "top", "ofc", "lolli"})
ILZ_SEMANTICS = {"ILZ": STRICT, "ILZW": LOSSY, "ILZC": EXPANSIVE}

LEAF = "$ilz.leaf"
TOP = "$ilz.top"


class ILZEncoding:
    """Bookkeeping for one formula: subformula indices and state names."""

    def __init__(self, F: Formula):
        self.F = F
        self.S, self.S_ofc = subformulas(F)
        self.idx = {f: i for i, f in enumerate(self.S)}
        self.dim = len(self.S)

    def pname(self, P) -> str:
        return "+".join(str(i) for i in sorted(P)) if P else "e"

    def xname(self, X) -> str:
        return "dot" if X is None else str(X)

    def state(self, P, X) -> str:
        return f"$ilz.{self.pname(P)}.{self.xname(X)}"

    def inter(self, tag, y, P, X) -> str:
        return f"$ilz.{tag}.{y}.{self.pname(P)}.{self.xname(X)}"

    def e(self, i, k=1) -> tuple:
        v = [0] * self.dim
        v[i] += k
        return tuple(v)

    def legend(self) -> dict:
        from .syntax import to_text
        return {i: to_text(f) for i, f in enumerate(self.S)}


def _covers(P):
    """Pairs ``(q, q')`` of subsets with ``q | q' == P``."""
    P = sorted(P)
    for choice in product((0, 1, 2), repeat=len(P)):
        q = frozenset(x for x, c in zip(P, choice) if c != 1)
        q2 = frozenset(x for x, c in zip(P, choice) if c != 0)
        yield q, q2


def ilz_to_abvass(F: Formula, calc: str = "ILZ") -> Instance:
    calc = calc.upper()
    if calc not in ILZ_SEMANTICS:
        raise ValueError(f"no ABVASS pairing for calculus {calc}")
    bad = connectives(F) - ILZ_OPS
    if bad:
        raise ValueError(f"connective {sorted(bad)[0]} is not supported in {calc}")
    enc = ILZEncoding(F)
    S, idx, d = enc.S, enc.idx, enc.dim
    ofc_idx = frozenset(idx[f] for f in enc.S_ofc)
    zero = (0,) * d
    unary, fork, split, ztest = [], [], [], []
    states = {LEAF: None}
    queue = deque()

    def node(P, X):
        name = enc.state(P, X)
        if name not in states:
            states[name] = (P, X)
            queue.append((P, X))
        return name

    def aux(name):
        states.setdefault(name, None)
        return name

    def neg(i):
        return enc.e(i, -1)

    # the drain used by the top rule
    aux(TOP)
    for i, f in enumerate(S):
        if i not in ofc_idx:
            unary.append((TOP, neg(i), TOP))
    unary.append((TOP, zero, LEAF))

    root = node(frozenset(), idx[F])
    while queue:
        P, X = queue.popleft()
        q = enc.state(P, X)
        x = S[X] if X is not None else None
        # init
        if not P and X is not None and X not in ofc_idx:
            unary.append((q, neg(X), LEAF))
        if X is not None and X in ofc_idx and P == frozenset({X}):
            unary.append((q, zero, LEAF))
        # left rules, one per subformula that can sit in the context
        for i, y in enumerate(S):
            op = y.op
            if op == "ofc":
                unary.append((q, neg(i), node(P | {i}, X)))
            elif op == "lolli":
                a, b = (idx[t] for t in y.args)
                mid = aux(enc.inter("lo", i, P, X))
                unary.append((q, neg(i), mid))
                for q1, q2 in _covers(P):
                    add = aux(enc.inter("add", b, q2, X))
                    split.append((mid, node(q1, a), add))
                    unary.append((add, enc.e(b), node(q2, X)))
            elif op == "tensor":
                a, b = (idx[t] for t in y.args)
                mid = aux(enc.inter("lt", i, P, X))
                unary.append((q, neg(i), mid))
                unary.append((mid, tuple(p + r for p, r in zip(enc.e(a), enc.e(b))), q))
            elif op == "bot":
                if X is None:
                    unary.append((q, neg(i), LEAF))
            elif op == "one":
                unary.append((q, neg(i), q))
            elif op == "plus":
                a, b = (idx[t] for t in y.args)
                mid = aux(enc.inter("lp", i, P, X))
                unary.append((q, neg(i), mid))
                ea, eb = aux(enc.inter("add", a, P, X)), aux(enc.inter("add", b, P, X))
                fork.append((mid, ea, eb))
                unary.append((ea, enc.e(a), q))
                unary.append((eb, enc.e(b), q))
            elif op == "with":
                a, b = (idx[t] for t in y.args)
                mid = aux(enc.inter("lw", i, P, X))
                unary.append((q, neg(i), mid))
                unary.append((mid, enc.e(a), q))
                unary.append((mid, enc.e(b), q))
        # right rules
        if x is not None:
            op = x.op
            if op == "lolli":
                a, b = (idx[t] for t in x.args)
                unary.append((q, enc.e(a), node(P, b)))
            elif op == "tensor":
                a, b = (idx[t] for t in x.args)
                for q1, q2 in _covers(P):
                    split.append((q, node(q1, a), node(q2, b)))
            elif op == "bot":
                unary.append((q, zero, node(P, None)))
            elif op == "one":
                if not P:
                    unary.append((q, zero, LEAF))
            elif op == "plus":
                a, b = (idx[t] for t in x.args)
                unary.append((q, zero, node(P, a)))
                unary.append((q, zero, node(P, b)))
            elif op == "with":
                a, b = (idx[t] for t in x.args)
                fork.append((q, node(P, a), node(P, b)))
            elif op == "top":
                unary.append((q, zero, TOP))
            elif op == "ofc":
                ztest.append((q, node(P, idx[x.args[0]])))
        # dereliction and weakening of stored formulas
        for j in sorted(P):
            body = idx[S[j].args[0]]
            unary.append((q, enc.e(body), q))
            unary.append((q, enc.e(body), node(P - {j}, X)))
            unary.append((q, zero, node(P - {j}, X)))

    uniq = lambda rs: tuple(dict.fromkeys(rs))  # noqa: E731
    sys = System(tuple(states), d, uniq(unary), uniq(fork), uniq(split), uniq(ztest))
    return Instance(sys, root, frozenset({LEAF}), ILZ_SEMANTICS[calc], zero, "zero", "exact")


def decide_ilz(F: Formula, calc: str = "ILZ", height_cap: int | None = None,
               value_cap: int | None = None) -> Decision:
    """Reachability of ``ilz_to_abvass(F, calc)`` with the procedure matching the semantics.

    Strict and expansive reachability are searched within caps, so a
    ``no`` from them holds relative to the caps only when nothing was
    truncated (the procedures report ``unknown`` otherwise).
    """
    inst = ilz_to_abvass(F, calc)
    calc = calc.upper()
    if calc == "ILZW":
        return decide_lossy(inst)
    if calc == "ILZC":
        return decide_expansive(inst, height_cap or 16, value_cap or 2)
    return decide_strict_bounded(inst, height_cap or 24, value_cap or 4)


# ---------------------------------------------------------------- ABVASS -> theory

_ATOM = re.compile(r"[a-z][a-z0-9_]*$")


def state_atoms(sys: System) -> dict:
    """Atom names for states: the state name when it is a valid atom, ``s<i>`` otherwise."""
    taken = set()
    out = {}
    for i, q in enumerate(sys.states):
        name = q if _ATOM.match(q) and not re.fullmatch(r"e\d+|s\d+", q) else f"s{i}"
        if name in taken:
            name = f"s{i}"
        taken.add(name)
        out[q] = name
    return out


def counter_atom(i: int) -> str:
    """Atom for coordinate ``i`` (0-based), printed 1-based."""
    return f"e{i + 1}"


def theta(q_atom: str, v) -> Sequent:
    """``|- q^perp, (e_i^perp)^v(i)``."""
    fs = [natom(q_atom)]
    for i, k in enumerate(v):
        fs += [natom(counter_atom(i))] * k
    return Sequent("one", (), fs)


def abvass_to_theory(sys: System, q_r: str, Q_leaf, flavor: str = "LL", root_vector=None):
    """Return ``(theory, goal, flavor, pure_goal)``.

    The root configuration is ``(q_r, root_vector)`` (zero by default) and
    appears in the goals as in ``theta``.

    ``goal`` is meant for the prover with the theory; ``pure_goal`` is the
    theory-free sequent (``?[[T]]`` for LL, the ``bot + ...`` disjunction
    for LLC).
    """
    flavor = flavor.upper()
    if flavor not in ("LL", "LLC"):
        raise ValueError("flavor is LL or LLC")
    if sys.zero:
        raise ValueError("system has zero rules; eliminate them first")
    if not sys.is_ordinary():
        raise ValueError("system is not ordinary; apply the ordinary-form pass first")
    Q_leaf = frozenset(Q_leaf)
    names = state_atoms(sys)
    if flavor == "LLC":
        if len(Q_leaf) != 1:
            raise ValueError("the contractive encoding needs exactly one leaf state")
        (ql,) = Q_leaf
        if sys.outgoing.get(ql):
            raise ValueError("the leaf state of the contractive encoding must have no outgoing rules")
    axioms = []
    for r in sys.unary:
        nz = [(i, x) for i, x in enumerate(r.delta) if x]
        q, q1 = names[r.src], atom(names[r.dst])
        if not nz:
            axioms.append((q1, (q,)))
        else:
            (i, x), = nz
            if x > 0:
                axioms.append((tensor(q1, atom(counter_atom(i))), (q,)))
            else:
                axioms.append((q1, (q, counter_atom(i))))
    for r in sys.fork:
        axioms.append((plus(atom(names[r.left]), atom(names[r.right])), (names[r.src],)))
    for r in sys.split:
        axioms.append((par(atom(names[r.left]), atom(names[r.right])), (names[r.src],)))
    T = Theory(tuple(axioms))
    enc = [T.encode(i) for i in range(len(T.axioms))]
    v = tuple(root_vector) if root_vector is not None else (0,) * sys.dim
    if len(v) != sys.dim or any(x < 0 for x in v):
        raise ValueError("root vector must have one natural number per coordinate")
    root = list(theta(names[q_r], v).right)
    if flavor == "LL":
        leaves = [whynot(atom(names[q])) for q in sorted(Q_leaf)]
        goal = Sequent("one", (), root + leaves)
        pure = Sequent("one", (), root + leaves + [whynot(t) for t in enc])
    else:
        leaf = atom(names[next(iter(Q_leaf))])
        disj = big("plus", [BOT] + enc)
        goal = Sequent("one", (), root + [leaf])
        pure = Sequent("one", (), [disj] + root + [leaf])
    return T, goal, flavor, pure
