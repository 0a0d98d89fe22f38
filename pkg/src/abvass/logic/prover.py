"""Bounded cut-free proof search for linear-logic fragments.

Sequents are handled in dyadic form ``Theta ; Gamma``: ``Theta`` is the
set of formulas available without restriction (the bodies of ``?A`` in
one-sided sequents, of ``!A`` on the left in two-sided ones), ``Gamma``
a multiset.  Storing ``?A``/``!A`` into ``Theta`` is invertible and done
eagerly, as are the other invertible rules; only the remaining
connectives branch.

Weakening (``*W`` calculi) is pushed into the zero-premise rules: an
axiom may carry extra context, and promotion may discard it.  Atomic
dereliction only happens inside an axiom (``init_theta``).

Answers: ``yes`` with a proof object, ``no`` when the search space was
exhausted without reaching the depth cap, ``unknown`` otherwise.  A
sequent repeated on the current branch is cut off; a minimal proof
never repeats a sequent on a branch, so this does not cost
completeness.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product

from ..decide import Decision
from .syntax import (
    BOT,
    ONE,
    Formula,
    Sequent,
    Theory,
    connectives,
    desugar,
    dual,
    parse_formula,
    to_text,
)


@dataclass(frozen=True)
class Calculus:
    name: str
    side: str  # "one" | "two"
    ops: frozenset
    weakening: bool = False
    contraction: bool = False


_ALL = frozenset({"atom", "natom", "tensor", "par", "with", "plus", "one", "bot", "top", "zero",
                  "ofc", "whynot"})
_ADD = frozenset({"with", "plus", "top", "zero"})
_EXP = frozenset({"ofc", "whynot"})
_ILZ = frozenset({"atom", "tensor", "with", "plus", "one", "bot", "top", "ofc", "lolli"})

CALCULI = {
    "LL": Calculus("LL", "one", _ALL),
    "MELL": Calculus("MELL", "one", _ALL - _ADD),
    "MALL": Calculus("MALL", "one", _ALL - _EXP),
    "LLW": Calculus("LLW", "one", _ALL, weakening=True),
    "MELLW": Calculus("MELLW", "one", _ALL - _ADD, weakening=True),
    "LLC": Calculus("LLC", "one", _ALL, contraction=True),
    "MALLC": Calculus("MALLC", "one", _ALL - _EXP, contraction=True),
    "ILZ": Calculus("ILZ", "two", _ILZ),
    "ILZW": Calculus("ILZW", "two", _ILZ, weakening=True),
    "ILZC": Calculus("ILZC", "two", _ILZ, contraction=True),
}

SPLIT_GUARD = 4096


def calculus(c) -> Calculus:
    if isinstance(c, Calculus):
        return c
    try:
        return CALCULI[str(c).upper()]
    except KeyError:
        raise ValueError(f"unknown calculus {c!r}") from None


@dataclass(frozen=True)
class DSeq:
    """Dyadic sequent.  ``goal`` is the consequent of a two-sided sequent (or None)."""

    theta: tuple
    gamma: tuple
    goal: Formula | None = None
    two: bool = False

    @staticmethod
    def make(theta, gamma, goal=None, two=False):
        return DSeq(tuple(sorted(set(theta))), tuple(sorted(gamma)), goal, two)

    def to_sequent(self) -> Sequent:
        from .syntax import ofc, whynot
        if self.two:
            left = [ofc(a) for a in self.theta] + list(self.gamma)
            return Sequent("two", left, () if self.goal is None else (self.goal,))
        return Sequent("one", (), list(self.gamma) + [whynot(a) for a in self.theta])

    def __str__(self):
        th = ", ".join(map(to_text, self.theta))
        ga = ", ".join(map(to_text, self.gamma))
        if self.two:
            g = "" if self.goal is None else to_text(self.goal)
            return f"{th} ; {ga} |- {g}".strip()
        return f"{th} ; |- {ga}".strip()


@dataclass(frozen=True, eq=False)
class ProofNode:
    rule: str
    conclusion: DSeq
    premises: tuple = ()
    principal: Formula | None = None
    axiom: int | None = None

    def size(self) -> int:
        return 1 + sum(p.size() for p in self.premises)

    def height(self) -> int:
        return 1 + max((p.height() for p in self.premises), default=0)


def _sub(ms: tuple, *fs) -> tuple | None:
    """Multiset difference ``ms - fs``; None when ``fs`` is not contained."""
    c = Counter(ms)
    for f in fs:
        if c[f] <= 0:
            return None
        c[f] -= 1
    return tuple(sorted(c.elements()))


def _splits(ms: tuple):
    """All ordered pairs of sub-multisets partitioning ``ms``."""
    c = sorted(Counter(ms).items())
    for ks in product(*(range(n + 1) for _, n in c)):
        left, right = [], []
        for (f, n), k in zip(c, ks):
            left += [f] * k
            right += [f] * (n - k)
        yield tuple(left), tuple(right)


def _n_splits(ms: tuple) -> int:
    n = 1
    for k in Counter(ms).values():
        n *= k + 1
    return n


# ---------------------------------------------------------------- search


class _Prover:
    def __init__(self, calc: Calculus, theory: Theory | None, depth: int):
        self.calc = calc
        self.theory = theory
        self.depth = depth
        self.succ: dict = {}
        self.fail_clean: set = set()
        self.fail_capped: dict = {}  # key -> largest depth that failed with a cap hit
        self.path: set = set()
        self.cap_hit = False
        self.nodes = 0

    def search(self, s: DSeq, depth: int):
        """Return ``(proof | None, clean)``; ``clean`` means the failure is absolute."""
        key = s
        if key in self.succ:
            return self.succ[key], True
        if key in self.fail_clean:
            return None, True
        if depth <= 0 or self.fail_capped.get(key, -1) >= depth:
            self.cap_hit = True
            return None, False
        if key in self.path:
            return None, None  # loop cut: not memoized, not a cap hit
        self.nodes += 1
        self.path.add(key)
        try:
            proof, clean = (self._two if s.two else self._one)(s, depth - 1)
        finally:
            self.path.discard(key)
        if proof is not None:
            self.succ[key] = proof
        elif clean is True:
            self.fail_clean.add(key)
        elif clean is False:
            self.fail_capped[key] = max(self.fail_capped.get(key, -1), depth)
        return proof, clean

    # ``clean`` is True (absolute failure), False (cap hit) or None (loop cut).
    @staticmethod
    def _merge(a, b):
        if a is False or b is False:
            return False
        if a is None or b is None:
            return None
        return True

    def _seq(self, s: DSeq, theta=None, gamma=None, goal="same"):
        return DSeq.make(s.theta if theta is None else theta,
                         s.gamma if gamma is None else gamma,
                         s.goal if goal == "same" else goal, s.two)

    def _all(self, s, rule, prem_seqs, depth, principal=None, axiom=None):
        """Prove every premise; returns ``(node | None, clean)``."""
        proofs = []
        for p in prem_seqs:
            pf, clean = self.search(p, depth)
            if pf is None:
                return None, clean
            proofs.append(pf)
        return ProofNode(rule, s, tuple(proofs), principal, axiom), True

    def _first(self, s, options, depth):
        """Try alternatives ``(rule, premises, principal, axiom)`` in order."""
        clean = True
        for rule, prems, principal, ax in options:
            pf, c = self._all(s, rule, prems, depth, principal, ax)
            if pf is not None:
                return pf, True
            clean = self._merge(clean, c)
        return None, clean

    # -------------------------------------------------------- one-sided

    def _one(self, s: DSeq, depth):
        g = s.gamma
        W = self.calc.weakening
        for f in g:
            if f.op == "top":
                return ProofNode("top", s, (), f), True
        for f in g:
            rest = _sub(g, f)
            if f.op == "whynot":
                return self._all(s, "store", [self._seq(s, s.theta + (f.args[0],), rest)], depth, f)
            if f.op == "par":
                return self._all(s, "par", [self._seq(s, gamma=rest + f.args)], depth, f)
            if f.op == "bot":
                return self._all(s, "bot", [self._seq(s, gamma=rest)], depth, f)
            if f.op == "with":
                a, b = f.args
                return self._all(s, "with", [self._seq(s, gamma=rest + (a,)),
                                             self._seq(s, gamma=rest + (b,))], depth, f)
        # zero-premise rules
        for f in set(g):
            if f.op in ("atom", "natom"):
                d = dual(f)
                if f.op == "atom" and _sub(g, f, d) is not None and (W or len(g) == 2):
                    return ProofNode("init", s, (), f), True
                if d in s.theta and (W or len(g) == 1):
                    return ProofNode("init_theta", s, (), f), True
            if f.op == "one" and (W or len(g) == 1):
                return ProofNode("one", s, (), f), True
        if self.theory is not None:
            for i, (c, ps) in enumerate(self.theory.axioms):
                need = (c,) + tuple(Formula("natom", (), p) for p in ps)
                rest = _sub(g, *need)
                if rest is not None and (W or not rest):
                    return ProofNode("theory", s, (), None, i), True
        options = []
        for f in sorted(set(g)):
            rest = _sub(g, f)
            if f.op == "ofc" and (W or not rest):
                options.append(("promotion", [self._seq(s, gamma=(f.args[0],))], f, None))
            elif f.op == "plus":
                a, b = f.args
                options.append(("plus_l", [self._seq(s, gamma=rest + (a,))], f, None))
                options.append(("plus_r", [self._seq(s, gamma=rest + (b,))], f, None))
        if self.theory is not None:
            for i, (c, ps) in enumerate(self.theory.axioms):
                rest = _sub(g, *(Formula("natom", (), p) for p in ps))
                if rest is not None:
                    options.append(("dcut", [self._seq(s, gamma=rest + (dual(c),))], None, i))
        for f in sorted(set(g)):
            if f.op == "tensor":
                rest = _sub(g, f)
                if _n_splits(rest) > SPLIT_GUARD:
                    self.cap_hit = True
                    continue
                a, b = f.args
                for l, r in _splits(rest):
                    options.append(("tensor", [self._seq(s, gamma=l + (a,)),
                                               self._seq(s, gamma=r + (b,))], f, None))
        for a in s.theta:
            if not a.is_atomic:
                options.append(("derelict", [self._seq(s, gamma=g + (a,))], a, None))
        if self.calc.contraction:
            for f in sorted(set(g)):
                options.append(("contract", [self._seq(s, gamma=g + (f,))], f, None))
        return self._first(s, options, depth)

    # -------------------------------------------------------- two-sided

    def _two(self, s: DSeq, depth):
        g, c = s.gamma, s.goal
        W = self.calc.weakening
        if c is not None and c.op == "top":
            return ProofNode("r_top", s, (), c), True
        for f in g:
            rest = _sub(g, f)
            if f.op == "ofc":
                return self._all(s, "store", [self._seq(s, s.theta + (f.args[0],), rest)], depth, f)
            if f.op == "tensor":
                return self._all(s, "l_tensor", [self._seq(s, gamma=rest + f.args)], depth, f)
            if f.op == "one":
                return self._all(s, "l_one", [self._seq(s, gamma=rest)], depth, f)
            if f.op == "plus":
                a, b = f.args
                return self._all(s, "l_plus", [self._seq(s, gamma=rest + (a,)),
                                               self._seq(s, gamma=rest + (b,))], depth, f)
        if c is not None:
            if c.op == "lolli":
                a, b = c.args
                return self._all(s, "r_lolli", [self._seq(s, gamma=g + (a,), goal=b)], depth, c)
            if c.op == "with":
                a, b = c.args
                return self._all(s, "r_with", [self._seq(s, goal=a), self._seq(s, goal=b)], depth, c)
            if c.op == "bot":
                return self._all(s, "r_bot", [self._seq(s, goal=None)], depth, c)
        # zero-premise rules
        if c is not None and c in g and (W or len(g) == 1):
            return ProofNode("init", s, (), c), True
        if c is not None and c.op == "atom" and c in s.theta and (W or not g):
            return ProofNode("init_theta", s, (), c), True
        if c is None and BOT in g and (W or len(g) == 1):
            return ProofNode("l_bot", s, (), BOT), True
        if c == ONE and (W or not g):
            return ProofNode("r_one", s, (), c), True
        options = []
        if c is not None:
            if c.op == "plus":
                a, b = c.args
                options.append(("r_plus_l", [self._seq(s, goal=a)], c, None))
                options.append(("r_plus_r", [self._seq(s, goal=b)], c, None))
            elif c.op == "ofc" and (W or not g):
                options.append(("r_ofc", [self._seq(s, gamma=(), goal=c.args[0])], c, None))
        for f in sorted(set(g)):
            if f.op == "with":
                rest = _sub(g, f)
                a, b = f.args
                options.append(("l_with_l", [self._seq(s, gamma=rest + (a,))], f, None))
                options.append(("l_with_r", [self._seq(s, gamma=rest + (b,))], f, None))
        if c is not None and c.op == "tensor":
            if _n_splits(g) > SPLIT_GUARD:
                self.cap_hit = True
            else:
                a, b = c.args
                for l, r in _splits(g):
                    options.append(("r_tensor", [self._seq(s, gamma=l, goal=a),
                                                 self._seq(s, gamma=r, goal=b)], c, None))
        for f in sorted(set(g)):
            if f.op == "lolli":
                rest = _sub(g, f)
                if _n_splits(rest) > SPLIT_GUARD:
                    self.cap_hit = True
                    continue
                a, b = f.args
                for l, r in _splits(rest):
                    options.append(("l_lolli", [self._seq(s, gamma=l, goal=a),
                                                self._seq(s, gamma=r + (b,))], f, None))
        for a in s.theta:
            if not a.is_atomic:
                options.append(("derelict", [self._seq(s, gamma=g + (a,))], a, None))
        if self.calc.contraction:
            for f in sorted(set(g)):
                options.append(("contract", [self._seq(s, gamma=g + (f,))], f, None))
        return self._first(s, options, depth)


def _initial(seq: Sequent, calc: Calculus) -> DSeq:
    if calc.side == "two":
        if len(seq.right) > 1:
            raise ValueError("intuitionistic sequents have at most one consequent")
        goal = seq.right[0] if seq.right else None
        return DSeq.make((), seq.left, goal, True)
    gamma = [desugar(dual(f)) for f in seq.left] + [desugar(f) for f in seq.right]
    return DSeq.make((), gamma)


def _check_fragment(fs, calc: Calculus):
    for f in fs:
        bad = connectives(f) - calc.ops
        if bad:
            raise ValueError(f"connective {sorted(bad)[0]} is not available in {calc.name}")


def prove_bounded(seq: Sequent, calc="LL", theory: Theory | None = None, depth: int = 20) -> Decision:
    calc = calculus(calc)
    if calc.side == "two" and seq.side == "one":
        seq = Sequent("two", (), seq.right)
    start = _initial(seq, calc)
    _check_fragment(start.gamma + ((start.goal,) if start.goal is not None else ()), calc)
    if theory is not None and calc.side == "two":
        raise ValueError("theories are only supported for one-sided calculi")
    pr = _Prover(calc, theory, depth)
    proof, clean = pr.search(start, depth)
    diag = [f"{pr.nodes} sequents expanded"]
    if proof is not None:
        ans = "yes"
    elif pr.cap_hit:
        ans = "unknown"
        diag.append("depth cap reached")
    else:
        ans = "no"
    return Decision(ans, proof, f"prove-{calc.name}", (depth,), diag)


# ---------------------------------------------------------------- checking

def check_proof(proof: ProofNode, calc="LL", theory: Theory | None = None) -> tuple[bool, str | None]:
    """Re-validate every inference.  Returns ``(ok, message naming the first bad inference)``."""
    calc = calculus(calc)
    stack = [((), proof)]
    while stack:
        path, node = stack.pop()
        err = _check_node(node, calc, theory)
        if err:
            return False, f"at {list(path)} ({node.rule}): {err}"
        for i, p in enumerate(node.premises):
            stack.append((path + (i,), p))
    return True, None


def _same(a: DSeq, b: DSeq) -> bool:
    return (a.theta, a.gamma, a.goal, a.two) == (b.theta, b.gamma, b.goal, b.two)


def _check_node(n: ProofNode, calc: Calculus, theory) -> str | None:
    s = n.conclusion
    g, c, f = s.gamma, s.goal, n.principal
    W = calc.weakening
    P = n.premises
    if s.two != (calc.side == "two"):
        return "sequent side does not match the calculus"
    if tuple(sorted(set(s.theta))) != s.theta or tuple(sorted(g)) != g:
        return "sequent not in canonical form"
    if any(p.conclusion.two != s.two for p in P):
        return "premise side differs"

    def expect(k):
        if len(P) != k:
            return f"expected {k} premises, found {len(P)}"
        return None

    def prem(i, theta=None, gamma=None, goal="same"):
        want = DSeq.make(s.theta if theta is None else theta, g if gamma is None else gamma,
                         c if goal == "same" else goal, s.two)
        if not _same(P[i].conclusion, want):
            return f"premise {i} is {P[i].conclusion}, expected {want}"
        return None

    def in_gamma(op):
        if f is None or f.op != op or _sub(g, f) is None:
            return None, f"principal formula is not a {op} of the context"
        return _sub(g, f), None

    r = n.rule
    two = s.two
    if not two:
        if r == "top":
            return expect(0) or (None if f is not None and f.op == "top" and f in g else "no top")
        if r in ("init", "init_theta", "one"):
            if e := expect(0):
                return e
            if f is None:
                return "missing principal"
            if r == "init":
                rest = _sub(g, f, dual(f)) if f.is_atomic else None
            elif r == "init_theta":
                rest = _sub(g, f) if f.is_atomic and dual(f) in s.theta else None
            else:
                rest = _sub(g, f) if f.op == "one" else None
            if rest is None:
                return "axiom formulas missing"
            return None if (W or not rest) else "axiom with extra context"
        if r == "theory":
            if theory is None or n.axiom is None or not 0 <= n.axiom < len(theory.axioms):
                return "no such theory axiom"
            cc, ps = theory.axioms[n.axiom]
            rest = _sub(g, cc, *(Formula("natom", (), p) for p in ps))
            if rest is None:
                return "theory axiom does not match"
            return expect(0) or (None if (W or not rest) else "axiom with extra context")
        if r == "dcut":
            if theory is None or n.axiom is None or not 0 <= n.axiom < len(theory.axioms):
                return "no such theory axiom"
            cc, ps = theory.axioms[n.axiom]
            rest = _sub(g, *(Formula("natom", (), p) for p in ps))
            if rest is None:
                return "cut atoms missing"
            return expect(1) or prem(0, gamma=rest + (dual(cc),))
        if r == "derelict":
            if f is None or f not in s.theta or f.is_atomic:
                return "dereliction of a formula outside the unrestricted zone"
            return expect(1) or prem(0, gamma=g + (f,))
        if r == "contract":
            if not calc.contraction:
                return "contraction not available"
            if f is None or f not in g:
                return "contracted formula missing"
            return expect(1) or prem(0, gamma=g + (f,))
        op = {"store": "whynot", "par": "par", "bot": "bot", "with": "with", "plus_l": "plus",
              "plus_r": "plus", "tensor": "tensor", "promotion": "ofc"}.get(r)
        if op is None:
            return f"unknown rule {r}"
        rest, e = in_gamma(op)
        if e:
            return e
        if r == "store":
            return expect(1) or prem(0, theta=s.theta + (f.args[0],), gamma=rest)
        if r == "par":
            return expect(1) or prem(0, gamma=rest + f.args)
        if r == "bot":
            return expect(1) or prem(0, gamma=rest)
        if r == "with":
            return expect(2) or prem(0, gamma=rest + (f.args[0],)) or prem(1, gamma=rest + (f.args[1],))
        if r in ("plus_l", "plus_r"):
            return expect(1) or prem(0, gamma=rest + (f.args[r == "plus_r"],))
        if r == "promotion":
            if rest and not W:
                return "promotion with non-exponential context"
            return expect(1) or prem(0, gamma=(f.args[0],))
        if r == "tensor":
            if e := expect(2):
                return e
            return _check_split(P, s, rest, f.args, (f.args[0],), (f.args[1],), "same", "same")
        return f"unknown rule {r}"

    # two-sided
    if r == "r_top":
        return expect(0) or (None if c is not None and c.op == "top" else "consequent is not top")
    if r == "init":
        if c is None or _sub(g, c) is None:
            return "consequent not in the antecedent"
        return expect(0) or (None if W or len(g) == 1 else "axiom with extra context")
    if r == "init_theta":
        if c is None or c.op != "atom" or c not in s.theta:
            return "consequent is not an unrestricted atom"
        return expect(0) or (None if W or not g else "axiom with extra context")
    if r == "l_bot":
        if c is not None or _sub(g, BOT) is None:
            return "bad bottom axiom"
        return expect(0) or (None if W or len(g) == 1 else "axiom with extra context")
    if r == "r_one":
        if c != ONE:
            return "consequent is not 1"
        return expect(0) or (None if W or not g else "axiom with extra context")
    if r in ("r_lolli", "r_with", "r_bot", "r_plus_l", "r_plus_r", "r_ofc", "r_tensor"):
        op = {"r_lolli": "lolli", "r_with": "with", "r_bot": "bot", "r_plus_l": "plus",
              "r_plus_r": "plus", "r_ofc": "ofc", "r_tensor": "tensor"}[r]
        if c is None or c.op != op or (f is not None and f != c):
            return f"consequent is not a {op}"
        if r == "r_lolli":
            return expect(1) or prem(0, gamma=g + (c.args[0],), goal=c.args[1])
        if r == "r_with":
            return expect(2) or prem(0, goal=c.args[0]) or prem(1, goal=c.args[1])
        if r == "r_bot":
            return expect(1) or prem(0, goal=None)
        if r in ("r_plus_l", "r_plus_r"):
            return expect(1) or prem(0, goal=c.args[r == "r_plus_r"])
        if r == "r_ofc":
            if g and not W:
                return "promotion with linear context"
            return expect(1) or prem(0, gamma=(), goal=c.args[0])
        if e := expect(2):
            return e
        return _check_split(P, s, g, ((), ()), (), (), c.args[0], c.args[1])
    if r == "derelict":
        if f is None or f not in s.theta or f.is_atomic:
            return "dereliction of a formula outside the unrestricted zone"
        return expect(1) or prem(0, gamma=g + (f,))
    if r == "contract":
        if not calc.contraction:
            return "contraction not available"
        if f is None or f not in g:
            return "contracted formula missing"
        return expect(1) or prem(0, gamma=g + (f,))
    op = {"store": "ofc", "l_tensor": "tensor", "l_one": "one", "l_plus": "plus",
          "l_with_l": "with", "l_with_r": "with", "l_lolli": "lolli"}.get(r)
    if op is None:
        return f"unknown rule {r}"
    rest, e = in_gamma(op)
    if e:
        return e
    if r == "store":
        return expect(1) or prem(0, theta=s.theta + (f.args[0],), gamma=rest)
    if r == "l_tensor":
        return expect(1) or prem(0, gamma=rest + f.args)
    if r == "l_one":
        return expect(1) or prem(0, gamma=rest)
    if r == "l_plus":
        return expect(2) or prem(0, gamma=rest + (f.args[0],)) or prem(1, gamma=rest + (f.args[1],))
    if r in ("l_with_l", "l_with_r"):
        return expect(1) or prem(0, gamma=rest + (f.args[r == "l_with_r"],))
    if r == "l_lolli":
        if e := expect(2):
            return e
        return _check_split(P, s, rest, None, (), (f.args[1],), f.args[0], "same")
    return f"unknown rule {r}"


def _check_split(P, s, rest, _unused, add_l, add_r, goal_l, goal_r):
    """Both premises share Theta, and their contexts minus ``add_*`` partition ``rest``."""
    a, b = P[0].conclusion, P[1].conclusion
    if a.theta != s.theta or b.theta != s.theta:
        return "premises change the unrestricted zone"
    la, lb = _sub(a.gamma, *add_l), _sub(b.gamma, *add_r)
    if la is None or lb is None:
        return "premise lacks the active formula"
    if Counter(la) + Counter(lb) != Counter(rest):
        return "premise contexts do not partition the conclusion context"
    want_a = s.goal if goal_l == "same" else goal_l
    want_b = s.goal if goal_r == "same" else goal_r
    if a.goal != want_a or b.goal != want_b:
        return "wrong consequent in a premise"
    return None


# ---------------------------------------------------------------- serialization

def _fs(fs):
    return [to_text(x) for x in fs]


def proof_to_json(p: ProofNode) -> dict:
    s = p.conclusion
    d = {"rule": p.rule, "theta": _fs(s.theta), "gamma": _fs(s.gamma), "two": s.two}
    if s.two:
        d["goal"] = None if s.goal is None else to_text(s.goal)
    if p.principal is not None:
        d["principal"] = to_text(p.principal)
    if p.axiom is not None:
        d["axiom"] = p.axiom
    d["premises"] = [proof_to_json(q) for q in p.premises]
    return d


def proof_from_json(d: dict) -> ProofNode:
    goal = d.get("goal")
    s = DSeq(tuple(parse_formula(x) for x in d["theta"]), tuple(parse_formula(x) for x in d["gamma"]),
             None if goal is None else parse_formula(goal), bool(d.get("two", False)))
    pr = d.get("principal")
    return ProofNode(d["rule"], s, tuple(proof_from_json(q) for q in d.get("premises", [])),
                     None if pr is None else parse_formula(pr), d.get("axiom"))
