"""Propositional linear-logic formulas, sequents, theories and their text syntax.

Formulas are stored in negation normal form: negation only appears on
atoms (``natom``).  Linear implication ``lolli`` is kept as a node so
intuitionistic formulas print the way they were written; ``desugar``
rewrites it to ``A^perp par B``.

ASCII syntax::

    atoms  [a-z][a-z0-9_]*        units  1 bot top 0
    ~A  dual      !A ?A           A * B  tensor     A | B  par
    A & B  with   A + B  plus     A -o B  implication (right-assoc)

Precedence, tightest first: prefix, {* |}, {& +}, -o.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

UNITS = ("one", "bot", "top", "zero")
BINARY = ("tensor", "par", "with", "plus", "lolli")


@dataclass(frozen=True, order=True)
class Formula:
    op: str
    args: tuple = ()
    name: str = ""

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"Formula({to_text(self)!r})"

    @property
    def is_atomic(self) -> bool:
        return self.op in ("atom", "natom")


def atom(n: str) -> Formula:
    return Formula("atom", (), n)


def natom(n: str) -> Formula:
    return Formula("natom", (), n)


def tensor(a, b):
    return Formula("tensor", (a, b))


def par(a, b):
    return Formula("par", (a, b))


def with_(a, b):
    return Formula("with", (a, b))


def plus(a, b):
    return Formula("plus", (a, b))


def lolli(a, b):
    return Formula("lolli", (a, b))


def ofc(a):
    return Formula("ofc", (a,))


def whynot(a):
    return Formula("whynot", (a,))


ONE = Formula("one")
BOT = Formula("bot")
TOP = Formula("top")
ZERO = Formula("zero")

_DUAL_OP = {
    "tensor": "par", "par": "tensor", "with": "plus", "plus": "with",
    "one": "bot", "bot": "one", "top": "zero", "zero": "top",
    "ofc": "whynot", "whynot": "ofc", "atom": "natom", "natom": "atom",
}


def dual(f: Formula) -> Formula:
    """Linear negation pushed to the atoms."""
    if f.op == "lolli":
        a, b = f.args
        return tensor(a, dual(b))
    if f.op in ("atom", "natom"):
        return Formula(_DUAL_OP[f.op], (), f.name)
    return Formula(_DUAL_OP[f.op], tuple(dual(x) for x in f.args))


def desugar(f: Formula) -> Formula:
    if f.op == "lolli":
        a, b = f.args
        return par(dual(desugar(a)), desugar(b))
    if not f.args:
        return f
    return Formula(f.op, tuple(desugar(x) for x in f.args), f.name)


def big(op, fs, unit=None):
    """Right-nested n-ary connective; ``unit`` for the empty case."""
    fs = list(fs)
    if not fs:
        if unit is None:
            raise ValueError("empty connective without unit")
        return unit
    out = fs[-1]
    for x in reversed(fs[:-1]):
        out = Formula(op, (x, out))
    return out


def subformulas(f: Formula) -> tuple[tuple, frozenset]:
    """``(S, S_!)``: distinct subformulas in first-visit preorder, and the !-guarded ones."""
    seen = {}
    stack = [f]
    while stack:
        g = stack.pop()
        if g in seen:
            continue
        seen[g] = len(seen)
        stack.extend(reversed(g.args))
    S = tuple(seen)
    return S, frozenset(g for g in S if g.op == "ofc")


def atoms_of(f: Formula) -> set:
    out = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if g.is_atomic:
            out.add(g.name)
        stack.extend(g.args)
    return out


def connectives(f: Formula) -> set:
    out = set()
    stack = [f]
    while stack:
        g = stack.pop()
        out.add(g.op)
        stack.extend(g.args)
    return out


# ------------------------------------------------------------- sequents and theories

@dataclass(frozen=True)
class Sequent:
    """``side='one'``: ``|- right``; ``side='two'``: ``left |- right`` with at most one consequent."""

    side: str
    left: tuple = ()
    right: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(self.left))
        object.__setattr__(self, "right", tuple(self.right))
        if self.side not in ("one", "two"):
            raise ValueError("side is 'one' or 'two'")
        if self.side == "one" and self.left:
            raise ValueError("one-sided sequents have no antecedent")

    def __str__(self):
        lhs = ", ".join(map(to_text, self.left))
        rhs = ", ".join(map(to_text, self.right))
        return f"{lhs} |- {rhs}".strip() if lhs else f"|- {rhs}".rstrip()

    def as_two_sided(self) -> "Sequent":
        return Sequent("two", self.left, self.right)


@dataclass(frozen=True)
class Theory:
    """Axioms ``(C, (p1, ..., pm))`` standing for ``|- C, p1^perp, ..., pm^perp``."""

    axioms: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "axioms", tuple((c, tuple(ps)) for c, ps in self.axioms))
        for c, _ in self.axioms:
            if connectives(c) & {"ofc", "whynot"}:
                raise ValueError("theory formulas must be exponential-free")

    def encode(self, i: int) -> Formula:
        """``[[C, p1^perp..pm^perp]] = C^perp * p1 * ... * pm``."""
        c, ps = self.axioms[i]
        return big("tensor", [dual(c)] + [atom(p) for p in ps])

    def __str__(self):
        return "\n".join(f"{to_text(c)} ; {', '.join(ps)}" for c, ps in self.axioms)


# ------------------------------------------------------------- printing

_PREC = {"lolli": 1, "with": 2, "plus": 2, "tensor": 3, "par": 3}
_SYM = {"lolli": "-o", "with": "&", "plus": "+", "tensor": "*", "par": "|"}
_UNIT_TXT = {"one": "1", "bot": "bot", "top": "top", "zero": "0"}


def to_text(f: Formula) -> str:
    op = f.op
    if op == "atom":
        return f.name
    if op == "natom":
        return "~" + f.name
    if op in _UNIT_TXT:
        return _UNIT_TXT[op]
    if op in ("ofc", "whynot"):
        inner = f.args[0]
        s = to_text(inner)
        if inner.op in _PREC:
            s = f"({s})"
        return ("!" if op == "ofc" else "?") + s
    a, b = f.args
    p = _PREC[op]
    sa, sb = to_text(a), to_text(b)
    if a.op in _PREC and _PREC[a.op] <= p:
        sa = f"({sa})"
    if b.op in _PREC and (_PREC[b.op] < p or (_PREC[b.op] == p and op != "lolli")):
        sb = f"({sb})"
    return f"{sa} {_SYM[op]} {sb}"


# ------------------------------------------------------------- parsing

class ParseError(ValueError):
    def __init__(self, msg, pos=None, line=None):
        where = ""
        if line is not None:
            where += f"line {line}: "
        if pos is not None:
            where += f"col {pos + 1}: "
        super().__init__(where + msg)
        self.pos = pos
        self.line = line


_TOKEN = re.compile(r"\s*(?:(\|-)|(-o)|([a-z][a-z0-9_]*)|([01])|([~!?*|&+(),;]))")


def tokenize(text: str) -> list:
    out = []
    i = 0
    n = len(text)
    while i < n:
        if text[i].isspace():
            i += 1
            continue
        m = _TOKEN.match(text, i)
        if not m or m.end() == i:
            raise ParseError(f"unexpected character {text[i]!r}", i)
        start = m.start(m.lastindex)
        out.append((m.group(m.lastindex), start))
        i = m.end()
    return out


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def pos(self):
        return self.toks[self.i][1] if self.i < len(self.toks) else len(self.text)

    def take(self, want=None):
        t = self.peek()
        if t is None or (want is not None and t != want):
            raise ParseError(f"expected {want or 'a token'}, found {t or 'end of input'}", self.pos())
        self.i += 1
        return t

    def formula(self):
        a = self.additive()
        if self.peek() == "-o":
            self.take()
            return lolli(a, self.formula())
        return a

    def additive(self):
        a = self.multiplicative()
        while self.peek() in ("&", "+"):
            op = "with" if self.take() == "&" else "plus"
            a = Formula(op, (a, self.multiplicative()))
        return a

    def multiplicative(self):
        a = self.prefix()
        while self.peek() in ("*", "|"):
            op = "tensor" if self.take() == "*" else "par"
            a = Formula(op, (a, self.prefix()))
        return a

    def prefix(self):
        t = self.peek()
        if t == "~":
            self.take()
            return dual(self.prefix())
        if t == "!":
            self.take()
            return ofc(self.prefix())
        if t == "?":
            self.take()
            return whynot(self.prefix())
        if t == "(":
            self.take()
            f = self.formula()
            self.take(")")
            return f
        if t == "1":
            self.take()
            return ONE
        if t == "0":
            self.take()
            return ZERO
        if t == "bot":
            self.take()
            return BOT
        if t == "top":
            self.take()
            return TOP
        if t is not None and re.fullmatch(r"[a-z][a-z0-9_]*", t):
            self.take()
            return atom(t)
        raise ParseError(f"expected a formula, found {t or 'end of input'}", self.pos())

    def formula_list(self, stop):
        out = []
        if self.peek() in stop:
            return out
        out.append(self.formula())
        while self.peek() == ",":
            self.take()
            out.append(self.formula())
        return out

    def done(self):
        if self.peek() is not None:
            raise ParseError(f"unexpected {self.peek()}", self.pos())


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    f = p.formula()
    p.done()
    return f


def parse_sequent(text: str) -> Sequent:
    p = _Parser(text)
    left = p.formula_list(("|-",))
    p.take("|-")
    right = p.formula_list((None,))
    p.done()
    if not left:
        return Sequent("one", (), right)
    return Sequent("two", left, right)


def parse_theory(text: str) -> Theory:
    axioms = []
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            p = _Parser(line)
            c = p.formula()
            ps = []
            if p.peek() == ";":
                p.take()
                for f in p.formula_list((None,)):
                    if f.op == "natom":
                        ps.append(f.name)
                    elif f.op == "atom":
                        ps.append(f.name)
                    else:
                        raise ParseError("theory axioms list atoms after ';'")
            p.done()
        except ParseError as e:
            raise ParseError(str(e), line=ln) from None
        axioms.append((c, tuple(ps)))
    return Theory(tuple(axioms))


def parse_ll(text: str):
    """Formula, sequent or theory, decided by shape."""
    body = "\n".join(x.split("#", 1)[0] for x in text.splitlines()).strip()
    if "|-" in body:
        return parse_sequent(body)
    if ";" in body or "\n" in body:
        return parse_theory(body)
    return parse_formula(body)
