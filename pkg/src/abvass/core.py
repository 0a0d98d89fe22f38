"""Data model for ABVASS with full zero tests.

A system has unary rules (add a delta), fork rules (copy the vector to
two children), split rules (partition the vector between two children)
and zero rules (fire from the all-zero vector).  Deduction trees are
read top-down: the root carries the initial configuration and every
internal node is one rule application.

Semantics
---------
``Semantics.mode`` selects the extra steps a tree may use:

* ``strict``     -- none;
* ``lossy``      -- ``v -> v - e_i`` (loss);
* ``expansive``  -- ``v -> v + e_i`` when ``v(i) >= 1`` (expansion);
* ``increasing`` -- ``v -> v + e_i`` (increase), and unary rules fire as
  pseudo-unary rules ``v -> (v join u_minus) + u``.

Zero rules are read as tests, resets or jumps, forks as copies or
meets; the allowed combinations are listed in ``_ALLOWED``.  With
``pseudo=True`` the free increase step is dropped (increasing) or unary
rules fire pseudo-expansively (expansive).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, NamedTuple, Sequence

from . import _vec
from ._vec import (
    count_decompositions,
    decompositions,
    is_nonneg,
    vec_add,
    vec_join,
    vec_meet,
)

DEFAULT_SPLIT_GUARD = 10**6

MODES = ("strict", "lossy", "expansive", "increasing")
SEMANTIC_STEPS = ("loss", "expand", "increase")
RULE_KINDS = ("unary", "fork", "split", "zero")

_ALLOWED = {
    "strict": ({"test", "reset", "jump"}, {"copy", "meet"}),
    "lossy": ({"test", "reset"}, {"copy"}),
    "expansive": ({"test"}, {"copy"}),
    "increasing": ({"jump", "test"}, {"copy"}),
}
_DEFAULT_ZERO = {"strict": "test", "lossy": "test", "expansive": "test", "increasing": "jump"}


class CombinatorialLimit(RuntimeError):
    """Raised when split enumeration would exceed the configured guard."""


# ---------------------------------------------------------------- rules

@dataclass(frozen=True)
class UnaryRule:
    src: str
    delta: tuple
    dst: str
    kind = "unary"


@dataclass(frozen=True)
class ForkRule:
    src: str
    left: str
    right: str
    kind = "fork"


@dataclass(frozen=True)
class SplitRule:
    src: str
    left: str
    right: str
    kind = "split"


@dataclass(frozen=True)
class ZeroRule:
    src: str
    dst: str
    kind = "zero"


@dataclass(frozen=True)
class SemanticStep:
    """A loss, expansion or increase on coordinate ``coord``."""

    kind: str
    coord: int


def _as_rule(cls, r):
    if isinstance(r, cls):
        return r if cls is not UnaryRule else UnaryRule(r.src, tuple(r.delta), r.dst)
    if cls is UnaryRule:
        return UnaryRule(r[0], tuple(r[1]), r[2])
    return cls(*r)


@dataclass(frozen=True)
class System:
    """An ABVASS: states, dimension and the four rule lists."""

    states: tuple
    dim: int
    unary: tuple = ()
    fork: tuple = ()
    split: tuple = ()
    zero: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "unary", tuple(_as_rule(UnaryRule, r) for r in self.unary))
        object.__setattr__(self, "fork", tuple(_as_rule(ForkRule, r) for r in self.fork))
        object.__setattr__(self, "split", tuple(_as_rule(SplitRule, r) for r in self.split))
        object.__setattr__(self, "zero", tuple(_as_rule(ZeroRule, r) for r in self.zero))

    def rule_list(self, kind: str) -> tuple:
        return getattr(self, kind)

    def rule(self, kind: str, index: int):
        return getattr(self, kind)[index]

    @cached_property
    def outgoing(self) -> dict:
        """state -> list of (kind, index), in rule-list order."""
        out = {q: [] for q in self.states}
        for kind in RULE_KINDS:
            for i, r in enumerate(getattr(self, kind)):
                out.setdefault(r.src, []).append((kind, i))
        return out

    @cached_property
    def state_set(self) -> frozenset:
        return frozenset(self.states)

    @property
    def zero_vector(self) -> tuple:
        return (0,) * self.dim

    def max_minus(self) -> int:
        return max((-x for r in self.unary for x in r.delta if x < 0), default=0)

    def max_plus(self) -> int:
        return max((x for r in self.unary for x in r.delta if x > 0), default=0)

    def is_ordinary(self) -> bool:
        return all(sum(abs(x) for x in r.delta) <= 1 for r in self.unary)

    def without_zero_rules(self) -> "System":
        return System(self.states, self.dim, self.unary, self.fork, self.split, ())


@dataclass(frozen=True)
class Semantics:
    mode: str = "strict"
    zero_reading: str | None = None
    fork_reading: str = "copy"
    pseudo: bool = False

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown semantics mode {self.mode!r}")
        if self.zero_reading is None:
            object.__setattr__(self, "zero_reading", _DEFAULT_ZERO[self.mode])
        zeros, forks = _ALLOWED[self.mode]
        if self.zero_reading not in zeros:
            raise ValueError(f"zero rules cannot be read as {self.zero_reading!r} under {self.mode}")
        if self.fork_reading not in forks:
            raise ValueError(f"forks cannot be read as {self.fork_reading!r} under {self.mode}")
        if self.pseudo and self.mode not in ("expansive", "increasing"):
            raise ValueError("pseudo-unary rules only exist for expansive and increasing modes")

    @property
    def free_steps(self) -> tuple:
        """Semantic step kinds available in this reading."""
        if self.mode == "lossy":
            return ("loss",)
        if self.mode == "expansive":
            return ("expand",)
        if self.mode == "increasing" and not self.pseudo:
            return ("increase",)
        return ()


STRICT = Semantics("strict")
LOSSY = Semantics("lossy")
EXPANSIVE = Semantics("expansive")
INCREASING = Semantics("increasing")


class Configuration(NamedTuple):
    state: str
    vector: tuple

    def __str__(self):
        return f"{self.state}<{','.join(map(str, self.vector))}>"


@dataclass(frozen=True)
class Instance:
    """A decision question: root configuration, leaf states, semantics.

    ``leaf_condition`` is ``zero`` (leaves must carry the zero vector) or
    ``any``.  ``root_condition`` is ``exact`` or ``cover``; the latter
    accepts any root vector ``>= root_vector`` (bottom-up coverability).
    """

    system: System
    root_state: str
    leaf_states: frozenset
    semantics: Semantics = STRICT
    root_vector: tuple | None = None
    leaf_condition: str = "zero"
    root_condition: str = "exact"

    def __post_init__(self):
        object.__setattr__(self, "leaf_states", frozenset(self.leaf_states))
        if self.root_vector is None:
            object.__setattr__(self, "root_vector", self.system.zero_vector)
        else:
            object.__setattr__(self, "root_vector", tuple(self.root_vector))
        if self.leaf_condition not in ("zero", "any"):
            raise ValueError(f"bad leaf condition {self.leaf_condition!r}")
        if self.root_condition not in ("exact", "cover"):
            raise ValueError(f"bad root condition {self.root_condition!r}")

    @property
    def root(self) -> Configuration:
        return Configuration(self.root_state, self.root_vector)

    def is_leaf(self, cfg: Configuration) -> bool:
        if cfg.state not in self.leaf_states:
            return False
        return self.leaf_condition == "any" or not any(cfg.vector)

    def replace(self, **kw) -> "Instance":
        d = dict(
            system=self.system,
            root_state=self.root_state,
            leaf_states=self.leaf_states,
            semantics=self.semantics,
            root_vector=self.root_vector,
            leaf_condition=self.leaf_condition,
            root_condition=self.root_condition,
        )
        d.update(kw)
        return Instance(**d)


@dataclass(frozen=True)
class Step:
    """Rule tag of a tree node: a rule reference, a semantic step, or ``leaf``."""

    kind: str
    index: int | None = None
    coord: int | None = None

    @property
    def is_semantic(self) -> bool:
        return self.kind in SEMANTIC_STEPS


LEAF = Step("leaf")


@dataclass(frozen=True, eq=False)
class DeductionTree:
    label: Configuration
    step: Step = LEAF
    children: tuple = ()

    def subtree(self, path: Sequence[int]) -> "DeductionTree":
        t = self
        for i in path:
            t = t.children[i]
        return t

    def nodes(self) -> Iterator[tuple[tuple, "DeductionTree"]]:
        """Preorder walk yielding ``(path, node)``."""
        stack = [((), self)]
        while stack:
            path, t = stack.pop()
            yield path, t
            for i in range(len(t.children) - 1, -1, -1):
                stack.append((path + (i,), t.children[i]))


@dataclass
class Report:
    ok: bool
    violations: list = field(default_factory=list)
    path: tuple | None = None

    def __bool__(self):
        return self.ok

    @classmethod
    def fail(cls, msg, path=None):
        return cls(False, [msg], path)


# ---------------------------------------------------------------- vectors

def _check_len(a, b):
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")


def split_delta(u) -> tuple[tuple, tuple]:
    """``(u_plus, u_minus)`` with ``u == u_plus - u_minus``."""
    u = tuple(u)
    return tuple(x if x > 0 else 0 for x in u), tuple(-x if x < 0 else 0 for x in u)


def meet(v1, v2) -> tuple:
    _check_len(v1, v2)
    return vec_meet(tuple(v1), tuple(v2))


def join(v, w) -> tuple:
    _check_len(v, w)
    return vec_join(tuple(v), tuple(w))


def support(v) -> frozenset:
    """1-based indices of the positive coordinates."""
    return frozenset(i + 1 for i, x in enumerate(v) if x > 0)


def unit(dim: int, i: int, k: int = 1) -> tuple:
    return tuple(k if j == i else 0 for j in range(dim))


# ---------------------------------------------------------------- validation

def validate_system(sys: System) -> Report:
    bad = []
    if not isinstance(sys.dim, int) or sys.dim < 0:
        bad.append(f"dimension must be a natural number, got {sys.dim!r}")
    known = sys.state_set
    if len(known) != len(sys.states):
        bad.append("duplicate state names")

    def chk(where, q):
        if q not in known:
            bad.append(f"unknown state {q} in {where}")

    for i, r in enumerate(sys.unary):
        w = f"unary rule {i} ({r.src} -> {r.dst})"
        chk(w, r.src)
        chk(w, r.dst)
        if len(r.delta) != sys.dim:
            bad.append(f"{w}: delta has {len(r.delta)} entries, expected {sys.dim}")
    for kind in ("fork", "split"):
        for i, r in enumerate(getattr(sys, kind)):
            w = f"{kind} rule {i} ({r.src} -> {r.left}, {r.right})"
            for q in (r.src, r.left, r.right):
                chk(w, q)
    for i, r in enumerate(sys.zero):
        w = f"zero rule {i} ({r.src} -> {r.dst})"
        chk(w, r.src)
        chk(w, r.dst)
    return Report(not bad, bad)


# ---------------------------------------------------------------- rule application

def pseudo_unary(v: tuple, u: tuple) -> tuple:
    _, minus = split_delta(u)
    return vec_add(vec_join(v, minus), u)


def apply_rule(cfg: Configuration, rule, sem: Semantics, *, decomposition=None, child_vectors=None):
    """Children of ``cfg`` under ``rule``, or ``None`` when inapplicable.

    Split rules need ``decomposition=(v1, v2)``; meets need
    ``child_vectors=(v1, v2)``; zero-jumps take ``child_vectors=(v',)``
    (default: the zero vector).
    """
    q, v = cfg
    if isinstance(rule, SemanticStep):
        i = rule.coord
        if rule.kind not in sem.free_steps or not 0 <= i < len(v):
            return None
        if rule.kind == "loss":
            return [Configuration(q, unit_add(v, i, -1))] if v[i] > 0 else None
        if rule.kind == "expand":
            return [Configuration(q, unit_add(v, i, 1))] if v[i] >= 1 else None
        return [Configuration(q, unit_add(v, i, 1))]
    if rule.src != q:
        raise ValueError(f"rule source {rule.src} does not match state {q}")
    if isinstance(rule, UnaryRule):
        if sem.mode == "increasing":
            return [Configuration(rule.dst, pseudo_unary(v, rule.delta))]
        if sem.mode == "expansive" and sem.pseudo:
            _, minus = split_delta(rule.delta)
            if any(m > 0 and x == 0 for m, x in zip(minus, v)):
                return None
            return [Configuration(rule.dst, pseudo_unary(v, rule.delta))]
        w = vec_add(v, rule.delta)
        return [Configuration(rule.dst, w)] if is_nonneg(w) else None
    if isinstance(rule, ForkRule):
        if sem.fork_reading == "copy":
            return [Configuration(rule.left, v), Configuration(rule.right, v)]
        if child_vectors is None:
            return None
        v1, v2 = (tuple(x) for x in child_vectors)
        if not (is_nonneg(v1) and is_nonneg(v2)) or vec_meet(v1, v2) != v:
            return None
        return [Configuration(rule.left, v1), Configuration(rule.right, v2)]
    if isinstance(rule, SplitRule):
        if decomposition is None:
            return None
        v1, v2 = (tuple(x) for x in decomposition)
        if len(v1) != len(v) or len(v2) != len(v):
            return None
        if not (is_nonneg(v1) and is_nonneg(v2)) or vec_add(v1, v2) != v:
            return None
        return [Configuration(rule.left, v1), Configuration(rule.right, v2)]
    if isinstance(rule, ZeroRule):
        zero = (0,) * len(v)
        if sem.zero_reading == "reset":
            return [Configuration(rule.dst, zero)]
        if any(v):
            return None
        if sem.zero_reading == "jump" and child_vectors is not None:
            w = tuple(child_vectors[0])
            return [Configuration(rule.dst, w)] if is_nonneg(w) and len(w) == len(v) else None
        return [Configuration(rule.dst, zero)]
    raise TypeError(f"not a rule: {rule!r}")


def unit_add(v: tuple, i: int, k: int) -> tuple:
    lst = list(v)
    lst[i] += k
    return tuple(lst)


def _box(dim: int, cap: int):
    from itertools import product

    return product(range(cap + 1), repeat=dim)


def enumerate_steps(sys: System, cfg: Configuration, sem: Semantics, value_cap: int | None = None,
                    guard: int = DEFAULT_SPLIT_GUARD) -> list:
    """Every applicable rule instantiation at ``cfg`` as ``(Step, children)``.

    Split rules expand into all decompositions.  Meets and zero-jumps
    enumerate child vectors within ``value_cap`` (required for them);
    increase steps are dropped once they would exceed the cap.
    """
    q, v = cfg
    out = []
    for kind, i in sys.outgoing.get(q, ()):
        rule = sys.rule(kind, i)
        step = Step(kind, i)
        if kind == "split":
            n = count_decompositions(v)
            if n > guard:
                raise CombinatorialLimit(f"{n} decompositions of {v} exceed guard {guard}")
            for v1, v2 in decompositions(v):
                out.append((step, (Configuration(rule.left, v1), Configuration(rule.right, v2))))
        elif kind == "fork" and sem.fork_reading == "meet":
            if value_cap is None:
                raise ValueError("meet enumeration needs a value cap")
            for v1, v2 in _meet_pairs(v, value_cap):
                out.append((step, (Configuration(rule.left, v1), Configuration(rule.right, v2))))
        elif kind == "zero" and sem.zero_reading == "jump":
            if any(v):
                continue
            if value_cap is None:
                raise ValueError("zero-jump enumeration needs a value cap")
            for w in _box(len(v), value_cap):
                out.append((step, (Configuration(rule.dst, w),)))
        else:
            kids = apply_rule(cfg, rule, sem)
            if kids is not None:
                out.append((step, tuple(kids)))
    for kind in sem.free_steps:
        for i in range(len(v)):
            kids = apply_rule(cfg, SemanticStep(kind, i), sem)
            if kids is None:
                continue
            if kind == "increase" and value_cap is not None and kids[0].vector[i] > value_cap:
                continue
            out.append((Step(kind, coord=i), tuple(kids)))
    return out


def _meet_pairs(v: tuple, cap: int):
    from itertools import product

    per = []
    for x in v:
        opts = [(x, y) for y in range(x, cap + 1)]
        opts += [(y, x) for y in range(x + 1, cap + 1)]
        per.append(opts)
    for combo in product(*per):
        yield tuple(a for a, _ in combo), tuple(b for _, b in combo)


# ---------------------------------------------------------------- trees

def _rule_for(sys: System, step: Step):
    if step.kind in RULE_KINDS:
        lst = sys.rule_list(step.kind)
        if step.index is None or not 0 <= step.index < len(lst):
            return None
        return lst[step.index]
    if step.kind in SEMANTIC_STEPS:
        if step.coord is None:
            return None
        return SemanticStep(step.kind, step.coord)
    return None


def check_node(inst: Instance, node: DeductionTree) -> str | None:
    """Error message for one node, or ``None`` if it is a correct step."""
    sys = inst.system
    q, v = node.label
    if q not in sys.state_set:
        return f"unknown state {q}"
    if len(v) != sys.dim:
        return f"vector has {len(v)} entries, expected {sys.dim}"
    if not is_nonneg(v):
        return "negative vector entry"
    step = node.step
    kids = node.children
    if step.kind == "leaf":
        if kids:
            return "leaf with children"
        if q not in inst.leaf_states:
            return f"leaf state {q} not in leaf set"
        if inst.leaf_condition == "zero" and any(v):
            return "leaf vector must be zero"
        return None
    rule = _rule_for(sys, step)
    if rule is None:
        return f"bad rule reference {step}"
    if not isinstance(rule, SemanticStep) and rule.src != q:
        return f"rule {step.kind}[{step.index}] starts at {rule.src}, node is at {q}"
    arity = 2 if step.kind in ("fork", "split") else 1
    if len(kids) != arity:
        return f"{step.kind} node needs {arity} children, has {len(kids)}"
    labels = [k.label for k in kids]
    for lab in labels:
        if len(lab.vector) != sys.dim or not is_nonneg(lab.vector):
            return "malformed child vector"
    if step.kind == "split":
        got = apply_rule(node.label, rule, inst.semantics, decomposition=[lab.vector for lab in labels])
        if got is None:
            return "split children must sum to the parent vector"
    elif step.kind == "fork" and inst.semantics.fork_reading == "meet":
        got = apply_rule(node.label, rule, inst.semantics, child_vectors=[lab.vector for lab in labels])
        if got is None:
            return "meet children must have the parent vector as their minimum"
    elif step.kind == "zero" and inst.semantics.zero_reading == "jump":
        got = apply_rule(node.label, rule, inst.semantics, child_vectors=[labels[0].vector])
        if got is None:
            return "zero-jump needs a zero parent vector"
    else:
        got = apply_rule(node.label, rule, inst.semantics)
        if got is None:
            return f"{step.kind} step not applicable here"
    if [tuple(g) for g in got] != [tuple(lab) for lab in labels]:
        if step.kind == "fork":
            return "fork children must copy vector"
        return f"{step.kind} child label mismatch: expected {[str(g) for g in got]}"
    return None


def validate_tree(inst: Instance, tree: DeductionTree) -> Report:
    """Check a whole deduction tree against ``inst``; reports the first bad node."""
    q, v = tree.label
    if q != inst.root_state:
        return Report.fail(f"root state {q} != {inst.root_state}", ())
    if inst.root_condition == "exact":
        if tuple(v) != inst.root_vector:
            return Report.fail(f"root vector {v} != {inst.root_vector}", ())
    elif len(v) != len(inst.root_vector) or not _vec.vec_leq(inst.root_vector, tuple(v)):
        return Report.fail(f"root vector {v} does not cover {inst.root_vector}", ())
    for path, node in tree.nodes():
        msg = check_node(inst, node)
        if msg is not None:
            return Report.fail(f"at {list(path)}: {msg}", path)
    return Report(True)


def tree_height(tree: DeductionTree, count_semantic: bool = True) -> int:
    """Longest root-to-leaf edge count; optionally ignoring loss/expand/increase edges."""
    best = 0
    stack = [(tree, 0)]
    while stack:
        t, h = stack.pop()
        best = max(best, h)
        w = 0 if (t.step.is_semantic and not count_semantic) else 1
        for c in t.children:
            stack.append((c, h + w))
    return best


def tree_size(tree: DeductionTree) -> int:
    return sum(1 for _ in tree.nodes())


def tree_max_value(tree: DeductionTree) -> int:
    return max((max(t.label.vector, default=0) for _, t in tree.nodes()), default=0)


def find_repetition(tree: DeductionTree):
    """First ``(ancestor_path, descendant_path)`` with equal labels, or ``None``."""
    stack = [((), tree, {})]
    while stack:
        path, t, seen = stack.pop()
        lab = (t.label.state, tuple(t.label.vector))
        if lab in seen:
            return seen[lab], path
        seen2 = dict(seen)
        seen2[lab] = path
        for i, c in enumerate(t.children):
            stack.append((path + (i,), c, seen2))
    return None


def _replace_at(tree: DeductionTree, path: tuple, new: DeductionTree) -> DeductionTree:
    if not path:
        return new
    i = path[0]
    kids = list(tree.children)
    kids[i] = _replace_at(kids[i], path[1:], new)
    return DeductionTree(tree.label, tree.step, tuple(kids))


def shorten(tree: DeductionTree, ancestor=None, descendant=None, inst: Instance | None = None) -> DeductionTree:
    """Replace the subtree at ``ancestor`` by the one at ``descendant``.

    Both paths must carry the same label, with ``ancestor`` strictly
    above ``descendant``.  Without paths, the first repetition found by
    ``find_repetition`` is used.  When ``inst`` is given the result is
    re-validated.
    """
    if ancestor is None and descendant is None:
        rep = find_repetition(tree)
        if rep is None:
            raise ValueError("no repetition")
        ancestor, descendant = rep
    ancestor, descendant = tuple(ancestor), tuple(descendant)
    if len(descendant) <= len(ancestor) or descendant[: len(ancestor)] != ancestor:
        raise ValueError("ancestor must lie strictly above descendant")
    try:
        a = tree.subtree(ancestor)
        d = tree.subtree(descendant)
    except IndexError:
        raise ValueError("invalid path") from None
    if (a.label.state, tuple(a.label.vector)) != (d.label.state, tuple(d.label.vector)):
        raise ValueError("labels differ")
    out = _replace_at(tree, ancestor, d)
    if inst is not None:
        rep = validate_tree(inst, out)
        assert rep.ok, rep.violations
    return out
