"""Decision procedures and bound arithmetic.

* ``decide_lossy``: antichain fixpoint over minimal coverable vectors.
* ``decide_bounded_height`` / ``decide_strict_bounded``: explicit
  exploration within height and value caps, then a min-height fixpoint.
* ``decide_increasing`` / ``decide_expansive``: depth-first search with
  subsumption caches.
* ``brute_force``: plain enumeration, used as the reference oracle.

Loss, expansion and increase steps never count toward heights.
"""

from __future__ import annotations

import heapq
import itertools
import sys as _sys
from collections import deque
from dataclasses import dataclass, field
from itertools import product

from . import reduce as _reduce
from ._vec import antichain_insert, dominates_some, vec_add, vec_join, vec_leq, vec_sqsubseteq, vec_sub
from .core import (
    DEFAULT_SPLIT_GUARD,
    CombinatorialLimit,
    Configuration,
    DeductionTree,
    ForkRule,
    Instance,
    Semantics,
    SplitRule,
    Step,
    UnaryRule,
    ZeroRule,
    apply_rule,
    enumerate_steps,
    split_delta,
)

BIT_LIMIT = 1 << 20
ANTICHAIN_GUARD = 10**5
CONFIG_GUARD = 10**6


class BoundOverflow(OverflowError):
    pass


class LimitExceeded(RuntimeError):
    pass


@dataclass
class Decision:
    answer: str  # "yes" | "no" | "unknown"
    witness: DeductionTree | None = None
    procedure: str = ""
    bounds_used: tuple | None = None
    diagnostics: list = field(default_factory=list)

    @property
    def yes(self) -> bool:
        return self.answer == "yes"


# ---------------------------------------------------------------- bounds

def tower(n: int, bit_limit: int = BIT_LIMIT) -> int:
    if n < 0:
        raise ValueError("tower needs n >= 0")
    t = 1
    for _ in range(n):
        if t > bit_limit:
            raise BoundOverflow(f"tower({n}) exceeds {bit_limit} bits")
        t = 1 << t
    return t


def _h_step(h: int, k: int, s: int, m: int, bit_limit: int) -> int:
    # H(k+1) = s * (m * 2^H(k))^(k+1) + H(k)
    if m == 0:
        return h
    if (h + m.bit_length()) * (k + 1) + s.bit_length() > bit_limit:
        raise BoundOverflow("H exceeds the bit limit")
    return s * (m << h) ** (k + 1) + h


def bound_H(d: int, s: int, m: int, bit_limit: int = BIT_LIMIT) -> int:
    if s < 1 or d < 0 or m < 0:
        raise ValueError("need d >= 0, s >= 1, m >= 0")
    h = s
    for k in range(d):
        h = _h_step(h, k, s, m, bit_limit)
    return h


def bound_Hprime(d: int, s: int, m: int, bit_limit: int = BIT_LIMIT) -> int:
    return 4 * (d + 1) * (s + m + 1) * bound_H(d, s, m, bit_limit)


def _ceil_log2(x: int) -> int:
    return (x - 1).bit_length() if x > 1 else 0


def _at_most_pow2(a: int, b: int) -> bool:
    """Exact test ``a <= 2**b`` without building ``2**b``."""
    if a <= 0:
        return True
    bl = a.bit_length()
    return bl <= b or (bl == b + 1 and a & (a - 1) == 0)


def hprime_growth(d: int, s: int, m: int, bit_limit: int = BIT_LIMIT) -> tuple[bool, str]:
    """Check ``H'(d+1,s,m) <= 2**H'(d,s,m)``; returns ``(holds, method)``.

    When both sides fit under ``bit_limit`` the comparison is done on the
    integers themselves.  Otherwise an integer log bound is used:
    ``log2 H'(d+1) <= c + (d+1) H(d)`` with ``c`` computed exactly, which
    holds against ``H'(d) = 4(d+1)(s+m+1) H(d)`` as soon as
    ``c <= (4(s+m+1) - 1)(d+1) H(d)``.
    """
    try:
        big = bound_Hprime(d + 1, s, m, bit_limit)
        small = bound_Hprime(d, s, m, bit_limit)
        return _at_most_pow2(big, small), "exact"
    except BoundOverflow:
        pass
    # m >= 1 here (m == 0 never overflows)
    c = _ceil_log2(4 * (d + 2) * (s + m + 1)) + _ceil_log2(2 * s * m ** (d + 1))
    try:
        hd = bound_H(d, s, m, bit_limit)
    except BoundOverflow:
        hd = 1 << bit_limit  # strict lower bound on H(d)
    return c <= (4 * (s + m + 1) - 1) * (d + 1) * hd, "log-bound"


def default_caps(inst: Instance) -> tuple[int, int] | None:
    """``(H, (max+ + 1) * H)`` when both fit in 64 bits, else ``None``."""
    sys = inst.system
    try:
        h = bound_H(sys.dim, max(1, len(sys.states)), sys.max_minus(), bit_limit=64)
    except BoundOverflow:
        return None
    v = (sys.max_plus() + 1) * h
    if h >= 1 << 64 or v >= 1 << 64:
        return None
    return h, v


# ---------------------------------------------------------------- antichains

@dataclass
class CoverAntichain:
    """Per-state minimal coverable vectors with the rule that justified each."""

    elements: dict
    justification: dict
    history: dict = field(default_factory=dict)  # state -> every inserted vector, in insertion order

    def member(self, q: str, v) -> bool:
        return dominates_some(self.elements.get(q, []), tuple(v))

    def minimal_below(self, q: str, v):
        for m in self.elements.get(q, []):
            if vec_leq(m, tuple(v)):
                return m
        return None

    def earliest_below(self, q: str, v):
        """First-inserted vector below ``v``.  Justifications only cite earlier
        insertions, so replaying from it always makes progress."""
        v = tuple(v)
        for m in self.history.get(q, ()):
            if vec_leq(m, v):
                return m
        return None

    def total(self) -> int:
        return sum(len(x) for x in self.elements.values())


def is_cover_form(inst: Instance) -> bool:
    s = inst.semantics
    return (
        s.mode == "strict"
        and inst.leaf_condition == "any"
        and s.fork_reading == "copy"
        and (s.zero_reading == "reset" or not inst.system.zero)
    )


def min_cover_antichains(view: Instance, guard: int = ANTICHAIN_GUARD) -> CoverAntichain:
    """Least fixpoint of minimal coverable vectors for a coverability-form instance."""
    if not is_cover_form(view):
        raise ValueError("min_cover_antichains needs a coverability view (strict, resets, any leaves)")
    sys = view.system
    d = sys.dim
    zero = (0,) * d
    elems = {q: [] for q in sys.states}
    just: dict = {}
    hist = {q: [] for q in sys.states}
    into_unary: dict = {}
    for i, r in enumerate(sys.unary):
        into_unary.setdefault(r.dst, []).append(i)
    into_pair: dict = {}
    for kind in ("fork", "split"):
        for i, r in enumerate(sys.rule_list(kind)):
            into_pair.setdefault(r.left, []).append((kind, i))
            if r.right != r.left:
                into_pair.setdefault(r.right, []).append((kind, i))
    into_zero: dict = {}
    for i, r in enumerate(sys.zero):
        into_zero.setdefault(r.dst, []).append(i)
    work = deque()
    total = [0]

    def add(q, v, why):
        new = antichain_insert(elems[q], v)
        if new is None:
            return
        total[0] += len(new) - len(elems[q])
        elems[q] = new
        if (q, v) not in just:
            just[(q, v)] = why
            hist[q].append(v)
        if total[0] > guard:
            raise LimitExceeded(f"antichain exceeds {guard} elements")
        work.append((q, v))

    for q in sorted(view.leaf_states):
        if q in elems:
            add(q, zero, ("leaf",))
    while work:
        q1, m1 = work.popleft()
        if m1 not in elems[q1]:
            continue
        for i in into_unary.get(q1, ()):
            r = sys.unary[i]
            _, minus = split_delta(r.delta)
            add(r.src, vec_join(vec_sub(m1, r.delta), minus), ("unary", i, m1))
        for kind, i in into_pair.get(q1, ()):
            r = sys.rule_list(kind)[i]
            pairs = []
            if r.left == q1:
                pairs += [(m1, b) for b in elems[r.right]]
            if r.right == q1:
                pairs += [(a, m1) for a in elems[r.left]]
            for a, b in pairs:
                v = vec_join(a, b) if kind == "fork" else vec_add(a, b)
                add(r.src, v, (kind, i, a, b))
        if m1 == zero:
            for i in into_zero.get(q1, ()):
                add(sys.zero[i].src, zero, ("zero", i, zero))
    return CoverAntichain(elems, just, hist)


def cover_witness(view: Instance, ac: CoverAntichain, root: Configuration) -> DeductionTree:
    """Top-down replay of the antichain justifications (strict, resets, any leaves)."""
    sys = view.system
    stack = [(0, root)]
    labels = {0: root}
    plan = {}
    nxt = itertools.count(1)
    while stack:
        nid, cfg = stack.pop()
        q, w = cfg
        m = ac.earliest_below(q, w)
        assert m is not None, f"{cfg} not covered"
        why = ac.justification[(q, m)]
        kind = why[0]
        if kind == "leaf":
            plan[nid] = (Step("leaf"), [])
            continue
        if kind == "unary":
            r = sys.unary[why[1]]
            kids = [Configuration(r.dst, vec_add(w, r.delta))]
        elif kind == "fork":
            r = sys.fork[why[1]]
            kids = [Configuration(r.left, w), Configuration(r.right, w)]
        elif kind == "split":
            r = sys.split[why[1]]
            a = why[2]
            kids = [Configuration(r.left, a), Configuration(r.right, vec_sub(w, a))]
        else:
            r = sys.zero[why[1]]
            kids = [Configuration(r.dst, (0,) * len(w))]
        ids = []
        for k in kids:
            cid = next(nxt)
            labels[cid] = k
            ids.append(cid)
            stack.append((cid, k))
        plan[nid] = (Step(kind, why[1]), ids)
    built = {}
    for nid in sorted(plan, reverse=True):
        step, ids = plan[nid]
        built[nid] = DeductionTree(labels[nid], step, tuple(built.pop(c) for c in ids))
    return built[0]


def decide_cover(view: Instance, want_witness: bool = True, guard: int = ANTICHAIN_GUARD) -> Decision:
    try:
        ac = min_cover_antichains(view, guard)
    except LimitExceeded as e:
        return Decision("unknown", procedure="antichain", diagnostics=[str(e)])
    ok = ac.member(view.root_state, view.root_vector)
    if not ok:
        return Decision("no", procedure="antichain")
    w = cover_witness(view, ac, view.root) if want_witness else None
    return Decision("yes", w, procedure="antichain")


def decide_lossy(inst: Instance, want_witness: bool = True, guard: int = ANTICHAIN_GUARD) -> Decision:
    """Lossy reachability (or a strict coverability-form instance) via antichains."""
    if is_cover_form(inst):
        return decide_cover(inst, want_witness, guard)
    if inst.semantics.mode != "lossy":
        raise ValueError("decide_lossy needs lossy semantics")
    view, trace = _reduce.coverability_view(inst)
    dec = decide_cover(view, want_witness, guard)
    if dec.witness is not None:
        dec.witness = _reduce.back_translate(trace, dec.witness, inst)
    return dec


# ---------------------------------------------------------------- bounded height

def _roots(inst: Instance, value_cap: int):
    r = tuple(inst.root_vector)
    if inst.root_condition == "exact":
        return [Configuration(inst.root_state, r)], False
    ranges = [range(x, max(x, value_cap) + 1) for x in r]
    return [Configuration(inst.root_state, tuple(w)) for w in product(*ranges)], True


def _over(cfg, cap):
    return any(x > cap for x in cfg.vector)


def decide_bounded_height(inst: Instance, height_cap: int | None = None, value_cap: int | None = None,
                          config_guard: int = CONFIG_GUARD, split_guard: int = DEFAULT_SPLIT_GUARD,
                          procedure: str = "bounded") -> Decision:
    """Exact min-height computation over configurations within the caps.

    ``yes`` when a witness of height <= ``height_cap`` exists with all
    values <= ``value_cap``; ``no`` only if neither cap cut anything off.
    """
    if height_cap is None or value_cap is None:
        dc = default_caps(inst)
        if dc is None:
            return Decision("unknown", procedure=procedure,
                            diagnostics=["default caps do not fit in 64 bits; pass explicit caps"])
        height_cap = dc[0] if height_cap is None else height_cap
        value_cap = dc[1] if value_cap is None else value_cap
    caps = (height_cap, value_cap)
    sys, sem = inst.system, inst.semantics
    roots, trunc_value = _roots(inst, value_cap)
    roots = [r for r in roots if not _over(r, value_cap)] or roots
    if any(_over(r, value_cap) for r in roots):
        return Decision("unknown", procedure=procedure, bounds_used=caps, diagnostics=["root exceeds value cap"])
    trunc_height = False
    if sem.fork_reading == "meet" or sem.zero_reading == "jump":
        trunc_value = True  # child vectors above the cap are not enumerated
    grows = "increase" in sem.free_steps or "expand" in sem.free_steps

    dist = {}
    edges = {}
    dq = deque()
    for r in roots:
        dist[r] = 0
        dq.append((0, r))
    while dq:
        dd, c = dq.popleft()
        if dd > dist[c] or c in edges:
            continue
        if inst.is_leaf(c):
            edges[c] = []
            continue
        if len(edges) > config_guard:
            return Decision("unknown", procedure=procedure, bounds_used=caps,
                            diagnostics=[f"explored more than {config_guard} configurations"])
        try:
            steps = enumerate_steps(sys, c, sem, value_cap, split_guard)
        except CombinatorialLimit as e:
            return Decision("unknown", procedure=procedure, bounds_used=caps, diagnostics=[str(e)])
        if grows and any(x >= value_cap for x in c.vector):
            trunc_value = True
        out = []
        for step, kids in steps:
            if any(_over(k, value_cap) for k in kids):
                trunc_value = True
                continue
            w = 0 if step.is_semantic else 1
            if dd + w > height_cap:
                trunc_height = True
                continue
            out.append((step, kids, w))
            for k in kids:
                if k not in dist or dist[k] > dd + w:
                    dist[k] = dd + w
                    if w == 0:
                        dq.appendleft((dd, k))
                    else:
                        dq.append((dd + 1, k))
        edges[c] = out

    # min-height fixpoint (Knuth's generalisation of Dijkstra to AND/OR graphs)
    rev: dict = {}
    remaining = {}
    for c, out in edges.items():
        for ei, (_, kids, _) in enumerate(out):
            uniq = set(kids)
            remaining[(c, ei)] = len(uniq)
            for k in uniq:
                rev.setdefault(k, []).append((c, ei))
    height = {}
    choice = {}
    tick = itertools.count()
    heap = [(0, next(tick), c, None) for c in edges if inst.is_leaf(c)]
    heapq.heapify(heap)
    while heap:
        h, _, c, ei = heapq.heappop(heap)
        if c in height:
            continue
        height[c] = h
        choice[c] = ei
        for p, pe in rev.get(c, ()):
            remaining[(p, pe)] -= 1
            if remaining[(p, pe)] == 0 and p not in height:
                _, kids, w = edges[p][pe]
                heapq.heappush(heap, (w + max(height[k] for k in kids), next(tick), p, pe))
    best = None
    for r in roots:
        if r in height and height[r] <= height_cap and (best is None or height[r] < height[best]):
            best = r
    if best is not None:
        return Decision("yes", _build_choice(best, edges, choice), procedure, caps)
    if trunc_height or trunc_value:
        diag = []
        if trunc_height:
            diag.append("height cap reached")
        if trunc_value:
            diag.append("value cap reached")
        return Decision("unknown", procedure=procedure, bounds_used=caps, diagnostics=diag)
    return Decision("no", procedure=procedure, bounds_used=caps)


def _build_choice(root, edges, choice) -> DeductionTree:
    built = {}
    stack = [(root, False)]
    while stack:
        c, ready = stack.pop()
        if c in built:
            continue
        ei = choice[c]
        if ei is None:
            built[c] = DeductionTree(c)
            continue
        step, kids, _ = edges[c][ei]
        if ready:
            built[c] = DeductionTree(c, step, tuple(built[k] for k in kids))
        else:
            stack.append((c, True))
            stack.extend((k, False) for k in kids if k not in built)
    return built[root]


def decide_strict_bounded(inst: Instance, height_cap: int | None = None, value_cap: int | None = None,
                          **kw) -> Decision:
    """Semi-decision for strict reachability with full zero tests (undecidable in general)."""
    strict = inst.replace(semantics=Semantics("strict", "test", inst.semantics.fork_reading
                                              if inst.semantics.mode == "strict" else "copy"),
                          leaf_condition="zero")
    return decide_bounded_height(strict, height_cap, value_cap, procedure="strict-bounded", **kw)


# ---------------------------------------------------------------- subsumption search

class _Search:
    """DFS for witnesses of bounded height with subsumption caches.

    ``le`` is the order under which success is downward closed and
    failure upward closed; ``pad`` builds the free steps turning a
    smaller configuration into a cached larger one.
    """

    def __init__(self, inst, height_cap, value_cap, le, pad, split_guard):
        self.inst = inst
        self.sys = inst.system
        self.sem = inst.semantics
        self.h_cap = height_cap
        self.v_cap = value_cap
        self.le = le
        self.pad = pad
        self.split_guard = split_guard
        self.succ: dict = {}
        self.fail: dict = {}
        self.trunc_height = False
        self.trunc_value = False
        self.explicit_expand = "expand" in self.sem.free_steps and self.sem.mode == "expansive"

    def steps(self, cfg):
        sys, sem = self.sys, self.sem
        q, v = cfg
        out = []
        for kind, i in sys.outgoing.get(q, ()):
            rule = sys.rule(kind, i)
            step = Step(kind, i)
            if kind == "split":
                for kids in _splits(v, self.split_guard):
                    out.append((step, (Configuration(rule.left, kids[0]), Configuration(rule.right, kids[1]))))
            elif kind == "zero":
                if not any(v) or sem.zero_reading == "reset":
                    out.append((step, (Configuration(rule.dst, (0,) * len(v)),)))
            else:
                kids = apply_rule(cfg, rule, sem)
                if kids is not None:
                    out.append((step, tuple(kids)))
        return out

    def cached_success(self, cfg, h):
        for v, hh, tree in self.succ.get(cfg.state, ()):
            if hh <= h and self.le(cfg.vector, v):
                return self.pad(cfg, v, tree)
        return None

    def cached_failure(self, cfg, h):
        for v, hh in self.fail.get(cfg.state, ()):
            if hh >= h and self.le(v, cfg.vector):
                return True
        return False

    def solve(self, cfg, h):
        if self.inst.is_leaf(cfg):
            return DeductionTree(cfg)
        hit = self.cached_success(cfg, h)
        if hit is not None:
            return hit
        if self.cached_failure(cfg, h):
            return None
        res = None
        if h == 0:
            if self.steps(cfg) or self.explicit_expand:
                self.trunc_height = True
        else:
            for step, kids in self.steps(cfg):
                if any(_over(k, self.v_cap) for k in kids):
                    self.trunc_value = True
                    continue
                subs = []
                for k in kids:
                    t = self.solve(k, h - 1)
                    if t is None:
                        break
                    subs.append(t)
                else:
                    res = DeductionTree(cfg, step, tuple(subs))
                    break
        if res is None and self.explicit_expand:
            res = self._expand(cfg, h)
        if res is None:
            self.fail.setdefault(cfg.state, []).append((cfg.vector, h))
        else:
            self.succ.setdefault(cfg.state, []).append((cfg.vector, h, res))
        return res

    def _expand(self, cfg, h):
        q, v = cfg
        for i, x in enumerate(v):
            if x < 1:
                continue
            if x + 1 > self.v_cap:
                self.trunc_value = True
                continue
            w = list(v)
            w[i] += 1
            child = Configuration(q, tuple(w))
            t = self.solve(child, h)
            if t is not None:
                return DeductionTree(cfg, Step("expand", coord=i), (t,))
        return None


def _splits(v, guard):
    from ._vec import count_decompositions, decompositions

    n = count_decompositions(v)
    if n > guard:
        raise CombinatorialLimit(f"{n} decompositions of {v} exceed guard {guard}")
    return decompositions(v)


def _pad_chain(kind):
    def pad(cfg, v, tree):
        if tuple(cfg.vector) == tuple(v):
            return tree
        return _reduce.lower_with(kind, cfg.state, tuple(cfg.vector), tuple(v), tree)
    return pad


def _run_search(inst, height_cap, value_cap, le, pad, name, split_guard):
    limit = _sys.getrecursionlimit()
    _sys.setrecursionlimit(max(limit, 20000))
    s = _Search(inst, height_cap, value_cap, le, pad, split_guard)
    caps = (height_cap, value_cap)
    try:
        root = inst.root
        if _over(root, value_cap):
            return Decision("unknown", procedure=name, bounds_used=caps, diagnostics=["root exceeds value cap"])
        t = s.solve(root, height_cap)
    except CombinatorialLimit as e:
        return Decision("unknown", procedure=name, bounds_used=caps, diagnostics=[str(e)])
    finally:
        _sys.setrecursionlimit(limit)
    if t is not None:
        return Decision("yes", t, name, caps)
    if s.trunc_height or s.trunc_value:
        diag = (["height cap reached"] if s.trunc_height else []) + (["value cap reached"] if s.trunc_value else [])
        return Decision("unknown", procedure=name, bounds_used=caps, diagnostics=diag)
    return Decision("no", procedure=name, bounds_used=caps)


def decide_increasing(inst: Instance, height_cap: int = 12, value_cap: int | None = None,
                      split_guard: int = DEFAULT_SPLIT_GUARD) -> Decision:
    """Increasing reachability by pseudo-increasing search (no explicit increase steps).

    Success is closed downward under ``<=``; smaller configurations reuse a
    cached witness after a chain of increase steps.
    """
    if inst.semantics.mode != "increasing":
        raise ValueError("decide_increasing needs increasing semantics")
    if inst.root_condition != "exact":
        raise ValueError("decide_increasing needs an exact root")
    cap = value_cap if value_cap is not None else float("inf")
    if inst.semantics.pseudo:
        le = lambda a, b: tuple(a) == tuple(b)  # noqa: E731  (no free increases to pad with)
    else:
        le = vec_leq
    return _run_search(inst, height_cap, cap, le, _pad_chain("increase"), "increasing-search", split_guard)


def decide_expansive(inst: Instance, height_cap: int = 12, value_cap: int = 8,
                     split_guard: int = DEFAULT_SPLIT_GUARD) -> Decision:
    """Expansive reachability: explicit expansions, caches ordered by support-preserving ``<=``."""
    if inst.semantics.mode != "expansive":
        raise ValueError("decide_expansive needs expansive semantics")
    if inst.root_condition != "exact":
        raise ValueError("decide_expansive needs an exact root")
    return _run_search(inst, height_cap, value_cap, vec_sqsubseteq, _pad_chain("expand"),
                       "expansive-search", split_guard)


# ---------------------------------------------------------------- brute force

def brute_force(inst: Instance, height_cap: int = 8, value_cap: int = 8,
                split_guard: int = DEFAULT_SPLIT_GUARD) -> Decision:
    """Enumerate every tree within the caps; ``no`` means none fits the caps."""
    sys, sem = inst.system, inst.semantics
    memo: dict = {}

    def solve(cfg, h):
        key = (cfg, h)
        if key in memo:
            return memo[key]
        memo[key] = None
        res = None
        if inst.is_leaf(cfg):
            res = DeductionTree(cfg)
        else:
            for step, kids in enumerate_steps(sys, cfg, sem, value_cap, split_guard):
                if any(_over(k, value_cap) for k in kids):
                    continue
                cost = 0 if step.is_semantic else 1
                if cost > h:
                    continue
                subs = []
                for k in kids:
                    t = solve(k, h - cost)
                    if t is None:
                        break
                    subs.append(t)
                else:
                    res = DeductionTree(cfg, step, tuple(subs))
                    break
        memo[key] = res
        return res

    caps = (height_cap, value_cap)
    limit = _sys.getrecursionlimit()
    _sys.setrecursionlimit(max(limit, 20000))
    try:
        roots, _ = _roots(inst, value_cap)
        for r in roots:
            if _over(r, value_cap):
                continue
            t = solve(r, height_cap)
            if t is not None:
                return Decision("yes", t, "brute-force", caps)
    except CombinatorialLimit as e:
        return Decision("unknown", procedure="brute-force", bounds_used=caps, diagnostics=[str(e)])
    finally:
        _sys.setrecursionlimit(limit)
    return Decision("no", procedure="brute-force", bounds_used=caps)


# ---------------------------------------------------------------- dispatch

def decide(inst: Instance, procedure: str = "auto", height_cap: int | None = None,
           value_cap: int | None = None, want_witness: bool = True) -> Decision:
    mode = inst.semantics.mode
    if procedure == "auto":
        if mode == "lossy" or is_cover_form(inst):
            procedure = "antichain"
        elif mode == "increasing":
            return decide_increasing(inst, height_cap or 12, value_cap)
        elif mode == "expansive":
            return decide_expansive(inst, height_cap or 12, value_cap or 8)
        else:
            procedure = "bounded"
    if procedure == "antichain":
        return decide_lossy(inst, want_witness)
    if procedure == "bounded":
        return decide_bounded_height(inst, height_cap, value_cap)
    if procedure == "brute":
        return brute_force(inst, height_cap if height_cap is not None else 8,
                           value_cap if value_cap is not None else 8)
    raise ValueError(f"unknown procedure {procedure!r}")
