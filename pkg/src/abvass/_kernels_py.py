"""Pure-Python vector kernels.

These are the hot loops of the decision procedures: componentwise order
tests, antichain maintenance and split enumeration.  ``_kernels.pyx``
mirrors this module function for function; ``abvass._vec`` picks one
at import time.
"""

from itertools import product


def vec_add(a, b):
    return tuple([x + y for x, y in zip(a, b)])


def vec_sub(a, b):
    return tuple([x - y for x, y in zip(a, b)])


def vec_meet(a, b):
    return tuple([x if x < y else y for x, y in zip(a, b)])


def vec_join(a, b):
    return tuple([x if x > y else y for x, y in zip(a, b)])


def vec_leq(a, b):
    """Componentwise ``a <= b``."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def vec_sqsubseteq(a, b):
    """``a <= b`` with equal supports."""
    for x, y in zip(a, b):
        if x > y or (x == 0) != (y == 0):
            return False
    return True


def is_nonneg(a):
    for x in a:
        if x < 0:
            return False
    return True


def dominates_some(elems, v):
    """True when some element of ``elems`` is ``<= v``."""
    for m in elems:
        if vec_leq(m, v):
            return True
    return False


def antichain_insert(elems, v):
    """Insert ``v`` into a list of pairwise-incomparable minimal vectors.

    Returns the new list, or ``None`` when ``v`` is already covered.
    """
    for m in elems:
        if vec_leq(m, v):
            return None
    kept = [m for m in elems if not vec_leq(v, m)]
    kept.append(v)
    return kept


def count_decompositions(v):
    n = 1
    for x in v:
        n *= x + 1
    return n


def decompositions(v):
    """All pairs ``(v1, v2)`` with ``v1 + v2 == v``, in lexicographic order of ``v1``."""
    out = []
    for left in product(*[range(x + 1) for x in v]):
        out.append((left, tuple([x - y for x, y in zip(v, left)])))
    return out
