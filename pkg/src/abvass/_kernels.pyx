# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernels_py``.

Vectors are tuples of Python ints, so bignum gadget constants keep
working; the speedup comes from typed loops over the tuple slots.
"""

from itertools import product


def vec_add(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    return tuple([a[i] + b[i] for i in range(n)])


def vec_sub(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    return tuple([a[i] - b[i] for i in range(n)])


def vec_meet(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    return tuple([a[i] if a[i] < b[i] else b[i] for i in range(n)])


def vec_join(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    return tuple([a[i] if a[i] > b[i] else b[i] for i in range(n)])


cdef inline bint _leq(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if a[i] > b[i]:
            return False
    return True


def vec_leq(tuple a, tuple b):
    return _leq(a, b)


def vec_sqsubseteq(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        x = a[i]
        y = b[i]
        if x > y or (x == 0) != (y == 0):
            return False
    return True


def is_nonneg(tuple a):
    for x in a:
        if x < 0:
            return False
    return True


def dominates_some(list elems, tuple v):
    cdef tuple m
    for m in elems:
        if _leq(m, v):
            return True
    return False


def antichain_insert(list elems, tuple v):
    cdef tuple m
    cdef list kept = []
    for m in elems:
        if _leq(m, v):
            return None
    for m in elems:
        if not _leq(v, m):
            kept.append(m)
    kept.append(v)
    return kept


def count_decompositions(tuple v):
    n = 1
    for x in v:
        n *= x + 1
    return n


def decompositions(tuple v):
    cdef list out = []
    cdef Py_ssize_t i, n = len(v)
    cdef tuple left
    for left in product(*[range(x + 1) for x in v]):
        out.append((left, tuple([v[i] - left[i] for i in range(n)])))
    return out
