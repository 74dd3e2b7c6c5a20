# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled structural kernel on flat preorder encodings.

Same contract as _splits_py (the pure twin): preorder parent arrays in,
tuples out, so results intern and hash identically whichever backend is
active. The loops are typed and allocation is one scratch block per call.
"""

from libc.stdlib cimport free, malloc

__all__ = ["postorder_indices", "restrict_parents", "biideal_splits"]


cdef int* _as_ints(object seq, Py_ssize_t n) except NULL:
    cdef int* buf = <int*> malloc(n * sizeof(int) if n else sizeof(int))
    if buf is NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = seq[i]
    return buf


def postorder_indices(parents):
    """Left-to-right postorder listing of preorder indices."""
    cdef Py_ssize_t n = len(parents)
    if n == 0:
        return ()
    cdef int* par = _as_ints(parents, n)
    # first_child/next_sib encode the children lists; preorder input means
    # appending preserves sibling order, done here with last_child cursors
    cdef int* first_child = <int*> malloc(4 * n * sizeof(int))
    if first_child is NULL:
        free(par)
        raise MemoryError()
    cdef int* last_child = first_child + n
    cdef int* next_sib = first_child + 2 * n
    cdef int* stack = first_child + 3 * n
    cdef Py_ssize_t i
    cdef int p, v, top
    for i in range(n):
        first_child[i] = -1
        last_child[i] = -1
        next_sib[i] = -1
    for i in range(n):
        p = par[i]
        if p >= 0:
            if first_child[p] < 0:
                first_child[p] = <int> i
            else:
                next_sib[last_child[p]] = <int> i
            last_child[p] = <int> i
    out = []
    # iterative postorder: push a root, sink to leftmost leaf, emit on the
    # way back up through next_sib links
    for i in range(n):
        if par[i] >= 0:
            continue
        top = 0
        stack[0] = <int> i
        while top >= 0:
            v = stack[top]
            if first_child[v] >= 0:
                top += 1
                stack[top] = first_child[v]
                first_child[v] = -2 - first_child[v]  # mark expanded
                continue
            if first_child[v] < -1:
                first_child[v] = -2 - first_child[v]  # restore, children done
            out.append(v)
            top -= 1
            if next_sib[v] >= 0:
                top += 1
                stack[top] = next_sib[v]
    free(first_child)
    free(par)
    return tuple(out)


def restrict_parents(parents, keep):
    """Parent array of the restriction to keep (ascending preorder indices).

    Entry j is the position within keep of the nearest kept strict ancestor
    of keep[j], or -1 when every strict ancestor was deleted.
    """
    cdef Py_ssize_t n = len(parents)
    cdef Py_ssize_t m = len(keep)
    if m == 0:
        return ()
    cdef int* par = _as_ints(parents, n) if n else NULL
    cdef int* pos = <int*> malloc(n * sizeof(int) if n else sizeof(int))
    if pos is NULL:
        free(par)
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef int p
    for i in range(n):
        pos[i] = -1
    for j in range(m):
        pos[<Py_ssize_t> keep[j]] = <int> j
    out = []
    for j in range(m):
        p = par[<Py_ssize_t> keep[j]]
        while p >= 0 and pos[p] < 0:
            p = par[p]
        out.append(pos[p] if p >= 0 else -1)
    free(pos)
    free(par)
    return tuple(out)


def biideal_splits(parents, post):
    """Restriction encodings along the biideal chain; see the pure twin."""
    cdef Py_ssize_t n = len(parents)
    cdef Py_ssize_t k
    out = []
    for k in range(n + 1):
        ki = tuple(sorted(post[:k]))
        kj = tuple(sorted(post[k:]))
        out.append((ki, restrict_parents(parents, ki),
                    kj, restrict_parents(parents, kj)))
    return out
