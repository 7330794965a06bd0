# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitset kernels.

Same contract and same output order as ``_pybits``: int bitmasks come
in, get unpacked once into 64-bit word arrays, and the hot loops run in
C with hardware popcounts.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy

ctypedef unsigned long long u64

cdef extern from *:
    """
    #if defined(_MSC_VER)
    #  include <intrin.h>
       static __inline int gm_popcount64(unsigned long long x) { return (int)__popcnt64(x); }
    #else
       static inline int gm_popcount64(unsigned long long x) { return __builtin_popcountll(x); }
    #endif
    """
    int gm_popcount64(u64 x) nogil


cdef int _copy_words(object mask, u64 *dst, Py_ssize_t n_words) except -1:
    cdef bytes data = mask.to_bytes(n_words * 8, "little")
    if n_words:
        memcpy(dst, <const char *>data, n_words * 8)
    return 0


cdef tuple _prefix_tuple(int *prefix, Py_ssize_t n):
    cdef list out = []
    cdef Py_ssize_t i
    for i in range(n):
        out.append(prefix[i])
    return tuple(out)


cdef int _visit(u64 *cols, Py_ssize_t w, Py_ssize_t minsup,
                u64 *tid, int *cand, Py_ssize_t n_cand,
                int *prefix, Py_ssize_t depth, list out) except -1:
    cdef u64 *child_tids
    cdef int *kept
    cdef u64 *ct
    cdef u64 v
    cdef Py_ssize_t idx, wi, t, n_kept = 0
    cdef Py_ssize_t s
    cdef int j
    if n_cand == 0:
        return 0
    child_tids = <u64 *> malloc(n_cand * w * sizeof(u64))
    kept = <int *> malloc(n_cand * sizeof(int))
    if child_tids == NULL or kept == NULL:
        free(child_tids)
        free(kept)
        raise MemoryError()
    try:
        for idx in range(n_cand):
            j = cand[idx]
            ct = child_tids + n_kept * w
            s = 0
            for wi in range(w):
                v = tid[wi] & cols[j * w + wi]
                ct[wi] = v
                s += gm_popcount64(v)
            if s >= minsup:
                prefix[depth] = j
                out.append((_prefix_tuple(prefix, depth + 1), s))
                kept[n_kept] = j
                n_kept += 1
        for t in range(n_kept):
            prefix[depth] = kept[t]
            _visit(cols, w, minsup, child_tids + t * w, kept + t + 1, n_kept - t - 1,
                   prefix, depth + 1, out)
    finally:
        free(child_tids)
        free(kept)
    return 0


def mine_vertical(col_masks, n_objects, minsup):
    """All (itemset, support) pairs with support >= minsup; identical
    content and order to the pure-Python twin."""
    cdef Py_ssize_t m = len(col_masks)
    cdef Py_ssize_t n = n_objects
    cdef Py_ssize_t ms = minsup
    cdef Py_ssize_t w = (n + 63) // 64
    cdef list out = []
    if m == 0 or n == 0 or ms > n:
        return out
    cdef u64 *cols = <u64 *> malloc(m * w * sizeof(u64))
    cdef u64 *root = <u64 *> malloc(w * sizeof(u64))
    cdef int *cand = <int *> malloc(m * sizeof(int))
    cdef int *prefix = <int *> malloc(m * sizeof(int))
    if cols == NULL or root == NULL or cand == NULL or prefix == NULL:
        free(cols); free(root); free(cand); free(prefix)
        raise MemoryError()
    cdef Py_ssize_t j
    try:
        for j in range(m):
            _copy_words(col_masks[j], cols + j * w, w)
        # build the all-objects mask as a Python int: n may exceed C shift width
        _copy_words((1 << n_objects) - 1, root, w)
        for j in range(m):
            cand[j] = <int> j
        _visit(cols, w, ms, root, cand, m, prefix, 0, out)
    finally:
        free(cols); free(root); free(cand); free(prefix)
    return out


def count_containing_rows(row_masks, candidate_masks, n_attributes):
    """For each candidate attribute mask, how many rows contain it."""
    cdef Py_ssize_t n = len(row_masks)
    cdef Py_ssize_t k = len(candidate_masks)
    cdef Py_ssize_t m = n_attributes
    cdef Py_ssize_t w = (m + 63) // 64
    cdef list out = []
    if k == 0:
        return out
    if w == 0 or n == 0:
        # all masks are empty / there are no rows: containment is trivial
        return [n for _ in range(k)]
    cdef u64 *rows = <u64 *> malloc(n * w * sizeof(u64))
    cdef u64 *cands = <u64 *> malloc(k * w * sizeof(u64))
    if rows == NULL or cands == NULL:
        free(rows); free(cands)
        raise MemoryError()
    cdef Py_ssize_t i, c, wi, cnt
    cdef bint contained
    try:
        for i in range(n):
            _copy_words(row_masks[i], rows + i * w, w)
        for c in range(k):
            _copy_words(candidate_masks[c], cands + c * w, w)
        for c in range(k):
            cnt = 0
            for i in range(n):
                contained = True
                for wi in range(w):
                    if cands[c * w + wi] & ~rows[i * w + wi]:
                        contained = False
                        break
                if contained:
                    cnt += 1
            out.append(cnt)
    finally:
        free(rows); free(cands)
    return out
