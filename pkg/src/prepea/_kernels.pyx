# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels.  Semantics are defined by ``_kernels_py``."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef inline bint _assoc_ok(const int[:, :] p, int a, int b, int c) noexcept nogil:
    cdef int ab = p[a, b]
    cdef int bc = p[b, c]
    cdef int lhs = -1
    cdef int rhs = -1
    if ab >= 0:
        lhs = p[ab, c]
    if bc >= 0:
        rhs = p[a, bc]
    return lhs == rhs


def assoc_scan(plus):
    cdef const int[:, :] p = np.ascontiguousarray(plus, dtype=np.int32)
    cdef int n = p.shape[0]
    cdef int a, b, c
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if not _assoc_ok(p, a, b, c):
                    return (a, b, c)
    return None


def residuation_scan(plus, minus, leq, bint right):
    cdef const int[:, :] p = np.ascontiguousarray(plus, dtype=np.int32)
    cdef const int[:, :] m = np.ascontiguousarray(minus, dtype=np.int32)
    cdef const unsigned char[:, :] le = np.ascontiguousarray(leq, dtype=np.uint8)
    cdef int n = p.shape[0]
    cdef int a, b, c, d, s, x, y
    cdef bint lhs, rhs
    for a in range(n):
        for b in range(n):
            d = m[a, b]
            for c in range(n):
                if right:
                    s = p[c, b]
                else:
                    s = p[b, c]
                lhs = d >= 0 and le[c, d]
                rhs = s >= 0 and le[s, a]
                if lhs != rhs:
                    return (a, b, c)
                if d >= 0 and s >= 0:
                    x = m[d, c]
                    y = m[a, s]
                    if x >= 0 and y >= 0 and x != y:
                        return (a, b, c)
    return None


def min_encoding(tables, maps, rels, perms):
    cdef const int[:, :, :] T = np.ascontiguousarray(tables, dtype=np.int32)
    cdef const int[:, :] M = np.ascontiguousarray(maps, dtype=np.int32)
    cdef const unsigned char[:, :, :] Rl = np.ascontiguousarray(rels, dtype=np.uint8)
    cdef const int[:, :] P = np.ascontiguousarray(perms, dtype=np.int32)
    cdef int nperm = P.shape[0]
    cdef int n = P.shape[1]
    cdef int nt = T.shape[0]
    cdef int nm = M.shape[0]
    cdef int nr = Rl.shape[0]
    cdef int length = nt * n * n + nm * n + nr * n * n
    cdef cnp.ndarray[cnp.int32_t, ndim=1] best_arr = np.full(max(length, 1), 1 << 30, dtype=np.int32)
    cdef int[:] best = best_arr
    cdef int[:] q = np.zeros(max(n, 1), dtype=np.int32)
    cdef int[:] cur = np.zeros(max(length, 1), dtype=np.int32)
    cdef int best_i = -1
    cdef int i, k, t, x, y, v, pos, cmp
    for i in range(nperm):
        for k in range(n):
            q[P[i, k]] = k
        # cmp: 0 equal so far, -1 already smaller, 1 already larger (abandon)
        cmp = 0
        pos = 0
        for t in range(nt):
            for x in range(n):
                for y in range(n):
                    v = T[t, q[x], q[y]]
                    v = 0 if v < 0 else P[i, v] + 1
                    if cmp == 0:
                        if v < best[pos]:
                            cmp = -1
                        elif v > best[pos]:
                            cmp = 1
                            break
                    cur[pos] = v
                    pos += 1
                if cmp == 1:
                    break
            if cmp == 1:
                break
        if cmp != 1:
            for t in range(nm):
                for x in range(n):
                    v = P[i, M[t, q[x]]]
                    if cmp == 0:
                        if v < best[pos]:
                            cmp = -1
                        elif v > best[pos]:
                            cmp = 1
                            break
                    cur[pos] = v
                    pos += 1
                if cmp == 1:
                    break
        if cmp != 1:
            for t in range(nr):
                for x in range(n):
                    for y in range(n):
                        v = Rl[t, q[x], q[y]]
                        if cmp == 0:
                            if v < best[pos]:
                                cmp = -1
                            elif v > best[pos]:
                                cmp = 1
                                break
                        cur[pos] = v
                        pos += 1
                    if cmp == 1:
                        break
                if cmp == 1:
                    break
        if cmp == -1 or best_i < 0:
            for k in range(length):
                best[k] = cur[k]
            best_i = i
    if length == 0:
        return best_i, b""
    return best_i, bytes(best_arr[:length].astype(np.uint8))
