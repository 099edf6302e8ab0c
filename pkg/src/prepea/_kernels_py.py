"""Pure-Python kernels; reference semantics for the compiled ``_kernels`` module.

Array arguments use ``-1`` for an undefined cell, matching the compiled
version.  The ``*_ok`` predicates take ``None``-sentinel rows and are the
single-instance evaluators used for witness re-checks.
"""

from __future__ import annotations

from itertools import product

import numpy as np


def _rows(arr) -> list[list]:
    return [[None if v < 0 else int(v) for v in row] for row in np.asarray(arr).tolist()]


def assoc_ok(p, a: int, b: int, c: int) -> bool:
    """``a+b`` and ``(a+b)+c`` defined iff ``b+c`` and ``a+(b+c)`` defined, and equal."""
    ab = p[a][b]
    lhs = None if ab is None else p[ab][c]
    bc = p[b][c]
    rhs = None if bc is None else p[a][bc]
    return lhs == rhs


def residuation_ok(p, m, leq, a: int, b: int, c: int, right: bool) -> bool:
    """One instance of the residuation law tying a minus table ``m`` to ``p``.

    ``right=True``: ``a\\b >= c`` iff ``c+b <= a``, and ``(a\\b)\\c = a\\(c+b)``.
    ``right=False``: ``a/b >= c`` iff ``b+c <= a``, and ``(a/b)/c = a/(b+c)``.
    """
    d = m[a][b]
    s = p[c][b] if right else p[b][c]
    lhs = d is not None and leq[c][d]
    rhs = s is not None and leq[s][a]
    if lhs != rhs:
        return False
    if d is not None and s is not None:
        x, y = m[d][c], m[a][s]
        if x is not None and y is not None and x != y:
            return False
    return True


def assoc_scan(plus):
    p = _rows(plus)
    n = len(p)
    for a, b, c in product(range(n), repeat=3):
        if not assoc_ok(p, a, b, c):
            return (a, b, c)
    return None


def residuation_scan(plus, minus, leq, right: bool):
    p, m = _rows(plus), _rows(minus)
    rel = np.asarray(leq).astype(bool).tolist()
    n = len(p)
    for a, b, c in product(range(n), repeat=3):
        if not residuation_ok(p, m, rel, a, b, c, right):
            return (a, b, c)
    return None


def min_encoding(tables, maps, rels, perms):
    """Index of the permutation giving the lexicographically least encoding.

    ``perms[i][old] = new``.  Under ``p`` with inverse ``q`` the encoding is,
    in order: every table cell ``T[q x][q y]`` written as ``p[v] + 1`` (``0``
    when undefined), every map entry ``p[M[q x]]``, every relation bit
    ``R[q x][q y]``.
    """
    tabs = np.asarray(tables).tolist()
    mps = np.asarray(maps).tolist()
    rls = np.asarray(rels).tolist()
    best_i, best = -1, None
    for i, perm in enumerate(np.asarray(perms).tolist()):
        n = len(perm)
        q = [0] * n
        for old, new in enumerate(perm):
            q[new] = old
        code = []
        for t in tabs:
            for x in range(n):
                row = t[q[x]]
                for y in range(n):
                    v = row[q[y]]
                    code.append(0 if v < 0 else perm[v] + 1)
        for mp in mps:
            for x in range(n):
                code.append(perm[mp[q[x]]])
        for r in rls:
            for x in range(n):
                row = r[q[x]]
                for y in range(n):
                    code.append(1 if row[q[y]] else 0)
        if best is None or code < best:
            best, best_i = code, i
    return best_i, bytes(best or [])
