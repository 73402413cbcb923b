"""Dense integer tables for partial products on a finite basis.

A table ``P`` has ``P[a, c] = u`` when ``a c = u`` and ``-1`` when the
product is undefined (or zero).  Labels ``R``, ``L`` describe when products
exist: ``a c`` is defined exactly when ``R[a] == L[c]``.  Groupoids and
groupoid-like algebras admit such labels, and they make an exhaustive
associativity check cheap.
"""
from __future__ import annotations

from collections import defaultdict
from typing import Mapping, Sequence

import numpy as np


def dense_table(rows: Sequence[Mapping[int, int]]) -> np.ndarray:
    """``rows[a][c] = u`` as an ``n x n`` array, ``-1`` where absent."""
    n = len(rows)
    P = np.full((n, n), -1, dtype=np.int64)
    for a, row in enumerate(rows):
        if row:
            P[a, list(row)] = list(row.values())
    return P


def _triple_ok(P: np.ndarray, i: int, j: int, k: int) -> bool:
    ij, jk = P[i, j], P[j, k]
    lhs = P[ij, k] if ij >= 0 else -1
    rhs = P[i, jk] if jk >= 0 else -1
    return lhs == rhs


def associativity_witness(P: np.ndarray, R: Sequence[int], L: Sequence[int]) -> tuple | None:
    """First triple ``(i, j, k)`` with ``(ij)k != i(jk)``, counting "only one
    side defined" as a disagreement; None when the table is associative.

    Every triple with a defined side is covered: blocks of ``j`` sharing a
    right label are compared against all their partners ``k`` at once, and
    the few pairs whose product changes label are searched separately (for
    an associative table there are none)."""
    n = P.shape[0]
    R = np.asarray(R, dtype=np.int64)
    L = np.asarray(L, dtype=np.int64)
    a_idx, c_idx = np.nonzero(P >= 0)
    u = P[a_idx, c_idx]
    right_of: dict = defaultdict(list)   # label -> k with L[k] == label
    for k, lab in enumerate(L.tolist()):
        right_of[lab].append(k)
    left_of: dict = defaultdict(list)    # label -> i with R[i] == label
    for i, lab in enumerate(R.tolist()):
        left_of[lab].append(i)

    # (ac)k defined but ck not, or the reverse
    for t in np.flatnonzero(R[u] != R[c_idx]):
        a, c, w = int(a_idx[t]), int(c_idx[t]), int(u[t])
        for k in set(right_of[int(R[w])]) ^ set(right_of[int(R[c])]):
            if not _triple_ok(P, a, c, k):
                return a, c, k
    # i(jk) defined but ij not, or the reverse
    for t in np.flatnonzero(L[u] != L[a_idx]):
        j, k, w = int(a_idx[t]), int(c_idx[t]), int(u[t])
        for i in set(left_of[int(L[w])]) ^ set(left_of[int(L[j])]):
            if not _triple_ok(P, i, j, k):
                return i, j, k

    partners = {lab: np.array(ks, dtype=np.int64) for lab, ks in right_of.items()}
    for i in range(n):
        J = np.flatnonzero(P[i] >= 0)
        if not J.size:
            continue
        labels = R[J]
        for lab in np.unique(labels):
            K = partners.get(int(lab))
            if K is None:
                continue
            Jg = J[labels == lab]
            left_side = P[P[i, Jg][:, None], K[None, :]]
            jk = P[Jg[:, None], K[None, :]]
            right_side = np.where(jk >= 0, P[i, np.maximum(jk, 0)], -1)
            diff = np.argwhere(left_side != right_side)
            if diff.size:
                a, b = diff[0]
                return i, int(Jg[a]), int(K[b])
    return None
