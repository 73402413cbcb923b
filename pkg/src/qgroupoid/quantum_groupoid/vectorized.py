"""Array versions of the two costliest coproduct checks.

Coassociativity and the antipode identity expand ``Γ`` twice, so their cost
grows like ``dim * |Γ(x)|^2``.  For algebras whose products are single basis
vectors and whose scaled coproduct, antipode and unit have integer
coefficients, the expansion is done here on integer arrays: each side
becomes a list of encoded basis keys with coefficients, and the check
passes when the difference sums to zero on every key.  The results agree
with the dictionary loops in :mod:`weak_hopf`, which remain the reference
and handle every other algebra.
"""
from __future__ import annotations

from typing import Iterator, Mapping, Sequence

import numpy as np

from ..tables import dense_table

#: four indices below this bound pack into one int64 key
MAX_DIM = 50_000
#: rough number of expanded terms held in memory at once
CHUNK = 4_000_000
#: coefficients (and the scale) stay below this, so products of three and
#: their sums cannot overflow int64
INT_BOUND = 1 << 12


def _ints(values) -> bool:
    return all(isinstance(c, int) and abs(c) < INT_BOUND for c in values)


class MonomialArrays:
    """Integer array form of a monomial algebra with a scaled coproduct."""

    def __init__(self, n: int, product: np.ndarray, ptr: np.ndarray, leg1: np.ndarray,
                 leg2: np.ndarray, coef: np.ndarray, antipode: np.ndarray, antipode_coef: np.ndarray):
        self.n = n
        self.product = product
        self.ptr = ptr
        self.leg1 = leg1
        self.leg2 = leg2
        self.coef = coef
        self.antipode = antipode
        self.antipode_coef = antipode_coef
        self.count = np.diff(ptr)
        self.owner = np.repeat(np.arange(n, dtype=np.int64), self.count)

    @classmethod
    def build(cls, A, C: list[Mapping], antipode: list[Mapping]) -> "MonomialArrays | None":
        """Arrays for algebra ``A``, integer coproduct ``C`` and ``antipode``;
        None when the structure does not have the required shape."""
        n = A.dim
        mono = A.monomial_table
        if mono is None or n > MAX_DIM:
            return None
        if any(len(v) != 1 or not _ints(v.values()) for v in antipode):
            return None
        if not all(_ints(g.values()) for g in C):
            return None
        product = dense_table(mono)
        sizes = [len(g) for g in C]
        ptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(sizes, out=ptr[1:])
        leg1 = np.fromiter((a for g in C for a, _ in g), dtype=np.int64, count=int(ptr[-1]))
        leg2 = np.fromiter((b for g in C for _, b in g), dtype=np.int64, count=int(ptr[-1]))
        coef = np.fromiter((c for g in C for c in g.values()), dtype=np.int64, count=int(ptr[-1]))
        kap = np.array([next(iter(v)) for v in antipode], dtype=np.int64)
        kc = np.array([next(iter(v.values())) for v in antipode], dtype=np.int64)
        return cls(n, product, ptr, leg1, leg2, coef, kap, kc)

    # -- helpers --------------------------------------------------------------

    def _chunks(self, per_term: np.ndarray, per_vector: int = 0,
                xs: Sequence[int] | None = None) -> Iterator[tuple[np.ndarray, np.ndarray]]:
        """Groups of basis vectors (with their coproduct terms) whose
        expansions fit in one chunk."""
        sizes = np.bincount(self.owner, weights=per_term, minlength=self.n) + per_vector
        group: list[int] = []
        acc = 0.0
        for x in (range(self.n) if xs is None else xs):
            group.append(x)
            acc += sizes[x]
            if acc >= CHUNK:
                yield self._group(group)
                group, acc = [], 0.0
        if group:
            yield self._group(group)

    def _group(self, xs: list[int]) -> tuple[np.ndarray, np.ndarray]:
        xa = np.array(xs, dtype=np.int64)
        cnt = self.count[xa]
        offsets = np.arange(int(cnt.sum()), dtype=np.int64) - np.repeat(np.cumsum(cnt) - cnt, cnt)
        return xa, np.repeat(self.ptr[xa], cnt) + offsets

    def _expand(self, terms: np.ndarray, via: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Pair each term with every term of ``Γ(via[term])``."""
        heads = via[terms]
        cnt = self.count[heads]
        total = int(cnt.sum())
        rep = np.repeat(terms, cnt)
        offsets = np.arange(total, dtype=np.int64) - np.repeat(np.cumsum(cnt) - cnt, cnt)
        sub = np.repeat(self.ptr[heads], cnt) + offsets
        return rep, sub

    def _key(self, *parts: np.ndarray) -> np.ndarray:
        key = parts[0].astype(np.int64)
        for p in parts[1:]:
            key = key * self.n + p
        return key

    # -- checks ---------------------------------------------------------------

    def coassociativity_witness(self, xs: Sequence[int] | None = None) -> int | None:
        """First basis vector (of ``xs``, default all) on which ``(Γ⊗i)Γ``
        and ``(i⊗Γ)Γ`` differ."""
        L1, L2, V = self.leg1, self.leg2, self.coef
        per_term = (self.count[L1] + self.count[L2]).astype(float)
        for _, terms in self._chunks(per_term, xs=xs):
            rep, sub = self._expand(terms, L1)
            left = self._key(self.owner[rep], L1[sub], L2[sub], L2[rep])
            lv = V[rep] * V[sub]
            rep, sub = self._expand(terms, L2)
            right = self._key(self.owner[rep], L1[rep], L1[sub], L2[sub])
            rv = V[rep] * V[sub]
            bad = _residual(np.concatenate([left, right]), np.concatenate([lv, -rv]))
            if bad.size:
                return int(bad.min() // self.n ** 3)
        return None

    def antipode_identity_witness(self, scale: int, unit_coproduct: Mapping) -> int | None:
        """First ``x`` with ``κ(x_(1)) x_(2) ⊗ x_(3) != (1⊗x)Γ(1)``, where
        ``unit_coproduct`` is the scaled ``Γ(1)`` and both sides carry the
        factor ``scale^2``."""
        L1, L2, V = self.leg1, self.leg2, self.coef
        P = self.product
        gp = np.fromiter((p for p, _ in unit_coproduct), dtype=np.int64)
        gr = np.fromiter((r for _, r in unit_coproduct), dtype=np.int64)
        gc = np.fromiter(unit_coproduct.values(), dtype=np.int64) * scale
        for xs, terms in self._chunks(self.count[L1].astype(float), len(gp)):
            rep, sub = self._expand(terms, L1)
            u = L1[sub]
            w = P[self.antipode[u], L2[sub]]
            keep = w >= 0
            rep, sub, w = rep[keep], sub[keep], w[keep]
            lhs = self._key(self.owner[rep], w, L2[rep])
            lv = V[rep] * V[sub] * self.antipode_coef[L1[sub]]
            xr = P[xs[:, None], gr[None, :]]
            rows, cols = np.nonzero(xr >= 0)
            rhs = self._key(xs[rows], gp[cols], xr[rows, cols])
            rv = gc[cols]
            bad = _residual(np.concatenate([lhs, rhs]), np.concatenate([lv, -rv]))
            if bad.size:
                return int(bad.min() // self.n ** 2)
        return None


def _residual(keys: np.ndarray, vals: np.ndarray) -> np.ndarray:
    """Keys whose summed coefficient is nonzero."""
    if keys.size == 0:
        return keys
    order = np.argsort(keys)
    k, v = keys[order], vals[order]
    first = np.flatnonzero(np.r_[True, k[1:] != k[:-1]])
    sums = np.add.reduceat(v, first)
    return k[first][sums != 0]
