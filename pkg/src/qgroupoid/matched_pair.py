"""Relative matched pairs ``G = HK`` and the actions they carry.

With ``S = H ∩ K`` every ``g`` factors as ``h k`` in exactly ``|S|`` ways,
which gives well-defined maps onto the coset spaces ``H/S`` and ``K/S`` and
hence actions of ``K`` on ``H/S`` and of ``H`` on ``K/S``.  Choosing a
representative per coset (the sets ``I`` for ``K/S`` and ``J`` for ``H/S``)
lifts these to honest actions on ``K`` and ``H`` themselves.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .groups import (CosetSpace, FiniteGroup, PDoesNotDivideOrder, Subgroup,
                     coset_space, intersection, is_normal, normalizer, product_set,
                     sylow_subgroup)
from .report import Report


class NotARelativeMatchedPair(ValueError):
    pass


class InvalidRepresentativeSet(ValueError):
    pass


class NotNormal(ValueError):
    pass


def check_relative_matched_pair(G: FiniteGroup, H: Subgroup, K: Subgroup) -> bool:
    """True when every element of ``G`` is a product ``h k``."""
    return len(product_set(G, H.elements, K.elements)) == G.order


def _cosets(ambient: Subgroup, S: Subgroup, reps: Sequence[int] | None) -> CosetSpace:
    try:
        return coset_space(ambient, S, "left", reps)
    except ValueError as exc:
        raise InvalidRepresentativeSet(str(exc)) from exc


@dataclass(frozen=True)
class ActionTables:
    """Dense tables of the lifted actions and their complements.

    ``h k = act_HK[h, k] * comp_HK[h, k]`` and
    ``k h = act_KH[k, h] * comp_KH[k, h]``.
    """

    act_HK: dict
    comp_HK: dict
    act_KH: dict
    comp_KH: dict


class RelativeMatchedPair:
    """Subgroups ``H, K`` of ``G`` with ``G = HK``, plus representative sets.

    ``I`` lists one element of each left coset ``kS`` of ``K`` and ``J`` one
    element of each ``hS`` in ``H``.  Both default to the smallest id in each
    coset, which puts the identity in charge of ``S`` itself.
    """

    def __init__(self, G: FiniteGroup, H: Subgroup, K: Subgroup,
                 I: Sequence[int] | None = None, J: Sequence[int] | None = None):
        if H.parent is not G or K.parent is not G:
            raise ValueError("H and K must be subgroups of G")
        if not check_relative_matched_pair(G, H, K):
            raise NotARelativeMatchedPair(
                f"HK has {len(product_set(G, H.elements, K.elements))} elements, |G| = {G.order}")
        self.G, self.H, self.K = G, H, K
        self.S = intersection(H, K)
        self.K_cosets = _cosets(K, self.S, I)
        self.H_cosets = _cosets(H, self.S, J)
        self.I = tuple(sorted(self.K_cosets.representatives))
        self.J = tuple(sorted(self.H_cosets.representatives))
        t = G.table
        hk: list[list[tuple[int, int]]] = [[] for _ in range(G.order)]
        kh: list[list[tuple[int, int]]] = [[] for _ in range(G.order)]
        for h in H.elements:
            for k in K.elements:
                hk[t[h][k]].append((h, k))
                kh[t[k][h]].append((k, h))
        self._hk = hk
        self._kh = kh
        self._swapped: RelativeMatchedPair | None = None

    # -- basic data -----------------------------------------------------------

    def swapped(self) -> "RelativeMatchedPair":
        """The pair ``(K, H)`` with the roles of ``I`` and ``J`` exchanged."""
        if self._swapped is None:
            self._swapped = RelativeMatchedPair(self.G, self.K, self.H, self.J, self.I)
            self._swapped._swapped = self
        return self._swapped

    def with_representatives(self, I: Sequence[int] | None = None,
                             J: Sequence[int] | None = None) -> "RelativeMatchedPair":
        return RelativeMatchedPair(self.G, self.H, self.K,
                                   self.I if I is None else I, self.J if J is None else J)

    def factorizations(self, g: int) -> list[tuple[int, int]]:
        """All ``(h, k)`` with ``g = h k``."""
        return list(self._hk[g])

    def factorizations_prime(self, g: int) -> list[tuple[int, int]]:
        """All ``(k, h)`` with ``g = k h``."""
        return list(self._kh[g])

    def name(self, x: int) -> str:
        return self.G.name(x)

    def __repr__(self) -> str:
        return (f"RelativeMatchedPair(|G|={self.G.order}, |H|={self.H.order}, "
                f"|K|={self.K.order}, |S|={self.S.order})")

    # -- decomposition maps ---------------------------------------------------

    def p1(self, g: int) -> tuple[int, ...]:
        """The coset ``hS`` of ``H`` with ``g ∈ hK``."""
        h, _ = self._hk[g][0]
        return self.H_cosets.blocks[self.H_cosets.block_of(h)]

    def p2(self, g: int) -> tuple[int, ...]:
        """The coset ``Sk`` of ``K`` with ``g ∈ Hk``."""
        _, k = self._hk[g][0]
        t = self.G.table
        return tuple(sorted(t[s][k] for s in self.S.elements))

    def p1_prime(self, g: int) -> tuple[int, ...]:
        """The coset ``kS`` of ``K`` with ``g ∈ kH``."""
        k, _ = self._kh[g][0]
        return self.K_cosets.blocks[self.K_cosets.block_of(k)]

    def p2_prime(self, g: int) -> tuple[int, ...]:
        """The coset ``Sh`` of ``H`` with ``g ∈ Kh``."""
        _, h = self._kh[g][0]
        t = self.G.table
        return tuple(sorted(t[s][h] for s in self.S.elements))

    # -- coset actions --------------------------------------------------------

    def coset_action_K_on_H(self, k: int, coset: Sequence[int]) -> tuple[int, ...]:
        """``k ▷ hS = p1(k h)``."""
        return self.p1(self.G.table[k][coset[0]])

    def coset_action_H_on_K(self, h: int, coset: Sequence[int]) -> tuple[int, ...]:
        """``h ▷' kS = p1'(h k)``."""
        return self.p1_prime(self.G.table[h][coset[0]])

    # -- lifted actions -------------------------------------------------------

    def _lift_HK(self, h: int, k: int) -> int:
        G = self.G
        t = G.table
        ki = self.K_cosets.representative_of(k)
        s = t[G.inverse[ki]][k]
        c = self.p1_prime(t[h][ki])
        kj = self.K_cosets.representative_of(c[0])
        return t[kj][s]

    @cached_property
    def tables(self) -> ActionTables:
        G = self.G
        t, inv = G.table, G.inverse
        act_HK, comp_HK = {}, {}
        for h in self.H.elements:
            for k in self.K.elements:
                a = self._lift_HK(h, k)
                act_HK[h, k] = a
                comp_HK[h, k] = t[t[inv[a]][h]][k]
        other = self.swapped()
        act_KH, comp_KH = {}, {}
        for k in self.K.elements:
            for h in self.H.elements:
                a = other._lift_HK(k, h)
                act_KH[k, h] = a
                comp_KH[k, h] = t[t[inv[a]][k]][h]
        return ActionTables(act_HK, comp_HK, act_KH, comp_KH)

    def act_HK(self, h: int, k: int) -> int:
        """``h ▷'_I k``."""
        return self.tables.act_HK[h, k]

    def comp_HK(self, h: int, k: int) -> int:
        """``h ◁'_I k``."""
        return self.tables.comp_HK[h, k]

    def act_KH(self, k: int, h: int) -> int:
        """``k ▷_J h``."""
        return self.tables.act_KH[k, h]

    def comp_KH(self, k: int, h: int) -> int:
        """``k ◁_J h``."""
        return self.tables.comp_KH[k, h]

    def cocycle_kI(self, k: int, h: int) -> int:
        """``(h ▷'_I k)^-1 k``, an element of ``K``."""
        return self.G.table[self.G.inverse[self.act_HK(h, k)]][k]

    def cocycle_hJ(self, h: int, k: int) -> int:
        """``(k ▷_J h)^-1 h``, an element of ``H``."""
        return self.G.table[self.G.inverse[self.act_KH(k, h)]][h]


def build_action_tables(pair: RelativeMatchedPair) -> ActionTables:
    return pair.tables


def make_pair(G: FiniteGroup, H: Subgroup, K: Subgroup, I=None, J=None) -> RelativeMatchedPair:
    return RelativeMatchedPair(G, H, K, I, J)


# -- conjugacy across representative sets -------------------------------------

def action_conjugacy(pair: RelativeMatchedPair, I1: Sequence[int],
                     I2: Sequence[int]) -> dict[int, int]:
    """The bijection ``φ`` of ``K`` with ``φ(k1 s) = k2 s`` whenever ``k1 ∈ I1``
    and ``k2 ∈ I2`` represent the same coset."""
    C1 = _cosets(pair.K, pair.S, I1)
    C2 = _cosets(pair.K, pair.S, I2)
    t, inv = pair.G.table, pair.G.inverse
    phi = {}
    for k in pair.K.elements:
        k1 = C1.representative_of(k)
        k2 = C2.representative_of(k)
        phi[k] = t[k2][t[inv[k1]][k]]
    return phi


def verify_action_conjugacy(pair: RelativeMatchedPair, I1: Sequence[int],
                            I2: Sequence[int]) -> Report:
    """``φ(h ▷'_{I1} k) = h ▷'_{I2} φ(k)`` for all ``h, k``."""
    phi = action_conjugacy(pair, I1, I2)
    A = pair.with_representatives(I=I1)
    B = pair.with_representatives(I=I2)
    rep = Report()
    rep.add("phi is a bijection of K", sorted(phi.values()) == list(pair.K.elements))
    bad = next(((h, k) for h in pair.H.elements for k in pair.K.elements
                if phi[A.act_HK(h, k)] != B.act_HK(h, phi[k])), None)
    rep.add("phi intertwines the lifted actions", bad is None, bad)
    return rep


# -- verification ---------------------------------------------------------

def _first(it):
    return next(iter(it), None)


def verify_pair(pair: RelativeMatchedPair) -> Report:
    """Factorization uniqueness, coset maps and coset actions."""
    G, H, K, S = pair.G, pair.H, pair.K, pair.S
    t = G.table
    rep = Report()
    rep.add("G = HK", check_relative_matched_pair(G, H, K))
    bad = _first(g for g in G.elements if len(pair.factorizations(g)) != S.order)
    rep.add("each g factors as hk in exactly |S| ways", bad is None, bad)
    bad = _first(g for g in G.elements if len(pair.factorizations_prime(g)) != S.order)
    rep.add("each g factors as kh in exactly |S| ways", bad is None, bad)
    Kset = set(K.elements)
    Hset = set(H.elements)
    bad = _first((g, x) for g in G.elements for x in G.elements
                 if (pair.p1(g) == pair.p1(x)) != (t[G.inverse[g]][x] in Kset))
    rep.add("p1(g) = p1(g') iff g' in gK", bad is None, bad)
    bad = _first((g, x) for g in G.elements for x in G.elements
                 if (pair.p1_prime(g) == pair.p1_prime(x)) != (t[G.inverse[g]][x] in Hset))
    rep.add("p1'(g) = p1'(g') iff g' in gH", bad is None, bad)

    Hc, Kc = pair.H_cosets.blocks, pair.K_cosets.blocks
    bad = _first((k, k2, c) for k in K.elements for k2 in K.elements for c in Hc
                 if pair.coset_action_K_on_H(t[k][k2], c)
                 != pair.coset_action_K_on_H(k, pair.coset_action_K_on_H(k2, c)))
    rep.add("K acts on H/S", bad is None and all(pair.coset_action_K_on_H(0, c) == c for c in Hc), bad)
    bad = _first((h, h2, c) for h in H.elements for h2 in H.elements for c in Kc
                 if pair.coset_action_H_on_K(t[h][h2], c)
                 != pair.coset_action_H_on_K(h, pair.coset_action_H_on_K(h2, c)))
    rep.add("H acts on K/S", bad is None and all(pair.coset_action_H_on_K(0, c) == c for c in Kc), bad)
    return rep


def verify_action_tables(pair: RelativeMatchedPair) -> Report:
    """Every law the lifted actions are meant to satisfy."""
    G, H, K, S = pair.G, pair.H, pair.K, pair.S
    t = G.table
    T = pair.tables
    rep = Report()
    HK = [(h, k) for h in H.elements for k in K.elements]
    rep.add("factorization hk", _first((h, k) for h, k in HK
                                       if t[T.act_HK[h, k]][T.comp_HK[h, k]] != t[h][k]) is None)
    rep.add("factorization kh", _first((k, h) for h, k in HK
                                       if t[T.act_KH[k, h]][T.comp_KH[k, h]] != t[k][h]) is None)
    rep.add("act_HK lands in K, comp_HK in H",
            all(T.act_HK[h, k] in K and T.comp_HK[h, k] in H for h, k in HK))
    rep.add("act_KH lands in H, comp_KH in K",
            all(T.act_KH[k, h] in H and T.comp_KH[k, h] in K for h, k in HK))
    bad = _first((h, h2, k) for h in H.elements for h2 in H.elements for k in K.elements
                 if T.act_HK[t[h][h2], k] != T.act_HK[h, T.act_HK[h2, k]])
    rep.add("act_HK is an H-action on K",
            bad is None and all(T.act_HK[0, k] == k for k in K.elements), bad)
    bad = _first((k, k2, h) for k in K.elements for k2 in K.elements for h in H.elements
                 if T.act_KH[t[k][k2], h] != T.act_KH[k, T.act_KH[k2, h]])
    rep.add("act_KH is a K-action on H",
            bad is None and all(T.act_KH[0, h] == h for h in H.elements), bad)
    bad = _first((h, k, s) for h, k in HK for s in S.elements
                 if T.act_HK[h, t[k][s]] != t[T.act_HK[h, k]][s])
    rep.add("act_HK(h, ks) = act_HK(h, k) s", bad is None, bad)
    bad = _first((h, s) for h in H.elements for s in S.elements if T.act_HK[h, s] != s)
    rep.add("act_HK(h, s) = s", bad is None, bad)
    bad = _first((k, h, s) for h, k in HK for s in S.elements
                 if T.act_KH[k, t[h][s]] != t[T.act_KH[k, h]][s])
    rep.add("act_KH(k, hs) = act_KH(k, h) s", bad is None, bad)
    bad = _first((k, s) for k in K.elements for s in S.elements if T.act_KH[k, s] != s)
    rep.add("act_KH(k, s) = s", bad is None, bad)
    Iset = set(pair.I)
    bad = _first((h, ki) for h in H.elements for ki in pair.I
                 if T.act_HK[h, ki] not in Iset
                 or T.act_HK[h, ki] not in pair.coset_action_H_on_K(h, pair.p1_prime(ki)))
    rep.add("act_HK on I agrees with the coset action", bad is None, bad)
    if S.order == 1:
        bad = _first((h, k, k2) for h in H.elements for k in K.elements for k2 in K.elements
                     if T.comp_HK[h, t[k][k2]] != T.comp_HK[T.comp_HK[h, k], k2])
        rep.add("comp_HK is a right action (|S| = 1)",
                bad is None and all(T.comp_HK[h, 0] == h for h in H.elements), bad)
    return rep


def verify_cocycles(pair: RelativeMatchedPair) -> Report:
    """Composition identities of the two cocycles.

    The first identity for ``cocycle_hJ`` holds with ``k' k`` on the right;
    the ``k k'`` variant is reported for information only.
    """
    G, H, K = pair.G, pair.H, pair.K
    t = G.table
    T = pair.tables
    kI, hJ = pair.cocycle_kI, pair.cocycle_hJ
    rep = Report()
    bad = _first((h, h2, k) for h in H.elements for h2 in H.elements for k in K.elements
                 if t[kI(T.act_HK[h2, k], h)][kI(k, h2)] != kI(k, t[h][h2]))
    rep.add("cocycle_kI composition identity", bad is None, bad)
    triples = [(h, k, k2) for h in H.elements for k in K.elements for k2 in K.elements]
    bad = _first((h, k, k2) for h, k, k2 in triples
                 if t[hJ(T.act_KH[k, h], k2)][hJ(h, k)] != hJ(h, t[k2][k]))
    rep.add("cocycle_hJ composition identity", bad is None, bad)
    bad = _first((h, k, k2) for h, k, k2 in triples
                 if t[hJ(T.act_KH[k, h], k2)][hJ(h, k)] != hJ(h, t[k][k2]))
    rep.add("cocycle_hJ identity with kk' order", bad is None, bad, diagnostic=True)
    bad = _first((h, k, k2) for h, k, k2 in triples
                 if t[T.comp_KH[k2, T.act_KH[k, h]]][T.comp_KH[k, h]] != T.comp_KH[t[k2][k], h])
    rep.add("comp_KH composition identity", bad is None, bad)
    return rep


# -- Frattini factory ---------------------------------------------------------

def frattini_pair(G: FiniteGroup, N: Subgroup, p: int) -> RelativeMatchedPair:
    """``(N, N_G(P))`` for a Sylow ``p``-subgroup ``P`` of the normal subgroup
    ``N``; the Frattini argument makes this a relative matched pair."""
    if not is_normal(G, N):
        raise NotNormal("N is not normal in G")
    if N.order % p:
        raise PDoesNotDivideOrder(f"{p} does not divide |N| = {N.order}")
    P = sylow_subgroup(G, p, within=N)
    return RelativeMatchedPair(G, N, normalizer(G, P))
