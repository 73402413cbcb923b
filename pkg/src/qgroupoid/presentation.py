"""The double crossed product ``(C(K) ⋊ S) ⋊ H`` and its match with ``ℂT``.

Basis vectors are triples ``(h, k, s)`` standing for ``V_h χ_k ρ(s)``: ``V_h``
unitaries indexed by ``H``, ``χ_k`` minimal projections of ``C(K)`` and
``ρ(s)`` unitaries of ``S``.  The product and star are the closed forms

    (h, k, s)(h', k', s') = δ[ks = h ▷'_I k'] (hh', k's^-1, ss')
    (h, k, s)^*           = (h^-1, h ▷'_I (ks), s^-1)

and the generator relations are checked afterwards rather than imposed.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

from .double_groupoid import DoubleGroupoid, Square
from .linalg import add_into
from .matched_pair import RelativeMatchedPair, action_conjugacy
from .report import Report
from .star_algebra import LinearMap, StarAlgebra, verify_algebra, verify_isomorphism


@dataclass
class PresentedAlgebra:
    """``algebra`` has basis ``triples[i] = (h, k, s)``; ``side`` is ``"HK"``
    for ``(C(K) ⋊ S) ⋊ H`` and ``"KH"`` for the flipped ``(C(H) ⋊ S) ⋊ K``."""

    pair: RelativeMatchedPair
    side: str
    algebra: StarAlgebra
    triples: list[tuple[int, int, int]]
    index: dict[tuple[int, int, int], int]

    @cached_property
    def acting_pair(self) -> RelativeMatchedPair:
        """The pair whose first subgroup supplies the ``V`` unitaries."""
        return self.pair if self.side == "HK" else self.pair.swapped()

    def vector(self, h: int, k: int, s: int) -> dict:
        return {self.index[h, k, s]: 1}

    def chi(self, k: int) -> dict:
        return self.vector(0, k, 0)

    def rho(self, s: int) -> dict:
        return {self.index[0, k, s]: 1 for k in self.acting_pair.K.elements}

    def V(self, h: int) -> dict:
        return {self.index[h, k, 0]: 1 for k in self.acting_pair.K.elements}

    @cached_property
    def small(self) -> list[int]:
        """Indices spanning ``C(K) ⋊ S``, the triples with ``h = e``."""
        return [i for i, (h, _, _) in enumerate(self.triples) if h == 0]


def build_presented(pair: RelativeMatchedPair, side: str = "HK") -> PresentedAlgebra:
    if side not in ("HK", "KH"):
        raise ValueError("side must be 'HK' or 'KH'")
    P = pair if side == "HK" else pair.swapped()
    G = P.G
    t, inv = G.table, G.inverse
    act = P.tables.act_HK
    H, K, S = P.H.elements, P.K.elements, P.S.elements
    triples = [(h, k, s) for h in H for k in K for s in S]
    index = {x: i for i, x in enumerate(triples)}

    # (h, k, s) only multiplies with (h', k', s') where h' ▷' k' = ks
    by_target: dict[int, list[tuple[int, int]]] = {}
    for h2 in H:
        for k2 in K:
            by_target.setdefault(act[h2, k2], []).append((h2, k2))
    mult = {}
    for i, (h, k, s) in enumerate(triples):
        si = inv[s]
        for h2, k2 in by_target.get(t[k][s], ()):
            k3 = t[k2][si]
            for s2 in S:
                mult[i, index[h2, k2, s2]] = {index[t[h][h2], k3, t[s][s2]]: 1}
    star = [{index[inv[h], act[h, t[k][s]], inv[s]]: 1} for h, k, s in triples]
    unit = {index[0, k, 0]: 1 for k in K}
    n = G.name
    labels = [f"V({n(h)})·chi({n(k)})·rho({n(s)})" for h, k, s in triples]
    A = StarAlgebra(len(triples), mult, unit, star, labels)
    return PresentedAlgebra(pair, side, A, triples, index)


def verify_presented(B: PresentedAlgebra) -> Report:
    """Algebra axioms, dimension and the three generator relations
    ``ρ(s)χ_k = χ_{ks^-1}ρ(s)``, ``V_hχ_k = χ_{h ▷' k}V_h``, ``ρ(s)V_h = V_hρ(s)``."""
    P = B.acting_pair
    A = B.algebra
    t, inv = P.G.table, P.G.inverse
    H, K, S = P.H.elements, P.K.elements, P.S.elements
    rep = verify_algebra(A)
    rep.add("dimension |H||K||S|", A.dim == len(H) * len(K) * len(S), detail=f"dim {A.dim}")
    m = A.multiply
    bad = next(((s, k) for s in S for k in K
                if m(B.rho(s), B.chi(k)) != m(B.chi(t[k][inv[s]]), B.rho(s))), None)
    rep.add("rho(s) chi(k) = chi(k s^-1) rho(s)", bad is None, bad)
    bad = next(((h, k) for h in H for k in K
                if m(B.V(h), B.chi(k)) != m(B.chi(P.act_HK(h, k)), B.V(h))), None)
    rep.add("V(h) chi(k) = chi(h ▷' k) V(h)", bad is None, bad)
    bad = next(((s, h) for s in S for h in H
                if m(B.rho(s), B.V(h)) != m(B.V(h), B.rho(s))), None)
    rep.add("rho(s) V(h) = V(h) rho(s)", bad is None, bad)
    bad = next((h for h in H if m(B.V(h), A.star_of(B.V(h))) != A.unit), None)
    rep.add("V(h) is unitary", bad is None, bad)
    return rep


# -- the H-action on C(K) ⋊ S ---------------------------------------------------

def sigma_action(B: PresentedAlgebra, h: int, x: Mapping) -> dict:
    """``σ_h(ρ(s)χ_k) = ρ(s)χ_{h ▷' k}`` on vectors supported on ``h = e``.

    The basis triple ``(e, k, s)`` is ``ρ(s)χ_{ks}``, which moves to
    ``ρ(s)χ_{h ▷' (ks)} = (e, (h ▷' k) , s)``."""
    P = B.acting_pair
    t, inv = P.G.table, P.G.inverse
    out: dict = {}
    for i, c in x.items():
        e, k, s = B.triples[i]
        if e != 0:
            raise ValueError("sigma acts on the subalgebra spanned by triples with h = e")
        k2 = t[P.act_HK(h, t[k][s])][inv[s]]
        add_into(out, {B.index[0, k2, s]: 1}, c)
    return out


def verify_sigma(B: PresentedAlgebra) -> Report:
    """``σ`` is an action of ``H`` by *-automorphisms of ``C(K) ⋊ S``,
    implemented by conjugation with ``V_h``."""
    P = B.acting_pair
    A = B.algebra
    H = P.H.elements
    t = P.G.table
    small = B.small
    rep = Report()
    rep.add("sigma_e = id", all(sigma_action(B, 0, {i: 1}) == {i: 1} for i in small))
    bad = next(((h, h2, i) for h in H for h2 in H for i in small
                if sigma_action(B, h, sigma_action(B, h2, {i: 1}))
                != sigma_action(B, t[h][h2], {i: 1})), None)
    rep.add("sigma_h sigma_h' = sigma_hh'", bad is None, bad)
    bad = None
    for h in H:
        for i in small:
            si = sigma_action(B, h, {i: 1})
            if sigma_action(B, h, A.star[i]) != A.star_of(si):
                bad = (h, i)
                break
            for j in small:
                if sigma_action(B, h, A.basis_product(i, j)) != A.multiply(si, sigma_action(B, h, {j: 1})):
                    bad = (h, i, j)
                    break
            if bad:
                break
        if bad:
            break
    rep.add("sigma_h is a *-automorphism", bad is None, bad)
    bad = None
    for h in H:
        Vh = B.V(h)
        Vh_inv = A.star_of(Vh)
        for i in small:
            if A.multiply(A.multiply(Vh, {i: 1}), Vh_inv) != sigma_action(B, h, {i: 1}):
                bad = (h, i)
                break
        if bad:
            break
    rep.add("V(h) x V(h)^* = sigma_h(x)", bad is None, bad)
    return rep


def verify_sigma_conjugacy(pair: RelativeMatchedPair, I1, I2) -> Report:
    """With ``φ`` swapping representatives, ``Φ(ρ(s)χ_k) = ρ(s)χ_{φ(k)}``
    intertwines ``σ^{I1}`` and ``σ^{I2}``, and ``(h, k, s) ↦ (h, φ(k), s)``
    is a *-isomorphism between the two presented algebras."""
    phi = action_conjugacy(pair, I1, I2)
    B1 = build_presented(pair.with_representatives(I=I1))
    B2 = build_presented(pair.with_representatives(I=I2))
    t, inv = pair.G.table, pair.G.inverse

    def Phi(x: Mapping) -> dict:
        out: dict = {}
        for i, c in x.items():
            h, k, s = B1.triples[i]
            # (h, k, s) is V_h ρ(s) χ_{ks}; φ commutes with right S-translation
            add_into(out, {B2.index[h, t[phi[t[k][s]]][inv[s]], s]: 1}, c)
        return out

    rep = Report()
    bad = next(((h, i) for h in pair.H.elements for i in B1.small
                if Phi(sigma_action(B1, h, {i: 1})) != sigma_action(B2, h, Phi({i: 1}))), None)
    rep.add("Phi sigma^I1 = sigma^I2 Phi", bad is None, bad)
    f = LinearMap(B1.algebra, B2.algebra, [Phi({i: 1}) for i in range(B1.algebra.dim)])
    rep.extend(verify_isomorphism(f), prefix="presented algebras isomorphic: ")
    return rep


# -- the isomorphism onto the square algebra ------------------------------------

def triple_to_square(P: RelativeMatchedPair, h: int, k: int, s: int) -> Square:
    """``V_hχ_kρ(s) ↦ (h, ks, h ▷' k, (h ◁' k)s)``."""
    t = P.G.table
    return Square(h, t[k][s], P.act_HK(h, k), t[P.comp_HK(h, k)][s])


def square_isomorphism(B: PresentedAlgebra, target: StarAlgebra,
                       T: DoubleGroupoid | None = None) -> LinearMap:
    """The basis bijection from the presented algebra onto ``ℂT`` (or onto
    ``ℂT'`` for the flipped side)."""
    P = B.acting_pair
    T = T if T is not None else DoubleGroupoid(P, "T")
    images = [{T.index[triple_to_square(P, *x)]: 1} for x in B.triples]
    return LinearMap(B.algebra, target, images)


def theta_basis(f: LinearMap) -> list[dict]:
    """``θ_t`` for each square index ``t``: the preimage of ``t``."""
    theta: list = [None] * f.target.dim
    for i, im in enumerate(f.images):
        if len(im) != 1 or list(im.values()) != [1]:
            raise ValueError("map does not send basis vectors to basis vectors")
        (j,) = im
        theta[j] = {i: 1}
    if any(v is None for v in theta):
        raise ValueError("map is not onto the square basis")
    return theta


def verify_theta(B: PresentedAlgebra, theta: list[dict], T: DoubleGroupoid) -> Report:
    """``θ_t θ_t' = θ_{t ⋆ʰ t'}`` (zero when not composable),
    ``θ_t^* = θ_{t^-h}`` and ``Σ θ`` over horizontal units is 1."""
    A = B.algebra
    sq = T.squares
    rep = Report()
    bad = None
    mono = A.monomial_table
    if mono is not None and all(len(v) == 1 and 1 in v.values() for v in theta):
        # both sides are basis vectors: compare row by row, composable pairs only
        th = [next(iter(v)) for v in theta]
        for i, s in enumerate(sq):
            row = mono[th[i]]
            partners = T.by_left.get(s.b, ())
            if len(row) != len(partners):
                bad = (s, next(sq[j] for j in range(len(sq)) if (th[j] in row) != (sq[j].c == s.b)))
                break
            for j in partners:
                if row.get(th[j]) != th[T.index[T.h_compose(s, sq[j])]]:
                    bad = (s, sq[j])
                    break
            if bad:
                break
    else:
        for i, s in enumerate(sq):
            for j, s2 in enumerate(sq):
                r = T.h_compose(s, s2)
                want = {} if r is None else theta[T.index[r]]
                if A.multiply(theta[i], theta[j]) != want:
                    bad = (s, s2)
                    break
            if bad:
                break
    rep.add("theta_t theta_t' = theta_(t ⋆h t')", bad is None, bad)
    bad = next((s for i, s in enumerate(sq)
                if A.star_of(theta[i]) != theta[T.index[T.h_inverse(s)]]), None)
    rep.add("theta_t* = theta_(t^-h)", bad is None, bad)
    total: dict = {}
    for i in T.h_units:
        add_into(total, theta[i])
    rep.add("sum of theta over horizontal units is 1", total == A.unit)
    return rep
