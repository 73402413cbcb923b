"""Every verifier for one pair, gathered into a single report.

Section prefixes keep check names unique: ``pair:``, ``T:``, ``T':``,
``CT:``, ``CT':``, ``duality:``, ``action:``, ``presented HK:``,
``presented KH:``, ``representatives:`` and ``crossed product:``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .double_groupoid import DoubleGroupoid, verify_double_groupoid, verify_transpose_characterization
from .groups import conjugacy_classes
from .matched_pair import (RelativeMatchedPair, verify_action_conjugacy, verify_action_tables,
                           verify_cocycles, verify_pair)
from .presentation import (build_presented, square_isomorphism, theta_basis, verify_presented,
                           verify_sigma, verify_sigma_conjugacy, verify_theta)
from .quantum_groupoid.action import (CROSSED_PRODUCT_MAX_DIM, crossed_product, module_action,
                                      verify_action)
from .quantum_groupoid.duality import build_pairing, verify_duality, verify_pairing_matrix
from .quantum_groupoid.groupoid_examples import degeneration_report
from .quantum_groupoid.weak_hopf import (WeakHopfAlgebra, build_CT, build_CT_prime, verify_cartan,
                                         verify_weak_hopf, verify_weak_kac)
from .report import Report
from .star_algebra import center, verify_algebra, verify_isomorphism

#: above this dimension the action axioms are checked on a seeded sample
ACTION_EXHAUSTIVE_MAX_DIM = 400
ACTION_SAMPLE = 24


@dataclass
class Built:
    """The constructions for one pair, shared by the verifiers."""

    pair: RelativeMatchedPair
    T: DoubleGroupoid
    Tp: DoubleGroupoid
    CT: WeakHopfAlgebra
    CTp: WeakHopfAlgebra


def build_all(pair: RelativeMatchedPair) -> Built:
    T = DoubleGroupoid(pair, "T")
    Tp = T.opposite
    return Built(pair, T, Tp, build_CT(pair, T), build_CT_prime(pair, Tp))


def weak_hopf_report(W: WeakHopfAlgebra, S_order: int, S_abelian: bool) -> Report:
    rep = verify_weak_hopf(W)
    rep.extend(verify_weak_kac(W))
    rep.extend(verify_cartan(W, S_order, S_abelian))
    return rep


def presented_report(B: Built, side: str) -> Report:
    P = build_presented(B.pair, side)
    W, D = (B.CT, B.T) if side == "HK" else (B.CTp, B.Tp)
    rep = verify_presented(P)
    rep.extend(verify_sigma(P))
    f = square_isomorphism(P, W.algebra, D)
    rep.extend(verify_isomorphism(f), "isomorphism onto the squares: ")
    rep.extend(verify_theta(P, theta_basis(f), D))
    return rep


def action_actors(dim: int, seed: int = 0) -> list[int] | None:
    """All actors for small algebras, else a fixed-seed sample."""
    if dim <= ACTION_EXHAUSTIVE_MAX_DIM:
        return None
    return sorted(random.Random(seed).sample(range(dim), ACTION_SAMPLE))


def crossed_product_report(B: Built, max_dim: int | None = None) -> Report:
    """Dimension ``|S| (|H||K|)^2`` and center dimension equal to the number
    of conjugacy classes of ``S``; skipped (as information) above the guard."""
    pair = B.pair
    H, K, S = pair.H.order, pair.K.order, pair.S.order
    limit = CROSSED_PRODUCT_MAX_DIM if max_dim is None else max_dim
    want = S * (H * K) ** 2
    rep = Report()
    if want > limit:
        rep.add("not computed above the size guard", True, detail=f"dimension {want} > {limit}",
                diagnostic=True)
        return rep
    act = module_action(pair, B.CT, B.CTp, B.T)
    X = crossed_product(act, max_dim=limit)
    rep.extend(X.report)
    A = X.algebra
    rep.add("dimension |S|(|H||K|)^2", A.dim == want, A.dim, detail=f"{A.dim}")
    rep.extend(verify_algebra(A))
    classes = len(conjugacy_classes(pair.G, within=pair.S))
    z = len(center(A))
    rep.add("center dimension = number of classes of S", z == classes, z,
            detail=f"{z} vs {classes}")
    return rep


def full_report(pair: RelativeMatchedPair, alternative_I: Sequence[int] | None = None,
                crossed: bool = True) -> Report:
    """Run every verifier on ``pair``.

    ``alternative_I`` adds the conjugacy checks between the pair's own
    representative set and this one."""
    B = build_all(pair)
    S = pair.S
    rep = Report()
    rep.extend(verify_pair(pair), "pair: ")
    rep.extend(verify_action_tables(pair), "pair: ")
    rep.extend(verify_cocycles(pair), "pair: ")
    rep.extend(verify_double_groupoid(B.T), "T: ")
    rep.extend(verify_transpose_characterization(B.T), "T: ")
    rep.extend(verify_double_groupoid(B.Tp), "T': ")
    rep.extend(weak_hopf_report(B.CT, S.order, S.is_abelian()), "CT: ")
    rep.extend(weak_hopf_report(B.CTp, S.order, S.is_abelian()), "CT': ")
    if pair.H.order == 1 or pair.K.order == 1:
        rep.extend(degeneration_report(B.T, B.CT), "CT: ")
    D = build_pairing(pair, B.CT, B.CTp, B.T)
    rep.extend(verify_duality(D), "duality: ")
    rep.extend(verify_pairing_matrix(pair, D, B.T), "duality: ")
    act = module_action(pair, B.CT, B.CTp, B.T)
    rep.extend(verify_action(act, action_actors(B.CTp.dim)), "action: ")
    rep.extend(presented_report(B, "HK"), "presented HK: ")
    rep.extend(presented_report(B, "KH"), "presented KH: ")
    if alternative_I is not None:
        rep.extend(verify_action_conjugacy(pair, pair.I, alternative_I), "representatives: ")
        rep.extend(verify_sigma_conjugacy(pair, pair.I, alternative_I), "representatives: ")
    if crossed:
        rep.extend(crossed_product_report(B), "crossed product: ")
    return rep
