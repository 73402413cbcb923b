"""The presented double crossed product and its basis match with the squares."""
import pytest

from qgroupoid import corpus
from qgroupoid.double_groupoid import DoubleGroupoid
from qgroupoid.presentation import (build_presented, square_isomorphism, theta_basis,
                                    triple_to_square, verify_presented, verify_sigma,
                                    verify_sigma_conjugacy, verify_theta)
from qgroupoid.quantum_groupoid.weak_hopf import build_CT, build_CT_prime
from qgroupoid.star_algebra import verify_isomorphism
from qgroupoid.suite import build_all, presented_report

SMALL = ("a", "b", "c-p3") + corpus.DEGENERATE


def relation_product(B, x, y):
    """Multiply two triples by pushing generators past each other:
    ``ρ(s) V_h = V_h ρ(s)``, ``ρ(s) χ_k = χ_{ks^-1} ρ(s)`` and
    ``χ_k V_h = V_h χ_{h^-1 ▷' k}``."""
    P = B.acting_pair
    t, inv = P.G.table, P.G.inverse
    (h, k, s), (h2, k2, s2) = x, y
    moved = P.act_HK(inv[h2], k)          # χ_k V_h2 = V_h2 χ_moved
    k2s = t[k2][inv[s]]                   # ρ(s) χ_k2 = χ_k2s ρ(s)
    if moved != k2s:
        return None
    return t[h][h2], k2s, t[s][s2]


@pytest.mark.parametrize("name", ("a", "b", "c-p3", "d-e-S3", "d-S3-e"))
@pytest.mark.parametrize("side", ["HK", "KH"])
def test_closed_form_product_matches_relations(name, side):
    B = build_presented(corpus.pair(name), side)
    A = B.algebra
    for i, x in enumerate(B.triples):
        for j, y in enumerate(B.triples):
            r = relation_product(B, x, y)
            assert A.basis_product(i, j) == ({} if r is None else {B.index[r]: 1})


@pytest.mark.parametrize("name", SMALL)
@pytest.mark.parametrize("side", ["HK", "KH"])
def test_presented_algebra_and_sigma(name, side):
    B = build_presented(corpus.pair(name), side)
    P = B.acting_pair
    assert B.algebra.dim == P.H.order * P.K.order * P.S.order
    for rep in (verify_presented(B), verify_sigma(B)):
        assert rep.ok, rep.text()


@pytest.mark.parametrize("name", SMALL)
def test_square_isomorphism_and_theta(name):
    built = build_all(corpus.pair(name))
    for side in ("HK", "KH"):
        rep = presented_report(built, side)
        assert rep.ok, rep.text()


def test_triples_land_on_squares_bijectively():
    P = corpus.pair("c-p3")
    T = DoubleGroupoid(P, "T")
    B = build_presented(P)
    images = [triple_to_square(P, *x) for x in B.triples]
    assert sorted(images) == T.squares


def test_isomorphism_onto_flipped_side_uses_T_prime():
    P = corpus.pair("b")
    B = build_presented(P, "KH")
    f = square_isomorphism(B, build_CT_prime(P).algebra, DoubleGroupoid(P, "T'"))
    assert verify_isomorphism(f).ok
    # the same triples do not match the unflipped squares
    g = square_isomorphism(build_presented(P), build_CT(P).algebra)
    assert verify_isomorphism(g).ok
    with pytest.raises(KeyError):
        square_isomorphism(B, build_CT(P).algebra, DoubleGroupoid(P, "T"))


def test_theta_mutations_are_caught():
    P = corpus.pair("b")
    T = DoubleGroupoid(P, "T")
    B = build_presented(P)
    theta = theta_basis(square_isomorphism(B, build_CT(P, T).algebra, T))
    assert verify_theta(B, theta, T).ok
    swapped = list(theta)
    swapped[1], swapped[2] = swapped[2], swapped[1]
    assert not verify_theta(B, swapped, T)["theta_t theta_t' = theta_(t ⋆h t')"].passed
    scaled = [{i: 2 * c for i, c in v.items()} for v in theta]
    assert not verify_theta(B, scaled, T).ok


@pytest.mark.parametrize("name", ["b", "c-p3"])
def test_representative_change_gives_isomorphic_presentations(name):
    P = corpus.pair(name)
    rep = verify_sigma_conjugacy(P, P.I, corpus.alternative_I(name))
    assert rep.ok, rep.text()


def test_side_is_validated():
    with pytest.raises(ValueError):
        build_presented(corpus.pair("a"), "XY")
