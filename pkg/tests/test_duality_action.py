"""The bracket between the two square algebras, the module action and the
crossed product."""
from fractions import Fraction
from itertools import product

import pytest

from qgroupoid import corpus
from qgroupoid.groups import conjugacy_classes
from qgroupoid.quantum_groupoid.action import (FORMULAS, CrossedProductTooLarge, crossed_product,
                                               module_action, verify_action)
from qgroupoid.quantum_groupoid.duality import (DualityPairing, build_pairing,
                                                pairing_matrix_dense, verify_duality,
                                                verify_pairing_matrix)
from qgroupoid.star_algebra import center, verify_algebra
from qgroupoid.suite import build_all, crossed_product_report

SMALL = ("a", "b", "c-p3") + corpus.DEGENERATE


@pytest.fixture(scope="module", params=["a", "b"])
def built(request):
    return build_all(corpus.pair(request.param))


def dense_adjoint(W, Wp, M, reverse):
    """``<Γ(x), y⊗z> == <x, zy>`` (or ``yz``) over every triple."""
    A2 = Wp.algebra
    n, m = W.dim, Wp.dim
    for x, y, z in product(range(n), range(m), range(m)):
        lhs = sum(c * M[a][y] * M[b][z] for (a, b), c in W.coproduct[x].items())
        prod = A2.basis_product(z, y) if reverse else A2.basis_product(y, z)
        rhs = sum(c * M[x][w] for w, c in prod.items())
        if lhs != rhs:
            return False
    return True


def dense(D: DualityPairing):
    return [[row.get(j, 0) for j in range(D.right.dim)] for row in D.matrix]


@pytest.mark.parametrize("name", SMALL)
def test_pairing_matrix_is_S_times_transpose(name):
    B = build_all(corpus.pair(name))
    D = build_pairing(B.pair, B.CT, B.CTp, B.T)
    assert dense(D) == pairing_matrix_dense(B.pair, B.T)
    assert verify_pairing_matrix(B.pair, D, B.T).ok
    rep = verify_duality(D)
    assert rep.ok, rep.text()


def test_reversed_legs_are_the_right_convention(built):
    D = build_pairing(built.pair, built.CT, built.CTp, built.T)
    M = dense(D)
    Mt = [list(col) for col in zip(*M)]
    assert dense_adjoint(built.CT, built.CTp, M, reverse=True)
    assert dense_adjoint(built.CTp, built.CT, Mt, reverse=True)
    rep = verify_duality(D)
    assert rep["<Γ(x), y⊗z> = <x, yz>"].passed == dense_adjoint(built.CT, built.CTp, M, False)


def test_unreversed_legs_fail_once_S_is_nontrivial():
    B = build_all(corpus.pair("b"))
    rep = verify_duality(build_pairing(B.pair, B.CT, B.CTp, B.T))
    check = rep["<Γ(x), y⊗z> = <x, yz>"]
    assert check.diagnostic and not check.passed and check.witness is not None


def test_degenerate_pairing_is_reported():
    B = build_all(corpus.pair("b"))
    D = build_pairing(B.pair, B.CT, B.CTp, B.T)
    broken = DualityPairing(D.left, D.right, [dict(r) for r in D.matrix])
    broken.matrix[0] = {}
    rep = verify_duality(broken)
    assert not rep["pairing nondegenerate"].passed
    assert not rep.ok


# -- module action -------------------------------------------------------------

def dense_action_laws(act):
    """Module and module-algebra laws by exhaustion over basis triples."""
    W, M = act.acting, act.module
    A = W.algebra
    nA, nM = A.dim, M.dim
    for a, b, m in product(range(nA), range(nA), range(nM)):
        if act.act(A.basis_product(a, b), {m: 1}) != act.act({a: 1}, act.act({b: 1}, {m: 1})):
            return False
    for a, m, m2 in product(range(nA), range(nM), range(nM)):
        rhs: dict = {}
        for (x1, x2), c in W.coproduct[a].items():
            v = M.multiply(act.act({x1: 1}, {m: 1}), act.act({x2: 1}, {m2: 1}))
            for k, y in v.items():
                rhs[k] = rhs.get(k, 0) + Fraction(c) * y
        rhs = {k: y for k, y in rhs.items() if y}
        if act.act({a: 1}, M.basis_product(m, m2)) != rhs:
            return False
    return True


@pytest.mark.parametrize("name", SMALL)
def test_default_action_passes(name):
    B = build_all(corpus.pair(name))
    rep = verify_action(module_action(B.pair, B.CT, B.CTp, B.T))
    assert rep.ok, rep.text()


def test_action_matches_dense_oracle(built):
    for formula in FORMULAS:
        for legs in (True, False):
            act = module_action(built.pair, built.CT, built.CTp, built.T, formula, legs)
            rep = verify_action(act)
            laws = rep["action is multiplicative"].passed and rep["module algebra"].passed
            assert laws == dense_action_laws(act)


def test_inverse_stacking_is_not_an_action_on_b():
    B = build_all(corpus.pair("b"))
    rep = verify_action(module_action(B.pair, B.CT, B.CTp, B.T, "inverse-on-top"))
    assert not rep["action is multiplicative"].passed


def test_sampled_actors_are_a_subset_of_the_full_check():
    B = build_all(corpus.pair("c-p3"))
    act = module_action(B.pair, B.CT, B.CTp, B.T)
    rep = verify_action(act, actors=[0, 5, 17])
    assert rep.ok
    assert rep["module algebra"].detail == f"3 of {B.CTp.dim} actors"


# -- crossed product -------------------------------------------------------------

@pytest.mark.parametrize("name,dim,zdim", [("a", 36, 1), ("b", 288, 2)])
def test_crossed_product_dimension_and_center(name, dim, zdim):
    B = build_all(corpus.pair(name))
    X = crossed_product(module_action(B.pair, B.CT, B.CTp, B.T))
    assert X.report.ok
    assert X.algebra.dim == dim
    assert verify_algebra(X.algebra).ok
    assert len(center(X.algebra)) == zdim == len(conjugacy_classes(B.pair.G, within=B.pair.S))
    assert crossed_product_report(B).ok


def test_crossed_product_guard():
    B = build_all(corpus.pair("c-p3"))
    act = module_action(B.pair, B.CT, B.CTp, B.T)
    with pytest.raises(CrossedProductTooLarge):
        crossed_product(act)
    rep = crossed_product_report(B)
    assert rep.ok and all(c.diagnostic for c in rep.checks)
