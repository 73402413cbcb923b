"""Sparse *-algebras, exact linear algebra and their checks."""
import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qgroupoid.groups import cyclic_group, symmetric_group
from qgroupoid.linalg import add_into, echelon, fmt, nullspace, q
from qgroupoid.star_algebra import (IllDefinedOnQuotient, LinearMap, StarAlgebra,
                                    check_associativity, center, function_algebra,
                                    group_algebra, matrix_algebra, one_dim_algebra,
                                    quotient_tensor, tensor_algebra, verify_algebra,
                                    verify_homomorphism, verify_isomorphism)


def brute_associative(A):
    for i, j, k in itertools.product(range(A.dim), repeat=3):
        lhs = A.multiply(A.basis_product(i, j), {k: 1})
        rhs = A.multiply({i: 1}, A.basis_product(j, k))
        if lhs != rhs:
            return False
    return True


# -- linear algebra -------------------------------------------------------------

def test_scalars_normalise():
    assert q(Fraction(4, 2)) == 2 and type(q(Fraction(4, 2))) is int
    assert q("3/6") == Fraction(1, 2)
    assert fmt(3) == "3/1"
    with pytest.raises(TypeError):
        q(0.5)
    assert add_into({0: 1}, {0: -1, 1: 2}) == {1: 2}


def dense_rank(rows, n):
    M = [[Fraction(r.get(c, 0)) for c in range(n)] for r in rows]
    rk = 0
    for c in range(n):
        p = next((i for i in range(rk, len(M)) if M[i][c]), None)
        if p is None:
            continue
        M[rk], M[p] = M[p], M[rk]
        for i in range(len(M)):
            if i != rk and M[i][c]:
                f = M[i][c] / M[rk][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[rk])]
        rk += 1
    return rk


sparse_rows = st.lists(st.dictionaries(st.integers(0, 5), st.integers(-3, 3).filter(bool),
                                       max_size=4), max_size=7)


@given(sparse_rows)
@settings(max_examples=150, deadline=None)
def test_nullspace_against_dense_elimination(rows):
    n = 6
    N = nullspace(rows, range(n))
    assert len(N) == n - dense_rank(rows, n)
    for v in N:
        assert all(sum(r.get(k, 0) * x for k, x in v.items()) == 0 for r in rows)
    assert echelon(N).rank == len(N)


def test_nullspace_ignores_explicit_zero_coefficients():
    assert len(nullspace([{0: 0}, {1: 0}], range(3))) == 3
    assert nullspace([{0: 1}, {1: 2, 2: -2}], range(3)) == [{2: 1, 1: 1}]


# -- algebras -------------------------------------------------------------------

@pytest.mark.parametrize("A", [one_dim_algebra(), matrix_algebra(3), function_algebra(4),
                               group_algebra(symmetric_group(3).group),
                               tensor_algebra(matrix_algebra(2), group_algebra(cyclic_group(2)))],
                         ids=["C", "M3", "C4", "QS3", "M2xQZ2"])
def test_standard_algebras_verify(A):
    assert verify_algebra(A).ok
    assert brute_associative(A)


def test_centers():
    assert len(center(matrix_algebra(3))) == 1
    assert len(center(group_algebra(symmetric_group(3).group))) == 3
    assert len(center(function_algebra(5))) == 5


def test_monomial_generators_generate():
    for A in (matrix_algebra(3), group_algebra(symmetric_group(3).group)):
        gens = A.monomial_generators()
        seen = set(gens)
        frontier = list(gens)
        while frontier:
            x = frontier.pop()
            for g in gens:
                u = A.monomial_table[x].get(g)
                if u is not None and u not in seen:
                    seen.add(u)
                    frontier.append(u)
        assert seen == set(range(A.dim))
    assert group_algebra(cyclic_group(6)).monomial_generators() == [0, 1]


@st.composite
def small_algebras(draw):
    n = draw(st.integers(1, 4))
    mult = {}
    for i, j in itertools.product(range(n), repeat=2):
        v = draw(st.dictionaries(st.integers(0, n - 1), st.integers(-1, 1).filter(bool), max_size=2))
        if v:
            mult[i, j] = v
    return StarAlgebra(n, mult, {}, [{i: 1} for i in range(n)])


@given(small_algebras())
@settings(max_examples=200, deadline=None)
def test_associativity_check_agrees_with_brute_force(A):
    ok, w = check_associativity(A)
    assert ok == brute_associative(A)
    if not ok:
        i, j, k = w
        assert A.multiply(A.basis_product(i, j), {k: 1}) != A.multiply({i: 1}, A.basis_product(j, k))


def test_broken_star_and_unit_are_reported():
    M = matrix_algebra(2)
    bad_star = StarAlgebra(4, M.mult, M.unit, [{i: 1} for i in range(4)])
    rep = verify_algebra(bad_star)
    assert rep["associativity"].passed and not rep["star anti-multiplicative"].passed
    bad_unit = StarAlgebra(4, M.mult, {0: 1}, M.star)
    assert not verify_algebra(bad_unit)["unit"].passed


def test_linear_maps():
    G = cyclic_group(2)
    A, B = group_algebra(G), function_algebra(2)
    # Fourier transform u_g -> (chi(g))_chi
    f = LinearMap(A, B, [{0: 1, 1: 1}, {0: 1, 1: -1}])
    assert verify_isomorphism(f).ok
    g = LinearMap(A, B, [{0: 1, 1: 1}, {0: 1}])
    assert not verify_homomorphism(g).ok
    assert not verify_isomorphism(LinearMap(A, B, [{0: 1, 1: 1}, {0: 1, 1: 1}])).ok
    with pytest.raises(ValueError):
        LinearMap(A, B, [{0: 1}])


def test_quotient_tensor_of_group_algebras():
    # Q[Z2] (x) Q[Z2] modulo the ideal spanned by u_(1,0) - u_(0,1) and
    # u_(0,0) - u_(1,1) is Q[Z2]
    A = tensor_algebra(group_algebra(cyclic_group(2)), group_algebra(cyclic_group(2)))
    Q = quotient_tensor(2, 2, A.basis_product, lambda u: A.star[u], A.unit,
                        [{1: 1, 2: -1}, {0: 1, 3: -1}])
    assert Q.report.ok
    assert Q.algebra.dim == 2
    assert verify_algebra(Q.algebra).ok
    assert Q.project({1: 1}) == Q.project({2: 1})


def test_quotient_by_non_ideal_is_flagged():
    M = matrix_algebra(2)
    args = (1, 4, M.basis_product, lambda u: M.star[u], M.unit, [{0: 1}])
    assert not quotient_tensor(*args).report.ok
    with pytest.raises(IllDefinedOnQuotient):
        quotient_tensor(*args, strict=True)
