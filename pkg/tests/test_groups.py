"""Finite groups, permutations, subgroups, cosets and Sylow subgroups."""
import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qgroupoid.groups import (NotAGroup, NotASubgroup, OrderTooLarge, PDoesNotDivideOrder,
                              all_subgroups, compose, conjugacy_classes, coset_space, cyclic_group,
                              direct_product, group_from_table, is_normal, make_subgroup,
                              normalizer, perm_from_cycles, product_set, subgroup_generated,
                              sylow_subgroup, symmetric_group)


@pytest.fixture(scope="module")
def s3():
    return symmetric_group(3)


@pytest.fixture(scope="module")
def s4():
    return symmetric_group(4)


def brute_table_ok(G):
    n = G.order
    t = G.table
    assoc = all(t[t[x][y]][z] == t[x][t[y][z]] for x, y, z in itertools.product(range(n), repeat=3))
    unit = all(t[0][x] == x == t[x][0] for x in range(n))
    inv = all(t[x][G.inverse[x]] == 0 == t[G.inverse[x]][x] for x in range(n))
    return assoc and unit and inv


def test_s3_from_generators_has_order_six(s3):
    assert s3.group.order == 6
    assert brute_table_ok(s3.group)


def test_composition_is_right_to_left(s3):
    c = s3.id_of_cycles
    # apply (123) first, then (12)
    assert s3.group.mul(c([[1, 2]]), c([[1, 2, 3]])) == c([[2, 3]])
    assert compose(perm_from_cycles([[1, 2]], 3), perm_from_cycles([[1, 2, 3]], 3)) == (0, 2, 1)


def test_s3_ids_follow_sorted_permutations(s3):
    assert [s3.group.name(x) for x in range(6)] == ["()", "(23)", "(12)", "(123)", "(132)", "(13)"]


def test_group_from_table_renumbers_identity():
    # Z/3 with the identity stored as element 2
    table = [[1, 2, 0], [2, 0, 1], [0, 1, 2]]
    G = group_from_table(table)
    assert G.order == 3
    assert brute_table_ok(G)


@pytest.mark.parametrize("table", [
    [[0, 1], [1, 1]],                          # row not a permutation
    [[0, 1, 2], [1, 2, 0]],                    # not square
    [[0, 1, 2], [1, 0, 2], [2, 2, 0]],         # column repeats
    # a loop of order 5 with an involution, hence not a group
    [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]],
    [[0, 5], [1, 0]],                          # out of range
])
def test_bad_tables_are_rejected(table):
    with pytest.raises(NotAGroup):
        group_from_table(table)


def test_order_guard():
    with pytest.raises(OrderTooLarge):
        group_from_table(cyclic_group(5).table, max_order=4)
    with pytest.raises(OrderTooLarge):
        direct_product(cyclic_group(11), cyclic_group(10))


@given(st.integers(1, 12), st.integers(1, 8))
@settings(max_examples=30, deadline=None)
def test_cyclic_and_products_are_groups(m, n):
    G = direct_product(cyclic_group(m), cyclic_group(n))
    assert G.order == m * n
    assert brute_table_ok(G)


@given(st.lists(st.integers(0, 23), max_size=3))
@settings(max_examples=40, deadline=None)
def test_generated_subgroups_are_closed(gens):
    G = symmetric_group(4).group
    H = subgroup_generated(G, gens)
    assert 0 in H
    assert all(G.mul(x, y) in H for x in H for y in H)
    assert G.order % H.order == 0


def test_make_subgroup_refuses_non_subgroups(s3):
    with pytest.raises(NotASubgroup):
        make_subgroup(s3.group, [0, 1, 2])


def test_product_set_size_on_every_pair_of_s4_subgroups(s4):
    G = s4.group
    subs = all_subgroups(G)
    assert len(subs) == 30
    for H in subs:
        for K in subs:
            S = [x for x in H if x in K]
            assert len(product_set(G, H, K)) * len(S) == H.order * K.order


def test_subgroup_counts():
    assert len(all_subgroups(symmetric_group(3).group)) == 6
    assert [H.order for H in all_subgroups(cyclic_group(4))] == [1, 2, 4]


def test_conjugacy_classes_of_s3(s3):
    sizes = sorted(len(c) for c in conjugacy_classes(s3.group))
    assert sizes == [1, 2, 3]


def test_conjugacy_classes_within_a_subgroup(s3):
    c = s3.id_of_cycles
    Z2 = subgroup_generated(s3.group, [c([[1, 2]])])
    assert conjugacy_classes(s3.group, within=Z2) == [(0,), (c([[1, 2]]),)]


def test_cosets_partition_and_respect_representatives(s3):
    G = s3.group
    c = s3.id_of_cycles
    H = subgroup_generated(G, [c([[1, 2]])])
    C = coset_space(G.whole(), H, "left")
    assert len(C) == 3
    assert sorted(x for b in C.blocks for x in b) == list(G.elements)
    for b in C.blocks:
        g = b[0]
        assert set(b) == {G.mul(g, h) for h in H}
    reps = [b[-1] for b in C.blocks]
    assert sorted(coset_space(G.whole(), H, "left", reps).representatives) == sorted(reps)
    with pytest.raises(ValueError):
        coset_space(G.whole(), H, "left", [C.blocks[0][0], C.blocks[0][1], C.blocks[1][0]])


def test_sylow_and_frattini_ingredients(s4):
    G = s4.group
    c = s4.id_of_cycles
    A4 = subgroup_generated(G, [c([[1, 2, 3]]), c([[1, 2], [3, 4]])])
    assert A4.order == 12 and is_normal(G, A4)
    P2 = sylow_subgroup(G, 2, within=A4)
    assert P2.order == 4
    N2 = normalizer(G, P2)
    assert N2.order >= 8
    assert product_set(G, A4, N2) == set(G.elements)
    P3 = sylow_subgroup(G, 3, within=A4)
    assert P3.order == 3
    assert product_set(G, A4, normalizer(G, P3)) == set(G.elements)


def test_sylow_rejects_bad_primes(s3):
    with pytest.raises(PDoesNotDivideOrder):
        sylow_subgroup(s3.group, 5)
    with pytest.raises(ValueError):
        sylow_subgroup(s3.group, 4)
