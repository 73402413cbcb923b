"""Finite groups as exact multiplication tables.

Elements are opaque integer ids ``0 .. order-1`` with the identity always at
id 0.  Everything here is exhaustive by design, so groups larger than
:data:`MAX_ORDER` are refused.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

MAX_ORDER = 100


class NotAGroup(ValueError):
    pass


class NotASubgroup(ValueError):
    pass


class PDoesNotDivideOrder(ValueError):
    pass


class OrderTooLarge(ValueError):
    pass


def _check_order(n: int, max_order: int | None) -> None:
    limit = MAX_ORDER if max_order is None else max_order
    if n > limit:
        raise OrderTooLarge(f"group order {n} exceeds the configured maximum {limit}")


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group given by its Cayley table.

    ``table[x][y]`` is the id of ``x*y``.  ``names`` optionally carries a
    human readable label per element (permutation groups fill it in).
    """

    table: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] = ()
    inverse: tuple[int, ...] = field(init=False)

    identity_id = 0

    def __post_init__(self):
        n = len(self.table)
        inv = [0] * n
        for x in range(n):
            row = self.table[x]
            inv[x] = row.index(0)
        object.__setattr__(self, "inverse", tuple(inv))

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def prod(self, *xs: int) -> int:
        r = 0
        for x in xs:
            r = self.table[r][x]
        return r

    def inv(self, x: int) -> int:
        return self.inverse[x]

    def name(self, x: int) -> str:
        if self.names:
            return self.names[x]
        return str(x)

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != 0:
            y = self.table[y][x]
            k += 1
        return k

    def whole(self) -> "Subgroup":
        return Subgroup(self, tuple(self.elements))

    def trivial(self) -> "Subgroup":
        return Subgroup(self, (0,))

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"


def _validate_table(table: Sequence[Sequence[int]]) -> None:
    n = len(table)
    if n == 0:
        raise NotAGroup("empty table")
    for row in table:
        if len(row) != n:
            raise NotAGroup("table is not square")
        for v in row:
            if not (0 <= v < n):
                raise NotAGroup(f"entry {v} out of range")
    rng = set(range(n))
    for x in range(n):
        if set(table[x]) != rng:
            raise NotAGroup(f"row {x} is not a permutation")
        if {table[y][x] for y in range(n)} != rng:
            raise NotAGroup(f"column {x} is not a permutation")
    for x, y, z in itertools.product(range(n), repeat=3):
        if table[table[x][y]][z] != table[x][table[y][z]]:
            raise NotAGroup(f"associativity fails at ({x}, {y}, {z})")


def group_from_table(table: Sequence[Sequence[int]], names: Sequence[str] = (),
                     max_order: int | None = None) -> FiniteGroup:
    """Validate a Cayley table and renumber so that the identity has id 0.

    Raises :class:`NotAGroup` when associativity, identity or inverses fail.
    """
    n = len(table)
    _check_order(n, max_order)
    table = [list(r) for r in table]
    if any(len(r) != n for r in table):
        raise NotAGroup("table is not square")
    e = None
    for x in range(n):
        if all(table[x][y] == y and table[y][x] == y for y in range(n)):
            e = x
            break
    if e is None:
        raise NotAGroup("no two-sided identity")
    # swap ids e <-> 0
    perm = list(range(n))
    perm[0], perm[e] = e, 0
    new = [[perm[table[perm[x]][perm[y]]] for y in range(n)] for x in range(n)]
    _validate_table(new)
    names = tuple(names)
    if names:
        names = tuple(names[perm[x]] for x in range(n))
    return FiniteGroup(tuple(tuple(r) for r in new), names)


# -- permutations ---------------------------------------------------------

Perm = tuple[int, ...]


def compose(f: Perm, g: Perm) -> Perm:
    """Right-to-left composition: ``(f g)(x) = f(g(x))``."""
    return tuple(f[g[x]] for x in range(len(g)))


def perm_from_cycles(cycles: Iterable[Sequence[int]], degree: int) -> Perm:
    """Build a permutation of ``0..degree-1`` from 1-based cycles."""
    p = list(range(degree))
    for cyc in cycles:
        cyc = [c - 1 for c in cyc]
        if any(not (0 <= c < degree) for c in cyc):
            raise ValueError(f"cycle {cyc} out of range for degree {degree}")
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            p[a] = b
    return tuple(p)


def cycle_string(p: Perm) -> str:
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = p[j]
        out.append("(" + "".join(str(c + 1) for c in cyc) + ")" if len(p) < 10
                   else "(" + ",".join(str(c + 1) for c in cyc) + ")")
    return "".join(out) or "()"


def perm_closure(gens: Sequence[Perm], degree: int, max_order: int | None = None) -> list[Perm]:
    e = tuple(range(degree))
    elems = {e}
    frontier = [e]
    limit = MAX_ORDER if max_order is None else max_order
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
                    if len(elems) > limit:
                        raise OrderTooLarge(f"generated group exceeds the configured maximum {limit}")
        frontier = nxt
    return sorted(elems)


@dataclass(frozen=True, eq=False)
class PermutationGroup:
    """A permutation group together with its table realisation.

    Element ids are the sorted order of the permutation tuples, so the
    identity is id 0 without renumbering.
    """

    group: FiniteGroup
    perms: tuple[Perm, ...]
    degree: int

    def id_of(self, p: Perm) -> int:
        return self._index[p]

    def id_of_cycles(self, cycles: Iterable[Sequence[int]]) -> int:
        return self._index[perm_from_cycles(cycles, self.degree)]

    @property
    def _index(self) -> dict[Perm, int]:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {p: i for i, p in enumerate(self.perms)}
            object.__setattr__(self, "_idx", idx)
        return idx


def permutation_group(generators: Sequence[Perm], degree: int,
                      max_order: int | None = None) -> PermutationGroup:
    perms = perm_closure([tuple(g) for g in generators], degree, max_order)
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(tuple(index[compose(p, q)] for q in perms) for p in perms)
    G = FiniteGroup(table, tuple(cycle_string(p) for p in perms))
    return PermutationGroup(G, tuple(perms), degree)


def group_from_generators(cycle_gens: Sequence[Sequence[Sequence[int]]], degree: int,
                          max_order: int | None = None) -> PermutationGroup:
    gens = [perm_from_cycles(c, degree) for c in cycle_gens]
    return permutation_group(gens, degree, max_order)


def symmetric_group(n: int) -> PermutationGroup:
    if n <= 1:
        return permutation_group([], max(n, 1))
    gens = [perm_from_cycles([[1, 2]], n), perm_from_cycles([list(range(1, n + 1))], n)]
    return permutation_group(gens, n)


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup(tuple(tuple((x + y) % n for y in range(n)) for x in range(n)),
                       tuple(str(x) for x in range(n)))


def direct_product(A: FiniteGroup, B: FiniteGroup, max_order: int | None = None) -> FiniteGroup:
    """``A x B`` with id ``a * |B| + b`` (identity stays 0)."""
    nb = B.order
    _check_order(A.order * nb, max_order)
    table = tuple(
        tuple(A.table[x // nb][y // nb] * nb + B.table[x % nb][y % nb]
              for y in range(A.order * nb))
        for x in range(A.order * nb))
    names = tuple(f"({A.name(x // nb)},{B.name(x % nb)})" for x in range(A.order * nb))
    return FiniteGroup(table, names)


# -- subgroups ----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: FiniteGroup
    elements: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(set(self.elements))))
        object.__setattr__(self, "_set", frozenset(self.elements))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self._set

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and self.parent is other.parent and self._set == other._set

    def __hash__(self) -> int:
        return hash(self._set)

    def __le__(self, other: "Subgroup") -> bool:
        return self._set <= other._set

    def is_abelian(self) -> bool:
        t = self.parent.table
        return all(t[x][y] == t[y][x] for x in self.elements for y in self.elements)

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, elements={list(self.elements)})"


def is_subgroup(G: FiniteGroup, elems: Iterable[int]) -> bool:
    s = set(elems)
    if 0 not in s:
        return False
    t = G.table
    return all(G.inverse[x] in s for x in s) and all(t[x][y] in s for x in s for y in s)


def make_subgroup(G: FiniteGroup, elems: Iterable[int]) -> Subgroup:
    elems = set(elems)
    if not is_subgroup(G, elems):
        raise NotASubgroup(f"{sorted(elems)} is not a subgroup")
    return Subgroup(G, tuple(elems))


def subgroup_generated(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing ``gens``."""
    gens = list(gens)
    elems = {0}
    frontier = [0]
    t = G.table
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = t[x][g]
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(G, tuple(elems))


def product_set(G: FiniteGroup, H: Iterable[int], K: Iterable[int]) -> set[int]:
    """The set ``{h k}``."""
    t = G.table
    K = list(K)
    return {t[h][k] for h in H for k in K}


def intersection(H: Subgroup, K: Subgroup) -> Subgroup:
    return Subgroup(H.parent, tuple(x for x in H.elements if x in K))


def conjugate(G: FiniteGroup, g: int, x: int) -> int:
    """``g x g^-1``."""
    return G.table[G.table[g][x]][G.inverse[g]]


def conjugacy_classes(G: FiniteGroup, within: Subgroup | None = None) -> list[tuple[int, ...]]:
    """Conjugacy classes of ``within`` (default: all of ``G``), each sorted,
    listed in order of their smallest element."""
    elems = list(within.elements) if within is not None else list(G.elements)
    seen: set[int] = set()
    classes = []
    for x in elems:
        if x in seen:
            continue
        cls = {conjugate(G, g, x) for g in elems}
        seen |= cls
        classes.append(tuple(sorted(cls)))
    return classes


def normalizer(G: FiniteGroup, P: Subgroup) -> Subgroup:
    pset = set(P.elements)
    return Subgroup(G, tuple(g for g in G.elements
                             if {conjugate(G, g, x) for x in pset} == pset))


def is_normal(G: FiniteGroup, N: Subgroup) -> bool:
    return normalizer(G, N).order == G.order


def _prime_power_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def sylow_subgroup(G: FiniteGroup, p: int, within: Subgroup | None = None) -> Subgroup:
    """A Sylow ``p``-subgroup of ``within`` (default ``G``).

    Deterministic: grows a ``p``-subgroup greedily, always adjoining the
    smallest-id ``p``-element that keeps the result a ``p``-group.
    """
    amb = within if within is not None else G.whole()
    n = amb.order
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"{p} is not prime")
    if n % p:
        raise PDoesNotDivideOrder(f"{p} does not divide {n}")
    target = _prime_power_part(n, p)
    pelems = [x for x in amb.elements
              if x != 0 and _prime_power_part(G.element_order(x), p) == G.element_order(x)]

    # depth-first search over adjoined generators; p-subgroups are small here
    def grow(P: Subgroup) -> Subgroup | None:
        if P.order == target:
            return P
        for x in pelems:
            if x in P:
                continue
            Q = subgroup_generated(G, list(P.elements) + [x])
            if Q.order > P.order and _prime_power_part(Q.order, p) == Q.order:
                R = grow(Q)
                if R is not None:
                    return R
        return None

    P = grow(G.trivial())
    assert P is not None, "Sylow's theorem guarantees existence"
    return P


# -- cosets ---------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CosetSpace:
    """Partition of ``ambient`` into ``left`` cosets ``r*sub`` or ``right``
    cosets ``sub*r``.  ``representatives[i]`` lies in ``blocks[i]``."""

    kind: str
    ambient: Subgroup
    subgroup: Subgroup
    blocks: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]

    def block_of(self, x: int) -> int:
        return self._where[x]

    def representative_of(self, x: int) -> int:
        return self.representatives[self._where[x]]

    def __post_init__(self):
        where = {}
        for i, b in enumerate(self.blocks):
            for x in b:
                where[x] = i
        object.__setattr__(self, "_where", where)

    def __len__(self) -> int:
        return len(self.blocks)


def coset_space(ambient: Subgroup, sub: Subgroup, kind: str = "left",
                representatives: Sequence[int] | None = None) -> CosetSpace:
    """Cosets of ``sub`` inside ``ambient``.

    Blocks are ordered by their smallest element; the default representative
    is that smallest element.  ``representatives`` overrides the choice (one
    element per block, any order).
    """
    if kind not in ("left", "right"):
        raise ValueError("kind must be 'left' or 'right'")
    if not sub <= ambient:
        raise NotASubgroup("sub is not contained in ambient")
    G = ambient.parent
    t = G.table
    seen: set[int] = set()
    blocks = []
    for x in ambient.elements:
        if x in seen:
            continue
        if kind == "left":
            b = tuple(sorted(t[x][s] for s in sub.elements))
        else:
            b = tuple(sorted(t[s][x] for s in sub.elements))
        seen.update(b)
        blocks.append(b)
    reps = [b[0] for b in blocks]
    if representatives is not None:
        reps = list(reps)
        chosen = list(representatives)
        if len(chosen) != len(blocks):
            raise ValueError(f"need {len(blocks)} representatives, got {len(chosen)}")
        hit = set()
        for r in chosen:
            for i, b in enumerate(blocks):
                if r in b:
                    if i in hit:
                        raise ValueError(f"two representatives in block {b}")
                    hit.add(i)
                    reps[i] = r
                    break
            else:
                raise ValueError(f"{r} is not in the ambient set")
    return CosetSpace(kind, ambient, sub, tuple(blocks), tuple(reps))


def all_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Every subgroup of ``G``, sorted by order and then by element list.

    Each subgroup is reached by joining a known subgroup with a cyclic one,
    so the search closes once no join produces anything new.
    """
    cyclic = {subgroup_generated(G, [x]) for x in G.elements}
    found = set(cyclic)
    frontier = list(cyclic)
    while frontier:
        nxt = []
        for A in frontier:
            for C in cyclic:
                if C <= A:
                    continue
                B = subgroup_generated(G, A.elements + C.elements)
                if B not in found:
                    found.add(B)
                    nxt.append(B)
        frontier = nxt
    return sorted(found, key=lambda X: (X.order, X.elements))
