"""Finite groupoids and their two canonical weak Hopf algebras.

On a finite groupoid the functions form a commutative weak Hopf algebra
(coproduct dual to composition) and the groupoid algebra a cocommutative one
(every arrow group-like).  Both serve as known-good fixtures.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from ..double_groupoid import DoubleGroupoid
from ..groups import FiniteGroup
from ..report import Report
from ..star_algebra import StarAlgebra
from .weak_hopf import WeakHopfAlgebra


class NotAGroupoid(ValueError):
    pass


@dataclass
class FiniteGroupoid:
    """Arrows ``0 .. n-1`` with partial composition ``compose[(x, y)] = xy``.

    ``units`` are the identity arrows and ``inverse[x]`` the inverse arrow.
    """

    n: int
    compose: dict
    units: list[int]
    inverse: list[int]
    labels: list[str] | None = None

    def __post_init__(self):
        _validate(self)

    def product(self, x: int, y: int) -> int | None:
        return self.compose.get((x, y))


def _validate(g: FiniteGroupoid) -> None:
    n, comp = g.n, g.compose
    units = set(g.units)
    for (x, y), z in comp.items():
        if not (0 <= x < n and 0 <= y < n and 0 <= z < n):
            raise NotAGroupoid(f"arrow out of range in {(x, y, z)}")
    left = {}
    right = {}
    for x in range(n):
        ls = [u for u in units if comp.get((u, x)) == x]
        rs = [u for u in units if comp.get((x, u)) == x]
        if len(ls) != 1 or len(rs) != 1:
            raise NotAGroupoid(f"arrow {x} has no unique target/source unit")
        left[x], right[x] = ls[0], rs[0]
    for (x, y) in comp:
        if right[x] != left[y]:
            raise NotAGroupoid(f"composable pair {(x, y)} does not match at units")
    for x in range(n):
        for y in range(n):
            if right[x] == left[y] and (x, y) not in comp:
                raise NotAGroupoid(f"pair {(x, y)} should compose")
    for (x, y), xy in comp.items():
        for z in range(n):
            if (y, z) in comp:
                if comp.get((xy, z)) != comp.get((x, comp[y, z])):
                    raise NotAGroupoid(f"associativity fails at {(x, y, z)}")
    for x in range(n):
        xi = g.inverse[x]
        if comp.get((x, xi)) != left[x] or comp.get((xi, x)) != right[x]:
            raise NotAGroupoid(f"inverse of {x} is wrong")


def group_as_groupoid(G: FiniteGroup) -> FiniteGroupoid:
    n = G.order
    comp = {(x, y): G.table[x][y] for x in range(n) for y in range(n)}
    return FiniteGroupoid(n, comp, [0], list(G.inverse), [G.name(x) for x in range(n)])


def groupoid_of_squares(D: DoubleGroupoid, direction: str = "h") -> FiniteGroupoid:
    """The horizontal (``"h"``) or vertical (``"v"``) groupoid of squares."""
    n = len(D)
    comp = {}
    for i, s in enumerate(D.squares):
        if direction == "h":
            for j in D.by_left.get(s.b, ()):
                comp[i, j] = D.h_index(i, j)
        else:
            for j in D.by_top.get(s.d, ()):
                comp[i, j] = D.v_index(i, j)
    if direction == "h":
        units = list(D.h_units)
        inv = [D.index[D.h_inverse(s)] for s in D.squares]
    else:
        units = list(D.v_units)
        inv = [D.index[D.v_inverse(s)] for s in D.squares]
    return FiniteGroupoid(n, comp, units, inv, [D.label(i) for i in range(n)])


def groupoid_function_wha(g: FiniteGroupoid) -> WeakHopfAlgebra:
    """Functions on the arrows: pointwise product on deltas,
    ``Γ(δ_z) = Σ_{xy=z} δ_x (x) δ_y``, ``ε(f) = Σ_units f(u)`` and
    ``κ(f)(x) = f(x^-1)``."""
    n = g.n
    mult = {(i, i): {i: 1} for i in range(n)}
    alg = StarAlgebra(n, mult, {i: 1 for i in range(n)}, [{i: 1} for i in range(n)],
                      [f"δ{l}" for l in g.labels] if g.labels else None)
    cop: list[dict] = [dict() for _ in range(n)]
    for (x, y), z in g.compose.items():
        cop[z][x, y] = 1
    units = set(g.units)
    counit = [1 if x in units else 0 for x in range(n)]
    antipode = [{g.inverse[x]: 1} for x in range(n)]
    return WeakHopfAlgebra(alg, cop, counit, antipode)


def groupoid_regular_wha(g: FiniteGroupoid) -> WeakHopfAlgebra:
    """The groupoid algebra: ``ρ(x)ρ(y) = ρ(xy)`` when composable,
    ``Γ(ρ(x)) = ρ(x) (x) ρ(x)``, ``ε(ρ(x)) = 1``, ``κ(ρ(x)) = ρ(x^-1)``."""
    n = g.n
    mult = {(x, y): {z: 1} for (x, y), z in g.compose.items()}
    alg = StarAlgebra(n, mult, {u: 1 for u in g.units}, [{g.inverse[x]: 1} for x in range(n)],
                      [f"ρ{l}" for l in g.labels] if g.labels else None)
    cop = [{(x, x): 1} for x in range(n)]
    return WeakHopfAlgebra(alg, cop, [1] * n, [{g.inverse[x]: 1} for x in range(n)])


# -- comparing structures under a basis matching --------------------------------

def transport(W: WeakHopfAlgebra, perm: Sequence[int]) -> WeakHopfAlgebra:
    """Rename basis vector ``i`` to ``perm[i]``."""
    n = W.dim
    if sorted(perm) != list(range(n)):
        raise ValueError("perm must be a permutation of the basis")

    def v(x: Mapping) -> dict:
        return {perm[i]: c for i, c in x.items()}

    A = W.algebra
    mult = {(perm[i], perm[j]): v(p) for i, j, p in A.nonzero_pairs()}
    star = [None] * n
    cop = [None] * n
    counit = [0] * n
    anti = [None] * n
    labels = [None] * n
    for i in range(n):
        star[perm[i]] = v(A.star[i])
        cop[perm[i]] = {(perm[a], perm[b]): c for (a, b), c in W.coproduct[i].items()}
        counit[perm[i]] = W.counit[i]
        anti[perm[i]] = v(W.antipode[i])
        labels[perm[i]] = A.labels[i]
    alg = StarAlgebra(n, mult, v(A.unit), star, labels)
    return WeakHopfAlgebra(alg, cop, counit, anti)


def compare_structures(W1: WeakHopfAlgebra, W2: WeakHopfAlgebra) -> Report:
    """Literal equality of every structure constant."""
    A, B = W1.algebra, W2.algebra
    rep = Report()
    rep.add("same dimension", A.dim == B.dim, (A.dim, B.dim))
    if A.dim != B.dim:
        return rep
    rep.add("same product", A.mult == B.mult)
    rep.add("same unit", A.unit == B.unit)
    rep.add("same star", A.star == B.star)
    rep.add("same coproduct", W1.coproduct == W2.coproduct,
            next((i for i in range(A.dim) if W1.coproduct[i] != W2.coproduct[i]), None))
    rep.add("same counit", W1.counit == W2.counit)
    rep.add("same antipode", W1.antipode == W2.antipode)
    return rep


def degeneration_report(D: DoubleGroupoid, W: WeakHopfAlgebra) -> Report:
    """Compare the square algebra of a degenerate pair with the groupoid
    examples on ``G``.

    With ``K`` trivial every square is ``(h, e, e, h)`` and the algebra must be
    the group algebra, square ``h`` matched with ``ρ(h)``.  With ``H`` trivial
    every square is ``(e, g, g, e)``; the vertical gluing puts the two legs of
    the coproduct in the order ``Γ(δ_g) = Σ δ_y (x) δ_x`` over ``xy = g``, so
    the function algebra is matched through inversion, square ``g`` with
    ``δ_(g^-1)``.  The identity matching is reported as a diagnostic."""
    pair = D.pair
    G = pair.G
    rep = Report()
    if pair.K.order == 1:
        ref = groupoid_regular_wha(group_as_groupoid(G))
        perm = [s.a for s in D.squares]
        rep.extend(compare_structures(transport(W, perm), ref), "group algebra: ")
    elif pair.H.order == 1:
        ref = groupoid_function_wha(group_as_groupoid(G))
        perm = [G.inverse[s.b] for s in D.squares]
        rep.extend(compare_structures(transport(W, perm), ref), "functions on G: ")
        same = compare_structures(transport(W, [s.b for s in D.squares]), ref).ok
        rep.add("functions on G without inversion", same, diagnostic=True)
    else:
        raise ValueError("the pair is not degenerate: neither H nor K is trivial")
    return rep
