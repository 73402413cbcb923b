"""The bracket between the square algebras of ``T`` and ``T'``.

``<x, x'>`` is ``|S|`` when ``x'`` is the transpose of ``x`` and 0 otherwise.
Under this bracket the product of one side is adjoint to the coproduct of the
other, provided the tensor legs are read in reverse order.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from ..double_groupoid import DoubleGroupoid, Square
from ..linalg import add_into, echelon
from ..matched_pair import RelativeMatchedPair
from ..report import Report
from .weak_hopf import WeakHopfAlgebra


def pairing(pair: RelativeMatchedPair, x: Square, xp: Square) -> int:
    """``|S|`` if ``xp`` is the transpose of ``x``, else 0."""
    return pair.S.order if tuple(xp) == (x.c, x.d, x.a, x.b) else 0


@dataclass
class DualityPairing:
    """``matrix[i]`` is the sparse row ``{j: <e_i, e'_j>}``."""

    left: WeakHopfAlgebra
    right: WeakHopfAlgebra
    matrix: list[dict]

    def value(self, x: dict, y: dict):
        tot = 0
        for i, a in x.items():
            row = self.matrix[i]
            for j, b in y.items():
                v = row.get(j)
                if v:
                    tot += a * b * v
        return tot

    @property
    def columns(self) -> list[dict]:
        cols: list[dict] = [dict() for _ in range(self.right.dim)]
        for i, row in enumerate(self.matrix):
            for j, v in row.items():
                cols[j][i] = v
        return cols


def build_pairing(pair: RelativeMatchedPair, W: WeakHopfAlgebra, Wp: WeakHopfAlgebra,
                  T: DoubleGroupoid | None = None) -> DualityPairing:
    T = T if T is not None else DoubleGroupoid(pair, "T")
    Tp = T.opposite
    rows = []
    for x in T.squares:
        row = {}
        # only the transpose can pair nontrivially, but evaluate the bracket
        # itself rather than the formula it reduces to
        j = Tp.index[T.transpose(x)]
        v = pairing(pair, x, Tp.squares[j])
        if v:
            row[j] = v
        rows.append(row)
    return DualityPairing(W, Wp, rows)


def pairing_matrix_dense(pair: RelativeMatchedPair, T: DoubleGroupoid) -> list[list[int]]:
    """Full ``|T| x |T'|`` matrix by evaluating every bracket."""
    Tp = T.opposite
    return [[pairing(pair, x, y) for y in Tp.squares] for x in T.squares]


def _product_index(W: WeakHopfAlgebra) -> dict:
    """``w -> [(i, j, c)]`` with ``e_i e_j`` having coefficient ``c`` at ``w``."""
    idx: dict = defaultdict(list)
    for i, j, v in W.algebra.nonzero_pairs():
        for w, c in v.items():
            idx[w].append((i, j, c))
    return idx


def _adjoint_check(P: list[dict], WA: WeakHopfAlgebra, WB: WeakHopfAlgebra, reverse: bool):
    """Compare ``<Γ_A(x), y (x) z>`` with ``<x, z y>`` (``reverse``) or
    ``<x, y z>``, for every ``x`` in A and ``y, z`` in B.  Returns a witness
    ``(x, y, z)`` or None.  Triples absent from both sides pair to zero."""
    prods = _product_index(WB)
    for x in range(WA.dim):
        lhs: dict = {}
        for (a, b), c in WA.coproduct[x].items():
            for y, p1 in P[a].items():
                for z, p2 in P[b].items():
                    add_into(lhs, {(y, z): 1}, c * p1 * p2)
        rhs: dict = {}
        for w, px in P[x].items():
            for i, j, c in prods.get(w, ()):
                key = (j, i) if reverse else (i, j)
                add_into(rhs, {key: 1}, c * px)
        if lhs != rhs:
            diff = set(lhs) ^ set(rhs) or {k for k in lhs if lhs[k] != rhs[k]}
            y, z = min(diff)
            return (x, y, z)
    return None


def verify_duality(D: DualityPairing) -> Report:
    """Adjointness of products and coproducts in both directions (reversed
    legs), counit/unit compatibility, antipode/star compatibility and
    nondegeneracy.  The unreversed leg order is reported as a diagnostic."""
    A, B = D.left, D.right
    P = D.matrix
    Pt = D.columns
    rep = Report()

    w = _adjoint_check(P, A, B, reverse=True)
    rep.add("<Γ(x), y⊗z> = <x, zy>", w is None, w)
    w = _adjoint_check(Pt, B, A, reverse=True)
    rep.add("<x⊗y, Γ'(b)> = <yx, b>", w is None, w)
    w = _adjoint_check(P, A, B, reverse=False)
    rep.add("<Γ(x), y⊗z> = <x, yz>", w is None, w, diagnostic=True)
    w = _adjoint_check(Pt, B, A, reverse=False)
    rep.add("<x⊗y, Γ'(b)> = <xy, b>", w is None, w, diagnostic=True)

    one_a = A.algebra.unit
    bad = next((b for b in range(B.dim) if D.value(one_a, {b: 1}) != B.counit[b]), None)
    rep.add("ε'(b) = <1, b>", bad is None, bad)
    one_b = B.algebra.unit
    bad = next((x for x in range(A.dim) if D.value({x: 1}, one_b) != A.counit[x]), None)
    rep.add("ε(x) = <x, 1'>", bad is None, bad)

    # <a, κ'(b)> = <a*, b*>, compared row by row
    kinv: dict = defaultdict(list)
    for b in range(B.dim):
        for w_, c in B.antipode[b].items():
            kinv[w_].append((b, c))
    sinv: dict = defaultdict(list)
    for b in range(B.dim):
        for w_, c in B.algebra.star[b].items():
            sinv[w_].append((b, c))
    bad = None
    for a in range(A.dim):
        lhs: dict = {}
        for w_, p in P[a].items():
            for b, c in kinv.get(w_, ()):
                add_into(lhs, {b: 1}, c * p)
        rhs: dict = {}
        for u, su in A.algebra.star[a].items():
            for w_, p in P[u].items():
                for b, c in sinv.get(w_, ()):
                    add_into(rhs, {b: 1}, su * p * c)
        if lhs != rhs:
            bad = a
            break
    rep.add("<a, κ'(b)> = <a*, b*>", bad is None, bad)

    r = echelon(P).rank
    rep.add("pairing nondegenerate", r == A.dim == B.dim, detail=f"rank {r}")
    return rep


def verify_pairing_matrix(pair: RelativeMatchedPair, D: DualityPairing, T: DoubleGroupoid) -> Report:
    """The matrix is ``|S|`` times the permutation matrix of the transpose."""
    tr = T.transpose_index
    s = pair.S.order
    rep = Report()
    bad = next((i for i, row in enumerate(D.matrix) if row != {tr[i]: s}), None)
    rep.add("pairing = |S| x transpose permutation", bad is None and sorted(tr) == list(range(len(tr))), bad)
    return rep
