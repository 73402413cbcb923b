"""Squares of a relative matched pair and their two partial products.

A square of ``T`` is ``(a, b, c, d)`` in ``H x K x K x H`` with ``a b = c d``;
``T'`` swaps the roles of ``H`` and ``K``.  Picture ``a`` on top, ``d`` at the
bottom, ``c`` on the left and ``b`` on the right: squares glue side by side
when the right edge of the first is the left edge of the second, and stack
when the bottom of the first is the top of the second.
"""
from __future__ import annotations

from collections import defaultdict
from functools import cached_property
from typing import NamedTuple

import numpy as np

from .matched_pair import RelativeMatchedPair
from .report import Report
from .tables import associativity_witness

#: value returned by a partial product whose arguments do not glue
NotComposable = None


class Square(NamedTuple):
    a: int
    b: int
    c: int
    d: int


class DoubleGroupoid:
    """All squares of one variant (``"T"`` or ``"T'"``), lexicographically
    ordered, with index lookup and partial products."""

    def __init__(self, pair: RelativeMatchedPair, variant: str = "T"):
        if variant not in ("T", "T'"):
            raise ValueError("variant must be 'T' or \"T'\"")
        self.pair = pair
        self.variant = variant
        G = pair.G
        t, inv = G.table, G.inverse
        X, Y = (pair.H, pair.K) if variant == "T" else (pair.K, pair.H)
        self.X, self.Y = X, Y
        squares = []
        for a in X.elements:
            for b in Y.elements:
                ab = t[a][b]
                for c in Y.elements:
                    d = t[inv[c]][ab]
                    if d in X:
                        squares.append(Square(a, b, c, d))
        self.squares: list[Square] = squares
        self.index: dict[Square, int] = {s: i for i, s in enumerate(squares)}
        by_a, by_c = defaultdict(list), defaultdict(list)
        for i, s in enumerate(squares):
            by_a[s.a].append(i)
            by_c[s.c].append(i)
        self.by_top = dict(by_a)
        self.by_left = dict(by_c)

    def __len__(self) -> int:
        return len(self.squares)

    def __iter__(self):
        return iter(self.squares)

    def __getitem__(self, i: int) -> Square:
        return self.squares[i]

    def __repr__(self) -> str:
        return f"DoubleGroupoid({self.variant}, {len(self)} squares)"

    def is_square(self, s) -> bool:
        return tuple(s) in self.index

    def label(self, i: int) -> str:
        n = self.pair.G.name
        return "[" + ",".join(n(x) for x in self.squares[i]) + "]"

    # -- partial products -------------------------------------------------------

    def h_compose(self, t1: Square, t2: Square) -> Square | None:
        """Glue ``t1`` to the left of ``t2``; needs ``t1.b == t2.c``."""
        if t1.b != t2.c:
            return NotComposable
        m = self.pair.G.table
        return Square(m[t1.a][t2.a], t2.b, t1.c, m[t1.d][t2.d])

    def v_compose(self, t1: Square, t2: Square) -> Square | None:
        """Stack ``t1`` on top of ``t2``; needs ``t1.d == t2.a``."""
        if t1.d != t2.a:
            return NotComposable
        m = self.pair.G.table
        return Square(t1.a, m[t1.b][t2.b], m[t1.c][t2.c], t2.d)

    def h_index(self, i: int, j: int) -> int | None:
        r = self.h_compose(self.squares[i], self.squares[j])
        return None if r is None else self.index[r]

    def v_index(self, i: int, j: int) -> int | None:
        r = self.v_compose(self.squares[i], self.squares[j])
        return None if r is None else self.index[r]

    def h_unit(self, y: int) -> Square:
        return Square(0, y, y, 0)

    def v_unit(self, x: int) -> Square:
        return Square(x, 0, 0, x)

    def h_inverse(self, s: Square) -> Square:
        inv = self.pair.G.inverse
        return Square(inv[s.a], s.c, s.b, inv[s.d])

    def v_inverse(self, s: Square) -> Square:
        inv = self.pair.G.inverse
        return Square(s.d, inv[s.b], inv[s.c], s.a)

    def hv_inverse(self, s: Square) -> Square:
        inv = self.pair.G.inverse
        return Square(inv[s.d], inv[s.c], inv[s.b], inv[s.a])

    @cached_property
    def h_units(self) -> list[int]:
        return [i for i, s in enumerate(self.squares) if s.a == 0 and s.d == 0]

    @cached_property
    def v_units(self) -> list[int]:
        return [i for i, s in enumerate(self.squares) if s.b == 0 and s.c == 0]

    # -- transpose ----------------------------------------------------------

    @cached_property
    def opposite(self) -> "DoubleGroupoid":
        return DoubleGroupoid(self.pair, "T'" if self.variant == "T" else "T")

    def transpose(self, s: Square) -> Square:
        return Square(s.c, s.d, s.a, s.b)

    @cached_property
    def transpose_index(self) -> list[int]:
        """``transpose_index[i]`` is the index of the transpose in the opposite
        variant."""
        op = self.opposite
        return [op.index[self.transpose(s)] for s in self.squares]


def enumerate_T(pair: RelativeMatchedPair) -> DoubleGroupoid:
    return DoubleGroupoid(pair, "T")


def enumerate_T_prime(pair: RelativeMatchedPair) -> DoubleGroupoid:
    return DoubleGroupoid(pair, "T'")


def _first(it):
    return next(iter(it), None)


def find_inverse_by_search(D: DoubleGroupoid, s: Square, direction: str) -> list[Square]:
    """All squares ``u`` composing with ``s`` on both sides to units in the
    given direction (``"h"`` or ``"v"``).  Independent of the closed forms."""
    comp = D.h_compose if direction == "h" else D.v_compose
    out = []
    for u in D.squares:
        left, right = comp(s, u), comp(u, s)
        if left is None or right is None:
            continue
        if direction == "h":
            ok = left.a == left.d == 0 and right.a == right.d == 0
        else:
            ok = left.b == left.c == 0 and right.b == right.c == 0
        if ok:
            out.append(u)
    return out


def _interchange_witness(D: DoubleGroupoid, hor: np.ndarray, ver: np.ndarray):
    """First quadruple ``(t1, t2, t3, t4)`` (``t2`` right of ``t1``, ``t3``
    below ``t1``, ``t4`` below ``t2`` and right of ``t3``) on which the two
    ways of composing disagree, and the number of quadruples compared."""
    sq = D.squares
    order = D.pair.G.order
    A = np.array([s.a for s in sq], dtype=np.int64)
    B = np.array([s.b for s in sq], dtype=np.int64)
    C = np.array([s.c for s in sq], dtype=np.int64)
    Dd = np.array([s.d for s in sq], dtype=np.int64)
    # squares by (left edge, top edge)
    corner: dict = defaultdict(list)
    for i, s in enumerate(sq):
        corner[s.c, s.a].append(i)
    m = max((len(v) for v in corner.values()), default=0)
    by_corner = np.full((order, order, max(m, 1)), -1, dtype=np.int64)
    for (c, a), v in corner.items():
        by_corner[c, a, :len(v)] = v
    checked = 0
    for i in range(len(sq)):
        J = np.flatnonzero(hor[i] >= 0)
        K = np.flatnonzero(ver[i] >= 0)
        if not J.size or not K.size:
            continue
        L = by_corner[B[K][None, :], Dd[J][:, None]]
        valid = L >= 0
        Ls = np.where(valid, L, 0)
        Kx = K[None, :, None]
        Jx = J[:, None, None]
        left = ver[hor[i, J][:, None, None], hor[Kx, Ls]]
        right = hor[ver[i, K][None, :, None], ver[Jx, Ls]]
        both = valid & (left >= 0) & (right >= 0)
        checked += int(both.sum())
        diff = np.argwhere(both & (left != right))
        if diff.size:
            a, b, c = diff[0]
            return (sq[i], sq[J[a]], sq[K[b]], sq[L[a, b, c]]), checked
    return None, checked


def verify_double_groupoid(D: DoubleGroupoid, interchange: bool = True) -> Report:
    """Both groupoid structures, the inverses, the counts and the interchange
    law.  The interchange law is reported as a diagnostic finding."""
    pair = D.pair
    H, K, S = pair.H, pair.K, pair.S
    sq = D.squares
    idx = D.index
    rep = Report()
    rep.add("|T| = |H||K||S|", len(sq) == H.order * K.order * S.order,
            detail=f"{len(sq)} squares")
    corner: dict = defaultdict(int)
    for s in sq:
        corner[s.a, s.b] += 1
    bad = _first(ab for ab, n in corner.items() if n != S.order)
    rep.add("corner count is |S|", bad is None and len(corner) == D.X.order * D.Y.order, bad)

    # products: closure, then associativity on index tables
    tables = {}
    for name, comp, edge, start, partners in (("horizontal", D.h_compose, "b", "c", D.by_left),
                                              ("vertical", D.v_compose, "d", "a", D.by_top)):
        table = np.full((len(sq), len(sq)), -1, dtype=np.int64)
        bad = None
        for i, s in enumerate(sq):
            for j in partners.get(getattr(s, edge), ()):
                r = idx.get(comp(s, sq[j]))
                if r is None:
                    bad = (s, sq[j])
                    break
                table[i, j] = r
            if bad:
                break
        rep.add(f"{name} product closed", bad is None, bad)
        if bad:
            continue
        tables[name] = table
        bad = associativity_witness(table, [getattr(s, edge) for s in sq],
                                    [getattr(s, start) for s in sq])
        rep.add(f"{name} product associative", bad is None,
                None if bad is None else tuple(sq[x] for x in bad))

    hu = {sq[i] for i in D.h_units}
    vu = {sq[i] for i in D.v_units}
    rep.add("horizontal units are (e,y,y,e)", hu == {D.h_unit(y) for y in D.Y.elements})
    rep.add("vertical units are (x,e,e,x)", vu == {D.v_unit(x) for x in D.X.elements})
    bad = _first(s for s in sq if D.h_compose(D.h_unit(s.c), s) != s or D.h_compose(s, D.h_unit(s.b)) != s)
    rep.add("horizontal units act as identities", bad is None, bad)
    bad = _first(s for s in sq if D.v_compose(D.v_unit(s.a), s) != s or D.v_compose(s, D.v_unit(s.d)) != s)
    rep.add("vertical units act as identities", bad is None, bad)
    bad = _first(s for s in sq
                 if D.h_inverse(s) not in idx
                 or D.h_compose(s, D.h_inverse(s)) != D.h_unit(s.c)
                 or D.h_compose(D.h_inverse(s), s) != D.h_unit(s.b))
    rep.add("horizontal inverse", bad is None, bad)
    bad = _first(s for s in sq
                 if D.v_inverse(s) not in idx
                 or D.v_compose(s, D.v_inverse(s)) != D.v_unit(s.a)
                 or D.v_compose(D.v_inverse(s), s) != D.v_unit(s.d))
    rep.add("vertical inverse", bad is None, bad)
    bad = _first(s for s in sq
                 if not (D.hv_inverse(s) == D.v_inverse(D.h_inverse(s)) == D.h_inverse(D.v_inverse(s))))
    rep.add("hv inverse agrees both ways", bad is None, bad)

    if interchange and len(tables) == 2:
        bad, checked = _interchange_witness(D, tables["horizontal"], tables["vertical"])
        rep.add("interchange law", bad is None, bad, detail=f"{checked} quadruples",
                diagnostic=True)

    op = D.opposite
    tr = D.transpose_index
    rep.add("transpose is a bijection onto the opposite variant",
            sorted(tr) == list(range(len(op))) and len(op) == len(sq))
    rep.add("transpose is an involution",
            all(op.transpose(D.transpose(s)) == s for s in sq))
    return rep


def verify_transpose_characterization(T: DoubleGroupoid) -> Report:
    """For ``t = (h,k,k',h')`` in ``T`` and ``t1 = (k1,h1,h1',k1')`` in ``T'``:
    ``t1`` is the transpose of ``t`` exactly when ``h k = k1 h1``, ``h = h1'``
    and ``k' = k1``."""
    m = np.array(T.pair.G.table, dtype=np.int64)
    Tp = T.opposite
    ua = np.array([u.a for u in Tp.squares], dtype=np.int64)
    ub = np.array([u.b for u in Tp.squares], dtype=np.int64)
    uc = np.array([u.c for u in Tp.squares], dtype=np.int64)
    prod = m[ua, ub]
    bad = None
    for s, want in zip(T.squares, T.transpose_index):
        cond = (prod == m[s.a, s.b]) & (uc == s.a) & (ua == s.c)
        expected = np.zeros(len(Tp), dtype=bool)
        expected[want] = True
        diff = np.flatnonzero(cond != expected)
        if diff.size:
            bad = (s, Tp.squares[int(diff[0])])
            break
    rep = Report()
    rep.add("transpose characterization", bad is None, bad)
    return rep
