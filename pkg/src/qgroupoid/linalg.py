"""Exact sparse linear algebra over the rationals.

Vectors are ``dict[int, Fraction | int]`` holding only nonzero entries.
Coefficients stay Python ints whenever they are integral, which keeps the
hot loops fast; anything non-integral is a reduced :class:`fractions.Fraction`.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Hashable, Iterable, Mapping, Sequence, TypeVar

Scalar = int | Fraction
K = TypeVar("K", bound=Hashable)
Vec = dict


def q(x) -> Scalar:
    """Normalise a scalar: integral values become ``int``."""
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        return q(Fraction(x))
    raise TypeError(f"not an exact scalar: {x!r}")


def fmt(x: Scalar) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def add_into(acc: dict, v: Mapping, c: Scalar = 1) -> dict:
    """``acc += c * v`` in place, dropping entries that cancel."""
    for k, x in v.items():
        y = acc.get(k, 0) + c * x
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)
    return acc


def scale(v: Mapping, c: Scalar) -> dict:
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def sub(u: Mapping, v: Mapping) -> dict:
    return add_into(dict(u), v, -1)


def clean(v: Mapping) -> dict:
    return {k: q(x) for k, x in v.items() if x}


def dot(u: Mapping, v: Mapping) -> Scalar:
    if len(u) > len(v):
        u, v = v, u
    return sum((x * v[k] for k, x in u.items() if k in v), 0)


class Echelon:
    """Incrementally maintained row echelon form.

    Each stored row has leading coefficient 1 at its pivot column, the
    smallest column in that row (first-nonzero pivoting).  Column keys must be
    mutually comparable.
    """

    def __init__(self):
        self.rows: dict = {}

    def reduce(self, v: Mapping) -> dict:
        """Normal form of ``v`` modulo the span of the stored rows, with no
        stored pivot column left in the result's support after full
        reduction."""
        r = dict(v)
        rows = self.rows
        if not rows:
            return r
        # eliminate pivot columns in increasing order; pivot rows only carry
        # columns above their pivot, so each elimination is final
        pending = sorted(k for k in r if k in rows)
        while pending:
            c = pending.pop(0)
            x = r.get(c)
            if not x:
                continue
            for k, y in rows[c].items():
                z = r.get(k, 0) - x * y
                if z:
                    if k not in r and k in rows:
                        _insort(pending, k)
                    r[k] = z
                else:
                    r.pop(k, None)
        return r

    def add(self, v: Mapping) -> bool:
        """Insert ``v``; return True when it increased the rank."""
        r = self.reduce(v)
        if not r:
            return False
        c = min(r)
        inv = Fraction(1) / r[c]
        row = {k: q(x * inv) for k, x in r.items()}
        self.rows[c] = row
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list:
        return sorted(self.rows)

    def fully_reduced(self) -> dict:
        """Reduced row echelon form: every pivot column is zero in every other
        row."""
        out: dict = {}
        for c in sorted(self.rows, reverse=True):
            r = dict(self.rows[c])
            for k in sorted((k for k in r if k != c and k in out)):
                x = r.get(k)
                if not x:
                    continue
                for kk, y in out[k].items():
                    z = r.get(kk, 0) - x * y
                    if z:
                        r[kk] = z
                    else:
                        r.pop(kk, None)
            out[c] = {k: q(x) for k, x in r.items()}
        return out


def _insort(lst: list, k) -> None:
    lo, hi = 0, len(lst)
    while lo < hi:
        mid = (lo + hi) // 2
        if lst[mid] < k:
            lo = mid + 1
        else:
            hi = mid
    lst.insert(lo, k)


def echelon(rows: Iterable[Mapping]) -> Echelon:
    E = Echelon()
    for r in rows:
        E.add(r)
    return E


def rank(rows: Iterable[Mapping]) -> int:
    return echelon(rows).rank


def _normalized(row: Mapping) -> tuple:
    """Canonical form of a row up to a nonzero scalar."""
    items = sorted(row.items())
    lead = items[0][1]
    if all(isinstance(x, int) for _, x in items):
        g = 0
        for _, x in items:
            g = gcd(g, x)
        g = g if lead > 0 else -g
        return tuple((k, x // g) for k, x in items)
    return tuple((k, q(Fraction(x) / lead)) for k, x in items)


def _simplify(rows: Iterable[Mapping]) -> tuple[list[dict], set]:
    """Drop repeated rows (up to scale) and peel off columns that a
    one-entry row forces to zero."""
    rows = [r for r in rows if r]
    zero = {k for r in rows if len(r) == 1 for k, x in r.items() if x}
    pending = set()
    for r in rows:
        if len(r) > 1:
            kept = {k: x for k, x in r.items() if k not in zero}
            if kept:
                pending.add(_normalized(kept))
    while True:
        new = {t[0][0] for t in pending if len(t) == 1} - zero
        if not new:
            break
        zero |= new
        pending = {_normalized(dict(kept)) for t in pending
                   if (kept := [(k, x) for k, x in t if k not in zero])}
    return [dict(t) for t in sorted(pending)], zero


def nullspace(rows: Iterable[Mapping], columns: Sequence) -> list[dict]:
    """Basis of ``{x : r . x = 0 for every row r}`` with coordinates indexed by
    ``columns``.  One basis vector per free column, in column order."""
    rows, zero = _simplify(rows)
    E = echelon(rows)
    R = E.fully_reduced()
    basis = []
    for f in columns:
        if f in R or f in zero:
            continue
        v = {f: 1}
        for c, row in R.items():
            x = row.get(f)
            if x:
                v[c] = q(-x)
        basis.append(v)
    return basis


def span_equal(U: Sequence[Mapping], V: Sequence[Mapping]) -> bool:
    """Whether two finite families span the same subspace."""
    E = echelon(U)
    r = E.rank
    if any(E.reduce(v) for v in V):
        return False
    return rank(V) == r


def in_span(E: Echelon, v: Mapping) -> bool:
    return not E.reduce(v)
