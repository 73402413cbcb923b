"""Finite-dimensional associative *-algebras over Q with sparse structure
constants.

A basis product ``e_i e_j`` is stored only when nonzero, as a sparse vector.
The involution is given on basis vectors and extended linearly; every
structure in this package has rational constants and a star that permutes
basis vectors up to sign, so complex conjugation never enters.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from .linalg import Echelon, add_into, clean, echelon, nullspace, q, scale
from .report import Report
from .tables import associativity_witness, dense_table


class IllDefinedOnQuotient(ValueError):
    def __init__(self, msg: str, witness=None):
        super().__init__(msg)
        self.witness = witness


class StarAlgebra:
    """Associative *-algebra with basis ``e_0 .. e_{dim-1}``.

    ``mult`` maps ``(i, j)`` to the sparse vector ``e_i e_j`` (zero products
    omitted), ``unit`` is the unit vector, ``star[i]`` the vector ``e_i^*``.
    """

    def __init__(self, dim: int, mult: Mapping[tuple[int, int], Mapping[int, object]],
                 unit: Mapping[int, object], star: Sequence[Mapping[int, object]],
                 labels: Sequence[str] | None = None):
        self.dim = dim
        self.labels = list(labels) if labels is not None else [f"e{i}" for i in range(dim)]
        right: list[dict[int, dict]] = [dict() for _ in range(dim)]
        left: list[set[int]] = [set() for _ in range(dim)]
        for (i, j), v in mult.items():
            v = clean(v)
            if v:
                right[i][j] = v
                left[j].add(i)
        self._right = right
        self._left = [sorted(s) for s in left]
        self.unit = clean(unit)
        self.star = [clean(s) for s in star]
        if len(self.star) != dim:
            raise ValueError("star must give one image per basis vector")

    # -- structure access -------------------------------------------------

    @property
    def mult(self) -> dict[tuple[int, int], dict]:
        return {(i, j): v for i in range(self.dim) for j, v in self._right[i].items()}

    def nonzero_pairs(self):
        for i in range(self.dim):
            for j, v in self._right[i].items():
                yield i, j, v

    def basis_product(self, i: int, j: int) -> dict:
        return self._right[i].get(j, {})

    def right_partners(self, i: int) -> Iterable[int]:
        return self._right[i].keys()

    def left_partners(self, j: int) -> list[int]:
        return self._left[j]

    def basis(self, i: int) -> dict:
        return {i: 1}

    # -- vector operations --------------------------------------------------

    def multiply(self, x: Mapping, y: Mapping) -> dict:
        out: dict = {}
        for i, a in x.items():
            r = self._right[i]
            if len(r) <= len(y):
                for j, p in r.items():
                    b = y.get(j)
                    if b:
                        add_into(out, p, a * b)
            else:
                for j, b in y.items():
                    p = r.get(j)
                    if p:
                        add_into(out, p, a * b)
        return out

    def star_of(self, x: Mapping) -> dict:
        out: dict = {}
        for i, a in x.items():
            add_into(out, self.star[i], a)
        return out

    @property
    def edge_labels(self) -> tuple[list[int], list[int]] | None:
        """Labels ``(right, left)`` with ``e_a e_c != 0`` exactly when
        ``right[a] == left[c]``, if the algebra admits such labels (as
        groupoid-like algebras do); otherwise None."""
        cached = self.__dict__.get("_edge_labels", False)
        if cached is not False:
            return cached
        intern: dict = {}
        right = [intern.setdefault(frozenset(self._right[a]), len(intern)) for a in range(self.dim)]
        left = []
        result = (right, left)
        for c in range(self.dim):
            ls = self._left[c]
            if not ls:
                left.append(-1 - c)
                continue
            lab = right[ls[0]]
            if any(right[a] != lab for a in ls):
                result = None
                break
            left.append(lab)
        self.__dict__["_edge_labels"] = result
        return result

    @property
    def monomial_table(self) -> list[dict[int, int]] | None:
        """``table[a][c] = u`` when every nonzero product is a single basis
        vector ``e_a e_c = e_u``; None otherwise."""
        cached = self.__dict__.get("_monomial", False)
        if cached is not False:
            return cached
        table: list | None = []
        for r in self._right:
            row = {}
            for c, v in r.items():
                if len(v) != 1:
                    table = None
                    break
                (u, x), = v.items()
                if x != 1:
                    table = None
                    break
                row[c] = u
            if table is None:
                break
            table.append(row)
        self.__dict__["_monomial"] = table
        return table

    def is_commutative(self) -> bool:
        # every nonzero product must appear with the same value transposed;
        # this also covers zero products, since both directions are scanned
        return all(self.basis_product(j, i) == v for i, j, v in self.nonzero_pairs())

    def monomial_generators(self) -> list[int] | None:
        """Basis vectors whose products reach every basis vector.

        Greedy: a basis vector not yet reached becomes a generator.  Only
        available for monomial algebras; None otherwise."""
        mono = self.monomial_table
        if mono is None:
            return None
        gens: list[int] = []
        reached = [False] * self.dim
        order: list[int] = []

        def close(queue: list[int]) -> None:
            while queue:
                r = queue.pop()
                for g in gens:
                    u = mono[r].get(g)
                    if u is not None and not reached[u]:
                        reached[u] = True
                        order.append(u)
                        queue.append(u)

        for i in range(self.dim):
            if reached[i]:
                continue
            gens.append(i)
            reached[i] = True
            order.append(i)
            queue = [i]
            # everything reached so far may now be extended by i
            for r in list(order):
                u = mono[r].get(i)
                if u is not None and not reached[u]:
                    reached[u] = True
                    order.append(u)
                    queue.append(u)
            close(queue)
        return gens

    def __repr__(self) -> str:
        return f"StarAlgebra(dim={self.dim})"


def bilinear(f: Callable[[int, int], Mapping], x: Mapping, y: Mapping) -> dict:
    out: dict = {}
    for i, a in x.items():
        for j, b in y.items():
            add_into(out, f(i, j), a * b)
    return out


def vectors_commute(A: StarAlgebra, x: Mapping, y: Mapping) -> bool:
    return A.multiply(x, y) == A.multiply(y, x)


# -- standard algebras ---------------------------------------------------------

def one_dim_algebra() -> StarAlgebra:
    return StarAlgebra(1, {(0, 0): {0: 1}}, {0: 1}, [{0: 1}], ["1"])


def group_algebra(G) -> StarAlgebra:
    """``Q[G]`` with ``u_g^* = u_{g^-1}``."""
    n = G.order
    mult = {(x, y): {G.table[x][y]: 1} for x in range(n) for y in range(n)}
    return StarAlgebra(n, mult, {0: 1}, [{G.inverse[x]: 1} for x in range(n)],
                       [f"u({G.name(x)})" for x in range(n)])


def matrix_algebra(n: int) -> StarAlgebra:
    """``M_n(Q)`` on matrix units ``E_ab`` (index ``a*n + b``), transpose as star."""
    mult = {}
    for a in range(n):
        for b in range(n):
            for c in range(n):
                mult[(a * n + b, b * n + c)] = {a * n + c: 1}
    unit = {a * n + a: 1 for a in range(n)}
    star = [{(i % n) * n + i // n: 1} for i in range(n * n)]
    return StarAlgebra(n * n, mult, unit, star, [f"E{a}{b}" for a in range(n) for b in range(n)])


def function_algebra(n: int, labels: Sequence[str] | None = None) -> StarAlgebra:
    """Functions on an ``n``-point set, pointwise product on the delta basis."""
    mult = {(i, i): {i: 1} for i in range(n)}
    return StarAlgebra(n, mult, {i: 1 for i in range(n)}, [{i: 1} for i in range(n)], labels)


def tensor_algebra(A: StarAlgebra, B: StarAlgebra) -> StarAlgebra:
    """``A (x) B`` with basis index ``i * B.dim + j``."""
    nb = B.dim
    mult = {}
    bprods = list(B.nonzero_pairs())
    for i, i2, va in A.nonzero_pairs():
        for j, j2, vb in bprods:
            mult[(i * nb + j, i2 * nb + j2)] = {k * nb + l: a * b
                                                for k, a in va.items() for l, b in vb.items()}
    unit = {i * nb + j: a * b for i, a in A.unit.items() for j, b in B.unit.items()}
    star = [{k * nb + l: a * b for k, a in A.star[i].items() for l, b in B.star[j].items()}
            for i in range(A.dim) for j in range(nb)]
    labels = [f"{x}⊗{y}" for x in A.labels for y in B.labels]
    return StarAlgebra(A.dim * nb, mult, unit, star, labels)


# -- verification ---------------------------------------------------------

def check_associativity(A: StarAlgebra) -> tuple[bool, object]:
    """Compare ``(e_i e_j) e_k`` with ``e_i (e_j e_k)`` on every triple where
    either side can be nonzero; returns ``(ok, witness)``."""
    right = A._right
    mono = A.monomial_table
    labels = A.edge_labels
    if mono is not None and labels is not None:
        w = associativity_witness(dense_table(mono), *labels)
        return w is None, w

    def both(i, j, k):
        if mono is not None:
            ij, jk = mono[i].get(j), mono[j].get(k)
            lhs = None if ij is None else mono[ij].get(k)
            rhs = None if jk is None else mono[i].get(jk)
            return lhs == rhs
        lhs = A.multiply(right[i].get(j, {}), {k: 1})
        rhs = A.multiply({i: 1}, right[j].get(k, {}))
        return lhs == rhs

    # first pass: e_i e_j != 0, so the left side may be nonzero for k among
    # the right partners of its support, the right side for k after j
    for i, j, v in A.nonzero_pairs():
        ks = set(right[j])
        for m in v:
            ks.update(right[m])
        for k in ks:
            if not both(i, j, k):
                return False, (i, j, k)
    # second pass: e_i e_j = 0 while e_i (e_j e_k) may not be
    for j, k, v in A.nonzero_pairs():
        is_: set = set()
        for m in v:
            is_.update(A.left_partners(m))
        for i in is_:
            if j in right[i]:
                continue
            if not both(i, j, k):
                return False, (i, j, k)
    return True, None


def _star_candidates(A: StarAlgebra, images: Sequence[Mapping], target: StarAlgebra):
    """Pairs ``(i, j)`` for which ``images[i] * images[j]`` may be nonzero in
    ``target``."""
    inv = defaultdict(list)
    for i, im in enumerate(images):
        for u in im:
            inv[u].append(i)
    for u, w, _ in target.nonzero_pairs():
        for i in inv.get(u, ()):
            for j in inv.get(w, ()):
                yield i, j


def verify_algebra(A: StarAlgebra) -> Report:
    """Associativity, two-sided unit, involutivity and anti-multiplicativity
    of the star.  Failures carry a witnessing basis tuple."""
    rep = Report()
    ok, w = check_associativity(A)
    rep.add("associativity", ok, w)

    bad = None
    for i in range(A.dim):
        e = {i: 1}
        if A.multiply(A.unit, e) != e or A.multiply(e, A.unit) != e:
            bad = i
            break
    rep.add("unit", bad is None, bad)

    bad = None
    for i in range(A.dim):
        if A.star_of(A.star[i]) != {i: 1}:
            bad = i
            break
    rep.add("star involutive", bad is None, bad)

    bad = None
    pairs = {(i, j) for i, j, _ in A.nonzero_pairs()}
    # (e_i e_j)^* = e_j^* e_i^*: the right side is nonzero only through
    # nonzero products of star images
    pairs.update((i, j) for j, i in _star_candidates(A, A.star, A))
    for i, j in sorted(pairs):
        lhs = A.star_of(A.basis_product(i, j))
        rhs = A.multiply(A.star[j], A.star[i])
        if lhs != rhs:
            bad = (i, j)
            break
    rep.add("star anti-multiplicative", bad is None, bad)
    return rep


def center(A: StarAlgebra) -> list[dict]:
    """Rational basis of ``{x : xy = yx for all y}``."""
    rows: dict = defaultdict(dict)
    for a, b, v in A.nonzero_pairs():
        for k, c in v.items():
            # x_a e_a e_b contributes to (x e_b)_k; e_a x_b e_b to (e_a x)_k
            add_into(rows[(b, k)], {a: c})
            add_into(rows[(a, k)], {b: -c})
    return nullspace([r for r in rows.values() if r], range(A.dim))


def solve_subspace(constraints: Iterable[Mapping], dim: int) -> list[dict]:
    """Exact nullspace of stacked linear conditions on ``Q^dim``."""
    return nullspace(constraints, range(dim))


# -- linear maps ---------------------------------------------------------------

@dataclass
class LinearMap:
    """``images[i]`` is the image of the source basis vector ``e_i``."""

    source: StarAlgebra
    target: StarAlgebra
    images: list[dict]

    def __post_init__(self):
        if len(self.images) != self.source.dim:
            raise ValueError("one image per source basis vector required")
        self.images = [clean(v) for v in self.images]
        for v in self.images:
            if any(not (0 <= k < self.target.dim) for k in v):
                raise ValueError("image index out of range")

    def __call__(self, x: Mapping) -> dict:
        out: dict = {}
        for i, a in x.items():
            add_into(out, self.images[i], a)
        return out


def verify_homomorphism(f: LinearMap) -> Report:
    A, B = f.source, f.target
    rep = Report()
    pairs = {(i, j) for i, j, _ in A.nonzero_pairs()}
    pairs.update(_star_candidates(A, f.images, B))
    bad = None
    for i, j in sorted(pairs):
        if f(A.basis_product(i, j)) != B.multiply(f.images[i], f.images[j]):
            bad = (i, j)
            break
    rep.add("multiplicative", bad is None, bad)
    bad = None
    for i in range(A.dim):
        if f(A.star[i]) != B.star_of(f.images[i]):
            bad = i
            break
    rep.add("star-preserving", bad is None, bad)
    rep.add("unital", f(A.unit) == B.unit, None if f(A.unit) == B.unit else "f(1) != 1")
    return rep


def verify_isomorphism(f: LinearMap) -> Report:
    rep = verify_homomorphism(f)
    r = echelon(f.images).rank
    rep.add("bijective", r == f.source.dim == f.target.dim,
            None if r == f.source.dim == f.target.dim else f"rank {r}",
            detail=f"rank {r}, dims {f.source.dim} -> {f.target.dim}")
    return rep


# -- quotients of tensor products ---------------------------------------------

@dataclass
class QuotientTensor:
    """A quotient of ``M (x) A`` (basis index ``m * dim_A + a``) by a span of
    relators, carrying the induced *-algebra and the well-definedness
    findings."""

    dim_M: int
    dim_A: int
    algebra: StarAlgebra
    standard: list[int]
    reduced: dict
    report: Report = field(default_factory=Report)

    def project(self, v: Mapping) -> dict:
        """Class of a vector of ``M (x) A`` in quotient coordinates."""
        r = _normal_form(self.reduced, v)
        pos = self._pos
        return {pos[k]: x for k, x in r.items()}

    @property
    def _pos(self) -> dict:
        p = self.__dict__.get("_posmap")
        if p is None:
            p = {k: i for i, k in enumerate(self.standard)}
            self.__dict__["_posmap"] = p
        return p


def _normal_form(R: Mapping, v: Mapping) -> dict:
    r = dict(v)
    for c in [k for k in r if k in R]:
        x = r.pop(c)
        for k, y in R[c].items():
            if k == c:
                continue
            z = r.get(k, 0) - x * y
            if z:
                r[k] = z
            else:
                r.pop(k, None)
    return {k: q(x) for k, x in r.items()}


def quotient_tensor(dim_M: int, dim_A: int,
                    product: Callable[[int, int], Mapping],
                    star: Callable[[int], Mapping],
                    unit: Mapping,
                    relators: Iterable[Mapping],
                    labels: Sequence[str] | None = None,
                    strict: bool = False) -> QuotientTensor:
    """Quotient ``(M (x) A) / span(relators)`` with the product and star
    induced from formulas on ``M (x) A``.

    ``product(u, v)`` and ``star(u)`` act on basis indices of ``M (x) A``.
    The induced operations are checked to descend: every relator must map to
    zero under left and right multiplication by any basis class, and under
    the star.  A failure is recorded in ``report`` (or raised as
    :class:`IllDefinedOnQuotient` when ``strict``).
    """
    total = dim_M * dim_A
    E = echelon(relators)
    R = E.fully_reduced()
    standard = [u for u in range(total) if u not in R]
    pos = {u: i for i, u in enumerate(standard)}

    def proj(v):
        return {pos[k]: x for k, x in _normal_form(R, v).items()}

    rep = Report()
    bad = None
    rel_rows = [R[c] for c in sorted(R)]
    for ri, r in enumerate(rel_rows):
        for u in standard:
            if proj(bilinear(product, r, {u: 1})) or proj(bilinear(product, {u: 1}, r)):
                bad = (ri, u)
                break
        if bad is not None:
            break
    rep.add("product descends to quotient", bad is None, bad)
    bad_star = None
    for ri, r in enumerate(rel_rows):
        s: dict = {}
        for k, x in r.items():
            add_into(s, star(k), x)
        if proj(s):
            bad_star = ri
            break
    rep.add("star descends to quotient", bad_star is None, bad_star)
    if strict and not rep.ok:
        raise IllDefinedOnQuotient("operations do not descend", rep.failures()[0].witness)

    mult = {}
    for u in standard:
        for v in standard:
            p = proj(product(u, v))
            if p:
                mult[(pos[u], pos[v])] = p
    qstar = [proj(star(u)) for u in standard]
    qlabels = [labels[u] for u in standard] if labels is not None else None
    alg = StarAlgebra(len(standard), mult, proj(unit), qstar, qlabels)
    return QuotientTensor(dim_M, dim_A, alg, standard, R, rep)
