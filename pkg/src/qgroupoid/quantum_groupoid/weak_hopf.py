"""Weak Hopf *-algebras with sparse exact structure, and their verifier."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Mapping

from ..double_groupoid import DoubleGroupoid
from ..linalg import add_into, clean, echelon, nullspace, q, span_equal
from ..matched_pair import RelativeMatchedPair
from ..report import Report
from ..star_algebra import StarAlgebra, _star_candidates, verify_algebra
from .vectorized import INT_BOUND, MonomialArrays

Tensor = dict  # (i, j) -> scalar


@dataclass
class WeakHopfAlgebra:
    """An algebra with coproduct, counit and antipode.

    ``coproduct[i]`` is ``Γ(e_i)`` as a dict over pairs ``(j, k)``,
    ``counit[i]`` is ``ε(e_i)`` and ``antipode[i]`` is ``κ(e_i)``.
    """

    algebra: StarAlgebra
    coproduct: list[Tensor]
    counit: list
    antipode: list[dict]

    def __post_init__(self):
        n = self.algebra.dim
        if not (len(self.coproduct) == len(self.counit) == len(self.antipode) == n):
            raise ValueError("coproduct, counit and antipode need one entry per basis vector")
        self.coproduct = [clean(g) for g in self.coproduct]
        self.counit = [q(x) for x in self.counit]
        self.antipode = [clean(v) for v in self.antipode]

    @property
    def dim(self) -> int:
        return self.algebra.dim

    # -- linear extensions ----------------------------------------------------

    def Gamma(self, x: Mapping) -> Tensor:
        out: dict = {}
        for i, a in x.items():
            add_into(out, self.coproduct[i], a)
        return out

    def eps(self, x: Mapping):
        return q(sum((a * self.counit[i] for i, a in x.items()), 0))

    def kappa(self, x: Mapping) -> dict:
        out: dict = {}
        for i, a in x.items():
            add_into(out, self.antipode[i], a)
        return out

    @cached_property
    def Gamma_one(self) -> Tensor:
        """``Γ(1)``, computed from the unit rather than assumed."""
        return self.Gamma(self.algebra.unit)

    @cached_property
    def scaled_coproduct(self) -> tuple[int, list[dict]]:
        """``(D, D Γ)`` with ``D`` the least common denominator of the
        coproduct coefficients."""
        D = 1
        for g in self.coproduct:
            for c in g.values():
                den = Fraction(c).denominator
                D = D * den // gcd(D, den)
        return D, [{k: q(c * D) for k, c in g.items()} for g in self.coproduct]

    def _grouped(self, Y: Tensor) -> dict:
        L = self.algebra.edge_labels[1]
        out: dict = defaultdict(list)
        for (c, d), y in Y.items():
            out[L[c], L[d]].append((c, d, y))
        return out

    def tensor_multiply(self, X: Tensor, Y: Tensor, grouped: dict | None = None) -> Tensor:
        """Product in ``A (x) A`` of two tensors."""
        A = self.algebra
        right = A._right
        out: dict = {}
        labels = A.edge_labels
        if labels is not None:
            R = labels[0]
            if grouped is None:
                grouped = self._grouped(Y)
            mono = A.monomial_table
            if mono is not None:
                for (a, b), x in X.items():
                    lst = grouped.get((R[a], R[b]))
                    if not lst:
                        continue
                    ma, mb = mono[a], mono[b]
                    for c, d, y in lst:
                        key = (ma[c], mb[d])
                        z = out.get(key, 0) + x * y
                        if z:
                            out[key] = z
                        else:
                            del out[key]
                return out
            for (a, b), x in X.items():
                lst = grouped.get((R[a], R[b]))
                if not lst:
                    continue
                ra, rb = right[a], right[b]
                for c, d, y in lst:
                    p, r = ra[c], rb[d]
                    coef = x * y
                    for u, pu in p.items():
                        for w, rw in r.items():
                            key = (u, w)
                            z = out.get(key, 0) + coef * pu * rw
                            if z:
                                out[key] = z
                            else:
                                del out[key]
            return out
        byfirst: dict = defaultdict(list)
        for (c, d), y in Y.items():
            byfirst[c].append((d, y))
        for (a, b), x in X.items():
            ra = right[a]
            rb = right[b]
            for c, lst in byfirst.items():
                p = ra.get(c)
                if not p:
                    continue
                for d, y in lst:
                    r = rb.get(d)
                    if not r:
                        continue
                    coef = x * y
                    for u, pu in p.items():
                        for w, rw in r.items():
                            key = (u, w)
                            z = out.get(key, 0) + coef * pu * rw
                            if z:
                                out[key] = z
                            else:
                                del out[key]
        return out

    @cached_property
    def _unit_legs(self) -> tuple[dict, dict]:
        """``Γ(1)`` indexed by its first leg and by its second leg."""
        by_first: dict = defaultdict(list)
        by_second: dict = defaultdict(list)
        for (p, r), c in self.Gamma_one.items():
            by_first[p].append((r, c))
            by_second[r].append((p, c))
        return by_first, by_second

    def epsilon_t(self, x: Mapping) -> dict:
        """``ε^t(x) = ε(1_(1) x) 1_(2)``."""
        A = self.algebra
        by_first = self._unit_legs[0]
        out: dict = {}
        for i, a in x.items():
            for p in A.left_partners(i):
                e = self.eps(A.basis_product(p, i))
                if e:
                    for r, c in by_first.get(p, ()):
                        _acc(out, r, a * c * e)
        return out

    def epsilon_s(self, x: Mapping) -> dict:
        """``ε^s(x) = 1_(1) ε(x 1_(2))``."""
        A = self.algebra
        by_second = self._unit_legs[1]
        out: dict = {}
        for i, a in x.items():
            for r in A.right_partners(i):
                e = self.eps(A.basis_product(i, r))
                if e:
                    for p, c in by_second.get(r, ()):
                        _acc(out, p, a * c * e)
        return out


# -- construction from squares ------------------------------------------------

def square_wha(D: DoubleGroupoid) -> WeakHopfAlgebra:
    """The weak Hopf *-algebra on the span of the squares of ``D``.

    Product: horizontal gluing (zero when the edges do not match).
    Star: horizontal inverse.  Coproduct: ``Γ(t)`` is ``1/|S|`` times the sum
    of ``t1 (x) t2`` over the ways of writing ``t`` as ``t2`` stacked on ``t1``.
    Counit: ``|S|`` on vertical units.  Antipode: the hv-inverse.
    """
    sq = D.squares
    idx = D.index
    n = len(sq)
    s_ord = D.pair.S.order
    mult = {}
    for i, s in enumerate(sq):
        for j in D.by_left.get(s.b, ()):
            mult[(i, j)] = {idx[D.h_compose(s, sq[j])]: 1}
    unit = {i: 1 for i in D.h_units}
    star = [{idx[D.h_inverse(s)]: 1} for s in sq]
    labels = [D.label(i) for i in range(n)]
    alg = StarAlgebra(n, mult, unit, star, labels)

    w = Fraction(1, s_ord) if s_ord > 1 else 1
    cop: list[dict] = [dict() for _ in range(n)]
    for j2, t2 in enumerate(sq):
        for j1 in D.by_top.get(t2.d, ()):
            r = idx[D.v_compose(t2, sq[j1])]
            key = (j1, j2)
            cop[r][key] = cop[r].get(key, 0) + w
    counit = [s_ord if (s.b == 0 and s.c == 0) else 0 for s in sq]
    antipode = [{idx[D.hv_inverse(s)]: 1} for s in sq]
    return WeakHopfAlgebra(alg, cop, counit, antipode)


def build_CT(pair: RelativeMatchedPair, T: DoubleGroupoid | None = None) -> WeakHopfAlgebra:
    return square_wha(T if T is not None else DoubleGroupoid(pair, "T"))


def build_CT_prime(pair: RelativeMatchedPair, Tp: DoubleGroupoid | None = None) -> WeakHopfAlgebra:
    return square_wha(Tp if Tp is not None else DoubleGroupoid(pair, "T'"))


# -- verification ---------------------------------------------------------

def _first(it):
    return next(iter(it), None)


def _acc(out: dict, key, val) -> None:
    z = out.get(key, 0) + val
    if z:
        out[key] = z
    else:
        out.pop(key, None)


def _Gamma_multiplicative(W: WeakHopfAlgebra, D: int, C: list[dict]):
    """Witness pair where ``Γ(xy) != Γ(x)Γ(y)``, or None.

    Works with the integer coproduct ``C = D Γ``.  Only pairs where the
    product of the legs can be nonzero, or where ``xy`` is nonzero, are
    examined; every other pair has both sides zero.

    For monomial algebras ``x`` runs over a generating set only: if the law
    holds for ``g`` times anything, then ``Γ(g w) = Γ(g) Γ(w)`` for every
    product ``w`` of generators, so by induction (and associativity of the
    algebra) it holds for every basis vector."""
    A = W.algebra
    n = A.dim
    xs = A.monomial_generators()
    if xs is None:
        xs = range(n)
    labels = A.edge_labels
    if labels is not None:
        R, L = labels
        # which y have a term whose legs start with a given pair of labels
        by_key: dict = defaultdict(set)
        for y in range(n):
            for (c, d) in C[y]:
                by_key[L[c], L[d]].add(y)

        def candidates(x):
            cands = set(A.right_partners(x))
            for key in {(R[a], R[b]) for (a, b) in C[x]}:
                cands |= by_key.get(key, set())
            return cands
    else:
        first: dict = defaultdict(set)
        second: dict = defaultdict(set)
        for y in range(n):
            for (c, d) in C[y]:
                first[c].add(y)
                second[d].add(y)
        reach1: dict = {}
        reach2: dict = {}

        def reach(cache, index, a):
            r = cache.get(a)
            if r is None:
                r = set()
                for c in A.right_partners(a):
                    r |= index.get(c, set())
                cache[a] = r
            return r

        def candidates(x):
            cands = set(A.right_partners(x))
            for (a, b) in C[x]:
                cands |= reach(reach1, first, a) & reach(reach2, second, b)
            return cands

    grouped = [W._grouped(C[y]) for y in range(n)] if labels is not None else None
    for x in xs:
        for y in sorted(candidates(x)):
            lhs: dict = {}
            for u, c in A.basis_product(x, y).items():
                for key, g in C[u].items():
                    _acc(lhs, key, c * g * D)
            rhs = W.tensor_multiply(C[x], C[y], grouped[y] if grouped else None)
            if lhs != rhs:
                return (x, y)
    return None


def verify_weak_hopf(W: WeakHopfAlgebra, include_algebra: bool = True,
                     arrays: bool = True) -> Report:
    """Every weak Hopf *-algebra axiom, each with a witness on failure.

    Coproduct identities are checked on ``D Γ`` with ``D`` the common
    denominator of its coefficients, which keeps the arithmetic integral for
    integral structures.  With ``arrays`` the two double expansions run on
    integer arrays when the structure allows it."""
    A = W.algebra
    n = A.dim
    D, C = W.scaled_coproduct
    rep = Report()
    if include_algebra:
        rep.extend(verify_algebra(A), "algebra: ")
    M = MonomialArrays.build(A, C, W.antipode) if arrays and D < INT_BOUND else None

    def scaled(x):
        out: dict = {}
        for i, a in x.items():
            for key, g in C[i].items():
                _acc(out, key, a * g)
        return out

    # Once Γ is multiplicative, both sides of coassociativity are
    # multiplicative maps, so agreeing on generators is enough.
    w = _Gamma_multiplicative(W, D, C)
    gens = A.monomial_generators() if w is None else None
    if M is not None:
        bad = M.coassociativity_witness(gens)
    else:
        bad = None
        for x in (range(n) if gens is None else gens):
            left: dict = {}
            right: dict = {}
            for (a, b), c in C[x].items():
                for (u, v), d in C[a].items():
                    _acc(left, (u, v, b), c * d)
                for (u, v), d in C[b].items():
                    _acc(right, (a, u, v), c * d)
            if left != right:
                bad = x
                break
    rep.add("coassociativity", bad is None, bad)
    rep.add("coproduct multiplicative", w is None, w)

    bad = None
    for x in range(n):
        starred: dict = {}
        for (a, b), c in C[x].items():
            for u, c1 in A.star[a].items():
                for v, c2 in A.star[b].items():
                    _acc(starred, (u, v), c * c1 * c2)
        if scaled(A.star[x]) != starred:
            bad = x
            break
    rep.add("coproduct preserves the star", bad is None, bad)

    eps = W.counit
    bad = None
    for x in range(n):
        l: dict = {}
        r: dict = {}
        for (a, b), c in C[x].items():
            if eps[a]:
                _acc(l, b, c * eps[a])
            if eps[b]:
                _acc(r, a, c * eps[b])
        if l != {x: D} or r != {x: D}:
            bad = x
            break
    rep.add("counit", bad is None, bad)

    # weak multiplicativity: (ε⊗ε)((x⊗1)Γ(1)(1⊗y)) = ε(xy) for all x, y
    Eright: dict = defaultdict(dict)  # p -> {x: ε(x p)}
    Eleft: dict = defaultdict(dict)   # r -> {y: ε(r y)}
    direct: dict = defaultdict(dict)
    for i, j, v in A.nonzero_pairs():
        e = W.eps(v)
        if e:
            Eright[j][i] = e
            Eleft[i][j] = e
            direct[i][j] = e * D
    G1 = scaled(A.unit)
    total: dict = defaultdict(dict)
    for (p, r), c in G1.items():
        for x, ex in Eright.get(p, {}).items():
            row = total[x]
            for y, ey in Eleft.get(r, {}).items():
                _acc(row, y, c * ex * ey)
    bad = _first(x for x in range(n) if total.get(x, {}) != direct.get(x, {}))
    if bad is not None:
        tx, dx = total.get(bad, {}), direct.get(bad, {})
        bad = (bad, min(y for y in set(tx) | set(dx) if tx.get(y) != dx.get(y)))
    rep.add("weak multiplicativity of the counit", bad is None, bad)

    # antipode
    kstar = [W.kappa(A.star[i]) for i in range(n)]

    def kstar_of(v):
        out: dict = {}
        for i, a in v.items():
            add_into(out, kstar[i], a)
        return out

    bad = _first(i for i in range(n) if kstar_of(kstar[i]) != {i: 1})
    rep.add("(kappa o star)^2 = id", bad is None, bad)

    pairs = {(i, j) for i, j, _ in A.nonzero_pairs()}
    pairs.update((j, i) for i, j in _star_candidates(A, W.antipode, A))
    bad = _first((i, j) for i, j in sorted(pairs)
                 if W.kappa(A.basis_product(i, j)) != A.multiply(W.antipode[j], W.antipode[i]))
    rep.add("antipode anti-multiplicative", bad is None, bad)

    bad = None
    for x in range(n):
        lhs: dict = {}
        for (a, b), c in C[x].items():
            for u, ca in W.antipode[a].items():
                for v, cb in W.antipode[b].items():
                    _acc(lhs, (u, v), c * ca * cb)
        rhs = {(b, a): c for (a, b), c in scaled(W.antipode[x]).items()}
        if lhs != rhs:
            bad = x
            break
    rep.add("antipode anti-comultiplicative", bad is None, bad)

    # (m(κ⊗i)⊗i)(Γ⊗i)Γ(x) = (1⊗x)Γ(1), both sides scaled by D^2
    kprod: dict = {}
    bad = None if M is None else M.antipode_identity_witness(D, G1)
    for x in (range(n) if M is None else ()):
        lhs: dict = {}
        for (a, b), c in C[x].items():
            for (u, v), d in C[a].items():
                prod = kprod.get((u, v))
                if prod is None:
                    prod = kprod[u, v] = A.multiply(W.antipode[u], {v: 1})
                for w_, e in prod.items():
                    _acc(lhs, (w_, b), c * d * e)
        rhs: dict = {}
        for (p, r), c in G1.items():
            for w_, e in A.basis_product(x, r).items():
                _acc(rhs, (p, w_), c * e * D)
        if lhs != rhs:
            bad = x
            break
    rep.add("antipode identity", bad is None, bad)
    return rep


def verify_weak_kac(W: WeakHopfAlgebra) -> Report:
    """Involutivity of the antipode and its compatibility with the counit."""
    A = W.algebra
    n = A.dim
    rep = Report()
    bad = _first(i for i in range(n) if W.kappa(W.antipode[i]) != {i: 1})
    rep.add("kappa^2 = id", bad is None, bad)
    bad = _first(i for i in range(n) if W.kappa(W.kappa(A.star[i])) != A.star[i]
                 or W.kappa(A.star_of(W.kappa(A.star[i]))) != {i: 1})
    rep.add("(kappa o star)^2 = id", bad is None, bad)
    bad = _first(i for i in range(n) if W.eps(W.antipode[i]) != W.counit[i])
    rep.add("counit o kappa = counit", bad is None, bad)
    return rep


# -- Cartan subalgebras -------------------------------------------------------

def _general_counital(W: WeakHopfAlgebra, target: bool) -> list[dict]:
    """Solve ``Γ(x) = Γ(1)(x⊗1) = (x⊗1)Γ(1)`` (target) or the same with
    ``1⊗x`` (source) for ``x``, on the scaled coproduct."""
    A = W.algebra
    n = A.dim
    _, C = W.scaled_coproduct
    by_first: dict = defaultdict(list)
    by_second: dict = defaultdict(list)
    for u, a in A.unit.items():
        for (p, r), c in C[u].items():
            by_first[p].append((r, a * c))
            by_second[r].append((p, a * c))
    rows: dict = defaultdict(dict)
    for i in range(n):
        # Γ(1)(x⊗1) and (x⊗1)Γ(1) are sums over the leg of Γ(1) meeting x
        if target:
            sides = (("L", A.left_partners(i), lambda p: A.basis_product(p, i), by_first, False),
                     ("R", A.right_partners(i), lambda p: A.basis_product(i, p), by_first, False))
        else:
            sides = (("L", A.right_partners(i), lambda r: A.basis_product(i, r), by_second, True),
                     ("R", A.left_partners(i), lambda r: A.basis_product(r, i), by_second, True))
        for tag, partners, prod, index, second in sides:
            diff = dict(C[i])
            for p in list(partners):
                for u, cu in prod(p).items():
                    for o, c in index.get(p, ()):
                        _acc(diff, (o, u) if second else (u, o), -c * cu)
            for key, c in diff.items():
                rows[tag, key][i] = c
    return nullspace([r for r in rows.values() if r], range(n))


def cartan_subalgebras(W: WeakHopfAlgebra) -> tuple[list[dict], list[dict]]:
    """Exact bases of the target and source counital subalgebras."""
    return _general_counital(W, True), _general_counital(W, False)


def verify_cartan(W: WeakHopfAlgebra, expected_dim: int | None = None,
                  expect_commutative: bool | None = None) -> Report:
    A = W.algebra
    At, As = cartan_subalgebras(W)
    rep = Report()
    if expected_dim is not None:
        rep.add("dim A_t", len(At) == expected_dim, len(At), detail=f"{len(At)}")
        rep.add("dim A_s", len(As) == expected_dim, len(As), detail=f"{len(As)}")
    else:
        rep.add("dim A_t = dim A_s", len(At) == len(As), (len(At), len(As)))
    bad = _first((i, j) for i, x in enumerate(At) for j, y in enumerate(As)
                 if A.multiply(x, y) != A.multiply(y, x))
    rep.add("A_t and A_s commute", bad is None, bad)
    rep.add("kappa(A_t) = A_s", span_equal([W.kappa(x) for x in At], As))
    Et = echelon(At)
    bad = _first((i, j) for i, x in enumerate(At) for j, y in enumerate(At)
                 if Et.reduce(A.multiply(x, y)))
    rep.add("A_t is a subalgebra", bad is None and not Et.reduce(A.unit), bad)
    rep.add("A_t is star-closed", all(not Et.reduce(A.star_of(x)) for x in At))
    comm = all(A.multiply(x, y) == A.multiply(y, x) for x in At for y in At)
    if expect_commutative is not None:
        rep.add("A_t commutative iff S abelian", comm == expect_commutative,
                detail=f"A_t {'is' if comm else 'is not'} commutative")
    bad = _first(i for i in range(A.dim) if Et.reduce(W.epsilon_t({i: 1})))
    rep.add("image of epsilon_t lies in A_t", bad is None, bad)
    bad = _first(i for i in range(A.dim)
                 if W.epsilon_t(W.epsilon_t({i: 1})) != W.epsilon_t({i: 1}))
    rep.add("epsilon_t is idempotent", bad is None, bad)
    rep.add("epsilon_t(1) = 1", W.epsilon_t(A.unit) == A.unit)
    return rep


def epsilon_t(W: WeakHopfAlgebra, a: Mapping) -> dict:
    return W.epsilon_t(a)


def coopposite(W: WeakHopfAlgebra) -> WeakHopfAlgebra:
    """Same algebra and counit, coproduct legs swapped, antipode inverted.

    The antipode must be invertible by a signed basis permutation (true for
    every algebra built here)."""
    n = W.dim
    inv: list = [None] * n
    for i, v in enumerate(W.antipode):
        if len(v) != 1:
            raise ValueError("antipode is not a monomial map")
        (j, c), = v.items()
        inv[j] = {i: q(Fraction(1) / c)}
    if any(x is None for x in inv):
        raise ValueError("antipode is not invertible")
    cop = [{(b, a): c for (a, b), c in g.items()} for g in W.coproduct]
    return WeakHopfAlgebra(W.algebra, cop, list(W.counit), inv)
