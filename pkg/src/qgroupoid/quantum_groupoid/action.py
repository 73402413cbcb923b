"""Module actions of weak Hopf algebras and the crossed product.

``ℂT'`` acts on ``ℂT`` through the transpose: a square ``y`` of ``T'`` is
turned into the square ``y^t`` of ``T``, which then stacks onto ``x``.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from ..double_groupoid import DoubleGroupoid
from ..linalg import add_into
from ..matched_pair import RelativeMatchedPair
from ..report import Report
from ..star_algebra import QuotientTensor, StarAlgebra, quotient_tensor
from .weak_hopf import WeakHopfAlgebra, cartan_subalgebras, coopposite

CROSSED_PRODUCT_MAX_DIM = 400


class CrossedProductTooLarge(ValueError):
    pass


@dataclass
class ModuleAction:
    """``table[a][m]`` is the vector ``e_a ▷ e_m`` (absent means zero)."""

    acting: WeakHopfAlgebra
    module: StarAlgebra
    table: list[dict]
    formula: str = ""

    def act(self, a: Mapping, m: Mapping) -> dict:
        out: dict = {}
        for i, x in a.items():
            row = self.table[i]
            for j, y in m.items():
                v = row.get(j)
                if v:
                    add_into(out, v, x * y)
        return out


# the stacking rules that can turn a square of T' into an operator on T
FORMULAS = {
    # y ▷ x = (y^t)^{-v} stacked on x, as displayed
    "inverse-on-top": lambda T, yt, x: T.v_compose(T.v_inverse(yt), x),
    # y ▷ x = y^t stacked on x
    "on-top": lambda T, yt, x: T.v_compose(yt, x),
    # y ▷ x = x stacked on (y^t)^{-v}
    "inverse-below": lambda T, yt, x: T.v_compose(x, T.v_inverse(yt)),
}
DEFAULT_FORMULA = "on-top"


def module_action(pair: RelativeMatchedPair, W: WeakHopfAlgebra, Wp: WeakHopfAlgebra,
                  T: DoubleGroupoid | None = None, formula: str = DEFAULT_FORMULA,
                  reversed_legs: bool = True) -> ModuleAction:
    """``ℂT'`` acting on ``ℂT``; non-composable pairs act by zero.

    With ``reversed_legs`` the acting algebra carries the co-opposite
    coproduct, the same leg order under which the bracket is a duality."""
    T = T if T is not None else DoubleGroupoid(pair, "T")
    Tp = T.opposite
    rule = FORMULAS[formula]
    table = []
    for y in Tp.squares:
        yt = Tp.transpose(y)
        row = {}
        for j, x in enumerate(T.squares):
            r = rule(T, yt, x)
            if r is not None:
                row[j] = {T.index[r]: 1}
        table.append(row)
    acting = coopposite(Wp) if reversed_legs else Wp
    return ModuleAction(acting, W.algebra, table, formula)


def _domains(act: ModuleAction) -> tuple[list[dict], dict]:
    """``acts_on[m]``: actors moving ``e_m``; ``preimages[a][r]``: the ``m``
    with ``r`` in the support of ``e_a ▷ e_m``."""
    acts_on: dict = defaultdict(list)
    pre: list[dict] = []
    for a, row in enumerate(act.table):
        inv: dict = defaultdict(list)
        for m, v in row.items():
            acts_on[m].append(a)
            for r in v:
                inv[r].append(m)
        pre.append(inv)
    return pre, acts_on


def _monomial_rows(table: list[dict]) -> list[dict] | None:
    """``rows[a][m] = r`` when every ``e_a ▷ e_m`` is a single basis vector."""
    rows = []
    for row in table:
        out = {}
        for m, v in row.items():
            if len(v) != 1 or next(iter(v.values())) != 1:
                return None
            out[m] = next(iter(v))
        rows.append(out)
    return rows


def verify_action(act: ModuleAction, actors: Iterable[int] | None = None) -> Report:
    """Module, module-algebra, star and counital conditions.

    (i)   ``(ab) ▷ m = a ▷ (b ▷ m)``, ``1 ▷ m = m`` and
          ``a ▷ (m m') = (a_(1) ▷ m)(a_(2) ▷ m')``;
    (ii)  ``(a ▷ m)^* = κ(a)^* ▷ m^*``;
    (iii) ``a ▷ 1 = ε^t(a) ▷ 1``.

    Only triples where one side can be nonzero are visited.  ``actors``
    restricts the outermost basis element ``a`` (all of them by default).
    """
    W, M = act.acting, act.module
    A = W.algebra
    nA, nM = A.dim, M.dim
    chosen = sorted(set(range(nA) if actors is None else actors))
    keep = set(chosen)
    pre, acts_on = _domains(act)
    table = act.table
    rep = Report()
    detail = "" if len(chosen) == nA else f"{len(chosen)} of {nA} actors"

    def support_actors(v) -> set:
        out: set = set()
        for r in v:
            out.update(acts_on.get(r, ()))
        return out & keep

    bad = next((m for m in range(nM) if act.act(A.unit, {m: 1}) != {m: 1}), None)
    rep.add("unit acts trivially", bad is None, bad)

    def mult_ok(a, b, m):
        return act.act(A.basis_product(a, b), {m: 1}) == act.act({a: 1}, table[b].get(m, {}))

    def mult_triples():
        # right side nonzero: b moves m and a moves the result
        for b in range(nA):
            for m, v in table[b].items():
                for a in support_actors(v):
                    yield a, b, m
        # left side nonzero: ab != 0 and some term of ab moves m
        for a in chosen:
            for b in A.right_partners(a):
                ms: set = set()
                for u in A.basis_product(a, b):
                    ms.update(table[u])
                for m in ms:
                    yield a, b, m

    bad = next((x for x in mult_triples() if not mult_ok(*x)), None)
    rep.add("action is multiplicative", bad is None, bad, detail=detail)

    # products containing each basis vector, to find where the left side lives
    made_of: dict = defaultdict(list)
    for m, m2, p in M.nonzero_pairs():
        for r in p:
            made_of[r].append((m, m2))

    D, DG = W.scaled_coproduct
    mono = M.monomial_table
    moves = _monomial_rows(table) if mono is not None else None

    def algebra_witness(a):
        # D times the right side, keyed by (m, m2)
        rhs: dict = defaultdict(dict)
        for (a1, a2), c in DG[a].items():
            inv2 = pre[a2]
            if moves is not None:
                row2 = moves[a2]
                for m, u in moves[a1].items():
                    mu = mono[u]
                    for r in M.right_partners(u):
                        for m2 in inv2.get(r, ()):
                            w = mu[row2[m2]]
                            d = rhs[m, m2]
                            d[w] = d.get(w, 0) + c
                continue
            row2 = table[a2]
            for m, x in table[a1].items():
                partners: set = set()
                for u in x:
                    for r in M.right_partners(u):
                        partners.update(inv2.get(r, ()))
                for m2 in partners:
                    add_into(rhs[m, m2], M.multiply(x, row2[m2]), c)
        keys = {k for k, v in rhs.items() if any(v.values())}
        for r in table[a]:
            keys.update(made_of.get(r, ()))
        for m, m2 in sorted(keys):
            lhs = act.act({a: 1}, M.basis_product(m, m2))
            want = {w: x for w, x in rhs.get((m, m2), {}).items() if x}
            if {w: D * x for w, x in lhs.items()} != want:
                return a, m, m2
        return None

    bad = next((w for a in chosen if (w := algebra_witness(a))), None)
    rep.add("module algebra", bad is None, bad, detail=detail)

    def star_rule(a, with_star: bool):
        ka = W.antipode[a]
        if with_star:
            ka = A.star_of(ka)
        for m in range(nM):
            if M.star_of(act.act({a: 1}, {m: 1})) != act.act(ka, M.star[m]):
                return a, m
        return None

    bad = next((w for a in chosen if (w := star_rule(a, True))), None)
    rep.add("(a ▷ m)* = κ(a)* ▷ m*", bad is None, bad, detail=detail)
    bad = next((w for a in chosen if (w := star_rule(a, False))), None)
    rep.add("(a ▷ m)* = κ(a) ▷ m*", bad is None, bad, diagnostic=True)

    one = M.unit
    bad = next((a for a in chosen
                if act.act({a: 1}, one) != act.act(W.epsilon_t({a: 1}), one)), None)
    rep.add("a ▷ 1 = ε^t(a) ▷ 1", bad is None, bad, detail=detail)
    return rep


# -- crossed product ------------------------------------------------------------

@dataclass
class CrossedProduct:
    quotient: QuotientTensor
    module_dim: int
    acting_dim: int
    report: Report = field(default_factory=Report)

    @property
    def algebra(self) -> StarAlgebra:
        return self.quotient.algebra


def crossed_product(act: ModuleAction, max_dim: int | None = None,
                    strict: bool = False) -> CrossedProduct:
    """``M ⊗_{A_t} A`` with ``[m⊗a][m'⊗a'] = [m (a_(1) ▷ m') ⊗ a_(2) a']`` and
    ``[m⊗a]^* = [(a^*_(1) ▷ m^*) ⊗ a^*_(2)]``.

    The tensor index of ``m ⊗ a`` is ``m * dim A + a``.  Refuses when the
    expected quotient dimension exceeds ``max_dim``.
    """
    W, M = act.acting, act.module
    A = W.algebra
    nM, nA = M.dim, A.dim
    At, _ = cartan_subalgebras(W)
    limit = CROSSED_PRODUCT_MAX_DIM if max_dim is None else max_dim
    expected = nM * nA // max(len(At), 1)
    if expected > limit:
        raise CrossedProductTooLarge(
            f"crossed product of dimension about {expected} exceeds the limit {limit}")

    def tens(mv: Mapping, av: Mapping) -> dict:
        return {m * nA + a: x * y for m, x in mv.items() for a, y in av.items()}

    # m (a_t ▷ 1) ⊗ a - m ⊗ a_t a
    relators = []
    for at in At:
        at1 = act.act(at, M.unit)
        for m in range(nM):
            left = M.multiply({m: 1}, at1)
            for a in range(nA):
                r = tens(left, {a: 1})
                add_into(r, tens({m: 1}, A.multiply(at, {a: 1})), -1)
                if r:
                    relators.append(r)

    cache: dict = {}

    def product(u: int, v: int) -> dict:
        m, a = divmod(u, nA)
        m2, a2 = divmod(v, nA)
        out: dict = {}
        for (x1, x2), c in W.coproduct[a].items():
            left = M.multiply({m: 1}, act.act({x1: 1}, {m2: 1}))
            if not left:
                continue
            right = A.basis_product(x2, a2)
            if right:
                add_into(out, tens(left, right), c)
        return out

    def star(u: int) -> dict:
        r = cache.get(u)
        if r is not None:
            return r
        m, a = divmod(u, nA)
        out: dict = {}
        for s, cs in A.star[a].items():
            for (x1, x2), c in W.coproduct[s].items():
                add_into(out, tens(act.act({x1: 1}, M.star[m]), {x2: 1}), c * cs)
        cache[u] = out
        return out

    unit = tens(M.unit, A.unit)
    labels = [f"{M.labels[m]}⊗{A.labels[a]}" for m in range(nM) for a in range(nA)]
    Q = quotient_tensor(nM, nA, product, star, unit, relators, labels, strict=strict)
    return CrossedProduct(Q, nM, nA, Q.report)
