"""
Squares and their weak Hopf algebra
===================================

A square (a, b, c, d) has a in H, b in K, c in K, d in H with ab = cd.
Squares glue side by side and on top of each other, which gives two
groupoid structures on the same set.  The span of the squares, with the
horizontal gluing as product and a coproduct that sums over vertical
splittings, is a weak Hopf algebra.  It is a genuine Hopf algebra exactly
when S is trivial.
"""
from qgroupoid import corpus
from qgroupoid.double_groupoid import DoubleGroupoid, verify_double_groupoid
from qgroupoid.quantum_groupoid.weak_hopf import (build_CT, cartan_subalgebras, verify_cartan,
                                                  verify_weak_hopf)

P = corpus.pair("b")
T = DoubleGroupoid(P, "T")
print(f"{len(T)} squares = |H||K||S| = {P.H.order}*{P.K.order}*{P.S.order}")

# the first few squares, with their group elements written as cycles
for i in range(4):
    print(" ", T.label(i))

# glue two squares side by side; the right edge of the first must match
s = T.squares[5]
t = next(u for u in T.squares if u.c == s.b and u.a != 0 and u.b != u.c)
print("h_compose:", T.label(T.index[s]), "+", T.label(T.index[t]), "=",
      T.label(T.index[T.h_compose(s, t)]))

rep = verify_double_groupoid(T)
print(f"double groupoid checks: {len(rep.checks)}, failures: {len(rep.failures())}")
print(rep["interchange law"].line())

# the algebra of squares
W = build_CT(P)
A = W.algebra
print("dim CT =", W.dim)

# the unit is a sum of horizontal units, and its coproduct is not 1 (x) 1
one = A.unit
print("terms in 1:", len(one), " terms in Γ(1):", len(W.Gamma_one))
print("coefficients in Γ(1):", sorted({str(c) for c in W.Gamma_one.values()}))

print(verify_weak_hopf(W).text())

# the counital subalgebras have dimension |S|
At, As = cartan_subalgebras(W)
print("dim A_t =", len(At), " dim A_s =", len(As))
print(verify_cartan(W, P.S.order, P.S.is_abelian()).text())

# with S trivial the same construction is an ordinary Hopf algebra
Wa = build_CT(corpus.pair("a"))
print("pair (a): Γ(1) = 1 (x) 1?",
      Wa.Gamma_one == {(i, j): x * y for i, x in Wa.algebra.unit.items()
                       for j, y in Wa.algebra.unit.items()})
