"""
Duality, the module action and the crossed product
==================================================

The squares of T and the transposed squares of T' index two weak Hopf
algebras.  Pairing a square with its transpose, scaled by |S|, makes them
dual to each other once the legs of the coproduct are read in reverse.
CT' then acts on CT by stacking, and the crossed product CT x| CT' is a
finite-dimensional algebra whose center counts the conjugacy classes of S.
"""
from qgroupoid import corpus
from qgroupoid.groups import conjugacy_classes
from qgroupoid.quantum_groupoid.action import FORMULAS, crossed_product, module_action, verify_action
from qgroupoid.quantum_groupoid.duality import build_pairing, verify_duality
from qgroupoid.star_algebra import center
from qgroupoid.suite import build_all

B = build_all(corpus.pair("b"))
P = B.pair

# the bracket matrix has one nonzero entry |S| per row
D = build_pairing(P, B.CT, B.CTp, B.T)
print("nonzero entries per row:", {len(row) for row in D.matrix},
      " values:", {str(c) for row in D.matrix for c in row.values()})

# adjointness holds with reversed legs; the unreversed forms are printed as INFO
print(verify_duality(D).text())

# three candidate stacking rules; stacking the inverse on top is not even multiplicative
for formula in FORMULAS:
    rep = verify_action(module_action(P, B.CT, B.CTp, B.T, formula))
    print(f"{formula:16s}", "PASS" if rep.ok else "FAIL: " + rep.failures()[0].name)

# the crossed product: dimension |S| (|H||K|)^2
act = module_action(P, B.CT, B.CTp, B.T)
X = crossed_product(act)
print("dim crossed product =", X.algebra.dim,
      "=", P.S.order, "* (", P.H.order, "*", P.K.order, ")^2")
print("center dimension =", len(center(X.algebra)),
      " classes of S:", len(conjugacy_classes(P.G, within=P.S)))
