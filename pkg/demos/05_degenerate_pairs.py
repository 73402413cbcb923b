"""
Degenerate pairs: functions on G and the group algebra
======================================================

When one of the two subgroups is trivial the square algebra collapses to
a classical object.  With H = {e} every square is (e, g, g, e) and the
result is the algebra of functions on G; with K = {e} every square is
(h, e, e, h) and the result is the group algebra of G.
"""
from qgroupoid import corpus
from qgroupoid.quantum_groupoid.groupoid_examples import degeneration_report
from qgroupoid.suite import build_all

# the function algebra only matches after inverting the labels: the vertical
# gluing reads the two legs of the coproduct in the opposite order
for name in ("d-e-S3", "d-S3-e"):
    B = build_all(corpus.pair(name))
    A = B.CT.algebra
    print(f"{name}: dim {A.dim}, commutative {A.is_commutative()}, "
          f"cocommutative {all(set(g) == {(b, a) for a, b in g} for g in B.CT.coproduct)}")
    print(degeneration_report(B.T, B.CT).text())
