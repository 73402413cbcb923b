"""
A presentation by generators and relations
==========================================

The square algebra can also be written as an iterated crossed product
(C(K) x| S) x| H, spanned by triples (h, k, s).  Sending a triple to a
square gives an isomorphism, and the images of the triples (the theta
basis) multiply exactly like horizontal gluing.  The construction depends
on a choice of coset representatives in K; other choices give conjugate
actions and isomorphic algebras.
"""
from qgroupoid import corpus
from qgroupoid.double_groupoid import DoubleGroupoid
from qgroupoid.matched_pair import action_conjugacy
from qgroupoid.presentation import (build_presented, square_isomorphism, theta_basis,
                                    triple_to_square, verify_sigma, verify_sigma_conjugacy,
                                    verify_theta)
from qgroupoid.quantum_groupoid.weak_hopf import build_CT
from qgroupoid.star_algebra import verify_isomorphism

P = corpus.pair("c-p3")
B = build_presented(P)
print("dim of the presented algebra:", B.algebra.dim)

# each triple lands on one square
T = DoubleGroupoid(P, "T")
h, k, s = B.triples[40]
print("triple", tuple(P.name(x) for x in (h, k, s)), "->", T.label(T.index[triple_to_square(P, h, k, s)]))

# the conjugation action sigma of H on the C(K) x| S part
print(verify_sigma(B).text())

# the isomorphism onto the squares, and the theta basis it produces
W = build_CT(P, T)
f = square_isomorphism(B, W.algebra, T)
print(verify_isomorphism(f).text())
print(verify_theta(B, theta_basis(f), T).text())

# a second set of coset representatives
I2 = corpus.alternative_I("c-p3")
phi = action_conjugacy(P, P.I, I2)
print("representatives", [P.name(x) for x in P.I], "->", [P.name(x) for x in I2])
print("phi moves", sum(phi[x] != x for x in phi), "of", len(phi), "elements of K")
print(verify_sigma_conjugacy(P, P.I, I2).text())
