"""
Relative matched pairs in S3 and S4
===================================

Two subgroups H, K of a finite group G with G = HK form a relative matched
pair.  Their intersection S measures how far the pair is from an ordinary
(Zappa-Szep) factorization.  This script walks through the decomposition
maps, the lifted actions and the Frattini factory.
"""
from qgroupoid import corpus
from qgroupoid.groups import all_subgroups, symmetric_group
from qgroupoid.matched_pair import (check_relative_matched_pair, frattini_pair, make_pair,
                                    verify_action_tables, verify_cocycles)

# S3 with H = <(12)> and K = <(123)>: an honest matched pair, S trivial
g = corpus.s3()
G = g.group
H = g.subgroup([[[1, 2]]])
K = g.subgroup([[[1, 2, 3]]])
P = make_pair(G, H, K)
print(P)

# every g factors uniquely as hk, so p1 and p2 return one element each
g23 = g.element([[2, 3]])
print("p1((23)) =", [P.name(x) for x in P.p1(g23)], " p2((23)) =", [P.name(x) for x in P.p2(g23)])

# the two actions of the factorization hk = (h > k)(h < k)
h, k = g.element([[1, 2]]), g.element([[1, 2, 3]])
print("act_HK((12), (123)) =", P.name(P.act_HK(h, k)), " comp_HK =", P.name(P.comp_HK(h, k)))

# not every pair of subgroups qualifies: <(12)> and <(13)> only reach 4 elements
print("<(12)>, <(13)> matched?", check_relative_matched_pair(G, H, g.subgroup([[[1, 3]]])))

# a pair with a nontrivial intersection: H = S3, K = <(12)>, so S = K
Pb = corpus.pair("b")
print("pair (b): |H| =", Pb.H.order, "|K| =", Pb.K.order, "|S| =", Pb.S.order)
for rep in (verify_action_tables(Pb), verify_cocycles(Pb)):
    print(rep.text())

# how many pairs does S4 have?
S4 = symmetric_group(4).group
subs = all_subgroups(S4)
count = sum(check_relative_matched_pair(S4, A, B) for A in subs for B in subs)
print(f"S4 has {len(subs)} subgroups and {count} ordered relative matched pairs")

# the Frattini argument turns a normal subgroup and a Sylow subgroup into a pair
gs4 = corpus.load("c-p3")[0]
A4 = gs4.subgroup(corpus.A4_GENS)
for p in (2, 3):
    F = frattini_pair(gs4.group, A4, p)
    print(f"p = {p}: |H| = {F.H.order}, |K| = {F.K.order}, |S| = {F.S.order}")
