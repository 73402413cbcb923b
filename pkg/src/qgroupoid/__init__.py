"""Finite quantum groupoids built from a factorization G = HK.

Squares ``(h, k, k', h')`` with ``h k = k' h'`` carry two partial products;
their spans ``ℂT`` and ``ℂT'`` are weak Hopf *-algebras in duality.  Every
structure here is exact, and every axiom has a verifier returning a
:class:`Report` with witnesses.
"""
from .double_groupoid import (DoubleGroupoid, NotComposable, Square, enumerate_T,
                              enumerate_T_prime, verify_double_groupoid)
from .groups import (FiniteGroup, Subgroup, conjugacy_classes, coset_space, cyclic_group,
                     direct_product, group_from_table, intersection, is_normal, normalizer,
                     product_set, subgroup_generated, sylow_subgroup, symmetric_group)
from .matched_pair import (RelativeMatchedPair, action_conjugacy, build_action_tables,
                           check_relative_matched_pair, frattini_pair)
from .presentation import (build_presented, sigma_action, square_isomorphism, theta_basis)
from .quantum_groupoid.action import crossed_product, module_action, verify_action
from .quantum_groupoid.duality import build_pairing, pairing, verify_duality
from .quantum_groupoid.groupoid_examples import (FiniteGroupoid, degeneration_report,
                                                 groupoid_function_wha, groupoid_regular_wha)
from .quantum_groupoid.weak_hopf import (WeakHopfAlgebra, build_CT, build_CT_prime,
                                         cartan_subalgebras, epsilon_t, verify_cartan,
                                         verify_weak_hopf)
from .report import Report
from .star_algebra import (LinearMap, StarAlgebra, center, quotient_tensor, solve_subspace,
                           tensor_algebra, verify_algebra, verify_homomorphism,
                           verify_isomorphism)

__version__ = "0.1.0"
