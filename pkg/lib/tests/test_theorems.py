import unittest

import numpy as np

from lib.util import InputError
from lib.records import PASS, FAIL, SKIP
from lib.group import subgroup_closure, trivial_subgroup
from lib.constructors import (cyclic, elementary_abelian, dihedral, quaternion, symmetric,
                              alternating, direct_product, ActionSpec, semidirect_product)
from lib.lattice import all_subgroups, normal_subgroups
from lib.cover import maximal_class_ids
from lib.recipe import construct
from lib import gfp
from lib.isomorphism import is_isomorphic
from lib.theorems import (verify_prop_3_1, verify_cor_3_1_5, verify_thm_3_4p,
                          thm_3_4p_selections, verify_thm_3_5, thm_3_5_pairs, verify_prop_3_8,
                          prop_3_8_pairs, solve_prime_power_eq, verify_lemma_3_9,
                          verify_lemma_3_7, verify_lemma_3_3, verify_sigma_equals_m_primitive,
                          verify_m_equals_3, verify_frattini_non_generators, intersection,
                          has_squarefree_exponent, is_dedekind)


def generalized_dihedral_e9():
    N = elementary_abelian(3, 2)
    return semidirect_product(ActionSpec(N, cyclic(2), [np.arange(9), N.inverses]))


def diagonal_e25():
    '''E25 ⋊ (Z4 x Z2) with a = 2I and b = diag(1, -1) over F5'''
    a, b = np.diag([2, 2]), np.diag([1, 4])
    mats = [gfp.mat_mul(gfp.mat_power(a, i, 5), gfp.mat_power(b, j, 5), 5)
            for i in range(4) for j in range(2)]
    action = [gfp.matrix_permutation(A, 5) for A in mats]
    K = direct_product(cyclic(4), cyclic(2))
    return semidirect_product(ActionSpec(elementary_abelian(5, 2), K, action))


def maximals_of_order(G, size):
    return [M for M in all_subgroups(G).maximals() if M.size == size]


class TestHelpers(unittest.TestCase):

    def test_intersection(self):
        S3 = symmetric(3)
        self.assertTrue(intersection(S3, []).is_whole())
        T1, T2 = subgroup_closure(S3, [1]), subgroup_closure(S3, [2])
        self.assertTrue(intersection(S3, [T1, T2]).is_trivial())

    def test_squarefree_exponent(self):
        self.assertTrue(has_squarefree_exponent(cyclic(6)))
        self.assertFalse(has_squarefree_exponent(cyclic(4)))

    def test_dedekind(self):
        self.assertTrue(is_dedekind(quaternion()))
        self.assertTrue(is_dedekind(cyclic(6)))
        self.assertFalse(is_dedekind(symmetric(3)))


class TestSplitting(unittest.TestCase):

    def test_prop_3_1(self):
        r = verify_prop_3_1(direct_product(cyclic(3), symmetric(3)))
        self.assertEqual(PASS, r.outcome)
        self.assertEqual(3, r.parameters['H_order'])
        self.assertTrue(r.parameters['unique_cover'])

    def test_prop_3_1_needs_surplus_maximals(self):
        r = verify_prop_3_1(symmetric(3))
        self.assertEqual(SKIP, r.outcome)
        self.assertEqual("no surplus maximals", r.reason)

    def test_cor_3_1_5(self):
        self.assertEqual(PASS, verify_cor_3_1_5(symmetric(3)).outcome)
        self.assertEqual(SKIP, verify_cor_3_1_5(cyclic(4)).outcome)

    def test_lemma_3_3(self):
        r = verify_lemma_3_3(direct_product(cyclic(3), symmetric(3)))
        self.assertEqual(PASS, r.outcome)
        self.assertEqual(2, r.parameters['t'])
        self.assertEqual(1, r.parameters['ell'])
        self.assertEqual([3], r.parameters['primes'])

    def test_lemma_3_3_repeated_primes(self):
        # S3 x E9 has m = 8 and σ = 4, so the formula asks for four prime factors
        G = construct("E(27):C(2)@2")
        self.assertTrue(is_isomorphic(G, direct_product(symmetric(3), elementary_abelian(3, 2))))
        r = verify_lemma_3_3(G)
        self.assertEqual(FAIL, r.outcome)
        self.assertEqual((8, 4, 2, 2), (r.parameters['m'], r.parameters['sigma'],
                                        r.parameters['t'], r.parameters['ell']))
        self.assertEqual([3], r.parameters['primes'])
        self.assertIn("m - m(Z_t) - σ + 1 = 4", r.reason)
        self.assertIsNotNone(r.counterexample)

    def test_lemma_3_3_hypotheses(self):
        self.assertEqual("nilpotent", verify_lemma_3_3(dihedral(4)).reason)
        self.assertEqual("σ < m required", verify_lemma_3_3(symmetric(3)).reason)


class TestCoreIntersections(unittest.TestCase):

    def test_single_selection_passes(self):
        S3 = symmetric(3)
        r = verify_thm_3_4p(S3, [subgroup_closure(S3, [1])])
        self.assertEqual(PASS, r.outcome, r.reason)
        self.assertIn("(ii) l=1", r.parameters['checks'])

    def test_s4_selections(self):
        S4 = symmetric(4)
        selections = thm_3_4p_selections(S4)
        self.assertEqual([[6], [8], [6, 8]], [[M.size for M in sel] for sel in selections])
        for sel in selections[:2]:
            self.assertEqual(PASS, verify_thm_3_4p(S4, sel).outcome)

    def test_s4_pair_breaks_the_third_decomposition(self):
        # M = S3 ∩ D8 has order 2 and C = 1, while K_2/H_2 = S3
        S4 = symmetric(4)
        selection = [maximals_of_order(S4, 6)[0], maximals_of_order(S4, 8)[0]]
        r = verify_thm_3_4p(S4, selection)
        self.assertEqual(FAIL, r.outcome)
        self.assertIn("(iii) l=2", r.reason)
        self.assertIn("corollary l=2", r.reason)
        self.assertNotIn("(iii) l=1", r.reason)
        lattice = all_subgroups(S4)
        self.assertEqual([lattice.position(M) for M in selection], r.counterexample['selection'])

    def test_selection_errors(self):
        S3 = symmetric(3)
        with self.assertRaisesRegex(InputError, "entry 0 is normal"):
            verify_thm_3_4p(S3, [subgroup_closure(S3, [3])])
        with self.assertRaisesRegex(InputError, "conjugate"):
            verify_thm_3_4p(S3, [subgroup_closure(S3, [1]), subgroup_closure(S3, [2])])
        with self.assertRaisesRegex(InputError, "not a maximal subgroup"):
            verify_thm_3_4p(S3, [trivial_subgroup(S3)])
        with self.assertRaises(InputError):
            verify_thm_3_4p(S3, [])

    def test_thm_3_5_generalized_dihedral(self):
        G = generalized_dihedral_e9()
        pairs = thm_3_5_pairs(G)
        self.assertEqual(10, len(pairs))
        outcomes = [verify_thm_3_5(G, M1, M2) for M1, M2 in pairs]
        passing = [r for r in outcomes if r.outcome == PASS]
        self.assertEqual(6, len(passing))
        for r in passing:
            self.assertEqual((2, 1, 2, 1), (r.parameters['ell'], r.parameters['n'],
                                            r.parameters['t'], r.parameters['case']))
        # M2 = E9 is normal, so r2 = 1 while ℓ = 2
        failing = [(r, M1, M2) for r, (M1, M2) in zip(outcomes, pairs) if r.outcome == FAIL]
        self.assertEqual(4, len(failing))
        lattice = all_subgroups(G)
        for r, M1, M2 in failing:
            self.assertEqual(9, M2.size)
            self.assertEqual("ℓ = 2 does not divide both r_i", r.reason)
            self.assertEqual((2, 1), (r.parameters['r1'], r.parameters['r2']))
            self.assertEqual([lattice.position(M1), lattice.position(M2)],
                             r.counterexample['selection'])

    def test_thm_3_5_with_n_two(self):
        # M_i/C_i ≅ Z4 for both index-5 classes and C1C2 has index 2
        G = diagonal_e25()
        pairs = [(M1, M2) for M1, M2 in thm_3_5_pairs(G) if M1.size == M2.size == 40]
        self.assertEqual(1, len(pairs))
        r = verify_thm_3_5(G, *pairs[0])
        self.assertEqual(PASS, r.outcome, r.reason)
        self.assertEqual((4, 4, 2, 2, 4, 2), tuple(r.parameters[k] for k in
                                                   ('r1', 'r2', 'ell', 'n', 't', 'case')))
        self.assertEqual("Z_4 x Z_2", r.reason)

    def test_thm_3_5_normal_maximal_in_s3(self):
        S3 = symmetric(3)
        pairs = thm_3_5_pairs(S3)
        self.assertEqual([(2, 3)], [(M1.size, M2.size) for M1, M2 in pairs])
        r = verify_thm_3_5(S3, *pairs[0])
        self.assertEqual(FAIL, r.outcome)
        self.assertEqual(2, r.parameters['ell'])
        self.assertEqual(1, r.parameters['case'])

    def test_thm_3_5_skips(self):
        G = generalized_dihedral_e9()
        lattice = all_subgroups(G)
        class_of = maximal_class_ids(G)
        by_class = {}
        for pos in lattice.maximal_indices:
            by_class.setdefault(class_of[pos], []).append(lattice.subgroups[pos])
        same = next(ms for ms in by_class.values() if len(ms) > 1)
        self.assertEqual("non-conjugate required", verify_thm_3_5(G, same[0], same[1]).reason)
        self.assertEqual("maximal subgroups required",
                         verify_thm_3_5(G, trivial_subgroup(G), same[0]).reason)


class TestComplements(unittest.TestCase):

    def test_s3(self):
        S3 = symmetric(3)
        pairs = prop_3_8_pairs(S3)
        self.assertEqual(3, len(pairs))
        r = verify_prop_3_8(S3, *pairs[0])
        self.assertEqual(PASS, r.outcome)
        self.assertEqual("S3", r.parameters['shape'])

    def test_a4(self):
        A4 = alternating(4)
        V4 = [N for N in normal_subgroups(A4) if N.size == 4][0]
        C3 = maximals_of_order(A4, 3)[0]
        r = verify_prop_3_8(A4, V4, C3)
        self.assertEqual(PASS, r.outcome)
        self.assertEqual("E(4):C(3)", r.parameters['shape'])

    def test_s4_action_has_fixed_points(self):
        S4 = symmetric(4)
        V4 = [N for N in normal_subgroups(S4) if N.size == 4][0]
        S3 = maximals_of_order(S4, 6)[0]
        self.assertEqual("fixed-point-free action required", verify_prop_3_8(S4, V4, S3).reason)

    def test_non_normal_l(self):
        S3 = symmetric(3)
        T = subgroup_closure(S3, [1])
        self.assertEqual("L normal required", verify_prop_3_8(S3, T, subgroup_closure(S3, [3])).reason)


class TestNumberTheory(unittest.TestCase):

    def test_small_solutions(self):
        found = [(s.p, s.n, s.q, s.m, s.cases) for s in solve_prime_power_eq(10, 3)]
        self.assertEqual([(2, 2, 3, 1, ('i',)), (2, 3, 7, 1, ('i',)), (3, 1, 2, 1, ('ii',)),
                          (3, 2, 2, 3, ('iii',)), (5, 1, 2, 2, ('ii',))], found)

    def test_degenerate_bounds(self):
        self.assertEqual([], solve_prime_power_eq(1, 5))
        self.assertEqual([], solve_prime_power_eq(10, 0))

    def test_lemma_3_9(self):
        r = verify_lemma_3_9()
        self.assertEqual(PASS, r.outcome)
        self.assertEqual(9, r.parameters['solutions'])

    def test_lemma_3_7(self):
        r = verify_lemma_3_7(2)
        self.assertEqual(PASS, r.outcome)
        self.assertEqual(2, r.parameters['instances'])
        r = verify_lemma_3_7(3)
        self.assertEqual(PASS, r.outcome)
        self.assertEqual(48, r.parameters['instances'])
        with self.assertRaises(InputError):
            verify_lemma_3_7(4)


class TestRemarks(unittest.TestCase):

    def test_sigma_equals_m(self):
        self.assertEqual(PASS, verify_sigma_equals_m_primitive(symmetric(3)).outcome)
        self.assertEqual(PASS, verify_sigma_equals_m_primitive(alternating(4)).outcome)
        self.assertEqual(SKIP, verify_sigma_equals_m_primitive(symmetric(4)).outcome)

    def test_three_maximals(self):
        for G in (elementary_abelian(2, 2), dihedral(4), quaternion()):
            self.assertEqual(PASS, verify_m_equals_3(G).outcome, G.label)
        self.assertEqual(SKIP, verify_m_equals_3(symmetric(3)).outcome)

    def test_three_maximals_in_a_cyclic_group(self):
        # C(30) has exactly three maximal subgroups but no cover by them
        r = verify_m_equals_3(cyclic(30))
        self.assertEqual(SKIP, r.outcome)
        self.assertEqual("non-cyclic required", r.reason)
        for G in (quaternion(), elementary_abelian(2, 2)):
            self.assertEqual(PASS, verify_m_equals_3(G).outcome, G.label)

    def test_frattini(self):
        r = verify_frattini_non_generators(dihedral(4))
        self.assertEqual(PASS, r.outcome)
        self.assertEqual(2, r.parameters['phi_order'])
