import unittest

import sympy
from hypothesis import given, settings, strategies as st

from lib.util import ResourceError, PreconditionError
from lib.group import subgroup_closure, trivial_subgroup, whole_group
from lib.constructors import (cyclic, elementary_abelian, dihedral, quaternion, symmetric,
                              alternating, direct_product)
from lib.lattice import (all_subgroups, maximal_subgroups, m_count, frattini, core,
                         minimal_normal_over, subgroup_conjugacy_classes, normal_subgroups,
                         non_generators, conjugates, clear_cache, estimate_lattice_size,
                         subgroup_count_elementary_abelian, _soluble_subgroups,
                         _join_subgroups)


class TestLattice(unittest.TestCase):

    def setUp(self):
        clear_cache()

    def test_subgroup_counts(self):
        cases = [
            (symmetric(3), 6, 4),
            (alternating(4), 10, 5),
            (symmetric(4), 30, 8),
            (dihedral(4), 10, 3),
            (quaternion(), 6, 3),
            (elementary_abelian(2, 2), 5, 3),
            (elementary_abelian(3, 2), 6, 4),
            (cyclic(12), 6, 2),
        ]
        for G, subgroups, m in cases:
            self.assertEqual(subgroups, len(all_subgroups(G)), G.label)
            self.assertEqual(m, m_count(G), G.label)

    def test_trivial_group(self):
        G = cyclic(1)
        lattice = all_subgroups(G)
        self.assertEqual(1, len(lattice))
        self.assertEqual(0, m_count(G))
        self.assertTrue(frattini(G).is_whole())

    def test_sorted_by_order(self):
        sizes = [S.size for S in all_subgroups(symmetric(4)).subgroups]
        self.assertEqual(sorted(sizes), sizes)
        self.assertEqual(1, sizes[0])
        self.assertEqual(24, sizes[-1])

    def test_counts_by_order(self):
        counts = all_subgroups(symmetric(4)).counts_by_order()
        self.assertEqual({1: 1, 2: 9, 3: 4, 4: 7, 6: 4, 8: 3, 12: 1, 24: 1}, counts)
        d = all_subgroups(symmetric(4)).as_dict()
        self.assertEqual([2, 3, 3, 3, 4, 4, 4, 4], d['maximal_indices'])

    def test_maximals_are_proper_and_maximal(self):
        G = symmetric(4)
        lattice = all_subgroups(G)
        for M in maximal_subgroups(G):
            self.assertFalse(M.is_whole())
            above = [S for S in lattice.subgroups if M < S]
            self.assertEqual([whole_group(G)], above)

    def test_lattice_is_cached_and_rebound(self):
        G1, G2 = symmetric(3), symmetric(3)
        L1 = all_subgroups(G1)
        L2 = all_subgroups(G2)
        self.assertIs(G2, L2.subgroups[0].parent)
        self.assertEqual(L1.maximal_indices, L2.maximal_indices)

    def test_both_builders_agree(self):
        for G in (symmetric(4), quaternion(), elementary_abelian(2, 3),
                  direct_product(dihedral(4), cyclic(2)), direct_product(cyclic(3), symmetric(3))):
            self.assertEqual(set(_join_subgroups(G, 10 ** 4)),
                             set(_soluble_subgroups(G, 10 ** 4)), G.label)

    def test_lattice_abort(self):
        with self.assertRaises(ResourceError):
            all_subgroups(symmetric(4), max_lattice=5)

    def test_estimate_for_abelian_groups(self):
        self.assertEqual(16, estimate_lattice_size(elementary_abelian(2, 3)))
        self.assertIsNone(estimate_lattice_size(symmetric(3)))
        self.assertEqual(5, subgroup_count_elementary_abelian(2, 2))
        self.assertEqual(6, subgroup_count_elementary_abelian(2, 3))
        self.assertEqual(16, subgroup_count_elementary_abelian(3, 2))

    def test_normal_subgroups(self):
        self.assertEqual([1, 4, 12, 24], [N.size for N in normal_subgroups(symmetric(4))])

    @settings(max_examples=30, deadline=None)
    @given(st.integers(min_value=2, max_value=60))
    def test_cyclic_lattice_is_divisor_lattice(self, n):
        G = cyclic(n)
        self.assertEqual(len(sympy.divisors(n)), len(all_subgroups(G)))
        self.assertEqual(len(sympy.primefactors(n)), m_count(G))


class TestFrattini(unittest.TestCase):

    def test_frattini_orders(self):
        cases = [
            (dihedral(4), 2),
            (quaternion(), 2),
            (cyclic(8), 4),
            (cyclic(12), 2),
            (symmetric(4), 1),
            (alternating(4), 1),
            (elementary_abelian(3, 2), 1),
        ]
        for G, order in cases:
            self.assertEqual(order, frattini(G).size, G.label)

    def test_non_generators_equal_frattini(self):
        for G in (dihedral(4), quaternion(), cyclic(8), symmetric(4), dihedral(6)):
            self.assertEqual(frattini(G), non_generators(G), G.label)


class TestCores(unittest.TestCase):

    def test_conjugates_and_core(self):
        S3 = symmetric(3)
        T = subgroup_closure(S3, [1])
        self.assertEqual(3, len(conjugates(S3, T)))
        self.assertTrue(core(S3, T).is_trivial())
        A3 = subgroup_closure(S3, [3])
        self.assertEqual(A3, core(S3, A3))

    def test_minimal_normal_over_trivial(self):
        S4 = symmetric(4)
        mn = minimal_normal_over(S4, trivial_subgroup(S4))
        self.assertTrue(mn.unique)
        self.assertEqual(4, mn.subgroup.size)

    def test_minimal_normal_not_unique(self):
        E4 = elementary_abelian(2, 2)
        mn = minimal_normal_over(E4, trivial_subgroup(E4))
        self.assertFalse(mn.unique)
        self.assertIsNone(mn.subgroup)
        self.assertEqual(3, len(mn.candidates))

    def test_minimal_normal_preconditions(self):
        S3 = symmetric(3)
        with self.assertRaises(PreconditionError):
            minimal_normal_over(S3, subgroup_closure(S3, [1]))
        with self.assertRaises(PreconditionError):
            minimal_normal_over(S3, whole_group(S3))

    def test_conjugacy_classes_of_maximals(self):
        S4 = symmetric(4)
        classes = subgroup_conjugacy_classes(S4, maximal_subgroups(S4))
        self.assertEqual([4, 3, 1], [len(c) for c in classes])

    def test_classes_ordered_by_members(self):
        # same size, so the member lists decide
        E4 = elementary_abelian(2, 2)
        subs = maximal_subgroups(E4)
        classes = subgroup_conjugacy_classes(E4, subs)
        self.assertEqual([[0, 1], [0, 2], [0, 3]],
                         [subs[c[0]].elements().tolist() for c in classes])
