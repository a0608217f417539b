import unittest

import numpy as np
from hypothesis import given, settings, strategies as st

from lib.group import Group
from lib.constructors import (cyclic, elementary_abelian, dihedral, quaternion, symmetric,
                              alternating, direct_product)
from lib.isomorphism import fingerprint, find_isomorphism, is_isomorphic, find_embedding


def relabel(G, perm):
    '''The same group with element x renamed perm[x]'''
    inv = np.argsort(perm)
    table = perm[G.table[np.ix_(inv, inv)]]
    return Group(table, label="relabelled " + G.label)


class TestIsomorphism(unittest.TestCase):

    def test_same_digest_is_identity(self):
        phi = find_isomorphism(symmetric(3), symmetric(3))
        self.assertEqual(list(range(6)), phi.images.tolist())

    def test_order_eight(self):
        groups = [cyclic(8), direct_product(cyclic(2), cyclic(4)), elementary_abelian(2, 3),
                  dihedral(4), quaternion()]
        for i, A in enumerate(groups):
            for j, B in enumerate(groups):
                self.assertEqual(i == j, is_isomorphic(A, B), (A.label, B.label))

    def test_d12_is_c2_times_s3(self):
        phi = find_isomorphism(dihedral(6), direct_product(cyclic(2), symmetric(3)))
        self.assertIsNotNone(phi)
        self.assertTrue(phi.is_injective())

    def test_coprime_cyclic_product(self):
        self.assertTrue(is_isomorphic(direct_product(cyclic(3), cyclic(4)), cyclic(12)))
        self.assertFalse(is_isomorphic(direct_product(cyclic(2), cyclic(6)), cyclic(12)))

    def test_different_orders(self):
        self.assertIsNone(find_isomorphism(symmetric(3), cyclic(4)))

    def test_a4_is_not_d12(self):
        self.assertFalse(is_isomorphic(alternating(4), dihedral(6)))
        self.assertNotEqual(fingerprint(alternating(4)), fingerprint(dihedral(6)))

    @settings(max_examples=20, deadline=None)
    @given(st.sampled_from([symmetric(3), dihedral(4), quaternion(), alternating(4),
                            direct_product(cyclic(2), cyclic(4))]),
           st.randoms(use_true_random=False))
    def test_relabelling_is_invisible(self, G, rnd):
        rest = list(range(1, G.order))
        rnd.shuffle(rest)
        # the identity keeps its name so the relabelled table stays normalised
        perm = np.array([0] + rest, dtype=np.int64)
        H = relabel(G, perm)
        self.assertEqual(fingerprint(G), fingerprint(H))
        phi = find_isomorphism(G, H)
        self.assertIsNotNone(phi)
        self.assertTrue(phi.is_injective())


class TestEmbedding(unittest.TestCase):

    def test_s3_in_s4(self):
        phi = find_embedding(symmetric(3), symmetric(4))
        self.assertIsNotNone(phi)
        self.assertEqual(6, len(set(phi.images.tolist())))

    def test_d8_in_s4(self):
        self.assertIsNotNone(find_embedding(dihedral(4), symmetric(4)))

    def test_q8_not_in_s4(self):
        self.assertIsNone(find_embedding(quaternion(), symmetric(4)))

    def test_order_must_divide(self):
        self.assertIsNone(find_embedding(cyclic(5), symmetric(4)))

    def test_c4_not_in_a4(self):
        self.assertIsNone(find_embedding(cyclic(4), alternating(4)))
