import unittest

from hypothesis import given, settings, strategies as st

from lib.util import ParseError, InputError
from lib.isomorphism import is_isomorphic
from lib.constructors import alternating, symmetric, dihedral
from lib.recipe import (parse_recipe, format_recipe, construct, recipe_order,
                        prime_power, Recipe)


class TestParser(unittest.TestCase):

    def test_atom(self):
        self.assertEqual(Recipe('C', (5,), ()), parse_recipe("C(5)"))

    def test_semidirect_with_selector(self):
        node = parse_recipe("E(9):C(2)@1")
        self.assertEqual(Recipe('semidirect', (9, 2, 1, 2), ()), node)
        self.assertEqual("E(9):C(2)@1", format_recipe(node))

    def test_action_through_a_quotient(self):
        node = parse_recipe("E(9):C(4)~2@1")
        self.assertEqual(Recipe('semidirect', (9, 4, 1, 2), ()), node)
        self.assertEqual("E(9):C(4)~2@1", format_recipe(node))
        self.assertEqual(36, recipe_order(node))
        self.assertEqual("E(9):C(4)", format_recipe(parse_recipe("E(9):C(4)~4")))

    def test_default_selector_is_omitted(self):
        self.assertEqual("E(4):C(3)", format_recipe(parse_recipe("E(4):C(3)@0")))

    def test_direct_product(self):
        node = parse_recipe("E(4):C(3) x C(5)")
        self.assertEqual('direct', node.kind)
        self.assertEqual(2, len(node.children))
        self.assertEqual(60, recipe_order(node))

    def test_parentheses(self):
        node = parse_recipe("(C(2) x C(2)) x S(3)")
        self.assertEqual("(C(2) x C(2)) x S(3)", format_recipe(node))
        self.assertEqual(24, recipe_order(node))

    def test_errors_carry_position(self):
        with self.assertRaises(ParseError) as cm:
            parse_recipe("C(3) x ")
        self.assertIn("position", str(cm.exception))
        with self.assertRaises(ParseError) as cm:
            parse_recipe("C(3) y C(2)")
        self.assertIn("position 4", str(cm.exception))

    def test_unknown_family(self):
        with self.assertRaises(ParseError):
            parse_recipe("Z(3)")

    def test_only_elementary_by_cyclic(self):
        with self.assertRaises(ParseError):
            parse_recipe("C(4):C(2)")
        with self.assertRaises(ParseError):
            parse_recipe("E(4):S(3)")

    def test_trailing_text(self):
        with self.assertRaises(ParseError):
            parse_recipe("C(3))")

    def test_prime_power(self):
        self.assertEqual((2, 3), prime_power(8))
        self.assertEqual((7, 1), prime_power(7))
        self.assertIsNone(prime_power(12))
        self.assertIsNone(prime_power(1))


class TestConstruct(unittest.TestCase):

    def test_labels_are_canonical(self):
        G = construct("C(2)  x  S(3)")
        self.assertEqual("C(2) x S(3)", G.label)
        self.assertEqual(12, G.order)

    def test_e4_c3_is_a4(self):
        self.assertTrue(is_isomorphic(construct("E(4):C(3)"), alternating(4)))

    def test_e3_c2_is_s3(self):
        self.assertTrue(is_isomorphic(construct("E(3):C(2)"), symmetric(3)))

    def test_selectors_give_different_groups(self):
        G0 = construct("E(9):C(2)")
        G1 = construct("E(9):C(2)@1")
        self.assertEqual(18, G0.order)
        self.assertEqual(18, G1.order)
        self.assertFalse(is_isomorphic(G0, G1))

    def test_bad_arguments(self):
        for label in ("E(6)", "D(7)", "Q(6)", "E(4):C(5)", "E(9):C(2)@5",
                      "E(9):C(4)~3", "E(9):C(4)~1", "E(9):C(4)~2@2"):
            with self.assertRaises(InputError):
                construct(label)

    def test_dicyclic_from_a_quotient_action(self):
        # Z4 inverting Z3 through its quotient of order 2
        G = construct("E(3):C(4)~2")
        self.assertEqual("E(3):C(4)~2", G.label)
        self.assertTrue(is_isomorphic(G, construct("Q(12)")))

    def test_dihedral_order_convention(self):
        self.assertTrue(is_isomorphic(construct("D(8)"), dihedral(4)))

    @settings(max_examples=25, deadline=None)
    @given(st.sampled_from(["C(6)", "E(8)", "D(10)", "Q(8)", "S(3)", "A(4)",
                            "E(4):C(3)", "E(9):C(4)", "C(2) x D(6)",
                            "(C(2) x C(2)) x C(3)"]))
    def test_order_matches_recipe_order(self, label):
        node = parse_recipe(label)
        G = construct(label)
        self.assertEqual(recipe_order(node), G.order)
        self.assertEqual(format_recipe(node), G.label)
