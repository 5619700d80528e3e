#! /usr/bin/env python
# -*- encoding: utf-8 -*-
# vim:fenc=utf-8:

import unittest

from dedelab.groups import Subgroup, LiftedSubgroup, trivial_subgroup, \
                           subgroup_of_order, subgroup_from_generators, \
                           power_subgroup, power_modulus, mersenne_subgroup, \
                           quadratic_form_subgroup, lift_subgroup, \
                           minus_one_free
from dedelab.errors import NotPrimeError, OrderDoesNotDivideError, \
                          NotCoprimeError, NotCoprimeModuliError, \
                          NotSquareFreeError


class TestSubgroup(unittest.TestCase):

    def testOrderSubgroups(self):
        self.assertEqual(subgroup_of_order(7, 3).elements, (1, 2, 4))
        self.assertEqual(subgroup_of_order(7, 2).elements, (1, 6))
        self.assertEqual(subgroup_of_order(7, 1), trivial_subgroup(7))
        self.assertEqual(subgroup_of_order(13, 3).elements, (1, 3, 9))

    def testGenerators(self):
        self.assertEqual(power_subgroup(7, 2), subgroup_of_order(7, 3))
        self.assertEqual(subgroup_from_generators(15, [2, 4]).elements,
                         (1, 2, 4, 8))
        self.assertEqual(mersenne_subgroup(4),
                         subgroup_from_generators(15, [2]))
        self.assertEqual(power_modulus(3, 3), 13)

    def testQuadraticForm(self):
        f, H = quadratic_form_subgroup(2, 1)
        self.assertEqual((f, H.elements), (7, (1, 2, 4)))
        f, H = quadratic_form_subgroup(3, 1)
        self.assertEqual((f, H.elements), (13, (1, 3, 9)))
        self.assertRaises(NotCoprimeError, quadratic_form_subgroup, 2, 4)

    def testMembership(self):
        H = subgroup_of_order(7, 3)
        self.assertTrue(9 in H)
        self.assertFalse(3 in H)
        self.assertTrue(minus_one_free(H))
        self.assertFalse(minus_one_free(subgroup_of_order(7, 2)))
        self.assertEqual(len(H), 3)
        self.assertEqual(list(H), [1, 2, 4])
        self.assertNotEqual(H, subgroup_of_order(13, 3))
        self.assertEqual(hash(H), hash(power_subgroup(7, 2)))

    def testQuotientOrder(self):
        H = subgroup_of_order(7, 3)
        self.assertEqual(H.quotient_order(3), 2)
        self.assertEqual(H.quotient_order(2), 1)
        self.assertEqual(mersenne_subgroup(4).quotient_order(7), 2)

    def testErrors(self):
        self.assertRaises(NotPrimeError, subgroup_of_order, 8, 2)
        self.assertRaises(OrderDoesNotDivideError, subgroup_of_order, 7, 4)
        self.assertRaises(ValueError, Subgroup, 7, [1, 3])
        self.assertRaises(NotCoprimeError, Subgroup, 8, [1, 2])
        self.assertRaises(NotCoprimeError, subgroup_from_generators, 9, [3])


class TestLift(unittest.TestCase):

    def testLift(self):
        H = subgroup_of_order(7, 3)
        lifted = lift_subgroup(H, 3)
        self.assertTrue(isinstance(lifted, LiftedSubgroup))
        self.assertEqual(lifted.elements, (1, 2, 4, 8, 11, 16))
        self.assertEqual(lifted.modulus, 21)
        self.assertEqual(lifted.reduce(7), frozenset([1, 2, 4]))
        self.assertEqual(lifted.base, H)
        self.assertEqual(lift_subgroup(H, 6).order, 3 * 2)

    def testLiftErrors(self):
        H = subgroup_of_order(7, 3)
        self.assertRaises(NotCoprimeModuliError, lift_subgroup, H, 7)
        self.assertRaises(NotSquareFreeError, lift_subgroup, H, 4)


if __name__ == "__main__":
    unittest.main()
