#! /usr/bin/env python
# -*- encoding: utf-8 -*-
# vim:fenc=utf-8:

import math
import unittest
from fractions import Fraction

from dedelab.groups import subgroup_of_order, trivial_subgroup, \
                           power_subgroup, lift_subgroup, \
                           quadratic_form_subgroup
from dedelab.moments import M_exact, M_d0_exact, M_d0_prime_path, \
                            M_d0_twisted_path, N_value, N_d0_value, \
                            N_prime_d0_value, A_value, A_closed_one, S_H, \
                            mersenne_n_prime, mersenne_lift_sum, \
                            power_form_lift_sum, quadratic_form_lift_sum, \
                            closed_form_n, closed_form, \
                            family_subgroup, family_of, twisted_moment_exact, \
                            twisted_moment_limit, euler_product, \
                            class_number_bound, restriction_identity, \
                            asymptotic_deviation, kappa, FAMILY_TRIVIAL, \
                            FAMILY_MERSENNE, FAMILY_QUADRATIC_FORM, \
                            FAMILY_POWER_FORM, PROVENANCE_CLOSED
from dedelab.errors import MinusOneInSubgroupError, NotSquareFreeError, \
                          NotCoprimeModuliError, FamilyNotCoveredError, \
                          DegreeParityError, NotPrimeError


class TestMeanSquare(unittest.TestCase):

    def testTrivialSubgroup(self):
        result = M_exact(5, trivial_subgroup(5))
        self.assertEqual(result.coefficient, Fraction(2, 25))
        self.assertAlmostEqual(result.float_value, 2 * math.pi ** 2 / 25)
        self.assertEqual(result.provenance, "general")

    def testOrderThree(self):
        H = subgroup_of_order(7, 3)
        result = M_exact(7, H)
        self.assertEqual(result.coefficient, Fraction(1, 7))
        self.assertEqual(result.n_value.value, -1)
        for p in (13, 19, 31, 37):
            self.assertEqual(M_exact(p, subgroup_of_order(p, 3)).coefficient,
                             Fraction(1, 6) * (1 - Fraction(1, p)))

    def testInduced(self):
        H = subgroup_of_order(7, 3)
        self.assertEqual(M_d0_exact(7, H, 3).coefficient, Fraction(16, 63))
        self.assertEqual(M_d0_exact(7, H, 1), M_exact(7, H))
        H = subgroup_of_order(13, 3)
        self.assertEqual(M_d0_exact(13, H, 2).coefficient, Fraction(5, 26))

    def testPaths(self):
        for p, d in ((7, 3), (13, 3), (31, 5), (11, 1)):
            H = subgroup_of_order(p, d)
            for d0 in (2, 3, 5, 6):
                if p % d0 == 0:
                    continue
                exact = M_d0_exact(p, H, d0).coefficient
                self.assertEqual(M_d0_prime_path(p, H, d0).coefficient,
                                 exact)
                self.assertEqual(M_d0_twisted_path(p, H, d0).coefficient,
                                 exact)

    def testComposite(self):
        result = M_d0_exact(15, trivial_subgroup(15), 2)
        self.assertIsNone(result.n_value)
        self.assertEqual(result.coefficient,
                         closed_form(15, FAMILY_TRIVIAL, 2).coefficient)

    def testErrors(self):
        H = subgroup_of_order(7, 3)
        self.assertRaises(MinusOneInSubgroupError, M_exact, 7,
                          subgroup_of_order(7, 2))
        self.assertRaises(NotSquareFreeError, M_d0_exact, 7, H, 4)
        self.assertRaises(NotCoprimeModuliError, M_d0_exact, 7, H, 7)
        self.assertRaises(ValueError, M_exact, 13, H)
        self.assertRaises(NotPrimeError, M_d0_prime_path, 15,
                          trivial_subgroup(15), 2)

    def testRestriction(self):
        H = subgroup_of_order(7, 3)
        lhs, rhs = restriction_identity(7, H, 2, 2)
        self.assertEqual(lhs, rhs)
        H = power_subgroup(31, 2)
        lhs, rhs = restriction_identity(31, H, 6, 2)
        self.assertEqual(lhs, rhs)
        self.assertRaises(ValueError, restriction_identity, 7, H, 3, 3)

    def testDeviation(self):
        H = subgroup_of_order(7, 3)
        self.assertAlmostEqual(asymptotic_deviation(7, H, 3),
                               abs(float(Fraction(16, 63) / kappa(3)) - 1))


class TestNValues(unittest.TestCase):

    def testMersenneSeven(self):
        H = subgroup_of_order(7, 3)
        self.assertEqual(N_value(7, H).value, -1)
        self.assertEqual(N_d0_value(7, H, 1).value, -1)
        self.assertEqual(N_prime_d0_value(7, H, 1).value, -5)
        self.assertEqual(N_prime_d0_value(7, H, 3).value, -3)
        self.assertEqual(mersenne_n_prime(3, 1).value, -5)
        self.assertEqual(mersenne_n_prime(3, 3).value, -3)

    def testMersenneTable(self):
        for d in (3, 5, 7):
            f, H = family_subgroup(FAMILY_MERSENNE, d=d)
            for d0 in (1, 3):
                if f % d0 == 0:
                    continue
                self.assertEqual(N_prime_d0_value(f, H, d0),
                                 mersenne_n_prime(d, d0), (d, d0))
        self.assertRaises(FamilyNotCoveredError, mersenne_n_prime, 4, 1)
        self.assertRaises(FamilyNotCoveredError, mersenne_n_prime, 5, 7)

    def testLiftSums(self):
        self.assertEqual(mersenne_lift_sum(3, 1), Fraction(1, 2))
        self.assertEqual(S_H(subgroup_of_order(7, 3)), Fraction(1, 2))
        self.assertEqual(power_form_lift_sum(2, 3, 1), Fraction(1, 2))
        self.assertRaises(FamilyNotCoveredError, mersenne_lift_sum, 3, 7)

    def testQuadraticLiftSums(self):
        self.assertEqual(quadratic_form_lift_sum(2, 2), Fraction(1, 2))
        self.assertEqual(quadratic_form_lift_sum(2, 3), 3)
        self.assertEqual(quadratic_form_lift_sum(-3, 3), 3)
        for a in range(-12, 13):
            f = a * a + a + 1
            if f <= 3:
                self.assertRaises(FamilyNotCoveredError,
                                  quadratic_form_lift_sum, a, 1)
                continue
            _, H = quadratic_form_subgroup(a, 1)
            for delta in (1, 2, 3, 6):
                if f % 3 == 0 and delta % 3 == 0:
                    self.assertRaises(FamilyNotCoveredError,
                                      quadratic_form_lift_sum, a, delta)
                    continue
                self.assertEqual(S_H(lift_subgroup(H, delta)),
                                 quadratic_form_lift_sum(a, delta),
                                 (a, delta))
        self.assertRaises(FamilyNotCoveredError, quadratic_form_lift_sum, 2, 5)

    def testA(self):
        self.assertEqual(A_closed_one(3), Fraction(4, 3))
        self.assertEqual(A_value(3, 1), Fraction(4, 3))
        self.assertEqual(A_value(5, 1), A_closed_one(5))
        self.assertRaises(NotSquareFreeError, A_value, 4, 1)

    def testQuadraticForm(self):
        for a in (2, 3, 5, 6):
            f, H = family_subgroup(FAMILY_QUADRATIC_FORM, a=a)
            self.assertEqual(closed_form_n(f, FAMILY_QUADRATIC_FORM, 2,
                                           a=a).value,
                             (-1) ** (a - 1) * (2 * a + 1))
            self.assertEqual(N_d0_value(f, H, 2).value,
                             (-1) ** (a - 1) * (2 * a + 1))


class TestClosedForms(unittest.TestCase):

    def testTrivial(self):
        for f in (5, 7, 9, 15, 21):
            expected = M_exact(f, trivial_subgroup(f)).coefficient
            result = closed_form(f, FAMILY_TRIVIAL, 1)
            self.assertEqual(result.coefficient, expected)
            self.assertEqual(result.provenance, PROVENANCE_CLOSED)

    def testFamilies(self):
        self.assertEqual(closed_form(7, FAMILY_MERSENNE, 3, d=3).coefficient,
                         Fraction(16, 63))
        f, H = family_subgroup(FAMILY_MERSENNE, d=5)
        self.assertEqual(closed_form(f, FAMILY_MERSENNE, 1, d=5).coefficient,
                         M_exact(f, H).coefficient)
        f, H = family_subgroup(FAMILY_POWER_FORM, a=-2, d=5)
        self.assertEqual(f, 11)
        self.assertEqual(closed_form(f, FAMILY_POWER_FORM, 1, a=-2,
                                     d=5).coefficient,
                         M_exact(f, H).coefficient)
        self.assertEqual(closed_form(13, FAMILY_QUADRATIC_FORM, 2, a=3,
                                     b=1).coefficient, Fraction(5, 26))

    def testNotCovered(self):
        self.assertRaises(FamilyNotCoveredError, closed_form, 15,
                          FAMILY_MERSENNE, 1, d=4)
        self.assertRaises(FamilyNotCoveredError, closed_form, 7,
                          FAMILY_QUADRATIC_FORM, 5, a=2)
        self.assertRaises(FamilyNotCoveredError, closed_form, 7, "other", 1)

    def testFamilyOf(self):
        self.assertEqual(family_of(7, 1), (FAMILY_TRIVIAL, {}))
        self.assertEqual(family_of(7, 3), (FAMILY_MERSENNE, {"d": 3}))
        self.assertEqual(family_of(13, 3),
                         (FAMILY_QUADRATIC_FORM, {"a": 3, "b": 1}))
        self.assertEqual(family_of(11, 5),
                         (FAMILY_POWER_FORM, {"a": -2, "d": 5}))
        self.assertIsNone(family_of(7, 2))
        self.assertIsNone(family_of(41, 5))


class TestTwisted(unittest.TestCase):

    def testLimit(self):
        self.assertEqual(twisted_moment_limit(2, 4), Fraction(1, 12))
        self.assertEqual(twisted_moment_limit(1, 1), Fraction(1, 6))

    def testTrivialMatchesMeanSquare(self):
        self.assertEqual(twisted_moment_exact(1, 1, 7).coefficient,
                         M_exact(7, trivial_subgroup(7)).coefficient)


class TestClassNumbers(unittest.TestCase):

    def testEulerProduct(self):
        product = euler_product(7, subgroup_of_order(7, 3), 3)
        self.assertEqual(product.pi_value, Fraction(4, 3))
        self.assertAlmostEqual(product.log_pi, math.log(4.0 / 3))

    def testPlain(self):
        bound = class_number_bound(7, 3)
        self.assertAlmostEqual(bound.bound_log, 0.0)
        self.assertEqual((bound.wK, bound.m, bound.d0), (2, 2, 1))

    def testEuler(self):
        plain = class_number_bound(23, 1)
        euler = class_number_bound(23, 1, 6, "euler")
        self.assertTrue(euler.bound_log < plain.bound_log)

    def testExactProduct(self):
        for p, d, h in ((7, 3, 1), (23, 1, 3), (31, 1, 9)):
            bound = class_number_bound(p, d, 1, "exact_product")
            self.assertEqual(round(math.exp(bound.bound_log)), h)

    def testErrors(self):
        self.assertRaises(DegreeParityError, class_number_bound, 7, 2)
        self.assertRaises(NotPrimeError, class_number_bound, 9, 1)
        self.assertRaises(ValueError, class_number_bound, 7, 3, 1, "other")


if __name__ == "__main__":
    unittest.main()
