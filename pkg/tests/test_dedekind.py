#! /usr/bin/env python
# -*- encoding: utf-8 -*-
# vim:fenc=utf-8:

import unittest
from math import gcd
from fractions import Fraction

import numpy as np

from dedelab.dedekind import dedekind12, dedekind12_many, dedekind_fast, \
                             dedekind_naive, rademacher, s1, s2, \
                             reciprocity_rhs, three_term_rhs, \
                             power_modulus_s, cube_family
from dedelab.errors import ZeroModulusError, NotCoprimeError, \
                          ModulusTooLargeForOracleError


class TestDedekindSums(unittest.TestCase):

    def testKnownValues(self):
        self.assertEqual(dedekind_fast(2, 7), Fraction(1, 14))
        self.assertEqual(dedekind_fast(1, 1), 0)
        self.assertEqual(dedekind_fast(2, 127), Fraction(1281, 254))
        self.assertEqual(dedekind_naive(2, 127), Fraction(1281, 254))

    def testSigns(self):
        self.assertEqual(dedekind_fast(2, -7), Fraction(-1, 14))
        self.assertEqual(dedekind_fast(-2, 7), Fraction(-1, 14))
        self.assertEqual(dedekind_naive(2, -7), Fraction(-1, 14))
        self.assertEqual(dedekind_fast(9, 7), dedekind_fast(2, 7))

    def testErrors(self):
        self.assertRaises(ZeroModulusError, dedekind_fast, 1, 0)
        self.assertRaises(NotCoprimeError, dedekind_fast, 2, 4)
        self.assertRaises(ModulusTooLargeForOracleError, dedekind_naive, 1,
                          10 ** 7 + 1)

    def testFastAgainstNaive(self):
        for d in range(1, 61):
            for c in range(d):
                if gcd(c, d) == 1:
                    self.assertEqual(dedekind_fast(c, d),
                                     dedekind_naive(c, d), (c, d))

    def testKernel(self):
        for h, k in ((2, 7), (5, 12), (2, 127), (1000, 1009)):
            self.assertEqual(Fraction(dedekind12(h, k), 12 * k),
                             dedekind_fast(h, k))

    def testVectorizedKernel(self):
        k = 127
        hs = np.arange(1, k)
        expected = [dedekind12(int(h), k) for h in hs]
        self.assertEqual(dedekind12_many(hs, k).tolist(), expected)
        k = 10 ** 8 - 1
        hs = [2, 65536, k - 2, 1234567]
        expected = [dedekind12(h, k) for h in hs]
        self.assertEqual(dedekind12_many(hs, k).tolist(), expected)


class TestReciprocity(unittest.TestCase):

    def testTwoTerm(self):
        for d in range(1, 41):
            for c in range(1, 41):
                if gcd(c, d) == 1:
                    self.assertEqual(dedekind_fast(c, d) +
                                     dedekind_fast(d, c),
                                     reciprocity_rhs(c, d))

    def testThreeTerm(self):
        for b, c, d in ((1, 2, 3), (3, 5, 7), (4, 9, 25), (10, 11, 13)):
            self.assertEqual(rademacher(b, c, d) + rademacher(d, b, c) +
                             rademacher(c, d, b), three_term_rhs(b, c, d))

    def testClosedForms(self):
        for d in range(1, 51):
            self.assertEqual(dedekind_fast(1, d), s1(d))
            if d % 2:
                self.assertEqual(dedekind_fast(2, d), s2(d))
        self.assertEqual(s1(7) + s1(-7), 0)


class TestRademacher(unittest.TestCase):

    def testReduction(self):
        self.assertEqual(rademacher(1, 1, 3), Fraction(1, 18))
        self.assertEqual(rademacher(4, 2, 7), dedekind_fast(2, 7))
        self.assertRaises(NotCoprimeError, rademacher, 2, 1, 4)

    def testQuadraticForm(self):
        for a, b in ((2, 1), (3, 2), (5, 3), (7, 1)):
            f = a * a + a * b + b * b
            self.assertEqual(rademacher(a, b, f), Fraction(f - 1, 12 * f))


class TestFamilies(unittest.TestCase):

    def testPowerModulus(self):
        self.assertEqual(power_modulus_s(2, 7), Fraction(1281, 254))
        for a in (2, 3, 5):
            for d in (3, 5):
                f = (a ** d - 1) // (a - 1)
                self.assertEqual(power_modulus_s(a, d), dedekind_fast(a, f))

    def testCubeFamily(self):
        f, a, b, h2, value = cube_family(1, 2)
        self.assertEqual((f, a, b, h2), (511, 6, 19, 8))
        self.assertEqual(a * a + a * b + b * b, f)
        self.assertEqual(pow(h2, 3, f), 1)
        self.assertEqual(dedekind_fast(h2, f), value)
        self.assertEqual(rademacher(a, b, f), Fraction(f - 1, 12 * f))


if __name__ == "__main__":
    unittest.main()
