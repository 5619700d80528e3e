#! /usr/bin/env python
# -*- encoding: utf-8 -*-
# vim:fenc=utf-8:

import unittest
from fractions import Fraction

from dedelab.numt import rational_str, parse_rational, primes_up_to, \
                         is_prime, factorize, euler_phi, mobius, \
                         carmichael, divisors, squarefree_divisors, \
                         is_squarefree, mod_inverse, mult_order, \
                         primitive_root, is_primitive_root, crt
from dedelab.errors import InputTooLargeError, NotCoprimeError, \
                          NotCoprimeModuliError


class TestRationals(unittest.TestCase):

    def testRender(self):
        self.assertEqual(rational_str(Fraction(1, 14)), "1/14")
        self.assertEqual(rational_str(Fraction(-2, 4)), "-1/2")
        self.assertEqual(rational_str(3), "3")

    def testParse(self):
        self.assertEqual(parse_rational("1281/254"), Fraction(1281, 254))


class TestPrimes(unittest.TestCase):

    def testSieve(self):
        self.assertEqual(primes_up_to(30),
                         (2, 3, 5, 7, 11, 13, 17, 19, 23, 29))
        self.assertEqual(primes_up_to(1), ())

    def testMillerRabin(self):
        self.assertTrue(is_prime(2))
        self.assertTrue(is_prime(2147483647))
        self.assertTrue(is_prime((1 << 61) - 1))
        self.assertFalse(is_prime(0))
        self.assertFalse(is_prime(1))
        self.assertFalse(is_prime(561))
        # strong pseudoprime to the bases 2, 3, 5 and 7
        self.assertFalse(is_prime(3215031751))

    def testDomain(self):
        self.assertRaises(InputTooLargeError, is_prime, 1 << 64)
        self.assertRaises(InputTooLargeError, factorize, 1 << 64)


class TestFactorization(unittest.TestCase):

    def testSmall(self):
        self.assertEqual(factorize(360).factors, ((2, 3), (3, 2), (5, 1)))
        self.assertEqual(factorize(1).factors, ())

    def testFermat(self):
        self.assertEqual(factorize((1 << 32) + 1).factors,
                         ((641, 1), (6700417, 1)))

    def testRho(self):
        n = 1000003 * 1000033
        self.assertEqual(factorize(n).factors, ((1000003, 1), (1000033, 1)))
        n = 3 * ((1 << 61) - 1)
        self.assertEqual(factorize(n).primes, (3, (1 << 61) - 1))

    def testArithmeticFunctions(self):
        self.assertEqual(euler_phi(36), 12)
        self.assertEqual(euler_phi(1), 1)
        self.assertEqual(mobius(30), -1)
        self.assertEqual(mobius(12), 0)
        self.assertEqual(mobius(1), 1)
        self.assertEqual(carmichael(8), 2)
        self.assertEqual(carmichael(15), 4)
        self.assertEqual(divisors(12), [1, 2, 3, 4, 6, 12])
        self.assertEqual(squarefree_divisors(12), [1, 2, 3, 6])
        self.assertFalse(is_squarefree(18))
        self.assertTrue(is_squarefree(105))
        self.assertEqual(factorize(60).radical(), 30)


class TestModular(unittest.TestCase):

    def testInverse(self):
        self.assertEqual(mod_inverse(5, 21), 17)
        self.assertEqual(mod_inverse(4, 1), 0)
        self.assertRaises(NotCoprimeError, mod_inverse, 3, 6)

    def testOrder(self):
        self.assertEqual(mult_order(2, 7), 3)
        self.assertEqual(mult_order(2, 127), 7)
        self.assertEqual(mult_order(10, 7), 6)
        self.assertRaises(NotCoprimeError, mult_order, 2, 4)

    def testPrimitiveRoot(self):
        self.assertEqual(primitive_root(7), 3)
        self.assertEqual(primitive_root(23), 5)
        self.assertEqual(primitive_root(9), 2)
        self.assertTrue(is_primitive_root(3, 7))
        self.assertFalse(is_primitive_root(2, 7))
        self.assertRaises(ValueError, primitive_root, 8)

    def testCrt(self):
        self.assertEqual(crt([2, 3], [3, 5]), (8, 15))
        self.assertRaises(NotCoprimeModuliError, crt, [1, 1], [4, 6])


if __name__ == "__main__":
    unittest.main()
