#! /usr/bin/env python
# -*- encoding: utf-8 -*-
# vim:fenc=utf-8:

import unittest
from unittest import mock

from dedelab import suites
from dedelab.oracle import CheckReport
from dedelab.errors import UsageError, NotPrimeError, IdentityMismatchError


class TestCheck(unittest.TestCase):

    def testEqual(self):
        check = suites.Check("s", "c")
        check.equal(1, 1, "one")
        check.equal(1, 2, "two")
        result = check.result()
        self.assertEqual((result.checked, result.failed), (2, 1))
        self.assertEqual(result.examples, ["two: 1 != 2"])
        self.assertFalse(result.passed)
        self.assertFalse(result.as_dict()["pass"])

    def testRecord(self):
        check = suites.Check("s", "c")
        check.record(CheckReport.compare("a", 1.0, 1.0 + 1e-12, 1e-9))
        check.record(CheckReport.compare("b", 2.0, 2.0 + 1e-10, 1e-9))
        result = check.result()
        self.assertTrue(result.passed)
        self.assertTrue(result.measure < 1e-10)

    def testAbsorb(self):
        check = suites.Check("s", "c")
        check.absorb([(3, [], 0.5), (2, ["bad"], None)])
        result = check.result()
        self.assertEqual((result.checked, result.failed, result.measure),
                         (5, 1, 0.5))


class TestRunSuite(unittest.TestCase):

    def testReciprocity(self):
        results = suites.run_suite("reciprocity", 30)
        self.assertTrue(results)
        for result in results:
            self.assertEqual(result.suite, "reciprocity")
            self.assertTrue(result.checked > 0, result.check)
            self.assertTrue(result.passed, result.examples)

    def testOrderThreeIdentities(self):
        results = dict((r.check, r) for r in suites.run_suite("d3", 200))
        for name in ("s(a, b, a^2+ab+b^2)", "two sizes at order three",
                     "lifted sums on a^2+a+1"):
            self.assertTrue(results[name].checked > 0)
            self.assertTrue(results[name].passed, results[name].examples)

    def testUnknown(self):
        self.assertRaises(UsageError, suites.run_suite, "nope")

    def testErrors(self):
        with mock.patch.object(suites, "suite_reciprocity",
                               side_effect=NotPrimeError("9")):
            result, = suites.run_suite("reciprocity", 10)
            self.assertFalse(result.passed)
            self.assertEqual(result.examples, ["9"])
        with mock.patch.object(suites, "suite_reciprocity",
                               side_effect=IdentityMismatchError("s")):
            self.assertRaises(IdentityMismatchError, suites.run_suite,
                              "reciprocity", 10)

    def testAll(self):
        calls = []

        def fake(name):
            def run(limit, processes, tolerance):
                calls.append((name, limit))
                return []
            return run
        patches = [mock.patch.object(suites, "suite_" + name, fake(name))
                   for name in suites.SUITES]
        for patch in patches:
            patch.start()
            self.addCleanup(patch.stop)
        self.assertEqual(suites.run_suite("all"), [])
        self.assertEqual(calls, [(name, suites.DEFAULT_LIMITS[name])
                                 for name in suites.SUITES])
        del calls[:]
        suites.run_suite("all", 1000)
        self.assertEqual(dict(calls), {"reciprocity": 1000, "formulas": 750,
                                       "mersenne": 155, "d3": 50000,
                                       "oracle": 300})
        self.assertEqual(suites.scaled_limit("oracle", 1), 1)


if __name__ == "__main__":
    unittest.main()
