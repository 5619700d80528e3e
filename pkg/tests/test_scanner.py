#! /usr/bin/env python
# -*- encoding: utf-8 -*-
# vim:fenc=utf-8:

import io
import shutil
import tempfile
import unittest
from unittest import mock
from fractions import Fraction

from dedelab.scanner import Scanner, ScanRecord, ScanSummary, scan_prime, \
                            primes_in_segment, records_csv, fit_mersenne, \
                            mersenne_fit_dict, CSV_HEADER
from dedelab.storage import CheckpointStorage
from dedelab.numt import primes_up_to
from dedelab.errors import InputTooLargeError, FamilyNotCoveredError, \
                          IdentityMismatchError


class InterruptedStorage(CheckpointStorage):
    """Stops the scan right after its first checkpoint."""

    def save(self):
        CheckpointStorage.save(self)
        raise KeyboardInterrupt()


class TestScanPrimes(unittest.TestCase):

    def testSegment(self):
        self.assertEqual(primes_in_segment(10, 30, primes_up_to(6)),
                         [11, 13, 17, 19, 23, 29])
        self.assertEqual(primes_in_segment(0, 10, primes_up_to(4)),
                         [2, 3, 5, 7])
        self.assertEqual(primes_in_segment(30, 30, ()), [])

    def testScanPrime(self):
        d, h, kernel, q = scan_prime(7)
        self.assertEqual((d.tolist(), h.tolist(), kernel.tolist()),
                         ([3], [2], [6]))
        self.assertAlmostEqual(q[0], 1 / 14.0 / 7 ** 0.5)
        d, h, kernel, q = scan_prime(5)
        self.assertEqual(len(d), 0)
        d, h, kernel, q = scan_prime(127, d_max=3)
        self.assertEqual((d.tolist(), h.tolist()), ([3], [19]))
        d, h, kernel, q = scan_prime(127)
        self.assertEqual(sorted(set(d.tolist())), [3, 7, 9, 21, 63])
        self.assertEqual(len(d), 31)

    def testMaximum(self):
        summary = Scanner(130).run()
        record = summary.max_record
        self.assertEqual((record.p, record.d, record.h), (127, 7, 2))
        self.assertEqual(record.s_val, Fraction(1281, 254))
        self.assertAlmostEqual(record.q_ratio, 0.08903, places=4)
        self.assertEqual(summary.count, sum(summary.histogram))
        self.assertTrue(Scanner(30).run().max_record.q_ratio < 0.089)

    def testRecords(self):
        stream = io.StringIO()
        summary = Scanner(200, threshold=0.05).run(stream)
        lines = stream.getvalue().splitlines()
        self.assertEqual(lines[0], ",".join(CSV_HEADER))
        self.assertEqual(len(lines) - 1, summary.emitted)
        self.assertTrue("127,7,2,1281,254,0.0890" in "\n".join(lines))

    def testWorkersAgree(self):
        one = Scanner(3000, segment_size=500).run()
        two = Scanner(3000, segment_size=500, processes=2).run()
        self.assertEqual(one.as_dict(), two.as_dict())

    def testNaiveRecheck(self):
        summary = Scanner(3000, segment_size=500).run()
        self.assertTrue(summary.naive_checked >= 6)
        none = Scanner(3000, segment_size=500, sample_rate=0).run()
        self.assertEqual(none.naive_checked, 6)
        every = Scanner(200, sample_rate=1).run()
        self.assertEqual(every.naive_checked,
                         len([p for p in primes_up_to(200)
                              if p > 3 and len(scan_prime(p)[0])]) +
                         every.emitted)

    def testNaiveMismatch(self):
        with mock.patch("dedelab.scanner.dedekind_naive",
                        return_value=Fraction(0)):
            self.assertRaises(IdentityMismatchError, Scanner(200).run)

    def testCap(self):
        self.assertRaises(InputTooLargeError, Scanner, 10 ** 9)
        self.assertRaises(InputTooLargeError, Scanner, 1000, scan_cap=100)


class TestCheckpoint(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def _scanner(self, checkpoint, max_p=3000):
        return Scanner(max_p, threshold=0.03, checkpoint=checkpoint,
                       checkpoint_every=50, segment_size=500)

    def testResume(self):
        expected = io.StringIO()
        full = self._scanner(None).run(expected)

        stream = io.StringIO()
        storage = InterruptedStorage.named("scan", self.directory)
        self.assertRaises(KeyboardInterrupt, self._scanner(storage).run,
                          stream)
        self.assertTrue(storage.exists())
        self.assertTrue(storage.load()["next_start"] < 3001)

        storage = CheckpointStorage.named("scan", self.directory)
        resumed = self._scanner(storage).run(stream, resume=True)
        self.assertEqual(resumed.as_dict(), full.as_dict())
        self.assertEqual(stream.getvalue(), expected.getvalue())

    def testResumeLostOutput(self):
        storage = InterruptedStorage.named("scan", self.directory)
        self.assertRaises(KeyboardInterrupt, self._scanner(storage).run,
                          io.StringIO())
        stream = io.StringIO()
        storage = CheckpointStorage.named("scan", self.directory)
        self._scanner(storage).run(stream, resume=True)
        lines = stream.getvalue().splitlines()
        self.assertEqual(lines[0], ",".join(CSV_HEADER))
        self.assertFalse("\x00" in stream.getvalue())

    def testParamsMismatch(self):
        storage = CheckpointStorage.named("scan", self.directory)
        self._scanner(storage).run()
        self.assertRaises(ValueError, self._scanner(storage, 2000).run,
                          None, True)


class TestSummary(unittest.TestCase):

    def testRoundTrip(self):
        summary = Scanner(200).run()
        self.assertEqual(ScanSummary.from_dict(summary.as_dict()).as_dict(),
                         summary.as_dict())

    def testCsv(self):
        record = ScanRecord(7, 3, 2, Fraction(1, 14), 0.027)
        self.assertEqual(records_csv([record]),
                         "p,d,h,s_num,s_den,q_ratio\n7,3,2,1,14,0.027\n")
        self.assertEqual(ScanRecord.from_dict(record.as_dict()), record)


class TestMersenneFit(unittest.TestCase):

    def testTrivialD0(self):
        fit, = fit_mersenne([3, 5, 7, 9], 1)
        self.assertEqual((fit.residue, fit.period), (1, 2))
        self.assertEqual((fit.a1, fit.a0), (-2, 1))
        self.assertEqual((fit.samples, fit.verified), (4, 2))
        self.assertTrue(fit.consistent)
        self.assertTrue(fit.table_match)
        self.assertEqual(mersenne_fit_dict(fit)["a1"], "-2")

    def testNotAdmissible(self):
        self.assertRaises(FamilyNotCoveredError, fit_mersenne, [4, 6], 1)
        fit, = fit_mersenne([3], 1)
        self.assertIsNone(fit.a1)


if __name__ == "__main__":
    unittest.main()
