#! /usr/bin/env python
# -*- encoding: utf-8 -*-
# vim:fenc=utf-8:

"""
The scanner module
------------------

Numerical exploration of the size of Dedekind sums s(h, p) for h of odd
order d modulo a prime p. The scanner walks the primes up to a bound with
a segmented sieve and, for each of them, every element h of odd order
d >= 3, reporting the ratio

.. math::

    Q(h, p) = |s(h, p)| / p^{1 - 1/\\varphi(d)}

Since s(h^-1, p) = s(h, p) only one element of each pair {h, h^-1} is
evaluated, and the smaller of the two is reported.

Segments have a fixed size and their results are merged in order, so the
output does not depend on the number of worker processes.

.. code-block:: python

    >>> from dedelab.scanner import Scanner
    >>> summary = Scanner(130).run()
    >>> summary.max_record.p, summary.max_record.h
    (127, 2)
"""

import io
import csv
import math
import random
import logging
from math import gcd, isqrt
from fractions import Fraction
from collections import namedtuple
from multiprocessing import Pool

import numpy as np

from dedelab.numt import primes_up_to, primitive_root, euler_phi, \
                         mult_order, rational_str
from dedelab.dedekind import dedekind12_many, dedekind_naive, \
                             NAIVE_MAX_MODULUS
from dedelab.groups import power_subgroup
from dedelab.errors import IdentityMismatchError, FamilyNotCoveredError, \
                          InputTooLargeError

log = logging.getLogger(__name__)

SCAN_CAP = 10 ** 8
REPORT_THRESHOLD = 0.05
CHECKPOINT_EVERY = 10000
SAMPLE_RATE = 0.001
SEGMENT_SIZE = 1 << 15

#: histogram bucket edges for Q, the last bucket is open
HISTOGRAM_EDGES = tuple(np.round(np.linspace(0.0, 0.1, 21), 3).tolist()) + \
    (float("inf"),)

CSV_HEADER = ("p", "d", "h", "s_num", "s_den", "q_ratio")


class ScanRecord(namedtuple("ScanRecord", "p d h s_val q_ratio")):
    """One element h of odd order d modulo p and its ratio Q(h, p)."""
    __slots__ = ()

    def csv_row(self):
        return (self.p, self.d, self.h, self.s_val.numerator,
                self.s_val.denominator, "%.6g" % self.q_ratio)

    def as_dict(self):
        return {"p": self.p, "d": self.d, "h": self.h,
                "s_val": rational_str(self.s_val), "q_ratio": self.q_ratio}

    @classmethod
    def from_dict(cls, data):
        return cls(data["p"], data["d"], data["h"], Fraction(data["s_val"]),
                   data["q_ratio"])


SegmentResult = namedtuple("SegmentResult",
                           "lo hi primes count histogram max_record monitor "
                           "records naive_checked")


class ScanSummary(object):
    """Running aggregate of a scan.

    ``monitor`` keeps the largest value of 12|s(h, p)|/p together with the
    ``(p, h)`` where it happened.
    """

    def __init__(self):
        self.max_record = None
        self.count = 0
        self.primes = 0
        self.histogram = [0] * (len(HISTOGRAM_EDGES) - 1)
        self.monitor = (0.0, None, None)
        self.emitted = 0
        self.naive_checked = 0

    def merge(self, segment):
        self.count += segment.count
        self.primes += segment.primes
        self.histogram = [a + b for a, b in zip(self.histogram,
                                                segment.histogram)]
        if segment.max_record is not None and (
                self.max_record is None or
                segment.max_record.q_ratio > self.max_record.q_ratio):
            self.max_record = segment.max_record
        if segment.monitor[0] > self.monitor[0]:
            self.monitor = segment.monitor
        self.emitted += len(segment.records)
        self.naive_checked += segment.naive_checked

    def as_dict(self):
        return {
            "max_record": self.max_record.as_dict()
                          if self.max_record else None,
            "count": self.count,
            "primes": self.primes,
            "histogram": {"edges": [e if math.isfinite(e) else "inf"
                                    for e in HISTOGRAM_EDGES],
                          "counts": self.histogram},
            "monitor": {"value": self.monitor[0], "p": self.monitor[1],
                        "h": self.monitor[2]},
            "emitted": self.emitted,
            "naive_checked": self.naive_checked,
        }

    @classmethod
    def from_dict(cls, data):
        out = cls()
        if data["max_record"]:
            out.max_record = ScanRecord.from_dict(data["max_record"])
        out.count = data["count"]
        out.primes = data["primes"]
        out.histogram = list(data["histogram"]["counts"])
        monitor = data["monitor"]
        out.monitor = (monitor["value"], monitor["p"], monitor["h"])
        out.emitted = data["emitted"]
        out.naive_checked = data["naive_checked"]
        return out


def primes_in_segment(lo, hi, base):
    """Primes in [lo, hi) sieved with ``base``, the primes up to
    sqrt(hi)."""
    lo = max(lo, 2)
    if lo >= hi:
        return []
    size = hi - lo
    sieve = bytearray([1]) * size
    for q in base:
        if q * q >= hi:
            break
        first = max(q * q, (lo + q - 1) // q * q)
        if first >= hi:
            continue
        start = first - lo
        sieve[start::q] = bytearray((size - start - 1) // q + 1)
    return [lo + i for i in range(size) if sieve[i]]


def _odd_order_powers(p):
    """Powers y^j, j < m, of a generator y of the odd part of order m of
    the units modulo p."""
    m = p - 1
    while m % 2 == 0:
        m //= 2
    y = pow(primitive_root(p), (p - 1) // m, p)
    block = isqrt(m) + 1
    small = np.empty(block, dtype=np.int64)
    x = 1
    for j in range(block):
        small[j] = x
        x = x * y % p
    step = x
    big = np.empty(block, dtype=np.int64)
    x = 1
    for i in range(block):
        big[i] = x
        x = x * step % p
    return m, ((big[:, None] * small[None, :]) % p).ravel()[:m]


def scan_prime(p, d_max=None):
    """Orders, representatives and 12 p s(h, p) for every pair {h, h^-1}
    of elements of odd order d >= 3 modulo p.

    Returns ``(d, h, kernel, q)`` arrays sorted by d then h.
    """
    m, powers = _odd_order_powers(p)
    empty = np.zeros(0, dtype=np.int64)
    if m < 3:
        return empty, empty, empty, np.zeros(0)
    j = np.arange(1, (m - 1) // 2 + 1, dtype=np.int64)
    d = m // np.gcd(j, m)
    if d_max is not None:
        keep = d <= d_max
        j, d = j[keep], d[keep]
    h = np.minimum(powers[j], powers[m - j])
    order = np.lexsort((h, d))
    d, h = d[order], h[order]
    kernel = dedekind12_many(h, p)
    orders, index = np.unique(d, return_inverse=True)
    scale = np.array([float(p) ** (1.0 - 1.0 / euler_phi(int(k)))
                      for k in orders], dtype=np.float64)
    q = np.abs(kernel).astype(np.float64) / (12.0 * p) / scale[index]
    return d, h, kernel, q


def bucket_counts(q):
    """Histogram of Q values over :data:`HISTOGRAM_EDGES`."""
    edges = np.array(HISTOGRAM_EDGES[:-1])
    index = np.searchsorted(edges, q, side="right") - 1
    return np.bincount(index, minlength=len(edges))


def naive_recheck(p, h, s_val):
    """Compare s(h, p) with the sawtooth sum.

    :raises IdentityMismatchError: if they disagree.
    """
    naive = dedekind_naive(h, p)
    if naive != s_val:
        log.error("s(%d, %d): fast %s, naive %s", h, p, rational_str(s_val),
                  rational_str(naive))
        raise IdentityMismatchError("s(%d, %d) disagrees with the sawtooth "
                                    "sum" % (h, p))


def _scan_segment(job):
    lo, hi, d_max, threshold, sample_rate = job
    base = primes_up_to(isqrt(hi) + 1)
    primes = [p for p in primes_in_segment(lo, hi, base) if p > 3]
    histogram = np.zeros(len(HISTOGRAM_EDGES) - 1, dtype=np.int64)
    count = 0
    max_record = None
    monitor = (0.0, None, None)
    records = []
    checked = 0
    for p in primes:
        d, h, kernel, q = scan_prime(p, d_max)
        if not len(d):
            continue
        if p <= NAIVE_MAX_MODULUS:
            # at least one pair per segment, then sample_rate of the primes
            rng = random.Random(p)
            if not checked or rng.random() < sample_rate:
                i = rng.randrange(len(d))
                naive_recheck(p, int(h[i]), Fraction(int(kernel[i]), 12 * p))
                checked += 1
        count += len(d)
        histogram += bucket_counts(q)
        best = int(np.argmax(q))
        if max_record is None or q[best] > max_record.q_ratio:
            max_record = ScanRecord(p, int(d[best]), int(h[best]),
                                    Fraction(int(kernel[best]), 12 * p),
                                    float(q[best]))
        top = int(np.argmax(np.abs(kernel)))
        value = float(abs(int(kernel[top]))) / (p * p)
        if value > monitor[0]:
            monitor = (value, p, int(h[top]))
        for i in np.nonzero(q > threshold)[0]:
            records.append(ScanRecord(p, int(d[i]), int(h[i]),
                                      Fraction(int(kernel[i]), 12 * p),
                                      float(q[i])))
    return SegmentResult(lo, hi, len(primes), count, histogram.tolist(),
                         max_record, monitor, records, checked)


class Scanner(object):
    """Scan primes up to ``max_p``.

    :param `max_p`: inclusive bound on the primes, at most ``scan_cap``.
    :param `d_max`: only scan orders up to this value.
    :param `threshold`: records with Q above it are written out.
    :param `processes`: number of worker processes.
    :param `checkpoint`: a :class:`CheckpointStorage`, or None.
    :param `sample_rate`: share of the primes, and of the written records,
      rechecked with the sawtooth sum. Every segment checks at least one
      pair.
    """

    def __init__(self, max_p, d_max=None, threshold=REPORT_THRESHOLD,
                 processes=1, checkpoint=None,
                 checkpoint_every=CHECKPOINT_EVERY, sample_rate=SAMPLE_RATE,
                 scan_cap=SCAN_CAP, segment_size=SEGMENT_SIZE):
        if max_p > scan_cap:
            raise InputTooLargeError("max_p = %d is above the scan cap %d"
                                     % (max_p, scan_cap))
        self.max_p = max_p
        self.d_max = d_max
        self.threshold = threshold
        self.processes = max(1, processes or 1)
        self.checkpoint = checkpoint
        self.checkpoint_every = checkpoint_every
        self.sample_rate = sample_rate
        self.segment_size = segment_size

    def _params(self):
        return {"max_p": self.max_p, "d_max": self.d_max,
                "threshold": self.threshold,
                "segment_size": self.segment_size}

    def _jobs(self, start):
        end = self.max_p + 1
        for lo in range(start, end, self.segment_size):
            yield (lo, min(lo + self.segment_size, end), self.d_max,
                   self.threshold, self.sample_rate)

    def _sampled(self, record):
        return random.Random(record.p * 1000003 + record.h).random() < \
            self.sample_rate

    def _recheck(self, record, summary):
        if record.p > NAIVE_MAX_MODULUS or not self._sampled(record):
            return
        naive_recheck(record.p, record.h, record.s_val)
        summary.naive_checked += 1

    def _save(self, summary, next_start, stream):
        if self.checkpoint is None:
            return
        self.checkpoint.clear()
        self.checkpoint.update({
            "params": self._params(),
            "next_start": next_start,
            "summary": summary.as_dict(),
            "csv_offset": stream.tell() if stream is not None and
            stream.seekable() else None,
        })
        self.checkpoint.save()
        log.info("checkpoint at %d, %d primes scanned", next_start,
                 summary.primes)

    def _restore(self, stream):
        state = self.checkpoint.load()
        if state["params"] != self._params():
            raise ValueError("checkpoint %s was written for %r" %
                             (self.checkpoint.path, state["params"]))
        offset = state.get("csv_offset")
        if stream is not None and offset is not None:
            if stream.seek(0, io.SEEK_END) >= offset:
                stream.seek(offset)
                stream.truncate()
            else:
                # output lost or shortened since the checkpoint
                log.warning("output holds fewer than the %d checkpointed "
                            "bytes, records before %d are not rewritten",
                            offset, state["next_start"])
                stream.seek(0)
                stream.truncate()
                csv.writer(stream, lineterminator="\n").writerow(CSV_HEADER)
        log.info("resuming scan at %d", state["next_start"])
        return ScanSummary.from_dict(state["summary"]), state["next_start"]

    def run(self, stream=None, resume=False):
        """Run the scan and return a :class:`ScanSummary`.

        :param `stream`: text stream receiving the CSV records.
        :param `resume`: continue from the checkpoint if there is one.
        """
        writer = csv.writer(stream, lineterminator="\n") if stream else None
        if resume and self.checkpoint is not None and \
                self.checkpoint.exists():
            summary, start = self._restore(stream)
        else:
            summary, start = ScanSummary(), 0
            if writer:
                writer.writerow(CSV_HEADER)
        since = 0
        jobs = self._jobs(start)
        pool = Pool(self.processes) if self.processes > 1 else None
        try:
            results = pool.imap(_scan_segment, jobs) if pool else \
                map(_scan_segment, jobs)
            for segment in results:
                summary.merge(segment)
                for record in segment.records:
                    self._recheck(record, summary)
                    if writer:
                        writer.writerow(record.csv_row())
                since += segment.primes
                if since >= self.checkpoint_every:
                    if stream is not None:
                        stream.flush()
                    self._save(summary, segment.hi, stream)
                    since = 0
        finally:
            if pool is not None:
                pool.terminate()
                pool.join()
        if stream is not None:
            stream.flush()
        self._save(summary, self.max_p + 1, stream)
        return summary


def records_csv(records):
    """Render records as CSV text, header included."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for record in records:
        writer.writerow(record.csv_row())
    return out.getvalue()


MersenneFit = namedtuple("MersenneFit",
                         "d0 residue period a1 a0 samples verified "
                         "consistent table_match")


def _mersenne_period(d0):
    if d0 == 1:
        return 2
    order = mult_order(2, d0)
    return order * 2 // gcd(order, 2)


def mersenne_samples(d_list, d0):
    """Exact N'_{d0}(2^d - 1, <2>) for the admissible d of ``d_list``."""
    from dedelab.moments import N_prime_d0_value
    samples = []
    for d in sorted(set(d_list)):
        if d < 3 or d % 2 == 0:
            log.warning("skipping d = %d, only odd d >= 3 are admissible", d)
            continue
        f = (1 << d) - 1
        if gcd(f, d0) != 1:
            log.warning("skipping d = %d: gcd(2^%d - 1, %d) != 1", d, d, d0)
            continue
        H = power_subgroup(f, 2)
        samples.append((d, N_prime_d0_value(f, H, d0).value))
    return samples


def fit_mersenne(d_list, d0):
    """Fit N' = A1 d + A0 on each residue class of d and check the fit on
    the remaining samples.

    :raises FamilyNotCoveredError: if no d of the list is admissible.
    """
    from dedelab.moments import MERSENNE_TABLE
    samples = mersenne_samples(d_list, d0)
    if not samples:
        raise FamilyNotCoveredError("no admissible d for d0 = %d" % d0)
    period = _mersenne_period(d0)
    classes = {}
    for d, value in samples:
        classes.setdefault(d % period, []).append((d, value))
    fits = []
    for residue in sorted(classes):
        points = classes[residue]
        if len(points) < 2:
            fits.append(MersenneFit(d0, residue, period, None, None,
                                    len(points), 0, None, None))
            continue
        (d1, n1), (d2, n2) = points[:2]
        a1 = (n2 - n1) / (d2 - d1)
        a0 = n1 - a1 * d1
        verified = sum(1 for d, n in points[2:] if a1 * d + a0 == n)
        consistent = verified == len(points) - 2
        table_match = None
        if d0 in MERSENNE_TABLE:
            table_period, table = MERSENNE_TABLE[d0]
            entry = table.get(residue % table_period)
            table_match = entry == (a1, a0) if entry is not None else False
        fits.append(MersenneFit(d0, residue, period, a1, a0, len(points),
                                verified, consistent, table_match))
    return fits


def mersenne_fit_dict(fit):
    out = dict(fit._asdict())
    for key in ("a1", "a0"):
        if out[key] is not None:
            out[key] = rational_str(out[key])
    return out
