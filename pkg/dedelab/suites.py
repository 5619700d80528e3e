#! /usr/bin/env python
# -*- encoding: utf-8 -*-
# vim:fenc=utf-8:

"""
The suites module
-----------------

Named verification suites. Every suite runs a set of checks over a grid
of parameters and returns one :class:`SuiteResult` per check. Exact
identities are compared with :class:`~fractions.Fraction` equality and
numeric ones through :class:`~dedelab.oracle.CheckReport`.

.. code-block:: python

    >>> from dedelab.suites import run_suite
    >>> all(r.passed for r in run_suite("reciprocity", limit=30))
    True

The ``limit`` of a suite scales its grid; the defaults keep every suite
within a few minutes, the grids of the acceptance runs are reached with
larger limits (``reciprocity`` 1000, ``oracle`` 500).
"""

import math
import random
import logging
from math import gcd
from fractions import Fraction
from collections import namedtuple
from multiprocessing import Pool

from dedelab.numt import primes_up_to, divisors, is_squarefree, \
                         rational_str
from dedelab.dedekind import dedekind_fast, dedekind_naive, rademacher, \
                             s1, s2, reciprocity_rhs, three_term_rhs, \
                             power_modulus_s, cube_family
from dedelab.groups import subgroup_of_order, trivial_subgroup, \
                           lift_subgroup, mersenne_subgroup, \
                           power_subgroup, quadratic_form_subgroup
from dedelab import moments
from dedelab import oracle
from dedelab.scanner import fit_mersenne
from dedelab.errors import DedelabError, FamilyNotCoveredError, \
                          IdentityMismatchError, UsageError

log = logging.getLogger(__name__)

SUITES = ("reciprocity", "formulas", "mersenne", "d3", "oracle")

DEFAULT_LIMITS = {
    "reciprocity": 200,
    "formulas": 150,
    "mersenne": 31,
    "d3": 10000,
    "oracle": 60,
}

#: failing cases kept in a result
MAX_EXAMPLES = 10

#: square-free d0 of the mean square grids
D0_GRID = (1, 2, 3, 6, 15)

MERSENNE_EXPONENTS = (3, 5, 7, 13, 17, 19, 31)
MERSENNE_D0 = (1, 3, 5, 15, 105)

MAXIMA_PAIRS = ((1, 2), (2, 3), (2, 4), (3, 5))
MAXIMA_PRIME = 100003


class SuiteResult(namedtuple("SuiteResult",
                             "suite check checked failed examples measure")):
    """Outcome of one check of a suite.

    ``measure`` is the largest numeric error, or the monitored quantity
    for checks which follow a trend, None for exact checks.
    """
    __slots__ = ()

    @property
    def passed(self):
        return self.failed == 0

    def as_dict(self):
        out = dict(self._asdict())
        out["pass"] = self.passed
        return out


class Check(object):
    """Accumulates the cases of one named check."""

    def __init__(self, suite, name):
        self.suite = suite
        self.name = name
        self.checked = 0
        self.failures = []
        self.measure = None

    def expect(self, ok, what):
        self.checked += 1
        if not ok:
            self.failures.append(what)
            log.warning("%s/%s failed: %s", self.suite, self.name, what)

    def equal(self, lhs, rhs, what):
        if lhs != rhs:
            what = "%s: %s != %s" % (what, _show(lhs), _show(rhs))
        self.expect(lhs == rhs, what)

    def record(self, report):
        self.observe(min(report.rel_err, report.abs_err))
        self.expect(report.passed, "%s: %r vs %r" % (report.name, report.lhs,
                                                    report.rhs))

    def observe(self, value):
        if self.measure is None or value > self.measure:
            self.measure = value

    def absorb(self, outcomes):
        """Merge ``(checked, failures, measure)`` tuples from workers."""
        for checked, failures, measure in outcomes:
            self.checked += checked
            self.failures.extend(failures)
            if measure is not None:
                self.observe(measure)

    def result(self):
        return SuiteResult(self.suite, self.name, self.checked,
                           len(self.failures), self.failures[:MAX_EXAMPLES],
                           self.measure)


def _show(value):
    if isinstance(value, Fraction):
        return rational_str(value)
    return repr(value)


def _ordered_map(fun, jobs, processes):
    jobs = list(jobs)
    if processes and processes > 1 and len(jobs) > 1:
        with Pool(processes) as pool:
            return pool.map(fun, jobs)
    return [fun(job) for job in jobs]


def _odd_orders(p):
    return [d for d in divisors(p - 1) if d % 2]


def _mean_square_grid(limit):
    for p in primes_up_to(limit):
        if p < 5:
            continue
        for d in _odd_orders(p):
            for d0 in D0_GRID:
                if gcd(p, d0) == 1:
                    yield p, d, d0


# reciprocity

def _fast_naive_job(d):
    checked, failures = 0, []
    for c in range(1, d):
        if gcd(c, d) == 1:
            checked += 1
            if dedekind_fast(c, d) != dedekind_naive(c, d):
                failures.append("s(%d, %d)" % (c, d))
    return checked, failures, None


def _reciprocity_job(d):
    checked, failures = 0, []
    for c in range(1, d):
        if gcd(c, d) == 1:
            checked += 1
            if dedekind_fast(c, d) + dedekind_fast(d, c) != \
                    reciprocity_rhs(c, d):
                failures.append("s(%d, %d) + s(%d, %d)" % (c, d, d, c))
    return checked, failures, None


def suite_reciprocity(limit, processes=1, tolerance=None):
    fast = Check("reciprocity", "fast = sawtooth")
    fast.absorb(_ordered_map(_fast_naive_job, range(1, limit + 1),
                             processes))

    two = Check("reciprocity", "two term reciprocity")
    two.absorb(_ordered_map(_reciprocity_job, range(1, 2 * limit + 1),
                            processes))

    three = Check("reciprocity", "three term reciprocity")
    rng = random.Random(0)
    while three.checked < 50 * limit:
        b, c, d = (rng.randint(1, 1000) for _ in range(3))
        if gcd(b, c) != 1 or gcd(c, d) != 1 or gcd(b, d) != 1:
            continue
        three.equal(rademacher(b, c, d) + rademacher(d, b, c) +
                    rademacher(c, d, b), three_term_rhs(b, c, d),
                    "(%d, %d, %d)" % (b, c, d))

    closed = Check("reciprocity", "s(1, d) and s(2, d)")
    for d in range(1, limit + 1):
        closed.equal(dedekind_fast(1, d), s1(d), "s(1, %d)" % d)
        closed.equal(dedekind_fast(1, -d), s1(-d), "s(1, -%d)" % d)
        if d % 2:
            closed.equal(dedekind_fast(2, d), s2(d), "s(2, %d)" % d)

    power = Check("reciprocity", "s(a, (a^d-1)/(a-1))")
    for a in range(2, 11):
        for d in (3, 5, 7):
            f = (a ** d - 1) // (a - 1)
            power.equal(dedekind_fast(a, f), power_modulus_s(a, d),
                        "a=%d d=%d" % (a, d))
    return [fast.result(), two.result(), three.result(), closed.result(),
            power.result()]


# formulas

def _paths_job(p):
    checked, failures = 0, []
    for d in _odd_orders(p):
        H = subgroup_of_order(p, d)
        for d0 in D0_GRID[1:]:
            if gcd(p, d0) != 1:
                continue
            checked += 1
            try:
                exact = moments.M_d0_exact(p, H, d0).coefficient
            except IdentityMismatchError as e:
                failures.append("p=%d d=%d d0=%d: %s" % (p, d, d0, e))
                continue
            twisted = moments.M_d0_twisted_path(p, H, d0).coefficient
            if twisted != exact:
                failures.append("p=%d d=%d d0=%d: twisted path %s"
                                % (p, d, d0, rational_str(twisted)))
    return checked, failures, None


def suite_formulas(limit, processes=1, tolerance=None):
    table = Check("formulas", "regression table")
    table.equal(moments.M_exact(5, trivial_subgroup(5)).coefficient,
                Fraction(2, 25), "M(5, {1})")
    for p in (7, 13, 31, 43):
        table.equal(moments.M_exact(p, subgroup_of_order(p, 3)).coefficient,
                    Fraction(1, 6) * (1 - Fraction(1, p)), "M(%d, H3)" % p)

    trivial = Check("formulas", "trivial subgroup closed forms")
    for f in range(3, 2 * limit + 1, 2):
        for d0 in (1, 2, 3, 5, 6, 7):
            if gcd(f, d0) != 1:
                continue
            try:
                closed = moments.closed_form(f, moments.FAMILY_TRIVIAL, d0)
            except FamilyNotCoveredError:
                continue
            trivial.equal(closed.coefficient, moments.M_d0_exact(
                f, trivial_subgroup(f), d0).coefficient,
                "M_%d(%d, {1})" % (d0, f))

    paths = Check("formulas", "lifted, prime and twisted paths")
    paths.absorb(_ordered_map(_paths_job, [p for p in primes_up_to(limit)
                                           if p >= 5], processes))

    families = Check("formulas", "closed forms by family")
    for p in primes_up_to(limit):
        if p < 5:
            continue
        for d in _odd_orders(p):
            family = moments.family_of(p, d)
            if family is None:
                continue
            kind, params = family
            H = subgroup_of_order(p, d)
            for d0 in D0_GRID:
                if gcd(p, d0) != 1:
                    continue
                try:
                    closed = moments.closed_form(p, kind, d0, **params)
                except FamilyNotCoveredError:
                    continue
                families.equal(closed.coefficient,
                               moments.M_d0_exact(p, H, d0).coefficient,
                               "%s p=%d d0=%d" % (kind, p, d0))

    restriction = Check("formulas", "restriction to q in H")
    for d in (3, 5, 7):
        f = (1 << d) - 1
        H = mersenne_subgroup(d)
        for d0 in (2, 6, 10, 30):
            lhs, rhs = moments.restriction_identity(f, H, d0, 2)
            restriction.equal(lhs, rhs, "p=%d d0=%d" % (f, d0))

    a_one = Check("formulas", "A(d0, 1)")
    for d0 in range(2, min(limit, 60) + 1):
        if is_squarefree(d0):
            a_one.equal(moments.A_value(d0, 1), moments.A_closed_one(d0),
                        "d0=%d" % d0)
    return [table.result(), trivial.result(), paths.result(),
            families.result(), restriction.result(), a_one.result()]


# mersenne

def suite_mersenne(limit, processes=1, tolerance=None):
    exponents = [d for d in MERSENNE_EXPONENTS if d <= limit]

    lifts = Check("mersenne", "lifted sums S(H_delta, delta f)")
    values = Check("mersenne", "closed mean square values")
    for d in exponents:
        f = (1 << d) - 1
        H = mersenne_subgroup(d)
        for delta in (1, 3, 5, 15):
            lifts.equal(moments.S_H(lift_subgroup(H, delta)),
                        moments.mersenne_lift_sum(d, delta),
                        "d=%d delta=%d" % (d, delta))
        for d0 in MERSENNE_D0:
            if gcd(f, d0) != 1:
                continue
            try:
                closed = moments.closed_form(f, moments.FAMILY_MERSENNE, d0,
                                             d=d)
            except FamilyNotCoveredError:
                continue
            values.equal(closed.coefficient,
                         moments.M_d0_exact(f, H, d0).coefficient,
                         "M_%d(2^%d - 1)" % (d0, d))
        closed = moments.closed_form(f, moments.FAMILY_POWER_FORM, 2, a=2,
                                     d=d)
        values.equal(closed.coefficient,
                     moments.M_d0_exact(f, H, 2).coefficient,
                     "M_2(2^%d - 1)" % d)

    fits = Check("mersenne", "linear fits of N'")
    d_list = range(3, 50, 2)
    for d0 in MERSENNE_D0:
        for fit in fit_mersenne(d_list, d0):
            if fit.a1 is None:
                continue
            fits.expect(fit.consistent and fit.table_match is not False,
                        "d0=%d d=%d mod %d: A1=%s A0=%s" % (
                            d0, fit.residue, fit.period, _show(fit.a1),
                            _show(fit.a0)))

    power = Check("mersenne", "power form lifted sums")
    for a in range(-10, 11):
        if a in (-1, 0, 1):
            continue
        for d in (3, 5, 7):
            f = (a ** d - 1) // (a - 1)
            if f > 10 ** 7:
                continue
            try:
                moments.power_form_lift_sum(a, d, 1)
            except FamilyNotCoveredError:
                continue
            H = power_subgroup(f, a % f)
            for delta in (1, 2):
                power.equal(moments.S_H(lift_subgroup(H, delta)),
                            moments.power_form_lift_sum(a, d, delta),
                            "a=%d d=%d delta=%d" % (a, d, delta))
    return [lifts.result(), values.result(), fits.result(), power.result()]


# order three

def _monitor_job(p):
    H = subgroup_of_order(p, 3)
    return p, moments.asymptotic_deviation(p, H, 6)


def suite_d3(limit, processes=1, tolerance=None):
    radem = Check("d3", "s(a, b, a^2+ab+b^2)")
    b = 1
    while 3 * b * b <= limit:
        a = 1
        while a * a + a * b + b * b <= limit:
            f = a * a + a * b + b * b
            if gcd(a, b) == 1 and f > 2:
                radem.equal(rademacher(a, b, f), Fraction(f - 1, 12 * f),
                            "a=%d b=%d" % (a, b))
            a += 1
        b += 1

    quadratic = Check("d3", "N_d0 on a^2+a+1")
    growth = Check("d3", "N_d0/sqrt(f) on a^2+a+1")
    lifts = Check("d3", "lifted sums on a^2+a+1")
    a = 2
    while a * a + a + 1 <= limit:
        f, H = quadratic_form_subgroup(a, 1)
        for d0 in (1, 2, 3, 6):
            if gcd(f, d0) != 1:
                continue
            try:
                closed = moments.closed_form_n(
                    f, moments.FAMILY_QUADRATIC_FORM, d0, a=a, b=1)
            except FamilyNotCoveredError:
                continue
            value = moments.N_d0_value(f, H, d0).value
            quadratic.equal(closed.value, value, "a=%d d0=%d" % (a, d0))
            lifts.equal(moments.S_H(lift_subgroup(H, d0)),
                        moments.quadratic_form_lift_sum(a, d0),
                        "a=%d delta=%d" % (a, d0))
            if d0 > 1:
                ratio = abs(float(value)) / math.sqrt(f)
                growth.observe(ratio)
                growth.expect(ratio < 2, "a=%d d0=%d ratio %.4f"
                              % (a, d0, ratio))
        a += 1

    cube = Check("d3", "two sizes at order three")
    for A in range(1, 6):
        for B_ in range(1, 6):
            f1 = A * A + A * B_ + B_ * B_
            if gcd(A, B_) != 1 or f1 % 3 == 0:
                continue
            f, ca, cb, h2, value = cube_family(A, B_)
            cube.expect(pow(h2, 3, f) == 1, "h2^3 mod %d" % f)
            cube.equal(dedekind_fast(h2, f), value, "s(h2, %d)" % f)
            if gcd(ca, cb) == 1:
                cube.equal(rademacher(ca, cb, f), Fraction(f - 1, 12 * f),
                           "s(a, b, %d)" % f)

    monitor = Check("d3", "M_6(p, H3)/kappa_6 trend")
    primes = [p for p in primes_up_to(10 * limit)
              if p > 1000 and p % 3 == 1]
    worst = {}
    for p, deviation in _ordered_map(_monitor_job, primes, processes):
        decade = int(math.log10(p))
        worst[decade] = max(worst.get(decade, 0.0), deviation)
        if p > 10 ** 4:
            monitor.observe(deviation)
            monitor.expect(deviation < 0.05, "p=%d deviation %.4f"
                           % (p, deviation))
    decades = sorted(worst)
    for lo, hi in zip(decades, decades[1:]):
        monitor.expect(worst[hi] < worst[lo], "decade 10^%d worse than 10^%d"
                       % (hi, lo))
    return [radem.result(), quadratic.result(), lifts.result(),
            growth.result(), cube.result(), monitor.result()]


# oracle

def _mean_square_job(job):
    p, d, d0, tolerance = job
    H = subgroup_of_order(p, d)
    exact = moments.M_d0_exact(p, H, d0)
    report = oracle.CheckReport.compare(
        "M_%d(%d, H%d)" % (d0, p, d), exact.float_value,
        oracle.mean_square_bruteforce(p, H, d0), tolerance)
    failures = [] if report.passed else ["%s: %r vs %r" % (
        report.name, report.lhs, report.rhs)]
    return 1, failures, report.rel_err


def _euler_product_reports(limit, tolerance):
    for p, d, d0 in _mean_square_grid(min(limit, 500)):
        if d0 == 1:
            continue
        H = subgroup_of_order(p, d)
        exact = moments.euler_product(p, H, d0)
        direct = oracle.euler_product_direct(p, H, d0)
        yield oracle.CheckReport.compare(
            "Pi(%d, H%d, %d)" % (p, d, d0), math.exp(exact.log_pi),
            direct.real, tolerance)


def _class_number_checks(check):
    plain = moments.class_number_bound(7, 3)
    check.expect(plain.bound_log <= 1e-9, "h(7, 3) bound %r" % plain.bound)
    euler = moments.class_number_bound(23, 1, 6, "euler")
    plain = moments.class_number_bound(23, 1)
    check.expect(euler.bound_log < plain.bound_log,
                 "euler %r not below plain %r" % (euler.bound, plain.bound))
    for p, d, h in ((7, 3, 1), (23, 1, 3), (31, 1, 9)):
        exact = moments.class_number_bound(p, d, 1, "exact_product")
        check.expect(abs(math.exp(exact.bound_log) - h) < 1e-6,
                     "h-(%d, %d) = %r, expected %d" % (p, d, exact.bound, h))


def suite_oracle(limit, processes=1, tolerance=1e-8):
    mean = Check("oracle", "mean square vs characters")
    mean.absorb(_ordered_map(_mean_square_job,
                             [job + (tolerance,)
                              for job in _mean_square_grid(limit)],
                             processes))

    euler = Check("oracle", "Euler product vs characters")
    for report in _euler_product_reports(limit, 1e-9):
        euler.record(report)

    charsum = Check("oracle", "character sums")
    for f in range(3, min(limit, 200) + 1):
        for chi in oracle.characters(f):
            if oracle.is_primitive(chi):
                charsum.record(oracle.charsum_identity_check(chi))

    ufa = Check("oracle", "U = f A")
    for d0 in (2, 3, 6):
        for f in range(3, min(limit, 50) + 1):
            if gcd(f, d0) == 1:
                ufa.record(oracle.U_equals_fA_check(d0, f))

    cot = Check("oracle", "A from cotangents")
    for d0 in range(2, 16):
        if not is_squarefree(d0):
            continue
        for r in range(1, d0):
            if gcd(r, d0) == 1:
                cot.equal(oracle.reconstruct_rational(
                    oracle.A_cotangent(d0, r)), moments.A_value(d0, r),
                    "A(%d, %d)" % (d0, r))

    orth = Check("oracle", "orthogonality")
    kernel = Check("oracle", "kernel of the characters")
    for p in primes_up_to(min(limit, 50)):
        if p < 5:
            continue
        for d in _odd_orders(p):
            H = subgroup_of_order(p, d)
            orth.record(oracle.orthogonality_check(p, H))
            kernel.equal(oracle.kernel_of(
                p, oracle.characters_trivial_on(p, H, None)), H,
                "p=%d d=%d" % (p, d))

    series = Check("oracle", "L(1) series vs cotangents")
    for f in (5, 7, 11, 13, 15):
        for chi in oracle.characters(f):
            if chi.is_odd():
                series.record(oracle.CheckReport.compare(
                    "L(1) mod %d %r" % (f, chi.exponents),
                    0, abs(oracle.L1(chi) - oracle.L1_series(chi, 10 ** 5)),
                    1e-6, relative=False))

    twisted = Check("oracle", "twisted moments")
    for p in primes_up_to(min(limit, 60)):
        if p < 7:
            continue
        for q1 in (1, 2, 3, 5):
            for q2 in (1, 2, 3, 5):
                if p in (q1, q2):
                    continue
                brute = oracle.twisted_moment_bruteforce(q1, q2, p)
                twisted.record(oracle.CheckReport.compare(
                    "M_%d,%d(%d)" % (q1, q2, p),
                    moments.twisted_moment_exact(q1, q2, p).coefficient,
                    brute.real, 1e-9, relative=False))

    maxima = Check("oracle", "sums of maxima")
    maxima.equal(oracle.sum_of_maxima(1, 2, 5), 18, "(1, 2, 5)")
    for q1, q2 in MAXIMA_PAIRS:
        total = oracle.sum_of_maxima(q1, q2, MAXIMA_PRIME)
        maxima.record(oracle.CheckReport.compare(
            "max(%d x, %d x)" % (q1, q2), total / MAXIMA_PRIME ** 2,
            oracle.sum_of_maxima_predicted(q1, q2), 0.01))

    classes = Check("oracle", "class number bounds")
    _class_number_checks(classes)
    return [mean.result(), euler.result(), charsum.result(), ufa.result(),
            cot.result(), orth.result(), kernel.result(), series.result(),
            twisted.result(), maxima.result(), classes.result()]


def scaled_limit(name, limit):
    """Default limit of ``name`` scaled by limit over the default of the
    first suite."""
    if limit is None:
        return DEFAULT_LIMITS[name]
    return max(1, int(round(
        DEFAULT_LIMITS[name] * float(limit) / DEFAULT_LIMITS[SUITES[0]])))


def run_suite(name, limit=None, processes=1, tolerance=1e-8):
    """Run the suite ``name``, or every suite for ``all``.

    For ``all`` the ``limit`` applies to the first suite, the defaults of
    the others are scaled by the same factor.

    :raises UsageError: for an unknown suite.
    """
    if name == "all":
        results = []
        for suite in SUITES:
            results.extend(run_suite(suite, scaled_limit(suite, limit),
                                     processes, tolerance))
        return results
    if name not in SUITES:
        raise UsageError("unknown suite %r, use one of %s or all"
                         % (name, ", ".join(SUITES)))
    limit = DEFAULT_LIMITS[name] if limit is None else limit
    log.info("running suite %s up to %d", name, limit)
    try:
        return globals()["suite_" + name](limit, processes, tolerance)
    except IdentityMismatchError:
        raise
    except DedelabError as e:
        log.error("suite %s stopped: %s", name, e)
        return [SuiteResult(name, "suite", 1, 1, [str(e)], None)]
