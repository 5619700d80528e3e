#! /usr/bin/env python
# -*- encoding: utf-8 -*-
# vim:fenc=utf-8:

"""
The oracle module
-----------------

Brute force counterparts of the exact formulas: Dirichlet characters,
:math:`L(1,\\chi)` by the cotangent formula, definitional mean squares,
partial character sums and sums of maxima.

Everything here is floating point and meant to be compared with the exact
values from :mod:`dedelab.moments`. Characters are stored as exponent
vectors over the cyclic decomposition of the unit group, and their values
are only turned into complex numbers when a sum is evaluated.

By default sums are evaluated in double precision with numpy. Passing a
``precision`` above 53 bits switches to mpmath.
"""

import math
import logging
import itertools
from math import gcd
from fractions import Fraction
from functools import lru_cache
from collections import namedtuple
from multiprocessing import Pool

import numpy as np
import mpmath

from dedelab.numt import factorize, primitive_root, euler_phi, is_prime
from dedelab.groups import Subgroup, trivial_subgroup, lift_subgroup
from dedelab.errors import MinusOneInSubgroupError, EvenCharacterError, \
                          NotCoprimeModuliError, NotPrimitiveError, \
                          ModulusTooLargeForOracleError, NotPrimeError, \
                          IdentityMismatchError

log = logging.getLogger(__name__)

DEFAULT_PRECISION = 53
ORACLE_MAX_MODULUS = 20000
DIRICHLET_TERMS = 10 ** 6
U_MAX_MODULUS = 10 ** 5
MAXIMA_CHUNK = 1 << 16

ODD = -1
EVEN = 1


class CheckReport(namedtuple("CheckReport",
                             "name lhs rhs abs_err rel_err passed")):
    """Outcome of comparing two independent evaluations."""
    __slots__ = ()

    @classmethod
    def compare(cls, name, lhs, rhs, tolerance, relative=True):
        lhs, rhs = float(lhs), float(rhs)
        abs_err = abs(lhs - rhs)
        scale = max(abs(lhs), abs(rhs))
        rel_err = abs_err / scale if scale else abs_err
        passed = (rel_err if relative else abs_err) <= tolerance
        return cls(name, lhs, rhs, abs_err, rel_err, passed)

    def as_dict(self):
        out = dict(self._asdict())
        out["pass"] = out.pop("passed")
        return out


def _parity(parity):
    if parity in (None, "any"):
        return None
    if parity in (ODD, "odd"):
        return ODD
    if parity in (EVEN, "even"):
        return EVEN
    raise ValueError("unknown parity %r" % (parity,))


class CharacterGroup(object):
    """Cyclic decomposition of the units modulo f and its discrete logs.

    ``components`` is a list of ``(modulus, order, table)``: ``table[x]`` is
    the exponent of x modulo ``modulus`` on the component generator, or -1
    when x is not a unit. Odd prime powers use their smallest primitive
    root, 4 uses -1, and 2^e with e >= 3 is split as <-1> x <5>.
    """

    def __init__(self, f):
        if f < 1:
            raise ValueError("modulus must be positive, got %d" % f)
        self.modulus = f
        self.components = []
        for q, e in factorize(f).factors if f > 1 else ():
            qe = q ** e
            if q != 2:
                self._add_cyclic(qe, primitive_root(qe), euler_phi(qe))
            elif e == 2:
                self._add_cyclic(4, 3, 2)
            elif e >= 3:
                self._add_two_power(qe)
        self.orders = tuple(order for _, order, _ in self.components)
        self.root_order = 1
        for order in self.orders:
            self.root_order = self.root_order * order // gcd(self.root_order,
                                                             order)
        residues = np.arange(f, dtype=np.int64)
        self.logs = np.array([table[residues % mod]
                              for mod, _, table in self.components],
                             dtype=np.int64).reshape(len(self.components), f)
        self.units = np.gcd(residues, f) == 1

    def _add_cyclic(self, modulus, generator, order):
        table = np.full(modulus, -1, dtype=np.int64)
        x = 1
        for k in range(order):
            table[x] = k
            x = x * generator % modulus
        self.components.append((modulus, order, table))

    def _add_two_power(self, modulus):
        sign = np.full(modulus, -1, dtype=np.int64)
        sign[1::4] = 0
        sign[3::4] = 1
        five = np.full(modulus, -1, dtype=np.int64)
        x = 1
        for k in range(modulus // 4):
            five[x] = k
            five[modulus - x] = k
            x = x * 5 % modulus
        self.components.append((modulus, 2, sign))
        self.components.append((modulus, modulus // 4, five))

    @property
    def order(self):
        return int(np.prod(self.orders, dtype=np.int64)) if self.orders else 1

    def root_exponents(self, exponents):
        """Exponents r(a) with chi(a) = exp(2 pi i r(a)/root_order), -1 at
        non units."""
        r = np.zeros(self.modulus, dtype=np.int64)
        for k, (e, order) in enumerate(zip(exponents, self.orders)):
            if e:
                r = (r + e * (self.root_order // order) * self.logs[k]) % \
                    self.root_order
        r[~self.units] = -1
        return r

    def all_exponents(self):
        """Exponent vectors of every character, as a (phi(f), k) array."""
        if not self.orders:
            return np.zeros((1, 0), dtype=np.int64)
        grid = itertools.product(*(range(order) for order in self.orders))
        return np.array(list(grid), dtype=np.int64)

    def log_of(self, a):
        a %= self.modulus
        return self.logs[:, a]


@lru_cache(maxsize=16)
def character_group(f):
    return CharacterGroup(f)


class Character(object):
    """A Dirichlet character modulo f given by its exponent vector."""

    def __init__(self, group, exponents):
        self.group = group
        self.exponents = tuple(int(e) % o for e, o in zip(exponents,
                                                          group.orders))
        self._roots = None

    @property
    def modulus(self):
        return self.group.modulus

    @property
    def roots(self):
        if self._roots is None:
            self._roots = self.group.root_exponents(self.exponents)
        return self._roots

    @property
    def parity(self):
        f = self.modulus
        if f <= 2:
            return EVEN
        return ODD if self.roots[f - 1] * 2 == self.group.root_order else EVEN

    def is_odd(self):
        return self.parity == ODD

    def is_principal(self):
        return not any(self.exponents)

    def conjugate(self):
        return Character(self.group, [-e for e in self.exponents])

    def values(self):
        """Complex values chi(0), ..., chi(f-1)."""
        r = self.roots
        out = np.exp(2j * np.pi * r / self.group.root_order)
        out[r < 0] = 0
        return out

    def value(self, a):
        r = self.roots[a % self.modulus]
        if r < 0:
            return 0j
        return complex(np.exp(2j * np.pi * r / self.group.root_order))

    def is_trivial_on(self, H):
        return all(self.roots[h] == 0 for h in H)

    def __eq__(self, other):
        return isinstance(other, Character) and \
               self.modulus == other.modulus and \
               self.exponents == other.exponents

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.modulus, self.exponents))

    def __repr__(self):
        return "<Character mod %d %r>" % (self.modulus, self.exponents)


def characters(f):
    """All phi(f) characters modulo f."""
    group = character_group(f)
    return [Character(group, e) for e in group.all_exponents()]


def characters_trivial_on(f, H, parity=ODD):
    """Characters modulo f trivial on H, optionally of a given parity.

    :param `parity`: ``-1`` or ``"odd"``, ``1`` or ``"even"``, or None.
    :raises MinusOneInSubgroupError: when odd characters are requested and
        -1 lies in H.
    """
    parity = _parity(parity)
    if H.modulus != f:
        raise ValueError("H must be a subgroup modulo %d" % f)
    if parity == ODD and H.contains_minus_one:
        raise MinusOneInSubgroupError("no odd character is trivial on %r" % H)
    group = character_group(f)
    exps = group.all_exponents()
    weights = np.array([group.root_order // o for o in group.orders],
                       dtype=np.int64)
    probes = list(H.elements)
    if f > 2:
        probes.append(f - 1)
    logs = group.logs[:, probes]
    r = (exps * weights) @ logs % group.root_order
    keep = np.all(r[:, :len(H.elements)] == 0, axis=1)
    if parity is not None and f > 2:
        minus = r[:, -1]
        keep &= (minus != 0) if parity == ODD else (minus == 0)
    return [Character(group, e) for e in exps[keep]]


def kernel_of(f, chars):
    """Subgroup of the units on which every character of ``chars`` is 1."""
    mask = character_group(f).units.copy()
    for chi in chars:
        mask &= chi.roots == 0
    return Subgroup(f, np.nonzero(mask)[0].tolist(), check=False)


@lru_cache(maxsize=8)
def _cot_table(f):
    a = np.arange(1, f, dtype=np.float64)
    table = 1.0 / np.tan(np.pi * a / f)
    table.setflags(write=False)
    return table


@lru_cache(maxsize=4)
def _cot_table_mp(f, precision):
    with mpmath.workprec(precision):
        return tuple(mpmath.cot(mpmath.pi * a / f) for a in range(1, f))


def L1(chi, precision=DEFAULT_PRECISION):
    """L(1, chi) = (pi/2f) sum_a chi(a) cot(pi a/f) for an odd character.

    :raises EvenCharacterError: if chi is even.
    """
    if not chi.is_odd():
        raise EvenCharacterError("%r is even" % chi)
    f = chi.modulus
    if precision <= DEFAULT_PRECISION:
        values = chi.values()[1:]
        return complex(np.pi / (2 * f) * np.dot(values, _cot_table(f)))
    N = chi.group.root_order
    with mpmath.workprec(precision):
        total = mpmath.mpc(0)
        for r, c in zip(chi.roots[1:], _cot_table_mp(f, precision)):
            if r >= 0:
                total += mpmath.expjpi(mpmath.mpf(2 * int(r)) / N) * c
        value = mpmath.pi / (2 * f) * total
        return complex(value)


def L1_series(chi, terms=DIRICHLET_TERMS):
    """L(1, chi) from the truncated Dirichlet series.

    The partial sums are averaged over the last full period, which removes
    the oscillation of order f/terms left by a plain truncation.
    """
    f = chi.modulus
    if chi.is_principal():
        raise ValueError("L(s, chi) has a pole at 1 for principal chi")
    period = f * max(1, terms // f)
    n = np.arange(1, period + 1, dtype=np.int64)
    partial = np.cumsum(chi.values()[n % f] / n)
    value = complex(np.mean(partial[-f:]))
    log.debug("L1 series mod %d: %d terms, tail below %.3g", f, period,
              float(f) * f / period ** 2)
    return value


def L1_imprimitive(chi, d0, precision=DEFAULT_PRECISION):
    """L(1, chi') for chi' induced modulo d0*f:
    L(1, chi) prod_{q | d0} (1 - chi(q)/q).

    :raises NotCoprimeModuliError: if gcd(d0, f) is not 1.
    """
    f = chi.modulus
    if gcd(d0, f) != 1:
        raise NotCoprimeModuliError("gcd(%d, %d) != 1" % (d0, f))
    value = L1(chi, precision)
    for q in factorize(d0).primes if d0 > 1 else ():
        value *= 1 - chi.value(q) / q
    return value


def _l1_squared(args):
    f, exponents, d0, precision = args
    chi = Character(character_group(f), exponents)
    return abs(L1_imprimitive(chi, d0, precision)) ** 2


def mean_square_bruteforce(f, H, d0=1, precision=DEFAULT_PRECISION,
                           processes=None, max_modulus=ORACLE_MAX_MODULUS):
    """Average of |L(1, chi')|^2 over the odd characters trivial on H.

    :param `processes`: number of worker processes, none by default.
    :raises ModulusTooLargeForOracleError: above ``max_modulus``.
    """
    if f > max_modulus:
        raise ModulusTooLargeForOracleError("f = %d is above the oracle "
                                            "guard %d" % (f, max_modulus))
    chars = characters_trivial_on(f, H, ODD)
    jobs = [(f, chi.exponents, d0, precision) for chi in chars]
    if processes and processes > 1 and len(jobs) > 1:
        with Pool(processes) as pool:
            squares = pool.map(_l1_squared, jobs)
    else:
        squares = [_l1_squared(job) for job in jobs]
    return math.fsum(squares) / len(squares)


def conductor(chi):
    """Smallest divisor f' of f such that chi is induced from modulo f'."""
    f = chi.modulus
    roots = chi.roots
    for f1 in factorize(f).divisors() if f > 1 else (1,):
        a = np.arange(1, f + 1, f1, dtype=np.int64) % f
        r = roots[a]
        if np.all(r[r >= 0] == 0):
            return f1
    return f


def is_primitive(chi):
    return conductor(chi) == chi.modulus


def _prod_one_minus_inverse_squares(f):
    out = 1.0
    for q in factorize(f).primes:
        out *= 1.0 - 1.0 / (q * q)
    return out


def charsum_identity_check(chi, tolerance=1e-6):
    """Compare sum_k |S(k, chi)|^2 with f^2/12 prod (1 - 1/q^2) plus, for
    odd chi, (f^2/pi^2)|L(1, chi)|^2.

    The test passes when the difference is below ``tolerance * f**2``.

    :raises NotPrimitiveError: if chi is not primitive.
    """
    if not is_primitive(chi):
        raise NotPrimitiveError("%r is not primitive" % chi)
    f = chi.modulus
    partial = np.cumsum(chi.values())[1:f]
    lhs = float(np.sum(np.abs(partial) ** 2))
    rhs = f * f / 12.0 * _prod_one_minus_inverse_squares(f)
    if chi.is_odd():
        rhs += f * f / math.pi ** 2 * abs(L1(chi)) ** 2
    report = CheckReport.compare("charsum mod %d %r" % (f, chi.exponents),
                                 lhs / (f * f), rhs / (f * f), tolerance,
                                 relative=False)
    return report._replace(lhs=lhs, rhs=rhs, abs_err=abs(lhs - rhs))


def sum_of_maxima(q1, q2, p):
    """sum over x modulo p of max(q1 x, q2 x), representatives in [1, p].

    :raises NotPrimeError: if p is not prime.
    """
    if not is_prime(p):
        raise NotPrimeError("%d is not prime" % p)
    total = 0
    for start in range(1, p + 1, MAXIMA_CHUNK):
        x = np.arange(start, min(start + MAXIMA_CHUNK, p + 1), dtype=np.int64)
        a = (q1 % p) * x % p
        b = (q2 % p) * x % p
        a[a == 0] = p
        b[b == 0] = p
        total += int(np.sum(np.maximum(a, b)))
    return total


def sum_of_maxima_predicted(q1, q2):
    """Limit of the sum of maxima over p^2: 2/3 - gcd^2/(12 q1 q2).

    Only meaningful for q1 != q2; for q1 = q2 the sum is p(p+1)/2 exactly.
    """
    if q1 == q2:
        raise ValueError("the limit only holds for q1 != q2")
    g = gcd(q1, q2)
    return Fraction(2, 3) - Fraction(g * g, 12 * q1 * q2)


def reconstruct_rational(x, max_denominator=10 ** 6, tolerance=1e-9):
    """Closest fraction to a float or mpf with a bounded denominator.

    :raises IdentityMismatchError: if it is farther than ``tolerance``.
    """
    x = mpmath.mpf(x)
    candidate = Fraction(mpmath.nstr(x, 30, strip_zeros=False)) \
        .limit_denominator(max_denominator)
    if abs(float(x - mpmath.mpf(candidate.numerator) /
                 candidate.denominator)) > tolerance:
        raise IdentityMismatchError("%s is not a small rational" %
                                    mpmath.nstr(x, 20))
    return candidate


def A_cotangent(d0, f, precision=96):
    """A(d0, f) from its double cotangent sum, as an mpf."""
    if gcd(d0, f) != 1:
        raise NotCoprimeModuliError("gcd(%d, %d) != 1" % (d0, f))
    units = [a for a in range(1, d0) if gcd(a, d0) == 1]
    with mpmath.workprec(precision):
        total = mpmath.mpf(0)
        for a in units:
            for b in units:
                if a == b:
                    continue
                total += mpmath.cot(mpmath.pi * (b - a) / d0) * (
                    mpmath.cot(mpmath.pi * f * a / d0) -
                    mpmath.cot(mpmath.pi * f * b / d0))
        return +total


def U_value(d0, f):
    """U(d0, f) by direct summation over h = 1 (mod f), h != 1, and n
    coprime with d0."""
    N = d0 * f
    if N > U_MAX_MODULUS:
        raise ModulusTooLargeForOracleError("d0*f = %d is above %d"
                                            % (N, U_MAX_MODULUS))
    n = np.arange(1, N, dtype=np.int64)
    n = n[np.gcd(n, d0) == 1]
    cot_n = 1.0 / np.tan(np.pi * n / N)
    total = 0.0
    for h in lift_subgroup(trivial_subgroup(f), d0):
        if h == 1:
            continue
        cot_nh = 1.0 / np.tan(np.pi * (n * h % N) / N)
        total += math.fsum(1.0 + cot_n * cot_nh)
    return total


def U_equals_fA_check(d0, f, tolerance=1e-6):
    """Compare U(d0, f) with f A(d0, f)."""
    from dedelab.moments import A_value
    u = U_value(d0, f)
    fa = f * A_value(d0, f % d0)
    # A(2, f) vanishes, so small values are compared absolutely
    return CheckReport.compare("U(%d, %d) = f A" % (d0, f), u, fa,
                               tolerance, relative=abs(fa) >= 1)


def epsilon(a, b, p, H=None):
    """1 if a/b lies in H, -1 if -a/b does, 0 otherwise (or if p | ab)."""
    H = trivial_subgroup(p) if H is None else H
    if a % p == 0 or b % p == 0:
        return 0
    c = a * pow(b, -1, p) % p
    if c in H:
        return 1
    if (-c) % p in H:
        return -1
    return 0


def orthogonality_check(p, H=None, tolerance=1e-9):
    """Largest deviation of the normalized sums of chi(a) conj(chi(b)) over
    the odd characters trivial on H from :func:`epsilon`."""
    H = trivial_subgroup(p) if H is None else H
    chars = characters_trivial_on(p, H, ODD)
    V = np.array([chi.values() for chi in chars])
    G = (V.T @ V.conj()) / len(chars)
    expected = np.array([[epsilon(a, b, p, H) for b in range(p)]
                         for a in range(p)], dtype=np.float64)
    err = float(np.max(np.abs(G - expected)))
    return CheckReport("orthogonality mod %d" % p, err, 0.0, err, err,
                       err <= tolerance)


def twisted_moment_bruteforce(q1, q2, p, H=None, precision=DEFAULT_PRECISION):
    """Average of chi(q1) conj(chi(q2)) |L(1, chi)|^2 over the odd
    characters trivial on H, divided by pi^2."""
    H = trivial_subgroup(p) if H is None else H
    chars = characters_trivial_on(p, H, ODD)
    total = 0j
    for chi in chars:
        total += chi.value(q1) * chi.value(q2).conjugate() * \
            abs(L1(chi, precision)) ** 2
    return total / len(chars) / math.pi ** 2


def euler_product_direct(f, H, d0):
    """Product of (1 - chi(q)/q) over q | d0 and the odd characters trivial
    on H, evaluated character by character."""
    value = 1 + 0j
    for chi in characters_trivial_on(f, H, ODD):
        for q in factorize(d0).primes if d0 > 1 else ():
            value *= 1 - chi.value(q) / q
    return value
