#! /usr/bin/env python
# -*- encoding: utf-8 -*-
# vim:fenc=utf-8:

"""
The numt module
---------------

Number-theoretic primitives used by every other module: exact rationals,
deterministic factorization of 64-bit integers, multiplicative orders,
primitive roots and the Chinese remainder theorem.

All the functions here are pure, so they can be freely shared between
threads and worker processes. Factorizations are cached.

.. code-block:: python

    >>> from dedelab.numt import factorize, mult_order
    >>> factorize(105).factors
    ((3, 1), (5, 1), (7, 1))
    >>> mult_order(2, 127)
    7
"""

import logging
from math import gcd, isqrt
from fractions import Fraction
from functools import lru_cache, reduce
from collections import namedtuple

from dedelab.errors import InputTooLargeError, NotCoprimeError, \
                          NotCoprimeModuliError

log = logging.getLogger(__name__)

#: exact rational type, always normalized with positive denominator
Rational = Fraction

MAX_INPUT = 1 << 64
TRIAL_LIMIT = 10 ** 6
SMALL_LIMIT = 1000

# deterministic strong probable prime bases for every n < 2**64
_MR_BASES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)


def rational_str(value):
    """Render a rational as ``num/den``, integers without denominator."""
    value = Fraction(value)
    if value.denominator == 1:
        return "%d" % value.numerator
    return "%d/%d" % (value.numerator, value.denominator)


def parse_rational(text):
    """Inverse of :func:`rational_str`."""
    return Fraction(text)


def _check_domain(n):
    if n >= MAX_INPUT:
        raise InputTooLargeError("%d is outside of the 64-bit domain" % n)


@lru_cache(maxsize=8)
def primes_up_to(limit):
    """Return a tuple with all the primes up to ``limit`` (inclusive)."""
    if limit < 2:
        return ()
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i*i::i] = bytearray((limit - i*i) // i + 1)
    return tuple(i for i in range(2, limit + 1) if sieve[i])


def _miller_rabin_witness(a, u, t, n):
    a %= n
    if a <= 1:
        return False
    x = pow(a, u, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(t - 1):
        x = pow(x, 2, n)
        if x == n - 1:
            return False
    return True


def is_prime(n):
    """Deterministic primality test for n < 2**64.

    :param `n`: the integer to test.
    :raises InputTooLargeError: if n is not below 2**64.
    """
    if n < 2:
        return False
    _check_domain(n)
    for p in primes_up_to(SMALL_LIMIT)[:25]:
        if n % p == 0:
            return n == p
    u, t = n - 1, 0
    while u & 1 == 0:
        u >>= 1
        t += 1
    return not any(_miller_rabin_witness(a, u, t, n) for a in _MR_BASES)


def _brent_rho(n):
    """Find a non trivial divisor of the odd composite n.

    The polynomial constant is walked deterministically so the result is
    reproducible across runs.
    """
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
        log.debug("rho failed on %d with c=%d, retrying", n, c)
        c += 1


def _split(n, out):
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _brent_rho(n)
    _split(d, out)
    _split(n // d, out)


class Factorization(namedtuple("Factorization", "value factors")):
    """Exact factorization of a positive integer.

    ``factors`` is a tuple of ``(prime, exponent)`` pairs with strictly
    increasing primes, so that the product of ``prime**exponent`` equals
    ``value``.
    """
    __slots__ = ()

    @property
    def primes(self):
        return tuple(p for p, _ in self.factors)

    def phi(self):
        return reduce(lambda acc, pe: acc * (pe[0] - 1) * pe[0] ** (pe[1] - 1),
                      self.factors, 1)

    def mobius(self):
        if any(e > 1 for _, e in self.factors):
            return 0
        return -1 if len(self.factors) % 2 else 1

    def carmichael(self):
        """Exponent of the multiplicative group modulo ``value``."""
        lam = 1
        for p, e in self.factors:
            if p == 2 and e >= 3:
                part = 1 << (e - 2)
            else:
                part = (p - 1) * p ** (e - 1)
            lam = lam * part // gcd(lam, part)
        return lam

    def radical(self):
        return reduce(lambda acc, p: acc * p, self.primes, 1)

    def is_squarefree(self):
        return all(e == 1 for _, e in self.factors)

    def divisors(self):
        """All positive divisors, sorted."""
        divs = [1]
        for p, e in self.factors:
            divs = [d * p ** k for d in divs for k in range(e + 1)]
        return sorted(divs)

    def squarefree_divisors(self):
        divs = [1]
        for p in self.primes:
            divs = divs + [d * p for d in divs]
        return sorted(divs)


@lru_cache(maxsize=4096)
def factorize(n):
    """Factorize a positive integer below 2**64.

    Trial division to 10**6 first, then Brent's variant of Pollard rho
    with deterministic Miller-Rabin certification of every prime factor.

    :param `n`: a positive integer.
    :raises InputTooLargeError: if n is not below 2**64.
    """
    if n < 1:
        raise ValueError("cannot factorize %d" % n)
    _check_domain(n)
    found = {}
    small = primes_up_to(SMALL_LIMIT)
    rest = _trial_divide(n, small, found)
    if rest > 1 and not is_prime(rest):
        rest = _trial_divide(rest, primes_up_to(TRIAL_LIMIT)[len(small):],
                             found)
    _split(rest, found)
    return Factorization(n, tuple(sorted(found.items())))


def _trial_divide(n, primes, found):
    for p in primes:
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
    return n


def euler_phi(n):
    return factorize(n).phi()


def mobius(n):
    return factorize(n).mobius()


def carmichael(n):
    return factorize(n).carmichael()


def divisors(n):
    return factorize(n).divisors()


def squarefree_divisors(n):
    return factorize(n).squarefree_divisors()


def is_squarefree(n):
    return factorize(n).is_squarefree()


def mod_inverse(a, f):
    """Return b in [1, f) with a*b = 1 (mod f).

    :raises NotCoprimeError: if gcd(a, f) is not 1.
    """
    if gcd(a, f) != 1:
        raise NotCoprimeError("%d is not invertible modulo %d" % (a, f))
    if f == 1:
        return 0
    return pow(a % f, -1, f)


def mult_order(a, f):
    """Multiplicative order of a modulo f.

    The order is found by dividing down the Carmichael exponent of the
    group along its prime factors.

    :raises NotCoprimeError: if gcd(a, f) is not 1.
    """
    if f < 2:
        raise ValueError("modulus must be at least 2, got %d" % f)
    if gcd(a, f) != 1:
        raise NotCoprimeError("%d is not a unit modulo %d" % (a, f))
    a %= f
    order = carmichael(f)
    for q in factorize(order).primes:
        while order % q == 0 and pow(a, order // q, f) == 1:
            order //= q
    return order


def is_primitive_root(g, n):
    if gcd(g, n) != 1:
        return False
    phi = euler_phi(n)
    return all(pow(g, phi // q, n) != 1 for q in factorize(phi).primes)


@lru_cache(maxsize=1024)
def primitive_root(n):
    """Smallest primitive root modulo n.

    :raises ValueError: if the group of units modulo n is not cyclic.
    """
    if n in (1, 2):
        return 1
    if n == 4:
        return 3
    phi = euler_phi(n)
    if carmichael(n) != phi:
        raise ValueError("(Z/%dZ)* is not cyclic" % n)
    qs = factorize(phi).primes
    for g in range(2, n):
        if gcd(g, n) == 1 and all(pow(g, phi // q, n) != 1 for q in qs):
            return g
    raise ValueError("no primitive root modulo %d" % n)


def crt(residues, moduli):
    """Chinese remainder theorem for pairwise coprime moduli.

    Returns a tuple ``(x, M)`` with x the unique residue in [0, M).

    :raises NotCoprimeModuliError: if two moduli share a factor.
    """
    x, m = 0, 1
    for r, n in zip(residues, moduli):
        if gcd(m, n) != 1:
            raise NotCoprimeModuliError("moduli %d and %d are not coprime"
                                        % (m, n))
        t = (r - x) * mod_inverse(m, n) % n if n > 1 else 0
        x += m * t
        m *= n
        x %= m
    return x, m
