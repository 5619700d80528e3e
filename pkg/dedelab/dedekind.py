#! /usr/bin/env python
# -*- encoding: utf-8 -*-
# vim:fenc=utf-8:

"""
The dedekind module
-------------------

Exact Dedekind sums :math:`s(c,d)` and Dedekind-Rademacher sums
:math:`s(b,c,d)`.

Two independent evaluators are provided: :func:`dedekind_fast` walks the
Euclidean algorithm through the reciprocity law in O(log d) steps, and
:func:`dedekind_naive` sums the sawtooth products definitionally. The
latter is only an oracle and refuses moduli above 10**7.

Sign conventions follow the cotangent definition:
``s(c, -d) == -s(c, d)`` and ``s(-c, d) == -s(c, d)``.
"""

from math import gcd
from fractions import Fraction

import numpy as np

from dedelab.numt import mod_inverse
from dedelab.errors import NotCoprimeError, ZeroModulusError, \
                          ModulusTooLargeForOracleError

NAIVE_MAX_MODULUS = 10 ** 7

# chunk of the sawtooth sum which keeps int64 partial sums exact
_NAIVE_CHUNK = 8192


def _check_args(c, d):
    if d == 0:
        raise ZeroModulusError("Dedekind sum with modulus zero")
    if gcd(c, d) != 1:
        raise NotCoprimeError("gcd(%d, %d) != 1" % (c, d))


def dedekind12(h, k):
    """Integer kernel: return ``12*k*s(h, k)`` for ``k >= 1``.

    Runs the Euclidean algorithm on (k, h) and clears the denominators of
    the reciprocity law. With quotients a_i, remainders r_i ending in
    r_n = 1 and cofactors t_i (t_0 = 0, t_1 = 1, t_{i+1} = t_{i-1} - a_i t_i,
    so that r_i = t_i h mod k) one gets::

        12 k s(h,k) = h' + t_n + k (a_1 - a_2 + ... - 3 [n odd])

    where h' is h reduced modulo k. Callers must ensure gcd(h, k) = 1.
    """
    if k == 1:
        return 0
    h %= k
    r0, r1 = k, h
    t0, t1 = 0, 1
    alternating = 0
    sign = 1
    n = 0
    while r1:
        a, r2 = divmod(r0, r1)
        alternating += sign * a
        sign = -sign
        n += 1
        r0, r1 = r1, r2
        t0, t1 = t1, t0 - a * t1
    # r0 == 1 and t0 is t_n here
    if n & 1:
        alternating -= 3
    return h + t0 + k * alternating


def dedekind12_many(hs, k):
    """Vectorized :func:`dedekind12` over an array of residues modulo k.

    Every intermediate value stays below k**2 in absolute value, so the
    int64 arithmetic is exact for k up to 3*10**9.
    """
    h = np.asarray(hs, dtype=np.int64) % k
    if k == 1:
        return np.zeros_like(h)
    r0 = np.full_like(h, k)
    r1 = h.copy()
    t0 = np.zeros_like(h)
    t1 = np.ones_like(h)
    alternating = np.zeros_like(h)
    sign = np.ones_like(h)
    steps = np.zeros_like(h)
    active = r1 != 0
    while active.any():
        a = r0[active] // r1[active]
        r2 = r0[active] % r1[active]
        alternating[active] += sign[active] * a
        sign[active] = -sign[active]
        steps[active] += 1
        r0[active], r1[active] = r1[active], r2
        t0[active], t1[active] = t1[active], t0[active] - a * t1[active]
        active = r1 != 0
    alternating -= 3 * (steps & 1)
    return h + t0 + k * alternating


def dedekind_fast(c, d):
    """Exact Dedekind sum s(c, d) in O(log |d|) steps.

    :param `c`: any integer coprime with d.
    :param `d`: a non zero integer.
    :raises ZeroModulusError: if d is zero.
    :raises NotCoprimeError: if gcd(c, d) is not 1.
    """
    _check_args(c, d)
    k = abs(d)
    value = Fraction(dedekind12(c % k, k), 12 * k)
    return value if d > 0 else -value


def dedekind_naive(c, d, max_modulus=NAIVE_MAX_MODULUS):
    """Dedekind sum through the sawtooth definition.

    Each term ((a/d))((ac/d)) equals (2a-d)(2r-d)/(4d^2) with r = ac mod d,
    so the sum is accumulated as an exact integer numerator.

    :raises ModulusTooLargeForOracleError: if |d| exceeds ``max_modulus``.
    """
    _check_args(c, d)
    k = abs(d)
    if k > max_modulus:
        raise ModulusTooLargeForOracleError("|d| = %d is above the oracle "
                                            "guard %d" % (k, max_modulus))
    if k == 1:
        return Fraction(0)
    c %= k
    total = 0
    for start in range(1, k, _NAIVE_CHUNK):
        a = np.arange(start, min(start + _NAIVE_CHUNK, k), dtype=np.int64)
        r = (a * c) % k
        total += int(np.sum((2 * a - k) * (2 * r - k)))
    value = Fraction(total, 4 * k * k)
    return value if d > 0 else -value


def rademacher(b, c, d):
    """Exact Dedekind-Rademacher sum s(b, c, d).

    Uses s(b, c, d) = s(b c^-1, d), which follows from the invariance
    s(b, c, d) = s(ab, ac, d) for a coprime with d.

    :raises NotCoprimeError: if b or c is not coprime with d.
    """
    if d == 0:
        raise ZeroModulusError("Dedekind-Rademacher sum with modulus zero")
    k = abs(d)
    if gcd(b, k) != 1 or gcd(c, k) != 1:
        raise NotCoprimeError("s(%d, %d, %d) needs b and c coprime with d"
                              % (b, c, d))
    if k == 1:
        return Fraction(0)
    return dedekind_fast(b * mod_inverse(c, k) % k, d)


def s1(d):
    """Closed form of s(1, d)."""
    return Fraction(d * d - 3 * abs(d) + 2, 12 * d)


def s2(d):
    """Closed form of s(2, d) for odd d."""
    return Fraction(d * d - 6 * abs(d) + 5, 24 * d)


def reciprocity_rhs(c, d):
    """Right hand side of s(c,d) + s(d,c)."""
    return Fraction(c * c + d * d - 3 * abs(c * d) + 1, 12 * c * d)


def three_term_rhs(b, c, d):
    """Right hand side of s(b,c,d) + s(d,b,c) + s(c,d,b)."""
    return Fraction(b * b + c * c + d * d - 3 * abs(b * c * d), 12 * b * c * d)


def power_modulus_s(a, d):
    """Closed form of s(a, f) with f = (a^d - 1)/(a - 1), d >= 3 odd."""
    f = (a ** d - 1) // (a - 1)
    return Fraction((f - 1) * (f - a * a - 1), 12 * a * f)


def cube_family(A, B):
    """Moduli with two sizes of Dedekind sums at order three.

    Takes f1 = A^2 + AB + B^2 (not divisible by 3, gcd(A, B) = 1) and
    returns ``(f, a, b, h2, s2)`` where f = (f1 + 1)^3 - 1 = a^2 + ab + b^2,
    h2 = f1 + 1 has order three modulo f and s2 is the closed form of
    s(h2, f), which grows like f^(2/3)/12 while s(a, b, f) stays near 1/12.
    """
    f1 = A * A + A * B + B * B
    f = (f1 + 1) ** 3 - 1
    a = A * f1 + A - B
    b = B * f1 + A + 2 * B
    h2 = f1 + 1
    value = Fraction(h2 ** 5 + h2 ** 4 - 6 * h2 ** 3 + 6, 12 * f)
    return f, a, b, h2, value
