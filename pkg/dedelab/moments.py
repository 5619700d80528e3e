#! /usr/bin/env python
# -*- encoding: utf-8 -*-
# vim:fenc=utf-8:

"""
The moments module
------------------

Exact mean square values of :math:`L(1,\\chi)` over the odd characters
trivial on a subgroup H, the rational numbers N attached to them, Euler
factor products and upper bounds on relative class numbers.

Every mean square value is of the form ``coefficient * pi**2`` with a
rational coefficient, and this module only ever manipulates the
coefficient. Floats are produced for presentation.

.. code-block:: python

    >>> from dedelab.groups import subgroup_of_order
    >>> from dedelab.moments import M_exact, M_d0_exact
    >>> H = subgroup_of_order(7, 3)
    >>> M_exact(7, H).coefficient
    Fraction(1, 7)
    >>> M_d0_exact(7, H, 3).coefficient
    Fraction(16, 63)
"""

import math
import logging
from math import gcd, isqrt
from fractions import Fraction
from collections import namedtuple

import mpmath

from dedelab.numt import factorize, mobius, euler_phi, is_prime, \
                         mult_order, rational_str, MAX_INPUT
from dedelab.dedekind import dedekind12, rademacher
from dedelab.groups import Subgroup, lift_subgroup, trivial_subgroup, \
                           subgroup_of_order, power_subgroup, \
                           quadratic_form_subgroup
from dedelab.errors import MinusOneInSubgroupError, NotSquareFreeError, \
                          NotCoprimeModuliError, NotCoprimeError, \
                          NotPrimeError, OrderDoesNotDivideError, \
                          InputTooLargeError, FamilyNotCoveredError, \
                          DegreeParityError, IdentityMismatchError

log = logging.getLogger(__name__)

PI2 = math.pi ** 2

PROVENANCE_GENERAL = "general"
PROVENANCE_PRIME = "prime_path"
PROVENANCE_CLOSED = "closed_form"
PROVENANCE_TWISTED = "twisted"

KIND_N = "N"
KIND_N_D0 = "N_d0"
KIND_N_PRIME_D0 = "N_prime_d0"

FAMILY_TRIVIAL = "trivial"
FAMILY_MERSENNE = "mersenne"
FAMILY_QUADRATIC_FORM = "quadratic_form"
FAMILY_POWER_FORM = "power_form"

FAMILIES = (FAMILY_TRIVIAL, FAMILY_MERSENNE, FAMILY_QUADRATIC_FORM,
            FAMILY_POWER_FORM)

BOUND_MODES = ("plain", "euler", "exact_product")

# N' for 2^d - 1 and H = <2>, as (A1, A0) with N' = A1*d + A0. The key is
# d modulo the order of 2 modulo d0.
MERSENNE_TABLE = {
    1: (2, {1: (Fraction(-2), Fraction(1))}),
    3: (2, {1: (Fraction(-1), Fraction(0))}),
    5: (4, {1: (Fraction(-4, 3), Fraction(1, 3)),
            3: (Fraction(-4, 3), Fraction(0))}),
    15: (4, {1: (Fraction(-47, 48), Fraction(-1, 48)),
             3: (Fraction(-17, 48), Fraction(3, 48))}),
    105: (12, {1: (Fraction(-437, 576), Fraction(-139, 576)),
               5: (Fraction(-535, 576), Fraction(644, 576)),
               7: (Fraction(-97, 576), Fraction(324, 576)),
               11: (Fraction(-195, 576), Fraction(-13, 576))}),
}


class MomentResult(namedtuple("MomentResult",
                              "coefficient float_value provenance n_value")):
    """A mean square value ``coefficient * pi**2``."""
    __slots__ = ()

    @classmethod
    def from_coefficient(cls, coefficient, provenance, n_value=None):
        coefficient = Fraction(coefficient)
        return cls(coefficient, float(coefficient) * PI2, provenance, n_value)

    def as_dict(self):
        out = {
            "coefficient": rational_str(self.coefficient),
            "pi_sq_multiple": float(self.coefficient),
            "value": self.float_value,
            "provenance": self.provenance,
        }
        if self.n_value is not None:
            out["n_value"] = self.n_value.as_dict()
        return out


class NValue(namedtuple("NValue", "value kind d0")):
    __slots__ = ()

    def as_dict(self):
        return {"value": rational_str(self.value), "kind": self.kind,
                "d0": self.d0}


class EulerProduct(object):
    """Product of the Euler factors (1 - chi(q)/q) over q | d0 and over the
    odd characters trivial on H.

    ``factors`` holds one ``(q, g, base, exponent)`` tuple per prime q,
    meaning that the q part of the product is ``base ** exponent``. The
    exponents grow like the number of characters, so the exact value is only
    built on demand while :attr:`log_pi` is always cheap.
    """

    #: largest total exponent for which ``as_dict`` renders the exact value
    RENDER_LIMIT = 4096

    def __init__(self, factors, m):
        self.factors = tuple(factors)
        self.m = m
        self._pi = None

    @property
    def pi_value(self):
        if self._pi is None:
            value = Fraction(1)
            for _, _, base, exponent in self.factors:
                value *= base ** exponent
            self._pi = value
        return self._pi

    @property
    def log_pi(self):
        return sum(exponent * math.log1p(float(base - 1))
                   for _, _, base, exponent in self.factors)

    @property
    def d_value(self):
        """D = Pi^(4/m) as a float."""
        return math.exp(4.0 * self.log_pi / self.m)

    def as_dict(self):
        out = {
            "factors": [{"q": q, "g": g, "base": rational_str(base),
                         "exponent": e} for q, g, base, e in self.factors],
            "m": self.m,
            "log_pi": self.log_pi,
            "d_value": self.d_value,
        }
        if sum(e for _, _, _, e in self.factors) <= self.RENDER_LIMIT:
            out["pi_value"] = rational_str(self.pi_value)
        return out


class ClassNumberBound(namedtuple("ClassNumberBound",
                                  "wK m bound_log bound mode d0")):
    __slots__ = ()

    def as_dict(self):
        return dict(self._asdict())


def _check_moment_args(f, H, d0=1):
    if not isinstance(H, Subgroup) or H.modulus != f:
        raise ValueError("H must be a subgroup modulo %d" % f)
    if f <= 2:
        raise ValueError("modulus must be above 2, got %d" % f)
    if H.contains_minus_one:
        raise MinusOneInSubgroupError("-1 lies in %r" % H)
    if d0 < 1 or not factorize(d0).is_squarefree():
        raise NotSquareFreeError("d0 = %d is not square-free" % d0)
    if gcd(d0, f) != 1:
        raise NotCoprimeModuliError("gcd(d0, f) = gcd(%d, %d) != 1" % (d0, f))
    if d0 * f >= MAX_INPUT:
        raise InputTooLargeError("d0*f = %d is outside of the 64-bit domain"
                                 % (d0 * f))


def _primes(n):
    return factorize(n).primes


def _prod(values):
    out = Fraction(1)
    for v in values:
        out *= v
    return out


def kappa(d0):
    """Coefficient of pi^2 in (pi^2/6) prod_{q | d0} (1 - 1/q^2)."""
    return Fraction(1, 6) * _prod(1 - Fraction(1, q * q) for q in _primes(d0))


def B(d0):
    """prod_{q | d0} (q^2 - 1)."""
    return _prod(q * q - 1 for q in _primes(d0))


def _q_plus_one(d0):
    return _prod(q + 1 for q in _primes(d0))


def S_H(H, f=None):
    """Exact sum of s(h, f) over h in H."""
    f = H.modulus if f is None else f
    if f == 1:
        return Fraction(0)
    for h in H:
        if gcd(h, f) != 1:
            raise NotCoprimeError("gcd(%d, %d) != 1" % (h, f))
    return Fraction(sum(dedekind12(h % f, f) for h in H), 12 * f)


def S_prime(H, f=None):
    """Same as :func:`S_H` without the h = 1 term."""
    f = H.modulus if f is None else f
    return S_H(H, f) - (S_H(trivial_subgroup(f), f) if f > 1 else 0)


def _S_lift_prime(H_delta, base_modulus):
    """Sum over the lifted elements which do not reduce to 1."""
    f = H_delta.modulus
    total = sum(dedekind12(h, f) for h in H_delta
                if h % base_modulus != 1 % base_modulus)
    return Fraction(total, 12 * f)


def _M_general(f, H):
    """(2/f) sum_{delta | f} mu(delta)/delta sum_h s(h, f/delta)."""
    total = Fraction(0)
    for delta in factorize(f).squarefree_divisors():
        k = f // delta
        if k == 1:
            continue
        kernel = sum(dedekind12(h % k, k) for h in H)
        total += Fraction(mobius(delta) * kernel, 12 * k * delta)
    return 2 * total / f


def M_exact(f, H):
    """Mean square value M(f, H) over the odd characters trivial on H.

    :raises MinusOneInSubgroupError: if -1 is in H.
    """
    _check_moment_args(f, H)
    return MomentResult.from_coefficient(_M_general(f, H), PROVENANCE_GENERAL,
                                         N_value(f, H) if is_prime(f)
                                         else None)


def _lift_sum(H, d0, weight):
    """sum_{delta | d0} delta mu(delta) / phi(delta) * weight(H_delta)."""
    total = Fraction(0)
    for delta in factorize(d0).squarefree_divisors():
        H_delta = lift_subgroup(H, delta)
        total += Fraction(delta * mobius(delta), euler_phi(delta)) * \
            weight(H_delta)
    return total


def M_d0_prime_path(p, H, d0):
    """M_{d0}(p, H) through the lifted sums S(H_delta, delta p), p prime.

    :raises NotPrimeError: if p is not prime.
    """
    _check_moment_args(p, H, d0)
    if not is_prime(p):
        raise NotPrimeError("%d is not prime" % p)
    lifted = _lift_sum(H, d0, S_H)
    coefficient = Fraction(2 * mobius(d0) * euler_phi(d0), d0 * d0 * p) * \
        lifted
    return MomentResult.from_coefficient(coefficient, PROVENANCE_PRIME)


def M_d0_twisted_path(p, H, d0):
    """M_{d0}(p, H) expanded over the twisted moments:
    sum_{delta1, delta2 | d0} mu(delta1) mu(delta2)/(delta1 delta2)
    M_{delta1, delta2}(p, H)."""
    _check_moment_args(p, H, d0)
    divs = factorize(d0).squarefree_divisors()
    total = Fraction(0)
    for d1 in divs:
        for d2 in divs:
            total += Fraction(mobius(d1) * mobius(d2), d1 * d2) * \
                twisted_moment_exact(d1, d2, p, H).coefficient
    return MomentResult.from_coefficient(total, PROVENANCE_TWISTED)


def M_d0_exact(f, H, d0):
    """Mean square value of L(1, chi') where chi' is chi induced to d0*f.

    Computed as M(d0 f, H_{d0}). When f is prime the lifted sum formula is
    evaluated as well and both must agree.

    :raises IdentityMismatchError: if the two evaluations differ.
    """
    _check_moment_args(f, H, d0)
    if d0 == 1:
        return M_exact(f, H)
    lifted = lift_subgroup(H, d0)
    coefficient = _M_general(d0 * f, lifted)
    n_value = None
    if is_prime(f):
        other = M_d0_prime_path(f, H, d0).coefficient
        if other != coefficient:
            log.error("M_%d(%d, %r): lift path %s, prime path %s", d0, f, H,
                      coefficient, other)
            raise IdentityMismatchError("M_%d(%d) disagrees between the two "
                                        "evaluations" % (d0, f))
        n_value = N_d0_value(f, H, d0)
    return MomentResult.from_coefficient(coefficient, PROVENANCE_GENERAL,
                                         n_value)


def N_value(f, H):
    """N(f, H) = -3 + 2/f + 12 S'(H, f)."""
    _check_moment_args(f, H)
    return NValue(-3 + Fraction(2, f) + 12 * S_prime(H, f), KIND_N, 1)


def _N_d0_definition(f, H, d0):
    """-f + 12 mu(d0)/B sum_{delta | d0} delta mu(delta) sum_{h in H_d0}
    s(h, delta f), with h reduced modulo delta f."""
    lifted = lift_subgroup(H, d0)
    total = Fraction(0)
    for delta in factorize(d0).squarefree_divisors():
        k = delta * f
        kernel = sum(dedekind12(h % k, k) for h in lifted)
        total += Fraction(delta * mobius(delta) * kernel, 12 * k)
    return -f + Fraction(12 * mobius(d0), B(d0)) * total


def _N_d0_lifted(f, H, d0):
    return -f + Fraction(12 * mobius(d0), _q_plus_one(d0)) * \
        _lift_sum(H, d0, S_H)


def _N_d0_trivial(f, d0):
    if d0 == 1:
        return -3 + Fraction(2, f)
    phi = euler_phi(d0)
    return Fraction(3, B(d0)) * (A_value(d0, f % d0) - phi * phi)


def _N_d0_split(f, H, d0):
    """N_{d0}(f, {1}) plus the part coming from the elements above h != 1."""
    extra = _lift_sum(H, d0, lambda H_delta: _S_lift_prime(H_delta, f))
    return _N_d0_trivial(f, d0) + \
        Fraction(12 * mobius(d0), _q_plus_one(d0)) * extra


def N_d0_value(f, H, d0):
    """N_{d0}(f, H), checked against its two alternative expressions.

    :raises IdentityMismatchError: if the three expressions disagree.
    """
    _check_moment_args(f, H, d0)
    values = (_N_d0_definition(f, H, d0), _N_d0_lifted(f, H, d0),
              _N_d0_split(f, H, d0))
    if values[0] != values[1] or values[0] != values[2]:
        log.error("N_%d(%d, %r) expressions disagree: %s", d0, f, H,
                  ", ".join(rational_str(v) for v in values))
        raise IdentityMismatchError("N_%d(%d) expressions disagree"
                                    % (d0, f))
    return NValue(values[0], KIND_N_D0, d0)


def N_prime_d0_value(f, H, d0):
    """N'_{d0}(f, H) = (N_{d0}(f, H) - 2f)/3."""
    n = N_d0_value(f, H, d0).value
    return NValue((n - 2 * f) / 3, KIND_N_PRIME_D0, d0)


def A_closed_one(d0):
    """A(d0, 1) = phi(d0)^2 - (d0^2/3) prod_{q | d0} (1 - 1/q^2)."""
    phi = euler_phi(d0)
    return phi * phi - Fraction(d0 * d0, 3) * \
        _prod(1 - Fraction(1, q * q) for q in _primes(d0))


def A_value(d0, f_residue):
    """A(d0, f), which only depends on f modulo d0.

    Recovered from N_{d0}(f', {1}) for the smallest f' > 2 in the residue
    class of ``f_residue``.

    :raises NotCoprimeError: if the residue is not coprime with d0.
    """
    if d0 < 2 or not factorize(d0).is_squarefree():
        raise NotSquareFreeError("A(d0, f) needs d0 > 1 square-free, got %d"
                                 % d0)
    if gcd(f_residue, d0) != 1:
        raise NotCoprimeError("gcd(%d, %d) != 1" % (f_residue, d0))
    f = f_residue % d0
    while f <= 2:
        f += d0
    phi = euler_phi(d0)
    n = _N_d0_definition(f, trivial_subgroup(f), d0)
    return phi * phi + B(d0) * n / 3


def _epsilon_mod(n, d0):
    r = n % d0
    if r == 1 % d0:
        return 1
    if r == d0 - 1:
        return -1
    return 0


def mersenne_n_prime(d, d0):
    """Tabulated N'_{d0}(2^d - 1, <2>).

    :raises FamilyNotCoveredError: for untabulated (d, d0).
    """
    if d < 3 or d % 2 == 0:
        raise FamilyNotCoveredError("Mersenne tables need odd d >= 3, got %d"
                                    % d)
    if d0 not in MERSENNE_TABLE:
        raise FamilyNotCoveredError("no Mersenne table for d0 = %d" % d0)
    period, table = MERSENNE_TABLE[d0]
    try:
        a1, a0 = table[d % period]
    except KeyError:
        raise FamilyNotCoveredError("no Mersenne entry for d0 = %d and d = %d"
                                    % (d0, d))
    return NValue(a1 * d + a0, KIND_N_PRIME_D0, d0)


def mersenne_lift_sum(d, delta):
    """Closed form of S(H_delta, delta f) for f = 2^d - 1 and H = <2>."""
    f = (1 << d) - 1
    eps = (-1) ** ((d - 1) // 2)
    if delta == 1:
        return Fraction(f - 2 * d + 1, 4)
    if delta == 3:
        return Fraction(5 * f - 6 * d + 1, 6)
    if delta == 5:
        return Fraction(7 * f - 10 * d + 2 + eps, 5)
    if delta == 15:
        return Fraction(14 * f - (12 + 3 * eps) * d + 1, 3)
    raise FamilyNotCoveredError("no Mersenne lift sum for delta = %d" % delta)


def _check_power_form(a, d):
    if a in (-1, 0, 1):
        raise FamilyNotCoveredError("power form needs a not in {-1, 0, 1}")
    if d < 3 or d % 2 == 0:
        raise FamilyNotCoveredError("power form needs odd d >= 3, got %d" % d)
    f = (a ** d - 1) // (a - 1)
    if f <= 2 or mult_order(a % f, f) != d:
        raise FamilyNotCoveredError("<%d> does not have order %d modulo %d"
                                    % (a, d, f))
    return f


def power_form_lift_sum(a, d, delta):
    """Closed forms of S(H, f) and S(H_2, 2f) for f = (a^d-1)/(a-1) and
    H = <a>."""
    f = _check_power_form(a, d)
    ratio = Fraction(a + 1, a - 1)
    if delta == 1:
        return ratio * (f - (d - 1) * a - 1) / 12
    if delta == 2:
        if a % 2:
            return ratio * (4 * f - (d - 1) * a - 3 * d - 1) / 24
        return Fraction(2 * a - 1, a - 1) * (f - (d - 1) * a - 1) / 12
    raise FamilyNotCoveredError("no power form lift sum for delta = %d"
                                % delta)


#: a mod 6 -> (c', c'', c''') as (slope, intercept) in a; c'' and c''' only
#: exist when gcd(a^2 + a + 1, 6) = 1
QUADRATIC_LIFT_TABLE = {
    0: ((-3, -2), (-8, -5), (-19, -10)),
    1: ((3, 1), None, None),
    2: ((-3, -2), (8, 3), (1, -18)),
    3: ((3, 1), (-8, -5), (-1, -19)),
    4: ((-3, -2), None, None),
    5: ((3, 1), (8, 3), (19, 9)),
}


def quadratic_form_lift_sum(a, delta):
    """Closed form of S(H_delta, delta f) for f = a^2 + a + 1 and
    H = {1, a, a^2}.

    :raises FamilyNotCoveredError: for f <= 3, for delta not in
      {1, 2, 3, 6}, or for delta in {3, 6} when gcd(f, 6) != 1.
    """
    f = a * a + a + 1
    if f <= 3:
        raise FamilyNotCoveredError("quadratic form needs f > 3, a = %d" % a)
    if delta == 1:
        return Fraction(f - 1, 12)
    scale = {2: (2, 12), 3: (5, 18), 6: (10, 18)}
    if delta not in scale:
        raise FamilyNotCoveredError("no quadratic form lift sum for "
                                    "delta = %d" % delta)
    c = QUADRATIC_LIFT_TABLE[a % 6][(2, 3, 6).index(delta)]
    if c is None:
        raise FamilyNotCoveredError("S(H_%d, %df) needs gcd(f, 6) = 1, "
                                    "a = %d" % (delta, delta, a))
    k, den = scale[delta]
    return Fraction(k * f + c[0] * a + c[1], den)


def _quadratic_n(a, b, f, d0):
    if d0 == 1:
        return Fraction(-1)
    if b != 1:
        raise FamilyNotCoveredError("N_%d is only tabulated for b = 1" % d0)
    if d0 == 2:
        return Fraction((-1) ** (a - 1) * (2 * a + 1))
    if gcd(f, 6) != 1:
        raise FamilyNotCoveredError("N_%d needs gcd(f, 6) = 1, a = %d" % (d0,
                                    a))
    if d0 == 3:
        return Fraction(-2 * a - 1 if a % 3 == 0 else 2 * a + 1)
    if d0 == 6:
        r = a % 6
        if r == 0:
            return Fraction(-2 * a - 1)
        if r in (2, 3):
            return Fraction(-3)
        return Fraction(2 * a + 1)
    raise FamilyNotCoveredError("quadratic form family has no N_%d" % d0)


def _trivial_n(f, d0):
    if d0 == 1:
        return -3 + Fraction(2, f)
    eps = _epsilon_mod(f, d0)
    if eps == 0:
        raise FamilyNotCoveredError("N_%d(%d, {1}) needs f = +-1 mod %d"
                                    % (d0, f, d0))
    phi = euler_phi(d0)
    return Fraction(3, B(d0)) * (eps * A_closed_one(d0) - phi * phi)


def closed_form_n(f, kind, d0, **params):
    """Closed form of N_{d0}(f, H) for a covered family, composite f allowed.

    Families and their parameters:

    * ``trivial``: H = {1}, d0 = 1 or f = +-1 modulo d0
    * ``mersenne``: ``d``, with f = 2^d - 1 and H = <2>
    * ``power_form``: ``a`` and ``d``, with f = (a^d-1)/(a-1), H = <a>,
      d0 in {1, 2}
    * ``quadratic_form``: ``a`` and ``b``, with f = a^2+ab+b^2 and
      H = {1, a/b, b/a}, d0 = 1, or b = 1 and d0 in {2, 3, 6}

    :raises FamilyNotCoveredError: for anything else.
    """
    if kind == FAMILY_TRIVIAL:
        value = _trivial_n(f, d0)
    elif kind == FAMILY_MERSENNE:
        d = params["d"]
        if f != (1 << d) - 1:
            raise FamilyNotCoveredError("%d is not 2^%d - 1" % (f, d))
        value = 3 * mersenne_n_prime(d, d0).value + 2 * f
    elif kind == FAMILY_POWER_FORM:
        a, d = params["a"], params["d"]
        if f != _check_power_form(a, d):
            raise FamilyNotCoveredError("%d is not (%d^%d-1)/(%d-1)"
                                        % (f, a, d, a))
        ratio = Fraction(a + 1, a - 1)
        if d0 == 1:
            value = -f + ratio * (f - (d - 1) * a - 1)
        elif d0 == 2:
            value = -f + ratio * (f - d) if a % 2 else \
                Fraction(-(d - 1) * a - 1)
        else:
            raise FamilyNotCoveredError("power form family has no N_%d" % d0)
    elif kind == FAMILY_QUADRATIC_FORM:
        a, b = params["a"], params.get("b", 1)
        if f != a * a + a * b + b * b:
            raise FamilyNotCoveredError("%d is not %d^2+%d*%d+%d^2"
                                        % (f, a, a, b, b))
        value = _quadratic_n(a, b, f, d0)
    else:
        raise FamilyNotCoveredError("unknown family %r" % kind)
    return NValue(Fraction(value), KIND_N_D0, d0)


def _trivial_closed_m(f, d0):
    qs = _primes(f)
    sq = _prod(1 - Fraction(1, q * q) for q in qs)
    lin = _prod(1 - Fraction(1, q) for q in qs)
    if d0 == 1:
        return Fraction(1, 6) * (sq - Fraction(3, f) * lin)
    if d0 == 2:
        if f % 2 == 0:
            raise FamilyNotCoveredError("M_2(f, {1}) needs f odd")
        return Fraction(1, 8) * (sq - Fraction(1, f) * lin)
    eps_q = [_epsilon_mod(q, d0) for q in qs]
    if 0 in eps_q:
        raise FamilyNotCoveredError("every prime factor of %d must be +-1 "
                                    "modulo %d" % (f, d0))
    c = 3 * _prod(Fraction(q - 1, q + 1) for q in _primes(d0))
    eps_f = _epsilon_mod(f, d0)
    twisted = _prod(1 - Fraction(e, q) for q, e in zip(qs, eps_q))
    return kappa(d0) * (sq - c / f * lin + eps_f * (c - 1) / f * twisted)


def closed_form(f, kind, d0, **params):
    """Mean square value from a closed formula, no Dedekind sum involved.

    H = {1} with d0 = 1, with d0 = 2 for odd f, or with every prime factor
    of f congruent to +-1 modulo d0 is served for any modulus. The other
    families need a prime modulus p and evaluate
    kappa_{d0} (1 + N_{d0}/p) with :func:`closed_form_n`.

    :raises FamilyNotCoveredError: if no closed form applies.
    """
    if f <= 2:
        raise FamilyNotCoveredError("closed forms need f > 2")
    if gcd(f, d0) != 1:
        raise NotCoprimeModuliError("gcd(%d, %d) != 1" % (f, d0))
    if kind == FAMILY_TRIVIAL and (d0 <= 2 or
                                   _epsilon_mod(f, d0) != 0 and
                                   all(_epsilon_mod(q, d0)
                                       for q in _primes(f))):
        return MomentResult.from_coefficient(_trivial_closed_m(f, d0),
                                             PROVENANCE_CLOSED)
    if not is_prime(f):
        raise FamilyNotCoveredError("no closed mean square value for the "
                                    "%s family at composite f = %d"
                                    % (kind, f))
    n = closed_form_n(f, kind, d0, **params)
    return MomentResult.from_coefficient(kappa(d0) * (1 + n.value / f),
                                         PROVENANCE_CLOSED, n)


def family_subgroup(kind, **params):
    """Modulus and subgroup of a closed form family, as ``(f, H)``."""
    if kind == FAMILY_TRIVIAL:
        f = params["f"]
        return f, trivial_subgroup(f)
    if kind == FAMILY_MERSENNE:
        f = (1 << params["d"]) - 1
        return f, power_subgroup(f, 2)
    if kind == FAMILY_POWER_FORM:
        f = _check_power_form(params["a"], params["d"])
        return f, power_subgroup(f, params["a"] % f)
    if kind == FAMILY_QUADRATIC_FORM:
        return quadratic_form_subgroup(params["a"], params.get("b", 1))
    raise FamilyNotCoveredError("unknown family %r" % kind)


def family_of(p, d):
    """Closed form family of the subgroup of order d modulo the prime p.

    Returns ``(kind, params)`` with the params expected by
    :func:`closed_form`, or None. Mersenne primes win over the power form
    with a = 2, and b = 1 is preferred for the quadratic form.
    """
    if d == 1:
        return FAMILY_TRIVIAL, {}
    if d % 2 == 0:
        return None
    if p == (1 << d) - 1:
        return FAMILY_MERSENNE, {"d": d}
    if d == 3:
        for b in range(1, isqrt(p // 3) + 1):
            disc = 4 * p - 3 * b * b
            r = isqrt(disc)
            if r * r == disc and (r - b) % 2 == 0 and r > b and \
                    gcd((r - b) // 2, b) == 1:
                return FAMILY_QUADRATIC_FORM, {"a": (r - b) // 2, "b": b}
    b = 2
    while (b ** d + 1) // (b + 1) <= p:
        for a in (b, -b):
            if (a ** d - 1) // (a - 1) == p:
                try:
                    _check_power_form(a, d)
                except FamilyNotCoveredError:
                    continue
                return FAMILY_POWER_FORM, {"a": a, "d": d}
        b += 1
    return None


def twisted_moment_exact(q1, q2, p, H=None):
    """(2/p) sum_{h in H} s(q1, q2 h, p), H = {1} by default.

    :raises NotPrimeError: if p is not prime.
    :raises NotCoprimeError: if p divides q1 q2.
    """
    if not is_prime(p):
        raise NotPrimeError("%d is not prime" % p)
    if gcd(q1 * q2, p) != 1:
        raise NotCoprimeError("%d divides %d*%d" % (p, q1, q2))
    H = trivial_subgroup(p) if H is None else H
    total = sum(rademacher(q1, q2 * h, p) for h in H)
    return MomentResult.from_coefficient(Fraction(2, p) * total,
                                         PROVENANCE_TWISTED)


def twisted_moment_limit(q1, q2):
    """Limit of the twisted moment coefficient, gcd^2/(6 q1 q2)."""
    g = gcd(q1, q2)
    return Fraction(g * g, 6 * q1 * q2)


def euler_product(f, H, d0):
    """Product of (1 - chi(q)/q) over q | d0 and the odd characters trivial
    on H.

    If g is the order of q modulo H, the q part is
    (1 + q^(-g/2))^(phi(f)/(dg)) when g is even and -q^(g/2) lies in H, and
    (1 - q^(-g))^(phi(f)/(2dg)) otherwise.
    """
    _check_moment_args(f, H, d0)
    phi, d = euler_phi(f), H.order
    factors = []
    for q in _primes(d0):
        g = H.quotient_order(q)
        if g % 2 == 0 and (-pow(q, g // 2, f)) in H:
            base = 1 + Fraction(1, q ** (g // 2))
            exponent = phi // (d * g)
        else:
            base = 1 - Fraction(1, q ** g)
            exponent = phi // (2 * d * g)
        factors.append((q, g, base, exponent))
    return EulerProduct(factors, phi // d)


def pi_lower_bound(p, d0):
    """exp((log d0 / 2) F(p + 1)) with F(x) = (x - 2) log(1 - 1/x) / log x."""
    if p % d0 == 0:
        raise NotCoprimeModuliError("%d divides d0 = %d" % (p, d0))
    x = p + 1.0
    F = (x - 2) * math.log1p(-1.0 / x) / math.log(x)
    return math.exp(math.log(d0) / 2 * F)


def _render_exp(bound_log):
    return mpmath.nstr(mpmath.exp(mpmath.mpf(bound_log)), 15)


def class_number_bound(p, d, d0=1, mode="plain"):
    """Upper bound on the relative class number of the imaginary subfield
    of degree m = (p-1)/d of Q(zeta_p).

    ``plain`` uses M(p, H), ``euler`` uses M_{d0}(p, H) and the Euler
    product and ``exact_product`` multiplies the actual values of
    L(1, chi'), giving h^- itself up to rounding. The bound is computed in
    log space.

    :raises DegreeParityError: if d is even.
    """
    if not is_prime(p):
        raise NotPrimeError("%d is not prime" % p)
    if d % 2 == 0:
        raise DegreeParityError("d = %d must be odd" % d)
    if (p - 1) % d:
        raise OrderDoesNotDivideError("%d does not divide %d" % (d, p - 1))
    if mode not in BOUND_MODES:
        raise ValueError("unknown bound mode %r" % mode)
    H = subgroup_of_order(p, d)
    m = (p - 1) // d
    wK = 2 * p if d == 1 else 2
    if mode == "plain":
        d0 = 1
        coefficient = M_exact(p, H).coefficient
        bound_log = math.log(wK) + m / 4.0 * (
            math.log(p) + math.log(float(coefficient)) - math.log(4))
    elif mode == "euler":
        coefficient = M_d0_exact(p, H, d0).coefficient
        bound_log = math.log(wK) + m / 4.0 * (
            math.log(p) + math.log(float(coefficient)) - math.log(4)) - \
            euler_product(p, H, d0).log_pi
    else:
        from dedelab.oracle import characters_trivial_on, L1_imprimitive
        log_l = sum(math.log(abs(L1_imprimitive(chi, d0)))
                    for chi in characters_trivial_on(p, H, -1))
        bound_log = math.log(wK) - euler_product(p, H, d0).log_pi + \
            m / 4.0 * math.log(p / (4 * PI2)) + log_l
    log.debug("class number bound p=%d d=%d d0=%d %s: log %r", p, d, d0, mode,
              bound_log)
    return ClassNumberBound(wK, m, bound_log, _render_exp(bound_log), mode, d0)


def restriction_identity(p, H, d0, q):
    """Compare M_{d0}(p, H) with M_{d0/q}(p, H) (1 - 1/q)^2 for q in H.

    Returns ``(lhs, rhs)`` as exact coefficients.
    """
    if d0 % q or q not in H:
        raise ValueError("q = %d must divide d0 = %d and lie in H" % (q, d0))
    lhs = M_d0_exact(p, H, d0).coefficient
    rhs = M_d0_exact(p, H, d0 // q).coefficient * (1 - Fraction(1, q)) ** 2
    return lhs, rhs


def asymptotic_deviation(p, H, d0):
    """|M_{d0}(p, H)/kappa_{d0} - 1| as a float."""
    return abs(float(M_d0_exact(p, H, d0).coefficient / kappa(d0)) - 1.0)
