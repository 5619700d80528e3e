#! /usr/bin/env python
# -*- encoding: utf-8 -*-
# vim:fenc=utf-8:

"""
The groups module
-----------------

Subgroups H of the multiplicative group :math:`(\\mathbb{Z}/f\\mathbb{Z})^*`
stored as explicit sorted element lists, and their lifts
:math:`H_\\delta` to :math:`(\\mathbb{Z}/\\delta f\\mathbb{Z})^*`.

.. code-block:: python

    >>> from dedelab.groups import subgroup_of_order, lift_subgroup
    >>> H = subgroup_of_order(7, 3)
    >>> H.elements
    (1, 2, 4)
    >>> lift_subgroup(H, 3).elements
    (1, 2, 4, 8, 11, 16)
"""

from math import gcd

from dedelab.numt import is_prime, primitive_root, mult_order, \
                         mod_inverse, factorize
from dedelab.errors import NotCoprimeError, NotPrimeError, \
                          OrderDoesNotDivideError, NotCoprimeModuliError, \
                          NotSquareFreeError


class Subgroup(object):
    """A subgroup of the units modulo ``modulus``.

    :param `modulus`: the modulus f.
    :param `elements`: an iterable with the residues of the subgroup.
    :param `check`: verify closure under multiplication, which is the
        default. Builders which produce a group by construction skip it.
    """
    __slots__ = ("modulus", "elements", "_set")

    def __init__(self, modulus, elements, check=True):
        self.modulus = modulus
        self.elements = tuple(sorted(set(e % modulus for e in elements)))
        self._set = frozenset(self.elements)
        if check:
            self._check()

    def _check(self):
        f = self.modulus
        if (1 % f) not in self._set:
            raise ValueError("subgroup modulo %d does not contain 1" % f)
        for e in self.elements:
            if gcd(e, f) != 1:
                raise NotCoprimeError("%d is not a unit modulo %d" % (e, f))
        for a in self.elements:
            for b in self.elements:
                if a * b % f not in self._set:
                    raise ValueError("elements modulo %d are not closed "
                                     "under multiplication" % f)

    @property
    def order(self):
        return len(self.elements)

    @property
    def contains_minus_one(self):
        return (self.modulus - 1) % self.modulus in self._set

    def is_trivial(self):
        return self.order == 1

    def __contains__(self, value):
        return value % self.modulus in self._set

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return isinstance(other, Subgroup) and \
               self.modulus == other.modulus and \
               self.elements == other.elements

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.modulus, self.elements))

    def __repr__(self):
        if self.order > 8:
            shown = ", ".join(str(e) for e in self.elements[:8]) + ", ..."
        else:
            shown = ", ".join(str(e) for e in self.elements)
        return "<%s mod %d order %d {%s}>" % (self.__class__.__name__,
                self.modulus, self.order, shown)

    def reduce(self, modulus):
        """Image of the elements modulo a divisor of the modulus."""
        return frozenset(e % modulus for e in self.elements)

    def quotient_order(self, q):
        """Order of q in the quotient group of the units by this subgroup.

        For a prime modulus the group is cyclic and the subgroup of order d
        is unique, so q^g lies in it exactly when ord(q) divides g*d.
        """
        f = self.modulus
        if is_prime(f):
            k = mult_order(q, f)
            return k // gcd(k, self.order)
        x, g = q % f, 1
        while x not in self._set:
            x = x * q % f
            g += 1
        return g


class LiftedSubgroup(Subgroup):
    """Preimage H_delta of a subgroup H modulo f in the units modulo
    delta*f."""
    __slots__ = ("base", "delta")

    def __init__(self, base, delta, elements):
        Subgroup.__init__(self, base.modulus * delta, elements, check=False)
        self.base = base
        self.delta = delta


def trivial_subgroup(f):
    return Subgroup(f, [1], check=False)


def subgroup_of_order(p, d):
    """The unique subgroup of order d of the cyclic group modulo p.

    Built as the powers of g^((p-1)/d) for the smallest primitive root g.

    :raises NotPrimeError: if p is not prime.
    :raises OrderDoesNotDivideError: if d does not divide p - 1.
    """
    if not is_prime(p):
        raise NotPrimeError("%d is not prime" % p)
    if d < 1 or (p - 1) % d:
        raise OrderDoesNotDivideError("%d does not divide %d" % (d, p - 1))
    gen = pow(primitive_root(p), (p - 1) // d, p)
    elements, x = [], 1
    for _ in range(d):
        elements.append(x)
        x = x * gen % p
    return Subgroup(p, elements, check=False)


def subgroup_from_generators(f, gens):
    """Closure of ``gens`` in the units modulo f.

    :raises NotCoprimeError: if a generator is not a unit.
    """
    for g in gens:
        if gcd(g, f) != 1:
            raise NotCoprimeError("generator %d is not a unit modulo %d"
                                  % (g, f))
    found = {1 % f}
    frontier = [1 % f]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x * g % f
            if y not in found:
                found.add(y)
                frontier.append(y)
    return Subgroup(f, found, check=False)


def power_subgroup(f, a):
    """H = <a> modulo f."""
    return subgroup_from_generators(f, [a])


def power_modulus(a, d):
    """f = (a^d - 1)/(a - 1), the modulus of the power family."""
    return (a ** d - 1) // (a - 1)


def mersenne_subgroup(d):
    """H = {2^k} modulo 2^d - 1."""
    f = (1 << d) - 1
    return Subgroup(f, [1 << k for k in range(d)], check=False)


def quadratic_form_subgroup(a, b):
    """The order three subgroup {1, a/b, b/a} modulo f = a^2 + ab + b^2.

    Returns the tuple ``(f, H)``.
    """
    f = a * a + a * b + b * b
    if gcd(a, b) != 1:
        raise NotCoprimeError("gcd(%d, %d) != 1" % (a, b))
    return f, subgroup_from_generators(f, [a * mod_inverse(b, f) % f])


def lift_subgroup(H, delta):
    """All residues h' modulo delta*f with h' = h (mod f) for some h in H
    and gcd(h', delta) = 1.

    :raises NotCoprimeModuliError: if gcd(delta, f) is not 1.
    :raises NotSquareFreeError: if delta is not square-free.
    """
    f = H.modulus
    if gcd(delta, f) != 1:
        raise NotCoprimeModuliError("gcd(%d, %d) != 1" % (delta, f))
    if not factorize(delta).is_squarefree():
        raise NotSquareFreeError("%d is not square-free" % delta)
    elements = [h + k * f for h in H.elements for k in range(delta)
                if gcd(h + k * f, delta) == 1]
    return LiftedSubgroup(H, delta, elements)


def minus_one_free(H):
    """Whether -1 is missing from H."""
    return not H.contains_minus_one
