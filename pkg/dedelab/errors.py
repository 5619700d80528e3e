#! /usr/bin/env python
# -*- encoding: utf-8 -*-
# vim:fenc=utf-8:

"""
The errors module
-----------------

Exceptions raised by dedelab. Every error derives from
:class:`DedelabError`, input validation errors also derive from
:class:`ValueError` so callers can catch them the usual way.
"""


class DedelabError(Exception):
    """Base exception for every dedelab error."""


class UsageError(DedelabError):
    """Exception raised on invalid command line usage."""


class InputTooLargeError(DedelabError, ValueError):
    """Integer outside of the supported 64-bit domain."""


class NotCoprimeError(DedelabError, ValueError):
    """Arguments which must be coprime are not."""


class ZeroModulusError(DedelabError, ValueError):
    """A Dedekind sum was requested with modulus zero."""


class ModulusTooLargeForOracleError(DedelabError, ValueError):
    """The brute force path refuses a modulus above its guard."""


class NotPrimeError(DedelabError, ValueError):
    """A prime modulus was expected."""


class OrderDoesNotDivideError(DedelabError, ValueError):
    """Requested subgroup order does not divide the group order."""


class NotCoprimeModuliError(DedelabError, ValueError):
    """Lift or induction modulus shares a factor with the base modulus."""


class MinusOneInSubgroupError(DedelabError, ValueError):
    """The subgroup contains -1, so it has no odd characters."""


class NotSquareFreeError(DedelabError, ValueError):
    """A square-free auxiliary modulus was expected."""


class FamilyNotCoveredError(DedelabError, ValueError):
    """No closed form is known for the requested parameters."""


class DegreeParityError(DedelabError, ValueError):
    """The field degree would be odd, so the field is not imaginary."""


class EvenCharacterError(DedelabError, ValueError):
    """An odd character was expected."""


class NotPrimitiveError(DedelabError, ValueError):
    """A primitive character was expected."""


class IdentityMismatchError(DedelabError):
    """Two independent computations of the same quantity disagree."""
