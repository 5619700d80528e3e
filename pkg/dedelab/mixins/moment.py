#! /usr/bin/env python
# -*- encoding: utf-8 -*-
# vim:fenc=utf-8:

"""
A mixin which computes mean square values of L(1, chi).

The exact value comes from Dedekind sums. When the subgroup belongs to a
family with a closed formula the formula is evaluated too, and
``--verify`` adds the average over the characters.
"""

from dedelab.numt import is_prime, rational_str
from dedelab.shell import Report, arguments, arg
from dedelab.groups import subgroup_of_order, subgroup_from_generators
from dedelab.moments import M_d0_exact, closed_form, family_of, \
                            FAMILY_TRIVIAL
from dedelab.oracle import mean_square_bruteforce, ORACLE_MAX_MODULUS
from dedelab.errors import FamilyNotCoveredError


class MomentMixin(object):
    """Adds the ``moment`` command."""

    def __init__(self, oracle_max_modulus=None, **kw):
        self.oracle_max_modulus = int(oracle_max_modulus or self.setting(
            "oracle_max_modulus", ORACLE_MAX_MODULUS, int))

    def subgroup(self, f, order, gens=None):
        """H given by generators, or the subgroup of order ``order`` of a
        prime modulus."""
        if gens:
            return subgroup_from_generators(f, gens)
        return subgroup_of_order(f, order)

    @arguments(arg("--p", type=int, required=True, help="the modulus"),
               arg("--order", type=int, default=1,
                   help="order of H, the modulus must be prime"),
               arg("--gen", type=int, nargs="+",
                   help="generators of H instead of --order"),
               arg("--d0", type=int, default=1),
               arg("--verify", action="store_true",
                   help="average |L(1, chi)|^2 over the characters"))
    def cmd_moment(self, msg, args):
        """moment --p P [--order D | --gen G ...] [--d0 D0] [--verify]:
        mean square value of L(1, chi) over the odd characters trivial on
        H, induced modulo D0*P."""
        f, d0 = args.p, args.d0
        H = self.subgroup(f, args.order, args.gen)
        result = M_d0_exact(f, H, d0)
        out = result.as_dict()
        out.update({"p": f, "order": H.order, "d0": d0})

        if H.is_trivial():
            family = FAMILY_TRIVIAL, {}
        elif is_prime(f):
            family = family_of(f, H.order)
        else:
            family = None
        match = None
        if family is not None:
            kind, params = family
            try:
                closed = closed_form(f, kind, d0, **params)
            except FamilyNotCoveredError as e:
                self.log.debug("no closed form: %s" % e)
            else:
                match = closed.coefficient == result.coefficient
                out["family"] = kind
                out["closed_form"] = rational_str(closed.coefficient)
        out["closed_form_match"] = match

        passed = match is not False
        if args.verify:
            value = mean_square_bruteforce(
                f, H, d0, precision=self.precision, processes=self.threads,
                max_modulus=self.oracle_max_modulus)
            err = abs(result.float_value - value) / value
            out["oracle_value"] = value
            out["oracle_err"] = err
            out["oracle_pass"] = err <= self.tolerance
            passed = passed and out["oracle_pass"]
        out["pass"] = passed
        return Report("moment", out, passed)
