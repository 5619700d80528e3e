#! /usr/bin/env python
# -*- encoding: utf-8 -*-
# vim:fenc=utf-8:

"""
A mixin which exposes the numeric oracle checks.

``oracle CHECK ARGS...`` resolves CHECK to an ``oracle_<check>`` method,
the same way the shell resolves commands, and reports a list of checks
``{name, lhs, rhs, abs_err, rel_err, pass}``.
"""

import math

from dedelab.shell import Report, arguments, arg
from dedelab.errors import UsageError
from dedelab.groups import subgroup_of_order, subgroup_from_generators
from dedelab import moments
from dedelab import oracle


def _checks_report(name, checks, extra=None):
    out = {"check": name, "checks": [c.as_dict() for c in checks],
           "pass": all(c.passed for c in checks)}
    out.update(extra or {})
    rows = [("name", "lhs", "rhs", "abs_err", "rel_err", "pass")]
    rows.extend((c.name, c.lhs, c.rhs, c.abs_err, c.rel_err, c.passed)
                for c in checks)
    return Report("oracle", out, out["pass"], rows)


class OracleMixin(object):
    """Adds the ``oracle`` command."""

    def __init__(self, dirichlet_terms=None, **kw):
        self.dirichlet_terms = int(dirichlet_terms or self.setting(
            "dirichlet_terms", oracle.DIRICHLET_TERMS, int))
        if not hasattr(self, "oracle_max_modulus"):
            self.oracle_max_modulus = self.setting(
                "oracle_max_modulus", oracle.ORACLE_MAX_MODULUS, int)

    def __get_checks(self):
        for name in sorted(dir(self)):
            if name.startswith("oracle_") and callable(getattr(self, name)):
                yield name[7:].replace("_", "-")

    def cmd_oracle(self, msg, args):
        """oracle CHECK ARGS...: numeric cross-check, CHECK is one of
        mean-square, charsum, maxima, u-fa, orthogonality, kernel, l1,
        twisted and euler."""
        checks = list(self.__get_checks())
        if not args:
            raise UsageError("oracle needs a check: " + ", ".join(checks))
        check = getattr(self, "oracle_" + args[0].replace("-", "_"), None)
        if check is None or args[0] not in checks:
            raise UsageError("unknown oracle check %r, use one of %s"
                             % (args[0], ", ".join(checks)))
        return check(msg, args[1:])

    @arguments(arg("--p", type=int, required=True),
               arg("--order", type=int, default=1),
               arg("--gen", type=int, nargs="+"),
               arg("--d0", type=int, default=1))
    def oracle_mean_square(self, msg, args):
        """mean-square --p P [--order D | --gen G ...] [--d0 D0]"""
        if args.gen:
            H = subgroup_from_generators(args.p, args.gen)
        else:
            H = subgroup_of_order(args.p, args.order)
        exact = moments.M_d0_exact(args.p, H, args.d0)
        value = oracle.mean_square_bruteforce(
            args.p, H, args.d0, precision=self.precision,
            processes=self.threads, max_modulus=self.oracle_max_modulus)
        check = oracle.CheckReport.compare(
            "M_%d(%d, H%d)" % (args.d0, args.p, H.order), exact.float_value,
            value, self.tolerance)
        return _checks_report("mean-square", [check])

    @arguments(arg("f", type=int), arg("--tolerance", type=float,
                                       default=1e-6))
    def oracle_charsum(self, msg, args):
        """charsum F: character sum identity for every primitive character
        modulo F."""
        checks = [oracle.charsum_identity_check(chi, args.tolerance)
                  for chi in oracle.characters(args.f)
                  if oracle.is_primitive(chi)]
        if not checks:
            raise UsageError("there is no primitive character modulo %d"
                             % args.f)
        return _checks_report("charsum", checks)

    @arguments(arg("q1", type=int), arg("q2", type=int), arg("p", type=int),
               arg("--tolerance", type=float, default=0.01))
    def oracle_maxima(self, msg, args):
        """maxima Q1 Q2 P: sum of maxima over P^2 against its limit."""
        total = oracle.sum_of_maxima(args.q1, args.q2, args.p)
        check = oracle.CheckReport.compare(
            "max(%d x, %d x) mod %d" % (args.q1, args.q2, args.p),
            float(total) / args.p ** 2,
            oracle.sum_of_maxima_predicted(args.q1, args.q2), args.tolerance)
        return _checks_report("maxima", [check], {"sum": total})

    @arguments(arg("d0", type=int), arg("f", type=int),
               arg("--tolerance", type=float, default=1e-6))
    def oracle_u_fa(self, msg, args):
        """u-fa D0 F: the lifted cotangent sum U(D0, F) against F A(D0, F)."""
        return _checks_report("u-fa", [oracle.U_equals_fA_check(
            args.d0, args.f, args.tolerance)])

    @arguments(arg("p", type=int), arg("--order", type=int, default=1))
    def oracle_orthogonality(self, msg, args):
        """orthogonality P [--order D]"""
        H = subgroup_of_order(args.p, args.order)
        return _checks_report("orthogonality",
                              [oracle.orthogonality_check(args.p, H)])

    @arguments(arg("p", type=int), arg("order", type=int))
    def oracle_kernel(self, msg, args):
        """kernel P D: recover H of order D from the characters trivial on
        it."""
        H = subgroup_of_order(args.p, args.order)
        kernel = oracle.kernel_of(
            args.p, oracle.characters_trivial_on(args.p, H, None))
        check = oracle.CheckReport("kernel mod %d" % args.p, kernel.order,
                                   H.order, 0.0, 0.0, kernel == H)
        return _checks_report("kernel", [check],
                              {"elements": list(kernel.elements)})

    @arguments(arg("f", type=int), arg("--terms", type=int, default=None),
               arg("--tolerance", type=float, default=1e-6))
    def oracle_l1(self, msg, args):
        """l1 F [--terms N]: L(1, chi) from cotangents against the
        Dirichlet series, for every odd character modulo F."""
        terms = args.terms or self.dirichlet_terms
        checks = []
        for chi in oracle.characters(args.f):
            if not chi.is_odd():
                continue
            value = oracle.L1(chi, self.precision)
            series = oracle.L1_series(chi, terms)
            name = "L(1) mod %d %r" % (args.f,
                                       tuple(int(e) for e in chi.exponents))
            checks.append(oracle.CheckReport.compare(
                name, 0.0, abs(value - series), args.tolerance,
                relative=False))
        if not checks:
            raise UsageError("there is no odd character modulo %d" % args.f)
        return _checks_report("l1", checks)

    @arguments(arg("q1", type=int), arg("q2", type=int), arg("p", type=int),
               arg("--order", type=int, default=1))
    def oracle_twisted(self, msg, args):
        """twisted Q1 Q2 P [--order D]: twisted moment from Dedekind sums
        against the characters."""
        H = subgroup_of_order(args.p, args.order)
        exact = moments.twisted_moment_exact(args.q1, args.q2, args.p, H)
        brute = oracle.twisted_moment_bruteforce(args.q1, args.q2, args.p, H,
                                                 self.precision)
        check = oracle.CheckReport.compare(
            "M_%d,%d(%d)" % (args.q1, args.q2, args.p), exact.coefficient,
            brute.real, self.tolerance, relative=False)
        return _checks_report("twisted", [check])

    @arguments(arg("p", type=int), arg("--order", type=int, default=1),
               arg("--d0", type=int, required=True))
    def oracle_euler(self, msg, args):
        """euler P [--order D] --d0 D0: Euler factor product against the
        characters."""
        H = subgroup_of_order(args.p, args.order)
        product = moments.euler_product(args.p, H, args.d0)
        direct = oracle.euler_product_direct(args.p, H, args.d0)
        check = oracle.CheckReport.compare(
            "Pi(%d, H%d, %d)" % (args.p, args.order, args.d0),
            math.exp(product.log_pi), direct.real,
            self.tolerance)
        return _checks_report("euler", [check],
                              {"product": product.as_dict()})
