#! /usr/bin/env python
# -*- encoding: utf-8 -*-
# vim:fenc=utf-8:

"""
A mixin which runs the named verification suites of
:mod:`dedelab.suites`.
"""

from dedelab.shell import Report, arguments, arg
from dedelab.suites import run_suite, SUITES


class VerifyMixin(object):
    """Adds the ``verify`` command."""

    def __init__(self, *args, **kw):
        pass

    @arguments(arg("suite", choices=SUITES + ("all",)),
               arg("--limit", type=int, default=None,
                   help="size of the grid, each suite has its default; with "
                        "all the defaults are scaled to it"))
    def cmd_verify(self, msg, args):
        """verify SUITE [--limit N]: run a suite and print a pass/fail
        table, SUITE is reciprocity, formulas, mersenne, d3, oracle or
        all."""
        results = run_suite(args.suite, args.limit, self.threads,
                            self.tolerance)
        passed = all(r.passed for r in results)
        rows = [("suite", "check", "checked", "failed", "measure", "pass")]
        rows.extend((r.suite, r.check, r.checked, r.failed,
                     "" if r.measure is None else "%.3g" % r.measure,
                     "pass" if r.passed else "FAIL") for r in results)
        for r in results:
            for example in r.examples:
                self.log.error("%s/%s: %s" % (r.suite, r.check, example))
        return Report("verify", {"suite": args.suite, "pass": passed,
                                 "results": [r.as_dict() for r in results]},
                      passed, rows)
