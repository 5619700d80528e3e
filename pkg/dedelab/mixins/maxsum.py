#! /usr/bin/env python
# -*- encoding: utf-8 -*-
# vim:fenc=utf-8:

"""
A mixin for sums of maxima of two multiples modulo a prime.
"""

from dedelab.numt import rational_str
from dedelab.shell import Report, arguments, arg
from dedelab.oracle import sum_of_maxima, sum_of_maxima_predicted
from dedelab.moments import twisted_moment_exact, twisted_moment_limit


class MaxsumMixin(object):
    """Adds the ``maxsum`` command."""

    def __init__(self, *args, **kw):
        pass

    @arguments(arg("q1", type=int), arg("q2", type=int), arg("p", type=int),
               arg("--twisted", action="store_true",
                   help="also give the twisted moment for q1 and q2"))
    def cmd_maxsum(self, msg, args):
        """maxsum Q1 Q2 P [--twisted]: sum over x modulo P of
        max(Q1 x mod P, Q2 x mod P), compared with its limit."""
        q1, q2, p = args.q1, args.q2, args.p
        total = sum_of_maxima(q1, q2, p)
        ratio = float(total) / (p * p)
        out = {"q1": q1, "q2": q2, "p": p, "sum": total, "ratio": ratio}
        if q1 != q2:
            predicted = sum_of_maxima_predicted(q1, q2)
            out["predicted"] = rational_str(predicted)
            out["rel_err"] = abs(ratio - float(predicted)) / float(predicted)
        if args.twisted:
            twisted = twisted_moment_exact(q1, q2, p)
            out["twisted"] = twisted.as_dict()
            out["twisted_limit"] = rational_str(twisted_moment_limit(q1, q2))
        return Report("maxsum", out)
