#! /usr/bin/env python
# -*- encoding: utf-8 -*-
# vim:fenc=utf-8:

"""
A mixin which evaluates Dedekind and Dedekind-Rademacher sums.
"""

from dedelab.numt import rational_str
from dedelab.shell import Report, arguments, arg
from dedelab.dedekind import dedekind_fast, dedekind_naive, rademacher, \
                             NAIVE_MAX_MODULUS


def _value(value):
    return {"value": rational_str(value), "float": float(value)}


class DedekindMixin(object):
    """Adds the ``dedekind`` and ``rademacher`` commands."""

    def __init__(self, naive_max_modulus=None, **kw):
        self.naive_max_modulus = int(naive_max_modulus or self.setting(
            "naive_max_modulus", NAIVE_MAX_MODULUS, int))

    @arguments(arg("c", type=int), arg("d", type=int),
               arg("--naive", action="store_true",
                   help="sum the sawtooth products instead"))
    def cmd_dedekind(self, msg, args):
        """dedekind C D [--naive]: the Dedekind sum s(C, D)."""
        if args.naive:
            value = dedekind_naive(args.c, args.d, self.naive_max_modulus)
        else:
            value = dedekind_fast(args.c, args.d)
        out = {"c": args.c, "d": args.d,
               "method": "naive" if args.naive else "fast"}
        out.update(_value(value))
        return Report("dedekind", out)

    @arguments(arg("b", type=int), arg("c", type=int), arg("d", type=int))
    def cmd_rademacher(self, msg, args):
        """rademacher B C D: the Dedekind-Rademacher sum s(B, C, D)."""
        out = {"b": args.b, "c": args.c, "d": args.d}
        out.update(_value(rademacher(args.b, args.c, args.d)))
        return Report("rademacher", out)
