#! /usr/bin/env python
# -*- encoding: utf-8 -*-
# vim:fenc=utf-8:

"""
A mixin which bounds relative class numbers of imaginary subfields of
prime cyclotomic fields.
"""

import math

from dedelab.shell import Report, arguments, arg
from dedelab.moments import class_number_bound, BOUND_MODES

# exp overflows doubles above this
_LOG_FLOAT_MAX = 700


class BoundMixin(object):
    """Adds the ``bound`` command."""

    def __init__(self, *args, **kw):
        pass

    @arguments(arg("--p", type=int, required=True),
               arg("--order", type=int, default=1),
               arg("--d0", type=int, default=1),
               arg("--mode", choices=BOUND_MODES, default="plain"))
    def cmd_bound(self, msg, args):
        """bound --p P [--order D] [--d0 D0] [--mode MODE]: upper bound on
        the relative class number of the subfield of degree (P-1)/D."""
        bound = class_number_bound(args.p, args.order, args.d0, args.mode)
        out = bound.as_dict()
        out.update({"p": args.p, "order": args.order})
        if bound.bound_log < _LOG_FLOAT_MAX:
            # h^- is an integer
            out["h_minus_at_most"] = int(math.floor(
                math.exp(bound.bound_log) + 1e-9))
        return Report("bound", out)
