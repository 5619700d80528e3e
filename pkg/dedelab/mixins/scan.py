#! /usr/bin/env python
# -*- encoding: utf-8 -*-
# vim:fenc=utf-8:

"""
A mixin which runs the scans over primes and Mersenne numbers.

``scan`` streams the records above the threshold as CSV to ``--out`` and
prints the summary. The checkpoint lives in ``checkpoint_dir``, or in the
directory named by ``DEDELAB_CHECKPOINT_DIR``.
"""

import os

from dedelab.shell import Report, arguments, arg
from dedelab.storage import CheckpointStorage
from dedelab.scanner import Scanner, fit_mersenne, mersenne_fit_dict, \
                            SCAN_CAP, REPORT_THRESHOLD, CHECKPOINT_EVERY


class ScanMixin(object):
    """Adds the ``scan`` and ``scan-mersenne`` commands."""

    def __init__(self, scan_cap=None, report_threshold=None,
                 checkpoint_every=None, checkpoint_dir=None, **kw):
        self.scan_cap = int(scan_cap or self.setting("scan_cap", SCAN_CAP,
                                                     int))
        self.report_threshold = float(report_threshold or self.setting(
            "report_threshold", REPORT_THRESHOLD, float))
        self.checkpoint_every = int(checkpoint_every or self.setting(
            "checkpoint_every", CHECKPOINT_EVERY, int))
        self.checkpoint_dir = checkpoint_dir or self.setting("checkpoint_dir")

    def scan_checkpoint(self, max_p, d_max):
        name = "scan-%d" % max_p if d_max is None else \
            "scan-%d-%d" % (max_p, d_max)
        return CheckpointStorage.named(name, self.checkpoint_dir)

    @arguments(arg("max_p", type=int),
               arg("--d-max", type=int, default=None,
                   help="only scan orders up to this value"),
               arg("--threshold", type=float, default=None,
                   help="write records with Q above this value"),
               arg("--resume", action="store_true",
                   help="continue from the last checkpoint"))
    def cmd_scan(self, msg, args):
        """scan MAX_P [--d-max D] [--threshold Q] [--resume]: largest
        Q(h, p) = |s(h, p)|/p^(1-1/phi(d)) over the primes up to MAX_P and
        the elements h of odd order d >= 3."""
        checkpoint = self.scan_checkpoint(args.max_p, args.d_max)
        threshold = self.report_threshold if args.threshold is None \
            else args.threshold
        scanner = Scanner(args.max_p, d_max=args.d_max, threshold=threshold,
                          processes=self.threads, checkpoint=checkpoint,
                          checkpoint_every=self.checkpoint_every,
                          scan_cap=self.scan_cap)
        if self.out:
            mode = "r+" if args.resume and checkpoint.exists() and \
                os.path.exists(self.out) else "w"
            with open(self.out, mode, newline="") as stream:
                summary = scanner.run(stream, resume=args.resume)
        else:
            summary = scanner.run(resume=args.resume)
        out = summary.as_dict()
        out["max_p"] = args.max_p
        out["threshold"] = threshold
        return Report("scan", out, to_stdout=True)

    @arguments(arg("--d", type=int, nargs="+", default=list(range(3, 50, 2)),
                   help="exponents of the Mersenne numbers 2^d - 1"),
               arg("--d0", type=int, nargs="+", default=[1, 3, 5, 15, 105]))
    def cmd_scan_mersenne(self, msg, args):
        """scan-mersenne [--d D ...] [--d0 D0 ...]: fit N' = A1 d + A0 on
        each residue class of d for H = <2> modulo 2^d - 1."""
        fits = []
        passed = True
        for d0 in args.d0:
            for fit in fit_mersenne(args.d, d0):
                fits.append(mersenne_fit_dict(fit))
                if fit.consistent is False or fit.table_match is False:
                    passed = False
        rows = [("d0", "residue", "period", "a1", "a0", "samples",
                 "verified", "consistent", "table_match")]
        rows.extend(tuple(fit[k] for k in rows[0]) for fit in fits)
        return Report("scan-mersenne", {"fits": fits, "pass": passed},
                      passed, rows)
