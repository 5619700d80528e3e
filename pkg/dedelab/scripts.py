#! /usr/bin/env python
# -*- encoding: utf-8 -*-
# vim:fenc=utf-8:

"""
The scripts module
------------------

The scripts module provide the endpoint for the ``dedelab`` console
script. Global flags come first, then the command and its arguments:

.. code-block:: bash

  $ dedelab --format json moment --p 7 --order 3 --d0 3 --verify
  $ dedelab --threads 8 --out records.csv scan 100000
  $ dedelab --config dedelab.conf verify all

The optional configuration file holds a ``[DEFAULT]`` section with the
keys of :data:`DEFAULT_CONFIG` and ``[mixin:<name>]`` sections whose
options are passed to the mixins.
"""

import os
import sys
import logging
import argparse

try:
    from ConfigParser import RawConfigParser
except ImportError:
    from configparser import RawConfigParser

from dedelab.log import DedelabLog
from dedelab.shell import ShellArgumentParser, FORMATS, EXIT_USAGE, \
                          EXIT_FAILURE
from dedelab.mixins import ShellFactory, ALL_MIXINS
from dedelab.errors import UsageError


DEFAULT_CONFIG = {
    "loglevel":           logging.WARNING,
    "format":             "text",
    "threads":            1,
    "precision":          53,
    "tolerance":          1e-8,
    "scan_cap":           10 ** 8,
    "report_threshold":   0.05,
    "checkpoint_every":   10000,
    "checkpoint_dir":     "",
    "oracle_max_modulus": 20000,
    "naive_max_modulus":  10 ** 7,
    "dirichlet_terms":    10 ** 6,
    "mixins":             ",".join(ALL_MIXINS),
}

#: configuration keys handed to the shell as settings
SETTINGS = ("scan_cap", "report_threshold", "checkpoint_every",
            "checkpoint_dir", "oracle_max_modulus", "naive_max_modulus",
            "dirichlet_terms")


def get_no_defaults(config, section):
    defaults = set(config.defaults().items())
    sectvals = set(config.items(section))
    return list(sectvals - defaults)


def get_parser():
    parser = ShellArgumentParser(
        prog="dedelab",
        description="Exact Dedekind sums, mean square values of L(1, chi) "
                    "and their numerical checks.")
    parser.add_argument("--config", help="configuration file")
    parser.add_argument("--format", choices=FORMATS)
    parser.add_argument("--threads", type=int, help="worker processes")
    parser.add_argument("--precision", type=int,
                        help="oracle working precision in bits")
    parser.add_argument("--tolerance", type=float)
    parser.add_argument("--out", help="write the report (or the scan "
                                      "records) to this file")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    parser.add_argument("command", nargs=argparse.REMAINDER)
    return parser


def main(argv=None):
    """Main console script function.

    Builds a shell with the configured mixins and runs a single command,
    returning its exit code.
    """
    argv = sys.argv[1:] if argv is None else argv
    try:
        options = get_parser().parse_args(argv)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE

    config = RawConfigParser(DEFAULT_CONFIG)
    if options.config:
        if not os.path.isfile(options.config):
            print("unable to read config file %s." % options.config,
                  file=sys.stderr)
            return EXIT_USAGE
        config.read(options.config)

    mixins = [x.strip() for x in config.get("DEFAULT", "mixins").split(",")
              if x.strip()]
    for section in config.sections():
        if section[0:6] == "mixin:" and section[6:] not in mixins:
            mixins.append(section[6:])

    factory = ShellFactory(dict([
        (x, dict(get_no_defaults(config, "mixin:%s" % x)))
        for x in mixins if config.has_section("mixin:%s" % x)]))

    level = max(logging.DEBUG,
                config.getint("DEFAULT", "loglevel") - 10 * options.verbose)
    logging.basicConfig(
            level=level,
            format="[%(asctime)s] %(levelname)s: %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S"
    )

    Shell = factory(mixins)
    try:
        shell = Shell(
            log       = DedelabLog(level),
            format    = options.format or config.get("DEFAULT", "format"),
            threads   = options.threads or config.getint("DEFAULT",
                                                         "threads"),
            precision = options.precision or config.getint("DEFAULT",
                                                           "precision"),
            tolerance = options.tolerance or config.getfloat("DEFAULT",
                                                             "tolerance"),
            out       = options.out,
            settings  = dict((key, config.get("DEFAULT", key))
                             for key in SETTINGS)
        )
    except (UsageError, ValueError) as e:
        print("invalid configuration: %s" % e, file=sys.stderr)
        return EXIT_USAGE

    try:
        return shell.execute(options.command)
    except KeyboardInterrupt:
        shell.log.warning("interrupted")
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
