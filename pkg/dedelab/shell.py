#! /usr/bin/env python
# -*- encoding: utf-8 -*-
# vim:fenc=utf-8:

"""
The shell module
----------------

The shell module provide the command engine of dedelab. A command line is
split in a command name and its arguments, and the name is resolved to a
``cmd_<name>`` method of the shell, hyphens mapped to underscores.

The :class:`DedelabShell` is designed to be extended, usually through the
mixins in :mod:`dedelab.mixins`. Let's an example:

.. code-block:: python

    from dedelab.shell import DedelabShell, Report, arguments, arg

    class MyShell(DedelabShell):
        @arguments(arg("n", type=int))
        def cmd_square(self, msg, args):
            return Report("square", {"value": args.n * args.n})

Commands return a :class:`Report`, which the shell renders as JSON, CSV or
plain text. The exit code of :meth:`DedelabShell.execute` is 0 when the
report passed, 1 when a verification failed and 2 on usage errors.
"""

import io
import csv
import sys
import json
import argparse
from fractions import Fraction
from functools import update_wrapper
from collections import namedtuple

import numpy as np

from dedelab.log import DedelabLog
from dedelab.numt import rational_str
from dedelab.errors import DedelabError, UsageError, IdentityMismatchError

EVENT_START   = 0
EVENT_COMMAND = 1
EVENT_RESULT  = 2
EVENT_FAILURE = 3

EXIT_OK      = 0
EXIT_FAILURE = 1
EXIT_USAGE   = 2

FORMATS = ("json", "csv", "text")

#: the ``msg`` argument received by every command
Request = namedtuple("Request", "command arguments")


class ShellArgumentParser(argparse.ArgumentParser):
    """Argument parser which raises :class:`UsageError` instead of
    exiting."""

    def error(self, message):
        raise UsageError("%s: %s" % (self.prog, message))


def arg(*args, **kw):
    """Argument specification for :func:`arguments`, same signature as
    :meth:`argparse.ArgumentParser.add_argument`."""
    return args, kw


def arguments(*specs):
    """Decorator which parses the command arguments with argparse.

    The decorated command receives an :class:`argparse.Namespace` instead
    of the raw argument list, for example:

    .. code-block:: python

      @arguments(arg("c", type=int), arg("d", type=int))
      def cmd_dedekind(self, msg, args):
          return Report("dedekind", {"value": dedekind_fast(args.c, args.d)})

    The parser is available as the ``parser`` attribute of the command, the
    help mixin uses it to print the usage.
    """
    def decorator(fun):
        prog = fun.__name__.split("_", 1)[1].replace("_", "-")
        parser = ShellArgumentParser(prog=prog, add_help=False,
                                     description=fun.__doc__)
        for args, kw in specs:
            parser.add_argument(*args, **kw)

        def new(self, msg, args):
            return fun(self, msg, parser.parse_args(list(args)))
        new.parser = parser
        return update_wrapper(new, fun)
    return decorator


def _json_default(value):
    if isinstance(value, Fraction):
        return rational_str(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, complex):
        return [value.real, value.imag]
    raise TypeError("%r is not JSON serializable" % (value,))


def _flatten(data, prefix=""):
    if isinstance(data, dict):
        for key in sorted(data):
            for item in _flatten(data[key], "%s%s." % (prefix, key)):
                yield item
    elif isinstance(data, (list, tuple)) and \
            any(isinstance(x, (dict, list, tuple)) for x in data):
        for i, value in enumerate(data):
            for item in _flatten(value, "%s%d." % (prefix, i)):
                yield item
    else:
        if isinstance(data, (list, tuple)):
            data = " ".join(str(_plain(x)) for x in data)
        yield prefix[:-1], _plain(data)


def _plain(value):
    if isinstance(value, Fraction):
        return rational_str(value)
    if isinstance(value, bool) or value is None:
        return str(value).lower() if value is not None else "null"
    return value


class Report(object):
    """Result of a command.

    :param `name`: the command which produced it.
    :param `data`: a :class:`dict` rendered as JSON, or flattened to
        ``key: value`` lines in text and CSV formats.
    :param `passed`: False makes the command exit with code 1.
    :param `rows`: optional table, header first, used by the CSV and text
        formats instead of the flattened data.
    :param `to_stdout`: the command already used ``--out`` for its own
        stream, so the report itself goes to stdout.
    """

    def __init__(self, name, data, passed=True, rows=None, to_stdout=False):
        self.name = name
        self.data = data
        self.passed = passed
        self.rows = rows
        self.to_stdout = to_stdout

    def render(self, fmt="text"):
        if fmt == "json":
            return json.dumps(self.data, indent=2, sort_keys=True,
                              default=_json_default)
        if fmt == "csv":
            out = io.StringIO()
            writer = csv.writer(out, lineterminator="\n")
            if self.rows is not None:
                writer.writerows(self.rows)
            else:
                writer.writerow(("key", "value"))
                writer.writerows(_flatten(self.data))
            return out.getvalue().rstrip("\n")
        if self.rows is not None:
            widths = [max(len(str(row[i])) for row in self.rows)
                      for i in range(len(self.rows[0]))]
            return "\n".join("  ".join(str(c).ljust(w)
                                       for c, w in zip(row, widths)).rstrip()
                             for row in self.rows)
        return "\n".join("%s: %s" % item for item in _flatten(self.data))


class DedelabShell(object):
    """Command engine.

    The shell resolves the command name to a ``cmd_<name>`` method, runs
    the event handlers and writes the report of the command.
    """

    def __init__(self, log=None, format="text", threads=1, precision=53,
                 tolerance=1e-8, out=None, stdout=None, settings=None):
        """Initialize a dedelab shell.

        :param `log`: a :class:`DedelabLog`, a new one is created if not
            provided.
        :param `format`: one of ``json``, ``csv`` and ``text``.
        :param `threads`: number of worker processes for parallel work.
        :param `precision`: working precision of the oracle, in bits.
        :param `tolerance`: relative tolerance of numeric comparisons.
        :param `out`: path to write reports (or streams) to.
        :param `stdout`: the stream reports go to when there is no ``out``.
        :param `settings`: a :class:`dict` with the remaining configuration
            values, such as ``scan_cap`` or ``checkpoint_dir``.
        """
        if format not in FORMATS:
            raise UsageError("unknown format %r" % format)
        self.log = log or DedelabLog()
        self.format = format
        self.threads = max(1, int(threads))
        self.precision = int(precision)
        self.tolerance = float(tolerance)
        self.out = out
        self.stdout = stdout or sys.stdout
        self.settings = dict(settings or {})
        self.handlers = {EVENT_START: [], EVENT_COMMAND: [],
                         EVENT_RESULT: [], EVENT_FAILURE: []}

    def setting(self, name, default=None, kind=None):
        """Configuration value ``name`` converted with ``kind``."""
        value = self.settings.get(name)
        if value is None or value == "":
            return default
        return kind(value) if kind else value

    def run_handler(self, event, *args, **kwargs):
        """Performs the handler actions related with specified event."""
        for handler in self.handlers[event]:
            handler(*args, **kwargs)

    def register_handler(self, typ, fun):
        """Register a new handler.

        :param `typ`: one of ``EVENT_START``, ``EVENT_COMMAND``,
            ``EVENT_RESULT`` or ``EVENT_FAILURE``.
        :param `fun`: the callable to run. Command handlers receive the
            :class:`Request` and the argument list, result handlers the
            request and the report, failure handlers the request and the
            exception.
        """
        self.handlers[typ].append(fun)

    def unregister_handler(self, typ, fun):
        """Unregister a previously registerd handler."""
        self.handlers[typ].remove(fun)

    def register_command(self, cmdname, cmdfun):
        """Register a new command on an already built shell.

        :param `cmdname`: a name to this command.
        :param `cmdfun`: a callback which accepts the request and the
            argument list.
        """
        setattr(self, "cmd_%s" % cmdname.replace("-", "_"), cmdfun)

    def command(self, command_n):
        return getattr(self, "cmd_%s" % command_n.replace("-", "_"), None)

    def write(self, report):
        text = report.render(self.format)
        if self.out and not report.to_stdout:
            with open(self.out, "w") as fd:
                fd.write(text + "\n")
        else:
            self.stdout.write(text + "\n")
            self.stdout.flush()

    def execute(self, argv):
        """Run a command line and return the exit code.

        :param `argv`: the command name followed by its arguments.
        """
        self.run_handler(EVENT_START, argv)
        if not argv:
            self.log.error("no command given, try help")
            return EXIT_USAGE

        command_n, arguments = argv[0], list(argv[1:])
        command = self.command(command_n)
        if command is None:
            self.log.error("unknown command %s, try help" % command_n)
            return EXIT_USAGE

        request = Request(command_n, arguments)
        self.log.info("command %s %r" % (command_n, arguments))
        self.run_handler(EVENT_COMMAND, request, arguments)
        try:
            report = command(request, arguments)
        except IdentityMismatchError as e:
            self.log.error("%s: %s" % (command_n, e))
            self.run_handler(EVENT_FAILURE, request, e)
            return EXIT_FAILURE
        except (DedelabError, ValueError) as e:
            self.log.error("%s: %s" % (command_n, e))
            self.run_handler(EVENT_FAILURE, request, e)
            return EXIT_USAGE

        if report is not None:
            self.write(report)
        self.run_handler(EVENT_RESULT, request, report)
        if report is not None and not report.passed:
            return EXIT_FAILURE
        return EXIT_OK
