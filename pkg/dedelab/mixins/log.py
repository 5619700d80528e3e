#! /usr/bin/env python
# -*- encoding: utf-8 -*-
# vim:fenc=utf-8:

"""
A Log Mixin which logs every command run by the dedelab shell.
"""

from dedelab.shell import EVENT_COMMAND, EVENT_RESULT, EVENT_FAILURE
from dedelab.log import DedelabLog


class LogMixin(object):
    """Implements basic command logging for a :class:`DedelabShell`."""

    def __init__(self, *args, **kw):
        """Create a new log mixin."""

        if not getattr(self, "log", None):
            self.log = DedelabLog()

        self.register_handler(EVENT_COMMAND, self.log_command)
        self.register_handler(EVENT_RESULT, self.log_result)
        self.register_handler(EVENT_FAILURE, self.log_failure)

    def log_command(self, request, args):
        self.log.info("[command] %s %s" % (request.command, " ".join(args)))

    def log_result(self, request, report):
        self.log.info("[%s] %s" % ("pass" if report is None or report.passed
                                   else "fail", request.command))

    def log_failure(self, request, error):
        self.log.warning("[error] %s: %s: %s" % (
            request.command, error.__class__.__name__, error))
