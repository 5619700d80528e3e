#! /usr/bin/env python
# -*- encoding: utf-8 -*-
# vim:fenc=utf-8:

"""
The log module
--------------

The log module provide a transparent way to handle log messages from the
dedelab shell. Messages go to stderr so reports written to stdout stay
machine readable.
"""

import sys
import logging

LOG_INFO = logging.INFO
LOG_DEBUG = logging.DEBUG
LOG_ERROR = logging.ERROR
LOG_WARNING = logging.WARNING
LOG_CRITICAL = logging.CRITICAL

MESSAGE_FORMAT = "[%(asctime)s] %(levelname)s: %(message)s"
DATETIME_FORMAT = "%Y-%m-%d %H:%M:%S"


class DedelabLog(logging.getLoggerClass()):

    message_format = MESSAGE_FORMAT
    datetime_format = DATETIME_FORMAT

    def __init__(self, level=logging.WARNING, stream=None):
        logging.getLoggerClass().__init__(self, "dedelab.shell")
        self.handler = logging.StreamHandler(stream or sys.stderr)
        self.formatter = logging.Formatter(self.message_format,
                                           self.datetime_format)
        self.handler.setFormatter(self.formatter)
        self.addHandler(self.handler)
        self.setLevel(level)
