#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

import inspect

from dedelab.shell import Report


class HelpMixin(object):
    """Shell mix-in which adds a "help" command.

    >>> class MyShell(DedelabShell, HelpMixin):
    ...     pass

    """
    def __init__(self, *args, **kw):
        pass

    def __get_commands(self):
        for (name, kind, _, _) in inspect.classify_class_attrs(self.__class__):
            if name.startswith("cmd_") and kind == "method":
                yield name[4:].replace("_", "-")

    def cmd_help(self, msg, args):
        """help [COMMAND]: list the commands, or describe one."""
        if not args:
            commands = sorted(self.__get_commands())
            return Report("help", {"commands": commands},
                          rows=[("command",)] + [(c,) for c in commands])

        func = self.command(args[0])
        if func is None:
            return Report("help", {"command": args[0],
                                   "error": "no such command"}, False)

        out = {"command": args[0], "help": inspect.getdoc(func)}
        parser = getattr(func, "parser", None)
        if parser is not None:
            out["usage"] = parser.format_usage().strip()
        return Report("help", out)
