#! /usr/bin/env python
# -*- encoding: utf-8 -*-
# vim:fenc=utf-8:

"""
Mix-in classes which add the dedelab commands to a shell.

Each mixin lives in its own module and is named after it, so the factory
can build a shell from a list of names:

.. code-block:: python

    from dedelab.mixins import ShellFactory

    Shell = ShellFactory()(["dedekind", "help"])
    Shell(format="json").execute(["dedekind", "2", "7"])
"""

from dedelab.shell import DedelabShell

#: every mixin shipped with dedelab, in the order they are composed
ALL_MIXINS = ("dedekind", "moment", "bound", "scan", "maxsum", "oracle",
              "verify", "help", "log")


def _shell_init(self, *args, **kw):
    DedelabShell.__init__(self, *args, **kw)

    for mixin in self.mixins:
        if mixin._factory_name in self._factory_options:
            mixin.__init__(self, **self._factory_options[mixin._factory_name])
        else:
            mixin.__init__(self)


class ShellFactory(object):
    """Create a new shell class using mixins passed in call."""

    def __init__(self, options=None):
        """Create a new factory.

        :param `options`: a :class:`dict` indexed by mixin name which
            contains the keyword options passed to the mixin at init.
        """
        self.options = options or {}

    def shell_class_import(self, name):
        base = "dedelab.mixins."
        if "." in name:
            klsname = name.split(".")[-1]
        else:
            klsname = name
        klsname = klsname.capitalize() + "Mixin"

        try:
            mod = __import__(base + name, globals(), locals(), [klsname])
        except ImportError:
            mod = __import__(name, globals(), locals(), [klsname])

        kls = getattr(mod, klsname)
        kls._factory_name = name

        return kls

    def __call__(self, mixins=ALL_MIXINS):
        mixs = [self.shell_class_import(name) for name in mixins]

        return type("Shell", tuple([DedelabShell] + mixs), {
            "mixins": mixs,
            "_factory_options": self.options,
            "__init__": _shell_init
        })
