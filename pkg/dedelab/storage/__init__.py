#! /usr/bin/env python
# -*- encoding: utf-8 -*-
# vim:fenc=utf-8:

"""
The storage module
------------------

Persistent state of long running commands. A checkpoint is a plain
:class:`dict` which is written as JSON through a temporary file and an
atomic rename, so an interrupted run never leaves a truncated checkpoint
behind.
"""

import os
import json
import logging

log = logging.getLogger(__name__)

ENV_CHECKPOINT_DIR = "DEDELAB_CHECKPOINT_DIR"


def checkpoint_dir(default=None):
    """Directory for checkpoints, ``DEDELAB_CHECKPOINT_DIR`` wins."""
    return os.environ.get(ENV_CHECKPOINT_DIR) or default or os.getcwd()


class CheckpointStorage(dict):
    """In memory dict backed by a JSON file.

    :param `path`: the file to save to and load from.
    """

    def __init__(self, path):
        self.path = path
        super(CheckpointStorage, self).__init__()

    @classmethod
    def named(cls, name, directory=None):
        return cls(os.path.join(checkpoint_dir(directory), name + ".json"))

    def exists(self):
        return os.path.isfile(self.path)

    def load(self):
        with open(self.path) as fd:
            state = json.load(fd)
        self.clear()
        self.update(state)
        log.debug("checkpoint loaded from %s", self.path)
        return self

    def save(self):
        directory = os.path.dirname(os.path.abspath(self.path))
        if not os.path.isdir(directory):
            os.makedirs(directory)
        tmp = self.path + ".tmp"
        with open(tmp, "w") as fd:
            json.dump(self, fd, sort_keys=True)
            fd.flush()
            os.fsync(fd.fileno())
        os.replace(tmp, self.path)
        log.debug("checkpoint written to %s", self.path)

    def remove(self):
        if self.exists():
            os.remove(self.path)
