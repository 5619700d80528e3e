#! /usr/bin/env python
# -*- encoding: utf-8 -*-
# vim:fenc=utf-8:

import os
import shutil
import tempfile
import unittest
from unittest import mock

from dedelab.storage import CheckpointStorage, checkpoint_dir, \
                            ENV_CHECKPOINT_DIR


class TestCheckpointStorage(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def testSaveLoad(self):
        storage = CheckpointStorage.named("state", self.directory)
        self.assertFalse(storage.exists())
        storage["next_start"] = 500
        storage["summary"] = {"count": 3, "values": [1, 2]}
        storage.save()
        self.assertTrue(storage.exists())
        self.assertFalse(os.path.exists(storage.path + ".tmp"))

        other = CheckpointStorage(storage.path).load()
        self.assertEqual(dict(other), dict(storage))
        storage.remove()
        self.assertFalse(storage.exists())
        storage.remove()

    def testNestedDirectory(self):
        path = os.path.join(self.directory, "a", "b", "state.json")
        storage = CheckpointStorage(path)
        storage["x"] = 1
        storage.save()
        self.assertTrue(os.path.isfile(path))

    def testEnvironment(self):
        with mock.patch.dict(os.environ, {ENV_CHECKPOINT_DIR:
                                          self.directory}):
            self.assertEqual(checkpoint_dir("/elsewhere"), self.directory)
            storage = CheckpointStorage.named("scan-100")
            self.assertEqual(storage.path,
                             os.path.join(self.directory, "scan-100.json"))
        with mock.patch.dict(os.environ, {ENV_CHECKPOINT_DIR: ""}):
            self.assertEqual(checkpoint_dir("/elsewhere"), "/elsewhere")
            self.assertEqual(checkpoint_dir(), os.getcwd())


if __name__ == "__main__":
    unittest.main()
