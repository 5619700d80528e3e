#! /usr/bin/env python
# -*- encoding: utf-8 -*-
# vim:fenc=utf-8:

import io
import os
import json
import shutil
import tempfile
import unittest
from contextlib import redirect_stdout, redirect_stderr

from dedelab.log import DedelabLog
from dedelab.shell import DedelabShell, Report, EVENT_RESULT, EXIT_OK, \
                          EXIT_FAILURE, EXIT_USAGE
from dedelab.mixins import ShellFactory, ALL_MIXINS
from dedelab.errors import UsageError
from dedelab import scripts


def make_shell(mixins=ALL_MIXINS, options=None, **kw):
    Shell = ShellFactory(options)(mixins)
    stdout = io.StringIO()
    kw.setdefault("format", "json")
    shell = Shell(log=DedelabLog(stream=io.StringIO()), stdout=stdout, **kw)
    return shell, stdout


class TestReport(unittest.TestCase):

    def testFormats(self):
        report = Report("x", {"a": 1, "b": {"c": [1, 2]}, "d": None})
        self.assertEqual(json.loads(report.render("json")),
                         {"a": 1, "b": {"c": [1, 2]}, "d": None})
        self.assertEqual(report.render("text"), "a: 1\nb.c: 1 2\nd: null")
        self.assertEqual(report.render("csv"),
                         "key,value\na,1\nb.c,1 2\nd,null")

    def testRows(self):
        report = Report("x", {}, rows=[("p", "value"), (7, "1/14")])
        self.assertEqual(report.render("csv"), "p,value\n7,1/14")
        self.assertEqual(report.render("text"), "p  value\n7  1/14")


class TestShell(unittest.TestCase):

    def testDedekind(self):
        shell, stdout = make_shell()
        self.assertEqual(shell.execute(["dedekind", "2", "7"]), EXIT_OK)
        data = json.loads(stdout.getvalue())
        self.assertEqual(data["value"], "1/14")
        self.assertEqual(data["method"], "fast")

        shell, stdout = make_shell(format="text")
        self.assertEqual(shell.execute(["dedekind", "2", "127", "--naive"]),
                         EXIT_OK)
        self.assertTrue("value: 1281/254" in stdout.getvalue())

    def testUsage(self):
        shell, stdout = make_shell()
        self.assertEqual(shell.execute([]), EXIT_USAGE)
        self.assertEqual(shell.execute(["nope"]), EXIT_USAGE)
        self.assertEqual(shell.execute(["dedekind", "2"]), EXIT_USAGE)
        self.assertEqual(shell.execute(["dedekind", "2", "4"]), EXIT_USAGE)
        self.assertEqual(shell.execute(["oracle", "nope"]), EXIT_USAGE)
        self.assertEqual(stdout.getvalue(), "")
        self.assertRaises(UsageError, make_shell, format="xml")

    def testMoment(self):
        shell, stdout = make_shell()
        self.assertEqual(shell.execute(["moment", "--p", "7", "--order", "3",
                                        "--d0", "3", "--verify"]), EXIT_OK)
        data = json.loads(stdout.getvalue())
        self.assertEqual(data["coefficient"], "16/63")
        self.assertEqual(data["family"], "mersenne")
        self.assertTrue(data["closed_form_match"])
        self.assertTrue(data["oracle_pass"])
        self.assertTrue(data["pass"])

    def testMinusOne(self):
        shell, stdout = make_shell()
        self.assertEqual(shell.execute(["moment", "--p", "7", "--order",
                                        "2"]), EXIT_USAGE)

    def testBoundAndMaxsum(self):
        shell, stdout = make_shell(mixins=("bound",))
        self.assertEqual(shell.execute(["bound", "--p", "7", "--order", "3"]),
                         EXIT_OK)
        self.assertEqual(json.loads(stdout.getvalue())["h_minus_at_most"], 1)

        shell, stdout = make_shell(mixins=("maxsum",))
        self.assertEqual(shell.execute(["maxsum", "1", "2", "5",
                                        "--twisted"]), EXIT_OK)
        data = json.loads(stdout.getvalue())
        self.assertEqual(data["sum"], 18)
        self.assertEqual(data["predicted"], "5/8")

    def testOracle(self):
        shell, stdout = make_shell(mixins=("oracle",))
        self.assertEqual(shell.execute(["oracle", "kernel", "13", "3"]),
                         EXIT_OK)
        data = json.loads(stdout.getvalue())
        self.assertEqual(data["elements"], [1, 3, 9])
        self.assertTrue(data["pass"])

    def testHelp(self):
        shell, stdout = make_shell(format="text")
        self.assertEqual(shell.execute(["help"]), EXIT_OK)
        commands = stdout.getvalue().split()
        for name in ("dedekind", "moment", "scan", "scan-mersenne", "help"):
            self.assertTrue(name in commands, name)

        shell, stdout = make_shell()
        self.assertEqual(shell.execute(["help", "dedekind"]), EXIT_OK)
        data = json.loads(stdout.getvalue())
        self.assertTrue(data["usage"].startswith("usage: dedekind"))
        self.assertEqual(shell.execute(["help", "nope"]), EXIT_FAILURE)

    def testHandlers(self):
        shell, stdout = make_shell(mixins=("dedekind",))
        seen = []
        handler = lambda request, report: seen.append((request.command,
                                                       report.passed))
        shell.register_handler(EVENT_RESULT, handler)
        shell.execute(["dedekind", "1", "1"])
        shell.unregister_handler(EVENT_RESULT, handler)
        shell.execute(["dedekind", "1", "1"])
        self.assertEqual(seen, [("dedekind", True)])

    def testRegisterCommand(self):
        shell = DedelabShell(stdout=io.StringIO(), format="json",
                             log=DedelabLog(stream=io.StringIO()))
        shell.register_command("failing", lambda msg, args:
                               Report("failing", {}, False))
        self.assertEqual(shell.execute(["failing"]), EXIT_FAILURE)

    def testOptions(self):
        shell, stdout = make_shell(options={"dedekind":
                                            {"naive_max_modulus": "10"}})
        self.assertEqual(shell.naive_max_modulus, 10)
        self.assertEqual(shell.execute(["dedekind", "2", "127", "--naive"]),
                         EXIT_USAGE)


class TestScanCommand(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def testScan(self):
        path = os.path.join(self.directory, "records.csv")
        shell, stdout = make_shell(out=path, settings={
            "checkpoint_dir": self.directory})
        self.assertEqual(shell.execute(["scan", "130", "--threshold",
                                        "0.08"]), EXIT_OK)
        data = json.loads(stdout.getvalue())
        self.assertEqual(data["max_record"]["p"], 127)
        with open(path) as fd:
            lines = fd.read().splitlines()
        self.assertEqual(lines[0], "p,d,h,s_num,s_den,q_ratio")
        self.assertEqual(len(lines) - 1, data["emitted"])
        self.assertTrue(os.path.isfile(os.path.join(self.directory,
                                                    "scan-130.json")))

    def testMersenne(self):
        shell, stdout = make_shell(mixins=("scan",))
        self.assertEqual(shell.execute(["scan-mersenne", "--d", "3", "5", "7",
                                        "--d0", "1"]), EXIT_OK)
        fits = json.loads(stdout.getvalue())["fits"]
        self.assertEqual([(f["a1"], f["a0"]) for f in fits], [("-2", "1")])


class TestScripts(unittest.TestCase):

    def run_main(self, argv):
        stdout, stderr = io.StringIO(), io.StringIO()
        with redirect_stdout(stdout), redirect_stderr(stderr):
            code = scripts.main(argv)
        return code, stdout.getvalue()

    def testMain(self):
        code, out = self.run_main(["--format", "json", "dedekind", "2", "7"])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)["value"], "1/14")

    def testUsage(self):
        self.assertEqual(self.run_main(["--format", "xml", "help"])[0],
                         EXIT_USAGE)
        self.assertEqual(self.run_main(["--config", "/nonexistent.conf",
                                        "help"])[0], EXIT_USAGE)
        self.assertEqual(self.run_main([])[0], EXIT_USAGE)

    def testConfig(self):
        path = os.path.join(tempfile.mkdtemp(), "dedelab.conf")
        self.addCleanup(shutil.rmtree, os.path.dirname(path))
        with open(path, "w") as fd:
            fd.write("[DEFAULT]\nformat = json\nmixins = dedekind\n\n"
                     "[mixin:help]\n")
        code, out = self.run_main(["--config", path, "dedekind", "2", "7"])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)["float"], 1 / 14.0)
        code, out = self.run_main(["--config", path, "help"])
        self.assertEqual(code, EXIT_OK)
        code, out = self.run_main(["--config", path, "moment", "--p", "7"])
        self.assertEqual(code, EXIT_USAGE)


if __name__ == "__main__":
    unittest.main()
