#!/usr/bin/env python3
# Copyright 2026 The qnet Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs the documented CLI commands and checks exit codes and outputs."""

import json
import re
import shlex
import shutil
import pathlib
import subprocess
import sys
import tempfile
import unittest

import jsonschema

QNET = ""
ROOT = pathlib.Path(".")


def qnet(*args):
    return subprocess.run([QNET, *map(str, args)], capture_output=True, text=True, timeout=300)


def schema(name):
    return json.loads((ROOT / "schemas" / name).read_text())


def strip_comments(path):
    return [line for line in path.read_text().split("\n") if line.strip() and not line.startswith("#")]


class CliSmoke(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.out = pathlib.Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def test_validate(self):
        r = qnet("validate", ROOT / "networks/ghz_triangle.qnet")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("k=3", r.stdout)
        r = qnet("validate", ROOT / "networks/triangle.qnet")
        self.assertIn("k=2", r.stdout)

    def test_invalid_inputs(self):
        r = qnet("validate", ROOT / "networks/invalid/empty.qnet")
        self.assertEqual(r.returncode, 2)
        self.assertIn("line 1", r.stderr)
        r = qnet("validate", ROOT / "networks/invalid/overlapping.qnet")
        self.assertEqual(r.returncode, 1)
        self.assertIn("OverlappingEdges", r.stderr)
        r = qnet("run", ROOT / "networks/does_not_exist.qnet")
        self.assertNotEqual(r.returncode, 0)

    def test_run_tsv(self):
        r = qnet("run", ROOT / "networks/bell.qnet")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(r.stdout.split("\n")[:2], ["00\t1/2", "11\t1/2"])

    def test_run_json(self):
        for name in ["bell.qnet", "mixed.qnet", "bipartite.qnet"]:
            r = qnet("run", ROOT / "networks" / name, "--oracle", "--format", "json")
            self.assertEqual(r.returncode, 0, r.stderr)
            doc = json.loads(r.stdout)
            jsonschema.validate(doc, schema("run.schema.json"))
            self.assertLess(doc["max_deviation"], 1e-9)
            total = sum(
                int(e["probability"].split("/")[0]) / int(e["probability"].split("/")[1]) for e in doc["entries"]
            )
            self.assertAlmostEqual(total, 1.0, places=12)

    def test_lhv(self):
        r = qnet("lhv", ROOT / "networks/triangle.qnet")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("equal: true", r.stdout)
        r = qnet("lhv", ROOT / "networks/bipartite.qnet")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("canonicalized true", r.stdout)
        model = self.out / "model.txt"
        r = qnet("lhv", ROOT / "networks/bell.qnet", "--emit-model", model)
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertTrue(model.read_text().strip())
        r = qnet("lhv", ROOT / "networks/mixed.qnet")
        self.assertEqual(r.returncode, 1)
        self.assertIn("MixedSourcePresent", r.stderr)

    def test_reduce(self):
        reduced = self.out / "reduced.qnet"
        r = qnet("reduce", ROOT / "networks/ghz_triangle.qnet", "-o", reduced)
        self.assertEqual(r.returncode, 0, r.stderr)
        r = qnet("validate", reduced)
        self.assertIn("k=2", r.stdout)

    def test_verify_reduction(self):
        r = qnet("verify-reduction", ROOT / "networks/ghz_triangle.qnet")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("equal: true", r.stdout)
        self.assertIn("postselect_prob 1/64", r.stdout)
        r = qnet("verify-reduction", ROOT / "networks/ghz_triangle.qnet", "--format", "json")
        doc = json.loads(r.stdout)
        jsonschema.validate(doc, schema("reduction.schema.json"))
        self.assertEqual(doc["postselect_prob"], "1/64")
        self.assertEqual((doc["k_before"], doc["k_after"]), (3, 2))

    def test_witness(self):
        r = qnet("witness", "magic-square", "--bound")
        self.assertEqual(r.returncode, 0, r.stderr)
        lines = dict(line.split(" ", 1) for line in r.stdout.strip().split("\n"))
        self.assertEqual(lines["quantum_value"], "1/1")
        self.assertEqual(lines["nonlocal"], "true")
        spec_dir = self.out / "ms"
        r = qnet("witness", "magic-square", "--emit-spec", spec_dir)
        self.assertEqual(r.returncode, 0, r.stderr)
        for name in ["magic_square.qnet", "alice.post", "bob.post"]:
            self.assertEqual(strip_comments(spec_dir / name), strip_comments(ROOT / "networks" / name))
        r = qnet("lhv", ROOT / "networks/magic_square.qnet")
        self.assertEqual(r.returncode, 1)
        self.assertIn("MixedSourcePresent", r.stderr)

    def test_check_channel(self):
        expected = {"dephasing.chan": "true", "bit_flip.chan": "true", "hadamard.chan": "false"}
        for name, verdict in expected.items():
            r = qnet("check-channel", ROOT / "channels" / name)
            self.assertEqual(r.returncode, 0, r.stderr)
            self.assertIn("simulatable " + verdict, r.stdout)

    def test_shipped_networks_validate(self):
        for path in sorted((ROOT / "networks").glob("*.qnet")):
            r = qnet("validate", path)
            self.assertEqual(r.returncode, 0, f"{path}: {r.stderr}")

    def test_readme_commands(self):
        readme = (ROOT / "README.md").read_text()
        blocks = re.findall(r"```sh\n(.*?)```", readme, re.S)
        commands = [line for block in blocks for line in block.splitlines() if line.startswith("qnet ")]
        self.assertGreater(len(commands), 5)
        for sub in ["networks", "channels"]:
            shutil.copytree(ROOT / sub, self.out / sub)
        for line in commands:
            args = shlex.split(line)[1:]
            r = subprocess.run([QNET, *args], capture_output=True, text=True, cwd=self.out, timeout=300)
            self.assertEqual(r.returncode, 0, f"{line}: {r.stderr}")

    def test_gen_random_network(self):
        a, b = self.out / "a.qnet", self.out / "b.qnet"
        for path in (a, b):
            r = qnet("gen-random-network", "--kind", "canonical", "--seed", 9, "-o", path)
            self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(a.read_text(), b.read_text())
        r = qnet("lhv", a)
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("equal: true", r.stdout)


if __name__ == "__main__":
    QNET, ROOT = str(pathlib.Path(sys.argv[1]).resolve()), pathlib.Path(sys.argv[2])
    unittest.main(argv=sys.argv[:1], verbosity=2)
