# Copyright 2026 The BendForge Authors.
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

import json
import os
import subprocess

import pytest

from conftest import FIXTURES

EXE = os.environ.get("BENDFORGE_EXE")
pytestmark = pytest.mark.skipif(not EXE, reason="BENDFORGE_EXE not set")


def run(*args, cwd=None):
    return subprocess.run([EXE, *map(str, args)], capture_output=True, text=True, cwd=cwd)


def test_label_flat_sheet():
    r = run("label", FIXTURES / "flat_sheet.json")
    assert r.returncode == 0, r.stderr
    out = json.loads(r.stdout)
    assert out["labels"]["complexity"]["mass_kg"]["value"] == pytest.approx(0.7065)
    assert out["labels"]["complexity"]["unfolded_bbox_area_cm2"]["value"] == pytest.approx(300.0)


def test_unfold_wrap_around(tmp_path):
    r = run("unfold", FIXTURES / "wrap_around.json", "--out", tmp_path)
    assert r.returncode == 0, r.stderr
    out = json.loads(r.stdout)
    assert out["overlap"] is True
    assert (tmp_path / "wrap_around.flat.stl").read_text().startswith("solid wrap_around_flat")


def test_sweep_writes_meshes(tmp_path):
    r = run("sweep", FIXTURES / "tall_flange.json", "--bend", 1, "--out", tmp_path)
    assert r.returncode == 0, r.stderr
    out = json.loads(r.stdout)
    right = [s for s in out["steps"] if s["alignment"] == "right"]
    assert right and not any(s["punch"] for s in right)
    assert out["record"]["collides"] is False
    assert any(p.name.startswith("punch_left_") for p in tmp_path.iterdir())


def test_validate_exit_codes(tmp_path):
    assert run("validate", FIXTURES / "single_flange.json").returncode == 0
    bad = run("validate", FIXTURES / "repeated_edge.json")
    assert bad.returncode == 4
    assert json.loads(bad.stderr)["error"]["kind"] == "invalid_design"
    missing = run("validate", tmp_path / "nope.json")
    assert missing.returncode == 2
    assert run("gen", "--set", "gen.bogus=1").returncode == 2
    assert run("frobnicate").returncode == 2


def test_gen_is_reproducible_and_stats_reads_it(tmp_path):
    args = ["--set", "subset.min_bends=2", "--set", "subset.max_bends=2", "--set", "subset.quota=2",
            "--set", "subset.name=cli", "--seed", 5, "-q"]
    a = run("gen", *args, "--out", tmp_path / "a", "--workers", 1)
    b = run("gen", *args, "--out", tmp_path / "b", "--workers", 3)
    assert a.returncode == 0 and b.returncode == 0, a.stderr + b.stderr
    ma = (tmp_path / "a" / "cli" / "manifest.jsonl").read_bytes()
    assert ma == (tmp_path / "b" / "cli" / "manifest.jsonl").read_bytes()
    assert (tmp_path / "a" / "cli" / "summary.csv").exists()
    s = run("stats", tmp_path / "a" / "cli" / "manifest.jsonl")
    assert s.returncode == 0, s.stderr
    assert json.loads(s.stdout)["null_classifier"]["auc"] == 0.5


def test_gen_starvation_exit_code(tmp_path):
    r = run("gen", "--set", "subset.min_bends=2", "--set", "subset.max_bends=2", "--set", "subset.quota=50",
            "--set", "subset.starvation_factor=0.1", "-q", "--out", tmp_path)
    assert r.returncode == 3
    assert json.loads(r.stderr.strip().splitlines()[-1])["error"]["kind"] == "starvation"
