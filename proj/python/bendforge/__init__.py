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

"""Sheet-metal bending simulator and dataset generator."""

import json

from . import _core
from ._core import (
    ConfigError,
    ConstructionError,
    SampleAborted,
    SchemaError,
    bend_allowance,
    derive_part_seed,
)

__all__ = [
    "ConfigError",
    "ConstructionError",
    "SampleAborted",
    "SchemaError",
    "bend_allowance",
    "build_subset",
    "config_hash",
    "default_config",
    "derive_part_seed",
    "folded_stl",
    "label",
    "sample_part",
    "stats",
    "unfold",
    "validate",
]


def _text(obj):
    if obj is None:
        return ""
    return obj if isinstance(obj, str) else json.dumps(obj)


def default_config():
    return json.loads(_core.default_config())


def config_hash(config=None, overrides=()):
    return _core.config_hash(_text(config), list(overrides))


def validate(design):
    """List of violations; empty when the design is valid."""
    return json.loads(_core.validate(_text(design)))


def label(design, config=None):
    return json.loads(_core.label(_text(design), _text(config)))


def unfold(design, config=None):
    return json.loads(_core.unfold(_text(design), _text(config)))


def folded_stl(design, arc_step_deg=5.0):
    return _core.folded_stl(_text(design), arc_step_deg)


def sample_part(seed, n_bends, config=None):
    return json.loads(_core.sample_part(seed, n_bends, _text(config)))


def build_subset(config=None, overrides=(), workers=1, write_files=True):
    """Build a subset; returns the manifest as a list of JSON rows."""
    text = _core.build_subset(_text(config), list(overrides), workers, write_files)
    return [json.loads(line) for line in text.splitlines() if line]


def stats(manifest):
    if not isinstance(manifest, str):
        manifest = "\n".join(json.dumps(row) for row in manifest) + "\n"
    return json.loads(_core.stats(manifest))
