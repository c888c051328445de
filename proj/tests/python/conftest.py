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
import math
import os
import pathlib

import pytest

FIXTURES = pathlib.Path(os.environ.get("BENDFORGE_FIXTURES", pathlib.Path(__file__).parents[1] / "data"))


def design(name):
    return json.loads((FIXTURES / f"{name}.json").read_text())


def value(labels, name):
    for group in labels.values():
        if name in group:
            return group[name]["value"]
    raise KeyError(name)
