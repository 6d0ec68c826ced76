# Copyright 2026 The semidom Authors
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

from pathlib import Path
from typing import Callable

import pytest

from semidom._cli import main


@pytest.fixture
def asset_graph(asset):
    def _asset(name: str) -> str:
        return str(asset(f"graphs/{name}"))

    return _asset


@pytest.fixture
def edgelist(tmp_path) -> Callable:
    """
    Writes an edge list to a temporary file and returns its path.
    """

    def _edgelist(text: str) -> str:
        path: Path = tmp_path / "input.edgelist"
        path.write_text(text)
        return str(path)

    return _edgelist


@pytest.fixture(scope="function")
def semidom() -> Callable:
    def _semidom(*args: str):
        main(list(args))

    return _semidom
