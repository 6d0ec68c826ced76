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

import json

import pytest

from semidom.formats import CATALOG_COLUMNS


class TestGenerate:
    def test_stdout(self, capsys, semidom):
        semidom("generate", "--family", "U", "--max-n", "8")

        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "\t".join(CATALOG_COLUMNS)
        assert lines[1].split("\t")[:2] == ["U", "3"]
        assert any(line.endswith("\tCACBBCAC\tP3@0") for line in lines)

    def test_out_file(self, capsys, caplog, semidom, tmp_path):
        out = tmp_path / "t1.tsv"
        semidom("generate", "--family", "T1", "--max-n", "7", "--out", str(out))

        assert capsys.readouterr().out == ""
        records = out.read_text().splitlines()[1:]
        assert records
        assert all(r.startswith("T1\t") for r in records)
        assert f"wrote {len(records)} member(s)" in caplog.text

    def test_below_seed(self, capsys, semidom):
        semidom("generate", "--family", "T", "--max-n", "5")

        assert capsys.readouterr().out == "\t".join(CATALOG_COLUMNS) + "\n"

    def test_unknown_family(self, semidom):
        with pytest.raises(SystemExit) as exc_info:
            semidom("generate", "--family", "V", "--max-n", "5")
        assert exc_info.value.code == 2


class TestRecognize:
    def test_member(self, capsys, semidom, asset_graph):
        semidom("recognize", "--family", "U", "--input", asset_graph("p8.edgelist"))

        report = json.loads(capsys.readouterr().out)
        assert report["family"] == "U"
        assert report["status"] == "CACBBCAC"
        assert report["derivation"] == "P3@0"
        assert sorted(report["vertex_map"]) == list(range(8))

    def test_non_member(self, caplog, semidom, asset_graph):
        with pytest.raises(SystemExit) as exc_info:
            semidom("recognize", "--family", "U", "--input", asset_graph("p7.edgelist"))

        assert exc_info.value.code == 1
        assert "no labeling places this tree in family U" in caplog.text

    def test_not_a_tree(self, caplog, semidom, asset_graph):
        with pytest.raises(SystemExit) as exc_info:
            semidom("recognize", "--family", "T", "--input", asset_graph("k5.edgelist"))

        assert exc_info.value.code == 2
        assert "connected and acyclic" in caplog.text

    def test_order_cap(self, caplog, semidom, asset_graph):
        with pytest.raises(SystemExit) as exc_info:
            semidom(
                "recognize",
                "--family",
                "U",
                "--n-cap",
                "7",
                "--input",
                asset_graph("p8.edgelist"),
            )

        assert exc_info.value.code == 2
        assert "recognition cap 7" in caplog.text


class TestAlmostSds:
    @pytest.mark.parametrize(("vertex", "expected"), [("1", [1, 4, 6]), ("6", [1, 3, 6])])
    def test_p8(self, capsys, semidom, asset_graph, vertex, expected):
        semidom("almost-sds", "--input", asset_graph("p8.edgelist"), "--vertex", vertex)

        report = json.loads(capsys.readouterr().out)
        assert report == {
            "used_fallback": False,
            "vertex": int(vertex),
            "vertices": expected,
        }

    def test_not_in_family(self, caplog, semidom, asset_graph):
        with pytest.raises(SystemExit) as exc_info:
            semidom("almost-sds", "--input", asset_graph("p8.edgelist"), "--vertex", "3")

        assert exc_info.value.code == 2
        assert "gives vertex 3 status A" in caplog.text
