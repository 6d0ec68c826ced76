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
import random

import networkx as nx
import pytest

from semidom.errors import FormatError, GraphError
from semidom.families import generate_family
from semidom.formats import (
    CATALOG_COLUMNS,
    emit_report,
    encode_edgelist,
    encode_graph6,
    export_catalog,
    parse_edgelist,
    parse_graph6,
    read_graph6_stream,
)
from semidom.graph import Graph, GraphKind, build_graph, named_graph
from semidom.solvers import DominationVariant, min_set
from semidom.subdivision import msd_semitotal
from semidom.trees import enumerate_trees


class TestEdgelist:
    def test_parse_asset(self, asset):
        graph = parse_edgelist(asset("graphs/p6.edgelist").read_text())
        assert graph == named_graph(GraphKind.PATH, 6)

    def test_comments_and_duplicates(self):
        graph = parse_edgelist("# header\n3  # order\n0 1\n1 0\n\n1 2\n")
        assert graph == named_graph(GraphKind.PATH, 3)

    def test_isolated_vertices(self):
        graph = parse_edgelist("4\n0 1\n")
        assert graph.isolated_vertices() == [2, 3]

    @pytest.mark.parametrize(
        ("text", "line", "message"),
        [
            ("", None, "missing the vertex count"),
            ("3 4\n", 1, "vertex count"),
            ("x\n", 1, "expected an integer"),
            ("3\n0 1 2\n", 2, "expected an edge"),
            ("3\n0 3\n", 2, "out of range"),
            ("3\n1 1\n", 2, "self-loop"),
            ("3\n# note\n0 -1\n", 3, "negative"),
        ],
    )
    def test_errors(self, text, line, message):
        with pytest.raises(FormatError, match=message) as exc_info:
            parse_edgelist(text)
        assert exc_info.value.line == line

    def test_error_diagnostics(self, asset):
        with pytest.raises(FormatError) as exc_info:
            parse_edgelist(asset("graphs/out-of-range.edgelist").read_text())
        assert exc_info.value.diagnostics().startswith("malformed input at line 2:")
        assert exc_info.value.exit_code == 2

    def test_encode(self):
        graph = build_graph(4, [(2, 3), (1, 0), (0, 2)])
        assert encode_edgelist(graph) == "4\n0 1\n0 2\n2 3\n"
        assert parse_edgelist(encode_edgelist(graph)) == graph


class TestGraph6:
    @pytest.mark.parametrize(
        ("record", "expected"),
        [
            ("A_", build_graph(2, [(0, 1)])),
            ("Bg", named_graph(GraphKind.PATH, 3)),
            ("Ch", named_graph(GraphKind.PATH, 4)),
            (b"C~\n", named_graph(GraphKind.COMPLETE, 4)),
            (">>graph6<<Cs", named_graph(GraphKind.STAR, 3)),
        ],
    )
    def test_parse(self, record, expected):
        assert parse_graph6(record) == expected

    @pytest.mark.parametrize(
        ("record", "message"),
        [
            ("", "empty"),
            ("C h", "outside the graph6 range"),
            ("Cé", "outside the graph6 range"),
            ("Chh", "needs 2 bytes"),
            ("~?@d", "single-byte order header"),
        ],
    )
    def test_errors(self, record, message):
        with pytest.raises(FormatError, match=message):
            parse_graph6(record)

    def test_encode(self):
        assert encode_graph6(named_graph(GraphKind.PATH, 4)) == "Ch"
        graph = named_graph(GraphKind.WHEEL, 6)
        assert parse_graph6(encode_graph6(graph)) == graph

    def test_encode_rejects_large_orders(self):
        with pytest.raises(GraphError):
            encode_graph6(named_graph(GraphKind.PATH, 63))

    def test_stream(self, asset):
        with asset("graphs/small.g6").open() as io:
            graphs = list(read_graph6_stream(io))
        assert [g.n for g in graphs] == [3, 3, 4, 4, 4, 4]
        assert graphs[-1] == named_graph(GraphKind.CYCLE, 4)

    def test_stream_error_line(self):
        with pytest.raises(FormatError) as exc_info:
            list(read_graph6_stream(["Bg", "", "Bgg"]))
        assert exc_info.value.line == 3

    @pytest.mark.parametrize(
        "lines",
        [
            [">>graph6<<\n", "A_\n"],
            [b">>graph6<<\n", b"A_\n"],
            ["  >>graph6<<  ", "", ">>graph6<<A_"],
        ],
    )
    def test_stream_skips_header_lines(self, lines):
        assert list(read_graph6_stream(lines)) == [named_graph(GraphKind.COMPLETE, 2)]


def _random_graphs(count: int, max_n: int, seed: int = 13) -> list[Graph]:
    rng = random.Random(seed)
    return [
        Graph.from_networkx(
            nx.gnp_random_graph(rng.randint(1, max_n), rng.random(), seed=rng.randrange(1 << 30))
        )
        for _ in range(count)
    ]


class TestRoundTrips:
    @pytest.mark.parametrize("n", range(1, 11))
    def test_trees(self, n):
        for tree in enumerate_trees(n):
            assert parse_graph6(encode_graph6(tree)) == tree
            assert parse_edgelist(encode_edgelist(tree)) == tree

    def test_random_graphs(self):
        for graph in _random_graphs(500, 20):
            assert parse_graph6(encode_graph6(graph)) == graph
            assert parse_edgelist(encode_edgelist(graph)) == graph


class TestReports:
    def test_msd_report(self):
        report = json.loads(emit_report(msd_semitotal(named_graph(GraphKind.COMPLETE, 5))))
        assert report["k"] == 3
        assert report["witness_edge"] == [0, 1]
        assert report["base_value"] == 2
        assert [level["k"] for level in report["table"]] == [1, 2, 3]

    def test_canonical_form(self):
        text = emit_report(min_set(named_graph(GraphKind.PATH, 6), DominationVariant.SEMITOTAL))
        assert " " not in text
        assert text.startswith('{"explored":')
        assert '"variant":"gamma-t2"' in text
        assert '"witness":[1,2,4]' in text


class TestExportCatalog:
    def test_empty(self):
        text = export_catalog(generate_family("U", 2))
        assert text == "\t".join(CATALOG_COLUMNS) + "\n"

    def test_records(self):
        lines = export_catalog(generate_family("U", 8)).splitlines()
        assert lines[0].split("\t") == list(CATALOG_COLUMNS)
        records = [line.split("\t") for line in lines[1:]]
        assert [r[1] for r in records] == sorted((r[1] for r in records), key=int)
        assert records[0][3:] == ["CAC", "-"]
        assert ["U", "8", "CACBBCAC", "P3@0"] in [[r[0], r[1], r[3], r[4]] for r in records]
