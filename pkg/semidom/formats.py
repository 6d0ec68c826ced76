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

"""
Reading and writing graphs and reports: the edge-list and graph6 formats,
canonical JSON reports, and the line-delimited catalog export.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator

import networkx as nx
import rfc8785
from pydantic import BaseModel

from semidom.errors import FormatError, GraphError
from semidom.families import FamilyCatalog
from semidom.graph import Graph, build_graph

_logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_ORDER = 62

CATALOG_COLUMNS = ("family", "n", "canonical_code", "status_string", "derivation")


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _parse_int(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise FormatError(f"expected an integer, got {token!r}", line=lineno) from None
    if value < 0:
        raise FormatError(f"negative value {value}", line=lineno)
    return value


def parse_edgelist(text: str) -> Graph:
    """
    Parses an edge list: the order `n` on the first content line, then one
    `u v` pair of 0-based ids per line. `#` starts a comment.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 1:
                raise FormatError(f"expected the vertex count, got {line!r}", line=lineno)
            n = _parse_int(tokens[0], lineno)
            continue

        if len(tokens) != 2:
            raise FormatError(f"expected an edge 'u v', got {line!r}", line=lineno)
        u, v = (_parse_int(t, lineno) for t in tokens)
        if u >= n or v >= n:
            raise FormatError(f"vertex {max(u, v)} out of range for order {n}", line=lineno)
        if u == v:
            raise FormatError(f"self-loop at vertex {u}", line=lineno)
        edges.append((u, v))

    if n is None:
        raise FormatError("empty edge list: missing the vertex count")
    return build_graph(n, edges)


def encode_edgelist(graph: Graph) -> str:
    """
    Encodes `graph` as an edge list accepted by `parse_edgelist`, edges in
    lexicographic order.
    """
    lines = [str(graph.n), *(f"{e.u} {e.v}" for e in graph.sorted_edges)]
    return "\n".join(lines) + "\n"


def parse_graph6(line: str | bytes) -> Graph:
    """
    Decodes one graph6 record with the single-byte order header (`n <= 62`).

    A leading `>>graph6<<` header and surrounding whitespace are ignored.
    """
    data = line.encode() if isinstance(line, str) else line
    data = data.strip()
    if data.startswith(GRAPH6_HEADER.encode()):
        data = data[len(GRAPH6_HEADER) :].strip()
    if not data:
        raise FormatError("empty graph6 record")

    for offset, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise FormatError(f"byte {byte} at offset {offset} is outside the graph6 range")

    n = data[0] - 63
    if n > GRAPH6_MAX_ORDER:
        raise FormatError("only graph6 records with a single-byte order header are supported")
    expected = 1 + -(-(n * (n - 1) // 2) // 6)
    if len(data) != expected:
        raise FormatError(
            f"graph6 record for order {n} needs {expected} bytes, got {len(data)}"
        )

    try:
        return Graph.from_networkx(nx.from_graph6_bytes(data))
    except nx.NetworkXError as e:
        raise FormatError(f"invalid graph6 record: {e}") from e


def encode_graph6(graph: Graph) -> str:
    """
    Encodes `graph` as a graph6 record without the optional header.
    """
    if graph.n > GRAPH6_MAX_ORDER:
        raise GraphError(f"graph6 encoding supports order at most {GRAPH6_MAX_ORDER}")
    return nx.to_graph6_bytes(graph.to_networkx(), header=False).strip().decode("ascii")


def read_graph6_stream(lines: Iterable[str | bytes]) -> Iterator[Graph]:
    """
    Decodes a graph6 stream with one record per line, skipping blank lines
    and bare `>>graph6<<` header lines. Errors carry the 1-based line number.
    """
    for lineno, line in enumerate(lines, start=1):
        text = line.decode("ascii", "replace") if isinstance(line, bytes) else line
        if text.strip() in ("", GRAPH6_HEADER):
            continue
        try:
            yield parse_graph6(line)
        except FormatError as e:
            raise FormatError(str(e), line=lineno) from e


def emit_report(report: BaseModel) -> str:
    """
    Serializes a result model as canonical JSON: keys in lexicographic order,
    no insignificant whitespace.
    """
    return rfc8785.dumps(report.model_dump(mode="json")).decode()


def export_catalog(catalog: FamilyCatalog) -> str:
    """
    Exports `catalog` as tab-separated records, one per labeled member, after
    a header line naming the columns.
    """
    lines = ["\t".join(CATALOG_COLUMNS)]
    for member in catalog:
        lines.append(
            "\t".join(
                (
                    catalog.family.value,
                    str(member.n),
                    member.tree_code,
                    member.representative.status_string,
                    str(member.derivation),
                )
            )
        )
    _logger.debug(f"exported {len(lines) - 1} catalog record(s)")
    return "\n".join(lines) + "\n"
