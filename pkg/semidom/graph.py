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
Simple undirected graphs on dense vertex ids, and the structural queries and
transforms the rest of `semidom` is built on.
"""

from __future__ import annotations

import enum
import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property

import networkx as nx
from pydantic import BaseModel, ConfigDict

from semidom._internal.search import bits
from semidom.errors import DisconnectedGraph, GraphError

_logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Edge:
    """
    An undirected edge, stored normalized so that `u < v`.
    """

    u: int
    v: int

    def __post_init__(self) -> None:
        """
        Rejects self-loops and unnormalized endpoints.
        """
        if self.u == self.v:
            raise GraphError(f"self-loop at vertex {self.u}")
        if self.u > self.v:
            raise GraphError(f"edge ({self.u}, {self.v}) is not normalized")

    @classmethod
    def of(cls, u: int, v: int) -> Edge:
        """
        Returns the normalized edge joining `u` and `v`, in either order.
        """
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        return cls(min(u, v), max(u, v))

    def __iter__(self) -> Iterator[int]:
        """
        Iterates over the two endpoints, smaller first.
        """
        yield self.u
        yield self.v

    def __str__(self) -> str:
        """
        Returns the `u,v` form used on the command line.
        """
        return f"{self.u},{self.v}"


class Graph:
    """
    An immutable simple undirected graph on the vertices `0..n-1`.

    Use `build_graph` to construct one from untrusted input; the constructor
    performs the same validation.
    """

    def __init__(self, n: int, edges: Iterable[Edge]):
        """
        Create a new `Graph` of order `n` from normalized edges.

        Duplicates are collapsed; endpoints must be below `n`.
        """
        if n < 0:
            raise GraphError(f"negative vertex count: {n}")

        edge_set = frozenset(edges)
        for edge in edge_set:
            if edge.v >= n:
                raise GraphError(f"vertex {edge.v} out of range for order {n}")

        self._n = n
        self._edges = edge_set

    @property
    def n(self) -> int:
        """
        The order (vertex count) of this graph.
        """
        return self._n

    @property
    def edges(self) -> frozenset[Edge]:
        """
        The edge set of this graph.
        """
        return self._edges

    @property
    def size(self) -> int:
        """
        The number of edges of this graph.
        """
        return len(self._edges)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        """
        The edges in lexicographic `(u, v)` order.
        """
        return tuple(sorted(self._edges))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """
        The open neighborhood of each vertex, indexed by vertex id.
        """
        adj: list[set[int]] = [set() for _ in range(self._n)]
        for edge in self._edges:
            adj[edge.u].add(edge.v)
            adj[edge.v].add(edge.u)
        return tuple(frozenset(nbrs) for nbrs in adj)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """
        The open neighborhood of each vertex as an integer bitmask.
        """
        masks = [0] * self._n
        for edge in self._edges:
            masks[edge.u] |= 1 << edge.v
            masks[edge.v] |= 1 << edge.u
        return tuple(masks)

    def neighbors(self, v: int) -> frozenset[int]:
        """
        Returns the open neighborhood of `v`.
        """
        self.check_vertex(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        """
        Returns the degree of `v`.
        """
        return len(self.neighbors(v))

    def degrees(self) -> list[int]:
        """
        Returns the degree sequence, indexed by vertex id.
        """
        return [len(nbrs) for nbrs in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        """
        Returns whether `u` and `v` are adjacent.
        """
        return u != v and Edge.of(u, v) in self._edges

    def check_vertex(self, v: int) -> None:
        """
        Raises `GraphError` unless `v` is a vertex of this graph.
        """
        if not 0 <= v < self._n:
            raise GraphError(f"vertex {v} out of range for order {self._n}")

    def isolated_vertices(self) -> list[int]:
        """
        Returns the vertices of degree zero.
        """
        return [v for v, nbrs in enumerate(self.adjacency) if not nbrs]

    def to_networkx(self) -> nx.Graph:
        """
        Returns this graph as a `networkx.Graph` whose nodes are `0..n-1`,
        inserted in id order.
        """
        g = nx.Graph()
        g.add_nodes_from(range(self._n))
        g.add_edges_from((e.u, e.v) for e in self.sorted_edges)
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> Graph:
        """
        Creates a `Graph` from a `networkx.Graph`, numbering nodes in
        iteration order.
        """
        index = {node: i for i, node in enumerate(g.nodes)}
        return cls(len(index), (Edge.of(index[a], index[b]) for a, b in g.edges))

    def __eq__(self, other: object) -> bool:
        """
        Graphs are equal when they have the same order and edge set.
        """
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        """
        Returns a hash consistent with `__eq__`.
        """
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        """
        Returns a compact debugging representation.
        """
        edges = " ".join(f"{e.u}-{e.v}" for e in self.sorted_edges)
        return f"Graph(n={self._n}, edges=[{edges}])"


class GraphKind(str, enum.Enum):
    """
    The named graph families understood by `named_graph`.
    """

    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete_bipartite"
    STAR = "star"
    WHEEL = "wheel"


class StructuralProfile(BaseModel):
    """
    Leaves, support vertices, universal vertices and distance metrics of a graph.
    """

    model_config = ConfigDict(frozen=True)

    leaves: frozenset[int]
    supports: frozenset[int]
    universal: frozenset[int]
    diameter: int | None
    """
    The diameter, or `None` when the graph is empty or disconnected.
    """
    is_tree: bool
    is_star: bool
    is_connected: bool


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """
    Builds a normalized simple `Graph` of order `n` from endpoint pairs.

    Duplicate edges (in either orientation) are collapsed. Self-loops and
    out-of-range endpoints raise `GraphError`.
    """
    normalized = []
    for u, v in edges:
        if u < 0 or v < 0 or u >= n or v >= n:
            raise GraphError(f"edge ({u}, {v}) has an endpoint out of range for order {n}")
        normalized.append(Edge.of(u, v))
    return Graph(n, normalized)


_MINIMUMS = {
    GraphKind.PATH: 1,
    GraphKind.CYCLE: 3,
    GraphKind.COMPLETE: 1,
    GraphKind.COMPLETE_BIPARTITE: 1,
    GraphKind.STAR: 1,
    GraphKind.WHEEL: 3,
}


def named_graph(kind: GraphKind | str, *params: int) -> Graph:
    """
    Builds a standard graph.

    `path`, `cycle` and `complete` take the order; `complete_bipartite` takes
    the two part sizes; `star` takes the number of leaves; `wheel` takes the
    rim length `n`, giving a hub joined to every vertex of `C_n` (order
    `n + 1`, so `wheel 3` is `K_4`). Hubs and star centers are vertex `0`.
    """
    kind = GraphKind(kind)
    arity = 2 if kind is GraphKind.COMPLETE_BIPARTITE else 1
    if len(params) != arity:
        raise GraphError(f"{kind.value} takes {arity} size parameter(s), got {len(params)}")
    minimum = _MINIMUMS[kind]
    for p in params:
        if p < minimum:
            raise GraphError(f"{kind.value} parameter must be at least {minimum}, got {p}")

    if kind is GraphKind.PATH:
        g = nx.path_graph(params[0])
    elif kind is GraphKind.CYCLE:
        g = nx.cycle_graph(params[0])
    elif kind is GraphKind.COMPLETE:
        g = nx.complete_graph(params[0])
    elif kind is GraphKind.COMPLETE_BIPARTITE:
        g = nx.complete_bipartite_graph(params[0], params[1])
    elif kind is GraphKind.STAR:
        g = nx.star_graph(params[0])
    else:
        g = nx.wheel_graph(params[0] + 1)

    return Graph.from_networkx(g)


def structural_profile(graph: Graph) -> StructuralProfile:
    """
    Computes the structural profile of `graph`.

    Disconnected graphs are reported with `is_connected=False` and a `None`
    diameter rather than raising.
    """
    n = graph.n
    degrees = graph.degrees()
    leaves = frozenset(v for v in range(n) if degrees[v] == 1)
    supports = frozenset(u for v in leaves for u in graph.adjacency[v])
    universal = frozenset(v for v in range(n) if degrees[v] == n - 1)

    connected = is_connected(graph)
    diameter = nx.diameter(graph.to_networkx()) if connected else None
    is_tree = connected and graph.size == n - 1
    is_star = is_tree and n >= 2 and bool(universal)

    return StructuralProfile(
        leaves=leaves,
        supports=supports,
        universal=universal,
        diameter=diameter,
        is_tree=is_tree,
        is_star=is_star,
        is_connected=connected,
    )


def is_connected(graph: Graph) -> bool:
    """
    Returns whether `graph` is nonempty and connected.
    """
    if graph.n == 0:
        return False
    masks = graph.neighbor_masks
    reached = frontier = 1
    while frontier:
        step = 0
        for v in bits(frontier):
            step |= masks[v]
        frontier = step & ~reached
        reached |= frontier
    return reached == (1 << graph.n) - 1


def is_tree(graph: Graph) -> bool:
    """
    Returns whether `graph` is a tree.
    """
    return graph.size == graph.n - 1 and is_connected(graph)


def require_connected(graph: Graph) -> None:
    """
    Raises `DisconnectedGraph` unless `graph` is connected.
    """
    if not is_connected(graph):
        raise DisconnectedGraph(f"graph of order {graph.n} is not connected")


def subdivide_edge(graph: Graph, edge: Edge | tuple[int, int], k: int) -> Graph:
    """
    Replaces `edge` by a path through `k` fresh vertices.

    The fresh vertices get ids `n, n+1, ..., n+k-1`, with `n` adjacent to the
    edge's smaller endpoint. The input graph is not modified.
    """
    if not isinstance(edge, Edge):
        edge = Edge.of(*edge)
    if edge not in graph.edges:
        raise GraphError(f"edge {edge} is not in the graph")
    if k < 1:
        raise GraphError(f"subdivision count must be positive, got {k}")

    n = graph.n
    path = [edge.u, *range(n, n + k), edge.v]
    new_edges = set(graph.edges)
    new_edges.discard(edge)
    new_edges.update(Edge.of(a, b) for a, b in zip(path, path[1:]))

    _logger.debug(f"subdivided {edge} {k} time(s): order {n} -> {n + k}")
    return Graph(n + k, new_edges)
