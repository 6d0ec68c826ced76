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

import itertools
import random
from typing import Callable, Iterator

import networkx as nx
import pytest

from semidom.graph import Graph, build_graph
from semidom.solvers import DominationVariant
from semidom.trees import canonical_code


def _distances(graph: Graph) -> dict[int, dict[int, int]]:
    return dict(nx.all_pairs_shortest_path_length(graph.to_networkx()))


def _satisfies(graph, dist, chosen, variant, exempt=None) -> bool:
    adj = graph.adjacency
    if variant is DominationVariant.TOTAL:
        return all(adj[v] & chosen for v in range(graph.n))
    if not all(v in chosen or adj[v] & chosen for v in range(graph.n)):
        return False
    if variant is DominationVariant.SEMITOTAL:
        for v in chosen:
            if v == exempt:
                continue
            if not any(u != v and dist[v].get(u, graph.n + 1) <= 2 for u in chosen):
                return False
    return True


@pytest.fixture
def naive_optimal_sets() -> Callable:
    """
    Every minimum set of a variant, by enumerating subsets in increasing size.
    """

    def _naive(graph: Graph, variant, exempt=None) -> list[frozenset[int]]:
        variant = DominationVariant(variant)
        dist = _distances(graph)
        for k in range(graph.n + 1):
            found = [
                frozenset(c)
                for c in itertools.combinations(range(graph.n), k)
                if _satisfies(graph, dist, frozenset(c), variant, exempt)
            ]
            if found:
                return found
        return []

    return _naive


@pytest.fixture
def naive_value(naive_optimal_sets) -> Callable:
    def _naive(graph: Graph, variant, exempt=None) -> int:
        return len(naive_optimal_sets(graph, variant, exempt)[0])

    return _naive


@pytest.fixture
def prufer_trees() -> Callable:
    """
    One tree per isomorphism class of order `n`, found by decoding every
    Prüfer sequence and deduplicating on the canonical code.
    """

    def _trees(n: int) -> dict[str, Graph]:
        if n == 2:
            tree = build_graph(2, [(0, 1)])
            return {canonical_code(tree): tree}
        found: dict[str, Graph] = {}
        for seq in itertools.product(range(n), repeat=n - 2):
            tree = Graph.from_networkx(nx.from_prufer_sequence(list(seq)))
            found.setdefault(canonical_code(tree), tree)
        return found

    return _trees


@pytest.fixture
def random_connected_graphs() -> Callable:
    def _graphs(count: int, max_n: int, seed: int = 2026) -> Iterator[Graph]:
        rng = random.Random(seed)
        produced = 0
        while produced < count:
            n = rng.randint(2, max_n)
            g = nx.gnp_random_graph(n, rng.uniform(0.2, 0.7), seed=rng.randrange(1 << 30))
            if nx.is_connected(g):
                produced += 1
                yield Graph.from_networkx(g)

    return _graphs


@pytest.fixture
def connected_graphs() -> Callable:
    """
    Every connected graph of order 3..`max_n` (at most 7), up to isomorphism.
    """

    def _graphs(max_n: int) -> list[Graph]:
        return [
            Graph.from_networkx(g)
            for g in nx.graph_atlas_g()
            if 3 <= g.number_of_nodes() <= max_n and nx.is_connected(g)
        ]

    return _graphs
