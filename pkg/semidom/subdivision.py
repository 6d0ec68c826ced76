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
The semitotal domination multisubdivision number, and the Class 1/2/3
classification of trees built on it.
"""

from __future__ import annotations

import enum
import functools
import logging

from pydantic import BaseModel, ConfigDict

from semidom.errors import GraphError, MsdNotFound, NotATree
from semidom.graph import Edge, Graph, is_tree, require_connected, subdivide_edge
from semidom.solvers import DominationVariant, min_value
from semidom.trees import enumerate_trees

_logger = logging.getLogger(__name__)

DEFAULT_K_MAX = 5


class MsdLevel(BaseModel):
    """
    The range of γ_t2 over all single-edge `k`-fold subdivisions.
    """

    model_config = ConfigDict(frozen=True)

    k: int
    min_value: int
    max_value: int


class MsdResult(BaseModel):
    """
    The multisubdivision number of a graph with its witnessing edge.
    """

    model_config = ConfigDict(frozen=True)

    k: int
    witness_edge: tuple[int, int]
    base_value: int
    table: list[MsdLevel]
    """
    One entry per tried subdivision count, `1..k`.
    """


class TreeClass(enum.IntEnum):
    """
    A tree's class, equal to its multisubdivision number.
    """

    CLASS1 = 1
    CLASS2 = 2
    CLASS3 = 3


def _subdivided_value(graph: Graph, edge: Edge, k: int, base: int) -> int:
    return min_value(subdivide_edge(graph, edge, k), DominationVariant.SEMITOTAL, base)


@functools.lru_cache(maxsize=8192)
def msd_semitotal(graph: Graph, k_max: int = DEFAULT_K_MAX) -> MsdResult:
    """
    Computes the least `k` such that subdividing some single edge `k` times
    strictly increases γ_t2.

    Edges are tried in lexicographic order, so the witness is the least edge
    that increases γ_t2 at the least such `k`. Raises `MsdNotFound` when no
    `k <= k_max` works.
    """
    if k_max < 1:
        raise GraphError(f"k_max must be positive, got {k_max}")
    if graph.n < 2:
        raise GraphError(f"multisubdivision needs order at least 2, got {graph.n}")
    require_connected(graph)

    base = min_value(graph, DominationVariant.SEMITOTAL)
    table: list[MsdLevel] = []
    for k in range(1, k_max + 1):
        values = [
            (edge, _subdivided_value(graph, edge, k, base)) for edge in graph.sorted_edges
        ]
        table.append(
            MsdLevel(
                k=k,
                min_value=min(value for _, value in values),
                max_value=max(value for _, value in values),
            )
        )
        increasing = [edge for edge, value in values if value > base]
        if increasing:
            witness = increasing[0]
            _logger.debug(f"msd = {k} via {witness} on {graph!r}")
            return MsdResult(
                k=k, witness_edge=(witness.u, witness.v), base_value=base, table=table
            )

    raise MsdNotFound(f"no single-edge subdivision with k <= {k_max} increases γ_t2", table)


def classify_tree(tree: Graph) -> TreeClass:
    """
    Returns the class of `tree`, which must have order at least 3.
    """
    if not is_tree(tree):
        raise NotATree(f"graph of order {tree.n} with {tree.size} edges is not a tree")
    if tree.n < 3:
        raise GraphError(f"classification needs order at least 3, got {tree.n}")
    return TreeClass(msd_semitotal(tree, 3).k)


def class_census(n_max: int, n_min: int = 3) -> dict[int, dict[TreeClass, int]]:
    """
    Counts the trees of each order in `n_min..n_max` by class.
    """
    census: dict[int, dict[TreeClass, int]] = {}
    for n in range(max(n_min, 3), n_max + 1):
        counts = dict.fromkeys(TreeClass, 0)
        for tree in enumerate_trees(n):
            counts[classify_tree(tree)] += 1
        census[n] = counts
        _logger.info(f"classified the trees of order {n}")
    return census
