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
Free trees: exhaustive enumeration, AHU canonical codes and explicit
isomorphisms between (optionally vertex-colored) trees.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator, Sequence
from typing import NewType

import networkx as nx

from semidom.errors import GraphError, NotATree
from semidom.graph import Graph, build_graph, is_tree

_logger = logging.getLogger(__name__)

CanonicalCode = NewType("CanonicalCode", str)
"""
A newtype for `str` objects holding an AHU tree code, e.g. `((())())`.
Two trees have equal codes if and only if they are isomorphic; colored
codes carry one symbol after every opening parenthesis.
"""


def enumerate_trees(n: int) -> Iterator[Graph]:
    """
    Yields one representative of every isomorphism class of free trees on `n`
    vertices, in a deterministic order.
    """
    if n < 1:
        raise GraphError(f"tree order must be at least 1, got {n}")
    if n == 1:
        yield Graph(1, ())
        return
    if n == 2:
        yield build_graph(2, [(0, 1)])
        return

    # WROM level-sequence generation, constant amortized time per tree.
    for g in nx.nonisomorphic_trees(n):
        yield Graph.from_networkx(g)


def tree_centers(tree: Graph) -> list[int]:
    """
    Returns the one or two central vertices of `tree`, by repeatedly peeling
    leaves.
    """
    n = tree.n
    if n <= 2:
        return list(range(n))

    degree = tree.degrees()
    layer = [v for v in range(n) if degree[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        next_layer = []
        for v in layer:
            for u in tree.adjacency[v]:
                degree[u] -= 1
                if degree[u] == 1:
                    next_layer.append(u)
        layer = next_layer
    return sorted(layer)


def rooted_codes(
    tree: Graph, root: int, colors: Sequence[str] | None = None
) -> dict[int, str]:
    """
    Returns the AHU code of every subtree of `tree` rooted at `root`.

    Each code is `(` + color + sorted child codes + `)`.
    """
    parent = {root: -1}
    order = [root]
    for v in order:
        for u in tree.adjacency[v]:
            if u != parent[v]:
                parent[u] = v
                order.append(u)

    codes: dict[int, str] = {}
    for v in reversed(order):
        children = sorted(codes[u] for u in tree.adjacency[v] if u != parent[v])
        color = colors[v] if colors is not None else ""
        codes[v] = "(" + color + "".join(children) + ")"
    return codes


def rooted_code(tree: Graph, root: int, colors: Sequence[str] | None = None) -> str:
    """
    Returns the AHU code of `tree` rooted at `root`. Two vertices receive the
    same rooted code exactly when an automorphism maps one onto the other.
    """
    return rooted_codes(tree, root, colors)[root]


def _check_tree(tree: Graph, colors: Sequence[str] | None) -> None:
    if not is_tree(tree):
        raise NotATree(f"graph of order {tree.n} with {tree.size} edges is not a tree")
    if colors is not None and len(colors) != tree.n:
        raise GraphError(f"expected {tree.n} colors, got {len(colors)}")


def canonical_code(tree: Graph, colors: Sequence[str] | None = None) -> CanonicalCode:
    """
    Returns the canonical code of `tree`, rooted at its center; for bicentral
    trees the lexicographically smaller of the two center-rooted codes.

    With `colors` (one single-character symbol per vertex), the code
    distinguishes colorings that no isomorphism identifies.
    """
    _check_tree(tree, colors)
    return CanonicalCode(min(rooted_code(tree, c, colors) for c in tree_centers(tree)))


def _match(
    src: Graph,
    src_codes: dict[int, str],
    src_root: int,
    dst: Graph,
    dst_codes: dict[int, str],
    dst_root: int,
) -> dict[int, int]:
    mapping = {src_root: dst_root}
    stack = [(src_root, -1, dst_root, -1)]
    while stack:
        s, s_parent, d, d_parent = stack.pop()
        s_children = sorted(
            (u for u in src.adjacency[s] if u != s_parent), key=lambda u: src_codes[u]
        )
        d_children = sorted(
            (u for u in dst.adjacency[d] if u != d_parent), key=lambda u: dst_codes[u]
        )
        for sc, dc in zip(s_children, d_children):
            mapping[sc] = dc
            stack.append((sc, s, dc, d))
    return mapping


def tree_isomorphism(
    src: Graph,
    dst: Graph,
    *,
    src_colors: Sequence[str] | None = None,
    dst_colors: Sequence[str] | None = None,
    anchor: tuple[int, int] | None = None,
) -> dict[int, int] | None:
    """
    Returns a color-preserving isomorphism from `src` onto `dst` as a vertex
    map, or `None` when the trees are not isomorphic.

    With `anchor=(s, d)` the isomorphism must map `s` to `d`.
    """
    _check_tree(src, src_colors)
    _check_tree(dst, dst_colors)
    if src.n != dst.n:
        return None

    if anchor is not None:
        pairs = [anchor]
    else:
        src_center = tree_centers(src)[0]
        pairs = [(src_center, c) for c in tree_centers(dst)]

    for s_root, d_root in pairs:
        src_codes = rooted_codes(src, s_root, src_colors)
        dst_codes = rooted_codes(dst, d_root, dst_colors)
        if src_codes[s_root] == dst_codes[d_root]:
            return _match(src, src_codes, s_root, dst, dst_codes, d_root)

    return None
