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
Constructive almost semitotal dominating sets for members of family `U`.

Given a derivation of a labeled tree and a vertex `x` with status A, the
construction walks the derivation's steps and collects, from each attached
path, its A vertex and one or two fixed companions. Steps up to the one that
introduced `x` use a one-vertex buffer that is flushed at the next `P2` step;
later steps contribute their companions directly. The result dominates the
tree, every member other than `x` has a partner within distance two, and it
has exactly γ_t2 − 1 members.
"""

from __future__ import annotations

import logging

from pydantic import BaseModel, ConfigDict

from semidom.errors import LabelingError
from semidom.families.catalog import CatalogMember, generate_family
from semidom.families.labeled import Derivation, FamilyId, LabeledTree, Operation, Status
from semidom.graph import Graph
from semidom.solvers import DominationVariant, is_almost_semitotal, min_almost_semitotal, min_value
from semidom.trees import canonical_code, rooted_code, tree_isomorphism

_logger = logging.getLogger(__name__)

_SEED_A_VERTEX = 1

# Offsets within each attached path: the A vertex, the vertex two steps
# from it towards the attach vertex, and for P3 the vertex three steps away.
_A_OFFSET = {Operation.P2: 2, Operation.P3: 3}
_DISTANCE_TWO = {Operation.P2: 0, Operation.P3: 1}
_DISTANCE_THREE = {Operation.P3: 0}


class AlmostSemitotalSet(BaseModel):
    """
    An almost semitotal dominating set relative to `vertex`.
    """

    model_config = ConfigDict(frozen=True)

    vertex: int
    vertices: list[int]
    used_fallback: bool
    """
    Whether the step-by-step construction failed its postcondition and the
    exact solver supplied the set instead.
    """


def _collect(derivation: Derivation, x: int) -> set[int]:
    introduced = derivation.introduction_step(x)
    chosen = {_SEED_A_VERTEX}
    buffered: set[int] = set()

    for j, (step, start) in enumerate(zip(derivation.steps, derivation.offsets()), start=1):
        op = step.op
        if op is Operation.P1:
            continue
        y = start + _A_OFFSET[op]
        two = start + _DISTANCE_TWO[op]
        if j > introduced:
            chosen |= {y, two}
        elif op is Operation.P2:
            chosen |= buffered | {y}
            buffered = {two}
        else:
            chosen |= {y, start + _DISTANCE_THREE[op]}
            buffered = {two}

    return chosen


def build_almost_semitotal_set(
    labeled: LabeledTree, derivation: Derivation, x: int
) -> AlmostSemitotalSet:
    """
    Builds an almost semitotal dominating set of `labeled` relative to `x`,
    of size γ_t2 − 1 and containing every A vertex.

    `derivation` must be a family `U` derivation that replays to `labeled`.
    If the construction misses its postcondition the instance is logged and
    the exact solver's minimum over sets containing every A vertex is
    returned instead.
    """
    if derivation.family is not FamilyId.U:
        raise LabelingError(f"expected a derivation of family U, got {derivation.family.value}")
    if derivation.replay() != labeled:
        raise LabelingError(f"derivation {derivation} does not replay to the given labeled tree")
    labeled.tree.check_vertex(x)
    if labeled.status[x] is not Status.A:
        raise LabelingError(f"vertex {x} has status {labeled.status[x].value}, not A")

    tree = labeled.tree
    a_vertices = labeled.members(Status.A)
    target = min_value(tree, DominationVariant.SEMITOTAL) - 1
    chosen = _collect(derivation, x)

    if (
        len(chosen) == target
        and a_vertices <= chosen
        and is_almost_semitotal(tree, chosen, x)
    ):
        return AlmostSemitotalSet(vertex=x, vertices=sorted(chosen), used_fallback=False)

    _logger.warning(
        f"construction missed its postcondition for x={x} on {labeled.status_string} "
        f"via {derivation} (got {sorted(chosen)}, target size {target}); using the solver"
    )
    result = min_almost_semitotal(tree, x, forced=a_vertices)
    return AlmostSemitotalSet(vertex=x, vertices=result.witness, used_fallback=True)


def construct_for_member(member: CatalogMember, x: int) -> AlmostSemitotalSet:
    """
    Runs the construction for vertex `x` of `member.representative`.

    Every stored realization and every vertex in `x`'s orbit under the
    labeled tree's automorphisms is considered; the construction runs on the
    derivation that introduces that vertex at the earliest step, and the set
    is mapped back onto the representative's ids.
    """
    representative = member.representative
    representative.tree.check_vertex(x)
    if representative.status[x] is not Status.A:
        raise LabelingError(f"vertex {x} has status {representative.status[x].value}, not A")

    colors = representative.status_string
    orbit = rooted_code(representative.tree, x, colors)

    best: tuple[int, int, int] | None = None
    for index, (labeled, derivation) in enumerate(member.realizations):
        codes = labeled.status_string
        for y in labeled.members(Status.A):
            if rooted_code(labeled.tree, y, codes) != orbit:
                continue
            candidate = (derivation.introduction_step(y), index, y)
            if best is None or candidate < best:
                best = candidate
    assert best is not None

    step, index, y = best
    labeled, derivation = member.realizations[index]
    _logger.debug(f"constructing via realization {index}, x introduced at step {step}")
    built = build_almost_semitotal_set(labeled, derivation, y)

    mapping = tree_isomorphism(
        labeled.tree,
        representative.tree,
        src_colors=labeled.status_string,
        dst_colors=colors,
        anchor=(y, x),
    )
    assert mapping is not None
    return AlmostSemitotalSet(
        vertex=x,
        vertices=sorted(mapping[v] for v in built.vertices),
        used_fallback=built.used_fallback,
    )


def construct_for_tree(tree: Graph, x: int) -> AlmostSemitotalSet:
    """
    Runs the construction on an arbitrary tree, using any family `U`
    labeling of it under which `x` has status A.

    Raises `LabelingError` when the tree has no such labeling.
    """
    code = canonical_code(tree)
    tree.check_vertex(x)
    catalog = generate_family(FamilyId.U, tree.n)
    orbit = rooted_code(tree, x)

    for member in catalog.lookup(code):
        representative = member.representative
        for y in sorted(representative.members(Status.A)):
            if rooted_code(representative.tree, y) != orbit:
                continue
            mapping = tree_isomorphism(representative.tree, tree, anchor=(y, x))
            assert mapping is not None
            built = construct_for_member(member, y)
            return AlmostSemitotalSet(
                vertex=x,
                vertices=sorted(mapping[v] for v in built.vertices),
                used_fallback=built.used_fallback,
            )

    raise LabelingError(f"no family U labeling of this tree gives vertex {x} status A")
