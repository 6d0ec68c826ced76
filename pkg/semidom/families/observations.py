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
Structural rules that every member of a family satisfies, checked against a
concrete labeled tree.
"""

from __future__ import annotations

import logging
from collections.abc import Callable

from pydantic import BaseModel, ConfigDict

from semidom.errors import LabelingError
from semidom.families.labeled import FamilyId, LabeledTree, Status
from semidom.graph import structural_profile
from semidom.solvers import DominationVariant, check_set, min_value, optimal_sets

_logger = logging.getLogger(__name__)

A, B, C, D, E = Status.A, Status.B, Status.C, Status.D, Status.E


class Violation(BaseModel):
    """
    A single broken labeling rule.
    """

    model_config = ConfigDict(frozen=True)

    clause: str
    vertex: int | None = None
    detail: str


class _Context:
    def __init__(self, labeled: LabeledTree):
        self.labeled = labeled
        self.tree = labeled.tree
        self.status = labeled.status
        profile = structural_profile(labeled.tree)
        self.leaves = profile.leaves
        self.supports = profile.supports
        self.violations: list[Violation] = []

    def fail(self, clause: str, detail: str, vertex: int | None = None) -> None:
        self.violations.append(Violation(clause=clause, vertex=vertex, detail=detail))

    def neighbor_statuses(self, v: int) -> list[Status]:
        return sorted((self.status[u] for u in self.tree.adjacency[v]), key=lambda s: s.value)

    def set_of(self, *statuses: Status) -> frozenset[int]:
        return frozenset(v for v in range(self.tree.n) if self.status[v] in statuses)


def _all_but_one(statuses: list[Status], bulk: Status, single: Status) -> bool:
    return statuses.count(single) == 1 and statuses.count(bulk) == len(statuses) - 1


def _check_u(ctx: _Context) -> None:
    tree, status = ctx.tree, ctx.status
    for v in range(tree.n):
        nbrs = ctx.neighbor_statuses(v)
        if v in ctx.supports and (status[v] is not A or any(s is not C for s in nbrs)):
            ctx.fail("support-status", "support vertex must be A with only C neighbors", v)
        if v in ctx.leaves and status[v] is not C:
            ctx.fail("leaf-status", f"leaf labeled {status[v].value}", v)
        if status[v] is C and v not in ctx.leaves and not _all_but_one(nbrs, B, A):
            ctx.fail("c-neighborhood", "non-leaf C vertex needs one A neighbor, the rest B", v)
        if status[v] is B and not _all_but_one(nbrs, B, C):
            ctx.fail("b-neighborhood", "B vertex needs one C neighbor, the rest B", v)

    for label in (A, C):
        for edge in tree.sorted_edges:
            if status[edge.u] is label and status[edge.v] is label:
                ctx.fail("independence", f"adjacent {label.value} vertices {edge}", edge.u)


def _check_leaves_and_supports(ctx: _Context) -> None:
    for v in range(ctx.tree.n):
        is_support = v in ctx.supports
        if is_support != (ctx.status[v] in (A, B)):
            ctx.fail("support-iff-ab", "A/B vertices are exactly the support vertices", v)
        if (v in ctx.leaves) != (ctx.status[v] is C):
            ctx.fail("leaf-iff-c", "C vertices are exactly the leaves", v)


def _check_optimal(
    ctx: _Context, clause: str, members: frozenset[int], variant: DominationVariant
) -> None:
    if not check_set(ctx.tree, members, variant):
        ctx.fail(clause, f"{sorted(members)} is not a {variant} set")
    elif len(members) != min_value(ctx.tree, variant):
        ctx.fail(clause, f"{sorted(members)} is not a minimum {variant} set")


def _check_t(ctx: _Context) -> None:
    _check_leaves_and_supports(ctx)
    tree, status = ctx.tree, ctx.status

    counts = {s: len(ctx.set_of(s)) for s in Status}
    if counts[A] != 1 or not counts[B] == counts[D] == counts[E]:
        ctx.fail("status-counts", f"expected |A| = 1 and |B| = |D| = |E|, got {counts}")

    dominators = ctx.set_of(A, B)
    optimal = list(optimal_sets(tree, DominationVariant.PLAIN))
    if optimal != [dominators]:
        ctx.fail(
            "unique-gamma-set",
            f"A ∪ B = {sorted(dominators)}, but the minimum dominating sets are "
            f"{[sorted(s) for s in optimal[:4]]}",
        )
    _check_optimal(ctx, "gamma-t2-set", ctx.set_of(A, B, D), DominationVariant.SEMITOTAL)

    expected = {A: D, B: E}
    partners = {D: {A, E}, E: {B, D}}
    for v in range(tree.n):
        if status[v] in expected:
            inner = [u for u in tree.adjacency[v] if u not in ctx.leaves]
            if any(status[u] is not expected[status[v]] for u in inner):
                ctx.fail(
                    "non-leaf-neighbors",
                    f"non-leaf neighbors of {status[v].value} must be {expected[status[v]].value}",
                    v,
                )
        if status[v] in partners:
            if tree.degree(v) != 2 or set(ctx.neighbor_statuses(v)) != partners[status[v]]:
                wanted = "".join(sorted(s.value for s in partners[status[v]]))
                ctx.fail("degree-two-path", f"needs degree 2 with neighbors {wanted}", v)


def _check_t1(ctx: _Context) -> None:
    _check_leaves_and_supports(ctx)
    tree, status = ctx.tree, ctx.status

    counts = {s: len(ctx.set_of(s)) for s in Status}
    if counts[A] != 1 or counts[B] != counts[D] or counts[E] != 0:
        ctx.fail("status-counts", f"expected |A| = 1, |B| = |D| and no E, got {counts}")

    _check_optimal(ctx, "gamma-t2-set", ctx.set_of(A, B), DominationVariant.SEMITOTAL)
    _check_optimal(ctx, "gamma-t-set", ctx.set_of(A, B, D), DominationVariant.TOTAL)

    for v in range(tree.n):
        if status[v] in (A, B):
            inner = [u for u in tree.adjacency[v] if u not in ctx.leaves]
            if any(status[u] is not D for u in inner):
                ctx.fail("non-leaf-neighbors", "non-leaf neighbors of A and B must be D", v)
        if status[v] is D:
            if tree.degree(v) != 2 or set(ctx.neighbor_statuses(v)) != {A, B}:
                ctx.fail("degree-two-path", "needs degree 2 with neighbors A and B", v)


_CHECKS: dict[FamilyId, Callable[[_Context], None]] = {
    FamilyId.U: _check_u,
    FamilyId.T: _check_t,
    FamilyId.T1: _check_t1,
}


def validate_labeling(labeled: LabeledTree, family: FamilyId) -> list[Violation]:
    """
    Returns every structural rule of `family` that `labeled` breaks; an empty
    list means the labeling is consistent with membership.

    Raises `LabelingError` when the labeling uses statuses outside the
    family's alphabet.
    """
    family = FamilyId(family)
    stray = {s.value for s in labeled.status} - {s.value for s in family.alphabet}
    if stray:
        raise LabelingError(f"statuses {sorted(stray)} are not used by family {family.value}")

    ctx = _Context(labeled)
    _CHECKS[family](ctx)
    if ctx.violations:
        _logger.debug(f"{len(ctx.violations)} violation(s) for {labeled.status_string}")
    return ctx.violations
