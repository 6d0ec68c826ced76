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
One check class per verified claim.

Every claim enumerates picklable `Instance` items, evaluates each one in
isolation (possibly in a worker process) and, for characterization claims,
compares the set of extremal instances against a family catalog once all
findings are in.
"""

from __future__ import annotations

import enum
import logging
from abc import ABC, abstractmethod
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from typing import Any, ClassVar

from pydantic import BaseModel, ConfigDict, model_validator

from semidom.errors import MsdNotFound, SolverError
from semidom.families import (
    FamilyId,
    Status,
    construct_for_member,
    generate_family,
    validate_labeling,
)
from semidom.formats import encode_graph6
from semidom.graph import Graph, GraphKind, named_graph, structural_profile, subdivide_edge
from semidom.solvers import (
    DominationVariant,
    is_almost_semitotal,
    min_almost_semitotal,
    min_set,
    min_value,
)
from semidom.subdivision import msd_semitotal
from semidom.trees import canonical_code, enumerate_trees

_logger = logging.getLogger(__name__)


class ClaimId(str, enum.Enum):
    """
    The verifiable claims, keyed by their command-line identifiers.
    """

    MSD_COMPLETE_AND_WHEEL = "obs2.1"
    MSD_PATH_AND_CYCLE = "obs2.2"
    MSD_COMPLETE_BIPARTITE = "obs2.3"
    MSD_AT_MOST_THREE = "thm2.4"
    MSD_UNIVERSAL_VERTEX = "cor2.5"
    MSD_NEAR_SUPPORTS = "obs2.6"
    U_LABELING_RULES = "obs2.7"
    ALMOST_SEMITOTAL = "lem2.8"
    LEAF_FREE_OPTIMA = "obs2.10"
    CLASS3_CHARACTERIZATION = "thm2.12"
    SEMITOTAL_DOMINATION_RATIO = "thm3.1"
    TOTAL_SEMITOTAL_RATIO = "thm3.2"
    T_LABELING_RULES = "obs3.3"
    T_EXTREMAL_VALUE = "cor3.4"
    SUBDIVISION_MONOTONE = "monotone"

    def __str__(self) -> str:
        """
        Returns the claim's command-line identifier.
        """
        return self.value


class Bounds(BaseModel):
    """
    The inclusive range of orders (or part sizes) a claim is checked over.
    """

    model_config = ConfigDict(frozen=True)

    min_n: int
    max_n: int

    @model_validator(mode="after")
    def check_order(self) -> Bounds:
        """
        Rejects negative or inverted ranges.
        """
        if self.min_n < 0 or self.min_n > self.max_n:
            raise ValueError(f"invalid bounds [{self.min_n}, {self.max_n}]")
        return self


@dataclass(frozen=True)
class Instance:
    """
    A single work item: a graph plus whatever the claim needs alongside it.
    """

    key: str
    graph: Graph
    data: tuple[Any, ...] = ()


class Finding(BaseModel):
    """
    The outcome of evaluating one instance.
    """

    model_config = ConfigDict(frozen=True)

    key: str
    n: int
    holds: bool
    detail: str = ""
    facts: dict[str, bool | int] = {}


@dataclass
class Conclusion:
    """
    Failures and notes that only emerge from the findings as a whole.
    """

    failures: list[tuple[str, int, str]] = field(default_factory=list)
    notes: dict[str, int | str] = field(default_factory=dict)


def _finding(instance: Instance, holds: bool, detail: str = "", **facts: bool | int) -> Finding:
    return Finding(key=instance.key, n=instance.graph.n, holds=holds, detail=detail, facts=facts)


def _trees(bounds: Bounds, min_order: int) -> Iterator[Instance]:
    for n in range(max(bounds.min_n, min_order), bounds.max_n + 1):
        for tree in enumerate_trees(n):
            yield Instance(canonical_code(tree), tree)


def _stream(graphs: Sequence[Graph], min_order: int) -> Iterator[Instance]:
    for graph in graphs:
        profile = structural_profile(graph)
        if graph.n >= min_order and profile.is_connected:
            yield Instance(f"g6:{encode_graph6(graph)}", graph)


class Claim(ABC):
    """
    The base class for all claims.
    """

    id: ClassVar[ClaimId]
    summary: ClassVar[str]
    default_bounds: ClassVar[Bounds]
    budget: ClassVar[int]
    """
    The largest `max_n` this claim accepts.
    """

    uses_stream: ClassVar[bool] = False

    @abstractmethod
    def instances(self, bounds: Bounds, graphs: Sequence[Graph]) -> Iterator[Instance]:
        """
        Yields the work items for `bounds`, in a deterministic order.
        """
        raise NotImplementedError  # pragma: no cover

    @abstractmethod
    def evaluate(self, instance: Instance) -> Finding:
        """
        Checks one instance. Must be pure so it can run in a worker.
        """
        raise NotImplementedError  # pragma: no cover

    def conclude(self, findings: Sequence[Finding], bounds: Bounds) -> Conclusion:
        """
        Derives claim-wide failures and notes from all findings.
        """
        return Conclusion()


class _MsdClaim(Claim):
    """
    A claim that predicts the exact multisubdivision number of each instance.
    """

    def evaluate(self, instance: Instance) -> Finding:
        """
        Compares the computed multisubdivision number with the expected one.
        """
        (expected,) = instance.data
        try:
            k = msd_semitotal(instance.graph).k
        except MsdNotFound as e:
            return _finding(instance, False, str(e))
        return _finding(instance, k == expected, f"msd = {k}, expected {expected}", msd=k)


class MsdCompleteAndWheel(_MsdClaim):
    """
    Complete graphs and wheels have multisubdivision number 3.
    """

    id = ClaimId.MSD_COMPLETE_AND_WHEEL
    summary = "msd(K_n) = msd(W_n) = 3"
    default_bounds = Bounds(min_n=3, max_n=10)
    budget = 14

    def instances(self, bounds: Bounds, graphs: Sequence[Graph]) -> Iterator[Instance]:
        """
        Yields `K_n` and the wheel over `C_n` for each `n`.
        """
        for n in range(max(bounds.min_n, 3), bounds.max_n + 1):
            yield Instance(f"K{n}", named_graph(GraphKind.COMPLETE, n), (3,))
            yield Instance(f"W{n}", named_graph(GraphKind.WHEEL, n), (3,))


class MsdPathAndCycle(_MsdClaim):
    """
    Paths and cycles follow a period-five pattern.
    """

    id = ClaimId.MSD_PATH_AND_CYCLE
    summary = "msd(P_n) = msd(C_n) is 1, 2 or 3 by n mod 5"
    default_bounds = Bounds(min_n=3, max_n=20)
    budget = 30

    EXPECTED: ClassVar[dict[int, int]] = {0: 1, 1: 2, 2: 1, 3: 3, 4: 2}

    def instances(self, bounds: Bounds, graphs: Sequence[Graph]) -> Iterator[Instance]:
        """
        Yields `P_n` and `C_n` for each `n`.
        """
        for n in range(max(bounds.min_n, 3), bounds.max_n + 1):
            expected = (self.EXPECTED[n % 5],)
            yield Instance(f"P{n}", named_graph(GraphKind.PATH, n), expected)
            yield Instance(f"C{n}", named_graph(GraphKind.CYCLE, n), expected)


class MsdCompleteBipartite(_MsdClaim):
    """
    Complete bipartite graphs: 4 for `K_{1,1}`, 3 for stars, 2 otherwise.
    Bounds are part sizes rather than orders.
    """

    id = ClaimId.MSD_COMPLETE_BIPARTITE
    summary = "msd(K_{p,q}) is 4, 3 or 2"
    default_bounds = Bounds(min_n=1, max_n=5)
    budget = 7

    def instances(self, bounds: Bounds, graphs: Sequence[Graph]) -> Iterator[Instance]:
        """
        Yields `K_{p,q}` for `p <= q` within the bounds.
        """
        low = max(bounds.min_n, 1)
        for p in range(low, bounds.max_n + 1):
            for q in range(p, bounds.max_n + 1):
                expected = 4 if q == 1 else 3 if p == 1 else 2
                graph = named_graph(GraphKind.COMPLETE_BIPARTITE, p, q)
                yield Instance(f"K{p},{q}", graph, (expected,))


class MsdAtMostThree(Claim):
    """
    Every connected graph of order at least 3 has multisubdivision number at
    most 3.
    """

    id = ClaimId.MSD_AT_MOST_THREE
    summary = "msd <= 3 for connected graphs of order >= 3"
    default_bounds = Bounds(min_n=3, max_n=12)
    budget = 14
    uses_stream = True

    def instances(self, bounds: Bounds, graphs: Sequence[Graph]) -> Iterator[Instance]:
        """
        Yields every tree within the bounds, then every streamed connected
        graph of order at least 3.
        """
        yield from _trees(bounds, 3)
        yield from _stream(graphs, 3)

    def evaluate(self, instance: Instance) -> Finding:
        """
        Checks that some edge's subdivision increases γ_t2 within 3 steps.
        """
        try:
            k = msd_semitotal(instance.graph, 3).k
        except MsdNotFound as e:
            return _finding(instance, False, str(e))
        return _finding(instance, True, msd=k)


class MsdUniversalVertex(Claim):
    """
    Graphs of order at least 3 with a universal vertex have multisubdivision
    number exactly 3.
    """

    id = ClaimId.MSD_UNIVERSAL_VERTEX
    summary = "msd = 3 with a universal vertex"
    default_bounds = Bounds(min_n=3, max_n=12)
    budget = 14
    uses_stream = True

    def instances(self, bounds: Bounds, graphs: Sequence[Graph]) -> Iterator[Instance]:
        """
        Yields the stars among the trees and the streamed graphs with a
        universal vertex.
        """
        for instance in (*_trees(bounds, 3), *_stream(graphs, 3)):
            if structural_profile(instance.graph).universal:
                yield instance

    def evaluate(self, instance: Instance) -> Finding:
        """
        Checks that the multisubdivision number is 3.
        """
        try:
            k = msd_semitotal(instance.graph).k
        except MsdNotFound as e:
            return _finding(instance, False, str(e))
        return _finding(instance, k == 3, f"msd = {k}", msd=k)


def _near_supports(tree: Graph) -> bool:
    """
    Returns whether two support vertices, one of degree 2, are adjacent or at
    distance two.
    """
    supports = sorted(structural_profile(tree).supports)
    for i, s in enumerate(supports):
        for t in supports[i + 1 :]:
            if tree.degree(s) != 2 and tree.degree(t) != 2:
                continue
            if tree.has_edge(s, t) or tree.adjacency[s] & tree.adjacency[t]:
                return True
    return False


class MsdNearSupports(Claim):
    """
    Trees with two nearby support vertices, one of degree 2, have
    multisubdivision number at most 2.
    """

    id = ClaimId.MSD_NEAR_SUPPORTS
    summary = "msd <= 2 for trees with close support vertices"
    default_bounds = Bounds(min_n=3, max_n=12)
    budget = 14

    def instances(self, bounds: Bounds, graphs: Sequence[Graph]) -> Iterator[Instance]:
        """
        Yields the trees meeting the hypothesis.
        """
        for instance in _trees(bounds, 3):
            if _near_supports(instance.graph):
                yield instance

    def evaluate(self, instance: Instance) -> Finding:
        """
        Checks that the multisubdivision number is at most 2.
        """
        k = msd_semitotal(instance.graph, 3).k
        return _finding(instance, k <= 2, f"msd = {k}", msd=k)


def _catalog_members(family: FamilyId, bounds: Bounds) -> Iterator[Instance]:
    for member in generate_family(family, bounds.max_n):
        if member.n >= bounds.min_n:
            yield Instance(member.code, member.representative.tree, (family, member))


class _LabelingRulesClaim(Claim):
    """
    Every catalog member satisfies its family's labeling rules.
    """

    families: ClassVar[tuple[FamilyId, ...]]

    def instances(self, bounds: Bounds, graphs: Sequence[Graph]) -> Iterator[Instance]:
        """
        Yields every member of the claim's families within the bounds.
        """
        for family in self.families:
            yield from _catalog_members(family, bounds)

    def evaluate(self, instance: Instance) -> Finding:
        """
        Validates the member's labeling.
        """
        family, member = instance.data
        violations = validate_labeling(member.representative, family)
        detail = "; ".join(f"{v.clause}: {v.detail}" for v in violations[:5])
        return _finding(instance, not violations, detail, violations=len(violations))


class ULabelingRules(_LabelingRulesClaim):
    """
    Members of family `U` satisfy its leaf, support and neighborhood rules.
    """

    id = ClaimId.U_LABELING_RULES
    summary = "labeling rules of family U"
    default_bounds = Bounds(min_n=3, max_n=12)
    budget = 16
    families = (FamilyId.U,)


class TLabelingRules(_LabelingRulesClaim):
    """
    Members of families `T` and `T1` satisfy their labeling rules.
    """

    id = ClaimId.T_LABELING_RULES
    summary = "labeling rules of families T and T1"
    default_bounds = Bounds(min_n=5, max_n=14)
    budget = 16
    families = (FamilyId.T, FamilyId.T1)


class AlmostSemitotal(Claim):
    """
    For every member of `U` and every A vertex `x`, the minimum almost
    semitotal dominating set relative to `x` has γ_t2 − 1 vertices, and the
    step-by-step construction reaches that size.
    """

    id = ClaimId.ALMOST_SEMITOTAL
    summary = "almost semitotal sets of size γ_t2 - 1 in family U"
    default_bounds = Bounds(min_n=3, max_n=12)
    budget = 16

    def instances(self, bounds: Bounds, graphs: Sequence[Graph]) -> Iterator[Instance]:
        """
        Yields one instance per member and A vertex.
        """
        for instance in _catalog_members(FamilyId.U, bounds):
            _, member = instance.data
            for x in sorted(member.representative.members(Status.A)):
                yield Instance(f"{instance.key}@{x}", instance.graph, (member, x))

    def evaluate(self, instance: Instance) -> Finding:
        """
        Checks the solver optimum and the constructed set.
        """
        member, x = instance.data
        tree = instance.graph
        target = min_value(tree, DominationVariant.SEMITOTAL) - 1
        oracle = min_almost_semitotal(tree, x).value
        built = construct_for_member(member, x)

        problems = []
        if oracle != target:
            problems.append(f"minimum is {oracle}, expected {target}")
        if len(built.vertices) != target:
            problems.append(f"constructed {built.vertices}, expected size {target}")
        if not is_almost_semitotal(tree, built.vertices, x):
            problems.append(f"constructed {built.vertices} is not almost semitotal")
        if not member.representative.members(Status.A) <= set(built.vertices):
            problems.append(f"constructed {built.vertices} misses an A vertex")
        return _finding(
            instance, not problems, "; ".join(problems), fallback=built.used_fallback
        )

    def conclude(self, findings: Sequence[Finding], bounds: Bounds) -> Conclusion:
        """
        Counts the instances where the construction needed the solver.
        """
        fallbacks = sum(1 for f in findings if f.facts.get("fallback"))
        return Conclusion(notes={"fallbacks": fallbacks})


class LeafFreeOptima(Claim):
    """
    Connected graphs other than stars have a minimum dominating set and a
    minimum semitotal dominating set that contain no leaf.
    """

    id = ClaimId.LEAF_FREE_OPTIMA
    summary = "leaf-free γ-sets and γ_t2-sets for non-stars"
    default_bounds = Bounds(min_n=3, max_n=9)
    budget = 14
    uses_stream = True

    def instances(self, bounds: Bounds, graphs: Sequence[Graph]) -> Iterator[Instance]:
        """
        Yields non-star trees, then streamed connected non-star graphs.
        """
        for instance in (*_trees(bounds, 3), *_stream(graphs, 3)):
            if not structural_profile(instance.graph).is_star:
                yield instance

    def evaluate(self, instance: Instance) -> Finding:
        """
        Compares each optimum with the optimum over non-leaf vertices.
        """
        graph = instance.graph
        leaves = structural_profile(graph).leaves
        inner = [v for v in range(graph.n) if v not in leaves]
        problems = []
        for variant in (DominationVariant.PLAIN, DominationVariant.SEMITOTAL):
            value = min_value(graph, variant)
            try:
                restricted = min_set(graph, variant, allowed=inner, hint=value).value
            except SolverError:
                restricted = -1
            if restricted != value:
                problems.append(f"{variant}: {value} overall, {restricted} without leaves")
        return _finding(instance, not problems, "; ".join(problems))


class _CharacterizationClaim(Claim):
    """
    A claim whose extremal trees must be exactly the trees of a family.
    Findings carry `extremal`; `conclude` compares the two sets.
    """

    family: ClassVar[FamilyId]

    def conclude(self, findings: Sequence[Finding], bounds: Bounds) -> Conclusion:
        """
        Reports every tree on exactly one side of the set equality.
        """
        extremal = {f.key: f.n for f in findings if f.facts.get("extremal")}
        tested = {f.key for f in findings}
        catalog = generate_family(self.family, bounds.max_n)
        members = {m.tree_code: m.n for m in catalog if m.n >= bounds.min_n}

        conclusion = Conclusion()
        for key in sorted(extremal.keys() - members.keys()):
            conclusion.failures.append(
                (key, extremal[key], f"extremal but not in family {self.family.value}")
            )
        for key in sorted(members.keys() & tested - extremal.keys()):
            conclusion.failures.append(
                (key, members[key], f"in family {self.family.value} but not extremal")
            )
        conclusion.notes["extremal"] = len(extremal)
        conclusion.notes["family_trees"] = len(members)
        return conclusion


class Class3Characterization(_CharacterizationClaim):
    """
    A tree is in Class 3 exactly when some labeling places it in `U`; no
    non-star tree of diameter at most 6 is in Class 3.
    """

    id = ClaimId.CLASS3_CHARACTERIZATION
    summary = "Class 3 trees are exactly the trees of family U"
    default_bounds = Bounds(min_n=3, max_n=12)
    budget = 14
    family = FamilyId.U

    def instances(self, bounds: Bounds, graphs: Sequence[Graph]) -> Iterator[Instance]:
        """
        Yields every tree within the bounds.
        """
        yield from _trees(bounds, 3)

    def evaluate(self, instance: Instance) -> Finding:
        """
        Classifies the tree and checks the diameter side condition.
        """
        profile = structural_profile(instance.graph)
        k = msd_semitotal(instance.graph, 3).k
        small = not profile.is_star and profile.diameter is not None and profile.diameter <= 6
        holds = not (small and k > 2)
        detail = "" if holds else f"non-star of diameter {profile.diameter} has msd {k}"
        return _finding(instance, holds, detail, extremal=k == 3, msd=k)


class SemitotalDominationRatio(_CharacterizationClaim):
    """
    Non-star trees satisfy γ_t2 <= 2γ − 1, with equality exactly for the
    trees of family `T`.
    """

    id = ClaimId.SEMITOTAL_DOMINATION_RATIO
    summary = "γ_t2 <= 2γ - 1 for non-star trees, equality iff in family T"
    default_bounds = Bounds(min_n=3, max_n=14)
    budget = 16
    family = FamilyId.T

    def instances(self, bounds: Bounds, graphs: Sequence[Graph]) -> Iterator[Instance]:
        """
        Yields the non-star trees within the bounds.
        """
        for instance in _trees(bounds, 3):
            if not structural_profile(instance.graph).is_star:
                yield instance

    def evaluate(self, instance: Instance) -> Finding:
        """
        Compares γ_t2 with 2γ − 1.
        """
        gamma = min_value(instance.graph, DominationVariant.PLAIN)
        gamma_t2 = min_value(instance.graph, DominationVariant.SEMITOTAL)
        bound = 2 * gamma - 1
        return _finding(
            instance,
            gamma_t2 <= bound,
            f"γ_t2 = {gamma_t2} exceeds 2γ - 1 = {bound}",
            extremal=gamma_t2 == bound,
        )


class TotalSemitotalRatio(_CharacterizationClaim):
    """
    Nontrivial trees satisfy γ_t <= 2γ_t2 − 1, with equality exactly for the
    trees of family `T1`.
    """

    id = ClaimId.TOTAL_SEMITOTAL_RATIO
    summary = "γ_t <= 2γ_t2 - 1 for nontrivial trees, equality iff in family T1"
    default_bounds = Bounds(min_n=2, max_n=14)
    budget = 16
    family = FamilyId.T1

    def instances(self, bounds: Bounds, graphs: Sequence[Graph]) -> Iterator[Instance]:
        """
        Yields every tree of order at least 2 within the bounds.
        """
        yield from _trees(bounds, 2)

    def evaluate(self, instance: Instance) -> Finding:
        """
        Compares γ_t with 2γ_t2 − 1.
        """
        gamma_t2 = min_value(instance.graph, DominationVariant.SEMITOTAL)
        gamma_t = min_value(instance.graph, DominationVariant.TOTAL)
        bound = 2 * gamma_t2 - 1
        return _finding(
            instance,
            gamma_t <= bound,
            f"γ_t = {gamma_t} exceeds 2γ_t2 - 1 = {bound}",
            extremal=gamma_t == bound,
        )


class TExtremalValue(Claim):
    """
    Every member of family `T` has γ_t2 = 2γ − 1.
    """

    id = ClaimId.T_EXTREMAL_VALUE
    summary = "γ_t2 = 2γ - 1 on family T"
    default_bounds = Bounds(min_n=6, max_n=14)
    budget = 16

    def instances(self, bounds: Bounds, graphs: Sequence[Graph]) -> Iterator[Instance]:
        """
        Yields every member of family `T` within the bounds.
        """
        yield from _catalog_members(FamilyId.T, bounds)

    def evaluate(self, instance: Instance) -> Finding:
        """
        Checks the equality on one member.
        """
        gamma = min_value(instance.graph, DominationVariant.PLAIN)
        gamma_t2 = min_value(instance.graph, DominationVariant.SEMITOTAL)
        return _finding(
            instance, gamma_t2 == 2 * gamma - 1, f"γ = {gamma}, γ_t2 = {gamma_t2}"
        )


class SubdivisionMonotone(Claim):
    """
    Subdividing an edge of a tree never decreases γ_t2. Streamed general
    graphs are only observed: decreases are counted in the notes.
    """

    id = ClaimId.SUBDIVISION_MONOTONE
    summary = "γ_t2 does not decrease under edge subdivision of trees"
    default_bounds = Bounds(min_n=2, max_n=10)
    budget = 12
    uses_stream = True

    TIMES: ClassVar[tuple[int, ...]] = (1, 2, 3)

    def instances(self, bounds: Bounds, graphs: Sequence[Graph]) -> Iterator[Instance]:
        """
        Yields every tree within the bounds, then the streamed graphs.
        """
        for instance in _trees(bounds, 2):
            yield Instance(instance.key, instance.graph, (True,))
        for instance in _stream(graphs, 2):
            yield Instance(instance.key, instance.graph, (False,))

    def evaluate(self, instance: Instance) -> Finding:
        """
        Solves every single-edge subdivision with 1, 2 and 3 new vertices.
        """
        (asserted,) = instance.data
        graph = instance.graph
        base = min_value(graph, DominationVariant.SEMITOTAL)
        drops = []
        for edge in graph.sorted_edges:
            for k in self.TIMES:
                value = min_value(subdivide_edge(graph, edge, k), DominationVariant.SEMITOTAL, base)
                if value < base:
                    drops.append(f"{edge}×{k}: {base} -> {value}")
        holds = not drops or not asserted
        return _finding(instance, holds, "; ".join(drops[:5]), drops=len(drops))

    def conclude(self, findings: Sequence[Finding], bounds: Bounds) -> Conclusion:
        """
        Records how many streamed graphs saw a decrease.
        """
        observed = [f for f in findings if f.key.startswith("g6:")]
        decreasing = sum(1 for f in observed if f.facts.get("drops"))
        return Conclusion(notes={"stream_graphs": len(observed), "stream_decreases": decreasing})


CLAIMS: dict[ClaimId, Claim] = {
    claim.id: claim
    for claim in (
        MsdCompleteAndWheel(),
        MsdPathAndCycle(),
        MsdCompleteBipartite(),
        MsdAtMostThree(),
        MsdUniversalVertex(),
        MsdNearSupports(),
        ULabelingRules(),
        AlmostSemitotal(),
        LeafFreeOptima(),
        Class3Characterization(),
        SemitotalDominationRatio(),
        TotalSemitotalRatio(),
        TLabelingRules(),
        TExtremalValue(),
        SubdivisionMonotone(),
    )
}
