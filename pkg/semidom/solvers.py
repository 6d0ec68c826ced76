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
Exact solvers for domination, total domination and semitotal domination.

Every solver returns a `SolveResult` whose witness is an optimal set chosen
deterministically: when an optimal set avoiding every leaf exists it is
preferred, and among the preferred sets the lexicographically least sorted
id sequence wins.
"""

from __future__ import annotations

import enum
import functools
import logging
from collections.abc import Iterable, Iterator

from pydantic import BaseModel, ConfigDict

from semidom._internal.search import Problem, Search, bits, to_mask
from semidom.errors import SolverError
from semidom.graph import Graph

_logger = logging.getLogger(__name__)


class DominationVariant(str, enum.Enum):
    """
    The three domination parameters, keyed by their command-line names.
    """

    PLAIN = "gamma"
    TOTAL = "gamma-t"
    SEMITOTAL = "gamma-t2"

    def __str__(self) -> str:
        """
        Returns the variant's command-line name.
        """
        return self.value


class SolveResult(BaseModel):
    """
    An optimal value together with the witness set that attains it.
    """

    model_config = ConfigDict(frozen=True)

    variant: DominationVariant
    value: int
    witness: list[int]
    """
    The witness, as sorted vertex ids.
    """
    explored: int
    """
    Search nodes visited; diagnostic only.
    """


class DominationNumbers(BaseModel):
    """
    The three domination parameters of one graph.
    """

    model_config = ConfigDict(frozen=True)

    gamma: int
    gamma_t2: int
    gamma_t: int


def _partner_masks(graph: Graph) -> tuple[int, ...]:
    closed = _closed_masks(graph)
    partners = []
    for v in range(graph.n):
        reach = 0
        for u in graph.adjacency[v]:
            reach |= closed[u]
        partners.append(reach & ~(1 << v))
    return tuple(partners)


def _closed_masks(graph: Graph) -> tuple[int, ...]:
    return tuple(mask | (1 << v) for v, mask in enumerate(graph.neighbor_masks))


@functools.lru_cache(maxsize=4096)
def _problem(graph: Graph, variant: DominationVariant, exempt: int = 0) -> Problem:
    if variant is DominationVariant.TOTAL:
        return Problem(graph.n, graph.neighbor_masks)
    if variant is DominationVariant.SEMITOTAL:
        return Problem(graph.n, _closed_masks(graph), _partner_masks(graph), exempt)
    return Problem(graph.n, _closed_masks(graph))


def _check_members(graph: Graph, members: Iterable[int]) -> int:
    mask = 0
    for v in members:
        graph.check_vertex(v)
        mask |= 1 << v
    return mask


def _require_solvable(graph: Graph, variant: DominationVariant) -> None:
    if graph.n == 0:
        raise SolverError("cannot solve on the empty graph")
    if variant is not DominationVariant.PLAIN:
        isolated = graph.isolated_vertices()
        if isolated:
            raise SolverError(
                f"{variant.name.lower()} domination is undefined with isolated vertices {isolated}"
            )


def _lower_bound(graph: Graph, variant: DominationVariant) -> int:
    if variant is DominationVariant.PLAIN:
        return 1
    return 2 if graph.n >= 2 else 1


def _leaf_mask(graph: Graph) -> int:
    return to_mask([v for v in range(graph.n) if graph.degree(v) == 1])


def _witness(search: Search, value: int, leaves: int, forced: int = 0) -> int:
    """
    Picks the preferred optimal set: leaf-free when possible, then lex-least.
    """
    pool = search.allowed & ~leaves
    if pool != search.allowed and not forced & leaves:
        leaf_free = Search(search.problem, pool)
        found = leaf_free.least_solution(value, forced)
        search.explored += leaf_free.explored
        if found is not None:
            return found

    found = search.least_solution(value, forced)
    if found is None:  # pragma: no cover
        raise SolverError(f"no witness of size {value} despite a feasible search")
    return found


def check_set(graph: Graph, members: Iterable[int], variant: DominationVariant) -> bool:
    """
    Returns whether `members` is a dominating set of `graph` of the given
    variant.

    The semitotal partner condition is measured by distance in `graph`
    itself, not in the subgraph induced by `members`.
    """
    variant = DominationVariant(variant)
    chosen = _check_members(graph, members)
    return _problem(graph, variant).satisfied_by(chosen)


def is_almost_semitotal(graph: Graph, members: Iterable[int], v: int) -> bool:
    """
    Returns whether `members` dominates `graph` and every member other than
    `v` has another member within distance two.
    """
    chosen = _check_members(graph, members)
    graph.check_vertex(v)
    if not chosen & (1 << v):
        raise SolverError(f"vertex {v} is not in the candidate set")
    return _problem(graph, DominationVariant.SEMITOTAL, 1 << v).satisfied_by(chosen)


def min_set(
    graph: Graph,
    variant: DominationVariant,
    *,
    allowed: Iterable[int] | None = None,
    hint: int | None = None,
) -> SolveResult:
    """
    Computes a minimum set of the given variant.

    `allowed` restricts the search to a subset of the vertices; `SolverError`
    is raised when that subset admits no solution. `hint` is a guess of the
    optimum that only affects search order.
    """
    variant = DominationVariant(variant)
    _require_solvable(graph, variant)

    problem = _problem(graph, variant)
    allowed_mask = problem.full if allowed is None else _check_members(graph, allowed)
    search = Search(problem, allowed_mask)

    value = search.optimum(_lower_bound(graph, variant), hint)
    if value is None:
        raise SolverError(f"no {variant} set exists within the allowed vertices")

    witness = _witness(search, value, _leaf_mask(graph))
    _logger.debug(f"{variant} = {value} on {graph!r} ({search.explored} nodes)")
    return SolveResult(
        variant=variant, value=value, witness=list(bits(witness)), explored=search.explored
    )


@functools.lru_cache(maxsize=65536)
def min_value(graph: Graph, variant: DominationVariant, hint: int | None = None) -> int:
    """
    Returns only the optimum of the given variant, skipping witness selection.
    Results are memoized per graph.
    """
    variant = DominationVariant(variant)
    _require_solvable(graph, variant)
    search = Search(_problem(graph, variant))
    value = search.optimum(_lower_bound(graph, variant), hint)
    assert value is not None
    return value


def min_almost_semitotal(
    graph: Graph, v: int, *, forced: Iterable[int] = ()
) -> SolveResult:
    """
    Computes a minimum almost semitotal dominating set relative to `v`.

    `v` is excused from the partner condition but need not be chosen, so the
    value never exceeds the semitotal domination number; a witness without
    `v` is an ordinary semitotal dominating set. Every vertex in `forced` is
    part of the result.
    """
    _require_solvable(graph, DominationVariant.SEMITOTAL)
    graph.check_vertex(v)
    forced_mask = _check_members(graph, forced)

    search = Search(_problem(graph, DominationVariant.SEMITOTAL, 1 << v))
    value = search.optimum(1, forced=forced_mask)
    assert value is not None

    witness = _witness(search, value, _leaf_mask(graph), forced_mask)
    return SolveResult(
        variant=DominationVariant.SEMITOTAL,
        value=value,
        witness=list(bits(witness)),
        explored=search.explored,
    )


def optimal_sets(graph: Graph, variant: DominationVariant) -> Iterator[frozenset[int]]:
    """
    Yields every minimum set of the given variant, each exactly once.
    """
    variant = DominationVariant(variant)
    value = min_value(graph, variant)
    for found in Search(_problem(graph, variant)).solutions(value):
        yield frozenset(bits(found))


def domination_numbers(graph: Graph) -> DominationNumbers:
    """
    Computes γ, γ_t2 and γ_t together, checking `γ ≤ γ_t2 ≤ γ_t`.
    """
    gamma = min_value(graph, DominationVariant.PLAIN)
    gamma_t2 = min_value(graph, DominationVariant.SEMITOTAL)
    gamma_t = min_value(graph, DominationVariant.TOTAL)
    if not gamma <= gamma_t2 <= gamma_t:
        raise SolverError(f"sandwich violated on {graph!r}: {gamma}, {gamma_t2}, {gamma_t}")
    return DominationNumbers(gamma=gamma, gamma_t2=gamma_t2, gamma_t=gamma_t)
