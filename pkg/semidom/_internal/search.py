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
Exact bitset branch-and-bound search for domination-type vertex sets.

A `Problem` describes which vertices each candidate covers and, for
semitotal-style variants, which vertices count as a partner (distance one
or two). The search branches on the most constrained violation: either an
uncovered vertex (branch on the vertices covering it) or a set member
without a partner (branch on the vertices within distance two of it).
Every set that satisfies the problem contains a vertex from each branch,
so exhausting the branches at cardinality `k` proves that no set of size
`k` exists.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field


def bits(mask: int) -> Iterator[int]:
    """
    Yields the set bit positions of `mask`, in increasing order.
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: frozenset[int] | set[int] | list[int]) -> int:
    """
    Returns the bitmask with the given bit positions set.
    """
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Problem:
    """
    A covering problem over `n` vertices.
    """

    n: int
    cover: tuple[int, ...]
    """
    `cover[v]` is the mask of vertices that `v` covers when chosen.
    """

    partner: tuple[int, ...] | None = None
    """
    `partner[v]` is the mask of vertices that can serve as `v`'s partner, or
    `None` when the problem has no partner obligation.
    """

    exempt: int = 0
    """
    Members in this mask carry no partner obligation.
    """

    full: int = field(init=False)
    max_cover: int = field(init=False)

    def __post_init__(self) -> None:
        """
        Precomputes the all-vertices mask and the largest single cover.
        """
        object.__setattr__(self, "full", (1 << self.n) - 1)
        object.__setattr__(
            self, "max_cover", max((c.bit_count() for c in self.cover), default=1)
        )

    def satisfied_by(self, chosen: int) -> bool:
        """
        Returns whether `chosen` covers every vertex and meets every partner
        obligation.
        """
        covered = 0
        for v in bits(chosen):
            covered |= self.cover[v]
        if covered != self.full:
            return False
        if self.partner is not None:
            for v in bits(chosen & ~self.exempt):
                if not self.partner[v] & chosen:
                    return False
        return True


class Search:
    """
    A single search over a `Problem`, restricted to the vertices in
    `allowed`. Tracks the number of visited search nodes in `explored`.
    """

    def __init__(self, problem: Problem, allowed: int | None = None):
        """
        Create a new `Search`; `allowed` defaults to every vertex.
        """
        self.problem = problem
        self.allowed = problem.full if allowed is None else allowed
        self.explored = 0

    def _violation(self, chosen: int, covered: int) -> int | None:
        """
        Returns the candidate mask of the most constrained violation, `None`
        when `chosen` is a solution.
        """
        problem = self.problem
        best: int | None = None
        best_count = problem.n + 1

        missing = problem.full & ~covered
        for v in bits(missing):
            candidates = problem.cover[v] & self.allowed & ~chosen
            count = candidates.bit_count()
            if count < best_count:
                best, best_count = candidates, count
                if count <= 1:
                    return best

        if best is None and problem.partner is not None:
            for v in bits(chosen & ~problem.exempt):
                if problem.partner[v] & chosen:
                    continue
                candidates = problem.partner[v] & self.allowed & ~chosen
                count = candidates.bit_count()
                if count < best_count:
                    best, best_count = candidates, count
                    if count <= 1:
                        return best

        return best

    def _visit(
        self, chosen: int, covered: int, size: int, k: int, seen: set[int]
    ) -> Iterator[int]:
        if chosen in seen:
            return
        seen.add(chosen)
        self.explored += 1

        candidates = self._violation(chosen, covered)
        if candidates is None:
            yield chosen
            return
        if size >= k:
            return

        missing = (self.problem.full & ~covered).bit_count()
        if missing > (k - size) * self.problem.max_cover:
            return

        cover = self.problem.cover
        for c in bits(candidates):
            yield from self._visit(chosen | (1 << c), covered | cover[c], size + 1, k, seen)

    def solutions(self, k: int, forced: int = 0) -> Iterator[int]:
        """
        Yields every distinct set of at most `k` vertices that contains
        `forced`, lies within `allowed` and is reached as a solution by the
        branching. When `k` is the optimum this is every optimal set.
        """
        if forced.bit_count() > k:
            return
        covered = 0
        for v in bits(forced):
            covered |= self.problem.cover[v]
        yield from self._visit(forced, covered, forced.bit_count(), k, set())

    def feasible(self, k: int, forced: int = 0) -> int | None:
        """
        Returns some solution of size at most `k` containing `forced`, or
        `None` when none exists.
        """
        return next(self.solutions(k, forced), None)

    def optimum(
        self, lower: int = 0, hint: int | None = None, forced: int = 0
    ) -> int | None:
        """
        Returns the minimum size of a solution containing `forced`, or `None`
        when the allowed vertices admit no such solution.

        With a `hint`, the search probes sizes around it first; without one it
        deepens from `lower`.
        """
        lower = max(lower, forced.bit_count())
        ceiling = (self.allowed | forced).bit_count()
        if self.feasible(ceiling, forced) is None:
            return None

        if hint is None:
            k = lower
            while self.feasible(k, forced) is None:
                k += 1
            return k

        k = min(max(hint, lower), ceiling)
        if self.feasible(k, forced) is not None:
            while k > lower and self.feasible(k - 1, forced) is not None:
                k -= 1
            return k
        while self.feasible(k, forced) is None:
            k += 1
        return k

    def least_solution(self, k: int, forced: int = 0) -> int | None:
        """
        Returns the lexicographically least solution of size `k` containing
        `forced` (comparing sorted vertex-id sequences), or `None` when none
        exists.

        `k` must be the optimum so that every solution has exactly `k` members.
        """
        chosen = 0
        last = -1
        for _ in range(k):
            pending = forced & ~chosen
            ceiling = (pending & -pending).bit_length() - 1 if pending else self.problem.n
            picked = None
            for c in bits((self.allowed | forced) & ~((1 << (last + 1)) - 1)):
                if c > ceiling:
                    break
                trial = chosen | (1 << c)
                later = (self.allowed | forced) & ~((1 << (c + 1)) - 1)
                probe = Search(self.problem, trial | later)
                found = probe.feasible(k, trial | forced)
                self.explored += probe.explored
                if found is not None:
                    picked = c
                    break
            if picked is None:
                return None
            chosen, last = chosen | (1 << picked), picked
            if chosen & forced == forced and self.problem.satisfied_by(chosen):
                break
        return chosen
