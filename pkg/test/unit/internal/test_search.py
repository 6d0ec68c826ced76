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

from semidom._internal.search import Problem, Search, bits, to_mask


def _path_problem(n: int) -> Problem:
    closed = tuple(
        (1 << v) | (1 << (v - 1) if v > 0 else 0) | (1 << (v + 1) if v < n - 1 else 0)
        for v in range(n)
    )
    return Problem(n, closed)


def test_bits_and_mask():
    assert list(bits(0b101001)) == [0, 3, 5]
    assert list(bits(0)) == []
    assert to_mask([5, 0, 3]) == 0b101001


def test_problem_satisfied_by():
    problem = _path_problem(5)
    assert problem.full == 0b11111
    assert problem.max_cover == 3
    assert problem.satisfied_by(to_mask([1, 3]))
    assert problem.satisfied_by(to_mask([1, 4]))
    assert not problem.satisfied_by(to_mask([0, 4]))


def test_optimum_with_and_without_hint():
    problem = _path_problem(7)
    assert Search(problem).optimum() == 3
    assert Search(problem).optimum(hint=1) == 3
    assert Search(problem).optimum(hint=6) == 3


def test_least_solution_is_lexicographic():
    search = Search(_path_problem(6))
    assert list(bits(search.least_solution(2))) == [1, 4]


def test_solutions_are_every_optimum():
    # P_4: {0,2}, {0,3}, {1,2}, {1,3}.
    found = {frozenset(bits(s)) for s in Search(_path_problem(4)).solutions(2)}
    assert found == {
        frozenset({0, 2}),
        frozenset({0, 3}),
        frozenset({1, 2}),
        frozenset({1, 3}),
    }


def test_allowed_restriction():
    problem = _path_problem(3)
    assert Search(problem, to_mask([0, 2])).optimum() == 2
    assert Search(problem, 0).optimum() is None


def test_partner_obligation_and_exemption():
    closed = _path_problem(3).cover
    partner = (0b110, 0b101, 0b011)
    assert Search(Problem(3, closed, partner)).optimum() == 2
    exempt = Problem(3, closed, partner, exempt=0b010)
    search = Search(exempt)
    assert search.optimum(forced=0b010) == 1
    assert search.least_solution(1, forced=0b010) == 0b010


def test_explored_counts_nodes():
    search = Search(_path_problem(8))
    search.optimum()
    assert search.explored > 0
