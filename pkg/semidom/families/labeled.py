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
Labeled trees, the six family operations, and replayable derivations.
"""

from __future__ import annotations

import enum
import logging
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

from pydantic import BaseModel, ConfigDict

from semidom.errors import LabelingError, NotATree
from semidom.graph import Edge, Graph, is_tree
from semidom.trees import CanonicalCode, canonical_code

_logger = logging.getLogger(__name__)


class Status(str, enum.Enum):
    """
    The status (label) of a vertex in a labeled tree.
    """

    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"


class Operation(str, enum.Enum):
    """
    The operations that grow a labeled tree by attaching a path to a vertex.
    """

    P1 = "P1"
    P2 = "P2"
    P3 = "P3"
    O1 = "O1"
    O2 = "O2"
    O3 = "O3"

    @property
    def requires(self) -> frozenset[Status]:
        """
        The statuses an attach vertex may have for this operation.
        """
        return _SHAPES[self][0]

    @property
    def branch(self) -> tuple[Status, ...]:
        """
        The statuses of the attached path, starting at the vertex adjacent to
        the attach vertex.
        """
        return _SHAPES[self][1]


_S = Status
_SHAPES: dict[Operation, tuple[frozenset[Status], tuple[Status, ...]]] = {
    Operation.P1: (frozenset({_S.A}), (_S.C,)),
    Operation.P2: (frozenset({_S.B}), (_S.B, _S.C, _S.A, _S.C)),
    Operation.P3: (frozenset({_S.C}), (_S.B, _S.B, _S.C, _S.A, _S.C)),
    Operation.O1: (frozenset({_S.A, _S.B}), (_S.C,)),
    Operation.O2: (frozenset({_S.A}), (_S.D, _S.E, _S.B, _S.C)),
    Operation.O3: (frozenset({_S.A}), (_S.D, _S.B, _S.C)),
}


class FamilyId(str, enum.Enum):
    """
    The three operation-closed families of labeled trees.

    `U` characterizes the Class 3 trees, `T` the trees with γ_t2 = 2γ − 1 and
    `T1` the trees with γ_t = 2γ_t2 − 1.
    """

    U = "U"
    T = "T"
    T1 = "T1"

    @property
    def seed_statuses(self) -> tuple[Status, ...]:
        """
        The statuses along the seed path.
        """
        return _FAMILIES[self][0]

    @property
    def operations(self) -> tuple[Operation, ...]:
        """
        The operations this family is closed under.
        """
        return _FAMILIES[self][1]

    @property
    def alphabet(self) -> frozenset[Status]:
        """
        The statuses a labeling in this family may use.
        """
        if self is FamilyId.U:
            return frozenset({_S.A, _S.B, _S.C})
        return frozenset(Status)


_FAMILIES: dict[FamilyId, tuple[tuple[Status, ...], tuple[Operation, ...]]] = {
    FamilyId.U: ((_S.C, _S.A, _S.C), (Operation.P1, Operation.P2, Operation.P3)),
    FamilyId.T: (
        (_S.C, _S.A, _S.D, _S.E, _S.B, _S.C),
        (Operation.O1, Operation.O2),
    ),
    FamilyId.T1: ((_S.C, _S.B, _S.D, _S.A, _S.C), (Operation.O1, Operation.O3)),
}


@dataclass(frozen=True)
class LabeledTree:
    """
    A tree together with a status for every vertex.
    """

    tree: Graph
    status: tuple[Status, ...]

    def __post_init__(self) -> None:
        """
        Checks that `tree` is a tree and that every vertex carries a status.
        """
        if not is_tree(self.tree):
            raise NotATree(f"graph of order {self.tree.n} is not a tree")
        if len(self.status) != self.tree.n:
            raise LabelingError(f"expected {self.tree.n} statuses, got {len(self.status)}")

    @classmethod
    def from_string(cls, tree: Graph, statuses: str | Sequence[str]) -> LabeledTree:
        """
        Builds a labeled tree from a status string such as `"CACBBCAC"`.
        """
        try:
            return cls(tree, tuple(Status(s) for s in statuses))
        except ValueError as e:
            raise LabelingError(f"invalid status in {statuses!r}") from e

    @property
    def n(self) -> int:
        """
        The order of the underlying tree.
        """
        return self.tree.n

    @property
    def status_string(self) -> str:
        """
        The statuses as a string, indexed by vertex id.
        """
        return "".join(s.value for s in self.status)

    def members(self, status: Status) -> frozenset[int]:
        """
        Returns the vertices with the given status.
        """
        return frozenset(v for v, s in enumerate(self.status) if s is status)

    @cached_property
    def code(self) -> CanonicalCode:
        """
        The canonical code of the labeled tree; equal codes mean some
        isomorphism carries one labeling onto the other.
        """
        return canonical_code(self.tree, self.status_string)

    @cached_property
    def tree_code(self) -> CanonicalCode:
        """
        The canonical code of the underlying unlabeled tree.
        """
        return canonical_code(self.tree)


def seed(family: FamilyId) -> LabeledTree:
    """
    Returns the seed of `family`: a labeled path.
    """
    statuses = FamilyId(family).seed_statuses
    n = len(statuses)
    return LabeledTree(Graph(n, (Edge(v, v + 1) for v in range(n - 1))), statuses)


def apply_operation(labeled: LabeledTree, op: Operation, v: int) -> LabeledTree:
    """
    Attaches the path of `op` to vertex `v`.

    The new vertices get ids `n, n+1, ...` in path order, with `n` adjacent to
    `v`. Raises `LabelingError` when `v`'s status does not allow `op`.
    """
    op = Operation(op)
    labeled.tree.check_vertex(v)
    if labeled.status[v] not in op.requires:
        raise LabelingError(
            f"{op.value} needs a vertex with status in "
            f"{sorted(s.value for s in op.requires)}, but vertex {v} is {labeled.status[v].value}"
        )

    n = labeled.n
    branch = op.branch
    path = [v, *range(n, n + len(branch))]
    edges = set(labeled.tree.edges)
    edges.update(Edge.of(a, b) for a, b in zip(path, path[1:]))
    return LabeledTree(Graph(n + len(branch), edges), labeled.status + branch)


class Step(BaseModel):
    """
    One operation applied at an attach vertex.
    """

    model_config = ConfigDict(frozen=True)

    op: Operation
    vertex: int

    def __str__(self) -> str:
        """
        Returns the `op@vertex` text form.
        """
        return f"{self.op.value}@{self.vertex}"


class Derivation(BaseModel):
    """
    A sequence of operations that rebuilds a labeled tree from its family's
    seed. Attach vertices are ids at the time the step is applied.
    """

    model_config = ConfigDict(frozen=True)

    family: FamilyId
    steps: tuple[Step, ...] = ()

    def __str__(self) -> str:
        """
        Returns the steps as `op@v,op@v,...`, or `-` for the seed itself.
        """
        return ",".join(str(step) for step in self.steps) or "-"

    @classmethod
    def parse(cls, family: FamilyId, text: str) -> Derivation:
        """
        Parses the text form produced by `str()`.
        """
        if text.strip() == "-":
            return cls(family=family)
        steps = []
        for token in text.split(","):
            op, sep, vertex = token.strip().partition("@")
            if not sep:
                raise LabelingError(f"malformed derivation step: {token!r}")
            try:
                steps.append(Step(op=Operation(op), vertex=int(vertex)))
            except ValueError as e:
                raise LabelingError(f"malformed derivation step: {token!r}") from e
        return cls(family=family, steps=tuple(steps))

    def extend(self, op: Operation, vertex: int) -> Derivation:
        """
        Returns this derivation with one more step.
        """
        op = Operation(op)
        if op not in self.family.operations:
            raise LabelingError(f"{op.value} is not an operation of family {self.family.value}")
        return Derivation(family=self.family, steps=(*self.steps, Step(op=op, vertex=vertex)))

    def replay(self) -> LabeledTree:
        """
        Rebuilds the labeled tree this derivation describes.
        """
        labeled = seed(self.family)
        for step in self.steps:
            if step.op not in self.family.operations:
                raise LabelingError(
                    f"{step.op.value} is not an operation of family {self.family.value}"
                )
            labeled = apply_operation(labeled, step.op, step.vertex)
        return labeled

    def offsets(self) -> list[int]:
        """
        Returns the id of the first vertex added by each step.
        """
        offsets = []
        n = len(self.family.seed_statuses)
        for step in self.steps:
            offsets.append(n)
            n += len(step.op.branch)
        return offsets

    def introduction_step(self, v: int) -> int:
        """
        Returns the 1-based index of the step that added `v`, or 0 when `v`
        belongs to the seed.
        """
        if v < 0:
            raise LabelingError(f"vertex {v} out of range")
        introduced = 0
        for j, offset in enumerate(self.offsets(), start=1):
            if v < offset:
                break
            introduced = j
        else:
            total = len(self.family.seed_statuses) + sum(len(s.op.branch) for s in self.steps)
            if v >= total:
                raise LabelingError(f"vertex {v} out of range for a derivation of order {total}")
        return introduced
