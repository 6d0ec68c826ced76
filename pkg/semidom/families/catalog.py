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
Family catalogs: every labeled tree of a family up to an order bound, with
the derivations that build it, and membership lookup against them.
"""

from __future__ import annotations

import functools
import logging
from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

from pydantic import BaseModel, ConfigDict

from semidom.errors import GraphError, NotATree
from semidom.families.labeled import (
    Derivation,
    FamilyId,
    LabeledTree,
    apply_operation,
    seed,
)
from semidom.graph import Graph, is_tree
from semidom.trees import CanonicalCode, canonical_code, tree_isomorphism

_logger = logging.getLogger(__name__)

REALIZATION_CAP = 32
"""
The most realizations stored per catalog member.
"""


@dataclass(frozen=True)
class CatalogMember:
    """
    One labeled tree of a family, up to isomorphism, with the concrete
    realizations that build it.

    Every realization is a `(LabeledTree, Derivation)` pair whose derivation
    replays to exactly that labeled tree; all realizations share `code`.
    """

    code: CanonicalCode
    tree_code: CanonicalCode
    realizations: tuple[tuple[LabeledTree, Derivation], ...]

    def __post_init__(self) -> None:
        """
        Checks that there is at least one realization.
        """
        if not self.realizations:
            raise GraphError(f"catalog member {self.code} has no realization")

    @property
    def n(self) -> int:
        """
        The order of this member.
        """
        return self.representative.n

    @property
    def representative(self) -> LabeledTree:
        """
        The first realization's labeled tree.
        """
        return self.realizations[0][0]

    @property
    def derivation(self) -> Derivation:
        """
        The first realization's derivation.
        """
        return self.realizations[0][1]


@dataclass(frozen=True)
class FamilyCatalog:
    """
    Every member of a family up to order `bound`, grouped by the canonical
    code of the underlying unlabeled tree.
    """

    family: FamilyId
    bound: int
    members: Mapping[CanonicalCode, tuple[CatalogMember, ...]] = field(
        default_factory=lambda: MappingProxyType({})
    )

    def __iter__(self) -> Iterator[CatalogMember]:
        """
        Iterates over the members by order, then by code.
        """
        flat = (m for group in self.members.values() for m in group)
        return iter(sorted(flat, key=lambda m: (m.n, m.tree_code, m.code)))

    def __len__(self) -> int:
        """
        Returns the number of labeled members.
        """
        return sum(len(group) for group in self.members.values())

    def tree_codes(self, n_min: int = 0) -> set[CanonicalCode]:
        """
        Returns the unlabeled codes of the trees with a labeling in this
        family, optionally only those of order at least `n_min`.
        """
        return {m.tree_code for m in self if m.n >= n_min}

    def lookup(self, code: CanonicalCode) -> list[CatalogMember]:
        """
        Returns the members over the unlabeled tree with `code`.
        """
        return sorted(self.members.get(code, ()), key=lambda m: m.code)


@functools.lru_cache(maxsize=16)
def generate_family(family: FamilyId, n_max: int) -> FamilyCatalog:
    """
    Closes the seed of `family` under the family's operations, keeping every
    labeled tree of order at most `n_max`.

    Members are processed in increasing order so every member is complete
    before it is expanded; the result does not depend on expansion order
    within an order. Returns an empty catalog when `n_max` is below the seed
    order. At most `REALIZATION_CAP` distinct realizations are kept per
    member.
    """
    family = FamilyId(family)
    origin = seed(family)
    if n_max < origin.n:
        _logger.debug(f"bound {n_max} is below the seed order of family {family.value}")
        return FamilyCatalog(family=family, bound=n_max)

    # order -> labeled code -> realizations
    by_order: dict[int, dict[CanonicalCode, list[tuple[LabeledTree, Derivation]]]] = {}

    def record(labeled: LabeledTree, derivation: Derivation) -> None:
        """
        Files a realization under its order and labeled code.
        """
        found = by_order.setdefault(labeled.n, {}).setdefault(labeled.code, [])
        if len(found) >= REALIZATION_CAP or any(existing == labeled for existing, _ in found):
            return
        found.append((labeled, derivation))

    record(origin, Derivation(family=family))
    grouped: dict[CanonicalCode, list[CatalogMember]] = {}
    for n in range(origin.n, n_max + 1):
        bucket = by_order.get(n, {})
        for code in sorted(bucket):
            for labeled, derivation in bucket[code]:
                for v in range(labeled.n):
                    for op in family.operations:
                        if labeled.status[v] not in op.requires:
                            continue
                        if labeled.n + len(op.branch) > n_max:
                            continue
                        record(apply_operation(labeled, op, v), derivation.extend(op, v))

        for code, realizations in bucket.items():
            member = CatalogMember(code, realizations[0][0].tree_code, tuple(realizations))
            grouped.setdefault(member.tree_code, []).append(member)
        _logger.debug(f"family {family.value}: {len(bucket)} member(s) of order {n}")

    catalog = FamilyCatalog(
        family=family,
        bound=n_max,
        members=MappingProxyType({code: tuple(group) for code, group in grouped.items()}),
    )
    _logger.info(f"generated family {family.value} up to order {n_max}: {len(catalog)} member(s)")
    return catalog


@dataclass(frozen=True)
class Recognition:
    """
    A labeling of a caller's tree that places it in a family.

    `labeled` uses the caller's vertex ids; `vertex_map` sends each of them to
    the corresponding vertex of `derivation`'s replay.
    """

    labeled: LabeledTree
    derivation: Derivation
    vertex_map: dict[int, int]

    def report(self) -> RecognitionReport:
        """
        Returns the serializable form of this recognition.
        """
        return RecognitionReport(
            family=self.derivation.family,
            n=self.labeled.n,
            status=self.labeled.status_string,
            derivation=str(self.derivation),
            vertex_map=[self.vertex_map[v] for v in range(self.labeled.n)],
        )


class RecognitionReport(BaseModel):
    """
    A recognition result as emitted by the command line.
    """

    model_config = ConfigDict(frozen=True)

    family: FamilyId
    n: int
    status: str
    derivation: str
    vertex_map: list[int]


def recognize(family: FamilyId, tree: Graph, n_cap: int = 16) -> Recognition | None:
    """
    Finds a labeling that places `tree` in `family`, or returns `None` when
    no labeling does.
    """
    family = FamilyId(family)
    if not is_tree(tree):
        raise NotATree(f"graph of order {tree.n} with {tree.size} edges is not a tree")
    if tree.n > n_cap:
        raise GraphError(f"tree of order {tree.n} exceeds the recognition cap {n_cap}")

    catalog = generate_family(family, tree.n)
    candidates = catalog.lookup(canonical_code(tree))
    if not candidates:
        return None

    member = candidates[0]
    labeled, derivation = member.realizations[0]
    mapping = tree_isomorphism(tree, labeled.tree)
    assert mapping is not None
    statuses = tuple(labeled.status[mapping[v]] for v in range(tree.n))
    return Recognition(
        labeled=LabeledTree(tree, statuses),
        derivation=derivation,
        vertex_map=mapping,
    )
