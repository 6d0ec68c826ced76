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

import pytest

from semidom.errors import LabelingError
from semidom.families.catalog import generate_family
from semidom.families.labeled import FamilyId, LabeledTree, seed
from semidom.families.observations import validate_labeling
from semidom.graph import GraphKind, named_graph


def _clauses(violations):
    return {v.clause for v in violations}


@pytest.mark.parametrize(("family", "n_max"), [("U", 11), ("T", 12), ("T1", 12)])
def test_members_follow_the_rules(family, n_max):
    for member in generate_family(family, n_max):
        for labeled, _ in member.realizations[:2]:
            assert validate_labeling(labeled, family) == []


class TestFamilyU:
    def test_mislabeled_support(self):
        labeled = LabeledTree.from_string(seed(FamilyId.U).tree, "CCC")
        violations = validate_labeling(labeled, FamilyId.U)
        assert {"support-status", "independence", "c-neighborhood"} <= _clauses(violations)
        assert any(v.vertex == 1 for v in violations)

    def test_b_vertex_neighbors(self):
        labeled = LabeledTree.from_string(named_graph(GraphKind.PATH, 4), "CBAC")
        assert "b-neighborhood" in _clauses(validate_labeling(labeled, "U"))

    def test_alphabet(self):
        labeled = LabeledTree.from_string(seed(FamilyId.U).tree, "CDC")
        with pytest.raises(LabelingError, match="not used by family U"):
            validate_labeling(labeled, FamilyId.U)


class TestFamilyT:
    def test_seed(self):
        assert validate_labeling(seed(FamilyId.T), FamilyId.T) == []

    def test_swapped_a_and_b(self):
        labeled = LabeledTree.from_string(seed(FamilyId.T).tree, "CBDEAC")
        clauses = _clauses(validate_labeling(labeled, FamilyId.T))
        assert "non-leaf-neighbors" in clauses
        assert "unique-gamma-set" not in clauses

    def test_status_counts(self):
        labeled = LabeledTree.from_string(seed(FamilyId.T).tree, "CADDBC")
        assert "status-counts" in _clauses(validate_labeling(labeled, FamilyId.T))

    def test_gamma_set_not_unique(self):
        # P7 has several minimum dominating sets.
        labeled = LabeledTree.from_string(named_graph(GraphKind.PATH, 7), "CADEEBC")
        assert "unique-gamma-set" in _clauses(validate_labeling(labeled, FamilyId.T))


class TestFamilyT1:
    def test_seed(self):
        assert validate_labeling(seed(FamilyId.T1), "T1") == []

    def test_leaf_must_be_c(self):
        labeled = LabeledTree.from_string(seed(FamilyId.T1).tree, "CBDAB")
        clauses = _clauses(validate_labeling(labeled, FamilyId.T1))
        assert {"leaf-iff-c", "status-counts"} <= clauses

    def test_d_vertex_path(self):
        labeled = LabeledTree.from_string(seed(FamilyId.T1).tree, "CBDDC")
        assert "degree-two-path" in _clauses(validate_labeling(labeled, FamilyId.T1))

    def test_rejects_e(self):
        labeled = LabeledTree.from_string(seed(FamilyId.T1).tree, "CBEAC")
        assert "status-counts" in _clauses(validate_labeling(labeled, FamilyId.T1))
