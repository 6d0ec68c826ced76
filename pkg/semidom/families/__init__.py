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
Operation-closed families of labeled trees.

A family is a seed labeled path together with the operations it is closed
under. This package builds labeled trees and derivations, enumerates family
catalogs, recognizes membership, checks the structural rules members obey,
and builds almost semitotal dominating sets for members of family `U`.
"""

from semidom.families.catalog import (
    CatalogMember,
    FamilyCatalog,
    Recognition,
    RecognitionReport,
    generate_family,
    recognize,
)
from semidom.families.construct import (
    AlmostSemitotalSet,
    build_almost_semitotal_set,
    construct_for_member,
    construct_for_tree,
)
from semidom.families.labeled import (
    Derivation,
    FamilyId,
    LabeledTree,
    Operation,
    Status,
    Step,
    apply_operation,
    seed,
)
from semidom.families.observations import Violation, validate_labeling

__all__ = [
    "AlmostSemitotalSet",
    "CatalogMember",
    "Derivation",
    "FamilyCatalog",
    "FamilyId",
    "LabeledTree",
    "Operation",
    "Recognition",
    "RecognitionReport",
    "Status",
    "Step",
    "Violation",
    "apply_operation",
    "build_almost_semitotal_set",
    "construct_for_member",
    "construct_for_tree",
    "generate_family",
    "recognize",
    "seed",
    "validate_labeling",
]
