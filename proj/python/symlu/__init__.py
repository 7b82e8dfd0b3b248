# Copyright 2026 The symlu Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Local unitary classification of symmetric multiqubit states."""

from ._core import (
    AmbiguousClassification,
    DomainError,
    UnsupportedError,
    canonical_ghz_form,
    check_stabilizes,
    class_census,
    classify_state,
    dicke,
    ghz,
    lu_equivalent_mixed,
    lu_equivalent_pure,
    majorana_points,
    points_to_state,
    random_state,
    so3_to_su2,
    su2_to_so3,
    symmetry_group,
)

__all__ = [
    "AmbiguousClassification",
    "DomainError",
    "UnsupportedError",
    "canonical_ghz_form",
    "check_stabilizes",
    "class_census",
    "classify_state",
    "dicke",
    "ghz",
    "lu_equivalent_mixed",
    "lu_equivalent_pure",
    "majorana_points",
    "points_to_state",
    "random_state",
    "so3_to_su2",
    "su2_to_so3",
    "symmetry_group",
]
