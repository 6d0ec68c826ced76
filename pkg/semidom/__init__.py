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
The `semidom` Python APIs.

For command-line usage of `semidom`, run `semidom --help`.

Otherwise, here are some quick starting points:

* `semidom.graph`: graph construction, named graphs and edge subdivision
* `semidom.solvers`: exact domination, total domination and semitotal
  domination numbers
* `semidom.subdivision`: the semitotal domination multisubdivision number
* `semidom.families`: the operation-closed labeled tree families
* `semidom.verify`: exhaustive desk-scale verification of the published claims
"""

__version__ = "0.3.0"
