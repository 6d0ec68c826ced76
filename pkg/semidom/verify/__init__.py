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
Exhaustive, bounded verification of the structural claims about domination,
semitotal domination and multisubdivision numbers.

Example:
```python
from semidom.verify import Bounds, run_verification

report = run_verification("obs2.2", Bounds(min_n=3, max_n=12))
print(report.verdict)
```
"""

from semidom.verify.claims import CLAIMS, Bounds, ClaimId
from semidom.verify.harness import (
    Counterexample,
    Verdict,
    VerificationReport,
    resolve_claim,
    run_verification,
)

__all__ = [
    "CLAIMS",
    "Bounds",
    "ClaimId",
    "Counterexample",
    "Verdict",
    "VerificationReport",
    "resolve_claim",
    "run_verification",
]
