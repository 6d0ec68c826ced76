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
Running claims: bounds checks, optional process-level fan-out, and the
merge into a deterministic `VerificationReport`.
"""

from __future__ import annotations

import enum
import logging
import time
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor

from pydantic import BaseModel, ConfigDict

from semidom.errors import VerificationError
from semidom.graph import Graph
from semidom.verify.claims import CLAIMS, Bounds, ClaimId, Finding

_logger = logging.getLogger(__name__)

COUNTEREXAMPLE_CAP = 25


class Verdict(str, enum.Enum):
    """
    The outcome of a verification run.
    """

    PASS = "pass"
    FAIL = "fail"


class Counterexample(BaseModel):
    """
    An instance on which a claim failed.
    """

    model_config = ConfigDict(frozen=True)

    key: str
    """
    The canonical code of a tree, `g6:<record>` for a streamed graph, or a
    named-graph label.
    """

    n: int
    detail: str


class VerificationReport(BaseModel):
    """
    The result of checking one claim over a range of instances.
    """

    model_config = ConfigDict(frozen=True)

    claim: ClaimId
    verdict: Verdict
    bounds: Bounds
    orders: list[int]
    instances: int
    failures: int
    counterexamples: list[Counterexample]
    """
    The first failures sorted by `(n, key)`, at most `COUNTEREXAMPLE_CAP`.
    """

    notes: dict[str, int | str]
    elapsed_ms: int


def resolve_claim(claim: ClaimId | str) -> ClaimId:
    """
    Returns the `ClaimId` for a command-line identifier.
    """
    try:
        return ClaimId(claim)
    except ValueError:
        known = ", ".join(c.value for c in ClaimId)
        raise VerificationError(f"unknown claim {claim!r}; known claims: {known}") from None


def run_verification(
    claim: ClaimId | str,
    bounds: Bounds | None = None,
    graphs: Sequence[Graph] = (),
    *,
    jobs: int = 1,
) -> VerificationReport:
    """
    Checks `claim` over every instance within `bounds` (the claim's default
    bounds when omitted) plus, for claims that accept them, the externally
    supplied `graphs`.

    The report depends only on the instance set: findings are merged in a
    fixed order regardless of `jobs`.
    """
    claim_id = resolve_claim(claim)
    check = CLAIMS[claim_id]
    bounds = bounds or check.default_bounds
    if bounds.max_n > check.budget:
        raise VerificationError(
            f"bound {bounds.max_n} exceeds the budget for {claim_id}",
            budget=check.budget,
            claim=claim_id.value,
        )
    if graphs and not check.uses_stream:
        _logger.info(f"{claim_id} does not use streamed graphs; ignoring {len(graphs)}")

    start = time.monotonic()
    items = list(check.instances(bounds, graphs))
    _logger.info(f"{claim_id}: checking {len(items)} instance(s) over {bounds}")

    findings: list[Finding]
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunksize = max(1, len(items) // (jobs * 8))
            findings = list(pool.map(check.evaluate, items, chunksize=chunksize))
    else:
        findings = [check.evaluate(item) for item in items]

    failures = [(f.key, f.n, f.detail) for f in findings if not f.holds]
    for key, n, detail in failures:
        _logger.debug(f"{claim_id}: counterexample {key} (n={n}): {detail}")

    conclusion = check.conclude(findings, bounds)
    failures.extend(conclusion.failures)
    failures.sort(key=lambda failure: (failure[1], failure[0]))

    report = VerificationReport(
        claim=claim_id,
        verdict=Verdict.FAIL if failures else Verdict.PASS,
        bounds=bounds,
        orders=sorted({f.n for f in findings}),
        instances=len(findings),
        failures=len(failures),
        counterexamples=[
            Counterexample(key=key, n=n, detail=detail)
            for key, n, detail in failures[:COUNTEREXAMPLE_CAP]
        ],
        notes=conclusion.notes,
        elapsed_ms=int((time.monotonic() - start) * 1000),
    )
    _logger.info(f"{claim_id}: {report.verdict.value} ({report.failures} failure(s))")
    return report
