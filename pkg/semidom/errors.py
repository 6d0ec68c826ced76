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
Exceptions.
"""

from __future__ import annotations

import sys
from logging import Logger
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from semidom.subdivision import MsdLevel


class Error(Exception):
    """Base semidom exception type. Defines helpers for diagnostics."""

    exit_code: int = 2
    """
    The process exit code used by `log_and_exit`.
    """

    def diagnostics(self) -> str:
        """Returns human-friendly error information."""

        return str(self)

    def log_and_exit(self, logger: Logger, raise_error: bool = False) -> None:
        """Prints all relevant error information to stderr and exits."""

        remind_verbose = (
            "Raising original exception:"
            if raise_error
            else "For detailed error information, run semidom with the `--verbose` flag."
        )

        logger.error(f"{self.diagnostics()}\n{remind_verbose}")

        if raise_error:
            # don't want "during handling another exception"
            self.__suppress_context__ = True
            raise self

        sys.exit(self.exit_code)


class GraphError(Error):
    """Raised when a graph or a graph operation receives invalid input."""


class NotATree(GraphError):
    """Raised when an operation that requires a tree receives something else."""

    def diagnostics(self) -> str:
        """Returns diagnostics for the error."""
        return f"{self}: the input graph must be connected and acyclic."


class DisconnectedGraph(GraphError):
    """Raised when an operation that requires a connected graph receives a disconnected one."""


class SolverError(Error):
    """Raised when a domination solver cannot accept its input."""


class MsdNotFound(Error):
    """
    Raised when no single-edge subdivision of at most `k_max` vertices increases
    the semitotal domination number.
    """

    exit_code = 1

    def __init__(self, message: str, table: list[MsdLevel]):
        """Constructs a `MsdNotFound` carrying the per-k table that was computed."""
        super().__init__(message)
        self.table = table

    def diagnostics(self) -> str:
        """Returns diagnostics for the error, including the computed table."""
        rows = "\n".join(
            f"    k={level.k}: min={level.min_value} max={level.max_value}"
            for level in self.table
        )
        return f"{self}.\n\n{rows}\n"


class LabelingError(Error):
    """Raised when a labeled tree or a family operation is used inconsistently."""


class FormatError(Error):
    """Raised when an edge list or graph6 input cannot be decoded."""

    def __init__(self, message: str, *, line: int | None = None):
        """Constructs a `FormatError`, optionally pinned to a 1-based input line."""
        super().__init__(message)
        self.line = line

    def diagnostics(self) -> str:
        """Returns diagnostics for the error."""
        if self.line is None:
            return f"malformed input: {self}"
        return f"malformed input at line {self.line}: {self}"


class VerificationError(Error):
    """
    Raised when the verification harness is asked for an unknown claim or for
    bounds beyond its configured budget.
    """

    def __init__(self, message: str, **context: Any):
        """Constructs a `VerificationError` with optional context for diagnostics."""
        super().__init__(message)
        self.context = context

    def diagnostics(self) -> str:
        """Returns diagnostics for the error."""
        if not self.context:
            return str(self)
        details = ", ".join(f"{k}={v}" for k, v in sorted(self.context.items()))
        return f"{self} ({details})"
