"""
Errors and Exit Codes
=====================

Exception hierarchy shared by every service, and the exit codes the
command line maps them to.

Library code raises these exceptions; only ``scripts.tangency`` turns them
into exit statuses and diagnostics.

Exit Codes:
    0  CRITERION_HOLDS   criterion holds / command succeeded
    1  ERROR             operational error (bad input, unreadable file)
    2  USAGE             command-line usage error
    3  CRITERION_FAILS   criterion fails (a mathematical finding, not an error)
    4  BUDGET_EXCEEDED   oracle exploration exceeded its node budget
"""

from __future__ import annotations

from enum import IntEnum
from typing import Optional


class ExitCode(IntEnum):
    CRITERION_HOLDS = 0
    ERROR = 1
    USAGE = 2
    CRITERION_FAILS = 3
    BUDGET_EXCEEDED = 4


class TangencyError(Exception):
    """Base class for every error raised by the toolkit."""


def _position(source: Optional[str], line: Optional[int], column: Optional[int]) -> str:
    parts = [p for p in (source, line, column) if p is not None]
    return ":".join(str(p) for p in parts)


class MalformedWord(TangencyError):
    """A word line could not be parsed (bad token or mixed notation)."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None,
                 source: Optional[str] = None):
        self.line = line
        self.column = column
        self.source = source
        where = _position(source, line, column)
        super().__init__(f"{where}: {message}" if where else message)


class IndexOutOfRange(TangencyError):
    """A word mentions a generator whose index exceeds the genus."""

    def __init__(self, index: int, genus: int, line: Optional[int] = None,
                 column: Optional[int] = None, source: Optional[str] = None):
        self.index = index
        self.genus = genus
        self.line = line
        self.column = column
        self.source = source
        message = f"generator x{index} out of range for genus {genus}"
        where = _position(source, line, column)
        super().__init__(f"{where}: {message}" if where else message)


class MissingGenus(TangencyError):
    """The document has no ``genus <g>`` header line."""

    def __init__(self, source: Optional[str] = None, line: Optional[int] = None):
        self.source = source
        self.line = line
        where = _position(source, line, None)
        message = "missing 'genus <g>' header"
        super().__init__(f"{where}: {message}" if where else message)


class BudgetExceeded(TangencyError):
    """The oracle visited more states than its node budget allows."""

    def __init__(self, budget: int, visited: int):
        self.budget = budget
        self.visited = visited
        super().__init__(
            f"exploration exceeded node budget ({visited} states > {budget}); "
            "instance too large for certification"
        )
