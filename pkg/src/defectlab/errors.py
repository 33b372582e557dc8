"""Exception types raised across the package."""

from __future__ import annotations


class DefectLabError(Exception):
    """Base class for all package errors."""


class ParseError(DefectLabError, ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class PyramidError(DefectLabError, ValueError):
    """Input is a pyramid; strip apexes with ``pyramid_index`` first."""


class SimplexError(DefectLabError, ValueError):
    """Codimension zero: there are no circuits, chains or flags to search."""


class NotAFlatError(DefectLabError, ValueError):
    pass


class InvalidFlagError(DefectLabError, ValueError):
    pass


class InvalidChainError(DefectLabError, ValueError):
    pass


class DualHomogeneityError(DefectLabError, ValueError):
    pass


class InvalidIteratedCircuit(DefectLabError, ValueError):
    """Carries the failing part index (0-based) and the violated condition."""

    def __init__(self, part: int, condition: str, detail: str = ""):
        self.part = part
        self.condition = condition
        msg = f"part {part}: {condition}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class InvalidPartitionError(DefectLabError, ValueError):
    pass
