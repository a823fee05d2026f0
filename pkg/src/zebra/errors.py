"""Exception hierarchy shared by every zebra module."""

from __future__ import annotations

from dataclasses import dataclass


class ZebraError(Exception):
    """Base class for all errors raised by this package."""


@dataclass(frozen=True)
class Issue:
    """One problem found in a mechanism or a source document.

    ``line`` and ``col`` are 1-based and only set for issues that come from
    parsing text; ``subject`` names the offending link or joint when known.
    """

    code: str
    message: str
    line: int | None = None
    col: int | None = None
    subject: str | None = None

    def __str__(self) -> str:
        where = ""
        if self.line is not None:
            where = f"line {self.line}"
            if self.col is not None:
                where += f", col {self.col}"
            where += ": "
        return f"{where}{self.code}: {self.message}"


class _IssueListError(ZebraError):
    def __init__(self, issues: list[Issue]):
        self.issues = list(issues)
        super().__init__("\n".join(str(i) for i in self.issues))

    @property
    def codes(self) -> list[str]:
        return [i.code for i in self.issues]


class ParseError(_IssueListError):
    """A ``.mech`` document was rejected; ``issues`` lists every problem."""


class ValidationError(_IssueListError):
    """A mechanism broke one or more structural invariants."""


class LinkIsGround(ZebraError):
    pass


class TooLargeForExactSearch(ZebraError):
    pass


class OpenClassWithLoops(ZebraError):
    pass


class MissingNs(ZebraError):
    pass


class BoundsExceeded(ZebraError):
    pass


class CountsModeNotRenderable(ZebraError):
    pass
