"""Exception hierarchy shared across the package."""


class BellTestError(Exception):
    """Base class for all errors raised by this package."""


class ZeroConditioningEvent(BellTestError):
    """Conditioning event has probability zero; the conditional is undefined."""


class DegenerateAlternatives(BellTestError):
    """One of the alternative probabilities is zero; the interference
    coefficient is undefined."""


class EmptyConditioningBranch(BellTestError):
    """No respondent produced the conditioning answer in the relevant branch,
    so a frequency estimate cannot be formed."""


class DegenerateVariance(BellTestError):
    """All three branch proportions are exactly 0 or 1, so the asymptotic
    standard error is zero.  Carries the exact margin so callers can still
    report a verdict."""

    def __init__(self, margin: float):
        self.margin = margin
        self.violated = margin < 0.0
        super().__init__(
            f"all branch proportions are degenerate (margin={margin:+g}); "
            "no asymptotic test is possible"
        )


class FormatError(BellTestError):
    """Malformed dataset content.  ``line`` is 1-based."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class DuplicateRespondent(BellTestError):
    """A respondent id appears more than once in a dataset."""

    def __init__(self, respondent_id: str, line: int):
        self.respondent_id = respondent_id
        self.line = line
        super().__init__(f"line {line}: duplicate respondent id {respondent_id!r}")
