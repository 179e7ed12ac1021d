"""Exception hierarchy shared by all modules.

Every failure mode that callers are expected to handle gets its own class so
the CLI can map them to distinct exit codes.
"""


class OrePrimesError(Exception):
    """Base class for all package errors."""


class ParseError(OrePrimesError):
    """Malformed canonical text form (element, ideal or config)."""


class DomainError(OrePrimesError):
    """Domain description does not define a valid (sigma, delta) pair."""


class PreconditionError(OrePrimesError):
    """An operation was called outside its stated precondition."""


class NotApplicableError(PreconditionError):
    """Inner-witness query on a configuration where it is meaningless
    (identity automorphism with a nonzero skew derivation)."""


class FactorBudgetError(OrePrimesError):
    """Factorization over Q[t] hit an input that does not split into linear
    factors, or exceeded the search budget."""


class UndecidedError(OrePrimesError):
    """A bounded procedure exhausted its budget without reaching a certified
    answer.  Carries the budget that was exhausted."""

    def __init__(self, message, budget=None):
        super().__init__(message)
        self.budget = budget


class OracleDisagreement(OrePrimesError):
    """A fast-path decision disagreed with the brute-force oracle.  Treated
    as a defect, never ignored."""
