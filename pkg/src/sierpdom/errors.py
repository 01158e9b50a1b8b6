"""Shared exception types.

Plain ValueError is used for malformed inputs (bad vertex ids, wrong
residues, unparsable files).  The classes below cover the remaining
failure modes that callers may want to catch separately.
"""


class ContractError(ValueError):
    """A precondition on supplied data does not hold.

    Example: a labeling passed where a Roman dominating function is
    required, or a certificate that does not match the function it is
    supposed to certify.
    """


class BudgetError(RuntimeError):
    """A requested computation would exceed the configured size budget."""


class SolveTimeout(RuntimeError):
    """An exact solve hit its wall-clock limit before finishing."""
