"""Shared exception types."""


class CounterexampleError(RuntimeError):
    """A computation contradicted a mathematical guarantee.

    Raised when an internal cross-check fails: a preimage count lands in a
    forbidden gap, a value-set size exceeds its proven bound, a factored
    expansion violates a structural invariant, and so on.  This always means
    either an implementation bug or a genuine counterexample, so it is
    surfaced loudly instead of being absorbed.
    """
