"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or inconsistent input (bad literal, wrong shape, bad parameters)."""


class SizeLimitError(ValueError):
    """An enumeration would exceed the desk-scale limits."""


class VerificationError(AssertionError):
    """An internal identity that must hold exactly did not hold.

    Raised explicitly (never via ``assert``) so the checks survive ``python -O``.
    """


class LemmaViolation(VerificationError):
    """A combinatorial or algebraic lemma produced a counterexample."""
