"""Exception types raised by the library."""


class DomainError(ValueError):
    """An argument lies outside the domain where a formula is defined."""


class HarnessIOError(OSError):
    """Reading or writing an experiment artifact failed."""
