"""Exception types raised across zetakit."""


class ZetakitError(Exception):
    """Base class for all library errors."""


class PoleError(ZetakitError, ValueError):
    """Evaluation requested at (or too close to) a pole."""


class DomainError(ZetakitError, ValueError):
    """Argument outside the domain an operation supports."""


class ConvergenceError(ZetakitError, RuntimeError):
    """A series or quadrature could not reach the requested tolerance."""
