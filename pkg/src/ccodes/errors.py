"""Exceptions shared across the package."""


class CongruenceCodeError(Exception):
    """Base class for every error this package raises on purpose."""


class NonExactDivision(CongruenceCodeError):
    """A division that must come out exact left a remainder.

    The closed-form counting expressions all end in a division that is
    guaranteed to be exact for valid inputs, so seeing this exception
    means a formula was fed garbage or is implemented wrong.
    """


class IntegralityFailure(CongruenceCodeError):
    """A floating-point evaluation strayed too far from the nearest integer."""


class CapExceeded(CongruenceCodeError):
    """A brute-force routine was asked to enumerate beyond its safety cap."""
