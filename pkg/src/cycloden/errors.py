"""Exception hierarchy shared across the package.

The CLI maps these onto process exit codes; see cli.py.
"""


class CyclodenError(Exception):
    """Base class for all package-specific errors."""


class UnsupportedFieldError(CyclodenError):
    """The requested base field cannot be represented (e.g. conductor 0)."""


class EnvelopeError(CyclodenError):
    """Input exceeds the supported performance envelope (overridable)."""


class DependentGeneratorsError(CyclodenError):
    """The generator list appears multiplicatively dependent modulo torsion."""


class ResourceLimitError(CyclodenError):
    """An enumeration would exceed the configured resource cap."""


class TorsionInputError(CyclodenError):
    """A root of unity was passed where a non-torsion element is required."""


class NotIntegralError(CyclodenError):
    """An element has a denominator vanishing at the chosen prime."""


class ReducesToZeroError(CyclodenError):
    """An element reduces to zero at the chosen prime."""


class ParseError(CyclodenError):
    """Element expression syntax error, with the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
