"""Exception types shared across the package."""


class MdqftError(Exception):
    """Base class for all errors raised by mdqft."""


class ValidationError(MdqftError, ValueError):
    """Malformed arguments: bad qubit indices, non-power-of-two sizes, etc."""


class CapacityError(MdqftError):
    """Requested object exceeds the configured qubit or matrix size caps."""


class LayoutError(MdqftError, ValueError):
    """State and array layout disagree (qubit count vs dimension sizes)."""


class DegenerateInputError(MdqftError, ValueError):
    """Input cannot be normalized (all-zero array)."""
