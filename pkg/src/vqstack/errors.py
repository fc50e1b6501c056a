"""Error taxonomy shared across the package."""


class VQStackError(Exception):
    """Base class for package-specific failures."""


class ShapeError(VQStackError, ValueError):
    """Operand shapes or dimensions are inconsistent."""


class NumericError(VQStackError, ArithmeticError):
    """A forward computation produced NaN or Inf."""


class StateError(VQStackError, RuntimeError):
    """An object was used in an invalid lifecycle state."""


class ContractError(VQStackError, RuntimeError):
    """A documented call contract was violated."""


class ConfigError(VQStackError, ValueError):
    """Invalid or inconsistent configuration."""


class FormatError(VQStackError, ValueError):
    """Malformed file or serialized payload."""
