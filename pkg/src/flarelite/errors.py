"""Exception hierarchy shared across the engine."""


class FlareliteError(Exception):
    """Base class for all engine errors."""


class SchemaError(FlareliteError):
    """Schema/table registration or column resolution failure."""


class StorageError(FlareliteError):
    """Malformed CSV input or corrupt/invalid FBC file."""


class ParseError(FlareliteError):
    """SQL syntax error, with the byte offset where parsing failed."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class PlanError(FlareliteError):
    """Type or structure error while building or optimizing a plan."""


class UdfError(FlareliteError):
    """Invalid UDF registration or unresolvable UDF call."""


class ToolchainError(FlareliteError):
    """External compiler missing, failing, or timing out."""


class ExecutionError(FlareliteError):
    """Runtime failure while executing a query (e.g. Int64 overflow)."""
