"""Scalar data types and date helpers.

Dates are stored as Int64 in yyyymmdd form so predicates over dates reduce
to plain integer comparisons (e.g. 1994-01-01 -> 19940101). Decimals are
plain double precision. Text is immutable byte strings compared bytewise.
"""

from __future__ import annotations

import enum

from .errors import StorageError


class DataType(enum.Enum):
    INT64 = "int64"
    FLOAT64 = "float64"
    DATE = "date"
    TEXT = "text"
    # BOOL is expression-internal: predicates have it, columns never do.
    BOOL = "bool"

    def __repr__(self) -> str:
        return self.name


#: Types a table column may have (BOOL is not storable).
STORABLE_TYPES = (DataType.INT64, DataType.FLOAT64, DataType.DATE, DataType.TEXT)

NUMERIC_TYPES = (DataType.INT64, DataType.FLOAT64)

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def check_int64_range(v: int) -> int:
    if not (INT64_MIN <= v <= INT64_MAX):
        from .errors import ExecutionError

        raise ExecutionError(f"Int64 overflow: {v}")
    return v


def ymd_to_date(y: int, m: int, d: int) -> int:
    return y * 10000 + m * 100 + d


def is_valid_date(v: int) -> bool:
    d = v % 100
    m = (v // 100) % 100
    return 1 <= d <= 31 and 1 <= m <= 12


def parse_iso_date(text: str | bytes) -> int:
    """Parse 'YYYY-MM-DD' into the yyyymmdd integer encoding."""
    s = text.decode("ascii") if isinstance(text, bytes) else text
    if len(s) != 10 or s[4] != "-" or s[7] != "-":
        raise StorageError(f"invalid date {s!r}, expected YYYY-MM-DD")
    try:
        y, m, d = int(s[0:4]), int(s[5:7]), int(s[8:10])
    except ValueError:
        raise StorageError(f"invalid date {s!r}, expected YYYY-MM-DD") from None
    v = ymd_to_date(y, m, d)
    if not is_valid_date(v):
        raise StorageError(f"date {s!r} out of range")
    return v


def format_date(v: int) -> str:
    """Render a yyyymmdd integer back to 'YYYY-MM-DD'."""
    return f"{v // 10000:04d}-{(v // 100) % 100:02d}-{v % 100:02d}"
