"""In-memory columnar table representation.

Numeric columns (Int64/Float64/Date) are contiguous 8-byte numpy buffers.
Text columns use an offsets array (row_count + 1 entries) into a shared
bytes arena. A column is either fully valid (validity is None) or carries
a boolean validity mask. Tables are immutable after construction and safe
to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import SchemaError
from .types import DataType, STORABLE_TYPES

_NUMPY_DTYPE = {
    DataType.INT64: np.int64,
    DataType.FLOAT64: np.float64,
    DataType.DATE: np.int64,
}


@dataclass(frozen=True)
class ColumnDef:
    name: str
    dtype: DataType
    nullable: bool = False

    def __post_init__(self) -> None:
        if not self.name:
            raise SchemaError("column name must be non-empty")
        if self.dtype not in STORABLE_TYPES:
            raise SchemaError(f"column {self.name}: {self.dtype} is not a storable type")


@dataclass(frozen=True)
class Schema:
    columns: tuple[ColumnDef, ...]

    def __post_init__(self) -> None:
        names = [c.name for c in self.columns]
        if len(set(names)) != len(names):
            dup = next(n for n in names if names.count(n) > 1)
            raise SchemaError(f"duplicate column {dup!r} in schema")

    @staticmethod
    def of(*cols: tuple) -> "Schema":
        """Build a schema from (name, dtype[, nullable]) tuples."""
        return Schema(tuple(ColumnDef(*c) for c in cols))

    @property
    def names(self) -> list[str]:
        return [c.name for c in self.columns]

    def __len__(self) -> int:
        return len(self.columns)

    def __iter__(self) -> Iterator[ColumnDef]:
        return iter(self.columns)

    def resolve(self, name: str) -> tuple[int, DataType]:
        """Return (ordinal, dtype) of a column or raise naming candidates."""
        for i, c in enumerate(self.columns):
            if c.name == name:
                return i, c.dtype
        raise SchemaError(f"unknown column {name!r}; candidates: {', '.join(self.names)}")


class ColumnVector:
    """One column worth of values plus an optional validity mask."""

    __slots__ = ("dtype", "values", "arena", "validity")

    def __init__(
        self,
        dtype: DataType,
        values: np.ndarray,
        arena: bytes | None = None,
        validity: np.ndarray | None = None,
    ):
        self.dtype = dtype
        self.values = values  # numeric values, or uint64 offsets for TEXT
        self.arena = arena
        self.validity = validity
        if dtype is DataType.TEXT:
            if arena is None:
                raise SchemaError("text column requires an arena")
            if len(values) == 0 or values[0] != 0 or values[-1] != len(arena):
                raise SchemaError("text offsets must start at 0 and end at arena size")
            if np.any(np.diff(values.astype(np.int64)) < 0):
                raise SchemaError("text offsets must be monotone non-decreasing")

    @property
    def length(self) -> int:
        if self.dtype is DataType.TEXT:
            return len(self.values) - 1
        return len(self.values)

    def get(self, i: int):
        """Python value at row i (bytes for TEXT, None when null)."""
        if self.validity is not None and not self.validity[i]:
            return None
        if self.dtype is DataType.TEXT:
            return bytes(self.arena[self.values[i] : self.values[i + 1]])
        v = self.values[i]
        return float(v) if self.dtype is DataType.FLOAT64 else int(v)

    def to_pylist(self) -> list:
        return [self.get(i) for i in range(self.length)]

    @staticmethod
    def from_pylist(dtype: DataType, items: Sequence, nullable: bool = False) -> "ColumnVector":
        if dtype is DataType.TEXT:
            offsets = np.zeros(len(items) + 1, dtype=np.uint64)
            chunks = []
            pos = 0
            validity = np.ones(len(items), dtype=bool) if nullable else None
            for i, it in enumerate(items):
                if it is None:
                    if validity is None:
                        raise SchemaError("null in non-nullable text column")
                    validity[i] = False
                    it = b""
                chunks.append(it)
                pos += len(it)
                offsets[i + 1] = pos
            return ColumnVector(dtype, offsets, b"".join(chunks), validity)
        np_dtype = _NUMPY_DTYPE[dtype]
        validity = None
        if nullable:
            validity = np.array([it is not None for it in items], dtype=bool)
            items = [0 if it is None else it for it in items]
        return ColumnVector(dtype, np.array(items, dtype=np_dtype), None, validity)


class ColumnTable:
    """Immutable columnar table; columns align 1:1 with the schema."""

    __slots__ = ("schema", "row_count", "columns")

    def __init__(self, schema: Schema, row_count: int, columns: list[ColumnVector]):
        if len(columns) != len(schema):
            raise SchemaError(
                f"table has {len(columns)} columns but schema has {len(schema)}"
            )
        for cdef, col in zip(schema, columns):
            if col.dtype is not cdef.dtype:
                raise SchemaError(
                    f"column {cdef.name!r}: table dtype {col.dtype} != schema {cdef.dtype}"
                )
            if col.length != row_count:
                raise SchemaError(
                    f"column {cdef.name!r} has {col.length} rows, table has {row_count}"
                )
        self.schema = schema
        self.row_count = row_count
        self.columns = columns

    def column(self, name: str) -> ColumnVector:
        i, _ = self.schema.resolve(name)
        return self.columns[i]

    def select(self, names: Iterable[str]) -> "ColumnTable":
        names = list(names)
        idx = [self.schema.resolve(n)[0] for n in names]
        return ColumnTable(
            Schema(tuple(self.schema.columns[i] for i in idx)),
            self.row_count,
            [self.columns[i] for i in idx],
        )

    def to_pylists(self) -> dict[str, list]:
        return {c.name: col.to_pylist() for c, col in zip(self.schema, self.columns)}

    def to_rows(self) -> list[tuple]:
        cols = [c.to_pylist() for c in self.columns]
        return list(zip(*cols)) if cols else [()] * self.row_count

    @staticmethod
    def from_pylists(schema: Schema, data: dict[str, Sequence]) -> "ColumnTable":
        cols = []
        n = None
        for cdef in schema:
            items = data[cdef.name]
            if n is None:
                n = len(items)
            cols.append(ColumnVector.from_pylist(cdef.dtype, items, cdef.nullable))
        return ColumnTable(schema, n or 0, cols)

    @staticmethod
    def empty(schema: Schema) -> "ColumnTable":
        return ColumnTable.from_pylists(schema, {c.name: [] for c in schema})
