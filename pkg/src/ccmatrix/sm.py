"""Fixed-width matrix codec.

Every element is stored in a chunk of ``width`` bits, where ``width`` is
the bit-length of the largest element at compression time.  Chunks are
laid out back to back in unravel order, so element access is a single
O(1) field read (at most two words when the chunk straddles a word
boundary).
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

import numpy as np

from ._dense import ROW_MAJOR, check_order, dense_to_flat, flat_to_dense, unravel_index
from .bitstream import BitBuffer, bit_length
from .errors import NarrowingRequested, OutOfBounds, WidthOverflow


class SmMatrix:
    """Matrix packed into fixed ``width``-bit chunks."""

    __slots__ = ("rows", "cols", "width", "order", "data")

    def __init__(self, rows: int, cols: int, width: int, order: str, data: BitBuffer):
        self.rows = rows
        self.cols = cols
        self.width = width
        self.order = check_order(order)
        self.data = data

    @classmethod
    def compress(cls, dense, order: str = ROW_MAJOR) -> "SmMatrix":
        """Pack a dense non-negative integer matrix at the minimal width."""
        rows, cols, flat = dense_to_flat(dense, order)
        width = bit_length(max(flat))
        return cls._fill(rows, cols, width, order, flat)

    @classmethod
    def from_values(
        cls, rows: int, cols: int, width: int, values: Iterable[int], order: str = ROW_MAJOR
    ) -> "SmMatrix":
        """Pack pre-validated values (in unravel order) at a given width."""
        return cls._fill(rows, cols, width, order, values)

    @classmethod
    def _fill(cls, rows, cols, width, order, values) -> "SmMatrix":
        buf = BitBuffer(rows * cols * width)
        write = buf.write_field
        pos = 0
        count = 0
        for v in values:
            if v:
                write(pos, width, v)
            pos += width
            count += 1
        if count != rows * cols:
            raise ValueError(f"expected {rows * cols} values, got {count}")
        return cls(rows, cols, width, order, buf)

    def _index(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise OutOfBounds(f"({i}, {j}) outside {self.rows}x{self.cols} matrix")
        return unravel_index(i, j, self.rows, self.cols, self.order)

    def get(self, i: int, j: int) -> int:
        return self.data.read_field(self._index(i, j) * self.width, self.width)

    def set(self, i: int, j: int, value: int) -> None:
        """Overwrite one element in place.

        The value must fit the existing chunk width; use :meth:`widen`
        first if it does not.
        """
        if bit_length(value) > self.width:
            raise WidthOverflow(
                f"{value} needs {bit_length(value)} bits, chunk width is {self.width}"
            )
        self.data.write_field(self._index(i, j) * self.width, self.width, value)

    def widen(self, new_width: int) -> "SmMatrix":
        """Re-encode at a larger chunk width, preserving all elements."""
        if new_width < self.width:
            raise NarrowingRequested(
                f"cannot narrow width {self.width} to {new_width}"
            )
        return SmMatrix._fill(
            self.rows, self.cols, new_width, self.order, self.iter_values()
        )

    def iter_values(self) -> Iterator[int]:
        """Yield elements in unravel order."""
        read = self.data.read_field
        width = self.width
        for idx in range(self.rows * self.cols):
            yield read(idx * width, width)

    def iter_rowmajor(self) -> Iterator[int]:
        """Yield elements row by row regardless of stored order."""
        if self.order == ROW_MAJOR:
            yield from self.iter_values()
            return
        for i in range(self.rows):
            for j in range(self.cols):
                yield self.get(i, j)

    def decompress(self) -> np.ndarray:
        return flat_to_dense(
            list(self.iter_values()), self.rows, self.cols, self.order
        )

    @property
    def bits_used(self) -> int:
        return self.data.bit_len

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SmMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.width == other.width
            and self.order == other.order
            and self.data == other.data
        )

    __hash__ = None

    def __repr__(self) -> str:
        return (
            f"SmMatrix({self.rows}x{self.cols}, width={self.width}, "
            f"order={self.order!r})"
        )
