"""Length-prefixed matrix codec.

Each element is stored as a ``k``-bit prefix holding its exact bit-length
followed by a payload of that many bits.  ``k`` is the bit-length of the
bit-length of the largest element, so it never exceeds 7 for 64-bit data.
Decoding is sequential by nature; checkpoints recorded every ``stride``
elements bound the cost of random access.
"""

from __future__ import annotations

from collections.abc import Iterator

import numpy as np

from ._dense import ROW_MAJOR, check_order, dense_to_flat, flat_to_dense, unravel_index
from .bitstream import WORD_BITS, BitBuffer, bit_length
from .errors import CorruptStream, OutOfBounds

DEFAULT_CHECKPOINT_STRIDE = 64


class VlbMatrix:
    """Matrix packed as (bit-length prefix, payload) pairs."""

    __slots__ = ("rows", "cols", "k", "order", "stride", "data", "checkpoints")

    def __init__(
        self,
        rows: int,
        cols: int,
        k: int,
        order: str,
        stride: int,
        data: BitBuffer,
        checkpoints: list[tuple[int, int]],
    ):
        self.rows = rows
        self.cols = cols
        self.k = k
        self.order = check_order(order)
        self.stride = stride
        self.data = data
        self.checkpoints = checkpoints

    @classmethod
    def compress(
        cls,
        dense,
        order: str = ROW_MAJOR,
        checkpoint_stride: int = DEFAULT_CHECKPOINT_STRIDE,
    ) -> "VlbMatrix":
        if checkpoint_stride < 1:
            raise ValueError("checkpoint_stride must be >= 1")
        rows, cols, flat = dense_to_flat(dense, order)
        k = bit_length(bit_length(max(flat)))
        buf = BitBuffer()
        write = buf.write_field
        checkpoints: list[tuple[int, int]] = []
        pos = 0
        for idx, v in enumerate(flat):
            if idx % checkpoint_stride == 0:
                checkpoints.append((idx, pos))
            b = bit_length(v)
            write(pos, k, b)
            pos += k
            write(pos, b, v)  # zero payloads still extend bit_len
            pos += b
        return cls(rows, cols, k, order, checkpoint_stride, buf, checkpoints)

    @classmethod
    def from_buffer(
        cls,
        rows: int,
        cols: int,
        k: int,
        order: str,
        buf: BitBuffer,
        checkpoint_stride: int = DEFAULT_CHECKPOINT_STRIDE,
    ) -> "VlbMatrix":
        """Adopt a raw packed buffer, walking it to rebuild checkpoints.

        ``buf.bit_len`` is adjusted to the exact end of the stream; the
        walk raises CorruptStream if the stream is not decodable.
        """
        limit = buf.bit_len
        read = buf.read_field
        checkpoints = []
        pos = 0
        for idx in range(rows * cols):
            if idx % checkpoint_stride == 0:
                checkpoints.append((idx, pos))
            if pos + k > limit:
                raise CorruptStream("prefix runs past end of stream")
            b = read(pos, k)
            if b == 0:
                raise CorruptStream(f"zero length prefix at bit {pos}")
            if b > WORD_BITS:
                raise CorruptStream(f"length prefix {b} exceeds 64 bits")
            pos += k
            if pos + b > limit:
                raise CorruptStream("payload runs past end of stream")
            pos += b
        buf.bit_len = pos
        return cls(rows, cols, k, order, checkpoint_stride, buf, checkpoints)

    def _index(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise OutOfBounds(f"({i}, {j}) outside {self.rows}x{self.cols} matrix")
        return unravel_index(i, j, self.rows, self.cols, self.order)

    def get(self, i: int, j: int) -> int:
        """Decode one element, hopping prefixes from the nearest checkpoint."""
        idx = self._index(i, j)
        base, pos = self.checkpoints[idx // self.stride]
        read = self.data.read_field
        k = self.k
        for _ in range(idx - base):
            pos += k + read(pos, k)
        b = read(pos, k)
        return read(pos + k, b)

    def iter_values(self) -> Iterator[int]:
        """Sequentially decode all elements in unravel order."""
        read = self.data.read_field
        k = self.k
        limit = self.data.bit_len
        pos = 0
        for _ in range(self.rows * self.cols):
            if pos + k > limit:
                raise CorruptStream("prefix runs past end of stream")
            b = read(pos, k)
            if b == 0:
                raise CorruptStream(f"zero length prefix at bit {pos}")
            if b > WORD_BITS:
                raise CorruptStream(f"length prefix {b} exceeds 64 bits")
            pos += k
            if pos + b > limit:
                raise CorruptStream("payload runs past end of stream")
            yield read(pos, b)
            pos += b

    def iter_rowmajor(self) -> Iterator[int]:
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
        if not isinstance(other, VlbMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.k == other.k
            and self.order == other.order
            and self.data == other.data
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"VlbMatrix({self.rows}x{self.cols}, k={self.k}, order={self.order!r})"
