"""Bitstring buffer built from 64-bit words.

Bit position ``p`` lives in word ``p // 64`` at bit index ``p % 64``, where
bit index 0 is the word's least significant bit.  Fields are therefore
filled from the low end of each word upward, and a field that does not fit
in the remaining bits of a word straddles into the low bits of the next
one (low-order segment first).
"""

from __future__ import annotations

from .errors import FieldOverflow, OutOfBounds

WORD_BITS = 64
U64_MAX = (1 << 64) - 1


def bit_length(n: int) -> int:
    """Minimal number of binary digits for ``n``, counting 0 and 1 as one digit.

    Smallest ``w >= 1`` with ``n < 2**w``.
    """
    if not 0 <= n <= U64_MAX:
        raise ValueError(f"value out of unsigned 64-bit range: {n}")
    return max(1, int(n).bit_length())


class BitBuffer:
    """Growable bitstring addressed by absolute bit position.

    Invariants: ``bit_len <= 64 * len(words)``, every bit at a position
    ``>= bit_len`` is zero, and ``len(words)`` is exactly
    ``ceil(bit_len / 64)`` so equal contents compare equal word-for-word.
    """

    __slots__ = ("words", "bit_len")

    def __init__(self, bit_len: int = 0, words: list[int] | None = None):
        if words is None:
            words = [0] * ((bit_len + WORD_BITS - 1) // WORD_BITS)
        self.words = words
        self.bit_len = bit_len

    @classmethod
    def from_words(cls, words: list[int], bit_len: int) -> "BitBuffer":
        if bit_len > WORD_BITS * len(words):
            raise ValueError("bit_len exceeds word storage")
        return cls(bit_len, list(words))

    def copy(self) -> "BitBuffer":
        return BitBuffer(self.bit_len, list(self.words))

    @property
    def word_count(self) -> int:
        return len(self.words)

    def write_field(self, pos: int, width: int, value: int) -> None:
        """Write ``value`` into bits ``[pos, pos + width)``.

        Grows the buffer if the field ends past ``bit_len``.  Any previous
        contents of the field are replaced; no other bit changes.
        """
        if not 1 <= width <= WORD_BITS:
            raise ValueError(f"width must be in 1..64, got {width}")
        if pos < 0:
            raise ValueError(f"bit position must be non-negative, got {pos}")
        if not 0 <= value <= U64_MAX:
            raise FieldOverflow(f"value out of unsigned 64-bit range: {value}")
        if width < WORD_BITS and value >> width:
            raise FieldOverflow(f"{value} does not fit in {width} bits")
        end = pos + width
        if end > self.bit_len:
            words = self.words
            need = (end + WORD_BITS - 1) // WORD_BITS
            if need > len(words):
                words.extend([0] * (need - len(words)))
            self.bit_len = end
        w, off = divmod(pos, WORD_BITS)
        mask = (1 << width) - 1
        low_room = WORD_BITS - off
        self.words[w] = (self.words[w] & ~((mask << off) & U64_MAX)) | (
            (value << off) & U64_MAX
        )
        if width > low_room:
            hi_mask = mask >> low_room
            self.words[w + 1] = (self.words[w + 1] & ~hi_mask) | (value >> low_room)

    def read_field(self, pos: int, width: int) -> int:
        """Read the unsigned value stored in bits ``[pos, pos + width)``."""
        if not 1 <= width <= WORD_BITS:
            raise ValueError(f"width must be in 1..64, got {width}")
        if pos < 0 or pos + width > self.bit_len:
            raise OutOfBounds(
                f"field [{pos}, {pos + width}) outside buffer of {self.bit_len} bits"
            )
        w, off = divmod(pos, WORD_BITS)
        mask = (1 << width) - 1
        out = (self.words[w] >> off) & mask
        low_room = WORD_BITS - off
        if width > low_room:
            out |= (self.words[w + 1] & (mask >> low_room)) << low_room
        return out

    def to_bytes(self) -> bytes:
        """Serialize as little-endian 64-bit words."""
        return b"".join(w.to_bytes(8, "little") for w in self.words)

    @classmethod
    def from_bytes(cls, data: bytes, bit_len: int) -> "BitBuffer":
        if len(data) % 8:
            raise ValueError("word payload must be a multiple of 8 bytes")
        words = [
            int.from_bytes(data[i : i + 8], "little") for i in range(0, len(data), 8)
        ]
        return cls.from_words(words, bit_len)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitBuffer):
            return NotImplemented
        return self.bit_len == other.bit_len and self.words == other.words

    def __hash__(self):  # mutable; identity hashing would be a trap
        raise TypeError("BitBuffer is unhashable")

    def __repr__(self) -> str:
        return f"BitBuffer(bit_len={self.bit_len}, words={len(self.words)})"
