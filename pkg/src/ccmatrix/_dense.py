"""Conversion between dense integer matrices and flat element lists."""

from __future__ import annotations

import numpy as np

from .bitstream import U64_MAX

ROW_MAJOR = "row"
COL_MAJOR = "col"
_ORDERS = (ROW_MAJOR, COL_MAJOR)


def check_order(order: str) -> str:
    if order not in _ORDERS:
        raise ValueError(f"order must be 'row' or 'col', got {order!r}")
    return order


def unravel_index(i: int, j: int, rows: int, cols: int, order: str) -> int:
    """Position of element (i, j) in the flat unraveling."""
    return i * cols + j if order == ROW_MAJOR else j * rows + i


def dense_to_flat(dense, order: str) -> tuple[int, int, list[int]]:
    """Validate a 2-D non-negative integer matrix and flatten it.

    Returns (rows, cols, values) with values as Python ints in unravel
    order.  Accepts nested sequences or numpy integer arrays.
    """
    check_order(order)
    if isinstance(dense, np.ndarray):
        arr = dense
        if arr.dtype.kind not in ("i", "u", "O"):
            raise TypeError(f"matrix elements must be integers, got dtype {arr.dtype}")
    else:
        # object dtype keeps Python ints exact (asarray would promote
        # values past int64 to float64)
        arr = np.asarray(dense, dtype=object)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={arr.ndim}")
    rows, cols = arr.shape
    if rows < 1 or cols < 1:
        raise ValueError("matrix must have at least one row and one column")
    flat = arr.ravel(order="C" if order == ROW_MAJOR else "F").tolist()
    for v in flat:
        if not isinstance(v, int):
            raise TypeError(f"matrix elements must be integers, got {type(v).__name__}")
        if v < 0 or v > U64_MAX:
            raise ValueError(f"element {v} outside unsigned 64-bit range")
    return rows, cols, flat


def flat_to_dense(flat: list[int], rows: int, cols: int, order: str) -> np.ndarray:
    """Inverse of dense_to_flat; returns a uint64 array."""
    arr = np.array(flat, dtype=np.uint64)
    return arr.reshape((rows, cols), order="C" if order == ROW_MAJOR else "F")
