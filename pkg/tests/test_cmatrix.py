import numpy as np
import pytest

from ccmatrix.bitstream import U64_MAX, bit_length
from ccmatrix.cmatrix import CompressedMatrix
from ccmatrix.errors import ArithmeticOverflow, ShapeMismatch

from conftest import WORKED_ROW


# dense oracle on Python ints, no compression involved
def dense_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def dense_scalar(a, s):
    return [[x * s for x in row] for row in a]


def dense_matmul(a, b):
    return [
        [sum(a[i][l] * b[l][j] for l in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def dense_transpose(a):
    return [[a[i][j] for i in range(len(a))] for j in range(len(a[0]))]


def random_dense(rng, r, c, hi=2**30):
    return [[int(v) for v in row] for row in rng.integers(0, hi, size=(r, c))]


def compress_random(rng, dense):
    method = rng.choice(["sm", "vlb"])
    order = rng.choice(["row", "col"])
    return CompressedMatrix.compress(dense, method=method, order=order)


def test_add_small_known():
    ones = CompressedMatrix.compress([[1, 1], [1, 1]])
    out = ones.add(ones)
    assert out.decompress().tolist() == [[2, 2], [2, 2]]
    assert out.inner.width == 2


def test_add_zero_identity(worked_row):
    m = CompressedMatrix.compress(worked_row)
    zero = CompressedMatrix.compress([[0] * 8])
    out = m + zero
    assert out.decompress().tolist() == [WORKED_ROW]
    assert out.inner == m.inner  # re-encode reproduces the same packing


def test_add_random_vs_oracle(rng):
    for _ in range(25):
        r, c = int(rng.integers(1, 10)), int(rng.integers(1, 10))
        a, b = random_dense(rng, r, c), random_dense(rng, r, c)
        out = compress_random(rng, a).add(compress_random(rng, b))
        assert out.decompress().tolist() == dense_add(a, b)


def test_add_shape_mismatch():
    a = CompressedMatrix.compress([[1, 2]])
    b = CompressedMatrix.compress([[1], [2]])
    with pytest.raises(ShapeMismatch):
        a.add(b)


def test_add_overflow_checked():
    top = CompressedMatrix.compress([[U64_MAX]])
    one = CompressedMatrix.compress([[1]])
    with pytest.raises(ArithmeticOverflow):
        top.add(one)


def test_scalar_identity_and_zero(worked_row):
    m = CompressedMatrix.compress(worked_row, method="vlb")
    assert m.scalar_mul(1).equals(m)
    zero = m.scalar_mul(0)
    assert zero.inner.width == 1
    assert zero.decompress().tolist() == [[0] * 8]


def test_scalar_random_vs_oracle(rng):
    for _ in range(25):
        r, c = int(rng.integers(1, 10)), int(rng.integers(1, 10))
        a = random_dense(rng, r, c)
        s = int(rng.integers(0, 2**20))
        out = compress_random(rng, a).scalar_mul(s)
        assert out.decompress().tolist() == dense_scalar(a, s)


def test_scalar_overflow_checked():
    m = CompressedMatrix.compress([[2**63]])
    with pytest.raises(ArithmeticOverflow):
        m.scalar_mul(2)


def test_matmul_identity(rng):
    a = random_dense(rng, 5, 5)
    eye = [[1 if i == j else 0 for j in range(5)] for i in range(5)]
    m = CompressedMatrix.compress(a, method="vlb")
    out = m.matmul(CompressedMatrix.compress(eye))
    assert out.decompress().tolist() == a


def test_matmul_two_by_two():
    a = CompressedMatrix.compress([[1, 2], [3, 4]])
    b = CompressedMatrix.compress([[5, 6], [7, 8]], method="vlb")
    assert (a @ b).decompress().tolist() == [[19, 22], [43, 50]]


def test_matmul_rectangular_vs_oracle(rng):
    a = random_dense(rng, 20, 30, hi=2**12)
    b = random_dense(rng, 30, 10, hi=2**12)
    out = CompressedMatrix.compress(a).matmul(CompressedMatrix.compress(b, order="col"))
    assert out.decompress().tolist() == dense_matmul(a, b)


def test_matmul_shape_mismatch():
    a = CompressedMatrix.compress([[1, 2]])
    with pytest.raises(ShapeMismatch):
        a.matmul(a)


def test_matmul_overflow_checked():
    big = CompressedMatrix.compress([[2**32]])
    with pytest.raises(ArithmeticOverflow):
        big.matmul(big)  # 2^64 exceeds the unsigned range by one


def test_transpose_fixed_point():
    m = CompressedMatrix.compress([[9]])
    assert m.transpose().equals(m)


def test_transpose_worked_row(worked_row):
    t = CompressedMatrix.compress(worked_row).transpose()
    assert t.shape == (8, 1)
    assert t.decompress().ravel().tolist() == WORKED_ROW


def test_transpose_involution_vs_oracle(rng):
    a = random_dense(rng, 7, 11)
    m = compress_random(rng, a)
    t = m.transpose()
    assert t.decompress().tolist() == dense_transpose(a)
    assert t.transpose().equals(m)


def test_equals_across_representations(worked_row):
    sm = CompressedMatrix.compress(worked_row, method="sm")
    vlb = CompressedMatrix.compress(worked_row, method="vlb", order="col")
    assert sm.equals(vlb)
    assert sm == vlb
    bumped = vlb.add(CompressedMatrix.compress([[1] * 8]))
    assert not sm.equals(bumped)
    assert sm != bumped


def test_equals_random_fuzz(rng):
    for _ in range(20):
        a = random_dense(rng, 4, 6)
        m1, m2 = compress_random(rng, a), compress_random(rng, a)
        assert m1.equals(m2) == (m1.decompress().tolist() == m2.decompress().tolist())


def test_result_width_is_minimal(rng):
    for _ in range(10):
        a = random_dense(rng, 3, 3, hi=2**25)
        b = random_dense(rng, 3, 3, hi=2**25)
        out = CompressedMatrix.compress(a).add(CompressedMatrix.compress(b))
        expected = bit_length(max(max(row) for row in dense_add(a, b)))
        assert out.inner.width == expected


def test_homomorphism_sample(rng):
    """decompress(op(compressed)) == op(dense) across representations."""
    for _ in range(25):
        r, c = int(rng.integers(1, 7)), int(rng.integers(1, 7))
        a = random_dense(rng, r, c, hi=2**16)
        b = random_dense(rng, r, c, hi=2**16)
        ca, cb = compress_random(rng, a), compress_random(rng, b)
        assert ca.add(cb).decompress().tolist() == dense_add(a, b)
        assert ca.scalar_mul(3).decompress().tolist() == dense_scalar(a, 3)
        assert ca.transpose().decompress().tolist() == dense_transpose(a)
        inner = random_dense(rng, c, 4, hi=2**16)
        assert (
            ca.matmul(compress_random(rng, inner)).decompress().tolist()
            == dense_matmul(a, inner)
        )


def test_works_on_numpy_uint64_inputs(rng):
    dense = rng.integers(0, 2**60, size=(5, 5), dtype=np.uint64)
    m = CompressedMatrix.compress(dense, method="vlb")
    assert (m.decompress() == dense).all()
