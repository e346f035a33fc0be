import pytest
from hypothesis import given, strategies as st

from cxvec.errors import BackendMismatch, DimensionError
from cxvec.matrix import (
    CMatrix,
    cmatrix_add,
    cmatrix_cnj,
    cmatrix_cvector_mul,
    cmatrix_identity,
    cmatrix_mul,
    cmatrix_neg,
    cmatrix_smul,
    cmatrix_zero,
    column_matrix,
)
from cxvec.scalar import Backend, CScalar, cx
from cxvec.vector import CVector, cvec, cvector_zero

I = (0, 1)
rationals = st.fractions(min_value=-9, max_value=9, max_denominator=6)
scalars = st.builds(CScalar, rationals, rationals)


def matrices(m, n):
    return st.lists(st.lists(scalars, min_size=n, max_size=n), min_size=m, max_size=m).map(CMatrix)


def oracle(a, b):
    """Triple loop over raw (re, im) pairs, independent of CScalar arithmetic."""
    pa = [[(z.re, z.im) for z in r] for r in a.row_vectors]
    pb = [[(z.re, z.im) for z in r] for r in b.row_vectors]
    out = []
    for i in range(len(pa)):
        row = []
        for j in range(len(pb[0])):
            re = im = 0
            for k in range(len(pb)):
                (x, y), (u, v) = pa[i][k], pb[k][j]
                re += x * u - y * v
                im += x * v + y * u
            row.append((re, im))
        out.append(row)
    return CMatrix(out)


sizes = st.integers(1, 4)
chain = st.tuples(sizes, sizes, sizes, sizes).flatmap(
    lambda s: st.tuples(matrices(s[0], s[1]), matrices(s[1], s[2]), matrices(s[2], s[3]))
)


def test_elementwise_examples():
    m = CMatrix([[1, I], [(2, -3), 0]])
    assert cmatrix_add(m, cmatrix_neg(m)) == cmatrix_zero(2, 2)
    assert cmatrix_cnj(cmatrix_cnj(m)) == m
    assert cmatrix_smul(cx(1), m) == m


def test_mul_examples():
    m = CMatrix([[1, I], [(2, -3), 0]])
    assert cmatrix_mul(cmatrix_identity(2), m) == m
    a = CMatrix([[I, 0], [0, 1]])
    b = CMatrix([[1, 1], [0, I]])
    assert cmatrix_mul(a, b) == CMatrix([[I, I], [0, I]])
    with pytest.raises(DimensionError):
        cmatrix_mul(CMatrix([[1, 2, 3], [4, 5, 6]]), CMatrix([[1, 2], [3, 4]]))


def test_floating_mul_uses_kernel_and_matches():
    a = CMatrix([[1j, 0], [0, 1]], Backend.FLOAT)
    b = CMatrix([[1, 1], [0, 1j]], Backend.FLOAT)
    assert cmatrix_mul(a, b) == CMatrix([[1j, 1j], [0, 1j]], Backend.FLOAT)
    with pytest.raises(BackendMismatch):
        cmatrix_mul(a, CMatrix([[1, 0], [0, 1]]))


def test_matrix_vector_examples():
    v = cvec(1, I, (3, 4))
    assert cmatrix_cvector_mul(cmatrix_identity(3), v) == v
    assert cmatrix_cvector_mul(cmatrix_zero(2, 3), v) == cvector_zero(2)
    assert cmatrix_cvector_mul(CMatrix([[1, I]]), cvec(I, 1)) == cvec((0, 2))


def test_ragged_rows_rejected():
    with pytest.raises(DimensionError):
        CMatrix([[1, 2], [3]])


@given(chain)
def test_mul_laws(mats):
    a, b, c = mats
    assert cmatrix_mul(a, b) == oracle(a, b)
    assert cmatrix_mul(cmatrix_mul(a, b), c) == cmatrix_mul(a, cmatrix_mul(b, c))
    assert cmatrix_cnj(cmatrix_mul(a, b)) == cmatrix_mul(cmatrix_cnj(a), cmatrix_cnj(b))


@given(st.tuples(sizes, sizes, sizes).flatmap(
    lambda s: st.tuples(matrices(s[0], s[1]), matrices(s[0], s[1]), matrices(s[1], s[2]), matrices(s[1], s[2]))))
def test_distributivity(mats):
    a, a2, b, b2 = mats
    assert cmatrix_mul(a, cmatrix_add(b, b2)) == cmatrix_add(cmatrix_mul(a, b), cmatrix_mul(a, b2))
    assert cmatrix_mul(cmatrix_add(a, a2), b) == cmatrix_add(cmatrix_mul(a, b), cmatrix_mul(a2, b))


@given(st.tuples(sizes, sizes).flatmap(lambda s: st.tuples(matrices(*s), st.lists(scalars, min_size=s[1], max_size=s[1]))))
def test_matrix_vector_is_column_product(mv):
    m, comps = mv
    v = CVector(comps)
    col = cmatrix_mul(m, column_matrix(v))
    assert cmatrix_cvector_mul(m, v) == CVector([r.component(1) for r in col.row_vectors])
