from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from cxvec import scalar as sc
from cxvec.errors import BackendMismatch, DimensionError
from cxvec.scalar import Backend, CScalar, cx
from cxvec.vector import (
    CVector,
    RVector,
    complex_vector,
    cvec,
    cvector_add,
    cvector_cnj,
    cvector_im,
    cvector_neg,
    cvector_re,
    cvector_smul,
    cvector_sub,
    cvector_zero,
    flatten,
    rvec,
    rvector_zero,
    unflatten,
    vector_const,
    vector_map,
    vector_map2,
    vector_to_cvector,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
scalars = st.builds(CScalar, rationals, rationals)


def vectors(n):
    return st.lists(scalars, min_size=n, max_size=n).map(CVector)


dims = st.integers(min_value=1, max_value=8)
vec = dims.flatmap(vectors)
vec_pair = dims.flatmap(lambda n: st.tuples(vectors(n), vectors(n)))
vec_triple = dims.flatmap(lambda n: st.tuples(vectors(n), vectors(n), vectors(n)))


def test_vector_const():
    k = CScalar(2, 1)
    v = vector_const(k, 3)
    assert v == CVector([k, k, k])
    assert vector_const(cx(0), 4) == cvector_zero(4)
    assert all(v.component(i) == k for i in range(1, 4))


def test_component_is_one_based():
    v = cvec(1, 2, 3)
    assert v.component(1) == cx(1)
    with pytest.raises(IndexError):
        v.component(0)
    with pytest.raises(IndexError):
        v.component(4)


def test_vector_map():
    v = cvec((1, 1), (2, -1))
    assert vector_map(lambda z: z, v) == v
    assert vector_map(sc.cnj, v) == cvec((1, -1), (2, 1))


def test_vector_map2():
    assert vector_map2(sc.add, cvec(1, 2), cvec(3, 4)) == cvec(4, 6)
    v = cvec((1, 2), (3, 4), 5)
    assert vector_map2(sc.mul, v, vector_const(cx(1), 3)) == v
    with pytest.raises(DimensionError):
        vector_map2(sc.add, cvec(1, 2), cvec(1, 2, 3))


def test_re_im_decomposition():
    v = cvec((1, 2), 3)
    assert cvector_re(v) == rvec(1, 3)
    assert cvector_im(v) == rvec(2, 0)
    assert cvector_im(vector_to_cvector(rvec(1, 2))) == rvector_zero(2)
    assert complex_vector(rvec(1, 3), rvec(2, 0)) == v
    assert vector_to_cvector(rvec(0, 0, 1)) == cvec(0, 0, 1)


def test_flatten_order_is_real_parts_first():
    assert flatten(cvec((1, 2), (3, 4))) == rvec(1, 3, 2, 4)
    assert flatten(cvector_zero(3)) == rvector_zero(6)
    assert unflatten(rvec(1, 3, 2, 4)) == cvec((1, 2), (3, 4))
    with pytest.raises(DimensionError):
        unflatten(rvec(1, 2, 3))


def test_floating_constructor_and_mixing():
    v = CVector.from_complex([1 + 2j, 3])
    assert v.backend is Backend.FLOAT
    with pytest.raises(BackendMismatch):
        cvector_add(v, cvec(1, 2))
    with pytest.raises(ValueError):
        CVector.from_complex([complex("nan")])


def test_dimension_mismatch_raises():
    with pytest.raises(DimensionError):
        cvector_add(cvec(1), cvec(1, 2))


@given(vec_triple)
def test_vector_space_axioms(uvw):
    u, v, w = uvw
    a, b = CScalar(F(2, 3), F(-1, 5)), CScalar(F(7, 2), 1)
    n = u.dim
    assert (u + v) + w == u + (v + w)
    assert u + v == v + u
    assert u + cvector_zero(n) == u
    assert u + (-u) == cvector_zero(n)
    assert a % (u + v) == a % u + a % v
    assert (a + b) % u == a % u + b % u
    assert a % (b % u) == (a * b) % u
    assert cx(1) % u == u


@given(vec)
def test_flatten_bijection(v):
    assert unflatten(flatten(v)) == v
    r = flatten(v)
    assert flatten(unflatten(r)) == r


@given(vec_pair)
def test_flatten_transports_maps(uv):
    u, v = uv
    assert flatten(cvector_neg(u)) == -flatten(u)
    assert flatten(cvector_add(u, v)) == flatten(u) + flatten(v)
    # conjugation flips the sign of the imaginary block
    n = u.dim
    r = flatten(u)
    assert flatten(cvector_cnj(u)) == RVector(list(r)[:n] + [-x for x in list(r)[n:]])


@given(vec_pair, st.sampled_from([sc.add, sc.sub, sc.mul]))
def test_map2_is_componentwise(uv, f):
    u, v = uv
    out = vector_map2(f, u, v)
    assert all(out.component(i) == f(u.component(i), v.component(i)) for i in range(1, u.dim + 1))


@given(vec_pair)
def test_sub_is_add_neg(uv):
    u, v = uv
    assert cvector_sub(u, v) == u + cvector_neg(v)
    assert cvector_smul(cx(-1), v) == -v
