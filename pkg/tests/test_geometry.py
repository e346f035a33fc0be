import math

import pytest
from hypothesis import assume, given, strategies as st

from cxvec.errors import DimensionError, FloatingOnly
from cxvec.geometry import (
    ccross,
    cdot,
    cbasis,
    cnorm,
    cnorm2,
    collinear_cvectors,
    corthogonal,
    cvector_angle,
)
from cxvec.scalar import Backend, CScalar, cnj, cx, ccos
from cxvec.vector import CVector, cvec, cvector_zero

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
scalars = st.builds(CScalar, rationals, rationals)
vec3 = st.lists(scalars, min_size=3, max_size=3).map(CVector)
floats = st.floats(min_value=-100, max_value=100, allow_nan=False)
fscalars = st.builds(complex, floats, floats)


def fvectors(n):
    return st.lists(fscalars, min_size=n, max_size=n).map(CVector.from_complex)


fpair = st.integers(1, 8).flatmap(lambda n: st.tuples(fvectors(n), fvectors(n)))


def test_ccross_examples():
    assert ccross(cvec(1, 0, 0), cvec(0, 1, 0)) == cvec(0, 0, 1)
    u = cvec((1, 2), 3, (0, -1))
    assert ccross(u, u) == cvector_zero(3)
    assert ccross(cvec((0, 1), 0, 0), cvec(0, 1, 0)) == cvec(0, 0, (0, 1))
    with pytest.raises(DimensionError):
        ccross(cvec(1, 2), cvec(3, 4))


def test_cdot_examples():
    assert cdot(cvec((1, 1), 0), cvec((1, 1), 0)) == cx(2)
    x = cvec((1, 2), (3, -4))
    assert cdot(x, cvector_zero(2)) == cx(0)
    y = cvec((5, 1), (0, 2))
    assert cdot(x, y) == cnj(cdot(y, x))


def test_norms():
    assert cnorm(cbasis(1, 3, Backend.FLOAT)) == 1.0
    assert cnorm(CVector.from_complex([3, 4j])) == 5.0
    assert cnorm2(cvector_zero(4)) == 0
    with pytest.raises(FloatingOnly):
        cnorm(cvec(3, 4))


def test_orthogonality():
    assert corthogonal(cbasis(1, 3), cbasis(2, 3))
    assert corthogonal(cvec(1, (0, 1)), cvec((0, 1), 1))
    u = cvec(1, (2, 1))
    assert not corthogonal(u, u)


def test_collinearity():
    v = cvec(1, (0, 2), 3)
    assert collinear_cvectors(v, CScalar(2, 1) % v)
    assert collinear_cvectors(cvector_zero(3), v)
    assert not collinear_cvectors(cbasis(1, 3), cbasis(2, 3))
    f = CVector.from_complex([1 + 1j, 2, -3j])
    assert collinear_cvectors(f, CScalar.from_complex(0.3 - 2j) % f)


def test_angle_examples():
    e1, e2 = cbasis(1, 3, Backend.FLOAT), cbasis(2, 3, Backend.FLOAT)
    assert cvector_angle(e1, cvector_zero(3, Backend.FLOAT)).value == cx(math.pi / 2)
    assert cvector_angle(e1, e1).value == cx(0.0)
    assert complex(cvector_angle(e1, e2).value) == pytest.approx(math.pi / 2, abs=1e-15)


def test_cbasis():
    assert cbasis(1, 4) == cvec(1, 0, 0, 0)
    for j in range(1, 4):
        for k in range(1, 4):
            assert cdot(cbasis(j, 3), cbasis(k, 3)) == cx(1 if j == k else 0)
    with pytest.raises(IndexError):
        cbasis(5, 3)


def test_pythagoras_converse_fails_over_complex_numbers():
    # norm identity holds whenever Re(x.y) = 0, which does not force x.y = 0
    x, y = cvec(1), cvec((0, 1))
    assert cnorm2(x + y) == cnorm2(x) + cnorm2(y)
    assert not corthogonal(x, y)


@given(vec3, vec3, vec3, scalars)
def test_cross_product_laws(u, v, w, a):
    z = cvector_zero(3)
    assert ccross(z, u) == z and ccross(u, z) == z
    assert ccross(u, u) == z
    assert -ccross(u, v) == ccross(v, u)
    assert ccross(u, v + w) == ccross(u, v) + ccross(u, w)
    assert ccross(u + v, w) == ccross(u, w) + ccross(v, w)
    assert ccross(a % u, v) == a % ccross(u, v)
    assert ccross(u, a % v) == a % ccross(u, v)


@given(vec3, vec3, vec3, scalars)
def test_inner_product_laws(x, y, z, c):
    assert cdot(x, y) == cnj(cdot(y, x))
    assert cdot(c % x, y) == c * cdot(x, y)
    assert cdot(x + y, z) == cdot(x, z) + cdot(y, z)
    xx = cdot(x, x)
    assert xx.im == 0 and xx.re >= 0
    assert (xx == cx(0)) == (x == cvector_zero(3))


@given(vec3, scalars)
def test_cross_of_multiples_vanishes(u, a):
    assert ccross(u, a % u) == cvector_zero(3)
    assert collinear_cvectors(u, a % u)


@given(fpair)
def test_cauchy_schwarz_and_triangle(xy):
    x, y = xy
    nx, ny = cnorm(x), cnorm(y)
    slack = 1e-12 * max(1.0, nx * ny)
    assert abs(complex(cdot(x, y))) <= nx * ny + slack
    assert cnorm(x + y) <= nx + ny + 1e-12 * max(1.0, nx + ny)


@given(fpair)
def test_dot_product_and_angle(xy):
    x, y = xy
    nx, ny = cnorm(x), cnorm(y)
    assume(nx > 1e-3 and ny > 1e-3)
    lhs = complex(cdot(x, y))
    rhs = nx * ny * complex(ccos(cvector_angle(x, y).value))
    assert abs(lhs - rhs) <= 1e-9 * nx * ny


@given(fpair)
def test_angle_range_on_non_collinear(xy):
    x, y = xy
    assume(cnorm(x) > 1e-3 and cnorm(y) > 1e-3)
    assume(not collinear_cvectors(x, y, 1e-6))
    a = cvector_angle(x, y).value
    assert 0 < a.re < math.pi
