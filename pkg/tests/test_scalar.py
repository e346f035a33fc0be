import math
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from cxvec import scalar as sc
from cxvec.errors import BackendMismatch, FloatingOnly, NotReal
from cxvec.scalar import Backend, CScalar, cacs, ccos, cnj, cx, modulus, real_of_complex

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
exact_scalars = st.builds(CScalar, rationals, rationals)
finite = st.floats(min_value=-10, max_value=10, allow_nan=False)


def cos_series(z: complex, terms: int = 80) -> complex:
    """Taylor series of cos, independent of cmath."""
    total, term = 0j, 1 + 0j
    for k in range(terms):
        total += term
        term *= -z * z / ((2 * k + 1) * (2 * k + 2))
    return total


def test_cx_embeds_reals():
    assert cx(5) == CScalar(5, 0)
    assert cx(0) == CScalar(0, 0)
    z = cx(F(-3, 2))
    assert z.re == F(-3, 2) and z.im == 0 and z.is_exact


def test_basic_arithmetic():
    assert cnj(CScalar(1, 2)) == CScalar(1, -2)
    assert CScalar(1, 1) * CScalar(1, -1) == CScalar(2, 0)
    assert modulus(CScalar(3.0, 4.0)) == 5.0


def test_modulus_is_floating_only():
    with pytest.raises(FloatingOnly):
        modulus(CScalar(3, 4))


def test_backends_do_not_mix():
    with pytest.raises(BackendMismatch):
        CScalar(1, 2) + CScalar(1.0, 2.0)


def test_real_of_complex():
    assert real_of_complex(CScalar(5, 0), 0) == 5
    with pytest.raises(NotReal):
        real_of_complex(CScalar(1.0, 1.0), 1e-12)
    assert real_of_complex(CScalar(2.0, 1e-15), 1e-12) == 2.0


def test_ccos_simple_values():
    assert ccos(cx(0.0)) == cx(1.0)
    assert abs(complex(ccos(cx(math.pi / 2)))) <= 1e-15


def test_cacs_simple_values():
    assert complex(cacs(cx(1.0))) == 0
    assert complex(cacs(cx(0.0))) == pytest.approx(math.pi / 2, abs=1e-16)


def test_cacs_of_two_is_imaginary_log():
    # cosh(y) = 2 gives y = ln(2 + sqrt 3)
    z = cacs(cx(2.0))
    assert z.re == pytest.approx(0.0, abs=1e-15)
    assert abs(z.im) == pytest.approx(math.log(2 + math.sqrt(3)), rel=1e-15)
    assert abs(cos_series(complex(z)) - 2) <= 1e-12
    assert abs(complex(ccos(z)) - 2) <= 1e-12


def test_ccos_matches_series_oracle():
    for z in (0.3 + 0.2j, -1.7 + 0.9j, 2.5 - 1.1j, 0.0 + 3.0j):
        assert abs(complex(ccos(CScalar.from_complex(z))) - cos_series(z)) <= 1e-12 * max(1, abs(cos_series(z)))


def test_exact_backend_rejects_transcendentals():
    with pytest.raises(FloatingOnly):
        ccos(cx(1))
    with pytest.raises(FloatingOnly):
        cacs(cx(1))


@given(exact_scalars, exact_scalars, exact_scalars)
def test_field_axioms_exact(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + sc.zero_like(a) == a
    assert a * sc.one_like(a) == a
    assert a + (-a) == sc.zero_like(a)
    if a != sc.zero_like(a):
        assert a * (sc.one_like(a) / a) == sc.one_like(a)


@given(exact_scalars, exact_scalars)
def test_conjugation_is_an_involutive_automorphism(z, w):
    assert cnj(cnj(z)) == z
    assert cnj(z * w) == cnj(z) * cnj(w)


@given(finite, finite)
def test_conjugation_involution_float(x, y):
    z = CScalar(x, y)
    assert cnj(cnj(z)) == z


@given(finite, finite)
def test_cacs_round_trip(x, y):
    z = CScalar(x, y)
    if abs(complex(z)) > 10:
        return
    back = complex(ccos(cacs(z)))
    assert abs(back - complex(z)) <= 1e-12 * max(1.0, abs(complex(z)))


@given(st.floats(min_value=-1, max_value=1))
def test_cacs_real_segment(x):
    z = cacs(cx(x))
    assert z.im == 0
    assert 0 <= z.re <= math.pi
