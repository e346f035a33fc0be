import pytest

from cxvec.errors import UsageError
from cxvec.matrix import CMatrix, cmatrix_cvector_mul
from cxvec.scalar import Backend, CScalar, cx
from cxvec.series import (
    VectorSequence,
    check_clinear,
    cinfsum,
    componentwise_sum,
    csummable,
    summable,
    window_size,
)
from cxvec.vector import CVector, RVector, cvec, cvector_cnj, max_abs_diff


def geometric(q, base=(1, 1j)):
    return VectorSequence.from_start(lambda n: CVector.from_complex([c * q ** n for c in base]), len(base))


def test_window_size():
    assert window_size(50) == 10
    assert window_size(1000) == 100


def test_csummable_examples():
    assert csummable(geometric(0.5))
    assert not csummable(VectorSequence.from_start(lambda n: cvec(1, (0, 1)), 2), max_terms=200)
    fin = VectorSequence.finite(lambda n: cvec(n, n), 2, [0, 1, 2])
    assert csummable(fin)


def test_divergent_reports_budget_exhausted():
    d = csummable(VectorSequence.from_start(lambda n: cvec(1.0, 1.0), 2), max_terms=100)
    assert not d and d.budget_exhausted


def test_slow_harmonic_imaginary_part_is_not_summable():
    seq = VectorSequence.from_start(lambda n: CVector.from_complex([0.5 ** n + 1j / n]), 1, start=1)
    d = csummable(seq, tol=1e-10, max_terms=300)
    assert d.real_part and not d.imag_part and not d


def test_geometric_sum_closed_form():
    out = cinfsum(geometric(0.5))
    assert out.converged
    assert max_abs_diff(out.value, CVector.from_complex([2, 2j])) <= 1e-10


def test_finite_sum_is_exact():
    v = cvec((1, 2), 3)
    out = cinfsum(VectorSequence.finite(lambda n: v, 2, {0, 1, 2}))
    assert out.value == cx(3) % v


def test_flatten_path_equals_componentwise():
    seq = geometric(0.5, (1 + 2j, -3, 0.5j))
    out = cinfsum(seq)
    assert max_abs_diff(out.value, componentwise_sum(seq, out.terms_used)) <= 1e-12


def test_non_convergent_sum_is_flagged():
    out = cinfsum(VectorSequence.from_start(lambda n: cvec(1.0), 1), max_terms=50)
    assert not out.converged and out.budget_exhausted


def test_budget_must_be_positive():
    with pytest.raises(UsageError):
        csummable(geometric(0.5), max_terms=0)


def test_real_summable():
    assert summable(lambda n: RVector([0.25 ** n]), 1)
    assert not summable(lambda n: RVector([1.0]), 1, max_terms=100)


def test_check_clinear_on_matrix():
    m = CMatrix([[1 + 1j, 2], [0, -1j], [3, 0.5]], Backend.FLOAT)
    rep = check_clinear(lambda v: cmatrix_cvector_mul(m, v), 2, 3, trials=50)
    assert rep.passed and rep.flatten_real_linear


def test_check_clinear_catches_conjugation():
    rep = check_clinear(cvector_cnj, 3, 3, trials=20)
    assert rep.additive and not rep.homogeneous
    first = rep.counterexamples[0]
    assert first.law == "homogeneity" and first.a == CScalar(0.0, 1.0)
    # conjugation is real-linear, so the flattened form alone cannot catch it
    assert rep.flatten_real_linear


def test_check_clinear_catches_affine():
    c = CVector.from_complex([1, 0])
    rep = check_clinear(lambda v: v + c, 2, 2, trials=5)
    assert not rep.additive


def test_trials_must_be_positive():
    with pytest.raises(UsageError):
        check_clinear(cvector_cnj, 1, 1, trials=0)
