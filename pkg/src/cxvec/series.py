"""Summability and infinite sums of complex-vector sequences.

Infinite sums are evaluated on the flattened (real, dimension 2N) sequence
and unflattened at the end.  Convergence is decided by a windowed Cauchy
test: after each term, the spread of every coordinate over the last ``W``
partial sums must be ``<= tol``, with ``W = max(10, max_terms // 10)``.
Series that converge slower than the budget allows (e.g. ``sum 1/n**2`` at a
tight tolerance) are reported as not converged.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from . import _accel
from .errors import DimensionError, UsageError
from .rng import XorShift64Star
from .scalar import Backend, CScalar
from .vector import (
    CVector,
    RVector,
    cvector_add,
    cvector_zero,
    flatten,
    max_abs_diff,
    unflatten,
)

DEFAULT_TOL = 1e-12
DEFAULT_MAX_TERMS = 1000


@dataclass(frozen=True)
class VectorSequence:
    """A term function over either ``{start, start+1, ...}`` or a finite index set."""

    dim: int
    term: Callable[[int], CVector]
    start: int = 0
    indices: tuple[int, ...] | None = None

    @classmethod
    def from_start(cls, term, dim: int, start: int = 0) -> "VectorSequence":
        return cls(dim, term, start, None)

    @classmethod
    def finite(cls, term, dim: int, indices) -> "VectorSequence":
        return cls(dim, term, 0, tuple(sorted(set(indices))))

    @property
    def is_finite(self) -> bool:
        return self.indices is not None

    def index_stream(self, limit: int) -> range | tuple:
        if self.indices is not None:
            return self.indices
        return range(self.start, self.start + limit)

    def __call__(self, n: int) -> CVector:
        v = self.term(n)
        if v.dim != self.dim:
            raise DimensionError(f"term {n} has dimension {v.dim}, expected {self.dim}")
        return v


@dataclass(frozen=True)
class SumOutcome:
    converged: bool
    value: CVector | None
    terms_used: int
    residual: float
    budget_exhausted: bool = False


def window_size(max_terms: int) -> int:
    return max(10, max_terms // 10)


def _check_budget(max_terms: int) -> None:
    if max_terms < 1:
        raise UsageError(f"max_terms must be >= 1, got {max_terms}")


def _as_flat(a: np.ndarray) -> np.ndarray:
    return np.concatenate([a.real, a.imag], axis=1)


def _scan(seq: VectorSequence, tol: float, max_terms: int, project: Callable[[np.ndarray], np.ndarray]):
    """Run the windowed Cauchy test, evaluating terms in growing chunks.

    ``project`` maps the complex term matrix (one row per term) to the real
    rows being tested.  Returns ``(k, spread, partial_sum, terms_evaluated)``
    as from :func:`_accel.cauchy_window`.  The first stopping index does not
    depend on the chunking, so early exit is safe.
    """
    window = window_size(max_terms)
    indices = iter(seq.index_stream(max_terms))
    rows: list[list[complex]] = []
    chunk = 2 * window
    while True:
        for _, n in zip(range(chunk), indices):
            rows.append(seq(n).to_complex_list())
        arr = np.ascontiguousarray(project(np.array(rows, dtype=np.complex128).reshape(len(rows), seq.dim)))
        k, spread, total = _accel.cauchy_window(arr, window, tol)
        if k >= 0 or len(rows) >= max_terms:
            return k, spread, total, len(rows)
        chunk = max(window, len(rows) // 2)


def _real_summable(seq: VectorSequence, tol: float, max_terms: int, project) -> tuple[bool, float]:
    k, spread, _, _ = _scan(seq, tol, max_terms, project)
    return k >= 0, spread


def summable(seq: Callable[[int], RVector], dim: int, tol: float = DEFAULT_TOL,
             max_terms: int = DEFAULT_MAX_TERMS, start: int = 0) -> bool:
    """Windowed-Cauchy summability of a real-vector sequence ``n -> seq(n)``, ``n >= start``."""
    _check_budget(max_terms)
    rows = np.array([[float(x) for x in seq(n)] for n in range(start, start + max_terms)], dtype=np.float64)
    k, _, _ = _accel.cauchy_window(rows.reshape(max_terms, dim), window_size(max_terms), tol)
    return k >= 0


@dataclass(frozen=True)
class SummabilityDecision:
    summable: bool
    budget_exhausted: bool
    real_part: bool
    imag_part: bool
    spread: float

    def __bool__(self):
        return self.summable


def csummable(seq: VectorSequence, tol: float = DEFAULT_TOL, max_terms: int = DEFAULT_MAX_TERMS) -> SummabilityDecision:
    """Summable iff both the real-part and imaginary-part sequences are."""
    _check_budget(max_terms)
    if seq.is_finite:
        return SummabilityDecision(True, False, True, True, 0.0)
    re_ok, re_spread = _real_summable(seq, tol, max_terms, np.real)
    im_ok, im_spread = _real_summable(seq, tol, max_terms, np.imag)
    ok = re_ok and im_ok
    return SummabilityDecision(ok, not ok, re_ok, im_ok, max(re_spread, im_spread))


def _finite_sum(seq: VectorSequence) -> CVector:
    backend = Backend.EXACT
    terms = [seq(n) for n in seq.indices]
    if terms:
        backend = terms[0].backend
    acc = cvector_zero(seq.dim, backend)
    for t in terms:
        acc = cvector_add(acc, t)
    return acc


def cinfsum(seq: VectorSequence, tol: float = DEFAULT_TOL, max_terms: int = DEFAULT_MAX_TERMS) -> SumOutcome:
    """Sum of the sequence, computed as ``unflatten(infsum(flatten o f))``.

    Finite index sets are summed directly (exactly, on the exact backend).
    """
    _check_budget(max_terms)
    if seq.is_finite:
        return SumOutcome(True, _finite_sum(seq), len(seq.indices), 0.0)
    k, spread, total, used = _scan(seq, tol, max_terms, _as_flat)
    value = unflatten(RVector._wrap(tuple(float(x) for x in total)))
    if k < 0:
        return SumOutcome(False, value, used, spread, budget_exhausted=True)
    return SumOutcome(True, value, k + 1, spread)


def componentwise_sum(seq: VectorSequence, n_terms: int) -> CVector:
    """Direct complex partial sum of the first ``n_terms`` terms, no flattening."""
    acc = [0j] * seq.dim
    for n in seq.index_stream(n_terms):
        for i, z in enumerate(seq(n)):
            acc[i] += complex(z)
    return CVector.from_complex(acc)


# -- linearity ------------------------------------------------------------------


@dataclass
class Counterexample:
    law: str
    u: CVector
    v: CVector | None
    a: CScalar | None
    residual: float


@dataclass
class LinearityReport:
    trials: int
    additive: bool
    homogeneous: bool
    flatten_real_linear: bool
    worst_additive: float = 0.0
    worst_homogeneous: float = 0.0
    worst_flatten: float = 0.0
    counterexamples: list[Counterexample] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.additive and self.homogeneous


def _random_cvector(rng: XorShift64Star, n: int) -> CVector:
    return CVector._wrap(tuple(CScalar._make(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(n)))


def _rel(x: CVector, y: CVector) -> float:
    scale = max(1.0, max(abs(complex(z)) for z in x.components), max(abs(complex(z)) for z in y.components))
    return max_abs_diff(x, y) / scale


def check_clinear(f: Callable[[CVector], CVector], in_dim: int, out_dim: int, trials: int = 100,
                  tol: float = 1e-9, rng_seed: int = 0) -> LinearityReport:
    """Randomized falsification of complex linearity of ``f``.

    Each trial checks additivity ``f(u+v) = f(u)+f(v)``, complex homogeneity
    ``f(a u) = a f(u)`` and real linearity of ``flatten o f o unflatten``.
    The first trial uses ``a = i`` so conjugate-linear maps are caught
    deterministically.
    """
    if trials < 1:
        raise UsageError(f"trials must be >= 1, got {trials}")
    rng = XorShift64Star(rng_seed)
    report = LinearityReport(trials, True, True, True)

    def g(r: RVector) -> RVector:
        return flatten(f(unflatten(r)))

    for t in range(trials):
        u = _random_cvector(rng, in_dim)
        v = _random_cvector(rng, in_dim)
        a = CScalar._make(0.0, 1.0) if t == 0 else CScalar._make(rng.uniform(-2, 2), rng.uniform(-2, 2))
        fu = f(u)
        if fu.dim != out_dim:
            raise DimensionError(f"f returned dimension {fu.dim}, expected {out_dim}")

        res = _rel(f(cvector_add(u, v)), cvector_add(fu, f(v)))
        report.worst_additive = max(report.worst_additive, res)
        if res > tol:
            report.additive = False
            report.counterexamples.append(Counterexample("additivity", u, v, None, res))

        res = _rel(f(a % u), a % fu)
        report.worst_homogeneous = max(report.worst_homogeneous, res)
        if res > tol:
            report.homogeneous = False
            report.counterexamples.append(Counterexample("homogeneity", u, None, a, res))

        x, y = flatten(u), flatten(v)
        c = rng.uniform(-2, 2)
        lhs = g(x + y * c)
        rhs = g(x) + g(y) * c
        res = max_abs_diff(lhs, rhs) / max(1.0, max(abs(float(z)) for z in rhs))
        report.worst_flatten = max(report.worst_flatten, res)
        if res > tol:
            report.flatten_real_linear = False
            report.counterexamples.append(Counterexample("flatten-real-linearity", u, v, CScalar._make(c, 0.0), res))
    return report
