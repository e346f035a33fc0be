"""Complex matrices stored as a vector of row vectors."""

from __future__ import annotations

from typing import Iterable

import numpy as np

from . import _accel
from . import scalar as sc
from .errors import BackendMismatch, DimensionError
from .scalar import Backend, CScalar
from .vector import CVector, cvector_add, cvector_cnj, cvector_neg, cvector_smul, cvector_zero


class CMatrix:
    """Immutable ``rows x cols`` complex matrix; entries addressed ``m.entry(i, j)`` 1-based."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable, backend: Backend | None = None):
        rs = tuple(r if isinstance(r, CVector) else CVector(r, backend) for r in rows)
        if not rs:
            raise DimensionError("a matrix needs at least one row")
        n = rs[0].dim
        if any(r.dim != n for r in rs):
            raise DimensionError("ragged matrix rows")
        if len({r.backend for r in rs}) != 1:
            raise BackendMismatch("matrix rows mix exact and floating scalars")
        object.__setattr__(self, "_rows", rs)

    @classmethod
    def _wrap(cls, rows: tuple) -> "CMatrix":
        m = object.__new__(cls)
        object.__setattr__(m, "_rows", rows)
        return m

    def __setattr__(self, name, value):
        raise AttributeError("CMatrix is immutable")

    @property
    def rows(self) -> int:
        return len(self._rows)

    @property
    def cols(self) -> int:
        return self._rows[0].dim

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def backend(self) -> Backend:
        return self._rows[0].backend

    @property
    def row_vectors(self) -> tuple:
        return self._rows

    def row(self, i: int) -> CVector:
        if not 1 <= i <= len(self._rows):
            raise IndexError(f"row {i} out of range 1..{len(self._rows)}")
        return self._rows[i - 1]

    def entry(self, i: int, j: int) -> CScalar:
        return self.row(i).component(j)

    def __eq__(self, other):
        if isinstance(other, CMatrix):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self):
        return hash(self._rows)

    def to_numpy(self) -> np.ndarray:
        return np.array([r.to_complex_list() for r in self._rows], dtype=np.complex128)

    @classmethod
    def from_numpy(cls, a: np.ndarray) -> "CMatrix":
        return cls._wrap(
            tuple(CVector._wrap(tuple(CScalar._make(float(z.real), float(z.imag)) for z in row)) for row in a)
        )

    def __repr__(self):
        return "CMatrix([" + ", ".join(repr(r) for r in self._rows) + "])"


def cmatrix_zero(m: int, n: int, backend: Backend = Backend.EXACT) -> CMatrix:
    return CMatrix._wrap((cvector_zero(n, backend),) * m)


def cmatrix_identity(n: int, backend: Backend = Backend.EXACT) -> CMatrix:
    one, zero = sc.cx(1, backend), sc.cx(0, backend)
    return CMatrix._wrap(
        tuple(CVector._wrap(tuple(one if i == j else zero for j in range(n))) for i in range(n))
    )


def column_matrix(v: CVector) -> CMatrix:
    return CMatrix._wrap(tuple(CVector._wrap((z,)) for z in v.components))


def _same_shape(a: CMatrix, b: CMatrix) -> None:
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch: {a.shape} vs {b.shape}")


def cmatrix_neg(m: CMatrix) -> CMatrix:
    return CMatrix._wrap(tuple(cvector_neg(r) for r in m.row_vectors))


def cmatrix_cnj(m: CMatrix) -> CMatrix:
    return CMatrix._wrap(tuple(cvector_cnj(r) for r in m.row_vectors))


def cmatrix_add(a: CMatrix, b: CMatrix) -> CMatrix:
    _same_shape(a, b)
    return CMatrix._wrap(tuple(cvector_add(r, s) for r, s in zip(a.row_vectors, b.row_vectors)))


def cmatrix_smul(a: CScalar, m: CMatrix) -> CMatrix:
    return CMatrix._wrap(tuple(cvector_smul(a, r) for r in m.row_vectors))


def cmatrix_mul(a: CMatrix, b: CMatrix) -> CMatrix:
    """``(a b)[i, j] = sum_k a[i, k] * b[k, j]``.

    Floating matrices go through the compiled kernel; exact ones are summed
    in rational arithmetic.
    """
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    if a.backend is not b.backend:
        raise BackendMismatch("cannot multiply exact and floating matrices")
    if a.backend is Backend.FLOAT:
        return CMatrix.from_numpy(_accel.cmatmul(a.to_numpy(), b.to_numpy()))
    arows = [r.components for r in a.row_vectors]
    bcols = list(zip(*(r.components for r in b.row_vectors)))
    zero = sc.cx(0, Backend.EXACT)
    out = []
    for ar in arows:
        row = []
        for bc in bcols:
            acc = zero
            for x, y in zip(ar, bc):
                acc = acc + x * y
            row.append(acc)
        out.append(CVector._wrap(tuple(row)))
    return CMatrix._wrap(tuple(out))


def cmatrix_cvector_mul(m: CMatrix, v: CVector) -> CVector:
    if m.cols != v.dim:
        raise DimensionError(f"cannot apply {m.shape} matrix to a vector of dimension {v.dim}")
    zero = sc.zero_like(v.components[0])
    out = []
    for r in m.row_vectors:
        acc = zero
        for x, y in zip(r.components, v.components):
            acc = acc + x * y
        out.append(acc)
    return CVector._wrap(tuple(out))
