"""Products, norms, orthogonality, collinearity, angles and the canonical basis."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import scalar as sc
from .errors import DimensionError, FloatingOnly
from .scalar import Backend, CScalar
from .vector import CVector, RVector, vector_to_cvector

# cacs argument moduli in (1, 1 + ANGLE_CLAMP] are pulled back onto the unit circle
ANGLE_CLAMP = 1e-12

DEFAULT_ORTHO_TOL = 1e-12
DEFAULT_COLLINEAR_TOL = 1e-9


def _same_dim(u: CVector, v: CVector) -> None:
    if u.dim != v.dim:
        raise DimensionError(f"dimension mismatch: {u.dim} vs {v.dim}")


def ccross(u: CVector, v: CVector) -> CVector:
    if u.dim != 3 or v.dim != 3:
        raise DimensionError(f"cross product needs dimension 3, got {u.dim} and {v.dim}")
    u1, u2, u3 = u.components
    v1, v2, v3 = v.components
    return CVector._wrap((u2 * v3 - u3 * v2, u3 * v1 - u1 * v3, u1 * v2 - u2 * v1))


def cdot(u: CVector, v: CVector) -> CScalar:
    """Inner product ``sum_i u_i * cnj(v_i)``; conjugate-linear in ``v``."""
    _same_dim(u, v)
    acc = sc.zero_like(u.components[0])
    for a, b in zip(u.components, v.components):
        acc = acc + a * sc.cnj(b)
    return acc


def cnorm2(v: CVector):
    """Squared norm as a real scalar: the real part of ``v . v``.

    ``v . v`` is real by symmetry of the sum, so no tolerance check is made.
    """
    return cdot(v, v).re


def cnorm(v: CVector) -> float:
    if v.backend is not Backend.FLOAT:
        raise FloatingOnly("cnorm needs sqrt and is only defined on the floating backend")
    return math.sqrt(cnorm2(v))


def is_zero(v: CVector) -> bool:
    return not any(v.components)


def corthogonal(u: CVector, v: CVector, tol: float = DEFAULT_ORTHO_TOL) -> bool:
    """``u . v == 0``; exact on the exact backend, scale-relative on floats."""
    d = cdot(u, v)
    if d.is_exact:
        return not d
    scale = max(1.0, cnorm(u) * cnorm(v))
    return sc.modulus(d) <= tol * scale


def _collinear_exact(u: CVector, v: CVector) -> bool:
    a, b = u.components, v.components
    n = len(a)
    for i in range(n):
        for j in range(i + 1, n):
            if a[i] * b[j] - a[j] * b[i]:
                return False
    return True


def collinear_residual(u: CVector, v: CVector) -> float:
    """Cauchy-Schwarz equality residual ``|norm(u.v) - |u||v|| / (1 + |u||v|)``."""
    _same_dim(u, v)
    nn = cnorm(u) * cnorm(v)
    return abs(sc.modulus(cdot(u, v)) - nn) / (1.0 + nn)


def collinear_cvectors(u: CVector, v: CVector, tol: float = DEFAULT_COLLINEAR_TOL) -> bool:
    """True iff one vector is a complex multiple of the other."""
    _same_dim(u, v)
    if u.backend is Backend.EXACT and v.backend is Backend.EXACT:
        return _collinear_exact(u, v)
    return collinear_residual(u, v) <= tol


@dataclass(frozen=True)
class AngleResult:
    value: CScalar

    @property
    def re(self) -> float:
        return self.value.re

    @property
    def im(self) -> float:
        return self.value.im


def cvector_angle(u: CVector, v: CVector) -> AngleResult:
    _same_dim(u, v)
    if u.backend is not Backend.FLOAT or v.backend is not Backend.FLOAT:
        raise FloatingOnly("cvector_angle is only defined on the floating backend")
    if is_zero(u) or is_zero(v):
        return AngleResult(sc.cx(math.pi / 2))
    q = cdot(u, v) / sc.cx(cnorm(u) * cnorm(v))
    m = sc.modulus(q)
    if 1.0 < m <= 1.0 + ANGLE_CLAMP:
        q = CScalar._make(q.re / m, q.im / m)
    return AngleResult(sc.cacs(q))


def basis(k: int, n: int, backend: Backend = Backend.EXACT) -> RVector:
    if not 1 <= k <= n:
        raise IndexError(f"basis index {k} out of range 1..{n}")
    one, zero = (1.0, 0.0) if backend is Backend.FLOAT else (Fraction(1), Fraction(0))
    return RVector._wrap(tuple(one if i == k else zero for i in range(1, n + 1)))


def cbasis(k: int, n: int, backend: Backend = Backend.EXACT) -> CVector:
    return vector_to_cvector(basis(k, n, backend))
