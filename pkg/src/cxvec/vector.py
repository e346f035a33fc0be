"""Complex and real vectors with componentwise combinators.

Components are addressed 1..N through :meth:`CVector.component`, mirroring
the ``v$i`` notation.  Every complex-vector operation is defined by lifting a
scalar operation with :func:`vector_const`, :func:`vector_map` or
:func:`vector_map2`.
"""

from __future__ import annotations

import cmath
import numbers
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import scalar as sc
from .errors import BackendMismatch, DimensionError
from .scalar import Backend, CScalar


def _to_cscalar(x, backend: Backend | None = None) -> CScalar:
    tx = type(x)
    if tx is CScalar:
        return x
    if tx is complex:
        if backend is Backend.EXACT:
            raise BackendMismatch("complex literal used on the exact backend")
        if not cmath.isfinite(x):
            raise ValueError(f"non-finite component {x!r}")
        return CScalar._make(x.real, x.imag)
    if isinstance(x, numbers.Complex) and not isinstance(x, numbers.Real):
        return CScalar(float(x.real), float(x.imag))
    if isinstance(x, (tuple, list)) and len(x) == 2:
        if backend is Backend.FLOAT:
            return CScalar(float(x[0]), float(x[1]))
        return CScalar(x[0], x[1])
    return sc.cx(x, backend)


def _check_dim(n: int) -> None:
    if not isinstance(n, numbers.Integral) or n < 1:
        raise DimensionError(f"dimension must be a positive integer, got {n!r}")


class CVector:
    """Immutable complex vector of runtime dimension ``dim >= 1``."""

    __slots__ = ("_c",)

    def __init__(self, components: Iterable, backend: Backend | None = None):
        raw = list(components)
        if not raw:
            raise DimensionError("a complex vector needs at least one component")
        if backend is None and any(_is_floatish(x) for x in raw):
            backend = Backend.FLOAT
        comps = [_to_cscalar(x, backend) for x in raw]
        kind = type(comps[0].re)
        if any(type(z.re) is not kind for z in comps):
            raise BackendMismatch("vector components mix exact and floating scalars")
        object.__setattr__(self, "_c", tuple(comps))

    @classmethod
    def from_complex(cls, values: Iterable[complex]) -> "CVector":
        """Floating-backend vector from Python complex numbers."""
        comps = []
        for z in values:
            z = complex(z)
            if not cmath.isfinite(z):
                raise ValueError(f"non-finite component {z!r}")
            comps.append(CScalar._make(z.real, z.imag))
        if not comps:
            raise DimensionError("a complex vector needs at least one component")
        return cls._wrap(tuple(comps))

    @classmethod
    def _wrap(cls, comps: tuple) -> "CVector":
        v = object.__new__(cls)
        object.__setattr__(v, "_c", comps)
        return v

    def __setattr__(self, name, value):
        raise AttributeError("CVector is immutable")

    @property
    def dim(self) -> int:
        return len(self._c)

    @property
    def backend(self) -> Backend:
        return self._c[0].backend

    @property
    def components(self) -> tuple:
        return self._c

    def component(self, i: int) -> CScalar:
        """The ``i``-th component, 1-based."""
        if not 1 <= i <= len(self._c):
            raise IndexError(f"component {i} out of range 1..{len(self._c)}")
        return self._c[i - 1]

    def __len__(self):
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other):
        if isinstance(other, CVector):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __add__(self, other):
        if isinstance(other, CVector):
            return cvector_add(self, other)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, CVector):
            return cvector_sub(self, other)
        return NotImplemented

    def __neg__(self):
        return cvector_neg(self)

    def __rmod__(self, a):
        # a % v, scalar multiplication
        return cvector_smul(_to_cscalar(a, self.backend), self)

    __rmul__ = __rmod__

    def to_complex_list(self) -> list[complex]:
        return [complex(z) for z in self._c]

    def __repr__(self):
        return "CVector([" + ", ".join(str(z) for z in self._c) + "])"


def _is_floatish(x) -> bool:
    tx = type(x)
    if tx is complex or tx is float:
        return True
    if tx is int or tx is Fraction:
        return False
    if isinstance(x, CScalar):
        return type(x.re) is float
    if isinstance(x, (tuple, list)):
        return any(_is_floatish(p) for p in x)
    if isinstance(x, (Fraction, numbers.Integral)):
        return False
    return isinstance(x, numbers.Complex)


class RVector:
    """Immutable real vector; ``dim >= 1``."""

    __slots__ = ("_c",)

    def __init__(self, components: Iterable, backend: Backend | None = None):
        raw = list(components)
        if not raw:
            raise DimensionError("a real vector needs at least one component")
        if backend is None and any(
            isinstance(x, numbers.Real) and not isinstance(x, (Fraction, numbers.Integral)) for x in raw
        ):
            backend = Backend.FLOAT
        comps = tuple(sc.as_real(x, backend) for x in raw)
        kind = type(comps[0])
        if any(type(x) is not kind for x in comps):
            raise BackendMismatch("vector components mix exact and floating scalars")
        object.__setattr__(self, "_c", comps)

    @classmethod
    def _wrap(cls, comps: tuple) -> "RVector":
        v = object.__new__(cls)
        object.__setattr__(v, "_c", comps)
        return v

    def __setattr__(self, name, value):
        raise AttributeError("RVector is immutable")

    @property
    def dim(self) -> int:
        return len(self._c)

    @property
    def backend(self) -> Backend:
        return sc.backend_of(self._c[0])

    @property
    def components(self) -> tuple:
        return self._c

    def component(self, i: int):
        if not 1 <= i <= len(self._c):
            raise IndexError(f"component {i} out of range 1..{len(self._c)}")
        return self._c[i - 1]

    def __len__(self):
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other):
        if isinstance(other, RVector):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def _same(self, other: "RVector") -> None:
        if len(self._c) != len(other._c):
            raise DimensionError(f"dimension mismatch: {len(self._c)} vs {len(other._c)}")

    def __add__(self, other):
        if not isinstance(other, RVector):
            return NotImplemented
        self._same(other)
        return RVector._wrap(tuple(a + b for a, b in zip(self._c, other._c)))

    def __sub__(self, other):
        if not isinstance(other, RVector):
            return NotImplemented
        self._same(other)
        return RVector._wrap(tuple(a - b for a, b in zip(self._c, other._c)))

    def __neg__(self):
        return RVector._wrap(tuple(-a for a in self._c))

    def __mul__(self, a):
        if not isinstance(a, numbers.Real):
            return NotImplemented
        a = sc.as_real(a, self.backend)
        return RVector._wrap(tuple(a * x for x in self._c))

    __rmul__ = __mul__

    def __truediv__(self, a):
        if not isinstance(a, numbers.Real):
            return NotImplemented
        a = sc.as_real(a, self.backend)
        return RVector._wrap(tuple(x / a for x in self._c))

    def dot(self, other: "RVector"):
        self._same(other)
        return sum((a * b for a, b in zip(self._c, other._c)), type(self._c[0])(0))

    def norm(self) -> float:
        return float(self.dot(self)) ** 0.5

    def cross(self, other: "RVector") -> "RVector":
        if len(self._c) != 3 or len(other._c) != 3:
            raise DimensionError("real cross product needs two 3-vectors")
        a1, a2, a3 = self._c
        b1, b2, b3 = other._c
        return RVector._wrap((a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1))

    def __repr__(self):
        return "RVector([" + ", ".join(str(x) for x in self._c) + "])"


def cvec(*values, backend: Backend | None = None) -> CVector:
    """Shorthand constructor: ``cvec(1, 2+1j, (3, 4))``."""
    return CVector(values, backend)


def rvec(*values, backend: Backend | None = None) -> RVector:
    return RVector(values, backend)


# -- componentwise combinators ---------------------------------------------------


def vector_const(k: CScalar, n: int) -> CVector:
    _check_dim(n)
    return CVector._wrap((_to_cscalar(k),) * n)


def vector_map(f: Callable[[CScalar], CScalar], v: CVector) -> CVector:
    return CVector._wrap(tuple(f(z) for z in v._c))


def vector_map2(f: Callable[[CScalar, CScalar], CScalar], u: CVector, v: CVector) -> CVector:
    if len(u._c) != len(v._c):
        raise DimensionError(f"dimension mismatch: {len(u._c)} vs {len(v._c)}")
    return CVector._wrap(tuple(f(a, b) for a, b in zip(u._c, v._c)))


# -- vector space operations ---------------------------------------------------


def cvector_zero(n: int, backend: Backend = Backend.EXACT) -> CVector:
    return vector_const(sc.cx(0, backend), n)


def cvector_add(u: CVector, v: CVector) -> CVector:
    return vector_map2(sc.add, u, v)


def cvector_neg(v: CVector) -> CVector:
    return vector_map(sc.neg, v)


def cvector_sub(u: CVector, v: CVector) -> CVector:
    return cvector_add(u, cvector_neg(v))


def cvector_smul(a: CScalar, v: CVector) -> CVector:
    return vector_map(lambda z: a * z, v)


def cvector_cnj(v: CVector) -> CVector:
    return vector_map(sc.cnj, v)


# -- real / imaginary decomposition -------------------------------------------


def cvector_re(v: CVector) -> RVector:
    return RVector._wrap(tuple(z.re for z in v._c))


def cvector_im(v: CVector) -> RVector:
    return RVector._wrap(tuple(z.im for z in v._c))


def complex_vector(re: RVector, im: RVector) -> CVector:
    if re.dim != im.dim:
        raise DimensionError(f"dimension mismatch: {re.dim} vs {im.dim}")
    if re.backend is not im.backend:
        raise BackendMismatch("real and imaginary parts use different backends")
    return CVector._wrap(tuple(CScalar._make(a, b) for a, b in zip(re._c, im._c)))


def rvector_zero(n: int, backend: Backend = Backend.EXACT) -> RVector:
    _check_dim(n)
    z = 0.0 if backend is Backend.FLOAT else Fraction(0)
    return RVector._wrap((z,) * n)


def vector_to_cvector(r: RVector) -> CVector:
    zero = type(r._c[0])(0)
    return CVector._wrap(tuple(CScalar._make(a, zero) for a in r._c))


# -- bivector bijection ---------------------------------------------------------


def pastecart(a: RVector, b: RVector) -> RVector:
    return RVector._wrap(a._c + b._c)


def fstcart(r: RVector, n: int) -> RVector:
    return RVector._wrap(r._c[:n])


def sndcart(r: RVector, n: int) -> RVector:
    return RVector._wrap(r._c[n:])


def flatten(v: CVector) -> RVector:
    """Dimension ``2N`` real vector: all real parts, then all imaginary parts."""
    return pastecart(cvector_re(v), cvector_im(v))


def unflatten(r: RVector) -> CVector:
    if r.dim % 2:
        raise DimensionError(f"unflatten needs an even dimension, got {r.dim}")
    n = r.dim // 2
    return complex_vector(fstcart(r, n), sndcart(r, n))


# -- numeric comparison --------------------------------------------------------


def max_abs_diff(u: Sequence, v: Sequence) -> float:
    """Largest componentwise modulus of ``u - v`` (complex or real vectors)."""
    if len(u) != len(v):
        raise DimensionError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return max(abs(complex(a) - complex(b)) for a, b in zip(u, v))


def allclose(u, v, tol: float) -> bool:
    return max_abs_diff(u, v) <= tol
