"""Complex scalars over an exact (rational) or floating (binary64) field.

Both parts of a :class:`CScalar` live on one backend.  Python ``int`` values
are promoted to :class:`fractions.Fraction` unless paired with a float, in
which case they become floats.  Mixing a ``Fraction`` and a ``float`` raises
:class:`~cxvec.errors.BackendMismatch`.
"""

from __future__ import annotations

import cmath
import enum
import math
import numbers
from fractions import Fraction

from .errors import BackendMismatch, FloatingOnly, NotReal


class Backend(enum.Enum):
    EXACT = "exact"
    FLOAT = "float"


def backend_of(x) -> Backend:
    """Backend of a real scalar or of anything carrying a ``backend`` attribute."""
    b = getattr(x, "backend", None)
    if b is not None:
        return b
    if isinstance(x, float):
        return Backend.FLOAT
    if isinstance(x, Fraction):
        return Backend.EXACT
    raise TypeError(f"not a backend scalar: {x!r}")


def as_real(x, backend: Backend | None = None):
    """Coerce ``x`` to a real scalar of ``backend`` (inferred when None)."""
    tx = type(x)
    if tx is float:
        if backend is Backend.EXACT:
            raise BackendMismatch("floating value used on the exact backend")
        if x - x != 0.0:
            raise ValueError(f"non-finite real {x!r}")
        return x
    if tx is Fraction and backend is not Backend.FLOAT:
        return x
    if tx is int:
        return float(x) if backend is Backend.FLOAT else Fraction(x)
    if isinstance(x, bool):
        x = int(x)
    if isinstance(x, Fraction):
        if backend is Backend.FLOAT:
            raise BackendMismatch("exact value used on the floating backend")
        return x
    if isinstance(x, numbers.Integral):
        if backend is Backend.FLOAT:
            return float(x)
        return Fraction(int(x))
    if isinstance(x, numbers.Real):
        if backend is Backend.EXACT:
            raise BackendMismatch("floating value used on the exact backend")
        x = float(x)
        if not math.isfinite(x):
            raise ValueError(f"non-finite real {x!r}")
        return x
    raise TypeError(f"not a real scalar: {x!r}")


class CScalar:
    """Immutable complex number ``re + i*im``."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=0):
        tr, ti = type(re), type(im)
        if tr is float and (ti is float or ti is int):
            object.__setattr__(self, "re", as_real(re, Backend.FLOAT))
            object.__setattr__(self, "im", as_real(im, Backend.FLOAT))
            return
        if isinstance(re, float) or isinstance(im, float):
            backend = Backend.FLOAT
        elif isinstance(re, numbers.Real) and not isinstance(re, (Fraction, numbers.Integral)):
            backend = Backend.FLOAT
        else:
            backend = None
        re = as_real(re, backend)
        im = as_real(im, backend_of(re))
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    @classmethod
    def _make(cls, re, im):
        # trusted constructor: both parts already share a backend
        z = object.__new__(cls)
        object.__setattr__(z, "re", re)
        object.__setattr__(z, "im", im)
        return z

    @classmethod
    def from_complex(cls, z: complex) -> "CScalar":
        return cls(float(z.real), float(z.imag))

    def __setattr__(self, name, value):
        raise AttributeError("CScalar is immutable")

    @property
    def backend(self) -> Backend:
        return Backend.FLOAT if type(self.re) is float else Backend.EXACT

    @property
    def is_exact(self) -> bool:
        return type(self.re) is not float

    def _other(self, other) -> "CScalar":
        if isinstance(other, CScalar):
            if type(other.re) is not type(self.re):
                raise BackendMismatch(f"cannot combine {self.backend.value} and {other.backend.value} scalars")
            return other
        if isinstance(other, numbers.Real):
            r = as_real(other, self.backend)
            return CScalar._make(r, type(r)(0))
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return CScalar._make(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return CScalar._make(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return CScalar._make(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self.re, self.im, o.re, o.im
        return CScalar._make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        den = o.re * o.re + o.im * o.im
        if not den:
            raise ZeroDivisionError("complex division by zero")
        a, b, c, d = self.re, self.im, o.re, o.im
        return CScalar._make((a * c + b * d) / den, (b * c - a * d) / den)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return o / self

    def __neg__(self):
        return CScalar._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self) -> "CScalar":
        return CScalar._make(self.re, -self.im)

    def __eq__(self, other):
        if isinstance(other, CScalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, numbers.Number):
            c = complex(other)
            return self.re == c.real and self.im == c.imag
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"CScalar({self.re!r}, {self.im!r})"

    def __str__(self):
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"


def cx(r, backend: Backend | None = None) -> CScalar:
    """Embed a real scalar as ``r + 0i``."""
    r = as_real(r, backend)
    return CScalar._make(r, type(r)(0))


def ii(backend: Backend = Backend.EXACT) -> CScalar:
    """The imaginary unit on the requested backend."""
    if backend is Backend.FLOAT:
        return CScalar._make(0.0, 1.0)
    return CScalar._make(Fraction(0), Fraction(1))


def zero_like(z: CScalar) -> CScalar:
    zr = type(z.re)(0)
    return CScalar._make(zr, zr)


def one_like(z: CScalar) -> CScalar:
    zr = type(z.re)(0)
    return CScalar._make(zr + 1, zr)


def add(z: CScalar, w: CScalar) -> CScalar:
    return z + w


def sub(z: CScalar, w: CScalar) -> CScalar:
    return z - w


def mul(z: CScalar, w: CScalar) -> CScalar:
    return z * w


def neg(z: CScalar) -> CScalar:
    return -z


def cnj(z: CScalar) -> CScalar:
    return CScalar._make(z.re, -z.im)


def re(z: CScalar):
    return z.re


def im(z: CScalar):
    return z.im


def _require_float(z: CScalar, opname: str) -> None:
    if type(z.re) is not float:
        raise FloatingOnly(f"{opname} is only defined on the floating backend")


def modulus(z: CScalar) -> float:
    _require_float(z, "modulus")
    return math.hypot(z.re, z.im)


def modulus2(z: CScalar):
    """Squared modulus; exact on the exact backend."""
    return z.re * z.re + z.im * z.im


def real_of_complex(z: CScalar, tol=0):
    """Real part of ``z``, provided ``|Im z| <= tol``; raises NotReal otherwise."""
    if abs(z.im) > tol:
        raise NotReal(abs(z.im), tol)
    return z.re


def ccos(z: CScalar) -> CScalar:
    """Complex cosine ``cos a cosh b - i sin a sinh b``."""
    _require_float(z, "ccos")
    a, b = z.re, z.im
    try:
        return CScalar._make(math.cos(a) * math.cosh(b), -math.sin(a) * math.sinh(b))
    except OverflowError as exc:
        raise OverflowError(f"ccos overflow for imaginary part {b!r}") from exc


def cacs(z: CScalar) -> CScalar:
    """Principal complex arccosine, ``pi/2 + i*ln(i*z + sqrt(1 - z*z))``.

    Real arguments in [-1, 1] go through :func:`math.acos` so the result is
    exactly real there.  Elsewhere the logarithm's argument is formed from
    whichever of ``sqrt(1-z^2) +/- i z`` has the larger modulus, using
    ``(s + iz)(s - iz) = 1`` to dodge cancellation.
    """
    _require_float(z, "cacs")
    if z.im == 0.0 and -1.0 <= z.re <= 1.0:
        return CScalar._make(math.acos(z.re), 0.0)
    w = complex(z.re, z.im)
    s = cmath.sqrt(1.0 - w * w)
    plus = s + 1j * w
    minus = s - 1j * w
    if abs(plus) >= abs(minus):
        lg = cmath.log(plus)
    else:
        lg = -cmath.log(minus)
    out = math.pi / 2 + 1j * lg
    return CScalar._make(out.real, out.imag)
