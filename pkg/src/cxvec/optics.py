"""Monochromatic plane waves at a planar interface between two media.

Conventions
-----------
* A plane wave is ``(r, t) -> exp(-i (k.r - w t)) * (E, H)``.
* The interface normal ``n`` is oriented along the direction of incidence:
  ``k_i.n >= 0``, ``k_r.n <= 0`` and ``k_t.n >= 0``.  Medium 1 (index
  ``n1``) is on the side ``n`` points away from.
* Amplitudes are solved for TE polarization only (``E`` parallel to the
  interface); ``H = (n_medium / eta0) * khat x E`` for every wave.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import scalar as sc
from .errors import ConstraintViolation, DegenerateIncidence, DimensionError, Unsupported, UsageError
from .geometry import ccross, cdot, cnorm, corthogonal
from .rng import XorShift64Star
from .scalar import Backend, CScalar
from .vector import CVector, RVector, cvector_add, cvector_smul, max_abs_diff, vector_to_cvector

UNIT_TOL = 1e-12

FieldSampler = Callable[[RVector, float], "tuple[CVector, CVector]"]


def _fvec(x) -> RVector:
    if isinstance(x, RVector):
        if x.backend is Backend.FLOAT:
            return x
        return RVector._wrap(tuple(float(c) for c in x))
    return RVector([float(c) for c in x])


def _fcvec(x) -> CVector:
    if isinstance(x, CVector) and x.backend is Backend.FLOAT:
        return x
    return CVector([complex(c) for c in x])


def _require_unit(n: RVector, what: str) -> None:
    if n.dim != 3:
        raise DimensionError(f"{what} must be a 3-vector")
    if abs(n.norm() - 1.0) > UNIT_TOL:
        raise UsageError(f"{what} must have unit length, got norm {n.norm()!r}")


@dataclass(frozen=True)
class PlaneWave:
    k: RVector
    omega: float
    E: CVector
    H: CVector

    def __post_init__(self):
        object.__setattr__(self, "k", _fvec(self.k))
        object.__setattr__(self, "E", _fcvec(self.E))
        object.__setattr__(self, "H", _fcvec(self.H))
        object.__setattr__(self, "omega", float(self.omega))
        for name in ("k", "E", "H"):
            if getattr(self, name).dim != 3:
                raise DimensionError(f"plane wave {name} must have dimension 3")

    def __call__(self, r: RVector, t: float):
        return evaluate_plane_wave(self, r, t)


@dataclass(frozen=True)
class Plane:
    p0: RVector
    normal: RVector

    def __post_init__(self):
        object.__setattr__(self, "p0", _fvec(self.p0))
        object.__setattr__(self, "normal", _fvec(self.normal))
        if self.p0.dim != 3:
            raise DimensionError("plane anchor must be a 3-vector")
        _require_unit(self.normal, "plane normal")

    def contains(self, p: RVector, tol: float = 1e-9) -> bool:
        return abs((_fvec(p) - self.p0).dot(self.normal)) <= tol * max(1.0, _fvec(p).norm())


@dataclass(frozen=True)
class Interface:
    n1: float
    n2: float
    plane: Plane

    def __post_init__(self):
        if not (self.n1 > 0 and self.n2 > 0):
            raise UsageError(f"refractive indices must be positive, got {self.n1}, {self.n2}")

    @property
    def normal(self) -> RVector:
        return self.plane.normal


def is_valid_interface(i: Interface) -> bool:
    try:
        _require_unit(i.plane.normal, "plane normal")
    except UsageError:
        return False
    return i.n1 > 0 and i.n2 > 0 and all(math.isfinite(c) for c in i.plane.p0)


@dataclass(frozen=True)
class WaveTriple:
    incident: PlaneWave
    reflected: PlaneWave
    transmitted: PlaneWave
    k0: float
    eta0: float

    @property
    def waves(self) -> tuple[PlaneWave, PlaneWave, PlaneWave]:
        return (self.incident, self.reflected, self.transmitted)


def map_triple(f, triple):
    a, b, c = triple
    return (f(a), f(b), f(c))


# -- fields -----------------------------------------------------------------------


def phase_factor(k: RVector, omega: float, r: RVector, t: float) -> CScalar:
    return CScalar.from_complex(cmath.exp(-1j * (k.dot(_fvec(r)) - omega * t)))


def evaluate_plane_wave(w: PlaneWave, r: RVector, t: float) -> tuple[CVector, CVector]:
    ph = phase_factor(w.k, w.omega, r, t)
    return cvector_smul(ph, w.E), cvector_smul(ph, w.H)


def superpose(*samplers: FieldSampler) -> FieldSampler:
    def field(r, t):
        parts = [f(r, t) for f in samplers]
        e, h = parts[0]
        for e2, h2 in parts[1:]:
            e, h = cvector_add(e, e2), cvector_add(h, h2)
        return e, h

    return field


def is_valid_emf(f: FieldSampler, samples: Sequence, tol: float = 1e-12) -> bool:
    """E and H orthogonal at every sampled ``(point, time)``."""
    if not samples:
        raise UsageError("is_valid_emf needs at least one sample")
    for r, t in samples:
        e, h = f(r, t)
        if not corthogonal(e, h, tol):
            return False
    return True


def wave_validity_residual(w: PlaneWave) -> float:
    """Worst scale-relative orthogonality residual among (E,k), (H,k), (E,H)."""
    kc = vector_to_cvector(w.k)
    worst = 0.0
    for a, b in ((w.E, kc), (w.H, kc), (w.E, w.H)):
        worst = max(worst, sc.modulus(cdot(a, b)) / max(1.0, cnorm(a) * cnorm(b)))
    return worst


def is_valid_wave(w: PlaneWave, tol: float = 1e-12) -> bool:
    if not w.omega > 0:
        return False
    if not any(w.k):
        return False
    return wave_validity_residual(w) <= tol


def _tangential_residual(n: CVector, a: CVector, b: CVector) -> float:
    d = max_abs_diff(ccross(n, a), ccross(n, b))
    scale = max(cnorm(a), cnorm(b))
    return d / scale if scale > 0 else d


def boundary_residual(f1: FieldSampler, f2: FieldSampler, n: RVector, p: RVector, t: float) -> float:
    """Largest relative mismatch of ``n x E`` and ``n x H`` across the interface."""
    n = _fvec(n)
    _require_unit(n, "boundary normal")
    nc = vector_to_cvector(n)
    e1, h1 = f1(p, t)
    e2, h2 = f2(p, t)
    return max(_tangential_residual(nc, e1, e2), _tangential_residual(nc, h1, h2))


def boundary_conditions(f1: FieldSampler, f2: FieldSampler, n: RVector, p: RVector, t: float,
                        tol: float = 1e-9) -> bool:
    return boundary_residual(f1, f2, n, p, t) <= tol


def sym_residual(u: RVector, v: RVector, w: RVector) -> float:
    u, v, w = _fvec(u), _fvec(v), _fvec(w)
    _require_unit(w, "symmetry axis")
    mirror = w * (2.0 * u.dot(w)) - u
    return (v - mirror).norm() / max(1.0, u.norm())


def are_sym_wrt(u: RVector, v: RVector, w: RVector, tol: float = 1e-9) -> bool:
    """``v == 2 (u.w) w - u``: u and v mirror each other about the unit axis w."""
    return sym_residual(u, v, w) <= tol


def _normalize(v: RVector) -> RVector:
    return v / v.norm()


def incident_basis(w_i: PlaneWave, i: Interface) -> tuple[RVector, RVector, RVector]:
    """Right-handed orthonormal ``(x, y, z)`` with ``z = n`` and ``x`` normal to the plane of incidence.

    At normal incidence the first canonical axis that is not nearly parallel
    to ``n`` is projected onto the interface and used as ``x``.
    """
    n = i.normal
    k = w_i.k
    c = k.cross(n)
    if c.norm() > 1e-12 * k.norm():
        x = _normalize(c)
    else:
        for j in range(3):
            e = RVector._wrap(tuple(1.0 if m == j else 0.0 for m in range(3)))
            g = e - n * e.dot(n)
            if g.norm() >= 0.5:
                x = _normalize(g)
                break
    return x, n.cross(x), n


# -- solver -----------------------------------------------------------------------


def completed_h(k: RVector, e: CVector, n_medium: float, eta0: float) -> CVector:
    """``H = (n / eta0) * khat x E``."""
    khat = vector_to_cvector(_normalize(k))
    return cvector_smul(sc.cx(n_medium / eta0), ccross(khat, e))


@dataclass(frozen=True)
class InterfaceSolution:
    triple: WaveTriple
    r: float
    t: float
    theta_i: float
    theta_r: float
    theta_t: float


def _angle_to_axis(k: RVector, axis: RVector) -> float:
    along = k.dot(axis)
    tang = (k - axis * along).norm()
    return math.atan2(tang, along)


def solve(incident: PlaneWave, i: Interface, k0: float, eta0: float, tol: float = 1e-9) -> InterfaceSolution:
    """Reflected and transmitted TE waves for ``incident`` at ``i``, with the Fresnel data."""
    if not is_valid_interface(i):
        raise ConstraintViolation("is_valid_interface", "interface is not valid")
    if not is_valid_wave(incident, tol):
        raise ConstraintViolation("is_valid_wave", "incident wave is not a valid plane wave")
    n = i.normal
    k_i = incident.k
    kn = k_i.norm()
    if abs(kn - k0 * i.n1) > tol * k0 * i.n1:
        raise ConstraintViolation("norm ki = k0 n1", f"|k_i| = {kn!r} but k0*n1 = {k0 * i.n1!r}")
    h_expected = completed_h(k_i, incident.E, i.n1, eta0)
    scale = max(cnorm(h_expected), cnorm(incident.H), 1e-300)
    if max_abs_diff(incident.H, h_expected) > tol * scale:
        raise ConstraintViolation("hi = ei n1/eta0", "incident H is not (n1/eta0) khat x E")
    cos_i = k_i.dot(n) / kn
    if abs(cos_i) <= tol:
        raise DegenerateIncidence("incident wavevector lies in the interface plane")
    if cos_i < 0:
        raise ConstraintViolation("0 <= ki.n", "incident wavevector points against the interface normal")
    e_dot_n = sum((z * c for z, c in zip(incident.E.to_complex_list(), n)), 0j)
    if abs(e_dot_n) > tol * cnorm(incident.E):
        raise Unsupported("only TE polarization (E parallel to the interface) is supported")

    k_tan = k_i - n * k_i.dot(n)
    sin_i = k_tan.norm() / kn
    if i.n1 * sin_i > i.n2:
        raise Unsupported("total internal reflection: (n1/n2) sin(theta_i) > 1")

    k_r = k_i - n * (2.0 * k_i.dot(n))
    kt_len = k0 * i.n2
    kt_n = math.sqrt(max(kt_len * kt_len - k_tan.dot(k_tan), 0.0))
    k_t = k_tan + n * kt_n
    cos_t = kt_n / kt_len

    den = i.n1 * cos_i + i.n2 * cos_t
    r = (i.n1 * cos_i - i.n2 * cos_t) / den
    t = 2.0 * i.n1 * cos_i / den

    # amplitudes referenced at the anchor so that phases match across the whole plane
    d = i.plane.p0.dot(n)
    kin = k_i.dot(n)
    e_r = cvector_smul(CScalar.from_complex(r * cmath.exp(-1j * (2.0 * kin) * d)), incident.E)
    e_t = cvector_smul(CScalar.from_complex(t * cmath.exp(-1j * (kin - kt_n) * d)), incident.E)
    reflected = PlaneWave(k_r, incident.omega, e_r, completed_h(k_r, e_r, i.n1, eta0))
    transmitted = PlaneWave(k_t, incident.omega, e_t, completed_h(k_t, e_t, i.n2, eta0))
    triple = WaveTriple(incident, reflected, transmitted, float(k0), float(eta0))
    return InterfaceSolution(
        triple, r, t,
        _angle_to_axis(k_i, n), _angle_to_axis(k_r, -n), _angle_to_axis(k_t, n),
    )


def solve_interface(incident: PlaneWave, i: Interface, k0: float, eta0: float, tol: float = 1e-9) -> WaveTriple:
    return solve(incident, i, k0, eta0, tol).triple


# -- checks -----------------------------------------------------------------------


def _require_structural(tr: WaveTriple, i: Interface) -> None:
    if not is_valid_interface(i):
        raise UsageError("interface is not valid")
    for name, w in zip(("incident", "reflected", "transmitted"), tr.waves):
        if not w.omega > 0:
            raise UsageError(f"{name} wave has non-positive angular frequency")
        if not any(w.k):
            raise UsageError(f"{name} wave has a zero wavevector")


def reflection_residual(tr: WaveTriple, i: Interface) -> float:
    _require_structural(tr, i)
    return sym_residual(-tr.incident.k, tr.reflected.k, i.normal)


def check_law_of_reflection(tr: WaveTriple, i: Interface, tol: float = 1e-9) -> bool:
    return reflection_residual(tr, i) <= tol


def incidence_residual(tr: WaveTriple, i: Interface) -> float:
    """Worst ``|k.x| / |k|`` over the three wavevectors."""
    _require_structural(tr, i)
    x, _, _ = incident_basis(tr.incident, i)
    return max(abs(w.k.dot(x)) / w.k.norm() for w in tr.waves)


def check_plane_of_incidence(tr: WaveTriple, i: Interface, tol: float = 1e-9) -> bool:
    return incidence_residual(tr, i) <= tol


def sample_plane_points(i: Interface, tr: WaveTriple, count: int, rng: XorShift64Star,
                        extent: float | None = None) -> list[RVector]:
    """Points ``p0 + a y + b x`` on the interface, ``|a|, |b| <= extent``.

    The default extent is ten free-space wavelengths.
    """
    if extent is None:
        extent = 10.0 * 2.0 * math.pi / tr.k0
    x, y, _ = incident_basis(tr.incident, i)
    return [i.plane.p0 + y * rng.uniform(-extent, extent) + x * rng.uniform(-extent, extent) for _ in range(count)]


def sample_times(tr: WaveTriple, count: int, rng: XorShift64Star) -> list[float]:
    period = 2.0 * math.pi / tr.incident.omega
    return [rng.uniform(0.0, 10.0 * period) for _ in range(count)]


def triple_boundary_residual(tr: WaveTriple, i: Interface, points: Iterable[RVector], times: Sequence[float]) -> float:
    """Worst boundary mismatch of (incident + reflected) against transmitted."""
    above = superpose(tr.incident, tr.reflected)
    worst = 0.0
    for p in points:
        for t in times:
            worst = max(worst, boundary_residual(above, tr.transmitted, i.normal, p, t))
    return worst


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    residual: float
    tolerance: float


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(abs(b), 1e-300)


def check_triple(tr: WaveTriple, i: Interface, tol_geom: float = 1e-9, tol_bc: float = 1e-9,
                 seed: int = 0, n_points: int = 10, n_times: int = 5) -> list[Check]:
    """Every validity clause, the boundary conditions and both wavevector laws, as named checks."""
    _require_structural(tr, i)
    checks = []
    rng = XorShift64Star(seed)
    points = sample_plane_points(i, tr, n_points, rng)
    times = sample_times(tr, n_times, rng)
    samples = [(p, t) for p in points for t in times]

    worst = 0.0
    for w in tr.waves:
        for p, t in samples:
            e, h = w(p, t)
            worst = max(worst, sc.modulus(cdot(e, h)) / max(1.0, cnorm(e) * cnorm(h)))
    checks.append(Check("valid_emf", worst <= tol_geom, worst, tol_geom))

    omegas_ok = all(w.omega > 0 and any(w.k) for w in tr.waves)
    worst = max(wave_validity_residual(w) for w in tr.waves)
    checks.append(Check("valid_waves", omegas_ok and worst <= tol_geom, worst, tol_geom))

    n = i.normal
    signs = (max(0.0, -tr.incident.k.dot(n)), max(0.0, tr.reflected.k.dot(n)), max(0.0, -tr.transmitted.k.dot(n)))
    worst = max(s / tr.k0 for s in signs)
    checks.append(Check("wavevector_signs", worst <= tol_geom, worst, tol_geom))

    k_i, k_r, k_t = map_triple(lambda w: w.k.norm(), tr.waves)
    worst = max(_rel(k_i, tr.k0 * i.n1), _rel(k_r, tr.k0 * i.n1), _rel(k_t, tr.k0 * i.n2))
    checks.append(Check("norms", worst <= tol_geom, worst, tol_geom))

    e_i, e_r, e_t = map_triple(lambda w: cnorm(w.E), tr.waves)
    h_i, h_r, h_t = map_triple(lambda w: cnorm(w.H), tr.waves)
    pairs = ((h_i, e_i * i.n1 / tr.eta0), (h_r, e_r * i.n1 / tr.eta0), (h_t, e_t * i.n2 / tr.eta0))
    worst = max(abs(h - target) / max(target, h, 1e-300) for h, target in pairs)
    checks.append(Check("impedance", worst <= tol_geom, worst, tol_geom))

    smallest = min(e_i, e_r)
    checks.append(Check("nonzero_amplitudes", smallest > 0.0, smallest, 0.0))

    worst = triple_boundary_residual(tr, i, points, times)
    checks.append(Check("boundary_conditions", worst <= tol_bc, worst, tol_bc))

    worst = reflection_residual(tr, i)
    checks.append(Check("law_of_reflection", worst <= tol_geom, worst, tol_geom))

    worst = incidence_residual(tr, i)
    checks.append(Check("plane_of_incidence", worst <= tol_geom, worst, tol_geom))
    return checks
