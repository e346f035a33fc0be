"""Random valid TE interface configurations shared by the optics tests."""

import math

from cxvec.optics import Interface, Plane, PlaneWave, completed_h
from cxvec.rng import XorShift64Star
from cxvec.vector import CVector, RVector

C0 = 299792458.0
ETA0 = 376.730313668


def unit(v):
    return v / v.norm()


def random_unit(rng):
    while True:
        v = RVector([rng.uniform(-1, 1) for _ in range(3)])
        if 0.1 < v.norm() <= 1:
            return unit(v)


def frame(n):
    """Two unit vectors completing ``n`` to an orthonormal frame."""
    helper = RVector([1.0, 0.0, 0.0]) if abs(n.component(1)) < 0.9 else RVector([0.0, 1.0, 0.0])
    u = unit(helper - n * helper.dot(n))
    return u, n.cross(u)


def te_configuration(theta, n1, n2, k0, normal=None, azimuth=0.0, p0=(0.0, 0.0, 0.0), amplitude=1.0 + 0j):
    n = RVector([0.0, 0.0, 1.0]) if normal is None else normal
    u, v = frame(n)
    along = u * math.cos(azimuth) + v * math.sin(azimuth)
    k = (along * math.sin(theta) + n * math.cos(theta)) * (k0 * n1)
    # TE: E along n x (in-plane direction), which stays tangential at normal incidence
    s = n.cross(along)
    e = CVector.from_complex([amplitude * c for c in s])
    iface = Interface(n1, n2, Plane(RVector(list(p0)), n))
    wave = PlaneWave(k, C0 * k0, e, completed_h(k, e, n1, ETA0))
    return wave, iface


def random_configuration(seed):
    rng = XorShift64Star(seed)
    while True:
        theta = math.radians(rng.uniform(0, 80))
        n1, n2 = rng.uniform(1, 2.5), rng.uniform(1, 2.5)
        if n1 * math.sin(theta) < n2 * (1 - 1e-6):
            break
    k0 = rng.uniform(1e6, 1e7)
    normal = random_unit(rng)
    p0 = tuple(rng.uniform(-1e-5, 1e-5) for _ in range(3))
    amp = complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) or 1.0
    wave, iface = te_configuration(theta, n1, n2, k0, normal, rng.uniform(0, 2 * math.pi), p0, amp)
    return wave, iface, k0
