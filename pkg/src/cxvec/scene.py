"""JSON scene, triple and report documents.

Complex numbers are ``[re, im]`` pairs.  Floats are written with Python's
shortest round-trip ``repr`` so a parsed report compares equal, field for
field, to the one that was serialized.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .errors import UsageError
from .optics import Check, Interface, InterfaceSolution, Plane, PlaneWave, WaveTriple, completed_h
from .vector import CVector, RVector

DEFAULT_TOL_GEOM = 1e-9
DEFAULT_TOL_BC = 1e-9


class SceneError(UsageError):
    """Malformed input document; ``path`` names the offending field."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


def _reject_constant(name):
    raise ValueError(f"non-finite literal {name} is not allowed")


def loads(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as e:
        raise SceneError(source, f"line {e.lineno} column {e.colno}: {e.msg}") from None
    except ValueError as e:
        raise SceneError(source, str(e)) from None


def read_document(path: str | Path) -> Any:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        raise SceneError(str(p), f"cannot read file ({e.strerror})") from None
    return loads(text, str(p))


def canonical_hash(doc: Any) -> str:
    blob = json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=True)
    return "sha256:" + hashlib.sha256(blob.encode("ascii")).hexdigest()


# -- field readers ----------------------------------------------------------------


def _get(obj: Any, key: str, path: str, required: bool = True):
    if not isinstance(obj, dict):
        raise SceneError(path, "expected an object")
    if key not in obj:
        if required:
            raise SceneError(f"{path}.{key}" if path else key, "missing field")
        return None
    return obj[key]


def _number(x: Any, path: str) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise SceneError(path, f"expected a number, got {type(x).__name__}")
    v = float(x)
    if not math.isfinite(v):
        raise SceneError(path, "must be finite")
    return v


def _positive(x: Any, path: str) -> float:
    v = _number(x, path)
    if v <= 0:
        raise SceneError(path, f"must be positive, got {v!r}")
    return v


def _real3(x: Any, path: str) -> RVector:
    if not isinstance(x, list) or len(x) != 3:
        raise SceneError(path, "expected a list of 3 numbers")
    return RVector([_number(c, f"{path}[{j}]") for j, c in enumerate(x)])


def _complex3(x: Any, path: str) -> CVector:
    if not isinstance(x, list) or len(x) != 3:
        raise SceneError(path, "expected a list of 3 [re, im] pairs")
    out = []
    for j, z in enumerate(x):
        if not isinstance(z, list) or len(z) != 2:
            raise SceneError(f"{path}[{j}]", "expected an [re, im] pair")
        out.append(complex(_number(z[0], f"{path}[{j}][0]"), _number(z[1], f"{path}[{j}][1]")))
    return CVector.from_complex(out)


def _wave(obj: Any, path: str, h_default=None) -> PlaneWave:
    k = _real3(_get(obj, "k", path), f"{path}.k")
    if not any(k):
        raise SceneError(f"{path}.k", "wavevector must be nonzero")
    omega = _positive(_get(obj, "omega", path), f"{path}.omega")
    e = _complex3(_get(obj, "E", path), f"{path}.E")
    h_raw = _get(obj, "H", path, required=h_default is None)
    h = h_default(k, e) if h_raw is None else _complex3(h_raw, f"{path}.H")
    return PlaneWave(k, omega, e, h)


@dataclass(frozen=True)
class Scene:
    interface: Interface
    incident: PlaneWave
    k0: float
    eta0: float
    tol_geom: float
    tol_bc: float
    digest: str


def parse_scene(doc: Any) -> Scene:
    media = _get(doc, "media", "")
    n1 = _positive(_get(media, "n1", "media"), "media.n1")
    n2 = _positive(_get(media, "n2", "media"), "media.n2")
    iface = _get(doc, "interface", "")
    p0 = _real3(_get(iface, "p0", "interface"), "interface.p0")
    normal = _real3(_get(iface, "normal", "interface"), "interface.normal")
    if abs(normal.norm() - 1.0) > 1e-12:
        raise SceneError("interface.normal", f"must have unit length, got norm {normal.norm()!r}")
    consts = _get(doc, "constants", "")
    k0 = _positive(_get(consts, "k0", "constants"), "constants.k0")
    eta0 = _positive(_get(consts, "eta0", "constants"), "constants.eta0")
    tols = _get(doc, "tolerances", "", required=False) or {}
    tg = _get(tols, "geometry", "tolerances", required=False)
    tb = _get(tols, "boundary", "tolerances", required=False)
    tol_geom = DEFAULT_TOL_GEOM if tg is None else _positive(tg, "tolerances.geometry")
    tol_bc = DEFAULT_TOL_BC if tb is None else _positive(tb, "tolerances.boundary")
    incident = _wave(_get(doc, "incident", ""), "incident", lambda k, e: completed_h(k, e, n1, eta0))
    interface = Interface(n1, n2, Plane(p0, normal))
    return Scene(interface, incident, k0, eta0, tol_geom, tol_bc, canonical_hash(doc))


def load_scene(path: str | Path) -> Scene:
    return parse_scene(read_document(path))


def parse_triple(doc: Any, k0: float, eta0: float) -> WaveTriple:
    """A triple document holds three fully specified waves; constants come from the scene."""
    waves = [_wave(_get(doc, name, ""), name) for name in ("incident", "reflected", "transmitted")]
    return WaveTriple(*waves, k0, eta0)


def load_triple(path: str | Path, k0: float, eta0: float) -> WaveTriple:
    return parse_triple(read_document(path), k0, eta0)


# -- writers ------------------------------------------------------------------------


def _rlist(v: RVector) -> list[float]:
    return [float(c) for c in v]


def _clist(v: CVector) -> list[list[float]]:
    return [[z.real, z.imag] for z in v.to_complex_list()]


def wave_to_dict(w: PlaneWave) -> dict:
    return {"k": _rlist(w.k), "omega": w.omega, "E": _clist(w.E), "H": _clist(w.H)}


def triple_to_dict(tr: WaveTriple) -> dict:
    return {name: wave_to_dict(w) for name, w in zip(("incident", "reflected", "transmitted"), tr.waves)}


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, allow_nan=False, ensure_ascii=True) + "\n"


@dataclass
class Report:
    solved: dict | None
    checks: list[dict]
    provenance: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c["pass"] for c in self.checks)

    def to_dict(self) -> dict:
        return {"solved": self.solved, "checks": self.checks, "provenance": self.provenance}

    @classmethod
    def from_dict(cls, doc: dict) -> "Report":
        return cls(doc["solved"], doc["checks"], doc["provenance"])

    def to_json(self) -> str:
        return dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(loads(text))


def _finite_or_none(x: float):
    return x if math.isfinite(x) else None


def check_entries(checks: list[Check]) -> list[dict]:
    return [
        {"name": c.name, "pass": bool(c.passed), "residual": _finite_or_none(float(c.residual)),
         "tolerance": float(c.tolerance)}
        for c in checks
    ]


def solved_block(sol: InterfaceSolution) -> dict:
    return {
        "k_r": _rlist(sol.triple.reflected.k),
        "k_t": _rlist(sol.triple.transmitted.k),
        "r_coeff": sol.r,
        "t_coeff": sol.t,
        "theta_i_deg": math.degrees(sol.theta_i),
        "theta_r_deg": math.degrees(sol.theta_r),
        "theta_t_deg": math.degrees(sol.theta_t),
    }


def build_report(solved: dict | None, checks: list[Check], seed: int, version: str, digest: str) -> Report:
    return Report(solved, check_entries(checks), {"seed": seed, "tool_version": version, "scene_hash": digest})
