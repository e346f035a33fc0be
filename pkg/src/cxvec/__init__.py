"""Complex vector and matrix algebra with exact and floating backends,
plus a plane-wave interface solver."""

from .errors import (
    BackendMismatch,
    ConstraintViolation,
    CxvecError,
    DegenerateIncidence,
    DimensionError,
    FloatingOnly,
    NotReal,
    Unsupported,
    UsageError,
)
from .scalar import Backend, CScalar, cacs, ccos, cnj, cx, ii, modulus, modulus2, real_of_complex
from .vector import (
    CVector,
    RVector,
    complex_vector,
    cvec,
    cvector_add,
    cvector_cnj,
    cvector_im,
    cvector_neg,
    cvector_re,
    cvector_smul,
    cvector_sub,
    cvector_zero,
    flatten,
    fstcart,
    pastecart,
    rvec,
    sndcart,
    unflatten,
    vector_const,
    vector_map,
    vector_map2,
    vector_to_cvector,
)
from .geometry import (
    basis,
    cbasis,
    ccross,
    cdot,
    cnorm,
    cnorm2,
    collinear_cvectors,
    corthogonal,
    cvector_angle,
)
from .matrix import (
    CMatrix,
    cmatrix_add,
    cmatrix_cnj,
    cmatrix_cvector_mul,
    cmatrix_identity,
    cmatrix_mul,
    cmatrix_neg,
    cmatrix_smul,
    cmatrix_zero,
)
from .series import VectorSequence, check_clinear, cinfsum, csummable, summable
from .optics import (
    Interface,
    Plane,
    PlaneWave,
    WaveTriple,
    are_sym_wrt,
    boundary_conditions,
    check_law_of_reflection,
    check_plane_of_incidence,
    check_triple,
    is_valid_emf,
    is_valid_interface,
    is_valid_wave,
    solve,
    solve_interface,
)

__version__ = "0.1.0"
