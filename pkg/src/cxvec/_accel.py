"""Floating-point kernels with a numba path and a pure-numpy fallback.

The numba path is used when numba imports and ``CXVEC_DISABLE_NUMBA`` is
unset (or ``0``).  Both implementations stay importable as ``nb_*`` /
``np_*`` so they can be compared against each other.
"""

from __future__ import annotations

import os

import numpy as np

_flag = os.environ.get("CXVEC_DISABLE_NUMBA", "").strip().lower()
_DISABLED = _flag not in ("", "0", "false", "no")

try:
    if _DISABLED:
        raise ImportError("disabled by CXVEC_DISABLE_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda f: f


USING_NUMBA = HAVE_NUMBA


# -- complex matrix product ---------------------------------------------------


def np_cmatmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b


@njit(cache=True)
def _cmatmul_loop(a, b):
    m, n = a.shape
    p = b.shape[1]
    out = np.zeros((m, p), dtype=np.complex128)
    for i in range(m):
        for k in range(n):
            aik = a[i, k]
            for j in range(p):
                out[i, j] += aik * b[k, j]
    return out


def nb_cmatmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return _cmatmul_loop(np.ascontiguousarray(a, dtype=np.complex128), np.ascontiguousarray(b, dtype=np.complex128))


# -- batched inner products ---------------------------------------------------


def np_cdot_rows(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Row-wise ``sum_i u_i * conj(v_i)`` for (batch, n) arrays."""
    return np.einsum("bi,bi->b", u, np.conj(v))


@njit(cache=True)
def _cdot_rows_loop(u, v):
    nb, n = u.shape
    out = np.zeros(nb, dtype=np.complex128)
    for b in range(nb):
        acc = 0j
        for i in range(n):
            acc += u[b, i] * np.conj(v[b, i])
        out[b] = acc
    return out


def nb_cdot_rows(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    return _cdot_rows_loop(np.ascontiguousarray(u, dtype=np.complex128), np.ascontiguousarray(v, dtype=np.complex128))


# -- windowed Cauchy test on partial sums -------------------------------------


def np_cauchy_window(terms: np.ndarray, window: int, tol: float):
    """First stopping point of the windowed Cauchy criterion.

    ``terms`` is (n_terms, d) real.  After term ``k`` (0-based) the spread
    ``max - min`` of each coordinate over the last ``window`` partial sums is
    taken; the criterion holds when the largest spread is ``<= tol``.

    Returns ``(k, spread, partial_sum)``: ``k`` is the first index where the
    criterion holds, or -1 when it never does (then ``spread`` and
    ``partial_sum`` describe the last index).
    """
    n, d = terms.shape
    sums = np.cumsum(terms, axis=0)
    if n < window:
        spread = float(np.max(np.ptp(sums, axis=0))) if n else np.inf
        return -1, spread, sums[-1] if n else np.zeros(d)
    win = np.lib.stride_tricks.sliding_window_view(sums, window, axis=0)
    spreads = np.max(np.ptp(win, axis=2), axis=1)
    hits = np.flatnonzero(spreads <= tol)
    if hits.size:
        k = int(hits[0]) + window - 1
        return k, float(spreads[hits[0]]), sums[k].copy()
    return -1, float(spreads[-1]), sums[-1].copy()


@njit(cache=True)
def _cauchy_window_loop(terms, window, tol):
    n, d = terms.shape
    sums = np.empty((n, d))
    acc = np.zeros(d)
    for k in range(n):
        for c in range(d):
            acc[c] += terms[k, c]
            sums[k, c] = acc[c]
    spread = np.inf
    for k in range(window - 1, n):
        spread = 0.0
        for c in range(d):
            lo = sums[k, c]
            hi = lo
            for m in range(k - window + 1, k):
                x = sums[m, c]
                if x < lo:
                    lo = x
                elif x > hi:
                    hi = x
            if hi - lo > spread:
                spread = hi - lo
        if spread <= tol:
            return k, spread, sums[k].copy()
    if n < window and n > 0:
        spread = 0.0
        for c in range(d):
            lo = sums[0, c]
            hi = lo
            for m in range(n):
                x = sums[m, c]
                if x < lo:
                    lo = x
                elif x > hi:
                    hi = x
            if hi - lo > spread:
                spread = hi - lo
    if n == 0:
        return -1, spread, acc
    return -1, spread, sums[n - 1].copy()


def nb_cauchy_window(terms: np.ndarray, window: int, tol: float):
    k, spread, s = _cauchy_window_loop(np.ascontiguousarray(terms, dtype=np.float64), int(window), float(tol))
    return int(k), float(spread), s


if USING_NUMBA:
    cmatmul = nb_cmatmul
    cdot_rows = nb_cdot_rows
    cauchy_window = nb_cauchy_window
else:
    cmatmul = np_cmatmul
    cdot_rows = np_cdot_rows
    cauchy_window = np_cauchy_window
