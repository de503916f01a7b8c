"""Integer inner loops for per-slice lattice point classification.

Two interchangeable backends implement the same kernel:

* ``numba``: an @njit(nogil=True) double loop over the congruence-filtered
  (k1, k2) grid (the default when numba imports);
* ``numpy``: the same classification as vectorized boolean masks.

Select with the environment variable ``CASSON3_BACKEND=numba|numpy``.
Both are division-free int64 arithmetic; all rational comparisons are
cross-multiplied onto the common scale L = 3*p*q*r in advance by the
caller.  ``benchmarks/bench_enumerate.py`` compares the two.

Parameter vector layout (int64, see ``PARAMS_LEN``)::

    0  pq       p*q
    1  D        3*r (denominator of the c lattice)
    2  su2_on   1 if ell == 0 and both slice classes are regular with
                eigenvalue 1 (pointed-sphere test enabled)
    3  GA       rotation number of a times L (0 if unused)
    4  GB       rotation number of b times L
    5  twoL     2*L
    6  xl_r     slice bounds (numerators over 3*p*q) times r
    7  xu_r
    8  yl_r
    9  yu_r
    10 zl_r
    11 zu_r
    12 k1lo     first admissible k1 (>= ceil(xl*r/pq), congruent mod 3)
    13 k1hi     floor(xu*r/pq)
    14 k2lo
    15 k2hi
    16 nrep_ab  1 for a hexagon (type I) slice, 0 for a nonagon (type II)

Result vector layout (int64, ``RESULT_LEN``)::

    0 n_Ia   1 n_IIa   2 n_IIb   3 n_excluded   4 n_central_in_polytope
    5 n_tight   6 tight_k1   7 tight_k2   8 n_scanned
"""

from __future__ import annotations

import os

import numpy as np

PARAMS_LEN = 17
RESULT_LEN = 9

_P_PQ, _P_D, _P_SU2, _P_GA, _P_GB, _P_2L, _P_XL, _P_XU, _P_YL, _P_YU, \
    _P_ZL, _P_ZU, _P_K1LO, _P_K1HI, _P_K2LO, _P_K2HI, _P_NREP = range(PARAMS_LEN)


def _classify_slice_py(params):
    """Reference loop shared by both backends (numba compiles this body)."""
    pq = params[_P_PQ]
    D = params[_P_D]
    su2_on = params[_P_SU2]
    GA = params[_P_GA]
    GB = params[_P_GB]
    twoL = params[_P_2L]
    xl_r = params[_P_XL]
    xu_r = params[_P_XU]
    yl_r = params[_P_YL]
    yu_r = params[_P_YU]
    zl_r = params[_P_ZL]
    zu_r = params[_P_ZU]
    nrep_ab = params[_P_NREP]

    n_ia = np.int64(0)
    n_iia = np.int64(0)
    n_iib = np.int64(0)
    n_exc = np.int64(0)
    n_central = np.int64(0)
    n_tight = np.int64(0)
    tight_k1 = np.int64(0)
    tight_k2 = np.int64(0)
    n_scanned = np.int64(0)

    dG = GA - GB
    if dG < 0:
        dG = -dG
    sG = GA + GB
    if twoL - sG < sG:
        sG = twoL - sG

    for k1 in range(params[_P_K1LO], params[_P_K1HI] + 1, 3):
        for k2 in range(params[_P_K2LO], params[_P_K2HI] + 1, 3):
            n_scanned += 1
            k3 = -k1 - k2
            t3 = k3 * pq
            if t3 < zl_r or t3 > zu_r:
                continue
            if k2 < k1 or k3 < k2 or k3 > k1 + D:
                continue
            # Valid alcove point inside all 18 constraints from here on.
            hits = 0
            if k1 == k2:
                hits += 1
            if k2 == k3:
                hits += 1
            if k3 == k1 + D:
                hits += 1
            if hits >= 2:
                # Central class: abelian image, impossible on a homology
                # sphere; weight 0 but flagged for reporting.
                n_exc += 1
                n_central += 1
                continue
            if nrep_ab + (1 if hits == 1 else 0) >= 2:
                n_exc += 1
                continue
            if nrep_ab == 1 or hits == 1:
                n_ia += 1
                continue
            # All three classes regular.
            t1 = k1 * pq
            t2 = k2 * pq
            if (t1 == xl_r or t1 == xu_r or t2 == yl_r or t2 == yu_r
                    or t3 == zl_r or t3 == zu_r):
                if n_tight == 0:
                    tight_k1 = k1
                    tight_k2 = k2
                n_tight += 1
                continue
            if su2_on == 1 and k2 == 0:
                Gc = 2 * t3
                if dG < Gc and Gc < sG:
                    n_iib += 1
                    continue
            n_iia += 1

    out = np.empty(RESULT_LEN, dtype=np.int64)
    out[0] = n_ia
    out[1] = n_iia
    out[2] = n_iib
    out[3] = n_exc
    out[4] = n_central
    out[5] = n_tight
    out[6] = tight_k1
    out[7] = tight_k2
    out[8] = n_scanned
    return out


def classify_slice_numpy(params: np.ndarray) -> np.ndarray:
    """Vectorized backend: identical results via boolean masks."""
    pq = int(params[_P_PQ])
    D = int(params[_P_D])
    k1 = np.arange(params[_P_K1LO], params[_P_K1HI] + 1, 3, dtype=np.int64)
    k2 = np.arange(params[_P_K2LO], params[_P_K2HI] + 1, 3, dtype=np.int64)
    out = np.zeros(RESULT_LEN, dtype=np.int64)
    out[8] = k1.size * k2.size
    if k1.size == 0 or k2.size == 0:
        return out

    K1 = k1[:, None]
    K2 = k2[None, :]
    K3 = -K1 - K2
    T3 = K3 * pq
    valid = (T3 >= params[_P_ZL]) & (T3 <= params[_P_ZU])
    valid &= (K2 >= K1) & (K3 >= K2) & (K3 <= K1 + D)

    hits = ((K1 == K2).astype(np.int8) + (K2 == K3) + (K3 == K1 + D))
    central = valid & (hits >= 2)
    c_double = valid & (hits == 1)
    c_regular = valid & (hits == 0)

    nrep_ab = int(params[_P_NREP])
    if nrep_ab == 1:
        ia = c_regular
        excluded = central | c_double
        interior = np.zeros_like(ia)
        tight = np.zeros_like(ia)
    else:
        ia = c_double
        excluded = central
        T1 = K1 * pq
        T2 = K2 * pq
        tight = c_regular & (
            (T1 == params[_P_XL]) | (T1 == params[_P_XU])
            | (T2 == params[_P_YL]) | (T2 == params[_P_YU])
            | (T3 == params[_P_ZL]) | (T3 == params[_P_ZU])
        )
        interior = c_regular & ~tight

    out[0] = np.count_nonzero(ia)
    out[3] = np.count_nonzero(excluded)
    out[4] = np.count_nonzero(central)

    n_tight = int(np.count_nonzero(tight))
    out[5] = n_tight
    if n_tight:
        i, j = np.argwhere(tight)[0]
        out[6] = k1[i]
        out[7] = k2[j]

    n_interior = int(np.count_nonzero(interior))
    if n_interior and int(params[_P_SU2]) == 1:
        GA = int(params[_P_GA])
        GB = int(params[_P_GB])
        twoL = int(params[_P_2L])
        Gc = 2 * T3
        iib = interior & (K2 == 0) & (abs(GA - GB) < Gc) \
            & (Gc < GA + GB) & (Gc < twoL - GA - GB)
        out[2] = np.count_nonzero(iib)
    out[1] = n_interior - out[2]
    return out


_BACKENDS = {"numpy": classify_slice_numpy}
try:
    import numba

    classify_slice_numba = numba.njit(
        "int64[:](int64[:])", nogil=True, cache=True
    )(_classify_slice_py)
    _BACKENDS["numba"] = classify_slice_numba
except ImportError:  # pragma: no cover - exercised only without numba
    classify_slice_numba = None


def _resolve_backend() -> str:
    name = os.environ.get("CASSON3_BACKEND", "").strip().lower()
    if name in _BACKENDS:
        return name
    if name:
        raise ValueError(
            f"CASSON3_BACKEND={name!r} unknown; choose from {sorted(_BACKENDS)}"
        )
    return "numba" if "numba" in _BACKENDS else "numpy"


def active_backend() -> str:
    return _resolve_backend()


def classify_slice(params: np.ndarray, backend: str | None = None) -> np.ndarray:
    name = backend or _resolve_backend()
    try:
        fn = _BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown backend {name!r}; choose from {sorted(_BACKENDS)}") from None
    return fn(params)
