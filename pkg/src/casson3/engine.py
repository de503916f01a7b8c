"""Lattice-point census of the SU(3) representation variety of Sigma(p,q,r).

Components of the variety correspond to lattice points c = (k1,k2,k3)/(3r)
with k1 == k2 == c*ell (mod 3) inside the slice polygons cut out by the 18
fusion constraints, one slice per admissible class pair (a, b) and central
label ell.  Each point is classified by the eigenvalue multiplicities of
(a, b, c) and its position in the polygon:

* some class central, or two classes with repeated eigenvalues: the fiber
  contains no irreducible representations (weight 0, "excluded");
* exactly one repeated-eigenvalue class: an isolated irreducible class
  (type Ia, weight 1);
* all regular, interior: a 2-sphere of irreducibles (type IIa, weight 2),
  or a pointed 2-sphere (type IIb, weight 2) when the fiber contains an
  SU(2) reducible, detected by the strict triangle criterion on rotation
  numbers (only possible for ell = 0);
* all regular with a tight constraint: never observed, and no weight is
  assigned; such a point is surfaced as a structured diagnostic instead of
  being guessed at.

The total invariant is  tau = #Ia + 2*#IIa + 2*#IIb.  Slices are
independent work units; enumeration is exact integer arithmetic in the
kernels of :mod:`casson3.kernels`, optionally across a thread pool
(``threads=`` argument, ``CASSON3_THREADS`` fallback), with results merged
in canonical slice order so output is identical for any thread count.
"""

from __future__ import annotations

import enum
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import partial

import numpy as np

from . import kernels
from .alcove import AlcovePoint, Multiplicity, classify_multiplicity, root_classes
from .arith import SurgeryData, make_surgery_data, normalize_mod3
from .fusion import FusionSlice, Membership, SliceKind, make_slice, membership
from .su2 import su2_irreducible_exists

# int64 kernels need |values| <= ~4*L; reject absurd inputs long before that.
_MAX_SCALE = 2**62


class PointClass(enum.Enum):
    IA = "Ia"
    IIA = "IIa"
    IIB = "IIb"
    EXCLUDED = "excluded"
    OUTSIDE = "outside"
    DIAGNOSTIC_TIGHT = "diagnostic-tight"


WEIGHTS = {
    PointClass.IA: 1,
    PointClass.IIA: 2,
    PointClass.IIB: 2,
    PointClass.EXCLUDED: 0,
    PointClass.OUTSIDE: 0,
}


class DiagnosticTightError(Exception):
    """All-regular lattice point found exactly on a fusion constraint.

    Carries (slice, k1, k2) for each offending point; no weight is ever
    assigned to these.
    """

    def __init__(self, hits):
        self.hits = list(hits)
        locs = ", ".join(
            f"ell={sl.ell} a={sl.a.k1, sl.a.k2, sl.a.k3}/{sl.a.denom} "
            f"b={sl.b.k1, sl.b.k2, sl.b.k3}/{sl.b.denom} k=({k1},{k2})"
            for sl, k1, k2 in self.hits
        )
        super().__init__(f"tight all-regular lattice point(s): {locs}")


@dataclass(frozen=True)
class ComponentTally:
    n_Ia: int = 0
    n_IIa: int = 0
    n_IIb: int = 0
    n_excluded: int = 0
    n_central_in_polytope: int = 0
    n_scanned: int = 0

    def weighted(self) -> int:
        return self.n_Ia + 2 * self.n_IIa + 2 * self.n_IIb


@dataclass(frozen=True)
class CassonResult:
    surgery: SurgeryData
    tau: int
    totals: dict
    slices: tuple  # ((FusionSlice, ComponentTally), ...)
    census: tuple  # (N_I, N_II)
    backend: str
    n_scanned: int


def classify_lattice_point(a: AlcovePoint, b: AlcovePoint, c: AlcovePoint,
                           ell: int) -> PointClass:
    """Classify one candidate lattice point, in exact rational arithmetic.

    Reference implementation of the decision procedure; the bulk kernels
    reproduce it in scaled integers.  a, b must be noncentral (they come
    from a slice); c is any alcove point with the denominators of the
    triple under study.
    """
    ma = classify_multiplicity(a)
    mb = classify_multiplicity(b)
    if Multiplicity.CENTRAL in (ma, mb):
        raise ValueError("slice classes a, b must be noncentral")
    ms = membership(a, b, c)
    if ms is Membership.OUTSIDE:
        return PointClass.OUTSIDE
    mc = classify_multiplicity(c)
    if mc is Multiplicity.CENTRAL:
        return PointClass.EXCLUDED
    n_rep = (ma is Multiplicity.DOUBLE) + (mb is Multiplicity.DOUBLE) \
        + (mc is Multiplicity.DOUBLE)
    if n_rep >= 2:
        return PointClass.EXCLUDED
    if n_rep == 1:
        return PointClass.IA
    if ms is Membership.BOUNDARY_FIRST_KIND:
        return PointClass.DIAGNOSTIC_TIGHT
    if ell == 0:
        ga = a.su2_rotation_number()
        gb = b.su2_rotation_number()
        gc = c.su2_rotation_number()
        if ga is not None and gb is not None and gc is not None \
                and su2_irreducible_exists(ga, gb, gc):
            return PointClass.IIB
    return PointClass.IIA


def slices_for(data: SurgeryData):
    """All slices of the census, in canonical (ell, a, b) order."""
    for ell in (0, 1, 2):
        a_set = root_classes(data.p, ell, data.a_mod3)
        b_set = root_classes(data.q, ell, data.a_mod3)
        for a in a_set:
            a_double = classify_multiplicity(a) is Multiplicity.DOUBLE
            for b in b_set:
                if a_double and classify_multiplicity(b) is Multiplicity.DOUBLE:
                    continue
                yield make_slice(a, b, ell)


def _int_bounds(sl: FusionSlice, p: int, q: int) -> tuple[int, ...]:
    """Slice bounds as integer numerators over 3*p*q."""
    T = 3 * p * q
    out = []
    for v in (sl.bounds.Xl, sl.bounds.Xu, sl.bounds.Yl,
              sl.bounds.Yu, sl.bounds.Zl, sl.bounds.Zu):
        num = v * T
        assert num.denominator == 1
        out.append(int(num))
    return tuple(out)


def _congruent_range(lo_num: int, hi_num: int, den: int, target: int) -> tuple[int, int]:
    """[lo, hi] of integers k with lo_num <= k*den <= hi_num, k == target mod 3."""
    lo = -((-lo_num) // den)
    hi = hi_num // den
    lo += (target - lo) % 3
    return lo, hi


def _slice_params(sl: FusionSlice, data: SurgeryData) -> np.ndarray:
    p, q, r = data.p, data.q, data.r
    pq = p * q
    L = 3 * pq * r
    xl, xu, yl, yu, zl, zu = _int_bounds(sl, p, q)
    target = (data.c_mod3 * sl.ell) % 3
    k1lo, k1hi = _congruent_range(xl * r, xu * r, pq, target)
    k2lo, k2hi = _congruent_range(yl * r, yu * r, pq, target)

    su2_on = 0
    ga_num = gb_num = 0
    if sl.ell == 0 and sl.kind is SliceKind.TYPE_II \
            and sl.a.k2 == 0 and sl.b.k2 == 0:
        su2_on = 1
        ga_num = 2 * sl.a.k3 * q * r  # rotation number of a, times L
        gb_num = 2 * sl.b.k3 * p * r

    params = np.array(
        [pq, 3 * r, su2_on, ga_num, gb_num, 2 * L,
         xl * r, xu * r, yl * r, yu * r, zl * r, zu * r,
         k1lo, k1hi, k2lo, k2hi, sl.repeated_in_ab],
        dtype=np.int64,
    )
    return params


def _tally_from_kernel(res: np.ndarray) -> ComponentTally:
    return ComponentTally(
        n_Ia=int(res[0]), n_IIa=int(res[1]), n_IIb=int(res[2]),
        n_excluded=int(res[3]), n_central_in_polytope=int(res[4]),
        n_scanned=int(res[8]),
    )


def enumerate_slice(sl: FusionSlice, data: SurgeryData,
                    backend: str | None = None) -> ComponentTally:
    """Count and classify every lattice point of one slice.

    Raises DiagnosticTightError if an all-regular point sits exactly on a
    constraint (such a point has no justified weight).
    """
    res = kernels.classify_slice(_slice_params(sl, data), backend=backend)
    if res[5]:
        raise DiagnosticTightError([(sl, int(res[6]), int(res[7]))])
    return _tally_from_kernel(res)


def _resolve_threads(threads: int | None) -> int:
    if threads is None:
        env = os.environ.get("CASSON3_THREADS", "").strip()
        threads = int(env) if env else 1
    return max(1, int(threads))


def tau_from_data(data: SurgeryData, threads: int | None = None,
                  backend: str | None = None) -> CassonResult:
    """Full census for an explicit (possibly non-canonical) framing."""
    if 8 * 3 * data.p * data.q * data.r >= _MAX_SCALE:
        raise ValueError(f"p*q*r = {data.p * data.q * data.r} too large for int64 kernels")
    backend_name = backend or kernels.active_backend()
    slices = list(slices_for(data))
    params = [_slice_params(sl, data) for sl in slices]

    threads = _resolve_threads(threads)
    run = partial(kernels.classify_slice, backend=backend_name)
    if threads == 1 or len(slices) < 2:
        results = [run(pr) for pr in params]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, params))

    tight = [(sl, int(res[6]), int(res[7])) for sl, res in zip(slices, results) if res[5]]
    if tight:
        raise DiagnosticTightError(tight)

    tallies = [_tally_from_kernel(res) for res in results]
    totals = {
        "Ia": sum(t.n_Ia for t in tallies),
        "IIa": sum(t.n_IIa for t in tallies),
        "IIb": sum(t.n_IIb for t in tallies),
        "excluded": sum(t.n_excluded for t in tallies),
    }
    n_I = sum(1 for sl in slices if sl.kind is SliceKind.TYPE_I)
    n_II = len(slices) - n_I
    return CassonResult(
        surgery=data,
        tau=totals["Ia"] + 2 * totals["IIa"] + 2 * totals["IIb"],
        totals=totals,
        slices=tuple(zip(slices, tallies)),
        census=(n_I, n_II),
        backend=backend_name,
        n_scanned=sum(t.n_scanned for t in tallies),
    )


def tau(p: int, q: int, r: int, threads: int | None = None,
        backend: str | None = None) -> CassonResult:
    """The integer valued SU(3) Casson invariant of Sigma(p,q,r)."""
    data = normalize_mod3(make_surgery_data(p, q, r))
    return tau_from_data(data, threads=threads, backend=backend)


def component_census(p: int, q: int, r: int) -> tuple[int, int]:
    """(N_I, N_II): slice counts by kind, independent of r."""
    data = normalize_mod3(make_surgery_data(p, q, r))
    n_I = n_II = 0
    for sl in slices_for(data):
        if sl.kind is SliceKind.TYPE_I:
            n_I += 1
        else:
            n_II += 1
    return n_I, n_II


def census_closed_form(p: int, q: int) -> tuple[int, int]:
    """Closed-form (N_I, N_II) for the slice census."""
    n_I = (p - 1) * (q - 1) * (p + q - 4) // 2
    n_II = (p - 1) * (p - 2) * (q - 1) * (q - 2) // 12
    return n_I, n_II


# ---------------------------------------------------------------------------
# Exhaustive search for tight all-regular lattice points.
#
# Such a point must have c1 on {Xl, Xu}, c2 on {Yl, Yu}, or c3 on {Zl, Zu};
# a bound v/(3pq) carries lattice values k/(3r) only when pq | v (gcd(pq, r)
# = 1), which screens out almost every slice independently of r.  The few
# surviving bound lines are scanned point by point.  This reduction is
# exact: it visits every lattice point any full enumeration could flag.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TightHit:
    p: int
    q: int
    r: int
    ell_exponent: int  # common residue of the a/b coordinates mod 3
    a: AlcovePoint
    b: AlcovePoint
    k: tuple[int, int, int]


def _scan_line(bounds, pq, r, target, fixed: str, value_num: int):
    """Congruent lattice points on one tight bound line, all-regular, in
    the polygon.  Yields (k1, k2, k3)."""
    xl, xu, yl, yu, zl, zu = bounds
    D = 3 * r
    kf = (value_num // pq) * r
    if fixed == "c1":
        k1 = kf
        if k1 % 3 != target:
            return
        lo, hi = _congruent_range(yl * r, yu * r, pq, target)
        for k2 in range(lo, hi + 1, 3):
            yield (k1, k2, -k1 - k2)
    elif fixed == "c2":
        k2 = kf
        if k2 % 3 != target:
            return
        lo, hi = _congruent_range(xl * r, xu * r, pq, target)
        for k1 in range(lo, hi + 1, 3):
            yield (k1, k2, -k1 - k2)
    else:
        k3 = kf
        if k3 % 3 != target:
            return
        lo, hi = _congruent_range(xl * r, xu * r, pq, target)
        for k1 in range(lo, hi + 1, 3):
            yield (k1, -k1 - k3, k3)


def _is_tight_regular(bounds, pq, r, k) -> bool:
    xl, xu, yl, yu, zl, zu = bounds
    k1, k2, k3 = k
    D = 3 * r
    if not (xl * r <= k1 * pq <= xu * r and yl * r <= k2 * pq <= yu * r
            and zl * r <= k3 * pq <= zu * r):
        return False
    if not (k1 <= k2 <= k3 <= k1 + D):
        return False
    hits = (k1 == k2) + (k2 == k3) + (k3 == k1 + D)
    return hits == 0


def find_tight_points(p: int, q: int, r: int) -> list[TightHit]:
    """All tight all-regular lattice points of the (p, q, r) census."""
    data = normalize_mod3(make_surgery_data(p, q, r))
    pq = p * q
    out = []
    for sl in slices_for(data):
        if sl.kind is not SliceKind.TYPE_II:
            continue  # a tight point on a hexagon slice is weighted Ia anyway
        bounds = _int_bounds(sl, p, q)
        target = (data.c_mod3 * sl.ell) % 3
        out.extend(_tight_hits_for_slice(sl, bounds, pq, r, target, p, q))
    return out


def _tight_hits_for_slice(sl, bounds, pq, r, target, p, q):
    xl, xu, yl, yu, zl, zu = bounds
    hits = []
    seen = set()
    for fixed, v in (("c1", xl), ("c1", xu), ("c2", yl),
                     ("c2", yu), ("c3", zl), ("c3", zu)):
        if v % pq != 0:
            continue
        for k in _scan_line(bounds, pq, r, target, fixed, v):
            if k in seen:
                continue
            seen.add(k)
            if _is_tight_regular(bounds, pq, r, k):
                hits.append(TightHit(p=p, q=q, r=r,
                                     ell_exponent=sl.a.k1 % 3,
                                     a=sl.a, b=sl.b, k=k))
    return hits


def tight_sweep(max_entry: int, progress=None) -> list[TightHit]:
    """Search every pairwise-coprime triple with entries <= max_entry.

    Organized by the pair (p, q): the slice geometry and the divisibility
    screen do not depend on r, and neither does the pairing between a
    slice's coordinate residue e and the congruence residue of c (for
    3 | pq the normalized framing gives  t == -e*(p+q) mod 3  for every
    member of the family; for 3 coprime to pq all of t = 0, 1, 2 occur).
    Swapping a and b is a symmetry of the constraints, so unordered pairs
    suffice.  Returns every hit found (expected: none).
    """
    hits = []
    for pp in range(2, max_entry + 1):
        for qq in range(pp + 1, max_entry + 1):
            if math.gcd(pp, qq) != 1:
                continue
            hits.extend(_tight_sweep_pair(pp, qq, max_entry))
            if progress is not None:
                progress(pp, qq)
    return hits


def _tight_sweep_pair(p: int, q: int, max_entry: int) -> list[TightHit]:
    pq = p * q
    if pq % 3 != 0:
        exponents = (0,)
        targets = {0: (0, 1, 2)}
    else:
        exponents = (0, 1, 2)
        targets = {e: ((-e * (p + q)) % 3,) for e in exponents}

    # Screen slices once per pair: keep type II slices with a bound
    # numerator divisible by pq, together with that bound's axis.
    suspicious = []
    for e in exponents:
        # root_classes(n, e, 1) enumerates the classes with coordinate
        # residue 1*e = e; only regular ones can build a type II slice.
        a_set = [a for a in root_classes(p, e, 1)
                 if classify_multiplicity(a) is Multiplicity.DISTINCT]
        b_set = [b for b in root_classes(q, e, 1)
                 if classify_multiplicity(b) is Multiplicity.DISTINCT]
        if not a_set or not b_set:
            continue
        A = np.array([(a.k1, a.k2, a.k3) for a in a_set], dtype=np.int64)
        B = np.array([(b.k1, b.k2, b.k3) for b in b_set], dtype=np.int64)
        T = 3 * pq
        Aq = A * q  # numerators over 3pq
        Bp = B * p
        a1, a2, a3 = Aq[:, 0][:, None], Aq[:, 1][:, None], Aq[:, 2][:, None]
        b1, b2, b3 = Bp[:, 0][None, :], Bp[:, 1][None, :], Bp[:, 2][None, :]
        xl = np.maximum(np.maximum(-T - a1 - b2, -T - a2 - b1), -a3 - b3)
        xu = np.minimum(np.minimum(-a1 - b3, -a3 - b1), -a2 - b2)
        yl = np.maximum(np.maximum(-T - a1 - b1, -a2 - b3), -a3 - b2)
        yu = np.minimum(np.minimum(-a1 - b2, -a2 - b1), T - a3 - b3)
        zl = np.maximum(np.maximum(-a1 - b3, -a3 - b1), -a2 - b2)
        zu = np.minimum(np.minimum(-a1 - b1, T - a2 - b3), T - a3 - b2)
        mask = ((xl % pq == 0) | (xu % pq == 0) | (yl % pq == 0)
                | (yu % pq == 0) | (zl % pq == 0) | (zu % pq == 0))
        for i, j in np.argwhere(mask):
            suspicious.append((e, a_set[int(i)], b_set[int(j)]))

    if not suspicious:
        return []

    hits = []
    admissible_r = [r for r in range(1, max_entry + 1)
                    if math.gcd(r, pq) == 1]
    for e, a, b in suspicious:
        sl = make_slice(a, b, ell=e)  # ell label only matters via targets
        bounds = _int_bounds(sl, p, q)
        for r in admissible_r:
            for t in targets[e]:
                hits.extend(
                    TightHit(p=p, q=q, r=r, ell_exponent=e, a=a, b=b, k=k)
                    for k in _iter_tight_regular(bounds, pq, r, t)
                )
    return hits


def _iter_tight_regular(bounds, pq, r, target):
    xl, xu, yl, yu, zl, zu = bounds
    seen = set()
    for fixed, v in (("c1", xl), ("c1", xu), ("c2", yl),
                     ("c2", yu), ("c3", zl), ("c3", zu)):
        if v % pq != 0:
            continue
        for k in _scan_line(bounds, pq, r, target, fixed, v):
            if k in seen:
                continue
            seen.add(k)
            if _is_tight_regular(bounds, pq, r, k):
                yield k


def collect_tight_by_full_enumeration(max_entry: int) -> list:
    """Brute-force cross-check of the sweep: run the full census for every
    pairwise-coprime triple (all three choices of which entry plays r) and
    collect any tight diagnostics."""
    found = []
    for u in range(1, max_entry + 1):
        for v in range(u + 1, max_entry + 1):
            if math.gcd(u, v) != 1:
                continue
            for w in range(v + 1, max_entry + 1):
                if math.gcd(u, w) != 1 or math.gcd(v, w) != 1:
                    continue
                for (p, q, r) in ((u, v, w), (u, w, v), (v, w, u)):
                    try:
                        tau(p, q, r)
                    except DiagnosticTightError as err:
                        found.append(((p, q, r), err.hits))
    return found
