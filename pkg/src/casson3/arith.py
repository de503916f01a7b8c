"""Surgery descriptions of Brieskorn spheres and their framing arithmetic.

A Brieskorn homology sphere Sigma(p,q,r) (p, q, r pairwise coprime) has a
surgery presentation whose framing is encoded by a pair of integers (a, c)
satisfying

    a*r*(p+q) + c*p*q = 1.

The manifold does not depend on which solution (a, c) is picked; all other
valid pairs are a' = a + p*q*k, c' = c - k*(p+q)*r.  Downstream lattice
enumeration only consumes (a mod 3, c mod 3), and for surgery families
r = p*q*n + m it is convenient to pin those residues to values that do not
depend on n.  Everything here is exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class NonPositiveError(ValueError):
    """One of the Seifert multiplicities p, q, r is < 1."""


class NotCoprimeError(ValueError):
    """Two of the Seifert multiplicities share a factor > 1."""


@dataclass(frozen=True)
class SurgeryData:
    """Seifert multiplicities plus a framing pair (a, c).

    Invariant: a*r*(p+q) + c*p*q == 1 exactly.  a_mod3/c_mod3 cache the
    residues used by the congruence filters of the lattice count.
    """

    p: int
    q: int
    r: int
    a: int
    c: int

    def __post_init__(self):
        _check_multiplicities(self.p, self.q, self.r)
        if self.a * self.r * (self.p + self.q) + self.c * self.p * self.q != 1:
            raise ValueError(
                f"invalid framing: {self.a}*{self.r}*({self.p}+{self.q}) "
                f"+ {self.c}*{self.p}*{self.q} != 1"
            )

    @property
    def a_mod3(self) -> int:
        return self.a % 3

    @property
    def c_mod3(self) -> int:
        return self.c % 3

    def with_framing(self, k: int) -> "SurgeryData":
        """The framing pair shifted by k: a + pq*k, c - k*(p+q)*r."""
        return SurgeryData(
            self.p,
            self.q,
            self.r,
            self.a + self.p * self.q * k,
            self.c - k * (self.p + self.q) * self.r,
        )


def _check_multiplicities(p: int, q: int, r: int) -> None:
    for v in (p, q, r):
        if not isinstance(v, int) or v < 1:
            raise NonPositiveError(f"multiplicities must be positive integers, got {(p, q, r)}")
    for u, v in ((p, q), (p, r), (q, r)):
        if math.gcd(u, v) != 1:
            raise NotCoprimeError(f"gcd({u}, {v}) = {math.gcd(u, v)} != 1")


def make_surgery_data(p: int, q: int, r: int) -> SurgeryData:
    """Canonical surgery data for Sigma(p,q,r).

    Solves a*r*(p+q) + c*p*q = 1 by the extended Euclidean algorithm and
    picks the representative with the smallest nonnegative a (c is then
    forced), so results are deterministic across platforms.
    """
    _check_multiplicities(p, q, r)
    u = r * (p + q)
    v = p * q
    g, a0, c0 = _extended_gcd(u, v)
    assert g == 1  # guaranteed by pairwise coprimality
    a = a0 % v  # smallest nonnegative a among a0 + v*k
    c = (1 - a * u) // v
    return SurgeryData(p, q, r, a, c)


def _extended_gcd(u: int, v: int) -> tuple[int, int, int]:
    """(g, x, y) with x*u + y*v = g = gcd(u, v)."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while v:
        k, rem = divmod(u, v)
        u, v = v, rem
        x0, x1 = x1, x0 - k * x1
        y0, y1 = y1, y0 - k * y1
    return u, x0, y0


def normalize_mod3(data: SurgeryData, m: int | None = None) -> SurgeryData:
    """Re-pick the framing pair so its mod-3 residues are family-uniform.

    For r = p*q*n + m the substitution a -> a + p*q*k, c -> c - k*(p+q)*r
    can pin the residues to values independent of n:

    * 3 does not divide p*q:  a == 0 and c == p*q (mod 3);
    * 3 divides p*q:          a == (p+q)*m and c == -m (mod 3),

    where m defaults to r mod (p*q).  The framing identity is preserved
    exactly, and the map is idempotent.
    """
    p, q, r = data.p, data.q, data.r
    pq = p * q
    if m is None:
        m = r % pq
    elif r % pq != m % pq:
        raise ValueError(f"r = {r} is not congruent to m = {m} mod p*q = {pq}")

    if pq % 3 != 0:
        # Shift a to the multiple of 3; c == pq (mod 3) is then forced by
        # reducing the framing identity mod 3.
        k = (-data.a * pow(pq, -1, 3)) % 3
        out = data.with_framing(k)
        assert out.a % 3 == 0 and out.c % 3 == pq % 3
    else:
        # a == (p+q)*m (mod 3) already holds for every valid pair; shift c
        # to -m using that (p+q)*r is invertible mod 3.
        step = ((p + q) * r) % 3
        k = ((data.c + m) * pow(step, -1, 3)) % 3
        out = data.with_framing(k)
        assert out.a % 3 == ((p + q) * m) % 3 and out.c % 3 == (-m) % 3
    return out


def alternative_framings(data: SurgeryData, count: int = 3) -> list[SurgeryData]:
    """`count` distinct valid framing pairs (used by invariance tests)."""
    return [data.with_framing(k) for k in range(1, count + 1)]
