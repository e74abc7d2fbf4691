"""Point counts over field extensions and closed-point censuses.

For every supported space the number N_m of points rational over the
m-th extension has a geometric closed form.  The number b_d of closed
points of residue degree d then follows by Moebius inversion of

    N_m = sum_{d | m} d * b_d.

Everything here is exact big-integer arithmetic; the census inversion
asserts integrality and non-negativity, so a wrong point count cannot
slip through silently.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, IntegralityError
from .spaces import P1Power, PrimePower, Product, ProjSpace, SpaceDescriptor

CACHE_DIR_ENV = "CYCLEZETA_CACHE_DIR"


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    if n < 1:
        raise DomainError("mobius is defined for positive integers")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1 if p == 2 else 2
    if n > 1:
        result = -result
    return result


def point_count(space: SpaceDescriptor, q: PrimePower, m: int) -> int:
    """Number of points of the space rational over the m-th extension of F_q."""
    if m < 1:
        raise DomainError("extension degree m must be >= 1")
    qm = q.q ** m
    if isinstance(space, ProjSpace):
        return (qm ** (space.n + 1) - 1) // (qm - 1)
    if isinstance(space, P1Power):
        return (qm + 1) ** space.n
    if isinstance(space, Product):
        return point_count(space.left, q, m) * point_count(space.right, q, m)
    raise DomainError(f"unsupported space {space!r}")


@dataclass(frozen=True)
class ClosedPointCensus:
    """Counts b_d of closed points of residue degree d = 1..dmax."""

    space: SpaceDescriptor
    q: PrimePower
    b: tuple[int, ...]

    @property
    def dmax(self) -> int:
        return len(self.b)

    def count(self, d: int) -> int:
        if not 1 <= d <= self.dmax:
            raise DomainError(f"degree {d} outside census range 1..{self.dmax}")
        return self.b[d - 1]


def closed_point_census(space: SpaceDescriptor, q: PrimePower, dmax: int) -> ClosedPointCensus:
    """Census of closed points of residue degree up to dmax, by inversion.

    Product spaces are inverted from the product point counts directly,
    never by convolving factor censuses.
    """
    if dmax < 1:
        raise DomainError("dmax must be >= 1")
    cached = _cache_load(space, q, dmax)
    if cached is not None:
        return ClosedPointCensus(space, q, cached)
    counts = {m: point_count(space, q, m) for m in range(1, dmax + 1)}
    b = []
    for d in range(1, dmax + 1):
        total = sum(mobius(d // e) * counts[e] for e in divisors(d))
        if total % d != 0:
            raise IntegralityError(
                f"census inversion non-integral at degree {d} for {space.label()}"
            )
        bd = total // d
        if bd < 0:
            raise IntegralityError(
                f"census inversion negative at degree {d} for {space.label()}"
            )
        b.append(bd)
    census = ClosedPointCensus(space, q, tuple(b))
    _cache_store(space, q, dmax, census.b)
    return census


def irreducible_count(q: PrimePower, d: int) -> int:
    """Number of monic irreducible polynomials of degree d over F_q."""
    if d < 1:
        raise DomainError("degree d must be >= 1")
    total = sum(mobius(e) * q.q ** (d // e) for e in divisors(d))
    if total % d != 0:
        raise IntegralityError(f"necklace count non-integral at degree {d}")
    return total // d


def _cache_path(space: SpaceDescriptor, q: PrimePower, dmax: int) -> str | None:
    root = os.environ.get(CACHE_DIR_ENV)
    if not root:
        return None
    token = space.label().replace("^", "e").replace("(", "").replace(")", "")
    return os.path.join(root, f"census_{token}_q{q.p}-{q.e}_d{dmax}.json")


def _cache_load(space, q, dmax):
    path = _cache_path(space, q, dmax)
    if path is None or not os.path.exists(path):
        return None
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return tuple(int(x) for x in data["b"])


def _cache_store(space, q, dmax, b):
    path = _cache_path(space, q, dmax)
    if path is None:
        return
    os.makedirs(os.path.dirname(path), exist_ok=True)
    payload = {"space": space.label(), "p": q.p, "e": q.e, "dmax": dmax,
               "b": [str(x) for x in b]}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh)
