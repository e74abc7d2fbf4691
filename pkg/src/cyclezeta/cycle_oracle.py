"""Brute-force enumeration of effective cycles at tiny scale.

This module is the ground truth: every closed-form count and every bound
elsewhere in the package is validated against the objects listed here.
Enumerators therefore never approximate; they either finish exactly or
raise ``SizeCapExceeded``.

Closed points are Frobenius orbits of points over the splitting field,
keyed by the lexicographically least orbit member with coordinates
encoded in the canonical field of the point's own residue degree, so
equal points always compare equal no matter how they were produced.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, SizeCapExceeded
from .exact_counts import MultiDegree, _check_multidegree
from .field_census import point_count
from .finite_fields import Fq, embedding, field
from .spaces import PrimePower, Product, SpaceDescriptor, multidegree_slots

ENUM_CAP = 10 ** 6
FIBER_DEGREE_CAP = 8

Point = tuple[tuple[int, ...], ...]  # one coordinate tuple per block


# ---------------------------------------------------------------------------
# points and Frobenius orbits
# ---------------------------------------------------------------------------

def _block_points(slot, F: Fq) -> list[tuple[int, ...]]:
    if slot == ("p1",):
        return [(0, 1)] + [(1, y) for y in range(F.order)]
    _, n = slot
    pts = []
    for lead in range(n + 1):
        for tail in itertools.product(range(F.order), repeat=n - lead):
            pts.append((0,) * lead + (1,) + tail)
    return pts


def _space_points(space: SpaceDescriptor, F: Fq):
    blocks = [_block_points(slot, F) for slot in multidegree_slots(space)]
    return itertools.product(*blocks)


def _frobenius_point(pt: Point, F: Fq, q: int) -> Point:
    # coordinates are normalized with leading 1, which Frobenius fixes
    return tuple(tuple(F.pow(c, q) for c in block) for block in pt)


def _orbit(pt: Point, F: Fq, q: int) -> list[Point]:
    orbit = [pt]
    x = _frobenius_point(pt, F, q)
    while x != pt:
        orbit.append(x)
        x = _frobenius_point(x, F, q)
    return orbit


@dataclass(frozen=True)
class ClosedPoint:
    """A Frobenius orbit: orbit size = residue degree over F_q."""

    space: SpaceDescriptor
    q: PrimePower
    degree: int
    orbit_key: Point

    def sort_key(self):
        return (self.degree, self.orbit_key)


@lru_cache(maxsize=None)
def closed_points(space: SpaceDescriptor, q: PrimePower, d: int) -> tuple[ClosedPoint, ...]:
    """All closed points of residue degree exactly d, canonically sorted."""
    if d < 1:
        raise DomainError("residue degree must be >= 1")
    if point_count(space, q, d) > ENUM_CAP:
        raise SizeCapExceeded(
            f"{space.label()} has more than {ENUM_CAP} points over extension {d}"
        )
    F = field(q.p, q.e * d)
    seen: set[Point] = set()
    found = []
    for pt in _space_points(space, F):
        if pt in seen:
            continue
        orbit = _orbit(pt, F, q.q)
        seen.update(orbit)
        if len(orbit) == d:
            found.append(ClosedPoint(space, q, d, min(orbit)))
    found.sort(key=lambda cp: cp.orbit_key)
    return tuple(found)


# ---------------------------------------------------------------------------
# zero-cycles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ZeroCycle:
    """Effective 0-cycle: closed points with positive multiplicities."""

    space: SpaceDescriptor
    q: PrimePower
    terms: tuple[tuple[ClosedPoint, int], ...]

    @staticmethod
    def make(space, q, terms) -> "ZeroCycle":
        items = [(pt, int(m)) for pt, m in
                 (terms.items() if isinstance(terms, dict) else terms) if m]
        if any(m < 0 for _, m in items):
            raise DomainError("multiplicities must be >= 1")
        items.sort(key=lambda t: t[0].sort_key())
        return ZeroCycle(space, q, tuple(items))

    @property
    def degree(self) -> int:
        return sum(m * pt.degree for pt, m in self.terms)

    def alpha(self) -> float:
        """sum_i sqrt(a_i * deg(x_i)), the fiber-bound weight of the cycle."""
        return sum(math.sqrt(m * pt.degree) for pt, m in self.terms)

    def support_size(self) -> int:
        return len(self.terms)

    def sort_key(self):
        return tuple((pt.degree, pt.orbit_key, m) for pt, m in self.terms)


def enum_zero_cycles(space: SpaceDescriptor, q: PrimePower, k: int) -> list[ZeroCycle]:
    """Every effective 0-cycle of degree exactly k, duplicate-free, sorted."""
    if k < 0:
        raise DomainError("degree k must be >= 0")
    if k == 0:
        return [ZeroCycle.make(space, q, [])]
    pts: list[ClosedPoint] = []
    for d in range(1, k + 1):
        pts.extend(closed_points(space, q, d))
    # sorted by degree, so the scan below can stop early; recursion depth
    # is at most k because every level consumes at least one unit of degree
    out: list[ZeroCycle] = []

    def recurse(start: int, remaining: int, chosen):
        if remaining == 0:
            out.append(ZeroCycle.make(space, q, list(chosen)))
            if len(out) > ENUM_CAP:
                raise SizeCapExceeded(f"more than {ENUM_CAP} zero-cycles")
            return
        for i in range(start, len(pts)):
            d = pts[i].degree
            if d > remaining:
                break
            for mult in range(1, remaining // d + 1):
                chosen.append((pts[i], mult))
                recurse(i + 1, remaining - mult * d, chosen)
                chosen.pop()

    recurse(0, k, [])
    out.sort(key=ZeroCycle.sort_key)
    return out


# ---------------------------------------------------------------------------
# products of residue fields, pushforward, fibers
# ---------------------------------------------------------------------------

def residue_product_points(a: int, b: int) -> list[tuple[int, int]]:
    """Splitting of the tensor product of residue extensions of degrees a, b.

    The product of the degree-a and degree-b extensions of a finite field
    splits into gcd(a, b) factors, each of degree lcm(a, b); the return
    value is [(number of factors, common degree)].
    """
    if a < 1 or b < 1:
        raise DomainError("degrees must be >= 1")
    return [(math.gcd(a, b), math.lcm(a, b))]


def _project_closed_point(pt: ClosedPoint, which: str) -> tuple[ClosedPoint, int]:
    """Project a closed point of a product to one factor.

    Returns (image point, relative residue degree over the image).
    """
    space = pt.space
    if not isinstance(space, Product):
        raise DomainError("projection needs a point on a Product space")
    factor = space.left if which == "first" else space.right
    n_left = len(multidegree_slots(space.left))
    coords = pt.orbit_key[:n_left] if which == "first" else pt.orbit_key[n_left:]
    q = pt.q
    F_big = field(q.p, q.e * pt.degree)

    # residue degree of the image = its Frobenius orbit size
    sub_orbit = _orbit(coords, F_big, q.q)
    s = len(sub_orbit)
    if pt.degree % s != 0:
        raise AssertionError("orbit size must divide the point degree")
    F_small = field(q.p, q.e * s)
    _, down = embedding(q.p, q.e * s, q.e * pt.degree)
    small_coords = tuple(tuple(down[c] for c in block) for block in coords)
    key = min(_orbit(small_coords, F_small, q.q))
    return ClosedPoint(factor, q, s, key), pt.degree // s


def pushforward_zero_cycle(z: ZeroCycle, which: str = "first") -> ZeroCycle:
    """Push a 0-cycle on a product down to a factor.

    Each point contributes its multiplicity weighted by the relative
    residue degree over its image, so the total degree is preserved.
    """
    if which not in ("first", "second"):
        raise DomainError("which must be 'first' or 'second'")
    if not isinstance(z.space, Product):
        raise DomainError("pushforward needs a cycle on a Product space")
    factor = z.space.left if which == "first" else z.space.right
    acc: dict[ClosedPoint, int] = {}
    for pt, mult in z.terms:
        image, rel = _project_closed_point(pt, which)
        acc[image] = acc.get(image, 0) + mult * rel
    return ZeroCycle.make(factor, z.q, acc)


def fiber_count(x: ZeroCycle, y: ZeroCycle, q: PrimePower) -> int:
    """Exact number of 0-cycles on X x Y pushing forward to x and y.

    Works over the abstract splitting data: above the pair (x_i, y_j)
    sit gcd(d_i, e_j) closed points of degree lcm(d_i, e_j), and a cycle
    is a choice of multiplicities matching both marginals.  Exhaustive
    with memoization; degrees are capped.
    """
    if x.q != q or y.q != q:
        raise DomainError("cycles must live over the same base field")
    if x.degree > FIBER_DEGREE_CAP or y.degree > FIBER_DEGREE_CAP:
        raise SizeCapExceeded(f"fiber_count caps pushforward degrees at {FIBER_DEGREE_CAP}")
    if (x.degree == 0) != (y.degree == 0):
        return 0
    xs = [(pt.degree, m) for pt, m in x.terms]
    ys = [(pt.degree, m) for pt, m in y.terms]
    slots = []  # (index in xs, index in ys, rel deg over x_i, rel deg over y_j)
    for i, (dx, _) in enumerate(xs):
        for j, (dy, _) in enumerate(ys):
            (count, deg), = residue_product_points(dx, dy)
            slots.extend([(i, j, deg // dx, deg // dy)] * count)

    @lru_cache(maxsize=None)
    def count_from(idx: int, rem_x: tuple, rem_y: tuple) -> int:
        if idx == len(slots):
            return 1 if not any(rem_x) and not any(rem_y) else 0
        i, j, rx, ry = slots[idx]
        total = 0
        cmax = min(rem_x[i] // rx, rem_y[j] // ry)
        for c in range(cmax + 1):
            nx = rem_x[:i] + (rem_x[i] - c * rx,) + rem_x[i + 1:]
            ny = rem_y[:j] + (rem_y[j] - c * ry,) + rem_y[j + 1:]
            total += count_from(idx + 1, nx, ny)
        return total

    return count_from(
        0, tuple(m for _, m in xs), tuple(m for _, m in ys)
    )


# ---------------------------------------------------------------------------
# divisors as canonical forms
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def monomial_exponents(space: SpaceDescriptor, e: MultiDegree) -> tuple[tuple, ...]:
    """Monomial basis of the multidegree-e forms, in canonical order.

    Each monomial is a tuple with one entry per block: the X-exponent
    a in 0..e_i for a P^1 block (the Y-exponent is e_i - a), or an
    (n+1)-tuple of exponents summing to the degree for a P^n block.
    """
    slots = multidegree_slots(space)
    if len(e) != len(slots):
        raise DomainError(
            f"multidegree length {len(e)} != {len(slots)} slots of {space.label()}"
        )
    per_block = []
    for slot, deg in zip(slots, e):
        if slot == ("p1",):
            per_block.append([(a,) for a in range(deg + 1)])
        else:
            _, n = slot
            per_block.append(
                [mono for mono in itertools.product(range(deg + 1), repeat=n + 1)
                 if sum(mono) == deg]
            )
    return tuple(itertools.product(*per_block))


@dataclass(frozen=True)
class FormClass:
    """A nonzero form modulo scalars; first nonzero coefficient is 1.

    ``coefficients[i]`` is the field element (encoded as an int) attached
    to ``monomial_exponents(space, multidegree)[i]``.
    """

    NORMALIZATION = "leading-one"

    space: SpaceDescriptor
    q: PrimePower
    multidegree: MultiDegree
    coefficients: tuple[int, ...]

    def support(self):
        monos = monomial_exponents(self.space, self.multidegree)
        return tuple(
            (mono, c) for mono, c in zip(monos, self.coefficients) if c
        )

    def __str__(self):
        parts = []
        for mono, c in self.support():
            factors = []
            for b, (slot, deg) in enumerate(
                zip(multidegree_slots(self.space), self.multidegree)
            ):
                if slot == ("p1",):
                    a = mono[b][0]
                    if a:
                        factors.append(f"X{b+1}" + (f"^{a}" if a > 1 else ""))
                    if deg - a:
                        factors.append(f"Y{b+1}" + (f"^{deg-a}" if deg - a > 1 else ""))
                else:
                    for v, a in enumerate(mono[b]):
                        if a:
                            factors.append(f"X{v}" + (f"^{a}" if a > 1 else ""))
            term = "*".join(factors) if factors else "1"
            parts.append(term if c == 1 else f"[{c}]*{term}")
        return " + ".join(parts) if parts else "0"


def enum_divisor_count_by_degree(space: SpaceDescriptor, q: PrimePower, k: int) -> int:
    """Degree-k divisor count re-derived purely by enumeration.

    Uses the same polarization-degree conventions as the closed forms:
    form degree on projective space, (n-1)! times the multidegree sum on
    a product of projective lines.
    """
    from .exact_counts import _compositions
    from .spaces import ProjSpace, as_p1_power

    if isinstance(space, ProjSpace) and space.n >= 1:
        return len(enum_divisors(space, q, (k,)))
    n = as_p1_power(space)
    if n is not None and n >= 1:
        step = math.factorial(n - 1)
        if k % step != 0:
            return 0
        return sum(
            len(enum_divisors(space, q, e)) for e in _compositions(k // step, n)
        )
    raise DomainError(f"no divisor enumeration on {space.label()}")


def _canonical_vectors(total_monomials: int, q: int, lo: int, hi: int):
    # vectors in [lo, hi) of the base-q integer encoding whose first
    # nonzero digit (in monomial order, least significant first) is 1
    for code in range(max(lo, 1), hi):
        v = code
        digits = []
        for _ in range(total_monomials):
            v, r = divmod(v, q)
            digits.append(r)
        for d in digits:
            if d == 0:
                continue
            if d == 1:
                yield tuple(digits)
            break


def enum_divisors(
    space: SpaceDescriptor, q: PrimePower, e, threads: int = 1
) -> list[FormClass]:
    """Every effective divisor of exactly the given multidegree, once each.

    Divisors correspond to nonzero forms modulo scalars; the canonical
    representative scales the first nonzero coefficient to 1.  The outer
    coefficient loop splits into chunks for worker threads; the merged
    output is independent of the thread count.
    """
    e = _check_multidegree(e)
    monos = monomial_exponents(space, e)
    m = len(monos)
    total = q.q ** m
    if total > ENUM_CAP:
        raise SizeCapExceeded(
            f"coefficient space of size {q.q}^{m} exceeds cap {ENUM_CAP}"
        )

    def chunk(bounds):
        lo, hi = bounds
        return [
            FormClass(space, q, e, vec)
            for vec in _canonical_vectors(m, q.q, lo, hi)
        ]

    if threads <= 1:
        forms = chunk((1, total))
    else:
        step = max(1, (total + threads - 1) // threads)
        ranges = [(lo, min(lo + step, total)) for lo in range(1, total, step)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(chunk, ranges))
        forms = [f for part in parts for f in part]
    forms.sort(key=lambda f: f.coefficients)
    return forms
