"""Heights of projective points over function fields, with exact censuses.

Over the rational function field in t with finite constant field, the
height of a point with coprime polynomial coordinates is simply the
maximal coordinate degree, and the points of bounded height form an
exactly enumerable finite set.

Over the rational function field in z_1..z_d with integer coefficients
(standard Fubini-Study polarization), the height of a normalized point
(content 1, coordinate gcd 1) keeps only the infinity-divisor term and
the archimedean integral:

    h(x) = sum_j max_i deg_{z_j}(coord_i)
           + integral of log max_i |coord_i| against the FS volume,

all finite places dropping out because no prime divisor divides every
coordinate.  The membership set for the lower-bound census is a box of
integer polynomials whose members all satisfy h((1:f)) <= h.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, SizeCapExceeded
from .finite_fields import Fq, field
from .multipoly import MultiPoly
from .quadrature import QuadratureConfig, batched_log_integrals, integrate_log_max
from .spaces import PrimePower

FF_CENSUS_CAP = 10 ** 7


# ---------------------------------------------------------------------------
# polynomials over F_q in one variable t (coefficient tuples, little-endian)
# ---------------------------------------------------------------------------

def _fq_trim(c) -> tuple[int, ...]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _fq_deg(c) -> int:
    return len(c) - 1  # -1 for the zero polynomial


def _fq_divmod(a, b, F: Fq):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    inv_lead = F.inv(b[-1])
    quot = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        if a[-1] == 0:
            a.pop()
            continue
        shift = len(a) - len(b)
        c = F.mul(a[-1], inv_lead)
        quot[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] = F.sub(a[shift + i], F.mul(c, bi))
        a.pop()
    return _fq_trim(quot), _fq_trim(a)


def _fq_gcd(a, b, F: Fq):
    a, b = _fq_trim(a), _fq_trim(b)
    while b:
        _, r = _fq_divmod(a, b, F)
        a, b = b, r
    return a


def _fq_scale(a, c, F: Fq):
    return _fq_trim([F.mul(x, c) for x in a])


@dataclass(frozen=True)
class FunctionFieldPoint:
    """Projective point with polynomial coordinates over F_q, normalized.

    Normalization: divide out the coordinate gcd, then scale by a constant
    so the first coordinate of least degree among the nonzero ones is
    monic.  Representatives are unique, so censuses can count tuples.
    """

    q: PrimePower
    coords: tuple[tuple[int, ...], ...]

    @staticmethod
    def make(q: PrimePower, coords) -> "FunctionFieldPoint":
        F = field(q.p, q.e)
        coords = [_fq_trim(c) for c in coords]
        if all(not c for c in coords):
            raise DomainError("projective coordinates cannot all vanish")
        g = ()
        for c in coords:
            if c:
                g = _fq_gcd(g, c, F) if g else c
        if _fq_deg(g) > 0:
            coords = [
                _fq_divmod(c, g, F)[0] if c else () for c in coords
            ]
        dmin = min(_fq_deg(c) for c in coords if c)
        lead = next(c[-1] for c in coords if c and _fq_deg(c) == dmin)
        inv = F.inv(lead)
        coords = [_fq_scale(c, inv, F) for c in coords]
        return FunctionFieldPoint(q, tuple(coords))

    @property
    def n(self) -> int:
        return len(self.coords) - 1


def height_ff(x: FunctionFieldPoint) -> int:
    """Height of a normalized point: the maximal coordinate degree."""
    return max(_fq_deg(c) for c in x.coords if c)


def iter_ff_points(q: PrimePower, n: int, h: int):
    """Yield every point of projective n-space over F_q(t) of height <= h.

    Exhaustive over coordinate tuples of degree <= h: keeps exactly the
    coprime tuples in canonical normalized form, so each point appears
    once.
    """
    if n < 1:
        raise DomainError("need projective dimension n >= 1")
    if h < 0:
        raise DomainError("height bound must be >= 0")
    total = q.q ** ((n + 1) * (h + 1))
    if total > FF_CENSUS_CAP:
        raise SizeCapExceeded(f"{total} coordinate tuples exceed cap {FF_CENSUS_CAP}")
    F = field(q.p, q.e)
    polys = [
        _fq_trim(c) for c in itertools.product(range(q.q), repeat=h + 1)
    ]
    for coords in itertools.product(polys, repeat=n + 1):
        nonzero = [c for c in coords if c]
        if not nonzero:
            continue
        g = nonzero[0]
        for c in nonzero[1:]:
            g = _fq_gcd(g, c, F)
            if _fq_deg(g) == 0:
                break
        if _fq_deg(g) > 0:
            continue
        dmin = min(_fq_deg(c) for c in nonzero)
        lead = next(c[-1] for c in coords if c and _fq_deg(c) == dmin)
        if lead == 1:
            yield FunctionFieldPoint(q, coords)


def count_ff_points(q: PrimePower, n: int, h: int) -> int:
    """Exact number of points of projective n-space over F_q(t) of height <= h."""
    return sum(1 for _ in iter_ff_points(q, n, h))


# ---------------------------------------------------------------------------
# heights over the rational function field in z_1..z_d over the integers
# ---------------------------------------------------------------------------

def _int_content(values) -> int:
    g = 0
    for v in values:
        g = math.gcd(g, abs(int(v)))
    return g


def _univ_poly_gcd(polys: list[MultiPoly]) -> MultiPoly:
    """Primitive gcd of univariate integer polynomials (exact, Euclid over Q)."""

    def to_list(f):
        d = f.deg(0)
        return [Fraction(f.coeffs.get((i,), 0)) for i in range(d + 1)]

    def trim(c):
        while c and c[-1] == 0:
            c.pop()
        return c

    def mod(a, b):
        a = a[:]
        while len(a) >= len(b) and a:
            if a[-1] == 0:
                a.pop()
                continue
            f = a[-1] / b[-1]
            shift = len(a) - len(b)
            for i in range(len(b)):
                a[shift + i] -= f * b[i]
            a.pop()
        return trim(a)

    acc = None
    for f in polys:
        if f.is_zero:
            continue
        cur = trim(to_list(f))
        acc = cur if acc is None else acc
        while cur:
            acc, cur = cur, mod(acc, cur)
    if acc is None:
        raise DomainError("all coordinates vanish")
    denom = math.lcm(*[c.denominator for c in acc])
    ints = [int(c * denom) for c in acc]
    content = _int_content(ints)
    return MultiPoly(1, {(i,): c // content for i, c in enumerate(ints)})


def _exact_div(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    # univariate exact division (g | f by construction)
    fd, gd = f.deg(0), g.deg(0)
    fc = [Fraction(f.coeffs.get((i,), 0)) for i in range(fd + 1)]
    gc = [Fraction(g.coeffs.get((i,), 0)) for i in range(gd + 1)]
    out = [Fraction(0)] * (fd - gd + 1)
    for i in range(fd - gd, -1, -1):
        c = fc[i + gd] / gc[gd]
        out[i] = c
        for j in range(gd + 1):
            fc[i + j] -= c * gc[j]
    if any(fc):
        raise DomainError("inexact polynomial division")
    if any(c.denominator != 1 for c in out):
        raise DomainError("quotient not integral")
    return MultiPoly(1, {(i,): int(c) for i, c in enumerate(out)})


@dataclass(frozen=True)
class RationalFunctionPoint:
    """Projective point with integer polynomial coordinates in z_1..z_d.

    Normalized: overall integer content 1, no common polynomial factor
    (removed exactly in one variable; for d >= 2 the caller must supply
    coprime coordinates), and the first nonzero coefficient positive.
    """

    d: int
    coords: tuple[MultiPoly, ...]

    @staticmethod
    def make(d: int, coords) -> "RationalFunctionPoint":
        coords = list(coords)
        if d < 1:
            raise DomainError("need at least one variable")
        if any(f.nvars != d for f in coords):
            raise DomainError(f"coordinates must live in {d} variables")
        if all(f.is_zero for f in coords):
            raise DomainError("projective coordinates cannot all vanish")
        if d == 1:
            g = _univ_poly_gcd([f for f in coords if not f.is_zero])
            if g.deg(0) > 0:
                coords = [
                    f if f.is_zero else _exact_div(f, g) for f in coords
                ]
        content = _int_content(
            [c for f in coords for c in f.coeffs.values()]
        )
        if content > 1:
            coords = [
                MultiPoly(d, {e: c // content for e, c in f.coeffs.items()})
                for f in coords
            ]
        lead = next(
            f.coeffs[min(f.coeffs)] for f in coords if not f.is_zero
        )
        if lead < 0:
            coords = [-f for f in coords]
        return RationalFunctionPoint(d, tuple(coords))


def height_nv(x: RationalFunctionPoint, cfg: QuadratureConfig) -> float:
    """Naive height: infinity-degree term plus the Fubini-Study integral.

    Quadrature-backed, so the variable count is capped: tensor grids up
    to d = 2, Monte Carlo up to d = 3.
    """
    if x.d > 3 or (x.d > 2 and cfg.scheme == "tensor_gauss"):
        raise DomainError(
            "heights support d <= 2 on tensor grids, d <= 3 with monte_carlo"
        )
    degree_term = sum(
        max(f.deg(j) for f in x.coords if not f.is_zero)
        for j in range(x.d)
    )
    return degree_term + integrate_log_max(
        [f for f in x.coords if not f.is_zero], cfg
    )


@dataclass(frozen=True)
class ShSetCensus:
    """Exhaustive count of the bounded-height polynomial box.

    ``count`` is the number of integer polynomials in the box (all of
    which give distinct points (1 : f)); ``all_heights_ok`` records the
    numerical verification that every member has height <= h within the
    guard band; ``analytic_lower_bound`` is the closed-form lower bound the
    census is compared against.
    """

    d: int
    a: float
    h: float
    count: int
    all_heights_ok: bool
    max_height: float
    analytic_lower_bound: float
    coeff_box: int
    degree_cap: int


def sh_set_table(
    d: int, a: float, h: float, cfg: QuadratureConfig,
    search_cap: int = 200_000,
):
    """Exponent grid, coefficient rows, and verified heights of the box.

    The box consists of f with deg_i(f) <= floor(a*h) and
    |f|_inf <= exp((1 - a*d) * h) / sqrt(2).  Heights are those of the
    points (1 : f): infinity degrees plus the integral of log max(1, |f|).
    """
    if d < 1:
        raise DomainError("need d >= 1 variables")
    if 1.0 - 2.0 * d * a <= 0:
        raise DomainError("need 1 - 2da > 0")
    if h < 0:
        raise DomainError("height bound must be >= 0")
    scale = (1.0 - a * d) * h
    if scale > 34:  # box alone would exceed any searchable size
        raise SizeCapExceeded(f"coefficient box exp({scale:.3g}) is not searchable")
    box = math.floor(math.exp(scale) / math.sqrt(2.0) + 1e-9)
    degree_cap = math.floor(a * h + 1e-9)
    exponents = list(
        itertools.product(range(degree_cap + 1), repeat=d)
    )
    m = len(exponents)
    count = (2 * box + 1) ** m
    if count > search_cap:
        raise SizeCapExceeded(f"{count} box members exceed cap {search_cap}")
    rows = np.array(
        list(itertools.product(*([range(-box, box + 1)] * m))), dtype=float
    )
    if d <= 2 and cfg.scheme == "tensor_gauss":
        integrals = batched_log_integrals(rows, exponents, d, cfg, floor_at_one=True)
    else:
        one = MultiPoly.constant(1, d)
        integrals = np.array([
            integrate_log_max(
                [one, MultiPoly(d, dict(zip(exponents, row)))], cfg
            )
            for row in rows
        ])
    heights = np.empty(len(rows))
    for idx, row in enumerate(rows):
        degs = 0
        for j in range(d):
            dj = max((e[j] for e, c in zip(exponents, row) if c), default=0)
            degs += dj
        heights[idx] = degs + integrals[idx]
    return exponents, rows.astype(int), heights, box, degree_cap


def sh_set_census(
    d: int, a: float, h: float, cfg: QuadratureConfig,
    search_cap: int = 200_000,
) -> ShSetCensus:
    """Count the certified box of integer polynomials of bounded height.

    Every member satisfies h((1:f)) <= h, which is re-verified numerically
    with a guard band of cfg.tolerance; the count is compared against the
    analytic lower bound exp(a^d (1 - 2ad) h^(d+1) - a^d h^d).
    """
    exponents, rows, heights, box, degree_cap = sh_set_table(
        d, a, h, cfg, search_cap
    )
    lower = math.exp(a ** d * (1.0 - 2.0 * a * d) * h ** (d + 1) - a ** d * h ** d)
    max_height = float(np.max(heights)) if len(heights) else 0.0
    all_ok = bool(np.all(heights <= h + cfg.tolerance))
    return ShSetCensus(
        d, a, h, len(rows), all_ok, max_height, lower, box, degree_cap
    )
