"""Polynomial norms, the Fubini-Study measure v, and arithmetic degrees.

The measure of a tuple of polynomials is

    v(f_1, .., f_l) = exp( integral of log max_i |f_i| against the
                           product Fubini-Study volume on C^n ),

a multivariate Mahler-type quantity.  For an integer form P on a product
of projective lines over the integers, the arithmetic degree of div(P)
against the lambda-scaled metrics reduces to

    delta_lambda(div P) = lambda * sum_i k_i + integral log |p|,

where k is the multidegree and p the dehomogenization.  Both the norm
inequalities relating v to |.|_inf and |.|_2 and the Northcott-style
finiteness of {delta_lambda <= h} are executable here.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import BandAmbiguity, DomainError, SizeCapExceeded, ZeroPolynomial
from .multipoly import IntegerForm, MultiPoly, monomial_grid
from .quadrature import QuadratureConfig, batched_log_integrals, integrate_log_max

DEFAULT_SEARCH_CAP = 2_000_000


def norms(f: MultiPoly) -> tuple[float, float]:
    """(|f|_inf, |f|_2): max coefficient modulus and Euclidean coefficient norm."""
    return f.norm_inf(), f.norm_two()


def v_measure(fs, cfg: QuadratureConfig) -> float:
    """exp of the Fubini-Study integral of log max_i |f_i|."""
    fs = [fs] if isinstance(fs, MultiPoly) else list(fs)
    return math.exp(integrate_log_max(fs, cfg))


def lc_sigma_max(f: MultiPoly) -> float:
    """Largest iterated leading coefficient over all variable orders.

    Taking leading coefficients one variable at a time ends in a single
    scalar; the maximum of its modulus over the n! orders lower-bounds
    the Fubini-Study integral of log |f|.
    """
    if f.is_zero:
        raise ZeroPolynomial("lc_sigma_max needs a nonzero polynomial")
    best = 0.0
    for order in itertools.permutations(range(f.nvars)):
        g = f
        remaining = list(range(f.nvars))
        for v in order:
            # dropping a variable shifts the indices of the later ones
            i = remaining.index(v)
            g = g.leading_coefficient(i)
            remaining.pop(i)
        best = max(best, abs(g.coeffs.get((), 0)))
    return best


def _delta_exact(P: IntegerForm, lam: float) -> float | None:
    # single-monomial forms integrate exactly: log|z^a| pairs to zero
    # under z <-> 1/z, leaving log of the coefficient
    if P.is_monomial:
        (_, c), = P.coeffs
        return lam * sum(P.multidegree) + math.log(abs(c))
    return None


def delta_lambda(P: IntegerForm, lam: float, cfg: QuadratureConfig) -> float:
    """Arithmetic degree of div(P) against the lambda-scaled FS metrics.

    Equals lam * (sum of the multidegree) plus the Fubini-Study integral
    of log |p| for the dehomogenized p; the integral is nonnegative for
    integer forms, which makes bounded-degree searches finite.
    """
    if lam <= 0:
        raise DomainError("lambda must be positive")
    exact = _delta_exact(P, lam)
    if exact is not None:
        return exact
    return lam * sum(P.multidegree) + integrate_log_max(
        [P.dehomogenized()], cfg
    )


@dataclass(frozen=True)
class ArithDivisorCensus:
    """Outcome of an exhaustive bounded-arithmetic-degree divisor count.

    ``count`` are the divisors certified inside the bound; ``borderline``
    are those whose degree sits within the numerical guard band and were
    left unclassified.  ``log_certified_bound`` is the natural log of the
    a-priori finiteness bound for the searched region.
    """

    n: int
    lam: float
    h: float
    count: int
    log_certified_bound: float
    borderline: tuple[IntegerForm, ...]
    max_inf_norm: int

    def raise_if_ambiguous(self):
        if self.borderline:
            raise BandAmbiguity(
                f"{len(self.borderline)} divisors within the guard band",
                self.borderline,
            )
        return self


def _g_cap(h: float, lam: float) -> float:
    """Coefficient cap for forms of arithmetic degree at most h."""
    return math.exp(h * math.log(2) / lam) if lam <= math.log(2) else math.exp(h)


def _norm_bounded_multidegrees(n: int, total_cap: int):
    for e in itertools.product(range(total_cap + 1), repeat=n):
        if sum(e) <= total_cap:
            yield e


def count_arith_divisors_bounded(
    n: int,
    lam: float,
    h: float,
    cfg: QuadratureConfig,
    search_cap: int = DEFAULT_SEARCH_CAP,
) -> ArithDivisorCensus:
    """Exact count of effective divisors with arithmetic degree <= h.

    Divisors on the n-fold product of projective lines over the integers
    are sign-normalized nonzero integer forms.  Members must satisfy
    lambda * sum(k) <= h and |P|_inf <= g(h, lambda), so the search region
    is finite; each candidate is classified by ``delta_lambda`` with a
    guard band of +-cfg.tolerance around h (exact monomial degrees use a
    zero band).  Borderline candidates are reported, never classified.
    """
    if lam <= 0:
        raise DomainError("lambda must be positive")
    if h < 0:
        raise DomainError("degree bound h must be >= 0")
    if n < 1:
        raise DomainError("need n >= 1 projective-line factors")
    g = _g_cap(h, lam)
    if g > 1e15:
        raise SizeCapExceeded(f"coefficient cap exp-scale {g:.3g} is not searchable")
    box = math.floor(g + 1e-9)
    kmax_total = math.floor(h / lam + 1e-9)

    log_bound = n * math.log(h / lam + 1) + (h / lam + 1) ** n * math.log(
        2 * g + 1
    )

    work = 0
    count = 0
    borderline: list[IntegerForm] = []
    band = cfg.tolerance
    for e in _norm_bounded_multidegrees(n, kmax_total):
        monos = monomial_grid(e)
        m = len(monos)
        vectors = (2 * box + 1) ** m
        work += vectors
        if work > search_cap:
            raise SizeCapExceeded(
                f"search region exceeds cap {search_cap} at multidegree {e}"
            )
        deg_term = lam * sum(e)
        # partition candidates: exact ones (<= 1 nonzero coefficient) vs
        # quadrature ones, batched per multidegree
        quad_rows = []
        quad_forms = []
        for vec in itertools.product(*([range(-box, box + 1)] * m)):
            nonzero = dict(
                (mono, c) for mono, c in zip(monos, vec) if c
            )
            if not nonzero:
                continue
            # canonical sign: lexicographically greatest exponent positive
            if nonzero[max(nonzero)] < 0:
                continue
            if len(nonzero) == 1:
                value = deg_term + math.log(abs(next(iter(nonzero.values()))))
                if value <= h:
                    count += 1
            else:
                quad_rows.append(vec)
                quad_forms.append(IntegerForm.make(n, e, nonzero))
        if quad_rows:
            values = deg_term + batched_log_integrals(
                np.array(quad_rows, dtype=float), monos, n, cfg
            )
            for form, value in zip(quad_forms, values):
                if value <= h - band:
                    count += 1
                elif value <= h + band:
                    borderline.append(form)
    return ArithDivisorCensus(
        n, lam, h, count, log_bound, tuple(borderline), box
    )


# ---------------------------------------------------------------------------
# property verification driver
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NormSampleSpec:
    """Seeded random-polynomial generator: dense integer coefficients."""

    samples: int
    seed: int
    nvars: int = 2
    max_degree: int = 3
    coeff_bound: int = 10

    def __post_init__(self):
        if self.samples < 1 or self.nvars < 1 or self.max_degree < 0:
            raise DomainError("bad sample specification")


@dataclass(frozen=True)
class CheckRecord:
    sample: int
    name: str
    lhs: float
    rhs: float

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs

    def status(self, tolerance: float) -> str:
        if self.slack >= 0:
            return "pass"
        return "warn" if self.slack >= -tolerance else "fail"


@dataclass(frozen=True)
class NormPropertyReport:
    spec: NormSampleSpec
    tolerance: float
    records: tuple[CheckRecord, ...]

    def tally(self) -> dict[str, int]:
        out = {"pass": 0, "warn": 0, "fail": 0}
        for rec in self.records:
            out[rec.status(self.tolerance)] += 1
        return out

    @property
    def hard_failures(self) -> tuple[CheckRecord, ...]:
        return tuple(
            r for r in self.records if r.status(self.tolerance) == "fail"
        )


def _random_poly(rng, spec: NormSampleSpec) -> MultiPoly:
    shape = (spec.max_degree + 1,) * spec.nvars
    while True:
        coeffs = rng.integers(-spec.coeff_bound, spec.coeff_bound + 1, shape)
        if np.any(coeffs):
            break
    return MultiPoly(
        spec.nvars,
        {
            exps: int(coeffs[exps])
            for exps in itertools.product(
                range(spec.max_degree + 1), repeat=spec.nvars
            )
        },
    )


def verify_norm_props(spec: NormSampleSpec, cfg: QuadratureConfig) -> NormPropertyReport:
    """Check the norm comparison inequalities on seeded random polynomials.

    Per sample f (and a partner g for the product inequality):

    * ``inf_vs_v``      |f|_inf <= 2^(sum deg_i) v(f)
    * ``v_vs_two``      v(f) <= sqrt(2)^(sum deg_i) |f|_2
    * ``product_inf``   |fg|_inf <= |f|_inf |g|_inf prod(1 + min deg_i)
    * ``v_integer_lower``    log v(f) >= 0 for integer f
    * ``v_lc_lower``         log v(f) >= log lc_sigma_max(f)

    Negative slack within cfg.tolerance counts as a quadrature warning;
    anything below that is a hard failure.
    """
    rng = np.random.default_rng(spec.seed)
    records = []
    for i in range(spec.samples):
        f = _random_poly(rng, spec)
        g = _random_poly(rng, spec)
        log_v = integrate_log_max([f], cfg)
        v = math.exp(log_v)
        d_sum = sum(f.degrees)
        records.append(CheckRecord(i, "inf_vs_v", f.norm_inf(), 2 ** d_sum * v))
        records.append(
            CheckRecord(i, "v_vs_two", v, math.sqrt(2) ** d_sum * f.norm_two())
        )
        fg = f * g
        bound = f.norm_inf() * g.norm_inf() * math.prod(
            1 + min(f.deg(j), g.deg(j)) for j in range(spec.nvars)
        )
        records.append(CheckRecord(i, "product_inf", fg.norm_inf(), bound))
        records.append(CheckRecord(i, "v_integer_lower", 0.0, log_v))
        records.append(
            CheckRecord(i, "v_lc_lower", math.log(lc_sigma_max(f)), log_v)
        )
    return NormPropertyReport(spec, cfg.tolerance, tuple(records))
