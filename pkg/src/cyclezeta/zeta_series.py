"""Cycle zeta series, Euler products over primes, and abscissa estimates.

The degree-k count n_k of effective l-dimensional cycles enters the series
at exponent k^(l+1):

    Z(T) = sum_k n_k T^(k^(l+1)),

which converges for |q^C' T| < 1 once n_k <= q^(C' k^(l+1)).  Truncations
carry a rigorous geometric tail bound; the global object is the partial
Euler product of the local series at T = p^(-s).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from .errors import DomainError, RadiusError, UnsupportedDimension
from .exact_counts import cycle_count
from .spaces import PrimePower, ProjSpace, SpaceDescriptor, top_degree

SPEC_Z_AUDIT_CAP = 10 ** 6


@dataclass(frozen=True)
class SparseSeries:
    """Exact truncated cycle zeta series with sparse exponents k^(l+1)."""

    space: SpaceDescriptor
    q: PrimePower
    l: int
    kmax: int
    coefficients: tuple[int, ...]  # n_0 .. n_kmax

    @property
    def terms(self) -> dict[int, int]:
        step = self.l + 1
        return {k ** step: c for k, c in enumerate(self.coefficients)}

    def exponent(self, k: int) -> int:
        return k ** (self.l + 1)


@dataclass(frozen=True)
class TailBound:
    """Geometric tail bound for a truncated series at |q^cprime * t| = rho."""

    cprime: float
    rho: float
    bound: float


def local_zeta_series(
    space: SpaceDescriptor, q: PrimePower, l: int, kmax: int
) -> SparseSeries:
    """Exact truncation of the l-cycle zeta series up to degree kmax."""
    if kmax < 0:
        raise DomainError("kmax must be >= 0")
    coeffs = tuple(cycle_count(space, q, l, k) for k in range(kmax + 1))
    return SparseSeries(space, q, l, kmax, coeffs)


def _term_value(n_k: int, t, exponent: int):
    """n_k * t^exponent without big-int float overflow (real or complex t)."""
    if n_k == 0:
        return 0.0
    if n_k.bit_length() < 900:
        return n_k * t ** exponent
    mag = math.log(n_k) + exponent * math.log(abs(t))
    if mag < -745.0:
        return 0.0
    if isinstance(t, complex):
        phase = exponent * math.atan2(t.imag, t.real)
        return math.exp(mag) * complex(math.cos(phase), math.sin(phase))
    sign = -1.0 if (t < 0 and exponent % 2) else 1.0
    return sign * math.exp(mag)


def tail_bound(series: SparseSeries, t, cprime: float) -> TailBound:
    """Rigorous bound on the dropped tail, assuming n_k <= q^(cprime k^(l+1))."""
    rho = abs(t) * math.exp(cprime * math.log(series.q.q))
    if rho >= 1.0:
        raise RadiusError(
            f"|q^cprime * t| = {rho:.6g} >= 1: outside the certified radius"
        )
    if rho == 0.0:
        return TailBound(cprime, 0.0, 0.0)
    lead = rho ** ((series.kmax + 1) ** (series.l + 1))
    return TailBound(cprime, rho, lead / (1.0 - rho))


def eval_with_tail(series: SparseSeries, t, cprime: float):
    """Partial sum of the series at t plus the geometric tail bound.

    ``cprime`` must be a growth constant actually valid for the series'
    coefficients (see ``default_cprime_pn``); the tail bound is only as
    rigorous as that hypothesis.
    """
    tb = tail_bound(series, t, cprime)
    step = series.l + 1
    value = 0.0
    for k, n_k in enumerate(series.coefficients):
        value += _term_value(n_k, t, k ** step)
    return value, tb


def default_cprime_pn(n: int, l: int) -> float:
    """A growth constant valid for all k >= 1 on P^n, per cycle dimension.

    l = n: counts are 0/1.  l = 0: n_k <= (k+1)^n q^(nk) <= q^(2nk).
    l = n-1: the form-space dimension C(n+k, n) is at most (n+1) k^n.
    """
    if not 0 <= l <= n:
        raise DomainError("need 0 <= l <= n")
    if l == n:
        return 0.0
    if l == 0:
        return 2.0 * n
    if l == n - 1:
        return float(n + 1)
    raise UnsupportedDimension(f"no pinned growth constant for l={l} on P^{n}")


def _sieve(limit: int) -> list[int]:
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, int(limit ** 0.5) + 1):
        if flags[i]:
            flags[i * i:: i] = b"\x00" * len(range(i * i, limit + 1, i))
    return [i for i, f in enumerate(flags) if f]


def _kmax_for_tail(rho: float, l: int, tol: float) -> int:
    if rho == 0.0:
        return 0
    need = math.log(tol * (1.0 - rho)) / math.log(rho)
    kmax = 0
    while (kmax + 1) ** (l + 1) < need:
        kmax += 1
    return kmax


def l_function_partial_with_error(
    n: int, l: int, s: complex, pmax: int, tail_tol: float = 1e-12
):
    """Partial Euler product over p <= pmax of the local P^n cycle zetas.

    Each local factor is a truncated series at T = p^(-s) whose tail bound
    is below ``tail_tol``; the factors are multiplied in ascending prime
    order and the relative factor errors accumulate into the returned
    absolute error estimate.
    """
    if n < 0:
        raise DomainError("ambient dimension must be >= 0")
    s = complex(s)
    cprime = default_cprime_pn(n, l)
    if s.real <= cprime:
        raise RadiusError(
            f"Re(s) = {s.real} <= growth constant {cprime}: product diverges"
        )
    value = complex(1.0, 0.0)
    rel_err = 0.0
    for p in _sieve(pmax):
        q = PrimePower(p)
        t = complex(p) ** (-s)
        rho = abs(t) * math.exp(cprime * math.log(p))
        kmax = _kmax_for_tail(rho, l, tail_tol)
        series = local_zeta_series(ProjSpace(n), q, l, kmax)
        factor = complex(0.0, 0.0)
        step = l + 1
        for k, n_k in enumerate(series.coefficients):
            factor += _term_value(n_k, t, k ** step)
        tb = tail_bound(series, t, cprime)
        value *= factor
        rel_err += tb.bound / max(abs(factor) - tb.bound, 1e-300)
    return value, abs(value) * rel_err


def l_function_partial(n: int, l: int, s: complex, pmax: int) -> complex:
    value, _ = l_function_partial_with_error(n, l, s, pmax)
    return value


# ---------------------------------------------------------------------------
# the integer-ring specialization
# ---------------------------------------------------------------------------

def spec_z_cycles(cutoff: int) -> list[dict[int, int]]:
    """Effective 0-cycles on the integer spectrum with norm <= cutoff.

    A cycle is a multiset of primes with multiplicities; its norm is
    exp(arithmetic degree) = prod p^(m_p).  Returned as factorization
    dicts sorted by norm; the norm map is a bijection onto 1..cutoff.
    """
    if cutoff < 1:
        raise DomainError("cutoff must be >= 1")
    if cutoff > SPEC_Z_AUDIT_CAP:
        raise DomainError(f"audit cutoff capped at {SPEC_Z_AUDIT_CAP}")
    primes = _sieve(cutoff)
    out: list[tuple[int, dict[int, int]]] = []

    def recurse(idx: int, norm: int, fac: dict[int, int]):
        out.append((norm, dict(fac)))
        for j in range(idx, len(primes)):
            p = primes[j]
            if norm * p > cutoff:
                break
            fac[p] = fac.get(p, 0) + 1
            recurse(j, norm * p, fac)
            fac[p] -= 1
            if not fac[p]:
                del fac[p]

    recurse(0, 1, {})
    out.sort(key=lambda t: t[0])
    norms = [norm for norm, _ in out]
    if norms != list(range(1, cutoff + 1)):
        raise AssertionError("norm map failed to biject onto 1..cutoff")
    return [fac for _, fac in out]


def spec_z_zeta_partial(s: float, cutoff: int, audit: bool = False) -> float:
    """Partial zeta sum over effective 0-cycles of the integer spectrum.

    The norm bijection cycles <-> positive integers turns the cycle sum
    into sum_{m <= cutoff} m^(-s).  Audit mode actually enumerates the
    cycles and sums their norms; fast mode sums integers directly.
    """
    if s <= 1:
        raise DomainError("need s > 1 for convergence")
    if cutoff < 1:
        raise DomainError("cutoff must be >= 1")
    if audit:
        cycles = spec_z_cycles(cutoff)
        norms = [
            math.prod(p ** m for p, m in fac.items()) for fac in cycles
        ]
        return math.fsum(norm ** (-s) for norm in norms)
    return math.fsum(m ** (-s) for m in range(1, cutoff + 1))


# ---------------------------------------------------------------------------
# abscissa of convergence
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AbscissaReport:
    """log_q(n_k) / k^(l+1) for k = 1..kmax, with the predicted limit."""

    space: SpaceDescriptor
    q: PrimePower
    l: int
    values: tuple[float, ...]
    predicted_limit: float | None

    def value(self, k: int) -> float:
        return self.values[k - 1]


def abscissa_sequence(
    space: SpaceDescriptor, q: PrimePower, l: int, kmax: int
) -> AbscissaReport:
    """Normalized log-counts whose limsup is the abscissa of convergence.

    The predicted limit 1/(deg^(dim-1) * dim!) with deg the top
    self-intersection of the polarization applies to l = dim - 1; for
    other l the sequence is reported without a prediction.
    """
    if kmax < 1:
        raise DomainError("kmax must be >= 1")
    logq = math.log(q.q)
    values = []
    for k in range(1, kmax + 1):
        n_k = cycle_count(space, q, l, k)
        values.append(
            math.log(n_k) / (k ** (l + 1) * logq) if n_k > 0 else -math.inf
        )
    limit = None
    dim = space.dim
    if l == dim - 1:
        deg = top_degree(space)
        limit = 1.0 / (deg ** (dim - 1) * math.factorial(dim))
    return AbscissaReport(space, q, l, tuple(values), limit)
