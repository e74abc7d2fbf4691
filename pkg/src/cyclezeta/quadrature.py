"""Numerical integration against the product Fubini-Study volume on C^n.

The relevant measure per complex variable is

    omega = r dr dtheta / (pi (1 + r^2)^2),

a probability measure on C giving mass 1/2 to the unit disk.  The plane is
covered without an unbounded domain: the exterior is pulled back to the
disk by z -> 1/z, which preserves omega, so the node set is a disk grid
together with its pointwise inverses at the same weights.

On the disk the substitution u = r^2 turns the radial factor into
du / (1 + u)^2 on [0, 1], handled by Gauss-Legendre; the angle uses the
periodic midpoint rule.  Tensor grids are limited to two complex
variables; beyond that the seeded Monte Carlo sampler takes over.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import AllZero, DomainError

_TINY = 1e-300
_MC_BATCH = 100_000


@dataclass(frozen=True)
class QuadratureConfig:
    """How to integrate: tensor Gauss-Legendre grid or seeded Monte Carlo."""

    scheme: str = "tensor_gauss"
    nodes_per_dim: int = 64
    sample_count: int = 1_000_000
    seed: int | None = None
    tolerance: float = 1e-3

    def __post_init__(self):
        if self.scheme not in ("tensor_gauss", "monte_carlo"):
            raise DomainError(f"unknown quadrature scheme {self.scheme!r}")
        if self.scheme == "tensor_gauss" and self.nodes_per_dim < 8:
            raise DomainError("nodes_per_dim must be >= 8")
        if self.scheme == "monte_carlo":
            if self.seed is None:
                raise DomainError("monte_carlo requires an explicit seed")
            if self.sample_count < 1:
                raise DomainError("sample_count must be >= 1")


@lru_cache(maxsize=8)
def plane_nodes(nodes_per_dim: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights covering C for one variable; weights sum to 1."""
    n = nodes_per_dim
    ug, wg = np.polynomial.legendre.leggauss(n)
    u = (ug + 1.0) / 2.0
    w = wg / 2.0
    theta = (np.arange(n) + 0.5) * (2.0 * np.pi / n)
    r = np.sqrt(u)
    z_disk = (r[:, None] * np.exp(1j * theta)[None, :]).ravel()
    w_disk = ((w / (1.0 + u) ** 2)[:, None] * np.full(n, 1.0 / n)[None, :]).ravel()
    nodes = np.concatenate([z_disk, 1.0 / z_disk])
    weights = np.concatenate([w_disk, w_disk])
    return nodes, weights


def _log_max_abs(polys, axes) -> np.ndarray:
    vals = None
    for f in polys:
        a = np.abs(f.eval_grid(axes))
        vals = a if vals is None else np.maximum(vals, a)
    return np.log(np.maximum(vals, _TINY))


def _coeff_matrix(f) -> np.ndarray:
    C = np.zeros((f.deg(0) + 1, f.deg(1) + 1), dtype=complex)
    for (a, b), c in f.coeffs.items():
        C[a, b] = c
    return C


def _integrate_tensor(polys, nvars: int, cfg: QuadratureConfig) -> float:
    z, w = plane_nodes(cfg.nodes_per_dim)
    if nvars == 1:
        return float(np.dot(w, _log_max_abs(polys, [z])))
    if nvars == 2:
        if len(z) ** 2 > 250_000_000:
            raise DomainError(
                f"a two-variable grid with nodes_per_dim={cfg.nodes_per_dim} "
                "has over 2.5e8 points; lower nodes_per_dim or use monte_carlo"
            )
        # separable evaluation: f on the grid is V1 @ C @ V2 with Vandermonde
        # factors per axis, so the cost is two small matrix products
        mats = [_coeff_matrix(f) for f in polys]
        right = [
            np.vstack([z ** b for b in range(C.shape[1])]) for C in mats
        ]
        total = 0.0
        chunk = max(1, 4_000_000 // len(z))
        for lo in range(0, len(z), chunk):
            z1 = z[lo:lo + chunk]
            vals = None
            for C, P2 in zip(mats, right):
                V1 = np.stack([z1 ** a for a in range(C.shape[0])], axis=1)
                a = np.abs(V1 @ (C @ P2))
                vals = a if vals is None else np.maximum(vals, a)
            block = np.log(np.maximum(vals, _TINY))
            total += float(w[lo:lo + chunk] @ block @ w)
        return total
    raise DomainError(
        "tensor grids are limited to 2 complex variables; use monte_carlo"
    )


def _integrate_monte_carlo(polys, nvars: int, cfg: QuadratureConfig) -> float:
    rng = np.random.default_rng(cfg.seed)
    remaining = cfg.sample_count
    acc = 0.0
    while remaining > 0:
        batch = min(_MC_BATCH, remaining)
        v = rng.random((batch, nvars))
        r = np.sqrt(v / (1.0 - v))
        theta = rng.random((batch, nvars)) * (2.0 * np.pi)
        pts = r * np.exp(1j * theta)
        axes = [pts[:, i] for i in range(nvars)]
        acc += float(np.sum(_log_max_abs(polys, axes)))
        remaining -= batch
    return acc / cfg.sample_count


def integrate_log_max(polys, cfg: QuadratureConfig) -> float:
    """Integral of log max_i |f_i| against the product Fubini-Study volume.

    The f_i must share a variable count; raises ``AllZero`` when every
    f_i vanishes identically (the integral is -infinity).
    """
    polys = list(polys)
    if not polys:
        raise AllZero("no polynomials given")
    nvars = polys[0].nvars
    if any(f.nvars != nvars for f in polys):
        raise DomainError("polynomials must share the variable count")
    polys = [f for f in polys if not f.is_zero]
    if not polys:
        raise AllZero("log max |f_i| is identically -infinity")
    if nvars == 0:
        return math.log(max(abs(f.coeffs.get((), 0)) for f in polys))
    if cfg.scheme == "monte_carlo":
        return _integrate_monte_carlo(polys, nvars, cfg)
    return _integrate_tensor(polys, nvars, cfg)


def batched_log_integrals(
    coeff_matrix: np.ndarray, exponents, nvars: int, cfg: QuadratureConfig,
    floor_at_one: bool = False,
) -> np.ndarray:
    """Fubini-Study log-integrals for many polynomials sharing a support.

    Row j of ``coeff_matrix`` holds the coefficients of one polynomial on
    the common ``exponents`` (tuples of length nvars).  With
    ``floor_at_one`` the integrand is log max(1, |f|) instead of log |f|.
    Rows that are identically zero integrate to -inf (or 0 when floored).
    """
    if cfg.scheme != "tensor_gauss":
        raise DomainError("batched integrals support the tensor scheme only")
    z, w = plane_nodes(cfg.nodes_per_dim)
    if nvars == 1:
        monos = np.stack([z ** e[0] for e in exponents])  # (m, G)
        wts = w
    elif nvars == 2:
        z1 = z[:, None]
        z2 = z[None, :]
        monos = np.stack(
            [(z1 ** e[0] * z2 ** e[1]).ravel() for e in exponents]
        )
        wts = (w[:, None] * w[None, :]).ravel()
    else:
        raise DomainError("batched integrals are limited to 2 variables")
    out = np.empty(coeff_matrix.shape[0])
    chunk = max(1, 8_000_000 // monos.shape[1])
    for lo in range(0, coeff_matrix.shape[0], chunk):
        vals = np.abs(coeff_matrix[lo:lo + chunk].astype(complex) @ monos)
        if floor_at_one:
            np.maximum(vals, 1.0, out=vals)
        out[lo:lo + chunk] = np.log(np.maximum(vals, _TINY)) @ wts
    return out
