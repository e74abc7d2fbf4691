"""Ambient spaces and finite-field parameters.

Three kinds of polarized ambient spaces are supported:

* ``ProjSpace(n)``   -- projective n-space, polarized by O(1);
* ``P1Power(n)``     -- the n-fold product of projective lines, polarized by
  O(1, ..., 1);
* ``Product(a, b)``  -- a binary product of supported spaces, polarized by
  the tensor product of the pullbacks of the factor polarizations.

Descriptors are immutable values; the polarization is implicit in the kind,
so a descriptor is all a counting function needs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division (desk-scale inputs)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimePower:
    """A finite-field order q = p^e, kept as the exact pair (p, e)."""

    p: int
    e: int = 1

    def __post_init__(self):
        if not is_prime(self.p):
            raise DomainError(f"p = {self.p} is not prime")
        if self.e < 1:
            raise DomainError(f"exponent e = {self.e} must be >= 1")

    @property
    def q(self) -> int:
        return self.p ** self.e

    def __str__(self) -> str:
        return str(self.q) if self.e == 1 else f"{self.p}^{self.e}"


class SpaceDescriptor:
    """Base class for ambient-space descriptors."""

    @property
    def dim(self) -> int:
        raise NotImplementedError

    def label(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class ProjSpace(SpaceDescriptor):
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("projective space dimension must be >= 0")

    @property
    def dim(self) -> int:
        return self.n

    def label(self) -> str:
        return f"P{self.n}"


@dataclass(frozen=True)
class P1Power(SpaceDescriptor):
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("number of P1 factors must be >= 0")

    @property
    def dim(self) -> int:
        return self.n

    def label(self) -> str:
        return f"(P1)^{self.n}"


@dataclass(frozen=True)
class Product(SpaceDescriptor):
    left: SpaceDescriptor
    right: SpaceDescriptor

    @property
    def dim(self) -> int:
        return self.left.dim + self.right.dim

    def label(self) -> str:
        return f"{self.left.label()}x{self.right.label()}"


def top_degree(space: SpaceDescriptor) -> int:
    """Degree of the ambient polarization on the whole space.

    This is the top self-intersection number of the polarization: 1 on
    ProjSpace(n), n! on P1Power(n), and a binomial times the factor degrees
    on a product.  It is the degree step of top-dimensional cycles a*[X].
    """
    if isinstance(space, ProjSpace):
        return 1
    if isinstance(space, P1Power):
        return math.factorial(space.n)
    if isinstance(space, Product):
        dl, dr = space.left.dim, space.right.dim
        return math.comb(dl + dr, dl) * top_degree(space.left) * top_degree(space.right)
    raise DomainError(f"unsupported space {space!r}")


def as_p1_power(space: SpaceDescriptor) -> int | None:
    """Return n if the space is an n-fold product of projective lines."""
    if isinstance(space, P1Power):
        return space.n
    if isinstance(space, ProjSpace) and space.n <= 1:
        return space.n
    if isinstance(space, Product):
        left = as_p1_power(space.left)
        right = as_p1_power(space.right)
        if left is not None and right is not None:
            return left + right
    return None


def multidegree_slots(space: SpaceDescriptor) -> tuple[tuple, ...]:
    """The block structure of divisor multidegrees on the space.

    Each slot is ``("p1",)`` for a projective-line factor or ``("pn", n)``
    for a projective-space factor; a multidegree assigns one non-negative
    integer per slot.
    """
    if isinstance(space, ProjSpace):
        return (("pn", space.n),)
    if isinstance(space, P1Power):
        return (("p1",),) * space.n
    if isinstance(space, Product):
        return multidegree_slots(space.left) + multidegree_slots(space.right)
    raise DomainError(f"unsupported space {space!r}")


def parse_space(kind: str, n: int) -> SpaceDescriptor:
    """Build a descriptor from the CLI tokens ``pn`` / ``p1xn``."""
    kind = kind.lower()
    if kind in ("pn", "proj", "projective"):
        return ProjSpace(n)
    if kind in ("p1xn", "p1power", "p1"):
        return P1Power(n)
    raise DomainError(f"unknown space kind {kind!r} (use 'pn' or 'p1xn')")
