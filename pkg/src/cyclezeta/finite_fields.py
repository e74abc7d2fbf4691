"""Tiny canonical finite fields F_{p^m} for exhaustive enumeration.

Each field is F_p[t]/(m(t)) where m(t) is the *first* monic irreducible of
degree m in increasing encoding order, so every field and every subfield
embedding used by the oracle is deterministic and reproducible without
external tables.

Elements are encoded as integers: sum c_i t^i  <->  sum c_i p^i with
0 <= c_i < p.  These fields are meant for desk-scale orbit enumeration
(orders up to ~10^4), not for cryptographic sizes.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import DomainError, SizeCapExceeded

_FIELD_ORDER_CAP = 1_000_000


def _poly_trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a, m, p):
    # m monic; reduce a modulo m in place
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1]
        if c:
            shift = len(a) - 1 - dm
            for i, mi in enumerate(m[:-1]):
                a[shift + i] = (a[shift + i] - c * mi) % p
        a.pop()
    return _poly_trim(a)


def _encode(coeffs, p) -> int:
    v = 0
    for c in reversed(coeffs):
        v = v * p + c
    return v


def _decode(v, p) -> tuple[int, ...]:
    out = []
    while v:
        v, r = divmod(v, p)
        out.append(r)
    return tuple(out)


def _is_irreducible(poly, p) -> bool:
    # trial division by every monic polynomial of degree 1..deg/2
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for code in range(p ** d):
            divisor = _decode(code, p) + (0,) * (d - len(_decode(code, p))) + (1,)
            if not _poly_mod(poly, divisor, p):
                return False
    return True


@lru_cache(maxsize=None)
def _canonical_modulus(p: int, m: int) -> tuple[int, ...]:
    if m == 1:
        return (0, 1)
    for code in range(p ** m):
        low = _decode(code, p)
        poly = low + (0,) * (m - len(low)) + (1,)
        if _is_irreducible(poly, p):
            return poly
    raise AssertionError("no irreducible found (unreachable)")


class Fq:
    """Arithmetic in the canonical F_{p^m}; elements are ints in [0, p^m)."""

    def __init__(self, p: int, m: int):
        if m < 1:
            raise DomainError("field degree m must be >= 1")
        if p ** m > _FIELD_ORDER_CAP:
            raise SizeCapExceeded(f"field order {p}^{m} exceeds enumeration cap")
        self.p = p
        self.m = m
        self.order = p ** m
        self.modulus = _canonical_modulus(p, m)

    def decode(self, a: int) -> tuple[int, ...]:
        return _decode(a, self.p)

    def encode(self, coeffs) -> int:
        return _encode(coeffs, self.p)

    def add(self, a: int, b: int) -> int:
        p = self.p
        out = 0
        mult = 1
        while a or b:
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra + rb) % p) * mult
            mult *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        out = 0
        mult = 1
        while a:
            a, ra = divmod(a, p)
            out += (-ra) % p * mult
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        prod = _poly_mul(self.decode(a), self.decode(b), self.p)
        return self.encode(_poly_mod(prod, self.modulus, self.p))

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(a), -n)
        result, base = 1, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise DomainError("zero is not invertible")
        return self.pow(a, self.order - 2)

    def eval_poly(self, coeffs, x: int) -> int:
        """Evaluate a polynomial with F_p coefficients (ints) at x via Horner."""
        acc = 0
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, x), c % self.p)
        return acc


@lru_cache(maxsize=None)
def field(p: int, m: int) -> Fq:
    return Fq(p, m)


@lru_cache(maxsize=None)
def embedding(p: int, m_sub: int, m_sup: int) -> tuple[tuple[int, ...], dict]:
    """Canonical embedding F_{p^m_sub} -> F_{p^m_sup} and its partial inverse.

    The image of t is the least root (in encoding order) of the subfield
    modulus inside the big field, so the embedding is as canonical as the
    fields themselves.  Returns (forward table, inverse dict).
    """
    if m_sup % m_sub != 0:
        raise DomainError(f"F_{p}^{m_sub} is not a subfield of F_{p}^{m_sup}")
    sub, sup = field(p, m_sub), field(p, m_sup)
    if m_sub == m_sup:
        table = tuple(range(sub.order))
        return table, {x: x for x in table}
    root = next(
        a for a in range(sup.order) if sup.eval_poly(sub.modulus, a) == 0
    )
    powers = [1]
    for _ in range(m_sub - 1):
        powers.append(sup.mul(powers[-1], root))
    table = []
    for x in range(sub.order):
        img = 0
        for c, rp in zip(sub.decode(x), powers):
            img = sup.add(img, sup.mul(c, rp))
        table.append(img)
    forward = tuple(table)
    return forward, {img: x for x, img in enumerate(forward)}
