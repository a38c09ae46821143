"""Arithmetic in GF(p^m) with elements as coefficient tuples.

An element ``(c_0, ..., c_{m-1})`` stands for ``c_0 + c_1 x + ... + c_{m-1} x^{m-1}``
reduced modulo a fixed monic irreducible polynomial.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

MAX_FIELD_ORDER = 1 << 20

Element = tuple[int, ...]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q = p**e``; raise ``ValueError`` otherwise."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e = 0
    rest = q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, e


# -- polynomials over GF(p), coefficient lists, lowest degree first -----------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_rem(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of ``a`` divided by monic ``b`` over GF(p)."""
    a = _trim([c % p for c in a])
    db = len(b) - 1
    while len(a) - 1 >= db:
        c = a[-1]
        shift = len(a) - 1 - db
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        _trim(a)
    return a


def is_irreducible(poly: list[int] | tuple[int, ...], p: int) -> bool:
    """Exhaustive test: a monic polynomial of degree m is irreducible iff no
    monic polynomial of degree 1..m//2 divides it."""
    poly = list(poly)
    m = len(poly) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    # degree-1 factors are roots
    for x in range(p):
        if sum(c * pow(x, i, p) for i, c in enumerate(poly)) % p == 0:
            return False
    for d in range(2, m // 2 + 1):
        for low in product(range(p), repeat=d):
            if not poly_rem(poly, list(low) + [1], p):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    p: int
    m: int
    modulus: tuple[int, ...]  # monic, length m + 1, lowest degree first

    @property
    def order(self) -> int:
        return self.p**self.m

    @property
    def zero(self) -> Element:
        return (0,) * self.m

    @property
    def one(self) -> Element:
        return (1,) + (0,) * (self.m - 1)

    def element(self, coeffs) -> Element:
        coeffs = tuple(coeffs)
        if len(coeffs) != self.m or any(not 0 <= c < self.p for c in coeffs):
            raise ValueError(f"{coeffs} is not an element of GF({self.p}^{self.m})")
        return coeffs

    def from_int(self, k: int) -> Element:
        """Element whose coefficients are the base-p digits of ``k``."""
        if not 0 <= k < self.order:
            raise ValueError(f"index {k} out of range")
        out = []
        for _ in range(self.m):
            k, c = divmod(k, self.p)
            out.append(c)
        return tuple(out)

    def to_int(self, x: Element) -> int:
        k = 0
        for c in reversed(x):
            k = k * self.p + c
        return k

    def elements(self):
        return (self.from_int(k) for k in range(self.order))


def field_make(p: int, m: int) -> FieldSpec:
    """GF(p^m) with the smallest monic irreducible modulus.

    Candidates ``x^m + c_{m-1} x^{m-1} + ... + c_0`` are scanned in increasing
    order of the integer ``sum c_i p^i``.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1:
        raise ValueError("extension degree must be at least 1")
    if p**m > MAX_FIELD_ORDER:
        raise OverflowError(f"field order {p}^{m} exceeds {MAX_FIELD_ORDER}")
    for k in range(p**m):
        low = []
        for _ in range(m):
            k, c = divmod(k, p)
            low.append(c)
        poly = low + [1]
        if is_irreducible(poly, p):
            return FieldSpec(p, m, tuple(poly))
    raise AssertionError("no irreducible polynomial found")  # unreachable


def field_add(spec: FieldSpec, x: Element, y: Element) -> Element:
    p = spec.p
    return tuple((a + b) % p for a, b in zip(x, y))


def field_neg(spec: FieldSpec, x: Element) -> Element:
    return tuple(-a % spec.p for a in x)


def field_sub(spec: FieldSpec, x: Element, y: Element) -> Element:
    return field_add(spec, x, field_neg(spec, y))


def field_mul(spec: FieldSpec, x: Element, y: Element) -> Element:
    p, m = spec.p, spec.m
    prod = [0] * (2 * m - 1)
    for i, a in enumerate(x):
        if a:
            for j, b in enumerate(y):
                prod[i + j] += a * b
    rem = poly_rem(prod, list(spec.modulus), p)
    return tuple(rem) + (0,) * (m - len(rem))


def field_pow(spec: FieldSpec, x: Element, k: int) -> Element:
    """``x**k`` by square-and-multiply; negative ``k`` inverts first."""
    if k < 0:
        x, k = field_inv(spec, x), -k
    result = spec.one
    base = x
    while k:
        if k & 1:
            result = field_mul(spec, result, base)
        base = field_mul(spec, base, base)
        k >>= 1
    return result


def field_inv(spec: FieldSpec, x: Element) -> Element:
    if not any(x):
        raise ZeroDivisionError("zero has no inverse")
    return field_pow(spec, x, spec.order - 2)


def subfield_degree(spec: FieldSpec, q: int) -> int:
    """``d`` with ``spec.order == q**d``, requiring GF(q) to be a subfield."""
    p, e = prime_power(q)
    if p != spec.p or spec.m % e:
        raise ValueError(f"GF({q}) is not a subfield of GF({spec.p}^{spec.m})")
    return spec.m // e


def norm_map(spec: FieldSpec, x: Element, q: int) -> Element:
    """Field norm GF(q^d) -> GF(q), ``N(x) = x^((q^d - 1) / (q - 1))``."""
    subfield_degree(spec, q)
    return field_pow(spec, x, (spec.order - 1) // (q - 1))


def multiplicative_order(spec: FieldSpec, x: Element) -> int:
    if not any(x):
        raise ValueError("zero has no multiplicative order")
    n = spec.order - 1
    order = n
    for ell in _prime_factors(n):
        while order % ell == 0 and field_pow(spec, x, order // ell) == spec.one:
            order //= ell
    return order


def primitive_element(spec: FieldSpec) -> Element:
    """Generator of the multiplicative group with the smallest integer index."""
    for k in range(1, spec.order):
        x = spec.from_int(k)
        if multiplicative_order(spec, x) == spec.order - 1:
            return x
    raise AssertionError("multiplicative group is cyclic")  # unreachable


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
