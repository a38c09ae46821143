"""Closed-form bound expressions for ex(n, K_r, (t+1)K_{a,b}) and
ex(n, K_r, (t+1)C_2k).

The K_{a,b} expressions are asymptotic: each summand carries a ``(1/s! + o(1))``
factor in its source statement.  Here the ``o(1)`` is dropped, so the returned
value is the leading-order envelope and is flagged as such.  The C_2k sums are
exact integers once the ex-values are known.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial

import mpmath

PRECISION_BITS = 96  # round-half-even, mpmath default rounding

_ctx = mpmath.MPContext()
_ctx.prec = PRECISION_BITS


class RegimeError(ValueError):
    """Parameters lie outside the hypotheses of the bound."""


@dataclass(frozen=True)
class KabBoundParams:
    n: int
    t: int
    r: int
    a: int
    b: int

    def regime_violations(self) -> list[str]:
        out = []
        if not self.t >= self.r >= 3:
            out.append("need t >= r >= 3")
        if self.a < 2 * (self.r - 1):
            out.append("need a >= 2(r-1)")
        if self.b < factorial(max(self.a - 1, 0)) + 1:
            out.append("need b >= (a-1)! + 1")
        if self.n <= self.t:
            out.append("need n > t")
        return out


@dataclass(frozen=True)
class BoundValue:
    value: mpmath.mpf
    terms: tuple = field(repr=False)
    asymptotic_envelope: bool = True
    in_regime: bool = True

    @property
    def label(self) -> str:
        return "in theorem regime" if self.in_regime else "out of theorem regime"

    def __float__(self) -> float:
        return float(self.value)

    def to_json(self) -> dict:
        return {
            "value": float(self.value),
            "value_str": _ctx.nstr(self.value, 25),
            "asymptotic-envelope": self.asymptotic_envelope,
            "regime": self.label,
        }


def _check(p: KabBoundParams, override: bool) -> bool:
    bad = p.regime_violations()
    if bad and not override:
        raise RegimeError("; ".join(bad))
    if p.n < p.t or min(p.t, p.r, p.a, p.b) < 0 or p.a == 0:
        raise RegimeError("n >= t and positive a are required even with override")
    return not bad


def _term(t: int, r: int, s: int, a: int, b_minus_1: int | None, m: int):
    # binom(t, r-s) / s! * (b-1)^(s(s-1)/2a) * m^(s - s(s-1)/2a)
    ctx = _ctx
    e = ctx.mpf(s * (s - 1)) / (2 * a)
    term = ctx.mpf(comb(t, r - s)) / factorial(s) * ctx.power(m, s - e)
    if b_minus_1 is not None:
        term *= ctx.power(b_minus_1, e)
    return term


def _kab_sum(p: KabBoundParams, with_b: bool, override: bool) -> BoundValue:
    ok = _check(p, override)
    m = p.n - p.t
    terms = tuple(
        _term(p.t, p.r, s, p.a, p.b - 1 if with_b else None, m) for s in range(p.r + 1)
    )
    return BoundValue(_ctx.fsum(terms), terms, True, ok)


def thm1_upper(p: KabBoundParams, override: bool = False) -> BoundValue:
    """Upper envelope ``sum_s binom(t, r-s) (1/s!) (b-1)^(s(s-1)/2a) (n-t)^(s - s(s-1)/2a)``."""
    return _kab_sum(p, True, override)


def thm1_lower(p: KabBoundParams, override: bool = False) -> BoundValue:
    """Lower envelope: the upper envelope without the ``(b-1)`` factors."""
    return _kab_sum(p, False, override)


def as_bound(n: int, r: int, a: int, b: int, override: bool = False) -> BoundValue:
    """Clique bound for K_{a,b}-free graphs, ``(1/r!) (b-1)^(r(r-1)/2a) n^(r - r(r-1)/2a)``."""
    ok = b >= a >= r - 1 and r >= 0
    if not ok and not override:
        raise RegimeError("need b >= a >= r-1")
    if a < 1 or n < 0 or r < 0:
        raise RegimeError("need a >= 1, n >= 0, r >= 0")
    e = _ctx.mpf(r * (r - 1)) / (2 * a)
    v = _ctx.power(b - 1, e) * _ctx.power(n, r - e) / factorial(r)
    return BoundValue(v, (v,), True, ok)


@dataclass(frozen=True)
class C2kBoundInputs:
    """``ex_values[i] = ex(n - t, K_i, C_2k)`` for ``i = 0..r``."""

    t: int
    r: int
    ex_values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "ex_values", tuple(int(v) for v in self.ex_values))
        if self.t < 0 or self.r < 0:
            raise ValueError("t and r must be non-negative")
        if len(self.ex_values) < self.r + 1:
            raise ValueError(
                f"ex_values needs entries 0..{self.r}, got {len(self.ex_values)}"
            )
        if self.ex_values[0] != 1:
            raise ValueError("ex_values[0] must be 1")

    @property
    def m(self) -> int:
        """``n - t``, read off ``ex_values[1]``."""
        return self.ex_values[1] if len(self.ex_values) > 1 else 0

    @property
    def in_regime(self) -> bool:
        return self.t >= self.r >= 3


def thm2_upper(c: C2kBoundInputs) -> int:
    return sum(comb(c.t, c.r - i) * c.ex_values[i] for i in range(c.r + 1))


def thm2_lower(c: C2kBoundInputs) -> int:
    base = comb(c.t, c.r)
    if c.r >= 1:
        base += comb(c.t, c.r - 1) * c.m
    best = max((comb(c.t, c.r - s) * c.ex_values[s] for s in range(2, c.r + 1)), default=0)
    return base + best


def best_single_index(c: C2kBoundInputs) -> int | None:
    """Smallest ``s`` in ``2..r`` maximising ``binom(t, r-s) ex_values[s]``."""
    if c.r < 2:
        return None
    vals = [comb(c.t, c.r - s) * c.ex_values[s] for s in range(2, c.r + 1)]
    return 2 + vals.index(max(vals))

