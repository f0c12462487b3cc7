"""Finite real Puiseux series with rational data, and their signed values.

A series here is a finite sum of terms c * t**e with rational coefficients
c and rational exponents e, kept in a unique normal form (strictly
increasing exponents, no zero coefficients).  Finite series are closed
under ring operations and integer powers, so all arithmetic is exact; no
truncation bookkeeping is ever needed.  Division is deliberately absent --
inverting a general series needs an infinite tail -- except for the exact
special case of a single-term series.

The parameter t is an infinitesimal: the series are ordered by their
leading (smallest-exponent) term, positive series being those with a
positive leading coefficient.  The valuation of a series is its leading
exponent (+inf for zero), its magnitude is e**(-valuation), and its signed
value is the pair (sign of leading coefficient, valuation), an element of
the signed tropical hyperfield of :mod:`tropreal.hyperfields`.

The sampler draws series from a bounded rational grid, stratified over
leading exponents so that signed values of samples spread across the whole
configured valuation window rather than clustering at generic values.
Sampler state is confined to an explicitly passed generator; use
independent seeds for concurrent sampling.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd
from typing import Iterable, Optional, Union

from .errors import PuiseuxDivisionError
from .hyperfields import INF, SignedTropVal, Val, stv

_RatLike = Union[int, str, Fraction]


def _frac(x: _RatLike) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class PuiseuxSeries:
    """A finite formal sum of c * t**e terms in normal form."""

    terms: tuple[tuple[Fraction, Fraction], ...]  # (exponent, coefficient), exponents increasing

    @staticmethod
    def from_terms(pairs: Iterable[tuple[_RatLike, _RatLike]]) -> "PuiseuxSeries":
        """Build a series from (exponent, coefficient) pairs, normalizing."""
        acc: dict[Fraction, Fraction] = {}
        for e, c in pairs:
            e, c = _frac(e), _frac(c)
            acc[e] = acc.get(e, Fraction(0)) + c
        norm = tuple(sorted((e, c) for e, c in acc.items() if c != 0))
        return PuiseuxSeries(norm)

    @staticmethod
    def zero() -> "PuiseuxSeries":
        return PuiseuxSeries(())

    @staticmethod
    def const(c: _RatLike) -> "PuiseuxSeries":
        c = _frac(c)
        return PuiseuxSeries(((Fraction(0), c),) if c != 0 else ())

    @staticmethod
    def one() -> "PuiseuxSeries":
        return PuiseuxSeries.const(1)

    @staticmethod
    def t_power(e: _RatLike, c: _RatLike = 1) -> "PuiseuxSeries":
        c = _frac(c)
        if c == 0:
            return PuiseuxSeries(())
        return PuiseuxSeries(((_frac(e), c),))

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def leading(self) -> Optional[tuple[Fraction, Fraction]]:
        return self.terms[0] if self.terms else None

    def val(self) -> Val:
        return self.terms[0][0] if self.terms else INF

    def sign(self) -> int:
        if not self.terms:
            return 0
        c = self.terms[0][1]
        return 1 if c > 0 else -1

    def signed_trop(self) -> SignedTropVal:
        """The signed value: (sign of leading coefficient, leading exponent)."""
        if not self.terms:
            return stv(0, INF)
        e, c = self.terms[0]
        return stv(1 if c > 0 else -1, e)

    def exponent_denominator(self) -> int:
        """Least common denominator of all exponents (1 for the zero series)."""
        d = 1
        for e, _ in self.terms:
            d = d * e.denominator // gcd(d, e.denominator)
        return d

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        return PuiseuxSeries.from_terms(self.terms + other.terms)

    def __neg__(self) -> "PuiseuxSeries":
        return PuiseuxSeries(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        return self + (-other)

    def __mul__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        return PuiseuxSeries.from_terms(
            (e1 + e2, c1 * c2) for e1, c1 in self.terms for e2, c2 in other.terms
        )

    def scale(self, c: _RatLike) -> "PuiseuxSeries":
        c = _frac(c)
        if c == 0:
            return PuiseuxSeries(())
        return PuiseuxSeries(tuple((e, c * k) for e, k in self.terms))

    def __pow__(self, k: int) -> "PuiseuxSeries":
        if not isinstance(k, int):
            raise ValueError("series powers must be integers")
        if k < 0:
            return self.inverse() ** (-k)
        out = PuiseuxSeries.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "PuiseuxSeries":
        """Exact inverse, available only for single-term series."""
        if not self.is_monomial():
            raise PuiseuxDivisionError(
                "only monomial series have a finite exact inverse"
            )
        e, c = self.terms[0]
        return PuiseuxSeries(((-e, 1 / c),))

    # -- order -------------------------------------------------------------

    def cmp(self, other: "PuiseuxSeries") -> int:
        """-1, 0, or 1: the unique field order (positive = positive leading coefficient)."""
        return (self - other).sign()

    def __lt__(self, other):
        return self.cmp(other) < 0

    def __le__(self, other):
        return self.cmp(other) <= 0

    def __gt__(self, other):
        return self.cmp(other) > 0

    def __ge__(self, other):
        return self.cmp(other) >= 0

    def __repr__(self) -> str:
        return f"PuiseuxSeries({self.text()})"

    def text(self) -> str:
        """Human-readable form like '2 - 1/3*t^(1/2) + t^2'."""
        if not self.terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self.terms):
            neg = c < 0
            mag = -c if neg else c
            if e == 0:
                body = str(mag)
            else:
                exp = str(e) if e.denominator == 1 and e >= 0 else f"({e})"
                tpart = "t" if e == 1 else f"t^{exp}"
                body = tpart if mag == 1 else f"{mag}*{tpart}"
            if i == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)


PS_ZERO = PuiseuxSeries.zero()
PS_ONE = PuiseuxSeries.one()


def ps_cmp(a: PuiseuxSeries, b: PuiseuxSeries) -> int:
    return a.cmp(b)


def signed_trop(a: PuiseuxSeries) -> SignedTropVal:
    return a.signed_trop()


# ---------------------------------------------------------------------------
# Sampling
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SamplerConfig:
    """Bounds and seed for the stratified series sampler.

    Exponents are drawn from the rational grid of the given range with
    denominators up to ``exponent_denominator_bound``; coefficients come
    from the analogous grid of ``coeff_range`` minus zero.
    """

    max_terms: int = 3
    exponent_denominator_bound: int = 2
    exponent_range: tuple[Fraction, Fraction] = (Fraction(-2), Fraction(2))
    coeff_range: tuple[Fraction, Fraction] = (Fraction(-4), Fraction(4))
    seed: int = 0

    def __post_init__(self):
        if self.max_terms < 1:
            raise ValueError("max_terms must be positive")
        if self.exponent_denominator_bound < 1:
            raise ValueError("exponent_denominator_bound must be positive")
        lo, hi = self.exponent_range
        object.__setattr__(self, "exponent_range", (_frac(lo), _frac(hi)))
        lo, hi = self.coeff_range
        object.__setattr__(self, "coeff_range", (_frac(lo), _frac(hi)))
        if self.exponent_range[0] > self.exponent_range[1]:
            raise ValueError("empty exponent range")
        if self.coeff_range[0] > self.coeff_range[1]:
            raise ValueError("empty coefficient range")


def _grid_draw(rng: random.Random, lo: Fraction, hi: Fraction, dbound: int) -> Fraction:
    """Uniform draw from {k/q : lo <= k/q <= hi} for a random q <= dbound."""
    q = rng.randint(1, dbound)
    lo_n, hi_n = ceil(lo * q), floor(hi * q)
    if lo_n > hi_n:  # grid for this q misses the window; denominator 1..dbound lcm helps
        q = dbound
        lo_n, hi_n = ceil(lo * q), floor(hi * q)
        if lo_n > hi_n:
            raise ValueError("rational grid is empty in the configured range")
    return Fraction(rng.randint(lo_n, hi_n), q)


def _nonzero_coeff(rng: random.Random, cfg: SamplerConfig) -> Fraction:
    lo, hi = cfg.coeff_range
    for _ in range(64):
        c = _grid_draw(rng, lo, hi, cfg.exponent_denominator_bound)
        if c != 0:
            return c
    raise ValueError("coefficient range contains only zero")


def ps_sample(cfg: SamplerConfig, rng: Optional[random.Random] = None) -> PuiseuxSeries:
    """Draw one nonzero series; deterministic for a fixed config when rng is None.

    The leading exponent is drawn uniformly from the configured rational
    grid (valuation stratification); further exponents, when any, are drawn
    from the same grid above the leading one.
    """
    if rng is None:
        rng = random.Random(cfg.seed)
    lo, hi = cfg.exponent_range
    n_terms = rng.randint(1, cfg.max_terms)
    lead = _grid_draw(rng, lo, hi, cfg.exponent_denominator_bound)
    exps = {lead}
    for _ in range((n_terms - 1) * 4):
        if len(exps) >= n_terms:
            break
        e = _grid_draw(rng, lo, hi, cfg.exponent_denominator_bound)
        if e > lead:
            exps.add(e)
    return PuiseuxSeries.from_terms((e, _nonzero_coeff(rng, cfg)) for e in sorted(exps))
