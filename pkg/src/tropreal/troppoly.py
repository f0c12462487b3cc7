"""Laurent polynomials with Puiseux coefficients and their tropical shadows.

:class:`PolyK` is a polynomial (integer exponents, possibly negative) in
n variables whose coefficients are finite Puiseux series; it is stored
expanded and normalized, with pairwise distinct exponent vectors and no
zero coefficients.  :class:`TropPoly` is its shadow over the signed
tropical hyperfield: same exponent vectors, coefficients replaced by their
signed values.  ``trop_r`` performs that replacement.

Evaluation conventions at zero coordinates: a factor x**0 contributes one,
x**d with d > 0 contributes zero (the term is skipped), and d < 0 raises
:class:`~tropreal.errors.NegativeExponentAtZero`.

Exact evaluation of a Laurent polynomial at Puiseux points avoids series
division: signs and signed values are computed through the cleared
polynomial f * x**m (sign-preserving even powers for signs, an exact
quotient of signed values for valuations).  ``eval_k`` returns the honest
series value and therefore supports negative exponents only where the
inverse stays finite, i.e. at monomial coordinates.

Everything is immutable; evaluation over shared polynomials is safe from
concurrent contexts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NegativeExponentAtZero
from .hyperfields import (
    HyperValue,
    SignedTropVal,
    hv_relation,
    rt_inv,
    rt_mul,
    rt_pow,
    rt_sum,
)
from .puiseux import PS_ONE, PuiseuxSeries

Exps = tuple[int, ...]
TropPoint = tuple[SignedTropVal, ...]


@dataclass(frozen=True)
class PolyK:
    """An expanded Laurent polynomial with Puiseux-series coefficients."""

    nvars: int
    terms: tuple[tuple[Exps, PuiseuxSeries], ...]

    @staticmethod
    def from_terms(
        nvars: int, pairs: Iterable[tuple[Sequence[int], PuiseuxSeries]]
    ) -> "PolyK":
        acc: dict[Exps, PuiseuxSeries] = {}
        for exps, coeff in pairs:
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise DimensionMismatch(f"exponent vector {exps} vs nvars {nvars}")
            acc[exps] = acc.get(exps, PuiseuxSeries.zero()) + coeff
        terms = tuple(sorted((e, c) for e, c in acc.items() if not c.is_zero()))
        return PolyK(nvars, terms)

    @staticmethod
    def zero(nvars: int) -> "PolyK":
        return PolyK(nvars, ())

    @staticmethod
    def const(nvars: int, c: PuiseuxSeries) -> "PolyK":
        return PolyK.from_terms(nvars, [((0,) * nvars, c)])

    @staticmethod
    def monomial(nvars: int, exps: Sequence[int], coeff: PuiseuxSeries) -> "PolyK":
        return PolyK.from_terms(nvars, [(tuple(exps), coeff)])

    @staticmethod
    def variable(nvars: int, k: int) -> "PolyK":
        exps = tuple(1 if i == k else 0 for i in range(nvars))
        return PolyK.from_terms(nvars, [(exps, PS_ONE)])

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "PolyK") -> "PolyK":
        self._check(other)
        return PolyK.from_terms(self.nvars, self.terms + other.terms)

    def __neg__(self) -> "PolyK":
        return PolyK(self.nvars, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "PolyK") -> "PolyK":
        return self + (-other)

    def __mul__(self, other: "PolyK") -> "PolyK":
        self._check(other)
        return PolyK.from_terms(
            self.nvars,
            (
                (tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
                for e1, c1 in self.terms
                for e2, c2 in other.terms
            ),
        )

    def __pow__(self, k: int) -> "PolyK":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        out = PolyK.const(self.nvars, PS_ONE)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c: PuiseuxSeries) -> "PolyK":
        return PolyK.from_terms(self.nvars, ((e, k * c) for e, k in self.terms))

    def shift(self, m: Sequence[int]) -> "PolyK":
        """Multiply by the monomial x**m (exponent shift)."""
        m = tuple(m)
        return PolyK(
            self.nvars,
            tuple(sorted((tuple(a + b for a, b in zip(e, m)), c) for e, c in self.terms)),
        )

    def min_exponents(self) -> Exps:
        """Componentwise minimum exponent over all terms (0 for the zero polynomial)."""
        if not self.terms:
            return (0,) * self.nvars
        return tuple(
            min(e[k] for e, _ in self.terms) for k in range(self.nvars)
        )

    def _check(self, other: "PolyK") -> None:
        if self.nvars != other.nvars:
            raise DimensionMismatch(f"nvars {self.nvars} vs {other.nvars}")


@dataclass(frozen=True)
class TropPoly:
    """A polynomial over the signed tropical hyperfield."""

    nvars: int
    terms: tuple[tuple[Exps, SignedTropVal], ...]

    @staticmethod
    def from_terms(
        nvars: int, pairs: Iterable[tuple[Sequence[int], SignedTropVal]]
    ) -> "TropPoly":
        seen: dict[Exps, SignedTropVal] = {}
        for exps, coeff in pairs:
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise DimensionMismatch(f"exponent vector {exps} vs nvars {nvars}")
            if coeff.sign == 0:
                continue
            if exps in seen:
                raise ValueError(f"duplicate exponent vector {exps}")
            seen[exps] = coeff
        return TropPoly(nvars, tuple(sorted(seen.items())))

    def neg(self) -> "TropPoly":
        from .hyperfields import rt_neg

        return TropPoly(self.nvars, tuple((e, rt_neg(c)) for e, c in self.terms))

    def text(self) -> str:
        """Rendering like 'X^2 (+) Y^2 (+) -X (+) -Y (+) 1'."""
        if not self.terms:
            return "0"
        names = _var_names(self.nvars)
        parts = []
        for exps, coeff in sorted(
            self.terms, key=lambda t: (-sum(t[0]), tuple(-e for e in t[0]))
        ):
            factors = []
            for name, d in zip(names, exps):
                if d == 1:
                    factors.append(name)
                elif d != 0:
                    factors.append(f"{name}^{d if d > 0 else f'({d})'}")
            sign = "-" if coeff.sign < 0 else ""
            if coeff.val == 0:
                coeff_part = "" if factors else "1"
            else:
                coeff_part = f"e^({-coeff.val})"
            body = "*".join(([coeff_part] if coeff_part else []) + factors)
            parts.append(sign + (body or "1"))
        return " (+) ".join(parts)


def _var_names(nvars: int) -> list[str]:
    if nvars <= 3:
        return ["X", "Y", "Z"][:nvars]
    return [f"X{i+1}" for i in range(nvars)]


def trop_r(f: PolyK) -> TropPoly:
    """Replace every coefficient by its signed value (terms mapping to zero drop out)."""
    return TropPoly.from_terms(
        f.nvars, ((exps, coeff.signed_trop()) for exps, coeff in f.terms)
    )


def _term_value(coeff: SignedTropVal, exps: Exps, p: TropPoint) -> SignedTropVal | None:
    """Signed value of coeff * p**exps; None when a zero coordinate kills the term."""
    acc = coeff
    for d, c in zip(exps, p):
        if d == 0:
            continue
        if c.sign == 0:
            if d < 0:
                raise NegativeExponentAtZero(
                    "negative exponent at a zero coordinate"
                )
            return None
        acc = rt_mul(acc, rt_pow(c, d))
    return acc


def trop_eval(F: TropPoly, p: TropPoint) -> HyperValue:
    """The multivalued value F(p), always a point or a balanced interval."""
    if len(p) != F.nvars:
        raise DimensionMismatch(f"point dim {len(p)} vs nvars {F.nvars}")
    vals = []
    for exps, coeff in F.terms:
        v = _term_value(coeff, exps, p)
        if v is not None:
            vals.append(v)
    return rt_sum(vals)


def trop_sat(F: TropPoly, p: TropPoint, rel: str) -> bool:
    """Whether F(p) satisfies the given relation against zero."""
    return hv_relation(trop_eval(F, p), rel)


def eval_k(f: PolyK, p: Sequence[PuiseuxSeries]) -> PuiseuxSeries:
    """Exact polynomial evaluation at a Puiseux point.

    Negative exponents are evaluated through exact monomial inversion and
    therefore require the corresponding coordinate to be a nonzero monomial
    series; a zero coordinate under a negative exponent raises.
    """
    p = tuple(p)
    if len(p) != f.nvars:
        raise DimensionMismatch(f"point dim {len(p)} vs nvars {f.nvars}")
    total = PuiseuxSeries.zero()
    for exps, coeff in f.terms:
        term = coeff
        dead = False
        for d, c in zip(exps, p):
            if d == 0:
                continue
            if c.is_zero():
                if d < 0:
                    raise NegativeExponentAtZero(
                        "negative exponent at a zero coordinate"
                    )
                dead = True
                break
            term = term * (c ** d)
        if not dead:
            total = total + term
    return total


def _cleared(f: PolyK) -> tuple[PolyK, Exps]:
    """f * x**m with m the smallest even shift making all exponents nonnegative."""
    mins = f.min_exponents()
    m = tuple((-mn + 1) // 2 * 2 if mn < 0 else 0 for mn in mins)
    return (f.shift(m) if any(m) else f), m


def laurent_sign(f: PolyK, p: Sequence[PuiseuxSeries]) -> int:
    """Exact sign of f(p) for Laurent f, via a sign-preserving even-power clearing."""
    p = tuple(p)
    if len(p) != f.nvars:
        raise DimensionMismatch(f"point dim {len(p)} vs nvars {f.nvars}")
    mins = f.min_exponents()
    for mn, c in zip(mins, p):
        if mn < 0 and c.is_zero():
            raise NegativeExponentAtZero("negative exponent at a zero coordinate")
    g, _ = _cleared(f)
    return eval_k(g, p).sign()


def signed_trop_of_value(f: PolyK, p: Sequence[PuiseuxSeries]) -> SignedTropVal:
    """Signed value of f(p), exact also for Laurent f at non-monomial coordinates.

    Uses f(p) = g(p) / x**m with g polynomial; the signed value of the
    quotient is the quotient of signed values.
    """
    p = tuple(p)
    if len(p) != f.nvars:
        raise DimensionMismatch(f"point dim {len(p)} vs nvars {f.nvars}")
    mins = f.min_exponents()
    for mn, c in zip(mins, p):
        if mn < 0 and c.is_zero():
            raise NegativeExponentAtZero("negative exponent at a zero coordinate")
    g, m = _cleared(f)
    out = eval_k(g, p).signed_trop()
    for mk, c in zip(m, p):
        if mk:
            out = rt_mul(out, rt_pow(rt_inv(c.signed_trop()), mk))
    return out


def trop_point(p: Sequence[PuiseuxSeries]) -> TropPoint:
    """Componentwise signed values of a Puiseux point."""
    return tuple(c.signed_trop() for c in p)


def trop_family(fs: Sequence[PolyK], p: Sequence[PuiseuxSeries]) -> TropPoint:
    """Signed values of (f_1(p), ..., f_m(p)): the finite-family tropicalization at p."""
    return tuple(signed_trop_of_value(f, p) for f in fs)


def poly_from_rationals(
    nvars: int, entries: Iterable[tuple[Sequence[int], int | str | Fraction]]
) -> PolyK:
    """Convenience builder for polynomials with rational constant coefficients."""
    return PolyK.from_terms(
        nvars,
        ((exps, PuiseuxSeries.const(Fraction(c))) for exps, c in entries),
    )
