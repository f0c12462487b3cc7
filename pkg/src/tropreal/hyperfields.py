"""Exact arithmetic for the sign, tropical, and signed tropical hyperfields.

A hyperfield is a field-like structure whose addition may be multivalued.
Three concrete hyperfields are implemented here, all over exact rational
data:

* the *sign hyperfield* on {-1, 0, +1}, where adding opposite signs is
  indeterminate and yields the whole set;
* the *tropical hyperfield* of magnitudes, kept in valuation coordinates:
  a magnitude is e**(-v) for v in Q ∪ {+inf}, with v = +inf playing the
  role of zero.  Smaller valuation means larger magnitude.  Adding two
  distinct magnitudes keeps the dominant (smaller-valuation) one; adding a
  magnitude to itself yields every magnitude up to that bound;
* the *signed tropical hyperfield* combining both: an element is a pair
  (sign, valuation) standing for the real number sign * e**(-v).  Dominance
  decides sums of unequal magnitudes; equal magnitudes with equal signs are
  absorbing; equal magnitudes with opposite signs yield the *balanced*
  interval of everything of that magnitude or smaller.

The multivalued sum of signed tropical elements is therefore always either
a single point or a balanced interval, and :class:`HyperValue` captures
exactly these two cases.  Balanced intervals are stored by their valuation
bound alone; the member set {p : p.val >= v} ∪ {0} is implicit.

Valuations never leave Q ∪ {+inf}; the transcendental e**(-v) appears only
in rendering code.  All values are immutable and all operations are pure,
so everything here is safe to share across threads.

Relations against zero follow the region conventions used by the rest of
the package: a value is == 0 when it is balanced or the zero point, >= 0
when it is balanced or a point of sign 0/+, and > 0 only when it is a
positive point.  The relations <= 0 and < 0 are *defined* by negating the
value first, and != 0 as the complement of == 0; only the first three are
primitive notions here, the rest is a documented convention choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union


class _PlusInfinity:
    """The valuation of zero; compares greater than every rational."""

    _instance = None
    __slots__ = ()

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "inf"

    def __eq__(self, other) -> bool:
        return isinstance(other, _PlusInfinity)

    def __hash__(self) -> int:
        return hash("tropreal-inf")

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return isinstance(other, _PlusInfinity)

    def __gt__(self, other) -> bool:
        if isinstance(other, _PlusInfinity):
            return False
        return True

    def __ge__(self, other) -> bool:
        return True


INF = _PlusInfinity()

Val = Union[Fraction, _PlusInfinity]


def as_val(v) -> Val:
    """Coerce ints/strings to an exact valuation; 'inf' and INF pass through."""
    if v is INF or isinstance(v, _PlusInfinity):
        return INF
    if isinstance(v, str):
        if v.strip() in ("inf", "+inf", "oo"):
            return INF
        return Fraction(v)
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"not a valuation: {v!r}")


def val_add(a: Val, b: Val) -> Val:
    if a is INF or b is INF:
        return INF
    return a + b


def val_scale(d: int, v: Val) -> Val:
    """d * v for integer d; requires d > 0 when v is +inf."""
    if v is INF:
        if d <= 0:
            raise ValueError("cannot scale an infinite valuation by d <= 0")
        return INF
    return d * v


def val_min(vals: Iterable[Val]) -> Val:
    m: Val = INF
    for v in vals:
        if v < m:
            m = v
    return m


@dataclass(frozen=True)
class SignedTropVal:
    """An element of the signed tropical hyperfield: sign * e**(-val).

    Invariant: sign == 0 exactly when val is +inf (the zero element).
    """

    sign: int
    val: Val

    def __post_init__(self):
        object.__setattr__(self, "val", as_val(self.val))
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or 1, got {self.sign}")
        if (self.sign == 0) != (self.val is INF):
            raise ValueError("sign is 0 exactly for the zero element (val = +inf)")

    def is_zero(self) -> bool:
        return self.sign == 0

    def __repr__(self) -> str:
        return f"({'+' if self.sign > 0 else '-' if self.sign < 0 else '0'},{self.val})"


RT_ZERO = SignedTropVal(0, INF)
RT_ONE = SignedTropVal(1, Fraction(0))
RT_MINUS_ONE = SignedTropVal(-1, Fraction(0))


def stv(sign: int, val) -> SignedTropVal:
    """Shorthand constructor accepting ints and strings for the valuation."""
    return SignedTropVal(sign, as_val(val))


def rt_mul(a: SignedTropVal, b: SignedTropVal) -> SignedTropVal:
    if a.sign == 0 or b.sign == 0:
        return RT_ZERO
    return SignedTropVal(a.sign * b.sign, val_add(a.val, b.val))


def rt_neg(a: SignedTropVal) -> SignedTropVal:
    if a.sign == 0:
        return a
    return SignedTropVal(-a.sign, a.val)


def rt_inv(a: SignedTropVal) -> SignedTropVal:
    """Multiplicative inverse; undefined for zero."""
    if a.sign == 0:
        raise ZeroDivisionError("zero has no multiplicative inverse")
    return SignedTropVal(a.sign, -a.val)


def rt_pow(a: SignedTropVal, d: int) -> SignedTropVal:
    """a**d with the convention a**0 = 1 (also for a = 0)."""
    if d == 0:
        return RT_ONE
    if a.sign == 0:
        if d < 0:
            raise ZeroDivisionError("negative power of zero")
        return RT_ZERO
    sign = a.sign if d % 2 else 1
    return SignedTropVal(sign, a.val * d)


@dataclass(frozen=True)
class Point:
    """A single-valued hyperfield sum."""

    value: SignedTropVal

    def __repr__(self) -> str:
        return f"Point{self.value!r}"


@dataclass(frozen=True)
class Balanced:
    """The interval [-e**(-val), e**(-val)]: all points of valuation >= val, and zero."""

    val: Fraction

    def __post_init__(self):
        v = as_val(self.val)
        if v is INF:
            raise ValueError("a balanced interval has a finite valuation bound")
        object.__setattr__(self, "val", v)

    def __repr__(self) -> str:
        return f"Balanced({self.val})"


HyperValue = Union[Point, Balanced]

HV_ZERO = Point(RT_ZERO)


def hv_point(sign: int, val) -> HyperValue:
    return Point(stv(sign, val))


def rt_add(a: HyperValue, b: HyperValue) -> HyperValue:
    """Set-lifted signed tropical addition; closed on points and balanced intervals."""
    if isinstance(a, Balanced) and isinstance(b, Balanced):
        return Balanced(min(a.val, b.val))
    if isinstance(a, Balanced):
        a, b = b, a
    if isinstance(b, Balanced):
        # a point strictly dominating the interval survives; otherwise it is absorbed
        if a.value.val < b.val:
            return a
        return b
    p, q = a.value, b.value
    if p.val < q.val:
        return a
    if q.val < p.val:
        return b
    if p.val is INF:
        return HV_ZERO
    if p.sign == q.sign:
        return a
    return Balanced(p.val)


def rt_sum(terms: Iterable[SignedTropVal]) -> HyperValue:
    """n-ary sum: dominant-valuation terms decide; mixed signs at the minimum balance."""
    m: Val = INF
    signs: set[int] = set()
    for t in terms:
        if t.sign == 0:
            continue
        if t.val < m:
            m = t.val
            signs = {t.sign}
        elif t.val == m and m is not INF:
            signs.add(t.sign)
    if m is INF:
        return HV_ZERO
    if len(signs) == 1:
        return Point(SignedTropVal(signs.pop(), m))
    return Balanced(m)


def hv_neg(h: HyperValue) -> HyperValue:
    if isinstance(h, Balanced):
        return h
    return Point(rt_neg(h.value))


def hv_scale(x: SignedTropVal, h: HyperValue) -> HyperValue:
    """The set {x * w : w in h}, again a HyperValue."""
    if x.sign == 0:
        return HV_ZERO
    if isinstance(h, Balanced):
        return Balanced(h.val + x.val)
    return Point(rt_mul(x, h.value))


def hv_contains(h: HyperValue, p: SignedTropVal) -> bool:
    if isinstance(h, Point):
        return h.value == p
    return p.val >= h.val


_REL_ALIASES = {
    "eq": "eq", "=": "eq", "==": "eq", "=0": "eq",
    "ge": "ge", ">=": "ge", "≥": "ge", ">=0": "ge",
    "gt": "gt", ">": "gt", ">0": "gt",
    "le": "le", "<=": "le", "≤": "le", "<=0": "le",
    "lt": "lt", "<": "lt", "<0": "lt",
    "ne": "ne", "!=": "ne", "≠": "ne", "!=0": "ne",
}

RELATIONS = ("eq", "ge", "gt", "le", "lt", "ne")


def normalize_rel(rel: str) -> str:
    try:
        return _REL_ALIASES[rel.strip()]
    except KeyError:
        raise ValueError(f"unknown relation {rel!r}") from None


def rel_negate(rel: str) -> str:
    """The relation satisfied by -x when x satisfies rel."""
    return {"eq": "eq", "ge": "le", "gt": "lt", "le": "ge", "lt": "gt", "ne": "ne"}[
        normalize_rel(rel)
    ]


def hv_relation(h: HyperValue, rel: str) -> bool:
    """Compare a hyperfield sum against zero.

    ==0 holds for balanced intervals and the zero point; >=0 when the value
    contains a nonnegative number; >0 only for a positive point.  <=0, <0
    apply >=0, >0 to the negated value, and !=0 is the complement of ==0.
    """
    rel = normalize_rel(rel)
    if rel == "le":
        return hv_relation(hv_neg(h), "ge")
    if rel == "lt":
        return hv_relation(hv_neg(h), "gt")
    if rel == "ne":
        return not hv_relation(h, "eq")
    balanced = isinstance(h, Balanced)
    if rel == "eq":
        return balanced or h.value.sign == 0
    if rel == "ge":
        return balanced or h.value.sign >= 0
    if rel == "gt":
        return (not balanced) and h.value.sign > 0
    raise AssertionError(rel)


# ---------------------------------------------------------------------------
# The tropical hyperfield of magnitudes, in valuation coordinates.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ValPoint:
    """A single magnitude, as a valuation in Q ∪ {+inf}."""

    val: Val

    def __post_init__(self):
        object.__setattr__(self, "val", as_val(self.val))

    def __repr__(self) -> str:
        return f"val({self.val})"


@dataclass(frozen=True)
class ValUpSet:
    """All magnitudes of valuation >= low, including zero (val = +inf)."""

    low: Fraction

    def __post_init__(self):
        v = as_val(self.low)
        if v is INF:
            raise ValueError("an up-set has a finite lower valuation bound")
        object.__setattr__(self, "low", v)

    def __repr__(self) -> str:
        return f"val[{self.low}, inf]"


TropSum = Union[ValPoint, ValUpSet]


def t_add(a: Val, b: Val) -> TropSum:
    """Tropical addition of magnitudes: distinct valuations keep the smaller;
    equal finite valuations yield the whole up-set [v, +inf]."""
    a, b = as_val(a), as_val(b)
    if a < b:
        return ValPoint(a)
    if b < a:
        return ValPoint(b)
    if a is INF:
        return ValPoint(INF)
    return ValUpSet(a)


def t_add_sets(a: TropSum, b: TropSum) -> TropSum:
    """Set-lifted tropical addition; closed on points and up-sets."""
    if isinstance(a, ValUpSet) and isinstance(b, ValUpSet):
        return ValUpSet(min(a.low, b.low))
    if isinstance(a, ValUpSet):
        a, b = b, a
    if isinstance(b, ValUpSet):
        if a.val < b.low:
            return a
        return b
    return t_add(a.val, b.val)


def t_contains(s: TropSum, v: Val) -> bool:
    v = as_val(v)
    if isinstance(s, ValPoint):
        return s.val == v
    return v >= s.low


# ---------------------------------------------------------------------------
# The sign hyperfield.
# ---------------------------------------------------------------------------

S_ALL = frozenset({-1, 0, 1})


def s_add(a: int, b: int) -> frozenset[int]:
    """Sign addition: zero is neutral, equal signs absorb, opposite signs blur."""
    if a == 0:
        return frozenset({b})
    if b == 0:
        return frozenset({a})
    if a == b:
        return frozenset({a})
    return S_ALL


def s_add_sets(a: frozenset[int], b: frozenset[int]) -> frozenset[int]:
    out: set[int] = set()
    for x in a:
        for y in b:
            out |= s_add(x, y)
    return frozenset(out)


def s_mul(a: int, b: int) -> int:
    return a * b
