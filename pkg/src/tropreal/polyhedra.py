"""Exact rational polyhedra in valuation coordinates, and tropical regions.

Polyhedra are stored in H-representation with integer normals and rational
offsets; every constraint means ``normal . x + offset <= 0`` or ``< 0``.
Emptiness, inclusion, dimension, recession, and projection are all decided
by Fourier-Motzkin elimination with strictness tracking: a derived
inequality is strict precisely when one of its parents is.  This is exact
over the rationals and, since the data is rational, the answers agree with
the answers over the reals.

The module also hosts the two bridges between polyhedra and tropical
polynomials:

* ``trop_region`` turns a tropical polynomial, an orthant, and a relation
  against zero into the exact region of valuation vectors satisfying it,
  assembled from dominance cells of the polynomial's terms;
* ``open_poly_to_trop`` goes the other way for open polyhedra, producing a
  polynomial that is positive exactly on the polyhedron.  Its input is
  read in log-magnitude coordinates X, where the tropical point with
  valuations -X corresponds to X (see the function docstring).

Cell enumeration is a recursive sign-vector search with emptiness pruning.
This is the simple exact method; it is entirely adequate at the intended
input sizes (around a dozen forms) and keeps every decision rational.

Everything is immutable and pure; cell searches may be fanned out
concurrently as long as results are merged as sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

from .errors import (
    DimensionMismatch,
    EmptyPolyhedron,
    NegativeExponentAtZero,
    NotClosedInput,
    ShapeMismatch,
)
from .hyperfields import SignedTropVal, normalize_rel, stv
from .troppoly import TropPoint, TropPoly

Row = tuple[tuple[int, ...], Fraction, bool]  # normal, offset, strict


@dataclass(frozen=True)
class AffineForm:
    """normal . x + offset, with integer normal and rational offset."""

    normal: tuple[int, ...]
    offset: Fraction

    def __post_init__(self):
        object.__setattr__(self, "normal", tuple(int(a) for a in self.normal))
        object.__setattr__(self, "offset", Fraction(self.offset))

    def value(self, x: Sequence[Fraction]) -> Fraction:
        if len(x) != len(self.normal):
            raise DimensionMismatch("point dimension does not match form")
        return sum((a * xi for a, xi in zip(self.normal, x)), self.offset)

    def negated(self) -> "AffineForm":
        return AffineForm(tuple(-a for a in self.normal), -self.offset)


@dataclass(frozen=True)
class Constraint:
    """form(x) <= 0, or form(x) < 0 when strict."""

    form: AffineForm
    strict: bool = False

    def holds(self, x: Sequence[Fraction]) -> bool:
        v = self.form.value(x)
        return v < 0 if self.strict else v <= 0

    def negated(self) -> "Constraint":
        return Constraint(self.form.negated(), not self.strict)

    def row(self) -> Row:
        return (self.form.normal, self.form.offset, self.strict)


def constraint(normal: Sequence[int], offset, rel: str = "<=") -> Constraint:
    """Constraint builder accepting <=, <, >=, > against zero."""
    form = AffineForm(tuple(normal), Fraction(offset))
    rel = rel.strip()
    if rel in ("<=", "le"):
        return Constraint(form, False)
    if rel in ("<", "lt"):
        return Constraint(form, True)
    if rel in (">=", "ge"):
        return Constraint(form.negated(), False)
    if rel in (">", "gt"):
        return Constraint(form.negated(), True)
    raise ValueError(f"unknown constraint relation {rel!r}")


def _scale_point(x: Sequence[Fraction]) -> tuple[tuple[int, ...], int]:
    """Represent a rational point as integers over a common denominator."""
    fr = [v if isinstance(v, Fraction) else Fraction(v) for v in x]
    den = 1
    for v in fr:
        den = den * v.denominator // gcd(den, v.denominator)
    return tuple(v.numerator * (den // v.denominator) for v in fr), den


@dataclass(frozen=True)
class Polyhedron:
    """A finite intersection of rational halfspaces, possibly with strict facets."""

    dim: int
    constraints: tuple[Constraint, ...]

    def __post_init__(self):
        rows = []
        for c in self.constraints:
            if len(c.form.normal) != self.dim:
                raise DimensionMismatch("constraint dimension mismatch")
            off = c.form.offset
            rows.append((c.form.normal, off.numerator, off.denominator, c.strict))
        object.__setattr__(self, "_int_rows", tuple(rows))

    def contains(self, x: Sequence[Fraction]) -> bool:
        if len(x) != self.dim:
            raise DimensionMismatch("point dimension does not match polyhedron")
        xi, den = _scale_point(x)
        return self._contains_scaled(xi, den)

    def _contains_scaled(self, xi: tuple[int, ...], den: int) -> bool:
        # integer-only test of normal.x/den + off_n/off_d (<|<=) 0
        for normal, off_n, off_d, strict in self._int_rows:
            dot = 0
            for a, p in zip(normal, xi):
                if a:
                    dot += a * p
            v = dot * off_d + off_n * den
            if v > 0 or (strict and v == 0):
                return False
        return True

    def closure(self) -> "Polyhedron":
        return Polyhedron(
            self.dim, tuple(Constraint(c.form, False) for c in self.constraints)
        )

    def strict_version(self) -> "Polyhedron":
        return Polyhedron(
            self.dim, tuple(Constraint(c.form, True) for c in self.constraints)
        )

    def intersect(self, other: "Polyhedron") -> "Polyhedron":
        if self.dim != other.dim:
            raise DimensionMismatch("cannot intersect different dimensions")
        return Polyhedron(self.dim, self.constraints + other.constraints)

    def is_open(self) -> bool:
        return all(c.strict for c in self.constraints)

    def is_closed_form(self) -> bool:
        return all(not c.strict for c in self.constraints)


def whole_space(dim: int) -> Polyhedron:
    return Polyhedron(dim, ())


def point_polyhedron(coords: Sequence[Fraction]) -> Polyhedron:
    """The single point {coords} as a closed polyhedron."""
    coords = tuple(Fraction(c) for c in coords)
    n = len(coords)
    cons = []
    for k, v in enumerate(coords):
        unit = tuple(1 if i == k else 0 for i in range(n))
        cons.append(constraint(unit, -v, "<="))
        cons.append(constraint(unit, -v, ">="))
    return Polyhedron(n, tuple(cons))


# ---------------------------------------------------------------------------
# Fourier-Motzkin core
# ---------------------------------------------------------------------------


# internal integer rows: (normal, offset numerator, offset denominator > 0, strict)
IntRow = tuple[tuple[int, ...], int, int, bool]


def _to_int_rows(rows: Iterable[Row]) -> list[IntRow]:
    out = []
    for normal, c, strict in rows:
        c = Fraction(c)
        out.append((normal, c.numerator, c.denominator, strict))
    return out


def _from_int_rows(rows: Iterable[IntRow]) -> list[Row]:
    return [(n, Fraction(cn, cd), s) for n, cn, cd, s in rows]


def _normalize_rows(rows: Iterable[IntRow]) -> Optional[list[IntRow]]:
    """Primitive-direction dedup keeping the strongest constraint.

    Returns None when a constant constraint is violated (infeasible).
    """
    best: dict[tuple[int, ...], tuple[int, int, bool]] = {}
    for normal, cn, cd, strict in rows:
        if not any(normal):
            if cn > 0 or (strict and cn == 0):
                return None
            continue
        g = 0
        for a in normal:
            g = gcd(g, abs(a))
        if g > 1:
            normal = tuple(a // g for a in normal)
            cd = cd * g
        gg = gcd(abs(cn), cd)
        if gg > 1:
            cn //= gg
            cd //= gg
        prev = best.get(normal)
        if prev is None:
            best[normal] = (cn, cd, strict)
            continue
        pn, pd, ps = prev
        diff = cn * pd - pn * cd  # sign of (new offset - old offset)
        if diff > 0 or (diff == 0 and strict and not ps):
            best[normal] = (cn, cd, strict)
    return [(n, cn, cd, s) for n, (cn, cd, s) in best.items()]


def _eliminate_var(rows: list[IntRow], k: int) -> Optional[list[IntRow]]:
    # an equality pair f <= 0, -f <= 0 pinning x_k allows direct substitution,
    # which is linear instead of quadratic in the number of rows
    nonstrict = {(n, cn, cd) for n, cn, cd, s in rows if not s}
    eq = None
    for n, cn, cd, s in rows:
        if not s and n[k] != 0:
            if (tuple(-a for a in n), -cn, cd) in nonstrict:
                eq = (n, cn, cd)
                break
    if eq is not None:
        n, cn, cd = eq
        a = n[k]
        sa = 1 if a > 0 else -1
        aa = abs(a)
        out = []
        for m, dn, dd, t in rows:
            mk = m[k]
            if mk == 0:
                out.append((m, dn, dd, t))
                continue
            normal = tuple(aa * mi - sa * mk * ni for mi, ni in zip(m, n))
            out.append((normal, aa * dn * cd - sa * mk * cn * dd, dd * cd, t))
        return _normalize_rows(out)

    uppers = [r for r in rows if r[0][k] > 0]
    lowers = [r for r in rows if r[0][k] < 0]
    others = [r for r in rows if r[0][k] == 0]
    if not uppers or not lowers:
        return _normalize_rows(others)
    out = list(others)
    for nu, un, ud, su in uppers:
        a = nu[k]
        for nl, ln, ld, sl in lowers:
            b = -nl[k]
            normal = tuple(b * u + a * l for u, l in zip(nu, nl))
            out.append((normal, b * un * ld + a * ln * ud, ud * ld, su or sl))
    return _normalize_rows(out)


def _fm_core(
    rows: Iterable[IntRow], nvars: int, targets: Sequence[int]
) -> Optional[list[IntRow]]:
    cur = _normalize_rows(rows)
    if cur is None:
        return None
    remaining = list(targets)
    while remaining:
        # cheapest variable first: fewest derived rows
        def cost(k: int) -> int:
            ups = sum(1 for r in cur if r[0][k] > 0)
            downs = sum(1 for r in cur if r[0][k] < 0)
            return ups * downs if ups and downs else -1

        remaining.sort(key=cost)
        k = remaining.pop(0)
        cur = _eliminate_var(cur, k)
        if cur is None:
            return None
    return cur


def _fm_eliminate(
    rows: Iterable[Row], nvars: int, targets: Sequence[int]
) -> Optional[list[Row]]:
    """Project away the target variables; None means the system is infeasible."""
    cur = _fm_core(_to_int_rows(rows), nvars, targets)
    return None if cur is None else _from_int_rows(cur)


def _feasible(rows: Iterable[Row], nvars: int) -> bool:
    return _fm_core(_to_int_rows(rows), nvars, list(range(nvars))) is not None


def _solve_feasible(rows: Iterable[Row], nvars: int) -> Optional[tuple[Fraction, ...]]:
    """An exact rational point satisfying the rows, or None when infeasible.

    Runs the elimination while recording each stage, then back-substitutes
    a value inside the allowed interval for every eliminated variable.
    """
    int_rows = _to_int_rows(rows)
    cur = _normalize_rows(int_rows)
    if cur is None:
        return None
    stages: list[tuple[int, list[IntRow]]] = []
    while True:
        present = [k for k in range(nvars) if any(r[0][k] for r in cur)]
        if not present:
            break

        def cost(k: int) -> int:
            ups = sum(1 for r in cur if r[0][k] > 0)
            downs = sum(1 for r in cur if r[0][k] < 0)
            return ups * downs if ups and downs else -1

        k = min(present, key=cost)
        stages.append((k, cur))
        cur = _eliminate_var(cur, k)
        if cur is None:
            return None
    assign = [Fraction(0)] * nvars
    for k, system in reversed(stages):
        lo = hi = None
        lo_strict = hi_strict = False
        for normal, cn, cd, strict in system:
            a = normal[k]
            if a == 0:
                continue
            rest = sum(
                normal[j] * assign[j] for j in range(nvars) if j != k and normal[j]
            ) + Fraction(cn, cd)
            bound = -rest / a
            if a > 0:
                if hi is None or bound < hi:
                    hi, hi_strict = bound, strict
                elif bound == hi:
                    hi_strict = hi_strict or strict
            else:
                if lo is None or bound > lo:
                    lo, lo_strict = bound, strict
                elif bound == lo:
                    lo_strict = lo_strict or strict
        if lo is None and hi is None:
            value = Fraction(0)
        elif lo is None:
            value = hi - 1
        elif hi is None:
            value = lo + 1
        elif lo < hi:
            value = (lo + hi) / 2
        elif lo == hi and not (lo_strict or hi_strict):
            value = lo
        else:
            return None
        assign[k] = value
    point = tuple(assign)
    for normal, cn, cd, strict in _normalize_rows(int_rows) or []:
        v = sum(a * x for a, x in zip(normal, point)) * cd + cn
        if v > 0 or (strict and v == 0):
            return None
    return point


def feasible_point(P: Polyhedron) -> Optional[tuple[Fraction, ...]]:
    """A rational point of P, or None when P is empty."""
    return _solve_feasible([c.row() for c in P.constraints], P.dim)


def poly_contains(P: Polyhedron, x: Sequence[Fraction]) -> bool:
    return P.contains(x)


def poly_is_empty(P: Polyhedron) -> bool:
    return not _feasible([c.row() for c in P.constraints], P.dim)


def _rank(normals: list[tuple[int, ...]], dim: int) -> int:
    mat = [[Fraction(a) for a in n] for n in normals]
    rank = 0
    col = 0
    while col < dim and rank < len(mat):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        pv = mat[rank][col]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                f = mat[r][col] / pv
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[rank])]
        rank += 1
        col += 1
    return rank


def poly_dim(P: Polyhedron) -> int:
    """Dimension of the affine hull; -1 for the empty polyhedron."""
    if poly_is_empty(P):
        return -1
    rows = [c.row() for c in P.constraints]
    eq_normals: list[tuple[int, ...]] = []
    for c in P.constraints:
        if c.strict:
            continue
        probe = rows + [(c.form.normal, c.form.offset, True)]
        if not _feasible(probe, P.dim):
            eq_normals.append(c.form.normal)
    return P.dim - _rank(eq_normals, P.dim)


def poly_subset(P: Polyhedron, Q: Polyhedron) -> bool:
    """P ⊆ Q, exact; an empty P is a subset of anything."""
    if P.dim != Q.dim:
        raise DimensionMismatch("cannot compare different dimensions")
    rows = [c.row() for c in P.constraints]
    for c in Q.constraints:
        if _feasible(rows + [c.negated().row()], P.dim):
            return False
    return True


def poly_equal(P: Polyhedron, Q: Polyhedron) -> bool:
    return poly_subset(P, Q) and poly_subset(Q, P)


def poly_recession_contains(P: Polyhedron, d: Sequence[Fraction]) -> bool:
    """Whether d is a recession direction of the closure of nonempty P."""
    d = tuple(Fraction(v) for v in d)
    return all(
        sum(a * di for a, di in zip(c.form.normal, d)) <= 0 for c in P.constraints
    )


def poly_has_recession_direction(P: Polyhedron, open_conditions: Sequence[Constraint]) -> bool:
    """Whether the recession cone of P meets all the given homogeneous conditions."""
    rows: list[Row] = [(c.form.normal, Fraction(0), False) for c in P.constraints]
    rows += [c.row() for c in open_conditions]
    return _feasible(rows, P.dim)


# ---------------------------------------------------------------------------
# Unions of polyhedra
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PolyUnion:
    """A finite union of polyhedra of a common ambient dimension."""

    dim: int
    pieces: tuple[Polyhedron, ...]

    def __post_init__(self):
        for p in self.pieces:
            if p.dim != self.dim:
                raise DimensionMismatch("piece dimension mismatch")

    def contains(self, x: Sequence[Fraction]) -> bool:
        if len(x) != self.dim:
            raise DimensionMismatch("point dimension does not match union")
        xi, den = _scale_point(x)
        return any(p._contains_scaled(xi, den) for p in self.pieces)

    def is_empty(self) -> bool:
        return all(poly_is_empty(p) for p in self.pieces)


def union_of(dim: int, pieces: Iterable[Polyhedron]) -> PolyUnion:
    return union_prune(PolyUnion(dim, tuple(pieces)))


def whole_space_union(dim: int) -> PolyUnion:
    return PolyUnion(dim, (whole_space(dim),))


def empty_union(dim: int) -> PolyUnion:
    return PolyUnion(dim, ())


def union_prune(U: PolyUnion) -> PolyUnion:
    """Drop empty and syntactically duplicate pieces."""
    seen = set()
    out = []
    for p in U.pieces:
        key = tuple(sorted((c.form.normal, c.form.offset, c.strict) for c in p.constraints))
        if key in seen:
            continue
        if poly_is_empty(p):
            continue
        seen.add(key)
        out.append(p)
    return PolyUnion(U.dim, tuple(out))


def union_intersect(A: PolyUnion, B: PolyUnion) -> PolyUnion:
    if A.dim != B.dim:
        raise DimensionMismatch("cannot intersect different dimensions")
    return union_prune(
        PolyUnion(A.dim, tuple(p.intersect(q) for p in A.pieces for q in B.pieces))
    )


def union_union(A: PolyUnion, B: PolyUnion) -> PolyUnion:
    if A.dim != B.dim:
        raise DimensionMismatch("cannot join different dimensions")
    return union_prune(PolyUnion(A.dim, A.pieces + B.pieces))


def piece_minus_union_is_empty(p: Polyhedron, pieces: Sequence[Polyhedron]) -> bool:
    """Whether p ∖ (∪ pieces) is empty, by recursive exact subtraction."""
    work = [p] if not poly_is_empty(p) else []
    for q in pieces:
        nxt: list[Polyhedron] = []
        for w in work:
            prefix: list[Constraint] = list(w.constraints)
            for c in q.constraints:
                cand = Polyhedron(p.dim, tuple(prefix) + (c.negated(),))
                if not poly_is_empty(cand):
                    nxt.append(cand)
                prefix.append(c)
        work = nxt
        if not work:
            return True
    return not work


def union_subset(A: PolyUnion, B: PolyUnion) -> bool:
    return all(piece_minus_union_is_empty(p, B.pieces) for p in A.pieces)


def union_equal(A: PolyUnion, B: PolyUnion) -> bool:
    return union_subset(A, B) and union_subset(B, A)


def union_intersect_all(dim: int, unions: Sequence[PolyUnion]) -> PolyUnion:
    acc = whole_space_union(dim)
    for u in unions:
        acc = union_intersect(acc, u)
        if not acc.pieces:
            break
    return acc


# ---------------------------------------------------------------------------
# Hyperplane-arrangement cells and complements of closed unions
# ---------------------------------------------------------------------------


def _form_rows(form: AffineForm, sign: int) -> list[Row]:
    if sign < 0:
        return [(form.normal, form.offset, True)]
    if sign > 0:
        neg = form.negated()
        return [(neg.normal, neg.offset, True)]
    neg = form.negated()
    return [(form.normal, form.offset, False), (neg.normal, neg.offset, False)]


def enumerate_cells(forms: Sequence[AffineForm], dim: int) -> list[tuple[int, ...]]:
    """Sign vectors of the nonempty relatively open cells of the arrangement.

    Recursive sign-vector search with emptiness pruning.  Witness points
    found along the way certify feasibility of most branches for free, so
    the exact elimination only runs on genuinely new or infeasible cells.
    """
    results: list[tuple[int, ...]] = []
    signs: list[int] = []

    def sign_of(form: AffineForm, x: tuple[Fraction, ...]) -> int:
        v = form.value(x)
        return 1 if v > 0 else -1 if v < 0 else 0

    def rec(i: int, rows: list[Row], candidates: list[tuple[Fraction, ...]]) -> None:
        if i == len(forms):
            results.append(tuple(signs))
            return
        form = forms[i]
        for s in (-1, 0, 1):
            rows2 = rows + _form_rows(form, s)
            cand2 = [x for x in candidates if sign_of(form, x) == s]
            if not cand2:
                w = _solve_feasible(rows2, dim)
                if w is None:
                    continue
                cand2 = [w]
            signs.append(s)
            rec(i + 1, rows2, cand2)
            signs.pop()

    rec(0, [], [])
    return results


def _canonical_form(form: AffineForm) -> tuple[AffineForm, bool]:
    """Primitive representative with a positive leading normal entry."""
    normal, offset = form.normal, form.offset
    g = 0
    for a in normal:
        g = gcd(g, abs(a))
    if g > 1:
        normal = tuple(a // g for a in normal)
        offset = offset / g
    lead = next((a for a in normal if a != 0), 0)
    if lead < 0:
        return AffineForm(tuple(-a for a in normal), -offset), True
    return AffineForm(normal, offset), False


def complement_of_union(T: PolyUnion) -> list[Polyhedron]:
    """Open polyhedra whose union is exactly the complement of the closed union T.

    Every defining hyperplane of T induces an arrangement; each nonempty
    relatively open cell outside T contributes the open polyhedron cut out
    by the strict inequalities the cell satisfies.
    """
    for p in T.pieces:
        if not p.is_closed_form():
            raise NotClosedInput("complement requires non-strict constraints")
    pieces = [p for p in T.pieces if not poly_is_empty(p)]
    if not pieces:
        return [whole_space(T.dim)]

    forms: list[AffineForm] = []
    index: dict[AffineForm, int] = {}
    piece_maps: list[list[tuple[int, bool]]] = []
    for p in pieces:
        pmap: list[tuple[int, bool]] = []
        for c in p.constraints:
            if not any(c.form.normal):
                # vacuous constant constraint on a nonempty piece
                continue
            canon, flipped = _canonical_form(c.form)
            if canon not in index:
                index[canon] = len(forms)
                forms.append(canon)
            pmap.append((index[canon], flipped))
        piece_maps.append(pmap)

    if not forms:
        # some piece is the whole space
        return []

    out: list[Polyhedron] = []
    for cell in enumerate_cells(forms, T.dim):
        in_T = any(
            all((cell[i] * (-1 if fl else 1)) <= 0 for i, fl in pmap)
            for pmap in piece_maps
        )
        if in_T:
            continue
        cons = []
        for i, s in enumerate(cell):
            if s < 0:
                cons.append(Constraint(forms[i], True))
            elif s > 0:
                cons.append(Constraint(forms[i].negated(), True))
        out.append(Polyhedron(T.dim, tuple(cons)))
    return out


def prune_covered_pieces(pieces: Sequence[Polyhedron], dim: int) -> list[Polyhedron]:
    """Greedy removal of pieces covered by the union of the remaining ones."""
    kept = list(pieces)
    changed = True
    while changed:
        changed = False
        for i, p in enumerate(kept):
            others = kept[:i] + kept[i + 1:]
            if others and piece_minus_union_is_empty(p, others):
                kept.pop(i)
                changed = True
                break
    return kept


# ---------------------------------------------------------------------------
# Orthants
# ---------------------------------------------------------------------------

Orthant = tuple[int, ...]


def orthant_support(sigma: Orthant) -> tuple[int, ...]:
    return tuple(k for k, s in enumerate(sigma) if s != 0)


def all_orthants(n: int) -> list[Orthant]:
    out: list[Orthant] = [()]
    for _ in range(n):
        out = [o + (s,) for o in out for s in (-1, 0, 1)]
    return out


def embed_point(sigma: Orthant, V: Sequence[Fraction]) -> TropPoint:
    """The tropical point with signs sigma and the given support valuations."""
    support = orthant_support(sigma)
    if len(V) != len(support):
        raise DimensionMismatch("valuation vector does not match orthant support")
    coords: list[SignedTropVal] = []
    it = iter(V)
    for s in sigma:
        coords.append(stv(s, Fraction(next(it))) if s != 0 else stv(0, "inf"))
    return tuple(coords)


def orthant_str(sigma: Orthant) -> str:
    return "".join("+" if s > 0 else "-" if s < 0 else "0" for s in sigma)


def parse_orthant(text: str) -> Orthant:
    mapping = {"+": 1, "-": -1, "0": 0}
    try:
        return tuple(mapping[ch] for ch in text.strip())
    except KeyError:
        raise ValueError(f"bad orthant string {text!r}") from None


# ---------------------------------------------------------------------------
# Tropical regions of an orthant
# ---------------------------------------------------------------------------


def _orthant_terms(
    F: TropPoly, sigma: Orthant
) -> list[tuple[int, tuple[int, ...], Fraction]]:
    """Surviving terms as (sign, support exponents, valuation offset)."""
    if len(sigma) != F.nvars:
        raise DimensionMismatch("orthant length does not match polynomial")
    support = orthant_support(sigma)
    out = []
    for exps, coeff in F.terms:
        sign = coeff.sign
        dead = False
        for k, d in enumerate(exps):
            if sigma[k] == 0:
                if d < 0:
                    raise NegativeExponentAtZero(
                        "negative exponent on a zero-sign coordinate"
                    )
                if d > 0:
                    dead = True
                    break
            elif sigma[k] < 0 and d % 2:
                sign = -sign
        if dead:
            continue
        out.append((sign, tuple(exps[k] for k in support), Fraction(coeff.val)))
    return out


def trop_region(F: TropPoly, sigma: Orthant, rel: str) -> PolyUnion:
    """The exact set of support valuations V with F(embed(sigma, V)) rel 0.

    The region is assembled from dominance cells: term i dominates where its
    affine value L_i(V) = exps_i . V + val_i is minimal.  A relation holds
    according to the signs of the dominating terms (mixed dominant signs
    balance, which counts as == 0, >= 0 and <= 0).
    """
    rel = normalize_rel(rel)
    terms = _orthant_terms(F, sigma)
    m = len(orthant_support(sigma))

    if not terms:
        # the polynomial evaluates to zero on this orthant
        if rel in ("eq", "ge", "le"):
            return whole_space_union(m)
        return empty_union(m)

    def diff(i: int, j: int) -> AffineForm:
        (si, ei, vi), (sj, ej, vj) = terms[i], terms[j]
        return AffineForm(tuple(a - b for a, b in zip(ei, ej)), vi - vj)

    def dominance_piece(i: int, strict_against: set[int]) -> Polyhedron:
        cons = []
        for j in range(len(terms)):
            if j == i:
                continue
            cons.append(Constraint(diff(i, j), j in strict_against))
        return Polyhedron(m, tuple(cons))

    pos = [i for i, (s, _, _) in enumerate(terms) if s > 0]
    neg = [i for i, (s, _, _) in enumerate(terms) if s < 0]

    pieces: list[Polyhedron] = []
    if rel == "ge":
        pieces = [dominance_piece(i, set()) for i in pos]
    elif rel == "le":
        pieces = [dominance_piece(i, set()) for i in neg]
    elif rel == "gt":
        pieces = [dominance_piece(i, set(neg)) for i in pos]
    elif rel == "lt":
        pieces = [dominance_piece(i, set(pos)) for i in neg]
    elif rel == "eq":
        for i in pos:
            for j in neg:
                base = dominance_piece(i, set())
                tie = Constraint(diff(j, i), False)
                pieces.append(Polyhedron(m, base.constraints + (tie,)))
    elif rel == "ne":
        pieces = [dominance_piece(i, set(neg)) for i in pos]
        pieces += [dominance_piece(i, set(pos)) for i in neg]
    return union_of(m, pieces)


# ---------------------------------------------------------------------------
# Open polyhedron -> positive region of a tropical polynomial
# ---------------------------------------------------------------------------


def open_poly_to_trop(P: Polyhedron) -> TropPoly:
    """A polynomial positive exactly on the open polyhedron P.

    P is read in log-magnitude coordinates: writing its constraints as
    alpha . X + C < 0, the result is 1 (+) (+)_i (-A_i) x^alpha_i with A_i
    the positive value of valuation -C_i, so that for every rational X,

        X in P  <=>  the polynomial is positive at the point with
                     coordinate valuations -X_k and all signs +.

    Equivalently, in valuation coordinates V = -X the positive region of
    the result in the all-positive orthant is {beta . V + D < 0 for all i}
    for the constraints rewritten as beta = -alpha, D = C.
    """
    if not P.is_open():
        raise ShapeMismatch("input polyhedron must have strict constraints only")
    if poly_is_empty(P):
        raise EmptyPolyhedron("no polynomial represents an empty open region")
    strongest: dict[tuple[int, ...], Fraction] = {}
    for c in P.constraints:
        normal, offset = c.form.normal, c.form.offset
        if not any(normal):
            continue  # vacuous on a nonempty open polyhedron
        g = 0
        for a in normal:
            g = gcd(g, abs(a))
        if g > 1:
            normal = tuple(a // g for a in normal)
            offset = offset / g
        prev = strongest.get(normal)
        if prev is None or offset > prev:
            strongest[normal] = offset
    terms: list[tuple[tuple[int, ...], SignedTropVal]] = [
        ((0,) * P.dim, stv(1, 0))
    ]
    for normal, offset in sorted(strongest.items()):
        terms.append((normal, stv(-1, -offset)))
    return TropPoly.from_terms(P.dim, terms)


def valuation_piece_to_log(P: Polyhedron) -> Polyhedron:
    """Reinterpret a valuation-coordinate polyhedron in log coordinates X = -V."""
    return Polyhedron(
        P.dim,
        tuple(
            Constraint(
                AffineForm(tuple(-a for a in c.form.normal), c.form.offset), c.strict
            )
            for c in P.constraints
        ),
    )


# ---------------------------------------------------------------------------
# Limits toward zero coordinates (for orthant-face adjacency)
# ---------------------------------------------------------------------------


def limit_polyhedron(P: Polyhedron, drop: Sequence[int]) -> Optional[Polyhedron]:
    """Limit set of the closure of P as the dropped coordinates go to +inf.

    Returns a polyhedron in the remaining coordinates (in their original
    order), or None when no point of P escapes to +inf in all dropped
    coordinates simultaneously.
    """
    drop_set = set(drop)
    keep = [k for k in range(P.dim) if k not in drop_set]
    if not drop_set:
        return P.closure()
    n = P.dim
    nu = n  # auxiliary lower bound for the dropped coordinates
    rows: list[Row] = []
    for c in P.constraints:
        rows.append((c.form.normal + (0,), c.form.offset, False))
    for k in drop_set:
        normal = tuple((1 if i == nu else -1 if i == k else 0) for i in range(n + 1))
        rows.append((normal, Fraction(0), False))
    projected = _fm_eliminate(rows, n + 1, sorted(drop_set))
    if projected is None:
        return None
    cons: list[Constraint] = []
    for normal, offset, strict in projected:
        lam = normal[nu]
        if lam > 0:
            return None
        if lam < 0:
            continue
        reduced = tuple(normal[k] for k in keep)
        cons.append(Constraint(AffineForm(reduced, offset), strict))
    return Polyhedron(len(keep), tuple(cons))
