"""Text grammar for polynomials over the Puiseux coefficient field.

Accepted inputs look like::

    (x-2)^2 + (y-2)^2 - 1
    2x + 3y - 5
    2 - 1/3*t^(1/2) + t^2
    x^(-1)*y - t^(3/2)

Variables are x, y, z for up to three unknowns or x1, x2, ... in general;
t is the series parameter and may carry rational exponents (parenthesized
when fractional or negative).  Variable exponents must be integers, and
negative exponents are allowed only on single variables, keeping the
expansion exact.  Multiplication may be written with '*' or by
juxtaposition ('2x').  Rational literals are 'p' or 'p/q'.

Products, sums, and powers are expanded exactly into the normal form of
:class:`~tropreal.troppoly.PolyK`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .errors import ParseError
from .puiseux import PuiseuxSeries
from .troppoly import PolyK

_ALIASES = {"x": 0, "y": 1, "z": 2}


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.tokens: list[tuple[str, str]] = []
        self._scan()
        self.idx = 0

    def _scan(self) -> None:
        t, n = self.text, len(self.text)
        i = 0
        while i < n:
            ch = t[i]
            if ch.isspace():
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < n and t[j].isdigit():
                    j += 1
                self.tokens.append(("NUM", t[i:j]))
                i = j
                continue
            if ch.isalpha():
                j = i
                while j < n and (t[j].isalnum()):
                    j += 1
                self.tokens.append(("IDENT", t[i:j]))
                i = j
                continue
            if ch in "+-*^()/":
                self.tokens.append((ch, ch))
                i += 1
                continue
            raise ParseError(f"unexpected character {ch!r} at position {i}")

    def peek(self, k: int = 0) -> Optional[tuple[str, str]]:
        j = self.idx + k
        return self.tokens[j] if j < len(self.tokens) else None

    def next(self) -> tuple[str, str]:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input")
        self.idx += 1
        return tok

    def expect(self, kind: str) -> tuple[str, str]:
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, got {tok[1]!r}")
        return tok


class _Parser:
    """Recursive descent over monomial dictionaries keyed by (x-exps, t-exp)."""

    def __init__(self, text: str, nvars: Optional[int]):
        self.lx = _Lexer(text)
        self.fixed_nvars = nvars
        self.max_var = -1  # largest variable index seen

    # polynomials are carried as {(exps..., t_exp): coeff} with exps a tuple
    # whose length is settled only at the end (indices are tracked sparsely)

    def parse(self) -> PolyK:
        poly = self._expr()
        if self.lx.peek() is not None:
            raise ParseError(f"trailing input near {self.lx.peek()[1]!r}")
        nvars = self.fixed_nvars if self.fixed_nvars is not None else self.max_var + 1
        if self.max_var + 1 > (nvars or 0):
            raise ParseError(
                f"variable index {self.max_var + 1} exceeds nvars={nvars}"
            )
        terms: dict[tuple[tuple[int, ...], Fraction], Fraction] = {}
        for (sparse, t_exp), coeff in poly.items():
            exps = [0] * nvars
            for k, d in sparse:
                exps[k] = d
            key = (tuple(exps), t_exp)
            terms[key] = terms.get(key, Fraction(0)) + coeff
        by_exps: dict[tuple[int, ...], list[tuple[Fraction, Fraction]]] = {}
        for (exps, t_exp), coeff in terms.items():
            by_exps.setdefault(exps, []).append((t_exp, coeff))
        return PolyK.from_terms(
            nvars,
            (
                (exps, PuiseuxSeries.from_terms(pairs))
                for exps, pairs in by_exps.items()
            ),
        )

    # -- grammar -----------------------------------------------------------

    def _expr(self):
        sign = 1
        tok = self.lx.peek()
        if tok and tok[0] in "+-":
            self.lx.next()
            sign = -1 if tok[0] == "-" else 1
        acc = _scale(self._term(), Fraction(sign))
        while True:
            tok = self.lx.peek()
            if tok is None or tok[0] not in "+-":
                break
            self.lx.next()
            rhs = self._term()
            acc = _add(acc, _scale(rhs, Fraction(-1 if tok[0] == "-" else 1)))
        return acc

    def _term(self):
        acc = self._factor()
        while True:
            tok = self.lx.peek()
            if tok is None:
                break
            if tok[0] == "*":
                self.lx.next()
                acc = _mul(acc, self._factor())
            elif tok[0] in ("IDENT", "(") :
                acc = _mul(acc, self._factor())
            else:
                break
        return acc

    def _factor(self):
        base, atom_kind = self._atom()
        tok = self.lx.peek()
        if tok and tok[0] == "^":
            self.lx.next()
            exp = self._exponent()
            if atom_kind == "t":
                return {((), exp): Fraction(1)}
            if exp.denominator != 1:
                raise ParseError("variable exponents must be integers")
            k = int(exp)
            if atom_kind == "var":
                ((sparse, t_exp),) = base.keys()
                ((idx, _),) = sparse
                return {(((idx, k),) if k != 0 else (), t_exp): Fraction(1)}
            if k < 0:
                raise ParseError("negative exponents only on single variables or t")
            return _pow(base, k)
        return base

    def _atom(self):
        tok = self.lx.next()
        kind, text = tok
        if kind == "NUM":
            num = Fraction(int(text))
            nxt = self.lx.peek()
            if nxt and nxt[0] == "/":
                after = self.lx.peek(1)
                if after and after[0] == "NUM":
                    self.lx.next()
                    den = int(self.lx.next()[1])
                    if den == 0:
                        raise ParseError("zero denominator")
                    num = Fraction(int(text), den)
                else:
                    raise ParseError("'/' is only for rational literals")
            return {((), Fraction(0)): num}, "num"
        if kind == "IDENT":
            if text == "t":
                return {((), Fraction(1)): Fraction(1)}, "t"
            idx = self._var_index(text)
            return {(((idx, 1),), Fraction(0)): Fraction(1)}, "var"
        if kind == "(":
            inner = self._expr()
            self.lx.expect(")")
            return inner, "expr"
        if kind == "-":
            inner, _ = self._atom()
            return _scale(inner, Fraction(-1)), "expr"
        raise ParseError(f"unexpected token {text!r}")

    def _exponent(self) -> Fraction:
        tok = self.lx.peek()
        if tok and tok[0] == "(":
            self.lx.next()
            value = self._signed_rational()
            self.lx.expect(")")
            return value
        return self._signed_rational()

    def _signed_rational(self) -> Fraction:
        sign = 1
        tok = self.lx.peek()
        if tok and tok[0] in "+-":
            self.lx.next()
            sign = -1 if tok[0] == "-" else 1
        num = int(self.lx.expect("NUM")[1])
        tok = self.lx.peek()
        if tok and tok[0] == "/":
            self.lx.next()
            den = int(self.lx.expect("NUM")[1])
            if den == 0:
                raise ParseError("zero denominator")
            return Fraction(sign * num, den)
        return Fraction(sign * num)

    def _var_index(self, name: str) -> int:
        if name in _ALIASES:
            idx = _ALIASES[name]
        elif name[0] == "x" and name[1:].isdigit() and int(name[1:]) >= 1:
            idx = int(name[1:]) - 1
        else:
            raise ParseError(f"unknown variable {name!r}")
        self.max_var = max(self.max_var, idx)
        return idx


# -- monomial-dict algebra ---------------------------------------------------

_Mono = tuple[tuple[tuple[int, int], ...], Fraction]  # ((var, exp), ...), t-exponent


def _add(a, b):
    out = dict(a)
    for key, c in b.items():
        out[key] = out.get(key, Fraction(0)) + c
    return {k: c for k, c in out.items() if c != 0}


def _scale(a, c: Fraction):
    if c == 0:
        return {}
    return {k: v * c for k, v in a.items()}


def _mul(a, b):
    out: dict = {}
    for (sa, ta), ca in a.items():
        for (sb, tb), cb in b.items():
            exps: dict[int, int] = {}
            for k, d in sa + sb:
                exps[k] = exps.get(k, 0) + d
            key = (tuple(sorted((k, d) for k, d in exps.items() if d != 0)), ta + tb)
            out[key] = out.get(key, Fraction(0)) + ca * cb
    return {k: c for k, c in out.items() if c != 0}


def _pow(a, k: int):
    out = {((), Fraction(0)): Fraction(1)}
    base = a
    while k:
        if k & 1:
            out = _mul(out, base)
        base = _mul(base, base)
        k >>= 1
    return out


def parse_polyk(text: str, nvars: Optional[int] = None) -> PolyK:
    """Parse polynomial text into an expanded, normalized :class:`PolyK`."""
    return _Parser(text, nvars).parse()


def parse_puiseux(text: str) -> PuiseuxSeries:
    """Parse a pure-t expression like '2 - 1/3*t^(1/2) + t^2'."""
    poly = parse_polyk(text, nvars=0)
    if poly.is_zero():
        return PuiseuxSeries.zero()
    ((exps, coeff),) = poly.terms
    assert exps == ()
    return coeff
