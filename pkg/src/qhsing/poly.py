"""Exact multivariate polynomials over the rationals.

A :class:`Polynomial` is an immutable mapping from exponent tuples to nonzero
:class:`fractions.Fraction` coefficients.  The zero polynomial has no terms but
still records its number of variables.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

Monomial = Tuple[int, ...]

__all__ = [
    "Monomial",
    "Polynomial",
    "ParseError",
    "parse_polynomial",
    "default_names",
    "format_rational",
]


class ParseError(ValueError):
    """Raised on malformed polynomial text; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


def default_names(nvars: int) -> Tuple[str, ...]:
    if nvars <= 4:
        return ("x", "y", "z", "w")[:nvars]
    return tuple(f"x{i + 1}" for i in range(nvars))


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _grlex_key(exp: Monomial):
    return (sum(exp), exp)


class Polynomial:
    """Polynomial in ``nvars`` variables with exact rational coefficients."""

    __slots__ = ("_nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], object] | None = None):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        clean: Dict[Monomial, Fraction] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise ValueError(f"monomial {exp} does not have {nvars} exponents")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = Fraction(c)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if not clean[exp]:
                    del clean[exp]
        self._nvars = nvars
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: Dict[Monomial, Fraction]) -> "Polynomial":
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p._nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        c = Fraction(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def monomial(cls, exp: Sequence[int], c=1) -> "Polynomial":
        return cls(len(exp), {tuple(exp): c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        exp = [0] * nvars
        exp[i] = 1
        return cls._raw(nvars, {tuple(exp): Fraction(1)})

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def monomials(self) -> list:
        return sorted(self._terms, key=_grlex_key, reverse=True)

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self._nvars != other._nvars:
            raise ValueError(
                f"mismatched nvars: {self._nvars} and {other._nvars}"
            )

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Rational)):
            return Polynomial.constant(self._nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(self._nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self._nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Monomial, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Polynomial._raw(self._nvars, out)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self._nvars)
        return Polynomial._raw(self._nvars, {e: v * c for e, v in self._terms.items()})

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(self._nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_monomial(self, exp: Monomial, c=1) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self._nvars)
        return Polynomial._raw(
            self._nvars,
            {tuple(a + b for a, b in zip(e, exp)): v * c for e, v in self._terms.items()},
        )

    def derivative(self, i: int) -> "Polynomial":
        if not 0 <= i < self._nvars:
            raise IndexError(f"variable index {i} out of range for {self._nvars} variables")
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1:]
                out[ne] = c * e[i]
        return Polynomial._raw(self._nvars, out)

    def gradient(self) -> list:
        return [self.derivative(i) for i in range(self._nvars)]

    def permute(self, perm: Sequence[int]) -> "Polynomial":
        """Rename variable ``i`` to variable ``perm[i]``."""
        out = {}
        for e, c in self._terms.items():
            ne = [0] * self._nvars
            for i, k in enumerate(e):
                ne[perm[i]] = k
            out[tuple(ne)] = c
        return Polynomial._raw(self._nvars, out)

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for e, c in self._terms.items():
            t = c
            for v, k in zip(point, e):
                if k:
                    t *= Fraction(v) ** k
            total += t
        return total

    # -- comparison and printing ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._nvars == other._nvars and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self == Polynomial.constant(self._nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._nvars, frozenset(self._terms.items())))
        return self._hash

    def to_string(self, names: Sequence[str] | None = None) -> str:
        names = tuple(names) if names is not None else default_names(self._nvars)
        if len(names) != self._nvars:
            raise ValueError("need one name per variable")
        if not self._terms:
            return "0"
        out = []
        for exp in self.monomials():
            c = self._terms[exp]
            factors = [
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, exp) if k
            ]
            mag = abs(c)
            if not factors:
                body = format_rational(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([format_rational(mag)] + factors)
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Polynomial({self._nvars}, {self.to_string()!r})"


# -- parser -------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>\*\*|[-+*/^()]))"
)


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            # skip whitespace to report the offending character itself
            bad = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup
        value = m.group(kind)
        if value == "**":
            value = "^"
        tokens.append((kind, value, m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.tokens = _tokenize(text)
        self.i = 0
        self.index = {name: k for k, name in enumerate(variables)}
        self.n = len(variables)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        p = self.expr()
        kind, v, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {v!r}", pos)
        return p

    def expr(self) -> Polynomial:
        sign = 1
        kind, v, _ = self.peek()
        if kind == "op" and v in "+-":
            self.take()
            sign = -1 if v == "-" else 1
        acc = self.term().scale(sign)
        while True:
            kind, v, _ = self.peek()
            if kind == "op" and v in "+-":
                self.take()
                t = self.term()
                acc = acc + t if v == "+" else acc - t
            else:
                return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        prev_closed = self.tokens[self.i - 1][1] == ")"
        while True:
            kind, v, pos = self.peek()
            if kind == "op" and v == "*":
                self.take()
            elif kind == "op" and v == "(" or (prev_closed and kind in ("num", "name")):
                pass  # adjacency through a parenthesis
            elif kind in ("num", "name"):
                raise ParseError("implicit multiplication requires '*'", pos)
            else:
                return acc
            acc = acc * self.factor()
            prev_closed = self.tokens[self.i - 1][1] == ")"

    def factor(self) -> Polynomial:
        base = self.base()
        kind, v, _ = self.peek()
        if kind == "op" and v == "^":
            self.take()
            kind, v, pos = self.take()
            if kind == "op" and v == "-":
                raise ParseError("negative exponent", pos)
            if kind != "num":
                raise ParseError("exponent must be a nonnegative integer literal", pos)
            return base ** int(v)
        return base

    def base(self) -> Polynomial:
        kind, v, pos = self.take()
        if kind == "num":
            value = Fraction(int(v))
            k2, v2, _ = self.peek()
            if k2 == "op" and v2 == "/":
                self.take()
                k3, v3, p3 = self.take()
                if k3 != "num":
                    raise ParseError("denominator must be an integer literal", p3)
                if int(v3) == 0:
                    raise ParseError("zero denominator", p3)
                value /= int(v3)
            return Polynomial.constant(self.n, value)
        if kind == "name":
            if v not in self.index:
                raise ParseError(f"unknown identifier {v!r}", pos)
            return Polynomial.variable(self.n, self.index[v])
        if kind == "op" and v == "(":
            p = self.expr()
            k2, v2, p2 = self.take()
            if v2 != ")":
                raise ParseError("expected ')'", p2)
            return p
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected token {v!r}", pos)


def parse_polynomial(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse ``text`` into an expanded polynomial in ``variables``.

    Accepts integer and rational literals (``3/4``), ``+ - * ^`` (``**`` is
    an alias of ``^``) and parentheses.  Products need an explicit ``*``
    except when one side is parenthesised, e.g. ``2(x+y)`` or ``(x+y)(x-y)``.
    A leading sign on the whole expression or on a parenthesised group is
    allowed.

    >>> parse_polynomial("(x+y)^2 - x^2 - 2*x*y", "xyz").to_string()
    'y^2'
    """
    variables = list(variables)
    if not variables:
        raise ValueError("variable list is empty")
    if len(set(variables)) != len(variables):
        raise ValueError("variable names must be distinct")
    return _Parser(text, variables).parse()


def identifiers(text: str) -> list:
    """Sorted distinct identifiers occurring in ``text``."""
    return sorted({m.group(0) for m in re.finditer(r"[A-Za-z_][A-Za-z_0-9]*", text)})


def monomials_of_degree(weights: Sequence[int], degree: int) -> Iterable[Monomial]:
    """All exponent vectors with weighted degree exactly ``degree``."""
    n = len(weights)

    def rec(i, remaining, prefix):
        if i == n - 1:
            if remaining % weights[i] == 0:
                yield prefix + (remaining // weights[i],)
            return
        for k in range(remaining // weights[i] + 1):
            yield from rec(i + 1, remaining - k * weights[i], prefix + (k,))

    if degree < 0:
        return iter(())
    return rec(0, degree, ())
