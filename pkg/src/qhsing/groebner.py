"""Buchberger's algorithm over Q and standard-monomial extraction.

Internally polynomials are kept as dicts of integer coefficients normalized to
content 1; only the final reduced basis is converted back to monic
:class:`~qhsing.poly.Polynomial` objects.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Sequence, Tuple

from .poly import Monomial, Polynomial

__all__ = [
    "MonomialOrder",
    "GroebnerBasis",
    "StandardMonomialBasis",
    "GroebnerDegreeError",
    "INFINITE",
    "buchberger",
    "normal_form",
    "s_polynomial",
    "standard_monomials",
]

INFINITE = "infinite"

DEFAULT_MAX_DEGREE = 10_000


class GroebnerDegreeError(RuntimeError):
    """An S-polynomial exceeded the configured weighted-degree cap."""


@dataclass(frozen=True)
class MonomialOrder:
    """Weighted degree first, reverse lexicographic tie-break.

    With all weights equal to 1 this is the usual graded reverse-lex order.
    """

    weights: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if any(w < 1 for w in self.weights):
            raise ValueError("order weights must be positive")

    @classmethod
    def grevlex(cls, nvars: int) -> "MonomialOrder":
        return cls((1,) * nvars)

    @classmethod
    def from_grading(cls, grading) -> "MonomialOrder":
        return cls(grading.weights)

    def degree(self, exp: Sequence[int]) -> int:
        return sum(e * w for e, w in zip(exp, self.weights))

    def key(self, exp: Sequence[int]):
        """Sort key: larger key means larger monomial."""
        return (self.degree(exp), tuple(-e for e in reversed(exp)))

    def leading_monomial(self, p: Polynomial) -> Monomial:
        if p.is_zero():
            raise ValueError("zero polynomial has no leading monomial")
        return max((e for e, _ in p.items()), key=self.key)

    def leading_coefficient(self, p: Polynomial) -> Fraction:
        return p.coefficient(self.leading_monomial(p))


@dataclass(frozen=True)
class GroebnerBasis:
    generators: Tuple[Polynomial, ...]
    order: MonomialOrder
    nvars: int
    zero_ideal: bool = False

    def leading_monomials(self) -> List[Monomial]:
        return [self.order.leading_monomial(g) for g in self.generators]

    def is_unit_ideal(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.generators)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


@dataclass(frozen=True)
class StandardMonomialBasis:
    monomials: Tuple[Monomial, ...]
    degrees: Tuple[int, ...] = field(default=())

    def __len__(self):
        return len(self.monomials)

    def hilbert(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for k in self.degrees:
            out[k] = out.get(k, 0) + 1
        return dict(sorted(out.items()))


# -- integer-coefficient helpers ----------------------------------------------

def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _primitive(terms: Dict[Monomial, int], lead: Monomial | None = None) -> Dict[Monomial, int]:
    if not terms:
        return terms
    g = 0
    for c in terms.values():
        g = gcd(g, c)
        if g == 1:
            break
    if lead is not None and terms[lead] < 0:
        g = -g
    if g == 1:
        return terms
    return {e: c // g for e, c in terms.items()}


def _to_integer(p: Polynomial) -> Dict[Monomial, int]:
    den = 1
    for _, c in p.items():
        den = den * c.denominator // gcd(den, c.denominator)
    return {e: int(c * den) for e, c in p.items()}


class _Gen:
    __slots__ = ("terms", "lead", "lc")

    def __init__(self, terms: Dict[Monomial, int], key):
        self.lead = max(terms, key=key)
        self.terms = _primitive(terms, self.lead)
        self.lc = self.terms[self.lead]


def _reduce(terms: Dict[Monomial, int], basis: List[_Gen], key) -> Dict[Monomial, int]:
    """Full reduction of ``terms`` modulo ``basis`` up to a nonzero scalar."""
    p = dict(terms)
    rem: Dict[Monomial, int] = {}
    while p:
        lead = max(p, key=key)
        c = p[lead]
        g = next((g for g in basis if _divides(g.lead, lead)), None)
        if g is None:
            rem[lead] = c
            del p[lead]
            continue
        h = gcd(c, g.lc)
        a, b = g.lc // h, c // h
        shift = tuple(x - y for x, y in zip(lead, g.lead))
        if a != 1:
            for e in p:
                p[e] *= a
            for e in rem:
                rem[e] *= a
        for e, v in g.terms.items():
            e2 = tuple(x + y for x, y in zip(e, shift))
            s = p.get(e2, 0) - b * v
            if s:
                p[e2] = s
            else:
                p.pop(e2, None)
        # keep the working polynomial small
        if a != 1 and len(p) + len(rem) > 0:
            g0 = 0
            for v in itertools.chain(p.values(), rem.values()):
                g0 = gcd(g0, v)
                if g0 == 1:
                    break
            if g0 > 1:
                p = {e: v // g0 for e, v in p.items()}
                rem = {e: v // g0 for e, v in rem.items()}
    return rem


def _spoly(f: _Gen, g: _Gen) -> Dict[Monomial, int]:
    m = _lcm(f.lead, g.lead)
    sf = tuple(x - y for x, y in zip(m, f.lead))
    sg = tuple(x - y for x, y in zip(m, g.lead))
    h = gcd(f.lc, g.lc)
    a, b = g.lc // h, f.lc // h
    out: Dict[Monomial, int] = {}
    for e, v in f.terms.items():
        e2 = tuple(x + y for x, y in zip(e, sf))
        out[e2] = out.get(e2, 0) + a * v
    for e, v in g.terms.items():
        e2 = tuple(x + y for x, y in zip(e, sg))
        s = out.get(e2, 0) - b * v
        if s:
            out[e2] = s
        else:
            out.pop(e2, None)
    return {e: v for e, v in out.items() if v}


# -- public API ---------------------------------------------------------------

def buchberger(
    gens: Sequence[Polynomial],
    order: MonomialOrder,
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    Pairs are processed lowest-lcm first (ties by index), with the coprime
    and chain criteria applied.  Raises :class:`GroebnerDegreeError` when an
    S-polynomial's lcm has weighted degree above ``max_degree``.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].nvars
    if any(g.nvars != n for g in gens):
        raise ValueError("generators must share nvars")
    if len(order.weights) != n:
        raise ValueError("order has the wrong number of variables")
    key = order.key
    nonzero = [g for g in gens if not g.is_zero()]
    if not nonzero:
        return GroebnerBasis((), order, n, zero_ideal=True)

    basis: List[_Gen] = []
    pairs = set()

    def add(terms):
        basis.append(_Gen(terms, key))
        k = len(basis) - 1
        for i in range(k):
            pairs.add((i, k))

    for g in sorted(nonzero, key=lambda p: key(order.leading_monomial(p))):
        r = _reduce(_to_integer(g), basis, key)
        if r:
            add(r)

    while pairs:
        i, j = min(
            pairs,
            key=lambda ij: (key(_lcm(basis[ij[0]].lead, basis[ij[1]].lead)), ij),
        )
        pairs.discard((i, j))
        fi, fj = basis[i], basis[j]
        m = _lcm(fi.lead, fj.lead)
        if all(a == 0 or b == 0 for a, b in zip(fi.lead, fj.lead)):
            continue
        if any(
            k != i and k != j
            and _divides(basis[k].lead, m)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(basis))
        ):
            continue
        if order.degree(m) > max_degree:
            raise GroebnerDegreeError(
                f"S-polynomial of weighted degree {order.degree(m)} exceeds cap {max_degree}"
            )
        r = _reduce(_spoly(fi, fj), basis, key)
        if r:
            add(r)

    return GroebnerBasis(_reduced(basis, key, n), order, n)


def _reduced(basis: List[_Gen], key, n: int) -> Tuple[Polynomial, ...]:
    minimal: List[_Gen] = []
    for g in sorted(basis, key=lambda g: key(g.lead)):
        if not any(_divides(h.lead, g.lead) for h in minimal):
            minimal.append(g)
    out = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        r = _reduce(g.terms, others, key)
        lead = max(r, key=key)
        lc = r[lead]
        out.append(Polynomial(n, {e: Fraction(v, lc) for e, v in r.items()}))
    return tuple(out)


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Exact remainder of ``p`` on division by ``gb`` (``p - result`` is in the ideal)."""
    if p.nvars != gb.nvars:
        raise ValueError("nvars mismatch between polynomial and basis")
    key = gb.order.key
    leads = [(gb.order.leading_monomial(g), g) for g in gb.generators]
    work = dict(p.items())
    rem: Dict[Monomial, Fraction] = {}
    while work:
        lead = max(work, key=key)
        c = work[lead]
        hit = next(((lm, g) for lm, g in leads if _divides(lm, lead)), None)
        if hit is None:
            rem[lead] = c
            del work[lead]
            continue
        lm, g = hit
        shift = tuple(x - y for x, y in zip(lead, lm))
        factor = c / g.coefficient(lm)
        for e, v in g.items():
            e2 = tuple(x + y for x, y in zip(e, shift))
            s = work.get(e2, 0) - factor * v
            if s:
                work[e2] = s
            else:
                work.pop(e2, None)
    return Polynomial(p.nvars, rem)


def s_polynomial(p: Polynomial, q: Polynomial, order: MonomialOrder) -> Polynomial:
    lp, lq = order.leading_monomial(p), order.leading_monomial(q)
    m = _lcm(lp, lq)
    a = p.mul_monomial(tuple(x - y for x, y in zip(m, lp)), 1 / p.coefficient(lp))
    b = q.mul_monomial(tuple(x - y for x, y in zip(m, lq)), 1 / q.coefficient(lq))
    return a - b


def standard_monomials(gb: GroebnerBasis):
    """Monomials outside the leading-term ideal, or :data:`INFINITE`.

    The quotient is finite exactly when every variable has a pure power among
    the leading monomials.  The list is returned in increasing monomial order.
    """
    n = gb.nvars
    if gb.zero_ideal or not gb.generators:
        return INFINITE
    leads = gb.leading_monomials()
    if any(not any(lm) for lm in leads):
        return StandardMonomialBasis((), ())
    bounds = []
    for i in range(n):
        pure = [lm[i] for lm in leads if lm[i] and all(lm[j] == 0 for j in range(n) if j != i)]
        if not pure:
            return INFINITE
        bounds.append(min(pure))
    found = []
    for exp in itertools.product(*(range(b) for b in bounds)):
        if not any(_divides(lm, exp) for lm in leads):
            found.append(exp)
    found.sort(key=gb.order.key)
    return StandardMonomialBasis(tuple(found), tuple(gb.order.degree(e) for e in found))
