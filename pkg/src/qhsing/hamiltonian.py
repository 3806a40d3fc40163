"""Polynomial differential forms and the Hamiltonian vector fields ``xi_alpha``.

For an ``(n-3)``-form ``alpha`` and ``f`` in ``n`` variables, ``xi_alpha`` is the
contraction of the ``(n-1)``-form ``d(alpha) ^ df`` with ``d/dx_1 ^ ... ^ d/dx_n``.
Component ``i`` (0-based) is ``(-1)**i`` times the coefficient of the
``(n-1)``-form that omits ``dx_i``.  Such fields are tangent to ``f = 0``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .grading import Grading
from .poly import Polynomial, default_names, monomials_of_degree

__all__ = [
    "PolyForm",
    "PolyVectorField",
    "OperatorDescriptor",
    "xi_field",
    "bracket",
    "mf_generators",
    "format_generators",
    "monomial_forms",
]


def _sort_with_sign(indices: Sequence[int]):
    """Sort a wedge index sequence; returns (sign, tuple) or (0, None) on repeats."""
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return 0, None
    sign = 1
    # bubble sort keeps track of transpositions; sequences are short
    for i in range(len(idx)):
        for j in range(len(idx) - 1 - i):
            if idx[j] > idx[j + 1]:
                idx[j], idx[j + 1] = idx[j + 1], idx[j]
                sign = -sign
    return sign, tuple(idx)


class PolyForm:
    """A differential ``k``-form with polynomial coefficients."""

    __slots__ = ("nvars", "degree", "_coeffs")

    def __init__(self, nvars: int, degree: int, coeffs: Dict[Sequence[int], Polynomial] | None = None):
        if not 0 <= degree <= nvars:
            raise ValueError(f"form degree {degree} out of range for {nvars} variables")
        self.nvars = nvars
        self.degree = degree
        clean: Dict[Tuple[int, ...], Polynomial] = {}
        for idx, p in (coeffs or {}).items():
            if len(idx) != degree:
                raise ValueError(f"index tuple {idx} does not have length {degree}")
            if p.nvars != nvars:
                raise ValueError("coefficient has the wrong number of variables")
            sign, key = _sort_with_sign(idx)
            if not sign or p.is_zero():
                continue
            acc = clean.get(key, Polynomial.zero(nvars)) + (p if sign > 0 else -p)
            if acc.is_zero():
                clean.pop(key, None)
            else:
                clean[key] = acc
        self._coeffs = clean

    @classmethod
    def function(cls, p: Polynomial) -> "PolyForm":
        return cls(p.nvars, 0, {(): p})

    @classmethod
    def differential(cls, nvars: int, i: int) -> "PolyForm":
        return cls(nvars, 1, {(i,): Polynomial.constant(nvars, 1)})

    @property
    def coeffs(self) -> Dict[Tuple[int, ...], Polynomial]:
        return dict(self._coeffs)

    def coefficient(self, idx: Sequence[int]) -> Polynomial:
        sign, key = _sort_with_sign(idx)
        if not sign:
            return Polynomial.zero(self.nvars)
        c = self._coeffs.get(key, Polynomial.zero(self.nvars))
        return c if sign > 0 else -c

    def is_zero(self) -> bool:
        return not self._coeffs

    def _check(self, other: "PolyForm"):
        if self.nvars != other.nvars or self.degree != other.degree:
            raise ValueError("forms must share nvars and degree")

    def __add__(self, other: "PolyForm") -> "PolyForm":
        self._check(other)
        out = dict(self._coeffs)
        for k, p in other._coeffs.items():
            out[k] = out.get(k, Polynomial.zero(self.nvars)) + p
        return PolyForm(self.nvars, self.degree, out)

    def __neg__(self):
        return PolyForm(self.nvars, self.degree, {k: -p for k, p in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "PolyForm":
        return PolyForm(self.nvars, self.degree, {k: p.scale(c) for k, p in self._coeffs.items()})

    def times(self, p: Polynomial) -> "PolyForm":
        return PolyForm(self.nvars, self.degree, {k: q * p for k, q in self._coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, PolyForm):
            return NotImplemented
        return (self.nvars, self.degree, self._coeffs) == (other.nvars, other.degree, other._coeffs)

    def __hash__(self):
        return hash((self.nvars, self.degree, frozenset(self._coeffs.items())))

    def wedge(self, other: "PolyForm") -> "PolyForm":
        if self.nvars != other.nvars:
            raise ValueError("forms must share nvars")
        k = self.degree + other.degree
        if k > self.nvars:
            raise ValueError(f"wedge product would have degree {k} > {self.nvars}")
        out: Dict[Tuple[int, ...], Polynomial] = {}
        for i1, p1 in self._coeffs.items():
            for i2, p2 in other._coeffs.items():
                sign, key = _sort_with_sign(i1 + i2)
                if not sign:
                    continue
                term = p1 * p2
                out[key] = out.get(key, Polynomial.zero(self.nvars)) + (term if sign > 0 else -term)
        return PolyForm(self.nvars, k, out)

    def d(self) -> "PolyForm":
        """Exterior derivative."""
        if self.degree == self.nvars:
            raise ValueError("exterior derivative of a top-degree form")
        out: Dict[Tuple[int, ...], Polynomial] = {}
        for idx, p in self._coeffs.items():
            for j in range(self.nvars):
                dp = p.derivative(j)
                if dp.is_zero():
                    continue
                sign, key = _sort_with_sign((j,) + idx)
                if not sign:
                    continue
                out[key] = out.get(key, Polynomial.zero(self.nvars)) + (dp if sign > 0 else -dp)
        return PolyForm(self.nvars, self.degree + 1, out)

    def interior(self, field: "PolyVectorField") -> "PolyForm":
        """Contraction with a vector field (lowers degree by one)."""
        if self.degree == 0:
            raise ValueError("cannot contract a 0-form")
        out: Dict[Tuple[int, ...], Polynomial] = {}
        for idx, p in self._coeffs.items():
            for r, i in enumerate(idx):
                comp = field.components[i]
                if comp.is_zero():
                    continue
                rest = idx[:r] + idx[r + 1:]
                term = comp * p
                if r % 2:
                    term = -term
                out[rest] = out.get(rest, Polynomial.zero(self.nvars)) + term
        return PolyForm(self.nvars, self.degree - 1, out)

    def to_string(self, names: Sequence[str] | None = None) -> str:
        names = tuple(names) if names is not None else default_names(self.nvars)
        if not self._coeffs:
            return "0"
        parts = []
        for idx in sorted(self._coeffs):
            p = self._coeffs[idx]
            dpart = "/\\".join(f"d{names[i]}" for i in idx)
            ptxt = p.to_string(names)
            if not idx:
                parts.append(ptxt)
            elif ptxt == "1":
                parts.append(dpart)
            elif len(p) == 1 and not ptxt.startswith("-"):
                parts.append(f"{ptxt}*{dpart}")
            else:
                parts.append(f"({ptxt})*{dpart}")
        return " + ".join(parts)

    def __repr__(self):
        return f"PolyForm({self.nvars}, {self.degree}, {self.to_string()!r})"


@dataclass(frozen=True)
class PolyVectorField:
    """``sum_i components[i] * d/dx_i``."""

    components: Tuple[Polynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))

    @property
    def nvars(self) -> int:
        return len(self.components)

    def __call__(self, p: Polynomial) -> Polynomial:
        out = Polynomial.zero(p.nvars)
        for i, c in enumerate(self.components):
            if not c.is_zero():
                out = out + c * p.derivative(i)
        return out

    apply = __call__

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __add__(self, other: "PolyVectorField") -> "PolyVectorField":
        return PolyVectorField(tuple(a + b for a, b in zip(self.components, other.components)))

    def scale(self, c) -> "PolyVectorField":
        return PolyVectorField(tuple(a.scale(c) for a in self.components))

    def lie_derivative(self, form: PolyForm) -> PolyForm:
        """Cartan formula ``L = i d + d i``."""
        if form.degree == 0:
            return PolyForm.function(self(form.coefficient(())))
        out = form.d().interior(self) if form.degree < form.nvars else PolyForm(form.nvars, form.degree)
        return out + form.interior(self).d()


def _as_form(alpha, nvars: int) -> PolyForm:
    if isinstance(alpha, Polynomial):
        return PolyForm.function(alpha)
    return alpha


def xi_field(alpha, f: Polynomial) -> PolyVectorField:
    """Hamiltonian field of the ``(n-3)``-form ``alpha`` (a Polynomial is a 0-form)."""
    n = f.nvars
    alpha = _as_form(alpha, n)
    if n < 3:
        raise ValueError("need at least 3 variables")
    if alpha.nvars != n:
        raise ValueError("form and polynomial disagree on the number of variables")
    if alpha.degree != n - 3:
        raise ValueError(f"expected a form of degree {n - 3}, got degree {alpha.degree}")
    df = PolyForm.function(f).d()
    omega = alpha.d().wedge(df)
    comps = []
    for i in range(n):
        c = omega.coefficient(tuple(j for j in range(n) if j != i))
        comps.append(c if i % 2 == 0 else -c)
    return PolyVectorField(tuple(comps))


def bracket(alpha, beta, f: Polynomial) -> PolyForm:
    """``{alpha, beta}``: Lie derivative of ``beta`` along ``xi_alpha``.

    For three variables the forms are functions and this returns a 0-form;
    use ``.coefficient(())`` to get the polynomial.
    """
    n = f.nvars
    beta = _as_form(beta, n)
    if beta.degree != n - 3:
        raise ValueError(f"expected a form of degree {n - 3}, got degree {beta.degree}")
    return xi_field(alpha, f).lie_derivative(beta)


def monomial_forms(grading: Grading, degree_bound: int) -> List[PolyForm]:
    """Monomial ``(n-3)``-forms ``x^a dx_I`` with ``|x^a| + sum_{i in I} m_i <= degree_bound``.

    Sorted by weighted degree, then index set, then reverse lex on exponents
    (so ``x`` comes before ``y``).
    """
    n = grading.nvars
    k = n - 3
    if k < 0:
        raise ValueError("need at least 3 variables")
    found = []
    for idx in itertools.combinations(range(n), k):
        base = sum(grading.weights[i] for i in idx)
        for deg in range(0, degree_bound - base + 1):
            for exp in monomials_of_degree(grading.weights, deg):
                found.append((deg + base, idx, tuple(-e for e in exp)))
    found.sort()
    return [
        PolyForm(n, k, {idx: Polynomial.monomial(tuple(-e for e in neg))})
        for _, idx, neg in found
    ]


@dataclass(frozen=True)
class OperatorDescriptor:
    """A generator of the left ideal presenting M(f).

    ``label`` is ``"f"`` for the multiplication operator, otherwise the form
    ``alpha``; ``terms`` lists ``(coefficient, variable index)`` pairs of the
    first-order operator ``xi_alpha``.
    """

    label: str
    polynomial: Polynomial | None = None
    form: PolyForm | None = None
    terms: Tuple[Tuple[Polynomial, int], ...] = ()

    def to_string(self, names: Sequence[str]) -> str:
        if self.polynomial is not None:
            return f"f: {self.polynomial.to_string(names)}"
        body = " + ".join(f"({c.to_string(names)})*d{names[i]}" for c, i in self.terms)
        return f"xi[{self.form.to_string(names)}]: {body}"


def mf_generators(f: Polynomial, grading: Grading, degree_bound: int) -> List[OperatorDescriptor]:
    """``f`` followed by the nonzero ``xi_alpha`` for monomial forms up to ``degree_bound``."""
    if degree_bound < 0:
        raise ValueError("degree_bound must be nonnegative")
    out = [OperatorDescriptor("f", polynomial=f)]
    for alpha in monomial_forms(grading, degree_bound):
        xi = xi_field(alpha, f)
        if xi.is_zero():
            continue
        terms = tuple((c, i) for i, c in enumerate(xi.components) if not c.is_zero())
        out.append(OperatorDescriptor(alpha.to_string(), form=alpha, terms=terms))
    return out


def format_generators(gens: Sequence[OperatorDescriptor], names: Sequence[str]) -> str:
    return "\n".join(g.to_string(names) for g in gens)
