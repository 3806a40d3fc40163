"""Invariants of a quasi-homogeneous isolated hypersurface singularity.

Everything here is read off the graded Jacobi ring ``J = R/(df/dx_1, ..., df/dx_n)``
together with the weights ``m_i`` and the weighted degree ``d`` of ``f``:

* Milnor number ``mu = dim J``;
* reduced genus ``g``: number of monomials of weighted degree ``d - sum(m)``;
* ``h = dim H^{n-2}`` of the punctured zero set: total dimension of the
  Jacobi pieces in degrees ``k = -sum(m) (mod d)``;
* b-function roots ``-(k + sum(m))/d`` over nonzero pieces ``J_k``, plus ``-1``
  (double when ``g > 0``);
* lengths of ``D f^lam / D f^(lam+1)``: ``1 + g`` at ``lam = -1``, otherwise
  ``dim J_(-d*lam - sum(m))``;
* length of ``D[s]f^s / D[s]f^(s+1)`` (and of the Hamiltonian module): ``1 + mu + h``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, prod
from typing import Dict, List, Optional, Tuple

from .grading import Grading, find_weights, grading_from_weights
from .groebner import (
    DEFAULT_MAX_DEGREE,
    INFINITE,
    GroebnerBasis,
    MonomialOrder,
    StandardMonomialBasis,
    buchberger,
    standard_monomials,
)
from .poly import Polynomial, format_rational, monomials_of_degree

__all__ = [
    "SmoothAtOriginError",
    "NonIsolatedSingularityError",
    "InconsistentInvariantsError",
    "GradedQuotientBasis",
    "BFunction",
    "SpectrumEntry",
    "LengthSummary",
    "StructureReport",
    "InvariantReport",
    "jacobi_ring",
    "reduced_genus",
    "link_cohomology_dim",
    "b_function",
    "length_quotient",
    "length_summary",
    "structure_report",
    "steenbrink_table",
    "check_nonvanishing",
    "milnor_product_formula",
    "analyze",
]


class SmoothAtOriginError(ValueError):
    pass


class NonIsolatedSingularityError(ValueError):
    pass


class InconsistentInvariantsError(RuntimeError):
    """Two computations that must agree did not; indicates a bug upstream."""


@dataclass(frozen=True)
class GradedQuotientBasis:
    basis: StandardMonomialBasis
    hilbert: Dict[int, int]
    mu: int
    groebner: Optional[GroebnerBasis] = field(default=None, compare=False, repr=False)

    def dim(self, k) -> int:
        return self.hilbert.get(k, 0) if isinstance(k, int) else 0

    @property
    def top_degree(self) -> int:
        return max(self.hilbert) if self.hilbert else -1


def jacobi_ring(f: Polynomial, grading: Grading, max_degree: int = DEFAULT_MAX_DEGREE) -> GradedQuotientBasis:
    """Graded standard-monomial basis of the Jacobi ring of ``f``.

    Raises :class:`SmoothAtOriginError` if some partial derivative of ``f``
    is nonzero at the origin and :class:`NonIsolatedSingularityError` if the
    Jacobian ideal is not zero-dimensional.
    """
    if f.nvars != grading.nvars:
        raise ValueError("grading and polynomial disagree on the number of variables")
    if f.is_zero() or f.is_constant():
        raise ValueError("f must be nonconstant")
    if any(sum(e) == 1 for e, _ in f.items()) or any(sum(e) == 0 for e, _ in f.items()):
        raise SmoothAtOriginError("smooth at origin: the gradient of f does not vanish at 0")
    order = MonomialOrder.from_grading(grading)
    gb = buchberger(f.gradient(), order, max_degree=max_degree)
    sm = standard_monomials(gb)
    if sm == INFINITE:
        raise NonIsolatedSingularityError(
            "non-isolated singularity: Jacobian ideal not zero-dimensional"
        )
    return GradedQuotientBasis(sm, sm.hilbert(), len(sm), gb)


def milnor_product_formula(grading: Grading) -> Fraction:
    d = grading.degree
    return prod((Fraction(d - m, m) for m in grading.weights), start=Fraction(1))


def hilbert_symmetry_center(grading: Grading) -> int:
    return sum(grading.degree - 2 * m for m in grading.weights)


def reduced_genus(grading: Grading) -> int:
    """Number of monomials of weighted degree ``d - sum(m_i)`` (0 if negative)."""
    target = grading.degree - grading.weight_sum
    return sum(1 for _ in monomials_of_degree(grading.weights, target))


def link_cohomology_dim(jb: GradedQuotientBasis, grading: Grading) -> int:
    d, s = grading.degree, grading.weight_sum
    return sum(v for k, v in jb.hilbert.items() if (k + s) % d == 0)


@dataclass(frozen=True)
class BFunction:
    """Roots (exact, negative) with multiplicities, sorted in descending order."""

    roots: Tuple[Tuple[Fraction, int], ...]

    @property
    def root_set(self) -> Tuple[Fraction, ...]:
        return tuple(r for r, _ in self.roots)

    def multiplicity(self, lam) -> int:
        lam = Fraction(lam)
        return next((m for r, m in self.roots if r == lam), 0)

    def degree(self) -> int:
        return sum(m for _, m in self.roots)

    def integral_roots(self) -> Tuple[Fraction, ...]:
        return tuple(r for r, _ in self.roots if r.denominator == 1)

    def __str__(self) -> str:
        parts = []
        for r, m in self.roots:
            factor = f"(s+{format_rational(-r)})"
            parts.append(factor if m == 1 else f"{factor}^{m}")
        return "".join(parts)


def _root_of_degree(k: int, grading: Grading) -> Fraction:
    return -Fraction(k + grading.weight_sum, grading.degree)


def b_function(jb: GradedQuotientBasis, grading: Grading, genus: int) -> BFunction:
    roots = {Fraction(-1)}
    roots.update(_root_of_degree(k, grading) for k, v in jb.hilbert.items() if v > 0)
    return BFunction(tuple(
        (r, 2 if r == -1 and genus > 0 else 1) for r in sorted(roots, reverse=True)
    ))


def length_quotient(lam, jb: GradedQuotientBasis, grading: Grading, genus: int) -> int:
    """Length of ``D f^lam / D f^(lam+1)`` for an exact rational ``lam``."""
    lam = Fraction(lam)
    if lam == -1:
        return 1 + genus
    k = -grading.degree * lam - grading.weight_sum
    if k.denominator != 1 or k < 0:
        return 0
    return jb.dim(int(k))


@dataclass(frozen=True)
class LengthSummary:
    len_ds: int
    len_Mf: int
    len_H1f: int
    len_D_inverse: int
    ker_p: int
    ker_q_minus1: int
    ker_pi: int
    generated_by_inverse: bool


def length_summary(mu: int, genus: int, h: int) -> LengthSummary:
    if h < genus:
        raise InconsistentInvariantsError(f"h = {h} is smaller than the genus {genus}")
    return LengthSummary(
        len_ds=1 + mu + h,
        len_Mf=1 + mu + h,
        len_H1f=1 + h,
        len_D_inverse=1 + genus,
        ker_p=h,
        ker_q_minus1=h - genus,
        ker_pi=genus,
        generated_by_inverse=(h == genus),
    )


@dataclass(frozen=True)
class StructureReport:
    """``delta^(mu-g) + N`` where ``N`` has layers ``delta^h``, ``IC(X)``, ``delta^g`` (bottom up)."""

    delta_summand: int
    bottom: int
    top: int

    @property
    def layers(self) -> Tuple[str, str, str]:
        return (f"δ^{self.bottom}", "IC(X)", f"δ^{self.top}")

    @property
    def total_length(self) -> int:
        return self.delta_summand + self.bottom + 1 + self.top

    def __str__(self) -> str:
        return f"δ^{self.delta_summand} ⊕ N, N layers ({', '.join(self.layers)})"


def structure_report(mu: int, genus: int, h: int) -> StructureReport:
    return StructureReport(delta_summand=mu - genus, bottom=h, top=genus)


@dataclass(frozen=True)
class SpectrumEntry:
    beta: Fraction
    j: int
    dim: int

    @property
    def eigenvalue_rotation(self) -> Fraction:
        # monodromy eigenvalue is exp(-2*pi*i*beta)
        return self.beta

    @property
    def lam(self) -> Fraction:
        return -self.j - self.beta

    @property
    def alpha(self) -> Fraction:
        return self.j + self.beta


def steenbrink_table(jb: GradedQuotientBasis, grading: Grading) -> List[SpectrumEntry]:
    merged: Dict[Tuple[Fraction, int], int] = {}
    for k, v in jb.hilbert.items():
        if v <= 0:
            continue
        alpha = Fraction(k + grading.weight_sum, grading.degree)
        j = floor(alpha)
        key = (alpha - j, j)
        merged[key] = merged.get(key, 0) + v
    return [SpectrumEntry(beta, j, v) for (beta, j), v in sorted(merged.items(), key=lambda kv: (kv[0][1], kv[0][0]))]


def check_nonvanishing(bf: BFunction, lengths) -> bool:
    """True iff every b-root has a nonzero quotient length.

    ``lengths`` is a mapping from lambda to length or a callable.
    """
    get = lengths if callable(lengths) else (lambda lam: lengths.get(lam, 0))
    return all(get(r) > 0 for r in bf.root_set)


@dataclass(frozen=True)
class InvariantReport:
    f: Polynomial
    grading: Grading
    jacobi: GradedQuotientBasis
    mu: int
    genus: int
    h: int
    bfunction: BFunction
    lengths: Dict[Fraction, int]
    summary: LengthSummary
    structure: StructureReport
    spectrum: Tuple[SpectrumEntry, ...]

    @property
    def len_ds(self) -> int:
        return self.summary.len_ds

    @property
    def len_Mf(self) -> int:
        return self.summary.len_Mf

    @property
    def len_H1f(self) -> int:
        return self.summary.len_H1f

    @property
    def generated_by_inverse(self) -> bool:
        return self.summary.generated_by_inverse

    def length(self, lam) -> int:
        return length_quotient(lam, self.jacobi, self.grading, self.genus)


def analyze(
    f: Polynomial,
    grading: Grading | None = None,
    weights=None,
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> InvariantReport:
    """Run the whole pipeline: weights, Jacobi ring, invariants."""
    if f.nvars < 3:
        raise ValueError("at least 3 variables are required")
    if grading is None:
        grading = grading_from_weights(f, weights) if weights is not None else find_weights(f)
    jb = jacobi_ring(f, grading, max_degree=max_degree)
    genus = reduced_genus(grading)
    h = link_cohomology_dim(jb, grading)
    bf = b_function(jb, grading, genus)
    lengths = {r: length_quotient(r, jb, grading, genus) for r in bf.root_set}
    return InvariantReport(
        f=f,
        grading=grading,
        jacobi=jb,
        mu=jb.mu,
        genus=genus,
        h=h,
        bfunction=bf,
        lengths=lengths,
        summary=length_summary(jb.mu, genus, h),
        structure=structure_report(jb.mu, genus, h),
        spectrum=tuple(steenbrink_table(jb, grading)),
    )
