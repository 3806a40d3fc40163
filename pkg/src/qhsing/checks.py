"""Internal-consistency checks run by ``qhsing check``.

Each check recomputes a quantity along an independent route (or verifies an
identity that must hold) and reports a pass/fail line.  A failure means a bug,
not a property of the input.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import List

from .groebner import normal_form, s_polynomial
from .hamiltonian import monomial_forms, xi_field
from .invariants import (
    InvariantReport,
    check_nonvanishing,
    hilbert_symmetry_center,
    milnor_product_formula,
    reduced_genus,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


def default_degree_bound(report: InvariantReport) -> int:
    return hilbert_symmetry_center(report.grading) + 1


def run_checks(report: InvariantReport, degree_bound: int | None = None) -> List[CheckResult]:
    g = report.grading
    jb = report.jacobi
    out = []

    product = milnor_product_formula(g)
    out.append(CheckResult("milnor-product", product == report.mu,
                           f"mu={report.mu}, product formula={product}"))

    sigma = hilbert_symmetry_center(g)
    symmetric = all(jb.dim(k) == jb.dim(sigma - k) for k in range(-1, sigma + 2))
    top = max(jb.hilbert) if jb.hilbert else 0
    out.append(CheckResult("hilbert-symmetry", symmetric and top == sigma,
                           f"center {sigma}, top degree {top}"))

    total = sum(report.lengths.values())
    out.append(CheckResult("length-sum", total == 1 + report.mu
                           and total + report.h == report.len_ds,
                           f"sum over b-roots={total}, 1+mu={1 + report.mu}, len_ds={report.len_ds}"))

    genus_jacobi = jb.dim(g.degree - g.weight_sum)
    out.append(CheckResult("genus-two-ways", reduced_genus(g) == genus_jacobi == report.genus,
                           f"monomial count={reduced_genus(g)}, dim J={genus_jacobi}"))

    spec_sum = sum(e.dim for e in report.spectrum)
    out.append(CheckResult("spectrum-sum", spec_sum == report.mu, f"{spec_sum} vs mu={report.mu}"))

    out.append(CheckResult("h-at-least-genus", report.h >= report.genus,
                           f"h={report.h}, g={report.genus}"))

    integral = report.bfunction.integral_roots()
    out.append(CheckResult("generated-by-inverse",
                           report.generated_by_inverse == (integral == (Fraction(-1),)),
                           f"integral roots {[str(r) for r in integral]}"))

    lo = -Fraction(sigma + g.weight_sum, g.degree)
    hi = -Fraction(g.weight_sum, g.degree)
    in_range = all(lo <= r <= hi for r in report.bfunction.root_set if r != -1)
    out.append(CheckResult("b-root-range", in_range, f"[{lo}, {hi}]"))

    out.append(CheckResult("nonvanishing",
                           check_nonvanishing(report.bfunction, report.length),
                           "every b-root has a nonzero quotient"))

    gb = jb.groebner
    if gb is not None:
        cert = all(
            normal_form(s_polynomial(p, q, gb.order), gb).is_zero()
            for p, q in itertools.combinations(gb.generators, 2)
        ) and all(normal_form(d, gb).is_zero() for d in report.f.gradient())
        out.append(CheckResult("groebner-certificate", cert,
                               f"{len(gb)} basis elements"))

    bound = default_degree_bound(report) if degree_bound is None else degree_bound
    forms = monomial_forms(g, bound)
    bad = [a for a in forms if not xi_field(a, report.f)(report.f).is_zero()]
    out.append(CheckResult("tangency", not bad,
                           f"{len(forms)} forms up to weighted degree {bound}"))
    return out
