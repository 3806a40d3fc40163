"""Weight detection for quasi-homogeneous polynomials."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence, Tuple

from .poly import Polynomial

__all__ = [
    "Grading",
    "NotQuasiHomogeneousError",
    "weighted_degree",
    "find_weights",
    "grading_from_weights",
]


class NotQuasiHomogeneousError(ValueError):
    pass


@dataclass(frozen=True)
class Grading:
    """Positive integer weights ``m_i`` and the weighted degree ``d = |f|``."""

    weights: Tuple[int, ...]
    degree: int

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(m) for m in self.weights))
        if not self.weights or any(m < 1 for m in self.weights):
            raise ValueError("weights must be positive integers")
        if gcd(*self.weights) != 1:
            raise ValueError("weights must have gcd 1")
        if self.degree < 1:
            raise ValueError("degree must be positive")

    @property
    def nvars(self) -> int:
        return len(self.weights)

    @property
    def weight_sum(self) -> int:
        return sum(self.weights)

    def degree_of(self, exp: Sequence[int]) -> int:
        return weighted_degree(exp, self)

    def is_homogeneous(self, p: Polynomial) -> bool:
        return all(self.degree_of(e) == self.degree for e, _ in p.items())


def weighted_degree(exp: Sequence[int], grading) -> int:
    """``sum(exp[i] * m_i)``; ``grading`` may be a Grading or a weight sequence."""
    weights = grading.weights if isinstance(grading, Grading) else tuple(grading)
    if len(exp) != len(weights):
        raise ValueError(
            f"monomial has {len(exp)} exponents but grading has {len(weights)} weights"
        )
    return sum(e * m for e, m in zip(exp, weights))


def _rref(rows):
    """Reduced row echelon form over Q. Returns (matrix, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def _positive_solution_exists(exps, ncols) -> bool:
    # exact search below needs a guarantee of termination
    import numpy as np
    from scipy.optimize import linprog

    a_eq = np.array([[float(e[c]) for c in range(ncols)] + [-1.0] for e in exps])
    bounds = [(1, None)] * ncols + [(0, None)]
    res = linprog(np.zeros(ncols + 1), A_eq=a_eq, b_eq=np.zeros(len(exps)),
                  bounds=bounds, method="highs")
    return res.status == 0


def find_weights(f: Polynomial) -> Grading:
    """Find the normalized grading making ``f`` weighted homogeneous.

    Among all positive integer weight vectors under which every monomial of
    ``f`` has the same degree, return the one with the smallest degree ``d``,
    breaking ties by the lexicographically smallest weight vector.  Variables
    absent from ``f`` get weight 1.

    Raises :class:`NotQuasiHomogeneousError` if no positive grading exists.
    """
    if f.is_zero() or f.is_constant():
        raise NotQuasiHomogeneousError("input is zero or constant")
    n = f.nvars
    exps = sorted(e for e, _ in f.items())
    if any(not any(e) for e in exps):
        raise NotQuasiHomogeneousError(
            "not quasi-homogeneous: constant term next to nonconstant terms"
        )
    occ = [i for i in range(n) if any(e[i] for e in exps)]
    k = len(occ)
    rows = [[e[i] for i in occ] + [1] for e in exps]
    red, pivots = _rref(rows)
    if k in pivots:
        raise NotQuasiHomogeneousError(
            "not quasi-homogeneous: monomials admit no common weighted degree"
        )
    free = [c for c in range(k) if c not in pivots]
    # pivot variable = d * rhs - sum(coef * free variable)
    pivot_rows = [(c, red[r][k], [red[r][fc] for fc in free]) for r, c in enumerate(pivots)]

    def assemble(values):
        full = [1] * n
        for c, v in values.items():
            full[occ[c]] = v
        return tuple(full)

    if not free:
        sol = [red[r][k] for r in range(len(pivots))]
        if any(s <= 0 for s in sol):
            raise NotQuasiHomogeneousError(
                "not quasi-homogeneous: no strictly positive weights"
            )
        # smallest d making every weight integral; the weights then have gcd 1
        d = lcm(*(s.denominator for s in sol))
        weights = assemble({c: int(red[r][k] * d) for r, c in enumerate(pivots)})
        return _normalize(f, weights)

    if not _positive_solution_exists([[e[i] for i in occ] for e in exps], k):
        raise NotQuasiHomogeneousError(
            "not quasi-homogeneous: no strictly positive weights"
        )
    d = 0
    while True:
        d += 1
        found = []
        for vals in itertools.product(range(1, d + 1), repeat=len(free)):
            values = dict(zip(free, vals))
            ok = True
            for c, rhs, coefs in pivot_rows:
                v = d * rhs - sum(a * b for a, b in zip(coefs, vals))
                if v.denominator != 1 or v < 1:
                    ok = False
                    break
                values[c] = int(v)
            if ok:
                found.append(assemble(values))
        if found:
            return _normalize(f, min(found))


def _normalize(f: Polynomial, weights) -> Grading:
    g = gcd(*weights)
    weights = tuple(w // g for w in weights)
    degrees = {weighted_degree(e, weights) for e, _ in f.items()}
    if len(degrees) != 1:
        raise NotQuasiHomogeneousError("not quasi-homogeneous for the given weights")
    return Grading(weights, degrees.pop())


def grading_from_weights(f: Polynomial, weights: Sequence[int]) -> Grading:
    """Validate user-supplied weights against ``f`` (weights are divided by their gcd)."""
    weights = tuple(int(w) for w in weights)
    if len(weights) != f.nvars:
        raise ValueError(f"expected {f.nvars} weights, got {len(weights)}")
    if any(w < 1 for w in weights):
        raise ValueError("weights must be positive integers")
    if f.is_zero() or f.is_constant():
        raise NotQuasiHomogeneousError("input is zero or constant")
    return _normalize(f, weights)


def is_weighted_homogeneous(p: Polynomial, weights: Sequence[int]) -> bool:
    return len({weighted_degree(e, weights) for e, _ in p.items()}) <= 1

