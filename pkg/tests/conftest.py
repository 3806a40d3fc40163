import random
from math import lcm

import pytest

from qhsing.invariants import NonIsolatedSingularityError, analyze
from qhsing.poly import Polynomial, monomials_of_degree, parse_polynomial

XYZ = ("x", "y", "z")


def P(text, names=XYZ):
    return parse_polynomial(text, names)


def random_qh(rng, n=3, max_exp=6):
    """Brieskorn-Pham polynomial plus a few random monomials of the same weighted degree."""
    exps = [rng.randint(2, max_exp) for _ in range(n)]
    d = lcm(*exps)
    weights = [d // a for a in exps]
    terms = {}
    for i, a in enumerate(exps):
        e = [0] * n
        e[i] = a
        terms[tuple(e)] = rng.choice([1, 2, -1, 3, -5])
    extra = [m for m in monomials_of_degree(weights, d) if m not in terms and sum(m) >= 2]
    for m in rng.sample(extra, min(len(extra), rng.randint(0, 3))):
        terms[m] = rng.randint(-4, 4) or 1
    return Polynomial(n, terms)


def random_isolated_reports(seed, count, n_choices=(3,)):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        f = random_qh(rng, rng.choice(n_choices))
        try:
            out.append(analyze(f))
        except NonIsolatedSingularityError:
            continue
    return out


CORPUS = {
    "quadric": "x^2+y^2+z^2",
    "fermat_cubic": "x^3+y^3+z^3",
    "fermat_quartic": "x^4+y^4+z^4",
    "e8": "x^2+y^3+z^5",
}


@pytest.fixture(scope="session")
def corpus_reports():
    return {name: analyze(P(text)) for name, text in CORPUS.items()}
