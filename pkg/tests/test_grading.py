import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhsing.grading import (
    Grading,
    NotQuasiHomogeneousError,
    find_weights,
    grading_from_weights,
    weighted_degree,
)

from conftest import P, random_qh


def test_weighted_degree_examples():
    assert weighted_degree((1, 1, 1), (1, 1, 1)) == 3
    assert weighted_degree((0, 1, 3), Grading((15, 10, 6), 30)) == 28
    assert weighted_degree((0, 0, 0), (4, 5, 7)) == 0
    with pytest.raises(ValueError):
        weighted_degree((1, 2), (1, 1, 1))


@pytest.mark.parametrize("text, weights, degree", [
    ("x^3+y^3+z^3", (1, 1, 1), 3),
    ("x^2+y^3+z^5", (15, 10, 6), 30),
    ("x^2*y+y^4+z^2", (3, 2, 4), 8),
    ("x*y+z^2", (1, 1, 1), 2),
])
def test_find_weights(text, weights, degree):
    assert find_weights(P(text)) == Grading(weights, degree)


def _brute_force_min(f, bound=12):
    """Smallest (d, weights) over the box [1, bound]^n."""
    best = None
    for w in itertools.product(range(1, bound + 1), repeat=f.nvars):
        degs = {weighted_degree(e, w) for e, _ in f.items()}
        if len(degs) == 1:
            cand = (degs.pop(), w)
            best = cand if best is None or cand < best else best
    return best


def test_absent_variable_resolution():
    # z is free; the minimal degree is 2 with (2, 1, 1), confirmed by brute force
    g = find_weights(P("x+y^2"))
    assert (g.degree, g.weights) == (2, (2, 1, 1)) == _brute_force_min(P("x+y^2"))


@pytest.mark.parametrize("text", ["x*y+z^2", "x^2*y+z^2", "x*y*z+x^3", "x^2*y+y^4+z^2", "x*y+z^4"])
def test_multigraded_minimum_matches_brute_force(text):
    g = find_weights(P(text))
    assert (g.degree, g.weights) == _brute_force_min(P(text))


@pytest.mark.parametrize("text", ["x^3+y^3+z^3+x*y", "x^2+x^3+y^2+z^2", "x+x^2*y*z+y"])
def test_not_quasi_homogeneous(text):
    with pytest.raises(NotQuasiHomogeneousError):
        find_weights(P(text))


@pytest.mark.parametrize("text", ["0", "7"])
def test_constant_rejected(text):
    with pytest.raises(NotQuasiHomogeneousError):
        find_weights(P(text))


def test_override_validation():
    f = P("x^2+y^3+z^5")
    assert grading_from_weights(f, (30, 20, 12)) == Grading((15, 10, 6), 30)
    with pytest.raises(NotQuasiHomogeneousError):
        grading_from_weights(f, (1, 1, 1))
    with pytest.raises(ValueError):
        grading_from_weights(f, (1, 0, 1))


def test_random_homogeneity_and_determinism():
    rng = random.Random(7)
    for _ in range(40):
        f = random_qh(rng, rng.choice((3, 4)))
        g = find_weights(f)
        assert all(weighted_degree(e, g) == g.degree for e, _ in f.items())
        assert repr(find_weights(f)) == repr(g)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.permutations(range(3)))
def test_permutation_equivariance(seed, perm):
    f = random_qh(random.Random(seed), 3)
    g = find_weights(f)
    gp = find_weights(f.permute(perm))
    permuted = [0] * 3
    for i, p in enumerate(perm):
        permuted[p] = g.weights[i]
    # the cone here is one-dimensional, so the normalized weights just move along
    assert gp.weights == tuple(permuted) and gp.degree == g.degree
