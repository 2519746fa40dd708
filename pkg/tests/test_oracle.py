"""The brute-force references on hand-checked inputs, and their own consistency."""

import random
from fractions import Fraction as F

import pytest

from vfilt.bfun import BFunction
from vfilt.oracle import (
    c_poly_bruteforce,
    jordan_weight_dim,
    p_function_greedy,
    partial_gcd,
    transport_bruteforce,
)
from vfilt.ratpoly import RootPoly, linear

det2 = BFunction((1, 2))


def test_partial_gcds_by_hand():
    # i=0: (s+1); i=1: (s+2)(s+1)(s+2)
    q = RootPoly.from_roots([-1, -2])
    assert partial_gcd(linear(1), q, 1) == linear(1)
    # i=0: (s+3); i=1: (s+4)(s+1)
    assert partial_gcd(linear(3), linear(1), 1) == RootPoly.one()
    assert c_poly_bruteforce(RootPoly.one(), q, verify=True) == RootPoly.one()


def test_transport_bruteforce_pinned():
    assert transport_bruteforce(det2, linear(1)) == BFunction((2, 2))


@pytest.mark.parametrize(
    "alpha, expected",
    [
        (F(1, 2), RootPoly.one()),
        (F(2), linear(1)),
        (F(3), RootPoly.from_roots([-1, -2, -2])),
        (F(-5), RootPoly.one()),
    ],
)
def test_greedy_p_function(alpha, expected):
    assert p_function_greedy(det2, alpha) == expected


def test_greedy_independent_of_choice():
    rng = random.Random(7)
    b = BFunction((F(-1, 2), 0, 0, 1, F(4, 3)))
    for alpha in (F(5, 2), F(3), F(10, 3)):
        first = p_function_greedy(b, alpha)
        for _ in range(10):
            assert p_function_greedy(b, alpha, rng) == first


def test_stability_bound_holds_on_spread_roots():
    p = RootPoly.from_roots([-5, 5, F(1, 2), F(-9, 2), 0])
    q = RootPoly.from_roots([5, -5, F(7, 2), F(1, 3)])
    c_poly_bruteforce(p, q, verify=True)


def test_jordan_small_cases():
    assert all(jordan_weight_dim(0, 1, ell) == 0 for ell in range(-3, 4))
    assert jordan_weight_dim(1, 1, 0) == 1
    assert jordan_weight_dim(1, 1, -1) == 0
    assert jordan_weight_dim(2, F(1, 2), 0) == 1
    assert jordan_weight_dim(2, 0, 1) == 2


@pytest.mark.parametrize("nu", range(0, 7))
def test_jordan_steps_and_total(nu):
    dims = [jordan_weight_dim(nu, F(-2, 3), ell) for ell in range(-nu - 1, nu + 2)]
    assert all(b - a in (0, 1) for a, b in zip(dims, dims[1:]))
    assert dims[0] == 0 and dims[-1] == nu
