from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from vfilt.bfun import (
    AffineBFamily,
    BFunction,
    FamilyDataError,
    box_points,
    c_poly,
    check_symmetry,
    greedy_exponents,
    integer_class_count,
    root_class_counts,
    transport,
    transport_gcd,
)
from vfilt.oracle import c_poly_bruteforce
from vfilt.ratpoly import RootPoly, linear

pool = [F(k) for k in range(-5, 6)] + [F(k, 2) for k in range(-9, 10, 2)] + [F(k, 3) for k in (-4, -2, -1, 1, 2, 4)]
roots = st.sampled_from(pool)
rootpolys = st.lists(roots, max_size=6).map(RootPoly.from_roots)
bfunctions = st.lists(roots, min_size=1, max_size=6).map(lambda xs: BFunction(tuple(xs)))


def test_bfunction_basics():
    b = BFunction((2, 1))
    assert b.lambdas == (F(1), F(2))
    assert str(b) == "(s+1)(s+2)"
    assert b.poly == RootPoly.from_roots([-1, -2])
    assert b.shift(1) == BFunction((2, 3))
    assert b(-1) == 0 and b(0) == 2
    assert BFunction.from_poly(b.poly) == b


def test_c_poly_examples():
    # frozen from the partial-gcd oracle
    assert c_poly(linear(1), RootPoly.from_roots([-1, -2])) == linear(1)
    assert c_poly(linear(3), linear(1)) == RootPoly.one()
    assert c_poly(RootPoly.one(), linear(1)) == RootPoly.one()
    assert c_poly(RootPoly.from_roots([-1, -2, -2]), RootPoly.from_roots([-1, -2])) == RootPoly.from_roots(
        [-1, -2, -2]
    )


def test_transport_pinned_case():
    b = BFunction((1, 2))
    assert transport(b, linear(1), check=True) == BFunction((2, 2))


def test_greedy_exponents_take_longest_chains_from_the_top():
    p = RootPoly.from_roots([-1, -2, -2])
    # shift 2 is served first and takes (s+2); shift 1 then takes (s+1)(s+2)
    assert greedy_exponents(p, [F(1), F(2)]) == [2, 1]


@settings(max_examples=200)
@given(rootpolys, rootpolys)
def test_c_poly_matches_partial_gcds(p, q):
    assert c_poly(p, q) == c_poly_bruteforce(p, q, verify=True)


@settings(max_examples=200)
@given(bfunctions, rootpolys)
def test_transport_routes_agree(b, p):
    assert transport(b, p) == transport_gcd(b, p)


@given(bfunctions, rootpolys)
def test_transport_preserves_degree_and_raises_shifts(b, p):
    out = transport(b, p)
    assert out.degree == b.degree
    assert sum(out.lambdas) - sum(b.lambdas) == sum(greedy_exponents(p, b.lambdas))


def test_root_classes():
    b = BFunction((F(1, 2), F(3, 2), 1))
    assert root_class_counts(b) == {F(1, 2): 2, F(0): 1}
    assert integer_class_count(b, F(-1, 2)) == 2
    assert integer_class_count(b, 5) == 1


E6 = {
    "name": "e6",
    "dim": 27,
    "d": 3,
    "generators": 3,
    "degrees": [1, 2, 3],
    "sigma_index": 3,
    "r": ["1", "5", "9"],
    "c": [[0, 0, 1], [0, 1, 1], [1, 1, 1]],
}


def test_affine_family_from_json():
    fam = AffineBFamily.from_json(E6)
    assert fam.eval((0, 0, 0)) == BFunction((1, 5, 9))
    assert fam.eval((1, 2, -1)) == BFunction((0, 6, 11))
    assert AffineBFamily.from_json(fam.to_json()) == fam
    fam.validate_samples(box_points(fam, 3, sigma_negative=True))
    with pytest.raises(ValueError):
        fam.eval((-1, 0, 0))


@pytest.mark.parametrize(
    "change",
    [
        {"c": [[0, 0, 1], [0, 3, 1], [1, 1, 1]]},  # c above deg h_2
        {"r": ["1", "5"]},
        {"sigma_index": 4},
        {"degrees": [1, 2]},
    ],
)
def test_affine_family_rejects_bad_documents(change):
    with pytest.raises(FamilyDataError):
        AffineBFamily.from_json({**E6, **change})


def test_missing_keys_rejected():
    doc = dict(E6)
    del doc["r"]
    with pytest.raises(FamilyDataError):
        AffineBFamily.from_json(doc)


def test_shift_law_violation_detected():
    fam = AffineBFamily.from_json({**E6, "c": [[0, 0, 1], [0, 1, 1], [1, 1, 0]]})
    with pytest.raises(FamilyDataError):
        fam.validate_samples([(0, 0, 0)])


def test_root_class_change_detected():
    doc = {**E6, "r": ["1", "5", "1/2"], "c": [[0, 0, 1], [0, 1, 1], [1, 1, 1]]}
    fam = AffineBFamily.from_json(doc)
    fam.validate_samples([(0, 0, 0), (1, 0, 0)])
    doc = {**doc, "c": [["1/2", 0, 1], [0, 1, 1], [1, 1, 1]]}
    with pytest.raises(FamilyDataError):
        AffineBFamily.from_json(doc).validate_samples([(0, 0, 0), (1, 0, 0)])


def test_symmetry_report_flags_counterexample():
    fam = AffineBFamily.from_json(E6)
    good = check_symmetry(fam, 27, lambda a: (a[1], a[0], -a[0] - a[1] - a[2]), box_points(fam, 4))
    assert good.passed and good.checked == 64
    bad = check_symmetry(fam, 27, lambda a: a, box_points(fam, 2))
    assert not bad.passed and bad.counterexample is not None
