import json
from fractions import Fraction as F

import pytest

from vfilt.bfun import BFunction, FamilyDataError, box_points, check_symmetry
from vfilt.filtration import nu
from vfilt.spaces import (
    E6_FAMILY_JSON,
    RouteMismatchError,
    SpaceFamily,
    builtin,
    graded_character,
    ideal_weight_membership,
    ideal_weight_set,
    load_family,
    symdet_ceiling_exponents,
)


def test_builtin_b_functions():
    assert str(builtin("det", 2).b_of_weight((0, 0))) == "(s+1)(s+2)"
    assert builtin("symdet", 2).b_of_weight((0, 0)) == BFunction((1, F(3, 2)))
    assert str(builtin("pfaffian", 4).b_of_weight((0, 0, 0, 0))) == "(s+1)(s+3)"
    assert str(builtin("e6").b_of_weight((0, 0, 0))) == "(s+1)(s+5)(s+9)"
    assert builtin("e6", 99).n_dim == 27


@pytest.mark.parametrize(
    "name, n, weight",
    [
        ("det", 2, (0, 1)),
        ("det", 2, (0,)),
        ("symdet", 2, (1, 1)),
        ("pfaffian", 4, (2, 1, 1, 0)),
        ("e6", None, (-1, 0, 0)),
    ],
)
def test_weight_model_rejects(name, n, weight):
    with pytest.raises(ValueError):
        builtin(name, n).b_of_weight(weight)


def test_builtin_rejects_bad_names():
    with pytest.raises(ValueError):
        builtin("spinor", 3)
    with pytest.raises(ValueError):
        builtin("pfaffian", 3)
    with pytest.raises(ValueError):
        builtin("det", None)


def test_structure_sheaf_weights():
    fam = builtin("det", 2)
    assert fam.is_weight((0, -1)) and not fam.is_weight((0, -1), structure_sheaf=True)
    assert all(w[-1] >= 0 for w in fam.weights(3, structure_sheaf=True))
    assert len(list(fam.weights(1))) == 6
    assert sorted(builtin("pfaffian", 4).weights(1, True)) == [(0, 0, 0, 0), (1, 1, 0, 0), (1, 1, 1, 1)]


@pytest.mark.parametrize("name, n", [("det", 3), ("symdet", 3), ("pfaffian", 6), ("e6", None)])
def test_shift_law_and_degree(name, n):
    fam = builtin(name, n)
    for w in fam.weights(3):
        b = fam.b_of_weight(w)
        assert b.degree == fam.d
        assert fam.b_of_weight(fam.shift_weight(w)) == b.shift(1)


@pytest.mark.parametrize("name, n", [("det", 3), ("symdet", 4), ("pfaffian", 6)])
def test_affine_view_agrees(name, n):
    fam = builtin(name, n)
    aff = fam.affine_view()
    for w in fam.weights(3):
        assert aff.eval(fam.weight_to_affine(w)) == fam.b_of_weight(w)


@pytest.mark.parametrize("name, n", [("det", 2), ("det", 4), ("symdet", 3), ("pfaffian", 4), ("pfaffian", 6), ("e6", None)])
def test_duality_symmetry(name, n):
    fam = builtin(name, n)
    aff = fam.affine_view()
    report = check_symmetry(aff, fam.n_dim, fam.dual, box_points(aff, 4, sigma_negative=True))
    assert report.passed, report.detail


def test_det2_dual_map():
    assert builtin("det", 2).dual((3, 5)) == (3, -8)


def test_membership_examples():
    det2 = builtin("det", 2)
    assert all(ideal_weight_membership(det2, 0, 1, w) for w in det2.weights(6, True))
    e6 = builtin("e6")
    assert ideal_weight_membership(e6, 4, F(1, 10), (0, 0, 0))
    assert not ideal_weight_membership(e6, 5, F(1, 10), (0, 0, 0))
    assert ideal_weight_membership(e6, 5, F(1, 10), (0, 1, 0))


def test_symdet_first_proper_ideal():
    fam = builtin("symdet", 2)
    # at alpha = 1/2 nothing is cut out yet: deg p_{(0,0), 3/2} = 1
    assert ideal_weight_membership(fam, 1, F(1, 2), (0, 0))
    # just above 1/2 the ideal is J_{n-1}: the trivial weight drops out
    assert not ideal_weight_membership(fam, 1, F(3, 4), (0, 0))
    assert ideal_weight_membership(fam, 1, F(3, 4), (2, 0))
    for n in (2, 3, 4):
        fam = builtin("symdet", n)
        for w in fam.weights(6, True):
            in_j = fam.statistic(w, n - 1) >= 1
            assert ideal_weight_membership(fam, 1, F(3, 4), w) == in_j


def test_symdet_ceiling_exponents_shape():
    exps = {q.t: q.bound for q in symdet_ceiling_exponents(3, 1, F(1, 2))}
    # m = 2: ceil((2 - 1)) = 1; m = 1: ceil((2 - 1/2)/2 + 1/4) = 1
    assert exps == {1: 1, 2: 1, 3: 0}


def test_inequalities_gated_to_unit_interval():
    with pytest.raises(ValueError):
        builtin("det", 2).inequalities(1, F(3, 2))
    with pytest.raises(ValueError):
        ideal_weight_membership(builtin("det", 2), 1, F(3, 2), (0, 0), route="inequality")
    # the degree route still answers
    assert ideal_weight_membership(builtin("det", 2), 1, F(3, 2), (0, 0)) is False
    with pytest.raises(ValueError):
        ideal_weight_membership(builtin("det", 2), 1, 0, (0, 0))


def test_route_mismatch_is_reported():
    class Broken(type(builtin("det", 2))):
        def inequalities(self, k, alpha):
            return [q.__class__(q.t, q.bound + 1, q.ideal) for q in super().inequalities(k, alpha)]

    with pytest.raises(RouteMismatchError):
        ideal_weight_membership(Broken(2), 1, 1, (0, 0))


def test_weight_set_det3():
    ws = ideal_weight_set(builtin("det", 3), 1, 1, 3)
    assert ws.primary_decomposition == [
        {"t": 1, "ideal": "J_1", "exponent": 0},
        {"t": 2, "ideal": "J_2", "exponent": 0},
    ]
    assert len(ws.weights) == len(list(builtin("det", 3).weights(3, True)))
    doc = json.loads(json.dumps(ws.to_json()))
    assert set(doc) == {"constraints", "weights", "primary_decomposition"}


def test_weight_set_pfaffian_singular_locus():
    ws = ideal_weight_set(builtin("pfaffian", 4), 3, F(1, 2), 4)
    assert ws.primary_decomposition == [{"t": 1, "ideal": "J_2", "exponent": 1}]
    assert (0, 0, 0, 0) not in ws.weights and (1, 1, 0, 0) in ws.weights


def test_weight_set_shrinks_with_k_and_alpha():
    fam = builtin("det", 3)
    for k in range(4):
        here = set(ideal_weight_set(fam, k, F(1, 2), 4).weights)
        assert set(ideal_weight_set(fam, k + 1, F(1, 2), 4).weights) <= here
        assert set(ideal_weight_set(fam, k, F(3, 2), 4).weights) <= here


def test_small_k_and_large_k():
    fam = builtin("e6")
    box = list(fam.weights(3, True))
    assert len(ideal_weight_set(fam, 0, F(1, 3), 3).weights) == len(box)
    # deg p_{lambda, alpha + k} grows like d k, so a bounded box empties out
    assert ideal_weight_set(fam, 30, F(1, 3), 3).weights == []


def test_graded_character():
    fam = builtin("det", 2)
    grw = graded_character(fam, 1, 2, 2, "grW")
    assert [tw.weight for tw in grw] == [(-2, -2), (-1, -2), (-1, -1)]
    assert str(grw[0]) == "(-2, -2) - 1*sigma"
    everything = graded_character(fam, 1, fam.d, 3, "weight")
    assert len(everything) == len(list(fam.weights(3)))
    for ell in range(fam.d):
        low = {tw.weight for tw in graded_character(fam, 1, ell, 3, "weight")}
        high = {tw.weight for tw in graded_character(fam, 1, ell + 1, 3, "weight")}
        assert low <= high
    for tw in graded_character(fam, 2, 0, 3, "grWgrV"):
        assert (tw.nu + 0) % 2 == 1
    with pytest.raises(ValueError):
        graded_character(fam, 1, 0, 2, "bogus")


def test_grw_pieces_have_constant_nu():
    fam = builtin("pfaffian", 4)
    for ell in range(3):
        assert {tw.nu for tw in graded_character(fam, 0, ell, 3, "grW")} <= {ell}


def test_load_family():
    fam = load_family(json.dumps(E6_FAMILY_JSON))
    e6 = builtin("e6")
    for w in e6.weights(3):
        assert fam.b_of_weight(w) == e6.b_of_weight(w)
    with pytest.raises(FamilyDataError):
        load_family({**E6_FAMILY_JSON, "c": [[0, 0, 1], [0, 3, 1], [1, 1, 1]]})
    with pytest.raises(FamilyDataError):
        load_family({**E6_FAMILY_JSON, "r": ["1", "5"]})
    with pytest.raises(FamilyDataError):
        load_family({**E6_FAMILY_JSON, "c": [[0, 0, 1], [0, 1, 1], [1, 1, 0]]})
    assert nu(fam.b_of_weight((0, 0, -1)), 0) == 1


def test_base_class_is_abstract():
    with pytest.raises(NotImplementedError):
        SpaceFamily().b_of_weight(())
