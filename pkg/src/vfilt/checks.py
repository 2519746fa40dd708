"""Randomized invariant suite run by ``vfilt check``.

Each check draws its own cases from a seeded generator and returns a list of
failure descriptions; an empty list means it passed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import oracle
from .bfun import BFunction, c_poly, check_symmetry, box_points, transport, transport_gcd
from .filtration import (
    PiSets,
    dt_action,
    fs_hodge_test,
    grv_exponent,
    grw_grv_membership,
    hodge_level,
    hodge_level_by_jumps,
    jump_values,
    nu,
    nu_from_transport,
    p_function,
    r_lambda,
    t_action,
    weight_level,
)
from .ratpoly import RootPoly, linear
from .spaces import BUILTIN_NAMES, RouteMismatchError, builtin, ideal_weight_membership

ROOT_POOL = [Fraction(k) for k in range(-5, 6)] + [Fraction(k, 2) for k in range(-9, 10, 2)] + [
    Fraction(k, 3) for k in range(-14, 15) if k % 3
]


def random_rootpoly(rng: random.Random, max_degree: int = 6) -> RootPoly:
    return RootPoly.from_roots(rng.choice(ROOT_POOL) for _ in range(rng.randint(0, max_degree)))


def random_bfunction(rng: random.Random, max_degree: int = 6) -> BFunction:
    return BFunction(tuple(rng.choice(ROOT_POOL) for _ in range(rng.randint(1, max_degree))))


def random_alpha(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-24, 48), rng.choice([1, 2, 3, 4, 6, 12]))


SMALL_SIZES = {"det": [1, 2, 3, 4], "symdet": [1, 2, 3, 4], "pfaffian": [2, 4, 6], "e6": [None]}


def random_family_weight(rng: random.Random, structure_sheaf: bool = False, bound: int = 4):
    name = rng.choice(BUILTIN_NAMES)
    fam = builtin(name, rng.choice(SMALL_SIZES[name]))
    return fam, rng.choice(list(fam.weights(bound, structure_sheaf)))


def next_jump_gap(b: BFunction, alpha: Fraction) -> Fraction:
    """Half the distance from ``alpha`` to the next value where the p-function can change."""
    ahead = [x for x in jump_values(b, alpha + 2) if x > alpha]
    return ((min(ahead) - alpha) / 2) if ahead else Fraction(1, 2)


def check_c_poly(rng, cases):
    bad = []
    for _ in range(cases):
        p, q = random_rootpoly(rng), random_rootpoly(rng)
        if c_poly(p, q) != oracle.c_poly_bruteforce(p, q, verify=True):
            bad.append(f"c_poly({p}, {q})")
    return bad


def check_transport(rng, cases):
    bad = []
    for _ in range(cases):
        b, p = random_bfunction(rng), random_rootpoly(rng)
        if transport(b, p) != transport_gcd(b, p, c=oracle.c_poly_bruteforce):
            bad.append(f"transport({b}, {p})")
    return bad


def check_p_function(rng, cases):
    bad = []
    for _ in range(cases):
        b = random_bfunction(rng, 4)
        alpha = Fraction(rng.randint(-12, 24), rng.choice([1, 2, 3, 4, 6]))
        pf = p_function(b, alpha)
        if pf.poly != oracle.p_function_greedy(b, alpha, rng):
            bad.append(f"p_function({b}, {alpha}) vs greedy")
        if pf.poly(-alpha) == 0:
            bad.append(f"p_function({b}, {alpha}) vanishes at -alpha")
    return bad


def check_nu_and_degree(rng, cases):
    bad = []
    for _ in range(cases):
        b, alpha = random_bfunction(rng), random_alpha(rng)
        if nu(b, alpha) != nu_from_transport(b, alpha):
            bad.append(f"nu({b}, {alpha})")
        if hodge_level(b, alpha) != hodge_level_by_jumps(b, alpha):
            bad.append(f"deg p vs jump sum for ({b}, {alpha})")
        if weight_level(b, alpha) > b.degree:
            bad.append(f"weight level above d for ({b}, {alpha})")
    return bad


def check_structure(rng, cases):
    bad = []
    for _ in range(cases):
        b, alpha = random_bfunction(rng), random_alpha(rng)
        p = p_function(b, alpha)
        if p_function(b.shift(1), alpha + 1).poly != p.poly.shift(1):
            bad.append(f"shift covariance ({b}, {alpha})")
        eps = next_jump_gap(b, alpha)
        if p_function(b, alpha + eps).poly != p.poly * linear(alpha) ** nu(b, alpha):
            bad.append(f"jump identity ({b}, {alpha}, eps={eps})")
        later = alpha + Fraction(rng.randint(0, 12), rng.choice([1, 2, 3]))
        if not p.poly.divides(p_function(b, later).poly):
            bad.append(f"monotonicity ({b}, {alpha} <= {later})")
        back = dt_action(t_action(p))
        if back.s_power != 1 or back.p != p:
            bad.append(f"t/dt round trip ({b}, {alpha})")
    return bad


def check_left_continuity(rng, cases):
    bad = []
    for _ in range(cases):
        fam, w = random_family_weight(rng, structure_sheaf=True)
        b, k = fam.b_of_weight(w), rng.randint(0, 5)
        # jumps in alpha of deg p_{lambda, alpha + k} sit on lambda_i - k + Z, so
        # they are 1/D apart with D the common denominator of the lambda_i
        denom = math.lcm(*(x.denominator for x in b.lambdas))
        jump = rng.choice(b.lambdas) - k + rng.randint(0, 6)
        below = jump - Fraction(1, 2 * denom)
        if below <= 0:
            continue
        at = ideal_weight_membership(fam, k, jump, w, route="degree")
        if at != ideal_weight_membership(fam, k, below, w, route="degree"):
            bad.append(f"left continuity {fam.name} {w} k={k} alpha={jump}")
    return bad


def check_jordan(rng, cases):
    bad = []
    for v in range(0, 9):
        for ell in range(-10, 11):
            if grv_exponent(v, ell) != oracle.jordan_weight_dim(v, Fraction(rng.randint(-3, 3), 2), ell):
                bad.append(f"grv_exponent({v}, {ell})")
            step = grv_exponent(v, ell) - grv_exponent(v, ell - 1)
            if step not in (0, 1) or (step == 1) != grw_grv_membership(v, ell):
                bad.append(f"graded jump at ({v}, {ell})")
        if {ell for ell in range(-10, 11) if grw_grv_membership(v, ell)} != set(range(1 - v, v, 2)):
            bad.append(f"grWgrV levels for nu={v}")
    return bad


def check_fs(rng, cases):
    bad = []
    for _ in range(cases):
        b = random_bfunction(rng, 4)
        alpha = Fraction(rng.randint(1, 24), rng.choice([1, 2, 3, 4]))
        k = rng.randint(0, 10)
        pi = PiSets.structure_sheaf(r_lambda(b), [k])
        if fs_hodge_test(b, alpha, pi, k) != (hodge_level(b, alpha) <= k):
            bad.append(f"fs_hodge_test({b}, {alpha}, k={k})")
    return bad


def check_routes(rng, cases):
    bad = []
    for _ in range(cases):
        fam, w = random_family_weight(rng, structure_sheaf=True, bound=8)
        alpha = rng.choice([Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1)])
        try:
            ideal_weight_membership(fam, rng.randint(0, 8), alpha, w, route="both")
        except RouteMismatchError as exc:
            bad.append(str(exc))
    return bad


def check_families(rng, cases):
    bad = []
    for name in BUILTIN_NAMES:
        for n in SMALL_SIZES[name]:
            fam = builtin(name, n)
            weights = list(fam.weights(4))
            for w in rng.sample(weights, min(cases, len(weights))):
                b = fam.b_of_weight(w)
                if b.degree != fam.d or fam.b_of_weight(fam.shift_weight(w)) != b.shift(1):
                    bad.append(f"{name} n={n} shift law at {w}")
                aff = fam.affine_view()
                if aff.eval(fam.weight_to_affine(w)) != b:
                    bad.append(f"{name} n={n} affine view at {w}")
            aff = fam.affine_view()
            report = check_symmetry(aff, fam.n_dim, fam.dual, box_points(aff, 4, sigma_negative=True))
            if not report.passed:
                bad.append(f"{name} n={n} symmetry: {report.detail}")
    return bad


@dataclass(frozen=True)
class Check:
    name: str
    run: Callable[[random.Random, int], list]


CHECKS = (
    Check("c_poly closed form vs partial gcds", check_c_poly),
    Check("transport closed form vs gcd formula", check_transport),
    Check("p-function product vs greedy construction", check_p_function),
    Check("nu count, degree identity, weight bound", check_nu_and_degree),
    Check("shift covariance, jump identity, monotonicity, t/dt", check_structure),
    Check("left continuity of Hodge ideals", check_left_continuity),
    Check("Jordan structure of gr_V", check_jordan),
    Check("Hodge test from Pi_k on O_X", check_fs),
    Check("degree route vs closed inequalities", check_routes),
    Check("built-in families: shift law, affine view, symmetry", check_families),
)


def run_all(seed: int = 0, cases: int = 100):
    """Yield ``(check name, failures)``."""
    for check in CHECKS:
        yield check.name, check.run(random.Random(f"{seed}:{check.name}"), cases)
