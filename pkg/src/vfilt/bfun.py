"""b-function algebra.

A b-function ``b(s) = prod_i (s + lambda_i)`` is kept as the multiset of its
shifts ``lambda_i`` (so the actual roots are ``-lambda_i``).  This module
implements the gcd polynomial ``c_{p,q}``, the rule computing the b-function
of ``p(s) m`` from that of ``m``, and the affine families describing
``b_lambda`` over a free semigroup of highest weights.
"""

from __future__ import annotations

import itertools
import json
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .ratpoly import (
    RationalLike,
    RootPoly,
    as_rational,
    linear,
    pochhammer,
    rational_str,
)


class FamilyDataError(ValueError):
    """Family data violating a structural invariant (bounds, shift law, ...)."""


@dataclass(frozen=True)
class BFunction:
    """``prod_i (s + lambda_i)`` stored as the sorted tuple of ``lambda_i``."""

    lambdas: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "lambdas", tuple(sorted(as_rational(x) for x in self.lambdas))
        )

    @classmethod
    def from_poly(cls, poly: RootPoly) -> "BFunction":
        return cls(tuple(-r for r in poly.root_list()))

    @property
    def poly(self) -> RootPoly:
        return RootPoly.from_roots(-x for x in self.lambdas)

    @property
    def degree(self) -> int:
        return len(self.lambdas)

    def shift(self, a: RationalLike) -> "BFunction":
        """``b(s + a)``, i.e. every ``lambda_i`` moves to ``lambda_i + a``."""
        a = as_rational(a)
        return BFunction(tuple(x + a for x in self.lambdas))

    def __call__(self, s: RationalLike) -> Fraction:
        return self.poly(s)

    def __str__(self) -> str:
        return str(self.poly)

    def to_json(self) -> list[str]:
        return [rational_str(x) for x in self.lambdas]


# -- c_{p,q} and the transport rule -------------------------------------------


def greedy_exponents(p: RootPoly, shifts: Sequence[Fraction]) -> list[int]:
    """Maximal ``k_i`` with ``prod_i [s + r_i]_{k_i}`` dividing ``p``.

    ``shifts`` are the ``r_i`` of ``q(s) = prod (s + r_i)``.  They are consumed
    in descending order; each takes the longest rising chain still available in
    what is left of ``p``.  The result is indexed like ``shifts``.
    """
    left = p.counts()
    ks = [0] * len(shifts)
    for i in sorted(range(len(shifts)), key=lambda j: -shifts[j]):
        r = shifts[i]
        k = 0
        while left[-(r + k)] > 0:
            left[-(r + k)] -= 1
            k += 1
        ks[i] = k
    return ks


def c_poly(p: RootPoly, q: RootPoly) -> RootPoly:
    """``c_{p,q}(s) = gcd_{i>=0} p(s+i) prod_{j<i} q(s+j)`` by peeling factors.

    Pick the factor ``(s + r)`` of ``q`` whose chain end ``r + k`` is largest,
    split off ``[s + r]_k`` and recurse on ``p / [s+r]_k`` and ``q / (s+r)``.
    """
    if q.degree == 0:
        return RootPoly.one()
    shifts = [-x for x in q.root_list()]
    ks = greedy_exponents(p, shifts)
    top = max(range(len(shifts)), key=lambda i: (shifts[i] + ks[i], ks[i]))
    head = pochhammer(shifts[top], ks[top])
    return head * c_poly(p / head, q / linear(shifts[top]))


def transport(b: BFunction, p: RootPoly, check: bool = False) -> BFunction:
    """b-function of ``p(s) m`` given the b-function ``b`` of ``m``.

    Closed form ``prod (s + r_i + k_i)`` with the greedy maximal ``k``.  With
    ``check=True`` the result is compared against ``b c(s+1) / c(s)`` and an
    ArithmeticError is raised on disagreement.
    """
    ks = greedy_exponents(p, b.lambdas)
    out = BFunction(tuple(r + k for r, k in zip(b.lambdas, ks)))
    if check:
        other = transport_gcd(b, p)
        if other != out:
            raise ArithmeticError(f"transport mismatch for b={b}, p={p}: {out} vs {other}")
    return out


def transport_gcd(
    b: BFunction, p: RootPoly, c: Callable[[RootPoly, RootPoly], RootPoly] = c_poly
) -> BFunction:
    """``b(s) c_{p,b}(s+1) / c_{p,b}(s)`` with a pluggable ``c``."""
    cc = c(p, b.poly)
    return BFunction.from_poly(b.poly * cc.shift(1) / cc)


def root_class_counts(b: BFunction) -> Counter:
    """``alpha mod Z`` (as a representative in [0, 1)) -> number of ``lambda_i`` in that class."""
    return Counter(x - math.floor(x) for x in b.lambdas)


def integer_class_count(b: BFunction, alpha: RationalLike) -> int:
    """``#{i : lambda_i in alpha + Z}``."""
    alpha = as_rational(alpha)
    return sum(1 for x in b.lambdas if (x - alpha).denominator == 1)


# -- affine families ----------------------------------------------------------


@dataclass(frozen=True)
class AffineBFamily:
    """``b_a(s) = prod_i (s + r_i + sum_j c_ij a_j)`` over semigroup coordinates ``a``.

    ``sigma_index`` is 1-based (as in the JSON format) and names the generator
    that is the semi-invariant itself; that coordinate may be negative.
    """

    name: str
    dim: int
    d: int
    generators: int
    degrees: tuple[int, ...]
    sigma_index: int
    r: tuple[Fraction, ...]
    c: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(x) for x in self.degrees))
        object.__setattr__(self, "r", tuple(as_rational(x) for x in self.r))
        object.__setattr__(
            self, "c", tuple(tuple(as_rational(x) for x in row) for row in self.c)
        )
        self._validate_shape()

    def _validate_shape(self):
        if len(self.r) != self.d:
            raise FamilyDataError(f"expected {self.d} base roots, got {len(self.r)}")
        if len(self.c) != self.d or any(len(row) != self.generators for row in self.c):
            raise FamilyDataError(f"c must be a {self.d} x {self.generators} matrix")
        if len(self.degrees) != self.generators:
            raise FamilyDataError("one degree per generator is required")
        if not 1 <= self.sigma_index <= self.generators:
            raise FamilyDataError("sigma_index out of range (1-based)")
        for i, row in enumerate(self.c):
            for j, cij in enumerate(row):
                if not 0 <= cij <= self.degrees[j]:
                    raise FamilyDataError(
                        f"c[{i}][{j}] = {cij} outside [0, deg h_{j + 1} = {self.degrees[j]}]"
                    )

    @property
    def sigma(self) -> int:
        """0-based column of the semi-invariant."""
        return self.sigma_index - 1

    def check_coordinates(self, a: Sequence[int]) -> tuple[int, ...]:
        a = tuple(int(x) for x in a)
        if len(a) != self.generators:
            raise ValueError(f"expected {self.generators} coordinates, got {len(a)}")
        bad = [j for j, x in enumerate(a) if x < 0 and j != self.sigma]
        if bad:
            raise ValueError(f"coordinates {[j + 1 for j in bad]} must be non-negative")
        return a

    def eval(self, a: Sequence[int]) -> BFunction:
        a = self.check_coordinates(a)
        return BFunction(
            tuple(ri + sum(cij * aj for cij, aj in zip(row, a)) for ri, row in zip(self.r, self.c))
        )

    def validate_samples(self, points: Iterable[Sequence[int]]) -> None:
        """Check the shift law and root-class constancy; raise FamilyDataError."""
        base = root_class_counts(self.eval([0] * self.generators))
        for a in points:
            b = self.eval(a)
            up = list(a)
            up[self.sigma] += 1
            if self.eval(up) != b.shift(1):
                raise FamilyDataError(f"shift law fails at a={tuple(a)}")
            if root_class_counts(b) != base:
                raise FamilyDataError(f"root classes mod Z change at a={tuple(a)}")

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "d": self.d,
            "generators": self.generators,
            "degrees": list(self.degrees),
            "sigma_index": self.sigma_index,
            "r": [rational_str(x) for x in self.r],
            "c": [[rational_str(x) for x in row] for row in self.c],
        }

    @classmethod
    def from_json(cls, doc) -> "AffineBFamily":
        """Build from a parsed JSON mapping or a JSON string."""
        if isinstance(doc, str):
            doc = json.loads(doc)
        required = ("name", "dim", "d", "generators", "degrees", "sigma_index", "r", "c")
        missing = [key for key in required if key not in doc]
        if missing:
            raise FamilyDataError(f"family document lacks {missing}")
        try:
            return cls(
                name=str(doc["name"]),
                dim=int(doc["dim"]),
                d=int(doc["d"]),
                generators=int(doc["generators"]),
                degrees=tuple(doc["degrees"]),
                sigma_index=int(doc["sigma_index"]),
                r=tuple(as_rational(x) for x in doc["r"]),
                c=tuple(tuple(as_rational(x) for x in row) for row in doc["c"]),
            )
        except (TypeError, ValueError) as exc:
            if isinstance(exc, FamilyDataError):
                raise
            raise FamilyDataError(f"malformed family document: {exc}") from exc


def eval_family(fam: AffineBFamily, a: Sequence[int]) -> BFunction:
    return fam.eval(a)


def box_points(fam: AffineBFamily, side: int, sigma_negative: bool = False):
    """All coordinate vectors with entries in ``range(side)``.

    With ``sigma_negative`` the semi-invariant coordinate runs over
    ``range(-side + 1, side)`` instead.
    """
    ranges = [range(side)] * fam.generators
    if sigma_negative:
        ranges[fam.sigma] = range(-side + 1, side)
    return itertools.product(*ranges)


@dataclass
class SymmetryReport:
    passed: bool
    checked: int
    counterexample: tuple | None = None
    detail: str = ""


def check_symmetry(
    fam: AffineBFamily,
    n: int,
    dual: Callable[[tuple[int, ...]], Sequence[int]],
    points: Iterable[Sequence[int]],
) -> SymmetryReport:
    """Verify ``b_a(s) = (-1)^d b_{dual(a)}(-s - n/d - 1)`` at each point.

    The right-hand side has shifts ``n/d + 1 - mu_i`` where ``mu`` are the
    shifts of ``b_{dual(a)}``, so the test is an equality of multisets.
    """
    c = Fraction(n, fam.d) + 1
    checked = 0
    for a in points:
        a = tuple(a)
        lhs = fam.eval(a)
        mu = fam.eval(dual(a))
        rhs = BFunction(tuple(c - x for x in mu.lambdas))
        checked += 1
        if lhs != rhs:
            return SymmetryReport(False, checked, a, f"b = {lhs}, reflected dual = {rhs}")
    return SymmetryReport(True, checked)
