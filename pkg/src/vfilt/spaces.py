"""Multiplicity-free spaces: b-functions of weights, Hodge ideal weight sets, graded characters.

Four families are built in: generic determinants, symmetric determinants,
Pfaffians and the Freudenthal cubic on the 27-dimensional E6 module.  A
family given by an affine b-function model (JSON) can be loaded as well.

Weights of the first three families are dominant integer vectors ``p``; the
E6 family (and loaded families) use semigroup coordinates ``a`` with respect to
the highest weights of the basic semi-invariants, the last one being ``f``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from .bfun import AffineBFamily, BFunction, box_points
from .filtration import grw_grv_membership, hodge_level, nu
from .ratpoly import RationalLike, as_rational, rational_str

Weight = tuple[int, ...]


class RouteMismatchError(ArithmeticError):
    """The degree route and the closed inequalities disagree on a weight."""


@dataclass(frozen=True)
class Inequality:
    """``statistic_t(weight) >= bound`` for one index ``t`` of the primary decomposition."""

    t: int
    bound: int
    ideal: str

    @property
    def exponent(self) -> int:
        return max(self.bound, 0)


class SpaceFamily:
    """A family ``weight -> b_weight`` with its weight model."""

    name: str
    n: int
    n_dim: int
    d: int
    arity: int
    sigma: Weight

    def b_of_weight(self, weight: Sequence[int]) -> BFunction:
        raise NotImplementedError

    def weight_problem(self, weight: Sequence[int], structure_sheaf: bool = False) -> str | None:
        """Why ``weight`` is not in the weight monoid, or None if it is."""
        raise NotImplementedError

    def check_weight(self, weight: Sequence[int], structure_sheaf: bool = False) -> Weight:
        weight = tuple(int(x) for x in weight)
        problem = self.weight_problem(weight, structure_sheaf)
        if problem:
            raise ValueError(f"{self.name}: weight {weight} rejected: {problem}")
        return weight

    def is_weight(self, weight: Sequence[int], structure_sheaf: bool = False) -> bool:
        return self.weight_problem(tuple(weight), structure_sheaf) is None

    def weights(self, bound: int, structure_sheaf: bool = False) -> Iterator[Weight]:
        """Weights with every coordinate in ``[-bound, bound]`` (``[0, bound]`` on ``O_X``)."""
        raise NotImplementedError

    def shift_weight(self, weight: Sequence[int], times: int = 1) -> Weight:
        return tuple(x + times * s for x, s in zip(weight, self.sigma))

    # closed inequalities for Hodge ideals with 0 < alpha <= 1
    def inequalities(self, k: int, alpha: RationalLike) -> list[Inequality] | None:
        return None

    def statistic(self, weight: Weight, t: int) -> Fraction:
        raise NotImplementedError

    def affine_view(self) -> AffineBFamily | None:
        return None

    def dual(self, a: Sequence[int]) -> tuple[int, ...]:
        """The dual weight ``lambda*`` in the affine view's coordinates."""
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name} n={self.n}>"


def _dominant(bound: int, length: int, low: int) -> Iterator[tuple[int, ...]]:
    for combo in itertools.combinations_with_replacement(range(bound, low - 1, -1), length):
        yield combo


def _gate_alpha(alpha: Fraction) -> None:
    if not 0 < alpha <= 1:
        raise ValueError(f"closed inequalities are stated for alpha in (0, 1], got {alpha}")


class DeterminantFamily(SpaceFamily):
    """``det`` on ``n x n`` matrices; weights ``p`` dominant in ``Z^n``."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be positive")
        self.name, self.n, self.n_dim, self.d, self.arity = "det", n, n * n, n, n
        self.sigma = (1,) * n

    def b_of_weight(self, weight):
        p = self.check_weight(weight)
        n = self.n
        return BFunction(tuple(1 + p[i - 1] + n - i for i in range(1, n + 1)))

    def weight_problem(self, weight, structure_sheaf=False):
        if len(weight) != self.arity:
            return f"expected {self.arity} coordinates"
        if any(x < y for x, y in zip(weight, weight[1:])):
            return "not dominant (p_1 >= ... >= p_n)"
        if structure_sheaf and weight[-1] < 0:
            return "p_n < 0 is not a weight of O_X"
        return None

    def weights(self, bound, structure_sheaf=False):
        yield from _dominant(bound, self.n, 0 if structure_sheaf else -bound)

    def inequalities(self, k, alpha):
        _gate_alpha(as_rational(alpha))
        n = self.n
        return [
            Inequality(t, (n - t) * (k - 1) - math.comb(n - t, 2), f"J_{t}")
            for t in range(1, n + 1)
        ]

    def statistic(self, weight, t):
        return Fraction(sum(weight[t - 1 :]))

    def affine_view(self):
        n = self.n
        return AffineBFamily(
            name="det",
            dim=n * n,
            d=n,
            generators=n,
            degrees=tuple(range(1, n + 1)),
            sigma_index=n,
            r=tuple(1 + n - i for i in range(1, n + 1)),
            c=tuple(tuple(int(t >= i) for t in range(1, n + 1)) for i in range(1, n + 1)),
        )

    def dual(self, a):
        return _reverse_dual(a)

    def weight_to_affine(self, weight) -> tuple[int, ...]:
        """Coordinates along the principal minors: ``a_t = p_t - p_{t+1}``, ``a_n = p_n``."""
        p = list(weight) + [0]
        return tuple(p[t] - p[t + 1] for t in range(self.n))


def _reverse_dual(a):
    *head, last = a
    return tuple(reversed(head)) + (-sum(a),) if head else (-last,)


class SymmetricDeterminantFamily(SpaceFamily):
    """``det`` on symmetric ``n x n`` matrices; weights dominant with even entries."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be positive")
        self.name, self.n, self.n_dim, self.d, self.arity = "symdet", n, n * (n + 1) // 2, n, n
        self.sigma = (2,) * n

    def b_of_weight(self, weight):
        p = self.check_weight(weight)
        n = self.n
        return BFunction(tuple(1 + Fraction(p[i - 1] + n - i, 2) for i in range(1, n + 1)))

    def weight_problem(self, weight, structure_sheaf=False):
        if len(weight) != self.arity:
            return f"expected {self.arity} coordinates"
        if any(x % 2 for x in weight):
            return "entries must be even"
        if any(x < y for x, y in zip(weight, weight[1:])):
            return "not dominant (p_1 >= ... >= p_n)"
        if structure_sheaf and weight[-1] < 0:
            return "p_n < 0 is not a weight of O_X"
        return None

    def weights(self, bound, structure_sheaf=False):
        half = bound // 2
        for mu in _dominant(half, self.n, 0 if structure_sheaf else -half):
            yield tuple(2 * x for x in mu)

    def inequalities(self, k, alpha):
        """Bounds on ``sum_{i>=t} p_i / 2`` obtained from the degree condition.

        With ``m = n - t`` the bound is ``m k - sum_{j<=m} ceil(j/2)`` for
        ``alpha <= 1/2`` and ``m k - sum_{j<=m} floor(j/2)`` above it.
        """
        alpha = as_rational(alpha)
        _gate_alpha(alpha)
        rounding = (lambda j: (j + 1) // 2) if alpha <= Fraction(1, 2) else (lambda j: j // 2)
        out = []
        for t in range(1, self.n + 1):
            m = self.n - t
            out.append(Inequality(t, m * k - sum(rounding(j) for j in range(m + 1)), f"J_{t}"))
        return out

    def statistic(self, weight, t):
        return Fraction(sum(weight[t - 1 :]), 2)

    def affine_view(self):
        n = self.n
        return AffineBFamily(
            name="symdet",
            dim=n * (n + 1) // 2,
            d=n,
            generators=n,
            degrees=tuple(range(1, n + 1)),
            sigma_index=n,
            r=tuple(1 + Fraction(n - i, 2) for i in range(1, n + 1)),
            c=tuple(tuple(int(t >= i) for t in range(1, n + 1)) for i in range(1, n + 1)),
        )

    def dual(self, a):
        return _reverse_dual(a)

    def weight_to_affine(self, weight):
        p = [x // 2 for x in weight] + [0]
        return tuple(p[t] - p[t + 1] for t in range(self.n))


def symdet_ceiling_exponents(n: int, k: int, alpha: RationalLike) -> list[Inequality]:
    """Symbolic-power exponents for the symmetric determinant in closed ceiling form.

    ``m = n - t``; for ``alpha <= 1/2`` the exponent is ``ceil(m(2k - m/2)/2)``
    (plus ``1/4`` inside the ceiling when ``m`` is odd), for ``alpha > 1/2`` it
    is ``ceil(m(2k - m/2 + 1)/2)`` (plus ``3/4`` when ``m`` is odd).  These do
    not agree with ``deg p <= k``; :meth:`SymmetricDeterminantFamily.inequalities`
    gives the bounds that do.
    """
    alpha = as_rational(alpha)
    _gate_alpha(alpha)
    out = []
    for t in range(1, n + 1):
        m = n - t
        if alpha <= Fraction(1, 2):
            value = Fraction(m, 2) * (2 * k - Fraction(m, 2)) + (Fraction(1, 4) if m % 2 else 0)
        else:
            value = Fraction(m, 2) * (2 * k - Fraction(m, 2) + 1) + (Fraction(3, 4) if m % 2 else 0)
        out.append(Inequality(t, math.ceil(value), f"J_{t}"))
    return out


class PfaffianFamily(SpaceFamily):
    """Pfaffian on skew-symmetric ``n x n`` matrices (``n`` even); weights with ``p_{2i-1} = p_{2i}``."""

    def __init__(self, n: int):
        if n < 2 or n % 2:
            raise ValueError("pfaffian needs an even n >= 2")
        self.name, self.n, self.n_dim, self.d, self.arity = "pfaffian", n, n * (n - 1) // 2, n // 2, n
        self.sigma = (1,) * n

    def b_of_weight(self, weight):
        p = self.check_weight(weight)
        n = self.n
        return BFunction(tuple(1 + p[2 * i - 1] + n - 2 * i for i in range(1, n // 2 + 1)))

    def weight_problem(self, weight, structure_sheaf=False):
        if len(weight) != self.arity:
            return f"expected {self.arity} coordinates"
        if any(weight[2 * i] != weight[2 * i + 1] for i in range(self.n // 2)):
            return "entries must come in equal pairs p_{2i-1} = p_{2i}"
        if any(x < y for x, y in zip(weight, weight[1:])):
            return "not dominant (p_1 >= ... >= p_n)"
        if structure_sheaf and weight[-1] < 0:
            return "p_n < 0 is not a weight of O_X"
        return None

    def weights(self, bound, structure_sheaf=False):
        for q in _dominant(bound, self.n // 2, 0 if structure_sheaf else -bound):
            yield tuple(x for x in q for _ in range(2))

    def inequalities(self, k, alpha):
        _gate_alpha(as_rational(alpha))
        half = self.n // 2
        return [
            Inequality(t, (half - t) * (k - 1) - (half - t) ** 2, f"J_{2 * t}")
            for t in range(1, half + 1)
        ]

    def statistic(self, weight, t):
        return Fraction(sum(weight[2 * i - 1] for i in range(t, self.n // 2 + 1)))

    def affine_view(self):
        half = self.n // 2
        return AffineBFamily(
            name="pfaffian",
            dim=self.n_dim,
            d=half,
            generators=half,
            degrees=tuple(range(1, half + 1)),
            sigma_index=half,
            r=tuple(1 + self.n - 2 * i for i in range(1, half + 1)),
            c=tuple(tuple(int(t >= i) for t in range(1, half + 1)) for i in range(1, half + 1)),
        )

    def dual(self, a):
        return _reverse_dual(a)

    def weight_to_affine(self, weight):
        q = [weight[2 * i] for i in range(self.n // 2)] + [0]
        return tuple(q[t] - q[t + 1] for t in range(self.n // 2))


class AffineSpaceFamily(SpaceFamily):
    """A family given directly by an affine b-function model in semigroup coordinates."""

    def __init__(self, fam: AffineBFamily, dual: Callable | None = None):
        self.family = fam
        self.name, self.n, self.n_dim, self.d = fam.name, fam.dim, fam.dim, fam.d
        self.arity = fam.generators
        self.sigma = tuple(int(j == fam.sigma) for j in range(fam.generators))
        self._dual = dual

    def b_of_weight(self, weight):
        return self.family.eval(self.check_weight(weight))

    def weight_problem(self, weight, structure_sheaf=False):
        if len(weight) != self.arity:
            return f"expected {self.arity} coordinates"
        bad = [j + 1 for j, x in enumerate(weight) if x < 0 and (structure_sheaf or j != self.family.sigma)]
        if bad:
            return f"coordinates {bad} must be non-negative"
        return None

    def weights(self, bound, structure_sheaf=False):
        ranges = [range(bound + 1)] * self.arity
        if not structure_sheaf:
            ranges[self.family.sigma] = range(-bound, bound + 1)
        yield from itertools.product(*ranges)

    def affine_view(self):
        return self.family

    def dual(self, a):
        if self._dual is None:
            raise NotImplementedError(f"{self.name}: no dual map known")
        return tuple(self._dual(tuple(a)))

    def weight_to_affine(self, weight):
        return tuple(weight)


E6_FAMILY_JSON = {
    "name": "e6",
    "dim": 27,
    "d": 3,
    "generators": 3,
    "degrees": [1, 2, 3],
    "sigma_index": 3,
    "r": ["1", "5", "9"],
    "c": [[0, 0, 1], [0, 1, 1], [1, 1, 1]],
}


class E6Family(AffineSpaceFamily):
    """Freudenthal cubic on the 27-dimensional E6 module, coordinates ``(a_1, a_2, a_3)``."""

    def __init__(self):
        super().__init__(
            AffineBFamily.from_json(E6_FAMILY_JSON),
            dual=lambda a: (a[1], a[0], -a[0] - a[1] - a[2]),
        )

    def inequalities(self, k, alpha):
        """``b_3 >= 0``, ``b_2 + b_3 >= k - 4``, ``b_1 + b_2 + b_3 >= 2k - 12``.

        ``t = 1`` is the maximal ideal of the origin, ``t = 2`` the ideal of the
        singular locus, ``t = 3`` the ``O_X`` constraint.
        """
        _gate_alpha(as_rational(alpha))
        return [
            Inequality(1, 2 * k - 12, "I_1"),
            Inequality(2, k - 4, "I_2"),
            Inequality(3, 0, "O_X"),
        ]

    def statistic(self, weight, t):
        a1, a2, a3 = weight
        b = (a1 + a2 + a3, a2 + a3, a3)
        return Fraction(sum(b[t - 1 :]))


def builtin(name: str, n: int | None = None) -> SpaceFamily:
    """``det``, ``symdet``, ``pfaffian`` (size ``n``) or ``e6`` (``n`` ignored)."""
    if name == "e6":
        return E6Family()
    makers = {"det": DeterminantFamily, "symdet": SymmetricDeterminantFamily, "pfaffian": PfaffianFamily}
    if name not in makers:
        raise ValueError(f"unknown space {name!r}; choose from det, symdet, pfaffian, e6")
    if n is None:
        raise ValueError(f"space {name!r} needs n")
    return makers[name](int(n))


BUILTIN_NAMES = ("det", "symdet", "pfaffian", "e6")


def load_family(doc, sample_side: int = 4) -> AffineSpaceFamily:
    """Family from the affine JSON model; shift law and root classes are checked on a box."""
    fam = AffineBFamily.from_json(doc)
    fam.validate_samples(box_points(fam, sample_side, sigma_negative=True))
    return AffineSpaceFamily(fam)


# -- Hodge ideals -------------------------------------------------------------


def membership_by_degree(fam: SpaceFamily, k: int, alpha: RationalLike, weight: Sequence[int]) -> bool:
    """``deg p_{lambda, alpha + k} <= k``."""
    alpha = as_rational(alpha)
    return hodge_level(fam.b_of_weight(weight), alpha + k) <= k


def membership_by_inequalities(
    ineqs: Sequence[Inequality], fam: SpaceFamily, weight: Sequence[int]
) -> bool:
    weight = tuple(weight)
    return all(fam.statistic(weight, q.t) >= q.bound for q in ineqs)


ROUTES = ("degree", "inequality", "both")


def ideal_weight_membership(
    fam: SpaceFamily, k: int, alpha: RationalLike, weight: Sequence[int], route: str = "both"
) -> bool:
    """Does ``U_lambda`` occur in the Hodge ideal ``I_k(alpha D)``?

    ``route="both"`` evaluates the degree condition and, when the family has
    closed inequalities and ``alpha`` lies in ``(0, 1]``, the inequalities too;
    disagreement raises RouteMismatchError.
    """
    alpha = as_rational(alpha)
    if alpha <= 0:
        raise ValueError("Hodge ideals need alpha > 0")
    if route not in ROUTES:
        raise ValueError(f"route must be one of {ROUTES}")
    weight = fam.check_weight(weight, structure_sheaf=True)
    if route == "inequality":
        ineqs = fam.inequalities(k, alpha)
        if ineqs is None:
            raise ValueError(f"{fam.name} has no closed inequalities")
        return membership_by_inequalities(ineqs, fam, weight)
    by_degree = membership_by_degree(fam, k, alpha, weight)
    if route == "both" and 0 < alpha <= 1:
        ineqs = fam.inequalities(k, alpha)
        if ineqs is not None and membership_by_inequalities(ineqs, fam, weight) != by_degree:
            raise RouteMismatchError(
                f"{fam.name}: weight {weight}, k={k}, alpha={alpha}: degree route says {by_degree}"
            )
    return by_degree


@dataclass
class WeightSet:
    constraints: list[str]
    weights: list[Weight]
    primary_decomposition: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "constraints": list(self.constraints),
            "weights": [list(w) for w in self.weights],
            "primary_decomposition": list(self.primary_decomposition),
        }


def ideal_weight_set(
    fam: SpaceFamily, k: int, alpha: RationalLike, degree_bound: int, route: str = "both"
) -> WeightSet:
    """Weights of ``I_k(alpha D)`` inside the box, with the primary decomposition when known."""
    alpha = as_rational(alpha)
    if alpha <= 0:
        raise ValueError("Hodge ideals need alpha > 0")
    constraints = [f"deg p_(lambda,{rational_str(alpha + k)}) <= {k}"]
    decomposition: list[dict] = []
    ineqs = fam.inequalities(k, alpha) if 0 < alpha <= 1 else None
    if ineqs is not None:
        for q in ineqs:
            constraints.append(f"statistic_{q.t}(lambda) >= {q.bound}")
        # the last inequality only restates that lambda is a weight of O_X
        decomposition = [{"t": q.t, "ideal": q.ideal, "exponent": q.exponent} for q in ineqs[:-1]]
    members = [
        w
        for w in fam.weights(degree_bound, structure_sheaf=True)
        if ideal_weight_membership(fam, k, alpha, w, route)
    ]
    return WeightSet(constraints, sorted(members), decomposition)


# -- weight filtration characters ---------------------------------------------


@dataclass(frozen=True)
class TwistedWeight:
    """``lambda - alpha sigma``, kept symbolically."""

    weight: Weight
    alpha: Fraction
    nu: int

    def __str__(self) -> str:
        return f"{self.weight} - {rational_str(self.alpha)}*sigma"

    def to_json(self) -> dict:
        return {"lambda": list(self.weight), "alpha": rational_str(self.alpha), "nu": self.nu}


CHARACTER_MODES = ("weight", "grW", "grWgrV")


def graded_character(
    fam: SpaceFamily, alpha: RationalLike, ell: int, degree_bound: int, mode: str = "weight"
) -> list[TwistedWeight]:
    """Weights ``lambda - alpha sigma`` of ``W_{q+ell}``, of ``gr^W_{q+ell}`` or of ``gr^W_ell gr_V^alpha``."""
    alpha = as_rational(alpha)
    if mode not in CHARACTER_MODES:
        raise ValueError(f"mode must be one of {CHARACTER_MODES}")
    keep = {
        "weight": lambda v: v <= ell,
        "grW": lambda v: v == ell,
        "grWgrV": lambda v: grw_grv_membership(v, ell),
    }[mode]
    out = []
    for w in fam.weights(degree_bound):
        v = nu(fam.b_of_weight(w), alpha)
        if keep(v):
            out.append(TwistedWeight(tuple(w), alpha, v))
    return sorted(out, key=lambda tw: tw.weight)
