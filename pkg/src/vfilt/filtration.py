"""Isotypic V-, weight and Hodge filtration data from the b-function shifts.

Everything is a function of ``b_lambda(s) = prod (s + lambda_i)`` and a
rational ``alpha``.  The central object is the p-function

    p_{lambda,alpha}(s) = prod_i [s + lambda_i]_{ceil(alpha - lambda_i)},

the monic generator of the ``lambda``-isotypic part of ``V^alpha`` inside
``M_lambda[s] f^s``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, NamedTuple, Sequence

from .bfun import AffineBFamily, BFunction, integer_class_count, transport
from .ratpoly import (
    DensePoly,
    RationalLike,
    RootPoly,
    as_rational,
    expand_at,
    lcm,
    linear,
    pochhammer,
    solve_linear,
)


@dataclass(frozen=True)
class PFunction:
    poly: RootPoly
    b: BFunction
    alpha: Fraction

    def __post_init__(self):
        if self.poly(-self.alpha) == 0:
            raise ArithmeticError(f"p-function {self.poly} vanishes at s = {-self.alpha}")

    @property
    def degree(self) -> int:
        return self.poly.degree

    def __str__(self) -> str:
        return str(self.poly)


def p_function(b: BFunction, alpha: RationalLike) -> PFunction:
    alpha = as_rational(alpha)
    poly = RootPoly.one()
    for lam in b.lambdas:
        poly = poly * pochhammer(lam, math.ceil(alpha - lam))
    return PFunction(poly, b, alpha)


def nu(b: BFunction, alpha: RationalLike) -> int:
    """``#{i : alpha - lambda_i in Z_{>=0}}``."""
    alpha = as_rational(alpha)
    return sum(1 for lam in b.lambdas if (alpha - lam).denominator == 1 and alpha >= lam)


def nu_from_transport(b: BFunction, alpha: RationalLike) -> int:
    """Multiplicity of ``s = -alpha`` in the b-function of ``p_{lambda,alpha}(s) m``."""
    alpha = as_rational(alpha)
    moved = transport(b, p_function(b, alpha).poly)
    return moved.poly.multiplicity(-alpha)


def weight_level(b: BFunction, alpha: RationalLike) -> int:
    """Least ``ell`` with ``m f^(-alpha)`` in ``W_{q+ell}``; add the ambient weight ``q`` yourself."""
    return nu(b, alpha)


def hodge_level(b: BFunction, alpha: RationalLike) -> int:
    """Least ``k`` with ``m f^(-alpha)`` in ``F_k`` for ``M = (O_X)_f``: the degree of the p-function."""
    alpha = as_rational(alpha)
    return sum(max(math.ceil(alpha - lam), 0) for lam in b.lambdas)


def jump_values(b: BFunction, below: RationalLike) -> list[Fraction]:
    """Sorted ``beta < below`` with ``nu(b, beta) > 0``: the sets ``lambda_i + Z_{>=0}`` cut at ``below``."""
    below = as_rational(below)
    out = set()
    for lam in b.lambdas:
        beta = lam
        while beta < below:
            out.add(beta)
            beta += 1
    return sorted(out)


def hodge_level_by_jumps(b: BFunction, alpha: RationalLike) -> int:
    return sum(nu(b, beta) for beta in jump_values(b, alpha))


def r_lambda(b: BFunction) -> int:
    """Largest integer root of ``(s + 1) b(s)``."""
    roots = [Fraction(-1)] + [-lam for lam in b.lambdas]
    return int(max(r for r in roots if r.denominator == 1))


def v_ideal_structure(b: BFunction, alpha: RationalLike) -> RootPoly:
    """Generator of the ``lambda``-part of ``V^alpha`` of the pushforward of the simple module."""
    r = r_lambda(b)
    return lcm(pochhammer(-r, r + 1), p_function(b, alpha).poly)


def _truncated_basis(gen: RootPoly, k: int) -> list[DensePoly]:
    dense = gen.to_dense()
    return [dense * DensePoly.monomial(j) for j in range(k - gen.degree + 1)]


def ell_k(b: BFunction, k: int) -> int | None:
    """Least ``ell >= 0`` with ``deg p_{lambda,-ell} <= k - ell``, or None."""
    for ell in range(0, k + 1):
        if hodge_level(b, -ell) <= k - ell:
            return ell
    return None


def v_cap_f_basis(b: BFunction, alpha: RationalLike, k: int) -> list[DensePoly]:
    """Basis of ``(V^alpha cap F_{k+1})_lambda`` as polynomials in ``s`` (for ``M = (O_X)_f``)."""
    alpha = as_rational(alpha)
    p = p_function(b, alpha).poly
    if alpha > 0:
        return _truncated_basis(p, k)
    ell = ell_k(b, k)
    if ell is None:
        return []
    return _truncated_basis(lcm(pochhammer(1 - ell, ell), p), k)


def grv_exponent(nu_value: int, ell: int) -> int:
    """Length of ``C[s]/(s+alpha)^e`` occupying ``W(N)_ell gr_V^alpha`` for a component with this nu."""
    if nu_value < 0:
        raise ValueError("nu must be non-negative")
    if nu_value <= -ell:
        return 0
    return min((nu_value + ell + 1) // 2, nu_value)


def grw_grv_membership(nu_value: int, ell: int) -> bool:
    """Whether ``U_{lambda - alpha sigma}`` occurs in ``gr^W_ell gr_V^alpha``."""
    return (nu_value + ell) % 2 == 1 and nu_value > abs(ell)


@dataclass
class GrVReport:
    alpha: Fraction
    entries: list = field(default_factory=list)  # (weight, nu, {ell: exponent})


def grv_report(weights_and_b, alpha: RationalLike, levels: Sequence[int]) -> GrVReport:
    """Tabulate nu and the Jordan exponent per level for each ``(weight, b)`` pair."""
    alpha = as_rational(alpha)
    rep = GrVReport(alpha)
    for weight, b in weights_and_b:
        v = nu(b, alpha)
        rep.entries.append((weight, v, {ell: grv_exponent(v, ell) for ell in levels}))
    return rep


def nilpotency_order(
    fam: AffineBFamily, alpha: RationalLike, samples: Sequence[Sequence[int]] = ()
) -> int:
    """Nilpotency order of ``s + alpha`` on ``gr_V^alpha``.

    Read off at ``a = 0`` and confirmed on ``samples``; a different count at a
    sample means the family data is wrong and raises ArithmeticError.
    """
    order = integer_class_count(fam.eval([0] * fam.generators), alpha)
    for a in samples:
        got = integer_class_count(fam.eval(a), alpha)
        if got != order:
            raise ArithmeticError(
                f"root count in {alpha}+Z is {got} at a={tuple(a)} but {order} at a=0"
            )
    return order


def composition_factor_test(b: BFunction, alpha: RationalLike) -> int | None:
    """None if ``D m f^(-alpha) = D m f^(-alpha+1)``, else the weight offset ``nu`` of its simple quotient."""
    alpha = as_rational(alpha)
    if b(-alpha) != 0:
        return None
    return nu(b, alpha)


# -- general S: Hodge test from the sets Pi_k ---------------------------------


@dataclass(frozen=True)
class PiSets:
    """``k -> Pi_k``: the ``ell > r_lambda`` with ``(F_{k-ell} S)_{lambda + ell sigma} != 0``."""

    r_lambda: int
    pi: Mapping[int, frozenset]

    def __post_init__(self):
        object.__setattr__(
            self, "pi", {int(k): frozenset(int(x) for x in v) for k, v in self.pi.items()}
        )

    @classmethod
    def structure_sheaf(cls, r: int, ks: Sequence[int]) -> "PiSets":
        """``Pi_k = {r+1, ..., k}``, the sets for ``S = O_X``."""
        return cls(r, {k: frozenset(range(r + 1, k + 1)) for k in ks})

    def __getitem__(self, k: int) -> frozenset:
        return self.pi.get(k, frozenset())

    def violations(self, d: int) -> list[str]:
        """Structural properties that fail between consecutive recorded ``k``."""
        out = []
        for k, ells in sorted(self.pi.items()):
            low = [x for x in ells if x <= self.r_lambda]
            if low:
                out.append(f"Pi_{k} contains {sorted(low)} <= r_lambda = {self.r_lambda}")
            if k + 1 in self.pi:
                nxt = self.pi[k + 1]
                if not ells <= nxt:
                    out.append(f"Pi_{k} not contained in Pi_{k + 1}")
                if not {x + 1 for x in ells} <= nxt:
                    out.append(f"Pi_{k} + 1 not contained in Pi_{k + 1}")
            if k + d - 1 in self.pi:
                allowed = self.pi[k + d - 1] | {self.r_lambda}
                if not {x - 1 for x in ells} <= allowed:
                    out.append(f"Pi_{k} - 1 not contained in Pi_{k + d - 1} u {{r_lambda}}")
        return out

    @classmethod
    def from_json(cls, doc) -> "PiSets":
        return cls(int(doc["r_lambda"]), {int(k): v for k, v in doc["pi"].items()})

    def to_json(self) -> dict:
        return {"r_lambda": self.r_lambda, "pi": {str(k): sorted(v) for k, v in sorted(self.pi.items())}}


def falling(ell: int) -> RootPoly:
    """``[s - ell + 1]_ell = s (s-1) ... (s-ell+1)``."""
    return pochhammer(1 - ell, ell)


def fs_hodge_test(b: BFunction, alpha: RationalLike, pi: PiSets, k: int) -> bool:
    """Is ``(F_k (M f^(-alpha)))_{lambda - alpha sigma}`` nonzero?

    Decided by whether some ``h`` with ``h(-alpha) != 0`` puts ``h p_{lambda,alpha}``
    in the span of ``[s - ell + 1]_ell`` for ``ell`` in ``Pi_k``.  The unknowns
    are the coefficients of ``h`` (degree at most ``max Pi_k - deg p``) and the
    span coordinates; the answer is whether evaluation at ``-alpha`` is nonzero
    on the solution space.
    """
    alpha = as_rational(alpha)
    if alpha <= 0:
        raise ValueError("fs_hodge_test needs alpha > 0")
    ells = sorted(pi[k])
    p = p_function(b, alpha).poly.to_dense()
    if not ells:
        return False
    top = max(ells)
    h_deg = top - p.degree
    if h_deg < 0:
        return False
    spans = [falling(ell).to_dense() for ell in ells]
    n_h = h_deg + 1
    rows = []
    for deg in range(top + 1):
        row = [p.coeff(deg - j) for j in range(n_h)]
        row += [-q.coeff(deg) for q in spans]
        rows.append(row)
    sol = solve_linear(rows, [0] * len(rows), ncols=n_h + len(spans))
    at = [(-alpha) ** j for j in range(n_h)]
    return any(sum(v[j] * at[j] for j in range(n_h)) != 0 for v in sol.null_basis)


def fs_shortcut(b: BFunction, alpha: RationalLike, pi: PiSets, k: int) -> bool | None:
    """The two sufficient criteria: False if ``max Pi_k < deg p``, True if
    ``{r_lambda+1, ..., deg p}`` lies in ``Pi_k``; None when neither applies."""
    alpha = as_rational(alpha)
    deg = p_function(b, alpha).degree
    ells = pi[k]
    if not ells or max(ells) < deg:
        return False
    if set(range(r_lambda(b) + 1, deg + 1)) <= ells:
        return True
    return None


# -- t and d/dt ---------------------------------------------------------------


class DtImage(NamedTuple):
    s_power: int
    p: PFunction


def t_action(pf: PFunction) -> PFunction:
    """``t`` sends ``p_{lambda,alpha}`` to ``p_{lambda+sigma,alpha+1}(s) = p_{lambda,alpha}(s+1)``."""
    return PFunction(pf.poly.shift(1), pf.b.shift(1), pf.alpha + 1)


def dt_action(pf: PFunction) -> DtImage:
    """``d/dt`` sends ``p_{lambda,alpha}`` to ``s * p_{lambda-sigma,alpha-1}``; the ``s`` is kept apart."""
    return DtImage(1, PFunction(pf.poly.shift(-1), pf.b.shift(-1), pf.alpha - 1))


# -- f and d f on W_ell gr_V ---------------------------------------------------


@dataclass(frozen=True)
class FdfMatrices:
    f: tuple[tuple[Fraction, ...], ...]
    df: tuple[tuple[Fraction, ...], ...]
    C: tuple[tuple[Fraction, ...], ...]
    rho: int
    nu: int
    mu: int
    taylor: tuple[Fraction, ...]


def fdf_matrices(b: BFunction, alpha: RationalLike, ell: int) -> FdfMatrices:
    """Matrices of ``f`` and ``d f`` on ``W_ell gr_V^alpha`` in the basis ``(s+alpha)^i``.

    ``f`` maps the ``lambda - sigma`` component (dimension ``nu'``) to the
    ``lambda`` component (dimension ``nu``) as ``[Id_nu 0]``; ``d f`` maps the
    ``lambda + sigma`` component (dimension ``mu``) in as ``[0 C]^T`` with
    ``C`` the upper triangular Toeplitz matrix of the Taylor coefficients of
    ``b / (s + alpha)^rho`` at ``-alpha``.
    """
    alpha = as_rational(alpha)
    big_nu = nu(b, alpha)
    if not big_nu > -ell:
        raise ValueError(f"need nu = {big_nu} > -ell = {-ell}")
    rho = b.poly.multiplicity(-alpha)
    dim = grv_exponent(big_nu, ell)
    mu = 0 if big_nu - rho <= -ell else min((big_nu - rho + ell + 1) // 2, big_nu - rho)
    taylor = expand_at(b.poly / (linear(alpha) ** rho), alpha).coefficients
    cs = lambda i: taylor[i] if 0 <= i < len(taylor) else Fraction(0)
    width = dim - rho
    C = tuple(tuple(cs(col - row) for col in range(width)) for row in range(mu))
    dim_below = grv_exponent(nu(b.shift(-1), alpha), ell)
    f = tuple(
        tuple(Fraction(int(i == j)) for j in range(dim_below)) for i in range(dim)
    )
    # [0 C] is mu x dim (zero block mu x rho); its transpose maps the mu-space in
    df = tuple(
        tuple(Fraction(0) if i < rho else C[j][i - rho] for j in range(mu)) for i in range(dim)
    )
    return FdfMatrices(f, df, C, rho, dim, mu, tuple(taylor))
