"""Naive reference computations used to cross-check the closed forms.

Nothing here calls the greedy chain decomposition from :mod:`vfilt.bfun` or
the product formulas from :mod:`vfilt.filtration`.
"""

from __future__ import annotations

import random
from collections import Counter
from fractions import Fraction

from .bfun import BFunction
from .ratpoly import RationalLike, RootPoly, as_rational, linear, nullspace, rank


def _stability_bound(p: RootPoly, q: RootPoly) -> int:
    proots = [r for r, _ in p.roots]
    others = proots + [r for r, _ in q.roots]
    gap = 0
    for x in proots:
        for y in others:
            diff = y - x
            if diff.denominator == 1:
                gap = max(gap, abs(int(diff)))
    return p.degree + gap + 2


def _offsets(x: Fraction, counts: Counter) -> dict[int, int]:
    """``i -> multiplicity of x + i`` for the integer offsets ``i`` that occur."""
    out: dict[int, int] = {}
    for y, m in counts.items():
        diff = y - x
        if diff.denominator == 1:
            out[int(diff)] = out.get(int(diff), 0) + m
    return out


def partial_gcd(p: RootPoly, q: RootPoly, n_terms: int) -> RootPoly:
    """gcd of ``p(s+i) prod_{j<i} q(s+j)`` for ``i = 0..n_terms``.

    Every term is divisible by the gcd, which divides the ``i = 0`` term
    ``p(s)``; so only the roots of ``p`` need their multiplicities tracked.
    At a root ``x`` the ``i``-th term vanishes to order
    ``mult_p(x+i) + sum_{j<i} mult_q(x+j)``.
    """
    pc = p.counts()
    qc = q.counts()
    g: Counter = Counter()
    for x, m in pc.items():
        p_off = _offsets(x, pc)
        q_off = _offsets(x, qc)
        best = m
        from_q = 0
        for i in range(1, n_terms + 1):
            from_q += q_off.get(i - 1, 0)
            best = min(best, p_off.get(i, 0) + from_q)
        g[x] = best
    return RootPoly.from_counts(g)


def c_poly_bruteforce(p: RootPoly, q: RootPoly, verify: bool = False) -> RootPoly:
    """``c_{p,q}`` from partial gcds up to a stabilization bound.

    The bound is ``deg p + G + 2`` where ``G`` is the largest integer distance
    between a root of ``p`` and a root of ``p`` or ``q``.  With ``verify`` the
    gcd is recomputed with 1 and 5 extra terms and must not move.
    """
    n = _stability_bound(p, q)
    g = partial_gcd(p, q, n)
    if verify:
        for extra in (1, 5):
            if partial_gcd(p, q, n + extra) != g:
                raise ArithmeticError(f"partial gcds of c_(p,q) not stable at N={n}")
    return g


def transport_bruteforce(b: BFunction, p: RootPoly) -> BFunction:
    """``b(s) c(s+1) / c(s)`` with ``c`` from the partial-gcd oracle."""
    c = c_poly_bruteforce(p, b.poly)
    return BFunction.from_poly(b.poly * c.shift(1) / c)


def p_function_greedy(
    b: BFunction, alpha: RationalLike, rng: random.Random | None = None
) -> RootPoly:
    """Smallest ``p`` with every root of ``b_{p(s)m}`` at most ``-alpha``.

    Starting from ``p = 1``, repeatedly look at the b-function of ``p(s) m``
    and multiply ``p`` by ``(s + beta)`` for an offending shift ``beta < alpha``
    (the largest offending root ``-beta`` first, or a random offender when
    ``rng`` is given).
    """
    alpha = as_rational(alpha)
    p = RootPoly.one()
    while True:
        cur = transport_bruteforce(b, p)
        bad = [x for x in cur.lambdas if x < alpha]
        if not bad:
            return p
        beta = rng.choice(bad) if rng is not None else min(bad)
        p = p * linear(beta)


# -- monodromy weight filtration of a single Jordan block ---------------------


def _mat_power(m, k, size):
    out = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    for _ in range(k):
        out = [[sum(out[i][t] * m[t][j] for t in range(size)) for j in range(size)] for i in range(size)]
    return out


def _column_space(m, size):
    cols = [[m[i][j] for i in range(size)] for j in range(size)]
    basis = []
    for col in cols:
        if rank(basis + [col], size) > len(basis):
            basis.append(col)
    return basis


def _kernel(m, size):
    if size == 0:
        return []
    return [list(v) for v in nullspace(m, size)]


def _intersect(u, v, size):
    if not u or not v:
        return []
    # solve sum x_i u_i - sum y_j v_j = 0
    system = [[vec[r] for vec in u] + [-vec[r] for vec in v] for r in range(size)]
    sols = nullspace(system, len(u) + len(v))
    out = []
    for sol in sols:
        out.append([sum(sol[i] * u[i][r] for i in range(len(u))) for r in range(size)])
    return out


def jordan_weight_dim(nu: int, alpha: RationalLike, ell: int) -> int:
    """``dim W(N)_ell`` on ``Q[s]/(s+alpha)^nu`` with ``N = s + alpha``.

    The module is written in the monomial basis ``1, s, ..., s^(nu-1)``; ``N``
    is multiplication by ``s + alpha`` reduced modulo ``(s + alpha)^nu``.  The
    weight filtration is the literal sum over ``j >= 0`` of
    ``ker N^(ell+j+1) intersected with im N^j``.
    """
    if nu < 0:
        raise ValueError("nu must be non-negative")
    if nu == 0:
        return 0
    alpha = as_rational(alpha)
    modulus = (linear(alpha) ** nu).to_dense().coefficients  # monic, length nu + 1
    # column t of N is the reduction of s^t (s + alpha)
    n_mat = [[Fraction(0)] * nu for _ in range(nu)]
    for t in range(nu):
        vec = [Fraction(0)] * (nu + 1)
        vec[t] += alpha
        vec[t + 1] += 1
        top = vec[nu]
        if top:
            for i in range(nu):
                vec[i] -= top * modulus[i]
        for i in range(nu):
            n_mat[i][t] = vec[i]
    pieces: list[list[Fraction]] = []
    for j in range(0, nu + 1):
        kpow = ell + j + 1
        if kpow <= 0:
            continue
        ker = _kernel(_mat_power(n_mat, kpow, nu), nu)
        img = _column_space(_mat_power(n_mat, j, nu), nu)
        pieces.extend(_intersect(ker, img, nu))
    return rank(pieces, nu) if pieces else 0
