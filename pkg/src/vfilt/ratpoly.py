"""Exact rational polynomials in one variable ``s``.

Two representations live here:

* :class:`RootPoly` -- a monic polynomial stored as a multiset of rational
  roots.  Every b-function, p-function and ideal generator in this package
  splits over Q, so products, gcds and lcms reduce to multiset operations.
* :class:`DensePoly` -- a coefficient vector (lowest degree first), used for
  spans, bases and Taylor expansions.

Scalars are :class:`fractions.Fraction` throughout; there is no floating point.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

RationalLike = Union[int, str, Fraction]


def as_rational(value: RationalLike) -> Fraction:
    """Parse ``3``, ``"3/2"``, ``"-1/4"`` or a Fraction into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError:
            raise ValueError(f"not a rational number: {value!r}") from None
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rational_str(q: Fraction) -> str:
    """Serialize as ``"p/q"``, or ``"n"`` when the denominator is 1."""
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _linear_factor_str(root: Fraction) -> str:
    if root == 0:
        return "s"
    c = -root
    sign = "+" if c > 0 else "-"
    return f"(s{sign}{rational_str(abs(c))})"


@dataclass(frozen=True)
class RootPoly:
    """Monic ``prod (s - root)**mult`` stored as sorted ``(root, mult)`` pairs.

    The empty tuple is the constant polynomial 1.  Construct through
    :meth:`from_roots`, :meth:`from_counts` or :func:`linear` rather than by
    hand so the canonical ordering holds.
    """

    roots: tuple[tuple[Fraction, int], ...] = ()

    def __post_init__(self):
        items = []
        for r, m in self.roots:
            if m < 0:
                raise ValueError("negative multiplicity")
            if m:
                items.append((as_rational(r), int(m)))
        merged = Counter()
        for r, m in items:
            merged[r] += m
        object.__setattr__(self, "roots", tuple(sorted(merged.items())))

    # construction ------------------------------------------------------

    @classmethod
    def one(cls) -> "RootPoly":
        return cls(())

    @classmethod
    def from_roots(cls, roots: Iterable[RationalLike]) -> "RootPoly":
        """Polynomial with the given roots, repeated entries meaning multiplicity."""
        return cls.from_counts(Counter(as_rational(r) for r in roots))

    @classmethod
    def from_counts(cls, counts: Mapping[Fraction, int]) -> "RootPoly":
        return cls(tuple((r, m) for r, m in counts.items() if m > 0))

    @classmethod
    def from_dense(cls, poly: "DensePoly") -> "RootPoly":
        """Factor a DensePoly that splits over Q into a monic RootPoly.

        Raises ValueError for the zero polynomial or when some factor is not a
        rational linear form.
        """
        if poly.is_zero():
            raise ValueError("the zero polynomial has no root multiset")
        coeffs = list(poly.coefficients)
        found: Counter = Counter()
        while len(coeffs) > 1 and coeffs[0] == 0:
            coeffs.pop(0)
            found[Fraction(0)] += 1
        lcd = 1
        for c in coeffs:
            lcd = lcd * c.denominator // math.gcd(lcd, c.denominator)
        ints = [int(c * lcd) for c in coeffs]
        while len(ints) > 1:
            root = _find_rational_root(ints)
            if root is None:
                raise ValueError(f"{poly} does not split over Q")
            ints = _deflate(ints, root)
            found[root] += 1
        return cls.from_counts(found)

    # structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.roots)

    def counts(self) -> Counter:
        return Counter(dict(self.roots))

    def root_list(self) -> list[Fraction]:
        """Roots with repetition, ascending."""
        return [r for r, m in self.roots for _ in range(m)]

    def multiplicity(self, root: RationalLike) -> int:
        return dict(self.roots).get(as_rational(root), 0)

    def divides(self, other: "RootPoly") -> bool:
        theirs = other.counts()
        return all(theirs[r] >= m for r, m in self.roots)

    def __call__(self, x: RationalLike) -> Fraction:
        x = as_rational(x)
        out = Fraction(1)
        for r, m in self.roots:
            out *= (x - r) ** m
        return out

    # arithmetic --------------------------------------------------------

    def __mul__(self, other: "RootPoly") -> "RootPoly":
        if not isinstance(other, RootPoly):
            return NotImplemented
        return RootPoly.from_counts(self.counts() + other.counts())

    def __pow__(self, k: int) -> "RootPoly":
        if k < 0:
            raise ValueError("negative power")
        return RootPoly(tuple((r, m * k) for r, m in self.roots))

    def __truediv__(self, other: "RootPoly") -> "RootPoly":
        """Exact quotient; raises ValueError unless ``other`` divides ``self``."""
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        mine = self.counts()
        mine.subtract(other.counts())
        return RootPoly.from_counts(mine)

    def shift(self, a: RationalLike) -> "RootPoly":
        """Return ``p(s + a)``."""
        a = as_rational(a)
        return RootPoly(tuple((r - a, m) for r, m in self.roots))

    def to_dense(self) -> "DensePoly":
        coeffs = [Fraction(1)]
        for r in self.root_list():
            # multiply by (s - r)
            nxt = [Fraction(0)] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                nxt[i] -= r * c
                nxt[i + 1] += c
            coeffs = nxt
        return DensePoly(tuple(coeffs))

    # io ----------------------------------------------------------------

    def __str__(self) -> str:
        if not self.roots:
            return "1"
        parts = []
        for r, m in sorted(self.roots, key=lambda rm: -rm[0]):
            f = _linear_factor_str(r)
            parts.append(f if m == 1 else f"{f}^{m}")
        return "".join(parts)

    def to_json(self) -> list:
        return [[rational_str(r), m] for r, m in self.roots]

    @classmethod
    def from_json(cls, data: Sequence) -> "RootPoly":
        return cls(tuple((as_rational(r), int(m)) for r, m in data))


def linear(a: RationalLike) -> RootPoly:
    """The factor ``(s + a)``."""
    return RootPoly.from_roots([-as_rational(a)])


def pochhammer(a: RationalLike, k: int) -> RootPoly:
    """Rising product ``(s+a)(s+a+1)...(s+a+k-1)``; the constant 1 when ``k <= 0``."""
    a = as_rational(a)
    return RootPoly.from_roots(-(a + i) for i in range(max(k, 0)))


def gcd(p: RootPoly, q: RootPoly) -> RootPoly:
    return RootPoly.from_counts(p.counts() & q.counts())


def lcm(p: RootPoly, q: RootPoly) -> RootPoly:
    return RootPoly.from_counts(p.counts() | q.counts())


def shift(p: RootPoly, a: RationalLike) -> RootPoly:
    return p.shift(a)


def expand_at(p: RootPoly, alpha: RationalLike) -> "DensePoly":
    """Coefficients ``c_i`` with ``p(s) = sum_i c_i (s + alpha)**i``."""
    return p.shift(-as_rational(alpha)).to_dense()


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _find_rational_root(ints: list[int]):
    # ints: integer coefficients, low degree first, constant term nonzero
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if _eval_int(ints, cand) == 0:
                    return cand
    return None


def _eval_int(ints, x):
    acc = Fraction(0)
    for c in reversed(ints):
        acc = acc * x + c
    return acc


def _deflate(ints, root):
    # synthetic division by (s - root); keep integer coefficients up to scale
    coeffs = [Fraction(c) for c in ints]
    out = [Fraction(0)] * (len(coeffs) - 1)
    carry = Fraction(0)
    for i in range(len(coeffs) - 1, 0, -1):
        carry = coeffs[i] + carry * root if i < len(coeffs) - 1 else coeffs[i]
        out[i - 1] = carry
    lcd = 1
    for c in out:
        lcd = lcd * c.denominator // math.gcd(lcd, c.denominator)
    return [int(c * lcd) for c in out]


@dataclass(frozen=True)
class DensePoly:
    """Polynomial in ``s`` as rational coefficients, lowest degree first.

    Trailing zeros are stripped, so the zero polynomial is the empty tuple.
    """

    coefficients: tuple[Fraction, ...] = ()

    def __post_init__(self):
        cs = [as_rational(c) for c in self.coefficients]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coefficients", tuple(cs))

    @classmethod
    def monomial(cls, k: int, c: RationalLike = 1) -> "DensePoly":
        return cls((Fraction(0),) * k + (as_rational(c),))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def coeff(self, i: int) -> Fraction:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else Fraction(0)

    def __call__(self, x: RationalLike) -> Fraction:
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other: "DensePoly") -> "DensePoly":
        n = max(len(self.coefficients), len(other.coefficients))
        return DensePoly(tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    def __neg__(self) -> "DensePoly":
        return DensePoly(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "DensePoly") -> "DensePoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return DensePoly(tuple(c * other for c in self.coefficients))
        if not isinstance(other, DensePoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return DensePoly(())
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return DensePoly(tuple(out))

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            mag = rational_str(abs(c))
            mono = "" if i == 0 else ("s" if i == 1 else f"s^{i}")
            body = mag if not mono else (mono if abs(c) == 1 else f"{mag}*{mono}")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list[str]:
        return [rational_str(c) for c in self.coefficients]


# -- exact linear algebra ---------------------------------------------------


class InconsistentSystemError(ValueError):
    """Raised by :func:`solve_linear` when ``A x = b`` has no solution."""


@dataclass(frozen=True)
class LinearSolution:
    particular: tuple[Fraction, ...]
    null_basis: tuple[tuple[Fraction, ...], ...]


def rref(matrix: Sequence[Sequence[RationalLike]], ncols: int | None = None):
    """Reduced row echelon form; returns ``(rows, pivot_columns)``."""
    rows = [[as_rational(x) for x in row] for row in matrix]
    width = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    pivots: list[int] = []
    r = 0
    for col in range(width):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][col]
        rows[r] = [x / lead for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(matrix: Sequence[Sequence[RationalLike]], ncols: int | None = None) -> int:
    return len(rref(matrix, ncols)[1])


def solve_linear(
    system: Sequence[Sequence[RationalLike]],
    rhs: Sequence[RationalLike],
    ncols: int | None = None,
) -> LinearSolution:
    """Solve ``system @ x = rhs`` exactly over Q.

    Returns one particular solution together with a basis of the null space,
    so every solution is ``particular + sum t_i * null_basis[i]``.  ``ncols``
    is required only when ``system`` has no rows.
    """
    if len(system) != len(rhs):
        raise ValueError("row count of system and rhs differ")
    n = ncols if ncols is not None else (len(system[0]) if system else 0)
    augmented = [list(row) + [rhs[i]] for i, row in enumerate(system)]
    rows, pivots = rref(augmented, n + 1)
    if n in pivots:
        raise InconsistentSystemError("system has no solution")
    particular = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        particular[col] = rows[i][n]
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * n
        v[fcol] = Fraction(1)
        for i, col in enumerate(pivots):
            v[col] = -rows[i][fcol]
        basis.append(tuple(v))
    return LinearSolution(tuple(particular), tuple(basis))


def nullspace(matrix: Sequence[Sequence[RationalLike]], ncols: int | None = None):
    n = ncols if ncols is not None else len(matrix[0])
    return solve_linear(matrix, [0] * len(matrix), ncols=n).null_basis
