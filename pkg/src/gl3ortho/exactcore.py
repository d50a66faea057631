"""Exact scalars, sparse polynomials, sparse rational matrices and elimination.

Every scalar in the package is a :class:`fractions.Fraction`; nothing here
touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import lcm
from typing import Iterable, Sequence

from .errors import (
    DuplicateNode,
    InconsistentSystem,
    ShapeMismatch,
    SingularSystem,
)

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def Q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def format_rational(q) -> str:
    q = Q(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    """Sparse polynomial with rational coefficients.

    ``coeffs`` maps exponent tuples to nonzero Fractions.  ``names`` fixes the
    number and order of the variables.  The zero polynomial has degree -1.
    """

    __slots__ = ("coeffs", "names")

    def __init__(self, coeffs=None, names: Sequence[str] = ("x",)):
        self.names = tuple(names)
        n = len(self.names)
        clean = {}
        for exps, c in (coeffs or {}).items():
            exps = tuple(exps)
            assert len(exps) == n, (exps, self.names)
            c = Q(c)
            if c:
                clean[exps] = clean.get(exps, ZERO) + c
                if not clean[exps]:
                    del clean[exps]
        self.coeffs = clean

    # construction

    @classmethod
    def const(cls, c, names):
        return cls({(0,) * len(names): c}, names)

    @classmethod
    def var(cls, i, names):
        exps = [0] * len(names)
        exps[i] = 1
        return cls({tuple(exps): 1}, names)

    @classmethod
    def from_list(cls, coeffs: Sequence, name="E33"):
        """Univariate polynomial from ascending coefficient list."""
        return cls({(d,): c for d, c in enumerate(coeffs)}, (name,))

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.names != self.names:
                raise ShapeMismatch(f"variables {other.names} vs {self.names}")
            return other
        return Poly.const(other, self.names)

    # arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, ZERO) + c
        return Poly(out, self.names)

    __radd__ = __add__

    def __neg__(self):
        return Poly({e: -c for e, c in self.coeffs.items()}, self.names)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = Q(other)
            return Poly({e: c * v for e, v in self.coeffs.items()}, self.names)
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, ZERO) + c1 * c2
        return Poly(out, self.names)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = Q(c)
        return Poly({e: v / c for e, v in self.coeffs.items()}, self.names)

    def __pow__(self, k: int):
        assert k >= 0
        out = Poly.const(1, self.names)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.names == other.names and self.coeffs == other.coeffs
        try:
            return self.coeffs == Poly.const(other, self.names).coeffs
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.names, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(self.names, e) if k
            )
            cs = format_rational(c)
            if not mono:
                terms.append(cs)
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{cs}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    # inspection

    @property
    def nvars(self) -> int:
        return len(self.names)

    def degree(self) -> int:
        if not self.coeffs:
            return -1
        return max(sum(e) for e in self.coeffs)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.coeffs)

    def constant_value(self) -> Fraction:
        return self.coeffs.get((0,) * self.nvars, ZERO)

    def coefficient(self, exps) -> Fraction:
        return self.coeffs.get(tuple(exps), ZERO)

    def coefficient_list(self) -> list[Fraction]:
        """Ascending coefficients of a univariate polynomial."""
        assert self.nvars == 1
        d = self.degree()
        return [self.coeffs.get((i,), ZERO) for i in range(d + 1)]

    def leading_monomial(self):
        """Lexicographically largest exponent tuple (first variable dominant)."""
        if not self.coeffs:
            return None
        return max(self.coeffs)

    def leading_coefficient(self) -> Fraction:
        lm = self.leading_monomial()
        return ZERO if lm is None else self.coeffs[lm]

    def monic(self) -> "Poly":
        lc = self.leading_coefficient()
        if not lc:
            return self
        return self / lc

    # evaluation and substitution

    def __call__(self, *point):
        return self.eval(point[0] if len(point) == 1 and isinstance(point[0], (tuple, list)) else point)

    def eval(self, point) -> Fraction:
        if not isinstance(point, (tuple, list)):
            point = (point,)
        if len(point) != self.nvars:
            raise ShapeMismatch(f"point of arity {len(point)} for {self.nvars} variables")
        point = [Q(p) for p in point]
        total = ZERO
        for e, c in self.coeffs.items():
            term = c
            for p, k in zip(point, e):
                if k:
                    term *= p**k
            total += term
        return total

    def substitute(self, images: Sequence["Poly"]) -> "Poly":
        """Compose: replace variable i by ``images[i]`` (all in one common ring)."""
        assert len(images) == self.nvars
        target = images[0].names
        powers = [{0: Poly.const(1, target)} for _ in images]

        def pw(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = pw(i, k - 1) * images[i]
            return cache[k]

        out = Poly({}, target)
        for e, c in self.coeffs.items():
            term = Poly.const(c, target)
            for i, k in enumerate(e):
                if k:
                    term = term * pw(i, k)
            out = out + term
        return out

    def shift(self, offsets) -> "Poly":
        """``f(x_1 + offsets[0], x_2 + offsets[1], ...)``."""
        offsets = offsets if isinstance(offsets, (tuple, list)) else (offsets,)
        images = [
            Poly.var(i, self.names) + offsets[i] for i in range(self.nvars)
        ]
        return self.substitute(images)

    def divide_exact(self, other: "Poly") -> "Poly":
        """Quotient of univariate polynomials; raises ValueError if a remainder is left."""
        assert self.nvars == 1 and other.nvars == 1
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        rem = self
        quot = Poly({}, self.names)
        dlead = other.degree()
        lc = other.coeffs[(dlead,)]
        while rem and rem.degree() >= dlead:
            d = rem.degree()
            factor = Poly({(d - dlead,): rem.coeffs[(d,)] / lc}, self.names)
            quot = quot + factor
            rem = rem - factor * other
        if rem:
            raise ValueError("nonzero remainder")
        return quot


def poly1(coeffs: Sequence = (), name: str = "E33") -> Poly:
    return Poly.from_list(coeffs, name)


H_NAMES = ("H1", "H2")


def poly2(coeffs: dict) -> Poly:
    return Poly(coeffs, H_NAMES)


def poly_eval(p: Poly, point) -> Fraction:
    return p.eval(point)


def lagrange_interpolate(samples: Iterable[tuple], name: str = "E33") -> Poly:
    """Unique polynomial of degree < len(samples) through the given points.

    Newton divided differences, expanded into monomial form.
    """
    samples = [(Q(x), Q(y)) for x, y in samples]
    xs = [x for x, _ in samples]
    if len(set(xs)) != len(xs):
        raise DuplicateNode("abscissae must be pairwise distinct")
    n = len(samples)
    if n == 0:
        return Poly({}, (name,))
    table = [y for _, y in samples]
    coef = [table[0]]
    for level in range(1, n):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
            for i in range(n - level)
        ]
        coef.append(table[0])
    x = Poly.var(0, (name,))
    out = Poly.const(coef[-1], (name,))
    for i in range(n - 2, -1, -1):
        out = out * (x - xs[i]) + coef[i]
    return out


# ---------------------------------------------------------------------------
# sparse matrices


class RationalMatrix:
    """Sparse matrix: ``data[row][col]`` holds the nonzero entries.

    Treated as immutable once built; arithmetic returns new matrices.
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data=None):
        self.rows = rows
        self.cols = cols
        self.data = {}
        if data:
            for r, row in data.items():
                clean = {c: Q(v) for c, v in row.items() if v}
                if clean:
                    self.data[r] = clean

    @classmethod
    def from_entries(cls, rows, cols, entries: Iterable[tuple]):
        data = {}
        for r, c, v in entries:
            if not v:
                continue
            row = data.setdefault(r, {})
            row[c] = row.get(c, ZERO) + Q(v)
            if not row[c]:
                del row[c]
        return cls(rows, cols, data)

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence]):
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        return cls(rows, cols, {
            r: {c: v for c, v in enumerate(line) if v}
            for r, line in enumerate(dense)
        })

    @classmethod
    def identity(cls, n: int):
        return cls(n, n, {i: {i: ONE} for i in range(n)})

    @classmethod
    def zeros(cls, rows: int, cols: int):
        return cls(rows, cols)

    @classmethod
    def diagonal(cls, values: Sequence):
        n = len(values)
        return cls(n, n, {i: {i: v} for i, v in enumerate(values) if v})

    @property
    def shape(self):
        return (self.rows, self.cols)

    def to_dense(self) -> list[list[Fraction]]:
        out = [[ZERO] * self.cols for _ in range(self.rows)]
        for r, row in self.data.items():
            for c, v in row.items():
                out[r][c] = v
        return out

    def get(self, r: int, c: int) -> Fraction:
        return self.data.get(r, {}).get(c, ZERO)

    def items(self):
        for r, row in self.data.items():
            for c, v in row.items():
                yield r, c, v

    def nnz(self) -> int:
        return sum(len(row) for row in self.data.values())

    def is_zero(self) -> bool:
        return not self.data

    def column(self, c: int) -> dict[int, Fraction]:
        return {r: row[c] for r, row in self.data.items() if c in row}

    def columns(self) -> dict[int, dict[int, Fraction]]:
        out: dict[int, dict[int, Fraction]] = {}
        for r, row in self.data.items():
            for c, v in row.items():
                out.setdefault(c, {})[r] = v
        return out

    def _check_same(self, other):
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check_same(other)
        data = {r: dict(row) for r, row in self.data.items()}
        for r, row in other.data.items():
            target = data.setdefault(r, {})
            for c, v in row.items():
                s = target.get(c, ZERO) + v
                if s:
                    target[c] = s
                else:
                    target.pop(c, None)
        return RationalMatrix(self.rows, self.cols, data)

    def __neg__(self):
        return RationalMatrix(self.rows, self.cols, {
            r: {c: -v for c, v in row.items()} for r, row in self.data.items()
        })

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k) -> "RationalMatrix":
        k = Q(k)
        if not k:
            return RationalMatrix(self.rows, self.cols)
        return RationalMatrix(self.rows, self.cols, {
            r: {c: k * v for c, v in row.items()} for r, row in self.data.items()
        })

    def __rmul__(self, k):
        return self.scale(k)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ShapeMismatch(f"{self.shape} @ {other.shape}")
        odata = other.data
        out = {}
        for r, row in self.data.items():
            acc: dict[int, Fraction] = {}
            for k, a in row.items():
                orow = odata.get(k)
                if not orow:
                    continue
                for c, b in orow.items():
                    acc[c] = acc.get(c, ZERO) + a * b
            acc = {c: v for c, v in acc.items() if v}
            if acc:
                out[r] = acc
        m = RationalMatrix(self.rows, other.cols)
        m.data = out
        return m

    def commutator(self, other: "RationalMatrix") -> "RationalMatrix":
        return self @ other - other @ self

    def transpose(self) -> "RationalMatrix":
        data: dict[int, dict[int, Fraction]] = {}
        for r, row in self.data.items():
            for c, v in row.items():
                data.setdefault(c, {})[r] = v
        m = RationalMatrix(self.cols, self.rows)
        m.data = data
        return m

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ShapeMismatch("trace of non-square matrix")
        return sum((row.get(r, ZERO) for r, row in self.data.items()), ZERO)

    def trace_of_product(self, other: "RationalMatrix") -> Fraction:
        """tr(self @ other) without forming the product."""
        if self.cols != other.rows or self.rows != other.cols:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")
        total = ZERO
        odata = other.data
        for r, row in self.data.items():
            for k, a in row.items():
                b = odata.get(k, {}).get(r)
                if b:
                    total += a * b
        return total

    def apply(self, vec: dict[int, Fraction]) -> dict[int, Fraction]:
        """Matrix times a sparse column vector ``{index: value}``."""
        out: dict[int, Fraction] = {}
        cols = self.columns()
        for c, x in vec.items():
            for r, v in cols.get(c, {}).items():
                out[r] = out.get(r, ZERO) + v * x
        return {r: v for r, v in out.items() if v}

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    __hash__ = None

    def __repr__(self):
        return f"RationalMatrix({self.rows}x{self.cols}, nnz={self.nnz()})"


# ---------------------------------------------------------------------------
# elimination


def _integer_rows(dense: Sequence[Sequence[Fraction]]):
    """Clear denominators row by row; returns (int rows, product of row scales)."""
    out = []
    scale = 1
    for row in dense:
        m = 1
        for v in row:
            v = Q(v)
            if v.denominator != 1:
                m = lcm(m, v.denominator)
        out.append([int(Q(v) * m) for v in row])
        scale *= m
    return out, scale


def _bareiss(rows: list[list[int]]):
    """In-place fraction-free elimination; returns (rank, sign, last pivot)."""
    n = len(rows)
    m = len(rows[0]) if n else 0
    sign = 1
    prev = 1
    rank = 0
    col = 0
    while rank < n and col < m:
        piv = next((i for i in range(rank, n) if rows[i][col]), None)
        if piv is None:
            col += 1
            continue
        if piv != rank:
            rows[rank], rows[piv] = rows[piv], rows[rank]
            sign = -sign
        p = rows[rank][col]
        prow = rows[rank]
        for i in range(rank + 1, n):
            row = rows[i]
            a = row[col]
            for j in range(col + 1, m):
                row[j] = (p * row[j] - a * prow[j]) // prev
            row[col] = 0
        prev = p
        rank += 1
        col += 1
    return rank, sign, prev


def det_and_rank(m) -> tuple[Fraction, int]:
    """Exact determinant (0 for non-square input) and rank.

    Accepts a RationalMatrix or a dense list of rows.
    """
    dense = m.to_dense() if isinstance(m, RationalMatrix) else [list(r) for r in m]
    if not dense or not dense[0]:
        return (ONE if not dense else ZERO), 0
    rows, scale = _integer_rows(dense)
    n, cols = len(rows), len(rows[0])
    rank, sign, last = _bareiss(rows)
    if n != cols:
        return ZERO, rank
    if rank < n:
        return ZERO, rank
    return Fraction(sign * last, scale), rank


def rref(dense: Sequence[Sequence]):
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    a = [[Q(v) for v in row] for row in dense]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a[:r], pivots


def nullspace(dense: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of {x : A x = 0}; one basis vector per free column."""
    if ncols is None:
        ncols = len(dense[0]) if dense else 0
    if not dense:
        return [[ONE if i == j else ZERO for i in range(ncols)] for j in range(ncols)]
    reduced, pivots = rref(dense)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def rank(dense: Sequence[Sequence]) -> int:
    if not dense:
        return 0
    return det_and_rank(dense)[1]


def solve_linear(dense: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Unique solution of A x = b; raises if none or infinitely many."""
    ncols = len(dense[0]) if dense else 0
    aug = [list(row) + [b] for row, b in zip(dense, rhs)]
    reduced, pivots = rref(aug)
    if ncols in pivots:
        raise InconsistentSystem("no solution")
    if len(pivots) < ncols:
        raise SingularSystem(f"rank {len(pivots)} < {ncols} unknowns")
    x = [ZERO] * ncols
    for row, p in zip(reduced, pivots):
        x[p] = row[ncols]
    return x


def cofactor_det(dense: Sequence[Sequence]) -> Fraction:
    """Laplace expansion; only for tiny matrices (used as a test oracle)."""
    n = len(dense)
    if n == 0:
        return ONE
    if n == 1:
        return Q(dense[0][0])
    total = ZERO
    for j in range(n):
        if not dense[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in dense[1:]]
        total += (-1) ** j * Q(dense[0][j]) * cofactor_det(minor)
    return total


def exponent_tuples(nvars: int, maxdeg: int):
    """All exponent tuples with total degree <= maxdeg, graded then lexicographic."""
    out = []
    for d in range(maxdeg + 1):
        for e in product(range(d + 1), repeat=nvars):
            if sum(e) == d:
                out.append(e)
    return sorted(out, key=lambda e: (sum(e), tuple(-x for x in e)))
