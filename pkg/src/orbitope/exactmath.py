"""Exact scalar and matrix arithmetic over Q and over Q[X1,...,Xd].

Rational scalars are `fractions.Fraction` (always canonical: positive
denominator, reduced).  Multivariate polynomials are sparse dictionaries
from exponent tuples to nonzero Fractions, compared under graded
lexicographic term order.  Matrices are immutable row tuples; determinant
and adjugate use fraction-free Bareiss elimination so polynomial entries
never require division by non-units.
"""

from __future__ import annotations

from fractions import Fraction


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" into a Fraction."""
    return Fraction(text.strip())


def render_rational(q: Fraction) -> str:
    """Render a Fraction as "p/q", omitting "/q" when the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _grlex_key(exps: tuple[int, ...]) -> tuple:
    return (sum(exps), exps)


class MultiPoly:
    """Sparse multivariate polynomial over Q.

    Terms map exponent tuples (length ``nvars``) to nonzero Fraction
    coefficients; zero coefficients are never stored, so equality is plain
    dictionary equality.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[tuple[int, ...], Fraction] | None = None):
        self.nvars = nvars
        self.terms = dict(terms) if terms else {}

    @classmethod
    def const(cls, nvars: int, value) -> "MultiPoly":
        value = Fraction(value)
        if value == 0:
            return cls(nvars)
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, index: int, nvars: int) -> "MultiPoly":
        exps = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {exps: Fraction(1)})

    def _coerce(self, other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(self.nvars, other)
        return None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            s = terms.get(exps, 0) + coeff
            if s:
                terms[exps] = s
            else:
                terms.pop(exps, None)
        return MultiPoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return MultiPoly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other) -> "MultiPoly":
        """Exact division; raises ValueError if ``other`` does not divide self.

        Divisions arising in Bareiss elimination are always exact, so an
        inexact division signals a bug rather than a user error.
        """
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        quotient: dict[tuple[int, ...], Fraction] = {}
        rem = MultiPoly(self.nvars, self.terms)
        div_exp, div_coeff = other.leading_term()
        while rem:
            rem_exp, rem_coeff = rem.leading_term()
            exps = tuple(a - b for a, b in zip(rem_exp, div_exp))
            if any(e < 0 for e in exps):
                raise ValueError("inexact polynomial division")
            coeff = rem_coeff / div_coeff
            quotient[exps] = coeff
            rem = rem - MultiPoly(self.nvars, {exps: coeff}) * other
        return MultiPoly(self.nvars, quotient)

    def leading_term(self) -> tuple[tuple[int, ...], Fraction]:
        exps = max(self.terms, key=_grlex_key)
        return exps, self.terms[exps]

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def evaluate(self, point) -> Fraction:
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            value = coeff
            for x, e in zip(point, exps):
                if e:
                    value *= Fraction(x) ** e
            total += value
        return total

    def sort_key(self) -> tuple:
        return tuple(sorted((_grlex_key(e), c) for e, c in self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, key=_grlex_key, reverse=True):
            coeff = self.terms[exps]
            monos = [
                f"X{i + 1}" if e == 1 else f"X{i + 1}^{e}"
                for i, e in enumerate(exps)
                if e
            ]
            if not monos:
                parts.append(render_rational(coeff))
            elif coeff == 1:
                parts.append("*".join(monos))
            elif coeff == -1:
                parts.append("-" + "*".join(monos))
            else:
                parts.append(render_rational(coeff) + "*" + "*".join(monos))
        text = " + ".join(parts)
        return text.replace("+ -", "- ")


def zero_like(scalar):
    """Additive zero of the scalar's ring."""
    if isinstance(scalar, MultiPoly):
        return MultiPoly(scalar.nvars)
    return Fraction(0)


def one_like(scalar):
    """Multiplicative one of the scalar's ring."""
    if isinstance(scalar, MultiPoly):
        return MultiPoly.const(scalar.nvars, 1)
    return Fraction(1)


class Matrix:
    """Immutable rectangular matrix over Q or Q[X]."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows, ncols: int | None = None):
        self.rows = tuple(tuple(row) for row in rows)
        self.nrows = len(self.rows)
        # ncols must be passed explicitly for matrices with zero rows
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        if any(len(row) != self.ncols for row in self.rows):
            raise ValueError("ragged rows")

    @classmethod
    def identity(cls, n: int, one=Fraction(1), zero=Fraction(0)) -> "Matrix":
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, nrows: int, ncols: int, zero=Fraction(0)) -> "Matrix":
        return cls([[zero] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def from_strings(cls, rows) -> "Matrix":
        return cls([[parse_rational(x) for x in row] for row in rows])

    def to_strings(self) -> list[list[str]]:
        return [[render_rational(x) for x in row] for row in self.rows]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    @property
    def T(self) -> "Matrix":
        if not self.rows:
            return Matrix([()] * self.ncols)
        return Matrix(zip(*self.rows), ncols=self.nrows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        # iterate over nonzero entries only; permutation and diagonal
        # matrices are common and this keeps their products near-linear
        cols = other.rows
        out = []
        for row in self.rows:
            pairs = [(k, a) for k, a in enumerate(row) if a]
            if not pairs:
                out.append([zero_like(row[0]) if row else Fraction(0)] * other.ncols)
                continue
            acc = [pairs[0][1] * b for b in cols[pairs[0][0]]]
            for k, a in pairs[1:]:
                brow = cols[k]
                for j in range(other.ncols):
                    acc[j] = acc[j] + a * brow[j]
            out.append(acc)
        return Matrix(out, ncols=other.ncols)

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def scale(self, factor) -> "Matrix":
        return Matrix([[factor * x for x in row] for row in self.rows])

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.rows)

    def permute_columns(self, images) -> "Matrix":
        """Column i of the result is column images[i] of self."""
        return Matrix([[row[images[i]] for i in range(self.ncols)] for row in self.rows])

    def trace(self):
        total = self.rows[0][0]
        for i in range(1, self.nrows):
            total = total + self.rows[i][i]
        return total

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __repr__(self) -> str:
        return "Matrix(" + ", ".join(str(list(r)) for r in self.rows) + ")"


def mat_vec(m: Matrix, v) -> tuple:
    """Matrix times column vector (vector as a plain sequence)."""
    out = []
    for row in m.rows:
        acc = None
        for a, x in zip(row, v):
            term = a * x
            acc = term if acc is None else acc + term
        out.append(acc if acc is not None else Fraction(0))
    return tuple(out)


def _bareiss_det(rows) -> object:
    """Fraction-free determinant; valid over any integral domain."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    a = [list(r) for r in rows]
    sample = a[0][0]
    zero = zero_like(sample)
    prev = one_like(sample)
    sign = 1
    for k in range(n - 1):
        if not a[k][k]:
            pivot = next((i for i in range(k + 1, n) if a[i][k]), None)
            if pivot is None:
                return zero
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
            a[i][k] = zero
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def det_adj(m: Matrix) -> tuple[object, Matrix]:
    """Determinant and adjugate, satisfying m @ adj == det * identity exactly.

    The adjugate entry (i, j) is the signed (j, i) cofactor, each computed
    fraction-free, so the result is valid over Q[X] as well as Q.
    """
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = m.nrows
    det = _bareiss_det(m.rows)
    if n == 0:
        return det, Matrix([])
    if n == 1:
        return det, Matrix([[one_like(m.rows[0][0])]])
    adj_rows = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = [
                [m.rows[r][c] for c in range(n) if c != i]
                for r in range(n)
                if r != j
            ]
            cof = _bareiss_det(minor)
            row.append(cof if (i + j) % 2 == 0 else -cof)
        adj_rows.append(row)
    return det, Matrix(adj_rows)


def rank(m: Matrix) -> int:
    """Exact rank of a rational matrix."""
    a = [list(row) for row in m.rows]
    nrows, ncols = m.nrows, m.ncols
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if a[i][col]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][col]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][col]:
                factor = a[i][col]
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == nrows:
            break
    return r


def pivot_columns(m: Matrix) -> list[int]:
    """Indices of a lexicographically-first maximal independent column set."""
    a = [list(row) for row in m.rows]
    nrows, ncols = m.nrows, m.ncols
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if a[i][col]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][col]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][col]:
                factor = a[i][col]
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return pivots


def solve_exact(a: Matrix, b: Matrix) -> Matrix | None:
    """Exact rational solution X of a @ X == b, or None when inconsistent.

    With an underdetermined consistent system, free variables are set to
    zero (deterministic representative).
    """
    if a.nrows != b.nrows:
        raise ValueError("row count mismatch")
    nrows, ncols, k = a.nrows, a.ncols, b.ncols
    aug = [list(ra) + list(rb) for ra, rb in zip(a.rows, b.rows)]
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if aug[i][col]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][col]:
                factor = aug[i][col]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if any(aug[i][ncols:]):
            return None
    x = [[Fraction(0)] * k for _ in range(ncols)]
    for row_idx, col in enumerate(pivots):
        x[col] = aug[row_idx][ncols:]
    return Matrix(x)


def inverse(m: Matrix) -> Matrix:
    """Exact inverse of a rational matrix; raises ValueError if singular."""
    if not m.is_square():
        raise ValueError("inverse of a non-square matrix")
    n = m.nrows
    aug = [
        list(row) + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
        for i, row in enumerate(m.rows)
    ]
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i][col]), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                factor = aug[i][col]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[col])]
    return Matrix([row[n:] for row in aug])
