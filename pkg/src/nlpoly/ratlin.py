"""Exact linear algebra over the rationals and over polynomials in eps.

Everything here is exact.  Rational values are plain ints or
``fractions.Fraction``; quantities that depend on a positive
infinitesimal are polynomials in eps, and their sign "for eps > 0
sufficiently small" is the sign of the lowest-degree coefficient.  No
numeric value for eps is ever chosen.

Determinants use Bareiss (fraction-free) elimination, whose divisions
are exact; ranks use division-free cross-multiplication elimination.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionError, InvalidBasisError


def sign_of(q) -> int:
    """Sign of an exact number as -1, 0 or +1."""
    if q > 0:
        return 1
    if q < 0:
        return -1
    return 0


class EpsPoly:
    """Sparse polynomial in eps with exact rational coefficients.

    Immutable.  ``terms`` is a tuple of (degree, coeff) pairs with
    strictly increasing degrees and no zero coefficients; the zero
    polynomial has an empty tuple.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        acc = {}
        for deg, coeff in terms:
            if deg < 0:
                raise ValueError("negative eps degree")
            c = acc.get(deg, 0) + coeff
            if c:
                acc[deg] = c
            elif deg in acc:
                del acc[deg]
        self.terms = tuple(sorted(acc.items()))

    @classmethod
    def const(cls, value) -> "EpsPoly":
        return cls(((0, value),)) if value else cls()

    @classmethod
    def mono(cls, coeff, degree) -> "EpsPoly":
        return cls(((degree, coeff),)) if coeff else cls()

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, EpsPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __add__(self, other):
        return EpsPoly(self.terms + other.terms)

    def __neg__(self):
        return EpsPoly(tuple((d, -c) for d, c in self.terms))

    def __sub__(self, other):
        return EpsPoly(self.terms + tuple((d, -c) for d, c in other.terms))

    def __mul__(self, other):
        if not self.terms or not other.terms:
            return EpsPoly()
        acc = {}
        for d1, c1 in self.terms:
            for d2, c2 in other.terms:
                d = d1 + d2
                c = acc.get(d, 0) + c1 * c2
                if c:
                    acc[d] = c
                elif d in acc:
                    del acc[d]
        out = EpsPoly.__new__(EpsPoly)
        out.terms = tuple(sorted(acc.items()))
        return out

    def exact_div(self, divisor: "EpsPoly") -> "EpsPoly":
        """Divide by ``divisor``, which must divide exactly."""
        if not divisor.terms:
            raise ZeroDivisionError("eps-polynomial division by zero")
        if not self.terms:
            return EpsPoly()
        rem = dict(self.terms)
        dlead_deg, dlead_coeff = divisor.terms[-1]
        quot = {}
        while rem:
            rdeg = max(rem)
            if rdeg < dlead_deg:
                raise ArithmeticError("inexact eps-polynomial division")
            qdeg = rdeg - dlead_deg
            qc = Fraction(rem[rdeg], dlead_coeff)
            if qc.denominator == 1:
                qc = qc.numerator
            quot[qdeg] = qc
            for d, c in divisor.terms:
                nd = d + qdeg
                nc = rem.get(nd, 0) - qc * c
                if nc:
                    rem[nd] = nc
                elif nd in rem:
                    del rem[nd]
        out = EpsPoly.__new__(EpsPoly)
        out.terms = tuple(sorted(quot.items()))
        return out

    def low(self):
        """Lowest term as (degree, coeff), or None for the zero polynomial."""
        return self.terms[0] if self.terms else None

    def sign_eps(self) -> int:
        """Sign of the polynomial for all sufficiently small eps > 0."""
        return sign_of(self.terms[0][1]) if self.terms else 0

    def max_degree(self) -> int:
        return self.terms[-1][0] if self.terms else 0

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 0)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a degree-0 polynomial")
        return self.terms[0][1] if self.terms else 0

    def eval_at(self, value):
        """Exact value at eps = value (a rational)."""
        return sum((c * value**d for d, c in self.terms), 0)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for d, c in self.terms:
            if d == 0:
                body = str(abs(c))
            else:
                var = "eps" if d == 1 else f"eps^{d}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            parts.append(("-" if c < 0 else "+", body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for s, body in parts[1:]:
            out += f" {s} {body}"
        return out

    def __repr__(self):
        return f"EpsPoly({self})"


_EPS_ZERO = EpsPoly()


class RatMatrix:
    """Dense rational matrix, row-major, immutable."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise DimensionError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(entries)}"
            )
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, row_lists) -> "RatMatrix":
        row_lists = [list(r) for r in row_lists]
        ncols = len(row_lists[0]) if row_lists else 0
        if any(len(r) != ncols for r in row_lists):
            raise DimensionError("ragged rows")
        return cls(len(row_lists), ncols, [x for r in row_lists for x in r])

    @classmethod
    def identity(cls, n) -> "RatMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    def at(self, i, j):
        return self.entries[i * self.cols + j]

    def row_lists(self):
        c = self.cols
        return [list(self.entries[i * c : (i + 1) * c]) for i in range(self.rows)]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(
            self.cols,
            self.rows,
            [self.at(i, j) for j in range(self.cols) for i in range(self.rows)],
        )

    def column_submatrix(self, cols) -> "RatMatrix":
        cols = list(cols)
        return RatMatrix(
            self.rows, len(cols), [self.at(i, j) for i in range(self.rows) for j in cols]
        )

    def to_eps(self) -> "EpsMatrix":
        return EpsMatrix(self.rows, self.cols, [EpsPoly.const(x) for x in self.entries])

    def __eq__(self, other):
        return (
            isinstance(other, RatMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and all(a == b for a, b in zip(self.entries, other.entries))
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(Fraction(x) for x in self.entries)))

    def __repr__(self):
        return f"RatMatrix({self.rows}x{self.cols}, {self.row_lists()})"


class EpsMatrix:
    """Dense matrix of eps-polynomials, row-major, immutable."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise DimensionError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(entries)}"
            )
        if not all(isinstance(e, EpsPoly) for e in entries):
            raise TypeError("EpsMatrix entries must be EpsPoly")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, row_lists) -> "EpsMatrix":
        row_lists = [list(r) for r in row_lists]
        ncols = len(row_lists[0]) if row_lists else 0
        if any(len(r) != ncols for r in row_lists):
            raise DimensionError("ragged rows")
        return cls(len(row_lists), ncols, [x for r in row_lists for x in r])

    def at(self, i, j) -> EpsPoly:
        return self.entries[i * self.cols + j]

    def row_lists(self):
        c = self.cols
        return [list(self.entries[i * c : (i + 1) * c]) for i in range(self.rows)]

    def column_submatrix(self, cols) -> "EpsMatrix":
        cols = list(cols)
        return EpsMatrix(
            self.rows, len(cols), [self.at(i, j) for i in range(self.rows) for j in cols]
        )

    def is_constant(self) -> bool:
        return all(e.is_constant() for e in self.entries)

    def to_rat(self) -> RatMatrix:
        return RatMatrix(self.rows, self.cols, [e.constant_value() for e in self.entries])

    def __eq__(self, other):
        return (
            isinstance(other, EpsMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"EpsMatrix({self.rows}x{self.cols}, {[[str(e) for e in r] for r in self.row_lists()]})"


# ---------------------------------------------------------------------------
# elimination kernels on plain row lists


def _rank_rows(rows) -> int:
    """Rank of a list of rows, division-free cross-multiplication.

    Entries may be rationals or EpsPoly (any ring elements supporting
    *, - and truth testing); scaling a row by a nonzero ring element
    never changes the rank.
    """
    a = [list(r) for r in rows]
    if not a or not a[0]:
        return 0
    m, n = len(a), len(a[0])
    pr = 0
    for c in range(n):
        piv = next((i for i in range(pr, m) if a[i][c]), None)
        if piv is None:
            continue
        a[pr], a[piv] = a[piv], a[pr]
        pk = a[pr][c]
        for i in range(pr + 1, m):
            f = a[i][c]
            if f:
                ai, ap = a[i], a[pr]
                a[i] = [pk * ai[j] - f * ap[j] for j in range(n)]
        pr += 1
        if pr == m:
            break
    return pr


def _det_rows_number(rows):
    """Exact determinant of square rational rows via Bareiss."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    if all(isinstance(x, int) for r in a for x in r):
        div = lambda x, d: x // d
    else:
        a = [[Fraction(x) for x in r] for r in a]
        div = lambda x, d: x / d
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        pk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            ai, ak = a[i], a[k]
            for j in range(k + 1, n):
                ai[j] = div(pk * ai[j] - aik * ak[j], prev)
            ai[k] = 0
        prev = pk
    return sign * a[n - 1][n - 1]


def _det_sign_rows_eps(rows) -> int:
    """Sign (as eps -> 0+) of the determinant of square EpsPoly rows."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = EpsPoly.const(1)
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        pk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            ai, ak = a[i], a[k]
            for j in range(k + 1, n):
                ai[j] = (pk * ai[j] - aik * ak[j]).exact_div(prev)
            ai[k] = _EPS_ZERO
        prev = pk
    return sign * a[n - 1][n - 1].sign_eps()


# ---------------------------------------------------------------------------
# public operations


def det_sign_eps(m: EpsMatrix) -> int:
    """Sign of det(m) in the limit eps -> 0+.

    Returns the sign of the lowest-degree nonzero coefficient of the
    determinant as a polynomial in eps; 0 iff the determinant vanishes
    identically.
    """
    if m.rows != m.cols:
        raise DimensionError(f"determinant of a {m.rows}x{m.cols} matrix")
    return _det_sign_rows_eps(m.row_lists())


def det_rat(m: RatMatrix):
    """Exact rational determinant."""
    if m.rows != m.cols:
        raise DimensionError(f"determinant of a {m.rows}x{m.cols} matrix")
    return _det_rows_number(m.row_lists())


def rank_rat(m: RatMatrix) -> int:
    """Rank over the rationals."""
    return _rank_rows(m.row_lists())


def rank_eps(m: EpsMatrix) -> int:
    """Rank over the field of rational functions in eps."""
    return _rank_rows(m.row_lists())


def standard_form(m: RatMatrix, basis=None):
    """Column permutation and C-block of the realization (I_r | C).

    Returns ``(perm, C)`` where ``perm`` lists the original column of
    each permuted position (basis columns first) and row-reducing
    ``m[:, perm]`` yields ``(I_r | C)``.  When ``basis`` is omitted the
    lexicographically smallest column basis is used; a supplied basis
    is kept in the order given.
    """
    r = rank_rat(m)
    if basis is None:
        chosen = []
        for j in range(m.cols):
            if rank_rat(m.column_submatrix(chosen + [j])) > len(chosen):
                chosen.append(j)
                if len(chosen) == r:
                    break
        basis = chosen
    else:
        basis = list(basis)
        if len(set(basis)) != len(basis) or any(
            not (0 <= j < m.cols) for j in basis
        ):
            raise InvalidBasisError(f"basis {basis} is not a set of valid column indices")
        if len(basis) != r:
            raise InvalidBasisError(
                f"basis {basis} has size {len(basis)}, matroid rank is {r}"
            )
        if rank_rat(m.column_submatrix(basis)) != r:
            raise InvalidBasisError(f"columns {basis} are dependent")
    rest = [j for j in range(m.cols) if j not in set(basis)]
    perm = tuple(basis) + tuple(rest)

    rows = [[Fraction(x) for x in row] for row in m.row_lists()]
    pivot_rows = []
    used = set()
    for col in basis:
        pr = next(i for i in range(len(rows)) if i not in used and rows[i][col])
        pk = rows[pr][col]
        rows[pr] = [x / pk for x in rows[pr]]
        for i in range(len(rows)):
            if i != pr and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[pr])]
        pivot_rows.append(pr)
        used.add(pr)
    c_block = RatMatrix(
        r, len(rest), [rows[pr][j] for pr in pivot_rows for j in rest]
    )
    return perm, c_block
