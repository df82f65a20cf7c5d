"""Oriented-matroid combinatorics from an exact realization.

A realized oriented matroid is a full-row-rank matrix over the
rationals (possibly carrying eps-infinitesimal entries); its chirotope
is read off as the determinant signs of column r-tuples.  From the
chirotope we enumerate signed cocircuits, build the nonnegative face
lattice ordered by support inclusion, and compute Moebius values from
the bottom element.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import (
    ContractViolation,
    DimensionError,
    InvalidPosetError,
    NotARealizationError,
)
from .ratlin import (
    EpsMatrix,
    RatMatrix,
    _det_rows_number,
    _rank_rows,
    det_sign_eps,
    standard_form,
)


class SignVector:
    """A {+1, 0, -1} assignment on a ground set, immutable."""

    __slots__ = ("signs", "_support")

    def __init__(self, signs):
        signs = tuple(signs)
        if any(s not in (-1, 0, 1) for s in signs):
            raise ValueError("sign entries must be -1, 0 or +1")
        self.signs = signs
        self._support = None

    @classmethod
    def zero(cls, size) -> "SignVector":
        return cls((0,) * size)

    @classmethod
    def from_support(cls, size, support, sign=1) -> "SignVector":
        return cls(tuple(sign if i in support else 0 for i in range(size)))

    @property
    def size(self) -> int:
        return len(self.signs)

    @property
    def support(self) -> frozenset:
        if self._support is None:
            self._support = frozenset(i for i, s in enumerate(self.signs) if s)
        return self._support

    def compose(self, other: "SignVector") -> "SignVector":
        if len(self.signs) != len(other.signs):
            raise DimensionError("composition of sign vectors of different sizes")
        return SignVector(
            tuple(a if a else b for a, b in zip(self.signs, other.signs))
        )

    def restrict(self, positions) -> "SignVector":
        return SignVector(tuple(self.signs[i] for i in positions))

    def is_nonnegative(self) -> bool:
        return all(s >= 0 for s in self.signs)

    def __neg__(self):
        return SignVector(tuple(-s for s in self.signs))

    def __eq__(self, other):
        return isinstance(other, SignVector) and self.signs == other.signs

    def __hash__(self):
        return hash(self.signs)

    def __str__(self):
        return "".join("+" if s > 0 else "-" if s < 0 else "0" for s in self.signs)

    def __repr__(self):
        return f"SignVector({self})"


def compose(x: SignVector, y: SignVector) -> SignVector:
    """Composition x o y: x's sign where nonzero, else y's."""
    return x.compose(y)


class Chirotope:
    """Alternating sign map on ordered r-tuples of ground elements.

    Stored on sorted tuples; ``__call__`` handles arbitrary orderings
    via permutation parity.  Normalized so the lexicographically first
    basis maps to +1.
    """

    __slots__ = ("ground_size", "rank", "signs")

    def __init__(self, ground_size, rank, signs):
        self.ground_size = ground_size
        self.rank = rank
        self.signs = dict(signs)

    def __call__(self, elems) -> int:
        elems = tuple(elems)
        if len(elems) != self.rank:
            raise DimensionError(f"chirotope expects {self.rank}-tuples")
        if len(set(elems)) != len(elems):
            return 0
        order = sorted(elems)
        parity = 1
        work = list(elems)
        for i in range(len(work)):  # selection-sort parity, tuples are tiny
            j = work.index(order[i], i)
            if j != i:
                work[i], work[j] = work[j], work[i]
                parity = -parity
        return parity * self.signs[tuple(order)]

    def bases(self):
        return tuple(t for t in sorted(self.signs) if self.signs[t])

    def __eq__(self, other):
        return (
            isinstance(other, Chirotope)
            and self.ground_size == other.ground_size
            and self.rank == other.rank
            and self.signs == other.signs
        )

    def __repr__(self):
        return f"Chirotope(n={self.ground_size}, r={self.rank})"


class FaceLattice:
    """Nonnegative covectors ordered by support inclusion.

    ``elements`` always contains the zero vector (the bottom, rank 0,
    Moebius value 1); ``rank_of`` and ``mobius`` map each element to its
    lattice rank and its Moebius value from the bottom.
    """

    __slots__ = ("elements", "rank_of", "mobius", "_index")

    def __init__(self, elements, rank_of, mobius):
        self.elements = tuple(elements)
        self.rank_of = dict(rank_of)
        self.mobius = dict(mobius)
        self._index = frozenset(x.signs for x in self.elements)

    @property
    def bottom(self) -> SignVector:
        return self.elements[0]

    def __contains__(self, x):
        return isinstance(x, SignVector) and x.signs in self._index

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"FaceLattice({len(self.elements)} covectors)"


# ---------------------------------------------------------------------------
# chirotope extraction


def _split_structure(m: EpsMatrix):
    """Detect a two-block row structure that lets determinants factor.

    Rows split into degree-0 rows and monomial rows whose entry degrees
    depend only on the column; then every maximal minor is a sum of
    products of two rational minors times a power of eps.  Returns
    (const_rows, mono_rows, mono_positions, col_degrees) or None.
    """
    const_rows, mono_rows, mono_pos = [], [], []
    col_deg = [None] * m.cols
    for i, row in enumerate(m.row_lists()):
        if any(len(e.terms) > 1 for e in row):
            return None
        if all(e.max_degree() == 0 for e in row):
            const_rows.append([e.constant_value() if e else 0 for e in row])
            continue
        coeffs = []
        for j, e in enumerate(row):
            if e:
                d, c = e.terms[0]
                if col_deg[j] is None:
                    col_deg[j] = d
                elif col_deg[j] != d:
                    return None
                coeffs.append(c)
            else:
                coeffs.append(0)
        mono_rows.append(coeffs)
        mono_pos.append(i)
    return const_rows, mono_rows, mono_pos, [d or 0 for d in col_deg]


def _chirotope_signs_split(m: EpsMatrix, split):
    """All maximal-minor signs via block Laplace expansion with memoized
    rational minors."""
    const_rows, mono_rows, mono_pos, col_deg = split
    r, n = m.rows, m.cols
    nb = len(mono_rows)
    base_parity = -1 if sum(p + 1 for p in mono_pos) % 2 else 1
    top_memo, bot_memo = {}, {}

    def top_det(cols):
        d = top_memo.get(cols)
        if d is None:
            d = _det_rows_number([[row[j] for j in cols] for row in const_rows])
            top_memo[cols] = d
        return d

    def bot_det(cols):
        d = bot_memo.get(cols)
        if d is None:
            d = _det_rows_number([[row[j] for j in cols] for row in mono_rows])
            bot_memo[cols] = d
        return d

    signs = {}
    positions = list(range(r))
    for sub in itertools.combinations(range(n), r):
        acc = {}
        for tpos in itertools.combinations(positions, nb):
            tcols = tuple(sub[p] for p in tpos)
            db = bot_det(tcols)
            if not db:
                continue
            ucols = tuple(sub[p] for p in positions if p not in tpos)
            dt = top_det(ucols)
            if not dt:
                continue
            deg = sum(col_deg[j] for j in tcols)
            par = base_parity if sum(p + 1 for p in tpos) % 2 == 0 else -base_parity
            acc[deg] = acc.get(deg, 0) + par * db * dt
        val = 0
        for deg in sorted(acc):
            if acc[deg]:
                val = 1 if acc[deg] > 0 else -1
                break
        signs[sub] = val
    return signs


def chirotope_from_matrix(m: EpsMatrix) -> Chirotope:
    """Chirotope of the column oriented matroid of a full-row-rank matrix.

    Globally negated if needed so the lexicographically first basis is +1.
    """
    r, n = m.rows, m.cols
    if r > n:
        raise NotARealizationError(f"{r} rows cannot be independent among {n} columns")
    split = _split_structure(m)
    if split is not None:
        signs = _chirotope_signs_split(m, split)
    else:
        signs = {
            sub: det_sign_eps(m.column_submatrix(sub))
            for sub in itertools.combinations(range(n), r)
        }
    flip = 0
    for sub in sorted(signs):
        if signs[sub]:
            flip = signs[sub]
            break
    if flip == 0 and r > 0:
        raise NotARealizationError("matrix does not have full row rank")
    if flip < 0:
        signs = {t: -s for t, s in signs.items()}
    return Chirotope(n, r, signs)


class RealizedOM:
    """An oriented matroid given by a full-row-rank exact realization."""

    __slots__ = ("matrix", "chirotope", "labels", "_cocircuits", "_lattice")

    def __init__(self, matrix: EpsMatrix, labels=None):
        self.matrix = matrix
        self.chirotope = chirotope_from_matrix(matrix)
        if labels is None:
            labels = tuple(range(matrix.cols))
        else:
            labels = tuple(labels)
            if len(labels) != matrix.cols:
                raise DimensionError("one label per ground element required")
        self.labels = labels
        self._cocircuits = None
        self._lattice = None

    @classmethod
    def from_rational(cls, m: RatMatrix, labels=None) -> "RealizedOM":
        return cls(m.to_eps(), labels)

    @property
    def ground_size(self) -> int:
        return self.matrix.cols

    @property
    def rank(self) -> int:
        return self.matrix.rows

    def is_rational(self) -> bool:
        return self.matrix.is_constant()

    def rat_matrix(self) -> RatMatrix:
        if not self.is_rational():
            raise ContractViolation("realization carries eps-infinitesimal entries")
        return self.matrix.to_rat()

    def is_standard_form(self) -> bool:
        if not self.is_rational() or self.rank > self.ground_size:
            return False
        m = self.matrix
        return all(
            m.at(i, j).constant_value() == (1 if i == j else 0)
            for i in range(self.rank)
            for j in range(self.rank)
        )

    def column_rank(self, cols) -> int:
        """Rank of the column submatrix on ``cols``."""
        cols = sorted(cols)
        if not cols:
            return 0
        rows = self.matrix.column_submatrix(cols).row_lists()
        upper = min(len(cols), self.rank)
        # Rank at a sample eps certifies the symbolic rank when it
        # meets the upper bound; otherwise fall back to symbolic rows.
        sample = Fraction(1, 2)
        approx = _rank_rows([[e.eval_at(sample) for e in row] for row in rows])
        if approx == upper:
            return upper
        return _rank_rows(rows)

    def bases(self):
        return self.chirotope.bases()

    def __repr__(self):
        return f"RealizedOM(n={self.ground_size}, r={self.rank})"


# ---------------------------------------------------------------------------
# cocircuits and the nonnegative face lattice


def cocircuits(om: RealizedOM):
    """All signed cocircuits of ``om``, closed under negation.

    One canonical representative per hyperplane is anchored with its
    least support element positive; the tuple is sorted for
    deterministic output.
    """
    if om._cocircuits is not None:
        return om._cocircuits
    chi = om.chirotope
    n, r = chi.ground_size, chi.rank
    loops = {
        j
        for j in range(n)
        if all(not om.matrix.at(i, j) for i in range(om.rank))
    }
    seen = {}
    if r > 0:
        for sub in itertools.combinations(range(n), r - 1):
            rest = [e for e in range(n) if e not in sub]
            support = [e for e in rest if chi.signs[tuple(sorted(sub + (e,)))]]
            if not support:
                continue  # sub is dependent
            key = frozenset(support)
            if key in seen:
                continue
            anchor = support[0]
            s_anchor = chi((anchor,) + sub)
            signs = [0] * n
            for e in support:
                signs[e] = s_anchor * chi((e,) + sub)
            assert all(e not in loops for e in support)
            seen[key] = SignVector(tuple(signs))
    out = []
    for d in seen.values():
        out.append(d)
        out.append(-d)
    out.sort(key=lambda d: (sorted(d.support), d.signs))
    om._cocircuits = tuple(out)
    return om._cocircuits


def mobius_from_bottom(members) -> dict:
    """Moebius values mu(bottom, X) on a family of sets ordered by inclusion.

    ``members`` is an iterable of frozensets with a unique minimal
    element (the bottom).  mu(bottom) = 1 and mu(X) = -sum of mu over
    all strictly smaller members.
    """
    members = [frozenset(s) for s in members]
    if len(set(members)) != len(members):
        raise InvalidPosetError("duplicate poset elements")
    if not members:
        raise InvalidPosetError("empty poset")
    universe = sorted(set().union(*members))
    bit = {e: 1 << i for i, e in enumerate(universe)}
    masks = []
    for s in members:
        m = 0
        for e in s:
            m |= bit[e]
        masks.append((m, s))
    masks.sort(key=lambda t: (bin(t[0]).count("1"), t[0]))
    mu_by_mask = {}
    mobius = {}
    bottom_seen = False
    for m, s in masks:
        total = 0
        found_smaller = False
        sub = (m - 1) & m
        while True:
            if sub in mu_by_mask:
                total += mu_by_mask[sub]
                found_smaller = True
            if sub == 0:
                break
            sub = (sub - 1) & m
        if not found_smaller:
            if bottom_seen:
                raise InvalidPosetError("poset has more than one minimal element")
            bottom_seen = True
            value = 1
        else:
            value = -total
        mu_by_mask[m] = value
        mobius[s] = value
    return mobius


def nonneg_face_lattice(om: RealizedOM) -> FaceLattice:
    """The lattice of nonnegative covectors of ``om``.

    Nonnegative covectors are exactly the compositions of nonnegative
    cocircuits, i.e. the unions of their supports; lattice rank comes
    from rank(om) - rank of the columns off the support.
    """
    if om._lattice is not None:
        return om._lattice
    n = om.ground_size
    gens = [d.support for d in cocircuits(om) if d.is_nonnegative()]
    supports = {frozenset()}
    for g in gens:
        supports |= {s | g for s in supports}
    full_rank = om.rank
    elements = []
    rank_of = {}
    for s in sorted(supports, key=lambda s: (len(s), sorted(s))):
        x = SignVector.from_support(n, s)
        elements.append(x)
        rank_of[x] = full_rank - om.column_rank(set(range(n)) - s)
    mob = mobius_from_bottom(supports)
    mobius = {x: mob[x.support] for x in elements}
    om._lattice = FaceLattice(elements, rank_of, mobius)
    return om._lattice


# ---------------------------------------------------------------------------
# duality and standard form


def dual_realization(om: RealizedOM) -> RealizedOM:
    """The dual oriented matroid of a standard-form realization.

    For om realized by (I_r | C) the dual is realized by
    (-C^T | I_{n-r}) on the same ground labels.
    """
    if not om.is_standard_form():
        raise ContractViolation("dual_realization requires a standard-form realization")
    r, n = om.rank, om.ground_size
    m = om.rat_matrix()
    rows = []
    for i in range(n - r):
        row = [-m.at(j, r + i) for j in range(r)]
        row += [1 if k == i else 0 for k in range(n - r)]
        rows.append(row)
    dual_matrix = RatMatrix(n - r, n, [x for row in rows for x in row])
    return RealizedOM.from_rational(dual_matrix, om.labels)


def standardize(om: RealizedOM, basis=None):
    """Reorder and row-reduce ``om`` into standard form (I_r | C).

    Returns ``(std_om, perm)``; ``perm[i]`` is the original column at
    permuted position i, and ``std_om.labels`` carries the original
    labels along.
    """
    m = om.rat_matrix()
    perm, c_block = standard_form(m, basis)
    r = c_block.rows
    rows = []
    for i in range(r):
        row = [1 if j == i else 0 for j in range(r)]
        row += [c_block.at(i, j) for j in range(c_block.cols)]
        rows.append(row)
    std_matrix = RatMatrix(r, m.cols, [x for row in rows for x in row])
    labels = tuple(om.labels[p] for p in perm)
    return RealizedOM.from_rational(std_matrix, labels), perm
