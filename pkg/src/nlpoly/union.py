"""The union supermatroid and its lifting/restriction maps.

Given M in standard form (I_r | C) on n elements, the supermatroid
lives on 2n elements: E (the original ground), A (one partner per
basis element) and B (one partner per cobasis element).  It is realized
by stacking (I_r | C | I_r | 0) on top of (-C^T | I_{n-r} | 0 | I_{n-r})
with column i of the bottom block scaled by eps^(2n-i); deleting A and
contracting B recovers M, while contracting A and deleting B recovers
the dual.  Nonnegative covectors of M and of the dual lift into the
supermatroid's face lattice and restrict back out of it.
"""

from __future__ import annotations

from .errors import ContractViolation, DimensionError
from .om import RealizedOM, SignVector, dual_realization, nonneg_face_lattice
from .ratlin import EpsMatrix, EpsPoly, _rank_rows

PRIMAL = "primal"
DUAL = "dual"
NEITHER = "neither"


class HatMatroid:
    """M, its union supermatroid, and the element bookkeeping between them."""

    __slots__ = ("base", "hat", "e1", "e2", "a_elems", "b_elems", "partner", "_dual")

    def __init__(self, base, hat, e1, e2, a_elems, b_elems, partner):
        self.base = base
        self.hat = hat
        self.e1 = e1
        self.e2 = e2
        self.a_elems = a_elems
        self.b_elems = b_elems
        self.partner = partner
        self._dual = None

    @property
    def n(self) -> int:
        return self.base.ground_size

    @property
    def r(self) -> int:
        return self.base.rank

    @property
    def base_dual(self) -> RealizedOM:
        if self._dual is None:
            self._dual = dual_realization(self.base)
        return self._dual

    def __repr__(self):
        return f"HatMatroid(n={self.n}, r={self.r})"


def build_hat(om: RealizedOM) -> HatMatroid:
    """Construct the union supermatroid of a standard-form realization."""
    if not om.is_standard_form():
        raise ContractViolation("build_hat requires a standard-form realization (I_r | C)")
    r, n = om.rank, om.ground_size
    m = om.rat_matrix()
    rows = []
    for i in range(r):
        row = [EpsPoly.const(m.at(i, j)) for j in range(n)]
        row += [EpsPoly.const(1 if j == i else 0) for j in range(r)]
        row += [EpsPoly()] * (n - r)
        rows.append(row)
    for i in range(n - r):
        coeffs = [-m.at(j, r + i) for j in range(r)]
        coeffs += [1 if k == i else 0 for k in range(n - r)]
        coeffs += [0] * r
        coeffs += [1 if k == i else 0 for k in range(n - r)]
        rows.append([EpsPoly.mono(c, 2 * n - 1 - j) for j, c in enumerate(coeffs)])
    hat_matrix = EpsMatrix.from_rows(rows) if rows else EpsMatrix(0, 0, [])
    hat = RealizedOM(hat_matrix, labels=tuple(range(2 * n)))
    partner = {}
    for i in range(r):
        partner[n + i] = i
        partner[i] = n + i
    for i in range(n - r):
        partner[n + r + i] = r + i
        partner[r + i] = n + r + i
    return HatMatroid(
        base=om,
        hat=hat,
        e1=tuple(range(r)),
        e2=tuple(range(r, n)),
        a_elems=tuple(range(n, n + r)),
        b_elems=tuple(range(n + r, 2 * n)),
        partner=partner,
    )


def minor(om: RealizedOM, delete=(), contract=()) -> RealizedOM:
    """Delete and contract ground elements of a realized oriented matroid.

    Contracting a non-loop pivots its column to a unit vector (lowest
    nonzero row) and removes that row and column; contracting a loop,
    or deleting any element, just removes the column.  No further
    elements are removed, so loops and parallels may appear.  The
    result is re-reduced to a full-row-rank realization.
    """
    delete = set(delete)
    contract = set(contract)
    if delete & contract:
        raise DimensionError("delete and contract sets must be disjoint")
    n = om.ground_size
    if any(not (0 <= e < n) for e in delete | contract):
        raise DimensionError("element position out of range")
    rows = om.matrix.row_lists()
    live = list(range(n))
    for cid in sorted(contract):
        j = live.index(cid)
        piv = next((i for i in range(len(rows)) if rows[i][j]), None)
        if piv is None:
            # loop: contraction = deletion of the column
            live.pop(j)
            rows = [row[:j] + row[j + 1 :] for row in rows]
            continue
        p = rows[piv][j]
        for i in range(len(rows)):
            if i != piv and rows[i][j]:
                f = rows[i][j]
                rows[i] = [p * a - f * b for a, b in zip(rows[i], rows[piv])]
        rows.pop(piv)
        live.pop(j)
        rows = [row[:j] + row[j + 1 :] for row in rows]
    if delete:
        keep = [k for k, cid in enumerate(live) if cid not in delete]
        live = [live[k] for k in keep]
        rows = [[row[k] for k in keep] for row in rows]
    kept_rows = []
    for row in rows:
        if _rank_rows(kept_rows + [row]) > len(kept_rows):
            kept_rows.append(row)
    matrix = EpsMatrix(len(kept_rows), len(live), [x for row in kept_rows for x in row])
    return RealizedOM(matrix, labels=tuple(om.labels[cid] for cid in live))


def lift_primal(x: SignVector, h: HatMatroid) -> SignVector:
    """Lift a nonnegative covector of the base matroid into the supermatroid.

    The lift keeps the support on E and adds the A-partners of the
    supported basis elements, all with positive sign.
    """
    if x.size != h.n:
        raise DimensionError("covector size does not match the base ground set")
    if x not in nonneg_face_lattice(h.base):
        raise ContractViolation("not a nonnegative covector of the base matroid")
    signs = list(x.signs) + [0] * h.n
    for e in x.support:
        if e < h.r:
            signs[h.partner[e]] = 1
    return SignVector(tuple(signs))


def lift_dual(x: SignVector, h: HatMatroid) -> SignVector:
    """Lift a nonnegative covector of the dual matroid into the supermatroid.

    Dual to ``lift_primal``: adds the B-partners of the supported
    cobasis elements.
    """
    if x.size != h.n:
        raise DimensionError("covector size does not match the dual ground set")
    if x not in nonneg_face_lattice(h.base_dual):
        raise ContractViolation("not a nonnegative covector of the dual matroid")
    signs = list(x.signs) + [0] * h.n
    for e in x.support:
        if e >= h.r:
            signs[h.partner[e]] = 1
    return SignVector(tuple(signs))


def restrict(xhat: SignVector, h: HatMatroid):
    """Restrict a nonnegative supermatroid covector back to the ground set E.

    Returns ``(side, x)``: ``(PRIMAL, x)`` when the support avoids B
    (x is then a nonnegative covector of the base; the zero covector
    reports PRIMAL by convention), ``(DUAL, x)`` when it avoids A only,
    and ``(NEITHER, None)`` when it meets both A and B.
    """
    if xhat.size != 2 * h.n:
        raise DimensionError("covector size does not match the supermatroid ground set")
    if not xhat.is_nonnegative():
        raise ContractViolation("restrict expects a nonnegative covector")
    meets_a = any(e in xhat.support for e in h.a_elems)
    meets_b = any(e in xhat.support for e in h.b_elems)
    if meets_a and meets_b:
        return NEITHER, None
    x = SignVector(xhat.signs[: h.n])
    if meets_b:
        return DUAL, x
    return PRIMAL, x
