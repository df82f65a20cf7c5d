"""The union supermatroid: construction, minors, lifting and restriction."""

import itertools
import random

import pytest

from nlpoly.errors import ContractViolation, DimensionError
from nlpoly.om import (
    RealizedOM,
    SignVector,
    cocircuits,
    nonneg_face_lattice,
    standardize,
)
from nlpoly.ratlin import EpsPoly, RatMatrix, det_sign_eps
from nlpoly.union import (
    DUAL,
    NEITHER,
    PRIMAL,
    build_hat,
    lift_dual,
    lift_primal,
    minor,
    restrict,
)
from suite import random_rat_matrix

COLOOP = RealizedOM.from_rational(RatMatrix(1, 1, [1]))
DIGON = RealizedOM.from_rational(RatMatrix(1, 2, [1, -1]))


def test_build_hat_coloop():
    h = build_hat(COLOOP)
    assert h.n == 1 and h.r == 1
    assert h.a_elems == (1,) and h.b_elems == ()
    m = h.hat.matrix
    assert (m.rows, m.cols) == (1, 2)
    assert m.at(0, 0) == EpsPoly.const(1) and m.at(0, 1) == EpsPoly.const(1)
    assert h.hat.chirotope.signs == {(0,): 1, (1,): 1}


def test_build_hat_digon_matrix_is_exact():
    h = build_hat(DIGON)
    m = h.hat.matrix
    assert (m.rows, m.cols) == (2, 4)
    assert [m.at(0, j) for j in range(4)] == [
        EpsPoly.const(1),
        EpsPoly.const(-1),
        EpsPoly.const(1),
        EpsPoly(),
    ]
    # bottom block (-C^T | I | 0 | I) with column i scaled by eps^(2n-i)
    assert [m.at(1, j) for j in range(4)] == [
        EpsPoly.mono(1, 3),
        EpsPoly.mono(1, 2),
        EpsPoly(),
        EpsPoly.mono(1, 0),
    ]
    assert h.partner == {2: 0, 0: 2, 3: 1, 1: 3}


def test_build_hat_empty():
    empty = RealizedOM.from_rational(RatMatrix(0, 0, []))
    h = build_hat(empty)
    assert h.hat.ground_size == 0 and h.hat.rank == 0


def test_build_hat_requires_standard_form():
    with pytest.raises(ContractViolation):
        build_hat(RealizedOM.from_rational(RatMatrix(1, 2, [-1, 1])))


def test_hat_chirotope_matches_per_tuple_determinants():
    rng = random.Random(61)
    cases = [COLOOP, DIGON]
    std, _ = standardize(
        RealizedOM.from_rational(RatMatrix.from_rows([[1, 0, -1], [-1, 1, 0]]))
    )
    cases.append(std)
    for om in cases:
        h = build_hat(om)
        chi = h.hat.chirotope
        m = h.hat.matrix
        for sub in itertools.combinations(range(m.cols), m.rows):
            assert chi.signs[sub] in (-1, 0, 1)
            direct = det_sign_eps(m.column_submatrix(sub))
            # both sides are normalized consistently: the first nonzero
            # lexicographic tuple fixes the global sign
            first = next(s for s in sorted(chi.signs) if chi.signs[s])
            flip = chi.signs[first] * det_sign_eps(m.column_submatrix(first))
            assert chi.signs[sub] == flip * direct


def test_hat_rank_doubles_ground():
    rng = random.Random(67)
    for _ in range(8):
        r = rng.randint(1, 3)
        n = rng.randint(r, 5)
        m = random_rat_matrix(rng, r, n)
        try:
            om = RealizedOM.from_rational(m)
        except Exception:
            continue
        std, _ = standardize(om)
        h = build_hat(std)
        assert h.hat.ground_size == 2 * n
        assert h.hat.rank == n


# ---------------------------------------------------------------------------
# minors


def test_minor_identity():
    back = minor(DIGON, (), ())
    assert back.chirotope == DIGON.chirotope
    assert back.labels == DIGON.labels


def test_minor_validation():
    with pytest.raises(DimensionError):
        minor(DIGON, (0,), (0,))
    with pytest.raises(DimensionError):
        minor(DIGON, (5,), ())


def test_minor_recovers_coloop_from_hat():
    h = build_hat(COLOOP)
    back = minor(h.hat, delete=h.a_elems, contract=h.b_elems)
    assert back.chirotope == COLOOP.chirotope


def test_minor_recovers_digon_and_its_dual_from_hat():
    h = build_hat(DIGON)
    back = minor(h.hat, delete=h.a_elems, contract=h.b_elems)
    assert back.chirotope == DIGON.chirotope
    dual_back = minor(h.hat, delete=h.b_elems, contract=h.a_elems)
    # the dual of the digon matroid is the two-element parallel class
    parallel = RealizedOM.from_rational(RatMatrix(1, 2, [1, 1]))
    assert dual_back.chirotope == parallel.chirotope


def test_minor_contract_loop_only_drops_column():
    with_loop = RealizedOM.from_rational(RatMatrix(1, 2, [1, 0]))
    out = minor(with_loop, (), (1,))
    assert out.ground_size == 1 and out.rank == 1


def test_minor_relabels_and_reranks():
    m = RealizedOM.from_rational(
        RatMatrix.from_rows([[1, 0, 1], [0, 1, 1]]), labels=("a", "b", "c")
    )
    out = minor(m, delete=(1,), contract=(0,))
    assert out.labels == ("c",)
    assert out.rank == 1


def test_minor_recovery_on_random_matroids_all_bases():
    rng = random.Random(71)
    done = 0
    while done < 6:
        r = rng.randint(1, 2)
        n = rng.randint(r, 4)
        m = random_rat_matrix(rng, r, n)
        try:
            om = RealizedOM.from_rational(m)
        except Exception:
            continue
        done += 1
        for basis in om.bases():
            std, _ = standardize(om, list(basis))
            h = build_hat(std)
            back = minor(h.hat, delete=h.a_elems, contract=h.b_elems)
            assert back.chirotope == std.chirotope
            dual_back = minor(h.hat, delete=h.b_elems, contract=h.a_elems)
            assert dual_back.chirotope == h.base_dual.chirotope


# ---------------------------------------------------------------------------
# lifting and restriction


def test_lift_primal_coloop():
    h = build_hat(COLOOP)
    lifted = lift_primal(SignVector((1,)), h)
    assert lifted == SignVector((1, 1))
    assert lift_primal(SignVector((0,)), h) == SignVector((0, 0))


def test_lift_rejects_non_covectors():
    h = build_hat(DIGON)
    # the digon has no nonzero nonnegative covector
    with pytest.raises(ContractViolation):
        lift_primal(SignVector((1, 0)), h)
    with pytest.raises(ContractViolation):
        lift_dual(SignVector((1, 0)), h)


def test_lift_dual_digon():
    h = build_hat(DIGON)
    lifted = lift_dual(SignVector((1, 1)), h)
    assert lifted == SignVector((1, 1, 0, 1))


def test_restrict_sides():
    h = build_hat(DIGON)
    assert restrict(SignVector((0, 0, 0, 0)), h) == (PRIMAL, SignVector((0, 0)))
    side, x = restrict(SignVector((1, 1, 0, 1)), h)
    assert side == DUAL and x == SignVector((1, 1))
    side, x = restrict(SignVector((1, 0, 1, 1)), h)
    assert side == NEITHER and x is None
    with pytest.raises(ContractViolation):
        restrict(SignVector((1, -1, 0, 0)), h)


def test_restrict_of_coloop_lift():
    h = build_hat(COLOOP)
    side, x = restrict(SignVector((1, 1)), h)
    assert side == PRIMAL and x == SignVector((1,))


def test_round_trip_on_parallel_pair():
    par = RealizedOM.from_rational(RatMatrix(1, 2, [1, 1]))
    h = build_hat(par)
    for x in nonneg_face_lattice(par):
        if x.support:
            assert restrict(lift_primal(x, h), h) == (PRIMAL, x)
    for x in nonneg_face_lattice(h.base_dual):
        if x.support:
            assert restrict(lift_dual(x, h), h) == (DUAL, x)


def test_hat_lattice_rank_equals_longest_chain():
    # the algebraic lattice rank (matroid rank minus off-support column
    # rank) must agree with chain length even on eps-realized ground
    std, _ = standardize(
        RealizedOM.from_rational(RatMatrix.from_rows([[1, 0, -1], [-1, 1, 0]]))
    )
    for om in (COLOOP, DIGON, std):
        lattice = nonneg_face_lattice(build_hat(om).hat)
        supports = [x.support for x in lattice]
        chain = {}
        for s in sorted(supports, key=len):
            below = [chain[t] for t in supports if t < s and t in chain]
            chain[s] = 1 + max(below) if below else 0
        for x in lattice:
            assert lattice.rank_of[x] == chain[x.support]


def test_lifted_cocircuits_are_hat_cocircuits():
    rng = random.Random(73)
    done = 0
    while done < 6:
        r = rng.randint(1, 2)
        n = rng.randint(r, 4)
        m = random_rat_matrix(rng, r, n)
        try:
            om = RealizedOM.from_rational(m)
        except Exception:
            continue
        done += 1
        std, _ = standardize(om)
        h = build_hat(std)
        hat_cocs = set(cocircuits(h.hat))
        for d in cocircuits(std):
            if d.is_nonnegative():
                assert lift_primal(d, h) in hat_cocs
        for d in cocircuits(h.base_dual):
            if d.is_nonnegative():
                assert lift_dual(d, h) in hat_cocs
