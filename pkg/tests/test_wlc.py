import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from helpers import (
    LC5_BLOCK_HANKEL,
    WLC3_A,
    seq_lc7,
    seq_lc5,
    seq_wlc3,
    periodic_corpus,
    random_matrix_recurrence,
)
from wordlc.errors import InsufficientData, SingularConstantCoefficient, ZeroConstantTerm
from wordlc.linalg import rank
from wordlc.matpoly import MatrixPoly, Side, annihilates, euclid_divide, matpoly_det
from wordlc.oracle import independent_matrix_minpoly
from wordlc.poly import Poly, poly_divides, poly_order, x_pow_minus_one
from wordlc.sequence import VectorSequence
from wordlc.wlc import (
    block_hankel,
    companion_map_matrix,
    compute_wlc,
    local_inverse_from_matrix_minpoly,
    local_inverse_from_scalar_minpoly,
)


@pytest.fixture(scope="module")
def corpus():
    seqs = periodic_corpus(2024, 200)
    return [(v, compute_wlc(v)) for v in seqs]


def test_block_hankel_examples():
    v = VectorSequence([[1, 0], [0, 1]], 2)
    assert block_hankel(v, 1).tolist() == [[1, 0], [0, 1]]
    assert block_hankel(seq_lc5(), 3).tolist() == LC5_BLOCK_HANKEL
    assert rank(block_hankel(seq_wlc3(), 3), 2) == 6


def test_lc7_sequence():
    r = compute_wlc(seq_lc7())
    assert (r.lc, r.n, r.divisible, r.nontrivial) == (7, 3, False, False)
    assert r.matrix_minpoly == MatrixPoly.from_scalar(x_pow_minus_one(7, 2), 3)
    assert r.block_rank is None and r.wlc is None


def test_lc5_sequence():
    r = compute_wlc(seq_lc5())
    # the second component has even weight in every window, so LC is 5
    assert r.lc == 5 and r.scalar_minpoly == Poly.from_descending([1, 1, 1, 1, 1, 1], 2)
    assert not r.divisible and not r.nontrivial
    assert rank(block_hankel(seq_lc5(), 3), 2) == 5
    assert independent_matrix_minpoly(seq_lc5(), 3) is None


def test_wlc3_sequence():
    r = compute_wlc(seq_wlc3())
    assert (r.lc, r.wlc, r.nontrivial, r.block_rank) == (6, 3, True, 6)
    assert [a.tolist() for a in r.coefficient_blocks] == WLC3_A
    assert local_inverse_from_matrix_minpoly(seq_wlc3(), r.matrix_minpoly).tolist() == [0, 0]
    assert local_inverse_from_scalar_minpoly(seq_wlc3(), r.scalar_minpoly).tolist() == [0, 0]
    assert r.diagnostics == ()


def test_lc7_scalar_inverse():
    # V_{-1} = V_6 = (1, 1, 1); the cycle walk agrees
    x = local_inverse_from_scalar_minpoly(seq_lc7(), x_pow_minus_one(7, 2))
    assert x.tolist() == [1, 1, 1]


def test_constant_sequence():
    v = VectorSequence([[2, 1]] * 4, 3, 1)
    r = compute_wlc(v)
    assert r.lc == 1 and not r.divisible
    M = MatrixPoly([[[2, 0], [0, 2]], np.eye(2, dtype=int)], 3)  # X I - I
    assert local_inverse_from_matrix_minpoly(v, M).tolist() == [2, 1]
    assert local_inverse_from_scalar_minpoly(v, Poly([2, 1], 3)).tolist() == [2, 1]


def test_all_zero():
    r = compute_wlc(VectorSequence(np.zeros((4, 2)), 5, 4))
    assert r.lc == 0 and not r.nontrivial and r.scalar_minpoly == Poly.one(5)


def test_local_inverse_errors():
    v = VectorSequence([[1, 0], [0, 0], [0, 0]], 2)
    with pytest.raises(ZeroConstantTerm):
        local_inverse_from_scalar_minpoly(v, Poly([0, 0, 1], 2))
    M = MatrixPoly([[[1, 0], [0, 0]], np.eye(2, dtype=int)], 2)
    with pytest.raises(SingularConstantCoefficient):
        local_inverse_from_matrix_minpoly(v, M)


def test_partial_prefix_without_period():
    full = seq_wlc3()
    v = VectorSequence(full.window(13), 2)
    r = compute_wlc(v)
    assert r.nontrivial and [a.tolist() for a in r.coefficient_blocks] == WLC3_A
    with pytest.raises(InsufficientData):
        compute_wlc(VectorSequence(full.window(5), 2))


@pytest.mark.parametrize("p", [3, 5])
def test_sign_convention_against_cycle(p):
    rng = np.random.default_rng(p)
    hits = 0
    for _ in range(40):
        n = int(rng.integers(2, 4))
        v = random_matrix_recurrence(rng, p, n, 2, max_period=200)
        if v is None:
            continue
        r = compute_wlc(v)
        if not r.nontrivial:
            continue
        hits += 1
        M = r.matrix_minpoly
        assert annihilates(M, v)
        last = v.term(v.period - 1)
        assert np.array_equal(local_inverse_from_matrix_minpoly(v, M), last)
        # flipping the sign of A_0 breaks the recurrence
        flipped = [(-M.coeffs[0]) % p] + list(M.coeffs[1:])
        if M.coeffs[0].any():
            assert not annihilates(MatrixPoly(flipped, p), v)
    assert hits >= 5


def test_report_invariants(corpus):
    nontrivial = 0
    for v, r in corpus:
        assert r.wlc is None or r.wlc <= r.lc
        assert annihilates(r.matrix_minpoly, v)
        if not r.nontrivial:
            continue
        nontrivial += 1
        M, d, p, n = r.matrix_minpoly, r.wlc, v.p, v.n
        assert n * d == r.lc
        assert rank(M.coeffs[0], p) == n
        det = matpoly_det(M)
        assert poly_divides(det, r.scalar_minpoly**n)
        assert det.deg <= n * r.lc
        assert (v.period * n) % poly_order(det, v.period * n + 1) == 0
    assert nontrivial >= 40


def test_existence_criterion(corpus):
    # nontrivial  <=>  n | LC and the block Hankel at d = LC / n has full rank
    for v, r in corpus:
        if r.lc == 0:
            continue
        full = r.divisible and rank(block_hankel(v, r.lc // v.n), v.p) == r.lc
        assert r.nontrivial == full
        if r.nontrivial:
            assert r.wlc == r.lc // v.n


def test_xN_minus_1_divides_on_both_sides(corpus):
    for v, r in corpus:
        if not r.nontrivial:
            continue
        M = r.matrix_minpoly
        for f in (x_pow_minus_one(v.period, v.p), r.scalar_minpoly):
            P = MatrixPoly.from_scalar(f, v.n)
            for side in Side:
                assert euclid_divide(P, M, side)[1].is_zero()


def test_route_agreement_and_prefix(corpus):
    for v, r in corpus:
        if r.lc == 0:
            continue
        last = v.term(v.period - 1)
        xs = local_inverse_from_scalar_minpoly(v, r.scalar_minpoly)
        assert np.array_equal(xs, last)
        if r.nontrivial:
            xm = local_inverse_from_matrix_minpoly(v, r.matrix_minpoly)
            assert np.array_equal(xm, last)
            ext = VectorSequence(np.vstack([xm, v.window(v.period + r.wlc)]), v.p)
            assert annihilates(r.matrix_minpoly, ext)


def test_oracle_agreement():
    # the oracle tries every degree up to the bound, including d != LC / n
    for v in periodic_corpus(7, 150, max_period=64):
        r = compute_wlc(v)
        if r.lc == 0:
            continue
        o = independent_matrix_minpoly(v, r.lc)
        if r.nontrivial:
            assert o == r.matrix_minpoly
        else:
            assert o is None


def test_companion_map_generates_sequence():
    M = MatrixPoly.monic_from_blocks(WLC3_A, 2)
    T = companion_map_matrix(M)
    state = seq_wlc3().window(3).reshape(-1)
    seq = [state[:2]]
    for _ in range(11):
        state = T @ state % 2
        seq.append(state[:2])
    assert np.array_equal(np.array(seq), seq_wlc3().window(12))


@settings(max_examples=150, deadline=None)
@given(
    p=st.sampled_from([2, 3, 5]),
    n=st.integers(1, 4),
    d=st.integers(1, 3),
    seed=st.integers(0, 2**32 - 1),
)
def test_recurrence_sequences_recover_their_recurrence(p, n, d, seed):
    v = random_matrix_recurrence(np.random.default_rng(seed), p, n, d, max_period=128)
    if v is None:
        return
    r = compute_wlc(v)
    assert annihilates(r.matrix_minpoly, v)
    assert r.wlc is None or r.wlc <= r.lc
    if r.nontrivial:
        # any unique degree-d' recurrence has n d' = LC, so d' <= d
        assert r.wlc <= d and n * r.wlc == r.lc
        assert np.array_equal(local_inverse_from_matrix_minpoly(v, r.matrix_minpoly), v.term(v.period - 1))
