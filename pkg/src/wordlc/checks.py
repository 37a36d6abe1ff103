"""Structural checks on a periodic sequence and its minimal polynomials.

``run_checks`` returns one :class:`Check` per property; matrix-polynomial
properties are skipped (with the reason) when no nontrivial M(X) exists.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import InsufficientData, OrderExceedsBound, WordLCError
from .linalg import rank
from .matpoly import MatrixPoly, Side, annihilates, euclid_divide, matpoly_det
from .oracle import independent_matrix_minpoly
from .poly import component_minpoly_lcm, poly_divides, poly_order, recurrence_holds, x_pow_minus_one
from .sequence import VectorSequence
from .wlc import compute_wlc, local_inverse_from_matrix_minpoly, local_inverse_from_scalar_minpoly

PASS, FAIL, SKIP = "pass", "fail", "skip"


class Check(NamedTuple):
    name: str
    status: str
    detail: str = ""


def _flag(ok: bool) -> str:
    return PASS if ok else FAIL


def run_checks(v: VectorSequence) -> list[Check]:
    if v.period is None:
        raise InsufficientData("checks need a sequence with a known period")
    p, n, N = v.p, v.n, v.period
    out = [Check("period_consistent", _flag(v.is_consistent()))]
    try:
        report = compute_wlc(v)
    except WordLCError as exc:
        out.append(Check("analysis", FAIL, str(exc)))
        return out
    m, lc = report.scalar_minpoly, report.lc
    full = v.window(N + lc)
    last = v.term(N - 1)

    out.append(Check("hankel_equals_bm_lcm", _flag(component_minpoly_lcm(v) == m)))
    out.append(Check("scalar_annihilates", _flag(recurrence_holds(m, full, p))))
    out.append(Check("scalar_divides_xN_minus_1", _flag(poly_divides(m, x_pow_minus_one(N, p)))))
    out.append(Check("lc_le_period", _flag(lc <= N)))
    if lc == N:
        out.append(Check("lc_eq_period_gives_xN_minus_1", _flag(m == x_pow_minus_one(N, p))))
    if lc >= 1:
        try:
            x_s = local_inverse_from_scalar_minpoly(v, m)
            out.append(Check("scalar_inverse_is_last_term", _flag(np.array_equal(x_s, last))))
        except WordLCError as exc:
            out.append(Check("scalar_inverse_is_last_term", FAIL, str(exc)))

    oracle = independent_matrix_minpoly(v, max(1, -(-lc // n)))
    agree = (oracle is None and not report.nontrivial) or (
        oracle is not None and report.nontrivial and oracle == report.matrix_minpoly
    )
    out.append(Check("matrix_oracle_agreement", _flag(agree)))

    names = [
        "n_wlc_eq_lc",
        "a0_nonsingular",
        "wlc_le_lc",
        "matrix_annihilates",
        "det_divides_m_pow_n",
        "deg_det_le_nm",
        "order_det_divides_Nn",
        "left_divides_xN_minus_1",
        "right_divides_xN_minus_1",
        "route_agreement",
        "prefix_annihilated",
    ]
    if not report.nontrivial:
        reason = "; ".join(report.diagnostics) or "no nontrivial matrix minimal polynomial"
        if not report.divisible:
            reason = f"divisible=false ({reason})"
        out += [Check(name, SKIP, reason) for name in names]
        return out

    M = report.matrix_minpoly
    d = report.wlc
    out.append(Check("n_wlc_eq_lc", _flag(n * d == lc)))
    out.append(Check("a0_nonsingular", _flag(rank(M.coeffs[0], p) == n)))
    out.append(Check("wlc_le_lc", _flag(d <= lc)))
    out.append(Check("matrix_annihilates", _flag(annihilates(M, v, count=N + d))))
    det = matpoly_det(M)
    out.append(Check("det_divides_m_pow_n", _flag(poly_divides(det, m**n))))
    out.append(Check("deg_det_le_nm", _flag(det.deg <= n * lc)))
    try:
        order = poly_order(det, N * n + 1)
        out.append(Check("order_det_divides_Nn", _flag((N * n) % order == 0), f"order={order}"))
    except (OrderExceedsBound, WordLCError, ValueError) as exc:
        out.append(Check("order_det_divides_Nn", FAIL, str(exc)))
    P = MatrixPoly.from_scalar(x_pow_minus_one(N, p), n)
    for side in (Side.LEFT, Side.RIGHT):
        _, R = euclid_divide(P, M, side)
        out.append(Check(f"{side.value}_divides_xN_minus_1", _flag(R.is_zero())))
    try:
        x_m = local_inverse_from_matrix_minpoly(v, M)
        x_s = local_inverse_from_scalar_minpoly(v, m)
        ok = np.array_equal(x_m, x_s) and np.array_equal(x_m, last)
        out.append(Check("route_agreement", _flag(ok)))
        extended = VectorSequence(np.vstack([x_m, full]), p)
        out.append(Check("prefix_annihilated", _flag(annihilates(M, extended))))
    except WordLCError as exc:
        out.append(Check("route_agreement", FAIL, str(exc)))
        out.append(Check("prefix_annihilated", FAIL, str(exc)))
    return out
