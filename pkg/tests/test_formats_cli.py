import io
import subprocess
import sys

import numpy as np
import pytest

from helpers import WLC3_A, seq_lc7, seq_lc5, seq_wlc3, wlc3_companion_map, four_cycle_map
from wordlc import formats
from wordlc.cli import main
from wordlc.dynamics import MapSpec, random_map
from wordlc.errors import FormatError
from wordlc.matpoly import MatrixPoly
from wordlc.poly import x_pow_minus_one
from wordlc.sequence import VectorSequence


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


def kv(text):
    return dict(line.split("=", 1) for line in text.splitlines() if line and not line.startswith("#"))


@pytest.fixture
def write(tmp_path):
    def _write(name, content):
        path = tmp_path / name
        if isinstance(content, VectorSequence):
            formats.write_sequence(path, content)
        elif isinstance(content, MapSpec):
            formats.write_map(path, content)
        elif isinstance(content, MatrixPoly):
            formats.write_mpoly(path, content)
        else:
            path.write_text(content)
        return path

    return _write


# -- formats ------------------------------------------------------------------


def test_sequence_round_trip():
    for v in (seq_lc7(), seq_wlc3(), VectorSequence([[1, 2], [0, 4]], 5)):
        assert formats.parse_sequence(formats.format_sequence(v)) == v


def test_sequence_parsing_details():
    text = "# comment\nseq 3 2 2 period 2\n\n1 2  # V_0\n0 1\n"
    v = formats.parse_sequence(text)
    assert v.period == 2 and v.terms.tolist() == [[1, 2], [0, 1]]
    bad = [
        "seq 4 1 1\n0\n",  # composite modulus
        "seq 2 1 2\n0\n",  # count mismatch
        "seq 2 2 1\n0\n",  # short line
        "seq 3 1 1\n3\n",  # out of range
        "seq 2 1 1 cycle 1\n0\n",
        "seq 2 1 3 period 2\n0\n1\n1\n",  # inconsistent with period
        "sequence 2 1 1\n0\n",
        "",
    ]
    for text in bad:
        with pytest.raises(FormatError):
            formats.parse_sequence(text)


def test_map_round_trip_and_reduction(caplog):
    for f in (four_cycle_map(), wlc3_companion_map(), random_map(3, 2, 5)):
        g = formats.parse_map(formats.format_map(f))
        assert formats.format_map(g) == formats.format_map(f)
    g = formats.parse_map("map affine\nfield 3\ndim 1\n4\n-1\n")
    assert g.matrix.tolist() == [[1]] and g.offset.tolist() == [2]
    assert "reduced" in caplog.text
    with pytest.raises(FormatError):
        formats.parse_map("map table\nfield 2\ndim 1\n0\n")


def test_mpoly_round_trip():
    M = MatrixPoly.monic_from_blocks(WLC3_A, 2)
    assert formats.parse_mpoly(formats.format_mpoly(M)) == M
    Z = MatrixPoly.zero(2, 3)
    assert formats.format_mpoly(Z).splitlines()[0] == "mpoly 3 2 0"
    assert formats.parse_mpoly(formats.format_mpoly(Z)) == Z
    with pytest.raises(FormatError):
        formats.parse_mpoly("mpoly 2 2 1\n1 0\n0 1\n")


# -- lc / wlc -----------------------------------------------------------------


def test_cmd_lc(write):
    code, out = run("lc", write("e1.seq", seq_lc7()), "--format", "kv")
    assert code == 0 and kv(out) == {"lc": "7", "minpoly": "1,0,0,0,0,0,0,1"}
    zero = VectorSequence(np.zeros((4, 2)), 2, 4)
    assert kv(run("lc", write("z.seq", zero))[1]) == {"lc": "0", "minpoly": "1"}
    assert kv(run("lc", write("e3.seq", seq_wlc3()))[1])["minpoly"] == "1,0,0,0,0,0,1"


def test_cmd_wlc(write):
    code, out = run("wlc", write("e3.seq", seq_wlc3()), "--format", "kv")
    r = kv(out)
    assert code == 0
    assert list(r) == ["lc", "minpoly", "n", "divisible", "block_rank", "nontrivial", "wlc", "A0", "A1", "A2"]
    assert (r["nontrivial"], r["wlc"], r["A0"], r["A1"], r["A2"]) == ("true", "3", "0,1,1,1", "0,0,0,1", "1,1,0,1")
    r = kv(run("wlc", write("e2.seq", seq_lc5()), "--format", "kv")[1])
    # LC is 5 for this sequence, so no block Hankel is formed
    assert (r["lc"], r["nontrivial"], r["divisible"], r["block_rank"]) == ("5", "false", "false", "none")
    r = kv(run("wlc", write("e1.seq", seq_lc7()), "--format", "kv")[1])
    assert (r["divisible"], r["nontrivial"], r["wlc"]) == ("false", "false", "none")
    code, out = run("wlc", write("e3b.seq", seq_wlc3()))
    assert code == 0 and "WLC         3" in out


# -- invert / iterate ---------------------------------------------------------


def test_cmd_invert(write):
    ident = MapSpec.affine(np.eye(2, dtype=np.int64), np.zeros(2, dtype=np.int64), 2)
    code, out = run("invert", write("id.map", ident), "--y", "1,1")
    r = kv(out)
    assert code == 0 and r["x"] == "1,1" and r["verified"] == "true"
    assert list(r) == ["x", "verified", "route", "terms", "lc", "nontrivial"]
    code, out = run("invert", write("e3.map", wlc3_companion_map()), "--y", "1,1,0,0,0,1")
    r = kv(out)
    assert code == 0 and r["x"] == "0,0,1,1,0,0" and r["route"] == "matrix"
    code, out = run("invert", write("perm.map", random_map(2, 8, 7)), "--y", "1,0,1,1,0,0,1,0")
    assert code == 0 and kv(out)["verified"] == "true"


def test_cmd_iterate(write, tmp_path):
    f = write("c4.map", four_cycle_map())
    code, out = run("iterate", f, "--y", "1,0", "--count", "1")
    assert code == 0 and formats.parse_sequence(out).terms.tolist() == [[1, 0]]
    ident = write("id.map", MapSpec.from_successors([0, 1, 2, 3], 2, 2))
    _, out = run("iterate", ident, "--y", "1,1", "--count", "3")
    assert formats.parse_sequence(out).terms.tolist() == [[1, 1]] * 3
    dest = tmp_path / "orbit.seq"
    assert run("iterate", f, "--y", "0,0", "--count", "8", "--out", dest)[0] == 0
    v = formats.read_sequence(dest)
    assert v.terms.tolist() == [[0, 0], [1, 0], [0, 1], [1, 1]] * 2
    assert formats.parse_sequence(formats.format_sequence(v)) == v


# -- divide -------------------------------------------------------------------


def test_cmd_divide(write):
    M = write("m.mp", MatrixPoly.monic_from_blocks(WLC3_A, 2))
    P = write("p.mp", MatrixPoly.from_scalar(x_pow_minus_one(6, 2), 2))
    code, out = run("divide", "--dividend", P, "--divisor", M, "--side", "right")
    assert code == 0
    quotient, remainder = out.split("# remainder")
    Q = formats.parse_mpoly(quotient)
    assert [c.tolist() for c in Q.coeffs] == [[[1, 1], [1, 0]], [[1, 0], [0, 0]], [[1, 1], [0, 1]], [[1, 0], [0, 1]]]
    assert formats.parse_mpoly(remainder).is_zero()
    _, out = run("divide", "--dividend", M, "--divisor", M, "--side", "left")
    q, r = out.split("# remainder")
    assert formats.parse_mpoly(q) == MatrixPoly.identity(2, 2) and formats.parse_mpoly(r).is_zero()
    XI = write("x.mp", "mpoly 2 2 1\n0 0\n0 0\n1 0\n0 1\n")
    X2I = write("x2.mp", "mpoly 2 2 2\n0 0\n0 0\n0 0\n0 0\n1 0\n0 1\n")
    _, out = run("divide", "--dividend", XI, "--divisor", X2I)
    q, r = out.split("# remainder")
    assert formats.parse_mpoly(q).is_zero() and formats.parse_mpoly(r) == formats.read_mpoly(XI)


# -- verify -------------------------------------------------------------------


def test_cmd_verify_wlc3(write):
    v = VectorSequence(seq_wlc3().window(12), 2, 6)
    code, out = run("verify", write("e3.seq", v), "--format", "kv")
    assert code == 0
    status = kv(out)
    assert set(status.values()) == {"pass"}
    assert {"route_agreement", "matrix_annihilates", "left_divides_xN_minus_1"} <= set(status)


def test_cmd_verify_lc7(write):
    code, out = run("verify", write("e1.seq", seq_lc7()))
    assert code == 0
    lines = dict(line.split("=", 1) for line in out.splitlines())
    assert lines["scalar_annihilates"] == "pass"
    skipped = [k for k, s in lines.items() if s.startswith("skip")]
    assert "a0_nonsingular" in skipped
    assert all("divisible=false" in lines[k] for k in skipped)


def test_cmd_verify_detects_corruption(write):
    terms = seq_wlc3().window(12)
    terms[8, 1] ^= 1  # V_8 no longer equals V_2
    text = formats.format_sequence(VectorSequence(terms, 2))
    text = text.replace("seq 2 2 12", "seq 2 2 12 period 6", 1)
    code, out = run("verify", write("bad.seq", text))
    assert code == 1 and "=fail" in out


# -- bench --------------------------------------------------------------------


def test_cmd_bench_empty():
    code, out = run("bench", "--field", 2, "--dim", 4, "--trials", 0, "--seed", 3)
    assert code == 0
    assert out.splitlines() == [
        "seed,period,lc,wlc_nontrivial,wlc,inverse_verified",
        "# summary trials=0 verified=0 verified_rate=0.0000 nontrivial=0 nontrivial_rate=0.0000",
    ]


def test_cmd_bench_is_deterministic():
    args = ("bench", "--field", 3, "--dim", 3, "--trials", 15, "--seed", 42)
    assert run(*args) == run(*args)
    a = run(*args, "--permutation")[1]
    assert a == run(*args, "--permutation")[1] and a != run(*args)[1]


def test_cmd_bench_permutations_all_verify():
    code, out = run("bench", "--field", 2, "--dim", 8, "--trials", 100, "--seed", 0, "--permutation")
    assert code == 0
    rows = out.splitlines()[1:-1]
    assert len(rows) == 100 and all(r.endswith(",true") for r in rows)
    assert "verified_rate=1.0000" in out.splitlines()[-1]


# -- exit codes ---------------------------------------------------------------


def test_exit_codes(write, tmp_path):
    assert run("lc", tmp_path / "missing.seq")[0] == 2
    assert run("lc", write("bad.seq", "seq 2 1 2\n0\n"))[0] == 2
    assert run("bogus")[0] == 2
    assert run("lc", write("short.seq", "seq 2 1 3\n1\n0\n1\n"))[0] == 3
    chain = write("chain.map", "map table\nfield 3\ndim 1\n1\n2\n1\n")
    assert run("invert", chain, "--y", "0")[0] == 4
    cycle = write("c256.map", MapSpec.from_successors([(k + 1) % 256 for k in range(256)], 2, 8))
    assert run("invert", cycle, "--y", "0,0,0,0,0,0,0,0", "--max-terms", 8)[0] == 5
    sing = write("s.mp", "mpoly 2 2 1\n1 0\n0 1\n1 0\n0 0\n")
    assert run("divide", "--dividend", write("p.mp", "mpoly 2 2 0\n1 0\n0 1\n"), "--divisor", sing)[0] == 6
    assert run("bench", "--field", 4, "--dim", 2, "--trials", 1)[0] == 2
    assert run("bench", "--field", 2, "--dim", 21, "--trials", 1)[0] == 2
    assert run("verify", write("np.seq", "seq 2 1 2\n0\n1\n"))[0] == 2
    assert run("iterate", write("c4.map", four_cycle_map()), "--y", "1,0", "--count", 0)[0] == 2


def test_console_entry_point(write):
    path = write("e3.seq", seq_wlc3())
    res = subprocess.run(
        [sys.executable, "-m", "wordlc", "lc", str(path), "--format", "kv"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert res.returncode == 0 and res.stdout.splitlines()[0] == "lc=6"
