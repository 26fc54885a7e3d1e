from __future__ import annotations

import io
import subprocess
import sys

import pytest

from mvinterlace.cli import BRUTE_LIMIT, run

K3_EXPR = "add(1,2, ren(2,1, add(1,2, (1+2))) + 2)"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def single_vertex(tmp_path):
    p = tmp_path / "a.graph"
    p.write_text("vertices: a\n")
    return str(p)


def test_compute_single_vertex(single_vertex):
    code, out, _ = call("compute", "--poly", "B", "--method", "both", "--graph", single_vertex)
    assert code == 0
    assert out == "1 + x_a*v + y_a*u\nmethods agree\n"


@pytest.mark.parametrize("poly", ["B", "B1", "By0", "Bxy", "BI", "q", "Q", "I"])
def test_compute_every_poly_agrees(poly):
    code, out, _ = call("compute", "--poly", poly, "--method", "both", "--inline", "edges: a-b b-c; loops: c")
    assert code == 0 and out.endswith("methods agree\n")


def test_compute_truncate_and_truncate_verb():
    _, full, _ = call("compute", "--inline", "edges: a-b", "--truncate", "1")
    code, out, _ = call("truncate", "--d", "1", "--inline", "edges: a-b")
    assert code == 0 and out == full
    code, out, _ = call("truncate", "--d", "0", "--polynomial", "1 + x_a*v + y_a*u")
    assert (code, out) == (0, "1\n")


def test_specialize():
    code, out, _ = call("specialize", "--to", "q", "--inline", "edges: a-b")
    assert (code, out) == (0, "-2*u' + u'^2 + 2*v'\n")
    code, out, _ = call("specialize", "--to", "I", "--polynomial", "1 + x_a*v + y_a*u")
    assert out == "1 + v\n"


def test_check_counterexample():
    code, out, _ = call("check", "--suite", "counterexample14")
    assert code == 0
    assert "x_d*y_b*y_c*u^3" in out and "x_d*y_b*y_c*u^2*v" in out


def test_check_literal_suite_fails():
    code, out, _ = call("check", "--suite", "lemma2_literal", "--max-n", "3", "--random", "0")
    assert code == 1 and out.startswith("FAIL lemma2_literal")


def test_cwdp_k3():
    code, out, _ = call("cwdp", "--k", "2", "--d", "3", "--expr", K3_EXPR, "--specialize", "I")
    assert (code, out) == (0, "1 + 3*v\n")
    code, out, _ = call("cwdp", "--k", "2", "--d", "2", "--expr", K3_EXPR, "--verify")
    assert code == 0 and out.endswith("methods agree\n")


def test_cwx_eval(tmp_path):
    f = tmp_path / "k3.cwx"
    f.write_text(K3_EXPR + "  # triangle\n")
    code, out, _ = call("cwx-eval", "--file", str(f), "--order")
    assert code == 0
    assert "edges: v1-v2 v1-v3 v2-v3" in out and "order: v1 v2 v3" in out


def test_matroid(tmp_path):
    f = tmp_path / "k3.mat"
    f.write_text("groundset: 1 2 3\nbases: {1 2} {1 3} {2 3}\n")
    code, out, _ = call("matroid", "--file", str(f), "--activities")
    assert code == 0
    assert "{1 2} IA={1 2} EA={}" in out and out.endswith("T = x + x^2 + y\nmethods agree\n")


def test_reconstruct():
    code, out, _ = call("reconstruct", "--inline", "vertices: a b c; loops: b; edges: a-b b-c")
    assert code == 0 and out.endswith("round trip ok\n")
    code, out, _ = call("reconstruct", "--polynomial", "1 + x_a*u + x_b + x_a*x_b*u^2")
    assert out == "vertices: a b\nloops: a\nedges: a-b\n"


@pytest.mark.parametrize("argv", [
    ("frobnicate",),
    ("compute",),
    ("compute", "--inline", "vertices: a", "--graph", "x.graph"),
    ("compute", "--graph", "/does/not/exist"),
    ("compute", "--inline", "vertices: a a"),
    ("cwdp", "--d", "2", "--expr", "add(1,"),
    ("truncate", "--d", "-1", "--polynomial", "1"),
])
def test_usage_errors_exit_2(argv):
    assert call(*argv)[0] == 2


@pytest.mark.parametrize("argv", [
    ("cwdp", "--k", "1", "--d", "2", "--expr", K3_EXPR),
    ("matroid", "--inline", "groundset: 1 2 3 4; bases: {1 2} {3 4}"),
    ("compute", "--poly", "Q", "--method", "recursive", "--inline", "loops: a"),
    ("reconstruct", "--polynomial", "1 + x_a*u^2"),
])
def test_domain_errors_exit_1(argv):
    code, _, err = call(*argv)
    assert code == 1 and err


def test_brute_force_guard():
    names = " ".join(f"v{i}" for i in range(BRUTE_LIMIT + 1))
    code, _, err = call("compute", "--method", "brute", "--inline", f"vertices: {names}")
    assert code == 2 and "--force" in err


def test_subprocess_byte_identical():
    argv = [sys.executable, "-m", "mvinterlace", "compute", "--poly", "B", "--method", "both",
            "--inline", "vertices: a b c d; loops: b; edges: a-b b-c c-d"]
    runs = [subprocess.run(argv, capture_output=True, check=True).stdout for _ in range(2)]
    assert runs[0] == runs[1] and runs[0].endswith(b"methods agree\n")
