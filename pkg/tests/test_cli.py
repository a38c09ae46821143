import io
import json
import subprocess
import sys

import pytest

from gturan import __version__
from gturan.cli import main
from gturan.graph import complete_graph, cycle
from gturan.graph6 import from_graph6, to_graph6


def run(argv, stdin=b"", capsysbinary=None):
    """Run the CLI in-process; returns (code, stdout, stderr)."""
    old_in = sys.stdin
    sys.stdin = io.TextIOWrapper(io.BytesIO(stdin))
    try:
        code = main(argv)
    finally:
        sys.stdin = old_in
    out, err = capsysbinary.readouterr()
    return code, out.decode(), err.decode()


def shell(args, stdin=b""):
    return subprocess.run(
        [sys.executable, "-m", "gturan.cli", *args], input=stdin, capture_output=True, check=False
    )


def test_gen_norm(capsysbinary):
    code, out, err = run(["gen", "norm", "--q", "3", "--a", "3"], capsysbinary=capsysbinary)
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 1
    assert from_graph6(lines[0]).n == 18
    record = json.loads(err)
    assert record["version"] == __version__
    assert record["result"]["n"] == 18


def test_gen_basic(capsysbinary):
    code, out, _ = run(["gen", "basic", "--pattern", "C6"], capsysbinary=capsysbinary)
    assert code == 0 and from_graph6(out.strip()) == cycle(6)


def test_gen_random_reproducible(capsysbinary):
    argv = ["gen", "rand-c2kfree", "--n", "100", "--k", "2", "--seed", "7"]
    code, out1, err1 = run(argv, capsysbinary=capsysbinary)
    code2, out2, err2 = run(argv, capsysbinary=capsysbinary)
    assert code == code2 == 0
    assert out1 == out2
    r1, r2 = json.loads(err1), json.loads(err2)
    assert r1["seeds"] == [7]
    assert r1["result"] == r2["result"]
    assert r1["result"]["trace"]["edges_after"] == 182


def test_count_and_profile(capsysbinary):
    k4 = to_graph6(complete_graph(4)) + b"\n"
    code, out, _ = run(["count", "--r", "3"], stdin=k4, capsysbinary=capsysbinary)
    assert code == 0 and json.loads(out) == {"k": 3, "count": 4}
    c4 = to_graph6(cycle(4)) + b"\n"
    code, out, _ = run(["profile", "--rmax", "3"], stdin=c4, capsysbinary=capsysbinary)
    assert json.loads(out) == [1, 4, 4, 0]


def test_profile_norm_graph_fixture(capsysbinary):
    _, g6, _ = run(["gen", "norm", "--q", "3", "--a", "3"], capsysbinary=capsysbinary)
    code, out, _ = run(["profile", "--rmax", "4"], stdin=g6.encode(), capsysbinary=capsysbinary)
    assert json.loads(out) == [1, 18, 68, 56, 8]


def test_check(capsysbinary):
    c4 = to_graph6(cycle(4)) + b"\n"
    _, out, _ = run(["check", "K(2,2)"], stdin=c4, capsysbinary=capsysbinary)
    payload = json.loads(out)
    assert payload["free"] is False and len(payload["witness"][0]) == 4
    c5 = to_graph6(cycle(5)) + b"\n"
    _, out, _ = run(["check", "C4"], stdin=c5, capsysbinary=capsysbinary)
    assert json.loads(out)["free"] is True


def test_pipeline_join_kab():
    gen = shell(["gen", "join-kab", "--t", "2", "--q", "3", "--a", "3"])
    assert gen.returncode == 0
    chk = shell(["check", "3*K(3,3)"], stdin=gen.stdout)
    assert chk.returncode == 0
    assert json.loads(chk.stdout)["free"] is True


def test_bound(capsysbinary):
    code, out, _ = run(
        ["bound", "thm2-lower", "--t", "3", "--r", "3", "--ex-values", "[1,5,6,2]"],
        capsysbinary=capsysbinary,
    )
    assert code == 0 and json.loads(out)["value"] == 34
    code, out, _ = run(
        ["bound", "thm1-upper", "--n", "103", "--t", "3", "--r", "3", "--a", "4", "--b", "7"],
        capsysbinary=capsysbinary,
    )
    payload = json.loads(out)
    assert code == 0 and payload["asymptotic-envelope"] is True
    code, _, err = run(
        ["bound", "thm1-upper", "--n", "10", "--t", "2", "--r", "3", "--a", "4", "--b", "7"],
        capsysbinary=capsysbinary,
    )
    assert code == 2 and "t >= r" in err
    code, out, _ = run(
        ["bound", "thm1-upper", "--n", "10", "--t", "2", "--r", "3", "--a", "4", "--b", "7", "--override"],
        capsysbinary=capsysbinary,
    )
    assert code == 0 and json.loads(out)["regime"] == "out of theorem regime"


def test_bound_ex_values_file(tmp_path, capsysbinary):
    f = tmp_path / "ex.json"
    f.write_text("[1, 7, 9, 3]")
    code, out, _ = run(
        ["bound", "thm2-upper", "--t", "3", "--r", "3", "--ex-values-file", str(f)],
        capsysbinary=capsysbinary,
    )
    assert code == 0 and json.loads(out)["value"] == 52


def test_search(capsysbinary):
    code, out, _ = run(["search", "--n", "5", "--r", "2", "--forbid", "C4"], capsysbinary=capsysbinary)
    payload = json.loads(out)
    assert code == 0 and payload["value"] == 6
    assert from_graph6(payload["witness"]).edge_count == 6
    code, out, _ = run(["search", "--n", "4", "--r", "2", "--forbid", "C4", "--naive"], capsysbinary=capsysbinary)
    assert json.loads(out)["value"] == 4 and json.loads(out)["method"] == "naive-labeled"


def test_search_timeout_exit_code(capsysbinary):
    code, out, _ = run(
        ["search", "--n", "10", "--r", "3", "--forbid", "2*C4", "--timeout", "0.02"],
        capsysbinary=capsysbinary,
    )
    assert code == 4 and json.loads(out)["complete"] is False


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "C3"],
        ["search", "--n", "12", "--r", "2", "--forbid", "C4"],
        ["bound", "thm2-upper", "--t", "3", "--r", "3"],
    ],
)
def test_usage_errors(argv, capsysbinary):
    code, _, err = run(argv, stdin=b"", capsysbinary=capsysbinary)
    assert code == 2 and err.startswith("gturan:")


def test_bad_graph6_input(capsysbinary):
    code, _, _ = run(["count", "--r", "2"], stdin=b"C\x7f\n", capsysbinary=capsysbinary)
    assert code == 2


def test_pretty_both_positions(capsysbinary):
    argv = ["bound", "as", "--n", "100", "--r", "2", "--a", "2", "--b", "2"]
    _, before, _ = run(["--pretty", *argv], capsysbinary=capsysbinary)
    _, after, _ = run([*argv, "--pretty"], capsysbinary=capsysbinary)
    assert before == after
    assert before.splitlines()[0].split() == ["bound", '"as"']


def test_json_stable_order(capsysbinary):
    _, out, _ = run(["search", "--n", "4", "--r", "2", "--forbid", "C4"], capsysbinary=capsysbinary)
    keys = list(json.loads(out))
    assert keys == sorted(keys)
