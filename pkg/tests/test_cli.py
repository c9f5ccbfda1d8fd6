import json

import pytest

from commgraph.cli import cli_dispatch


@pytest.fixture
def files(tmp_path):
    J = tmp_path / "J.txt"
    J.write_text("field gf 7\n3 3\n0 1 0\n0 0 1\n0 0 0\n")
    JT = tmp_path / "JT.txt"
    JT.write_text("field gf 7\n3 3\n0 0 0\n1 0 0\n0 1 0\n")
    Q = tmp_path / "Q.txt"
    Q.write_text("field Q\n3 3\n0 1 0\n0 0 1\n0 0 0\n")
    QT = tmp_path / "QT.txt"
    QT.write_text("field Q\n3 3\n0 0 0\n1 0 0\n0 1 0\n")
    C = tmp_path / "C.txt"
    C.write_text("field gf 2\n3 3\n0 0 1\n1 0 1\n0 1 0\n")
    return {"J": str(J), "JT": str(JT), "Q": str(Q), "QT": str(QT), "C": str(C), "dir": tmp_path}


def run(argv, capsys):
    code = cli_dispatch(argv)
    return code, capsys.readouterr()


def test_centralizer(files, capsys):
    code, out = run(["centralizer", files["J"]], capsys)
    assert code == 0 and out.out.startswith("dim 3")


def test_structure(files, capsys):
    code, out = run(["structure", files["J"]], capsys)
    rep = json.loads(out.out)
    assert code == 0 and rep["minimal"] and rep["jordan"] == "3:0"


def test_distance_methods(files, capsys):
    for method, verdict in (("le2", "ge3"), ("le3", "ge4"), ("path4", "le4")):
        code, out = run(["distance", files["J"], files["JT"], "--method", method], capsys)
        assert code == 0 and json.loads(out.out)["verdict"] == verdict


def test_distance_unsupported(files, capsys):
    code, out = run(["distance", files["Q"], files["QT"], "--method", "le3"], capsys)
    assert code == 3 and "InfiniteField" in out.err
    code, _ = run(["structure", files["C"]], capsys)
    assert code == 0
    code, out = run(["distance", files["C"], files["C"], "--method", "path4"], capsys)
    assert code == 3 and "NoEigenvalueInField" in out.err


def test_verify_thm5_example(capsys):
    code, out = run(["verify", "thm5", "--n", "3", "--q", "7", "--specA", "3:0", "--specB", "1:0,2:1",
                     "--no-timing"], capsys)
    cert = json.loads(out.out)
    assert code == 0 and cert["verdict"] == "verified" and "elapsed_ms" not in cert


def test_verify_m9(capsys, tmp_path):
    out = tmp_path / "m9.json"
    code, _ = run(["verify", "m9", "--out", str(out)], capsys)
    cert = json.loads(out.read_text())
    assert code == 0 and cert["witnesses"]["intersection_dim"] == 1


def test_verify_tampered_conjugator(capsys, tmp_path):
    S = tmp_path / "S.txt"
    S.write_text("field gf 7\n3 3\n0 1 1\n1 0 1\n1 1 0\n")
    code, out = run(["verify", "thm5", "--n", "3", "--q", "7", "--S", str(S)], capsys)
    assert code == 1 and json.loads(out.out)["verdict"] == "violated"


def test_verify_budget_exit(capsys):
    code, out = run(["verify", "thm5", "--n", "3", "--q", "7", "--specA", "3:0", "--specB", "3:0",
                     "--budget", "1"], capsys)
    assert code == 3 and json.loads(out.out)["verdict"] == "unsupported"


def test_construct(capsys):
    code, out = run(["construct", "--family", "n3", "--field", "gf 5", "--alpha", "1"], capsys)
    assert code == 0 and '"validated": true' in out.out
    code, out = run(["construct", "--family", "n5", "--field", "gf 7", "--alpha", "1", "--eigs", "0,1,2,3,4"],
                    capsys)
    assert code == 0
    code, out = run(["construct", "--theorem5", "3:0", "1:0,2:1", "--field", "gf 7"], capsys)
    assert code == 0 and "# S" in out.out
    code, out = run(["construct", "--family", "n4", "--field", "gf 7", "--alpha", "0", "--lambda", "2"], capsys)
    assert code == 2


def test_census_cli(capsys, tmp_path):
    g = tmp_path / "g.json"
    code, out = run(["census", "--n", "2", "--field", "gf 2", "--save", str(g)], capsys)
    assert code == 0 and json.loads(out.out)["classes"] == 7 and g.exists()


def test_usage_errors(capsys, files):
    assert run(["nope"], capsys)[0] == 2
    assert run(["structure", str(files["dir"] / "missing.txt")], capsys)[0] == 2
    assert run(["construct"], capsys)[0] == 2
