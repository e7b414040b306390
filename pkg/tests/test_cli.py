import json
import subprocess
import sys


from heckelab.cli import main, run


def report(argv, capsys):
    rep, code = run(argv)
    out = capsys.readouterr().out
    return json.loads(out), code


def test_rankin_genus1(capsys):
    data, code = report(["rankin", "--genus", "1"], capsys)
    assert code == 0 and data["status"] == "pass"
    assert len(data["details"]["decomposition"]["denominator_factors"]) == 4
    assert data["details"]["term_count"] == 4


def test_rankin_genus1_reconstruct(capsys):
    data, code = report(["rankin", "--genus", "1", "--reconstruct", "--check-feq"], capsys)
    assert code == 0
    names = [c["check"] for c in data["checks"]]
    assert "s_functional_equation" in names and "newton_S_integral" in names


def test_hodge_check_lift(capsys):
    data, code = report(["hodge", "--genus", "2", "--weight", "8", "--check-lift", "1"], capsys)
    assert code == 0
    assert data["details"]["hodge"]["rank"] == 4


def test_newton_missing_input(capsys):
    data, code = report(["newton", "--input", "missing.json"], capsys)
    assert code == 2 and data["status"] == "error"
    assert "not found" in data["details"]["error"]


def test_newton_outputs(tmp_path, capsys):
    inp = tmp_path / "c.json"
    inp.write_text(json.dumps(["1", "T*Ty", "p*(T^2*Py + P*Ty^2) - 2*p^2*P*Py", "p^2*T*P*Ty*Py", "p^4*P^2*Py^2"]))
    svg, csv = tmp_path / "n.svg", tmp_path / "n.csv"
    data, code = report(["newton", "--input", str(inp), "--svg", str(svg), "--csv", str(csv)], capsys)
    assert code == 0
    assert data["details"]["newton"]["vertices"] == [[0, 0], [1, 0], [3, 2], [4, 4]]
    assert csv.read_text().splitlines() == ["degree,valuation", "0,0", "1,0", "2,1", "3,2", "4,4"]
    assert svg.read_text().count("<polyline") == 1
    assert sorted(data["artifacts"]) == sorted([str(svg), str(csv)])


def test_newton_non_integral_is_failure(tmp_path, capsys):
    inp = tmp_path / "c.json"
    inp.write_text(json.dumps(["1", None, "p"]))
    data, code = report(["newton", "--input", str(inp)], capsys)
    assert code == 1 and data["failures"] == ["polygon has a non-integral slope"]


def test_euler(capsys):
    for typ, genus, deg in [("spinor", 3, 8), ("standard", 2, 5), ("triple", 2, 8)]:
        data, code = report(["euler", "--type", typ, "--genus", str(genus)], capsys)
        assert code == 0 and data["checks"][0]["details"]["degree"] == deg
    data, code = report(["euler", "--type", "spinor", "--genus", "2", "--weight", "10"], capsys)
    assert code == 0 and [c["check"] for c in data["checks"]] == ["degree", "normalization"]
    _, code = report(["euler", "--type", "spinor", "--genus", "4"], capsys)
    assert code == 2


def test_gamma(capsys):
    data, code = report(["gamma", "--kind", "spin3", "--weights", "12", "--numeric"], capsys)
    assert code == 0 and data["details"]["critical_values"] == list(range(12, 20))
    data, code = report(["gamma", "--kind", "tensor-g2", "--weights", "12,8"], capsys)
    assert code == 0 and data["details"]["critical_values"] == []
    _, code = report(["gamma", "--kind", "triple", "--weights", "10,x"], capsys)
    assert code == 2
    _, code = report(["gamma", "--kind", "spin3", "--weights", "3"], capsys)
    assert code == 2


def test_lift(capsys):
    for argv in (["--check", "ikeda-standard", "--n", "2"], ["--check", "eisenstein", "--n", "1", "--weight", "8"],
                 ["--check", "quadratic"], ["--check", "family", "--n", "2"]):
        data, code = report(["lift", *argv], capsys)
        assert code == 0, data


def test_family(tmp_path, capsys):
    out = tmp_path / "fam.csv"
    data, code = report(["family", "--p", "5", "--weights", "2,6", "--bound", "10", "--kummer", "1",
                         "--csv", str(out)], capsys)
    assert code == 0
    rows = out.read_text().splitlines()
    assert rows[0] == "n,k,a_n" and "2,6,33" in rows
    _, code = report(["family", "--p", "5", "--weights", "2,3", "--kummer", "1"], capsys)
    assert code == 2


def test_dirichlet(tmp_path, capsys):
    f = tmp_path / "f.json"
    f.write_text(json.dumps({"2": "(1 - x0*X)*(1 - x0*x1*X)", "default": "1 - y1*X"}))
    data, code = report(["dirichlet", "--factors", str(f), "--bound", "30"], capsys)
    assert code == 0
    assert data["details"]["dirichlet"]["coefficients"]["3"] == {"y1^1": "1/1"}
    f.write_text(json.dumps({"2": "2 - X"}))
    _, code = report(["dirichlet", "--factors", str(f), "--bound", "8"], capsys)
    assert code == 1


def test_usage_errors(capsys):
    _, code = run(["nosuch"])
    assert code == 2
    _, code = run(["rankin", "--genus", "3"])
    assert code == 2
    capsys.readouterr()


def test_threads_env(monkeypatch, capsys):
    monkeypatch.setenv("HECKELAB_THREADS", "zero")
    _, code = report(["hodge", "--genus", "1", "--weight", "4"], capsys)
    assert code == 2
    monkeypatch.setenv("HECKELAB_THREADS", "3")
    data, code = report(["hodge", "--genus", "1", "--weight", "4"], capsys)
    assert code == 0 and data["details"]["threads"] == 3


def test_out_file_and_determinism(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["rankin", "--genus", "1", "--reconstruct", "--out", str(a)]) == 0
    assert main(["rankin", "--genus", "1", "--reconstruct", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert capsys.readouterr().out == ""


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "heckelab.cli", "hodge", "--genus", "2", "--weight", "8",
                           "--check-lift", "1"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["status"] == "pass"
