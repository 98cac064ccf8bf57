import json

from fnq.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_thm4_z2(capsys):
    code, out, _ = run_cli(capsys, "verify", "thm4",
                           "--ring", '{"kind":"Zn","n":2}',
                           "--eps", "1", "--out", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["solutions_found"] == 3
    assert doc["forward_ok"] and doc["backward_ok"]
    assert doc["ring"]["hash"]


def test_solve_leibniz_gf3(capsys):
    code, out, _ = run_cli(capsys, "solve",
                           "--ring", '{"kind":"GF","p":3,"k":1}',
                           "--eq", "f(x*y)=f(x)*y+x*f(y)",
                           "--class", "f=arbitrary", "--out", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["solution_count"] == 1
    assert doc["solutions"] == [{"f": [0, 0, 0]}]


def test_solve_syntax_error_exit_2(capsys):
    code, _, err = run_cli(capsys, "solve", "--eq", "f(x*y)=",
                           "--json-errors")
    assert code == 2
    doc = json.loads(err)
    assert doc["error"] == "EquationSyntaxError"
    assert doc["offset"] == 8


def test_dry_run_prints_task_without_solving(capsys):
    code, out, _ = run_cli(capsys, "solve",
                           "--ring", '{"kind":"Zn","n":6}',
                           "--eq", "f(x*y)=f(x)*y+x*f(y)",
                           "--dry-run")
    assert code == 0
    doc = json.loads(out)
    assert doc["candidate_spaces"] == {"f": 6 ** 6}
    assert doc["evaluated_pairs_upper_bound"] == 6 ** 6 * 36


def test_budget_env_respected(capsys, monkeypatch):
    monkeypatch.setenv("FNQ_BUDGET", "10")
    code, _, err = run_cli(capsys, "solve",
                           "--ring", '{"kind":"Zn","n":6}',
                           "--eq", "f(x*y)=f(x)*y+x*f(y)",
                           "--json-errors")
    assert code == 2
    assert json.loads(err)["error"] == "BudgetExceeded"


def test_worker_bytes_identical(capsys):
    outs = []
    for workers in ("1", "2", "8"):
        code, out, _ = run_cli(capsys, "solve",
                               "--ring", '{"kind":"GF","p":3,"k":1}',
                               "--eq", "f(x*y)=h(x)*h(y)+x*k(y)+k(x)*y",
                               "--workers", workers, "--out", "json")
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1] == outs[2]


def test_enumerate_csv_golden(capsys):
    code, out, _ = run_cli(capsys, "enumerate",
                           "--ring", '{"kind":"Zn","n":2}',
                           "--class", "multiplicative", "--out", "csv")
    assert code == 0
    assert out == "v0,v1\n0,0\n0,1\n1,1\n"


def test_classify_triple(capsys):
    solution = json.dumps({"f": [0, 2, 1], "h": [0, 1, 2], "k": [0, 2, 1]})
    code, out, _ = run_cli(capsys, "classify",
                           "--ring", '{"kind":"GF","p":3,"k":1}',
                           "--solution", solution, "--out", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["family"] == "AllLinear"
    assert doc["params"] == {"lam1": 1, "lam2": 2}


def test_classify_rejects_non_solution(capsys):
    solution = json.dumps({"f": [0, 1, 2], "h": [0, 1, 2], "k": [0, 1, 2]})
    code, out, _ = run_cli(capsys, "classify",
                           "--ring", '{"kind":"GF","p":3,"k":1}',
                           "--solution", solution, "--out", "json")
    assert code == 1
    assert json.loads(out)["error"] == "ResidualNonzero"


def test_symbolic_subcommand(capsys):
    code, out, _ = run_cli(capsys, "symbolic", "--family", "thm5",
                           "--out", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["constraints"] == ["g3 + b2*b3"]
    code, out, _ = run_cli(capsys, "symbolic", "--family", "thm5",
                           "--param", "b2=1", "--param", "b3=1",
                           "--param", "g1=1", "--param", "g2=0",
                           "--param", "g3=-1", "--out", "json")
    assert code == 0
    assert json.loads(out)["identity_holds"] is True


def test_verify_alien_cli(capsys):
    code, out, _ = run_cli(capsys, "verify", "alien",
                           "--ring", '{"kind":"GF","p":5,"k":1}',
                           "--lam", "1", "--mu", "2", "--out", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["params"] == {"lam": 1, "mu": 2}


def test_verify_exit_1_on_counterexamples(capsys):
    # eps = 3 is a central zero divisor of Z_6; the converse direction of
    # the shift characterization fails there, so the report carries
    # counterexamples and the command exits 1, still writing the report
    code, out, _ = run_cli(capsys, "verify", "thm4",
                           "--ring", '{"kind":"Zn","n":6}',
                           "--eps", "3", "--out", "json")
    doc = json.loads(out)
    assert doc["forward_ok"] is True
    if not doc["backward_ok"]:
        assert code == 1
        assert doc["counterexamples"]
    else:  # outcome is reported, never assumed
        assert code == 0


def test_verify_thm5_symbolic_cli(capsys):
    code, out, _ = run_cli(capsys, "verify", "thm5-symbolic", "--out", "json")
    assert code == 0
    assert json.loads(out)["details"]["constraints"] == ["g3 + b2*b3"]


def test_output_to_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(capsys, "verify", "thm4",
                           "--ring", '{"kind":"Zn","n":2}',
                           "--eps", "1", "--out", "json",
                           "--output", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["solutions_found"] == 3


def test_usage_error_exit_2(capsys):
    assert main(["solve"]) == 2  # missing --eq
    capsys.readouterr()
    assert main(["bogus"]) == 2
    capsys.readouterr()
