"""CLI behaviour: output schemas, determinism, exit codes."""

import json

from binord.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_params_json(capsys):
    code, out, _ = invoke(capsys, "params", "--q", "5", "--m", "8",
                          "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data == {"q": 5, "m": 8, "a": 2, "b": 1, "e": 4, "k": 4, "l": 2,
                    "t": "3", "alpha": [0, 1], "r": ["0", "0"]}
    assert list(data.keys()) == ["q", "m", "a", "b", "e", "k", "l", "t",
                                 "alpha", "r"]


def test_params_text_mentions_warnings(capsys):
    code, out, _ = invoke(capsys, "params", "--q", "5", "--m", "4")
    assert code == 0
    assert "m-divides-q-1" in out


def test_params_no_binomial_is_usage_error(capsys):
    code, _, err = invoke(capsys, "params", "--q", "5", "--m", "3")
    assert code == 2
    assert "no irreducible binomial" in err


def test_unsupported_field_is_usage_error(capsys):
    code, _, err = invoke(capsys, "params", "--q", "9", "--m", "3")
    assert code == 2


def test_binomials_line_format(capsys):
    code, out, _ = invoke(capsys, "binomials", "--q", "5", "--m", "8")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 8
    assert lines[0] == \
        "i=0 j=0 elem=0*t^7+0*t^6+0*t^5+0*t^4+0*t^3+0*t^2+1*t+1"
    assert all(line.startswith("i=") and " j=" in line and " elem=" in line
               for line in lines)


def test_count_s_json_schema(capsys):
    code, out, _ = invoke(capsys, "count-s", "--q", "5", "--m", "8",
                          "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["s_count"] == "60"
    assert data["k"] == 4 and data["l"] == 2 and data["case"] == 1
    assert list(data.keys()) == ["k", "l", "s_count", "theorem1_bound",
                                 "lemma8_w", "lemma8_count", "case", "flags"]


def test_count_s_exhaustive_cross_check(capsys):
    code, out, _ = invoke(capsys, "count-s", "--q", "5", "--m", "8",
                          "--exhaustive")
    assert code == 0
    assert "exhaustive enumeration agrees" in out


def test_order_json(capsys):
    code, out, _ = invoke(capsys, "order", "--q", "5", "--m", "8",
                          "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["order"] == "195312"
    assert (5 ** 8 - 1) % int(data["order"]) == 0


def test_order_factor_cap_exit_code(capsys):
    code, _, err = invoke(capsys, "order", "--q", "13", "--m", "64",
                          "--factor-cap", "1000")
    assert code == 3
    assert "error" in err


def test_verify_json(capsys):
    code, out, _ = invoke(capsys, "verify", "--q", "5", "--m", "8",
                          "--b", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["all_checks_pass"] is True
    assert int(data["exact_order"]) >= 1131
    assert data["checks"]["theorem7_distinct"] is True
    assert data["bounds"]["s_count"] == "60"


def test_verify_text_has_timings(capsys):
    code, out, _ = invoke(capsys, "verify", "--q", "5", "--m", "8")
    assert code == 0
    assert "[" in out and "s]" in out   # timing suffixes, text mode only


def test_verify_json_deterministic(capsys):
    argv = ("verify", "--q", "5", "--m", "8", "--format", "json")
    _, first, _ = invoke(capsys, *argv)
    _, second, _ = invoke(capsys, *argv)
    assert first == second


def test_verify_csv(capsys):
    code, out, _ = invoke(capsys, "verify", "--q", "5", "--m", "8",
                          "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "q,m,a,b,k,l,case,s_count,theorem1_bound," \
                       "exact_order,all_checks_pass"
    assert lines[1].startswith("5,8,2,1,4,2,1,60,16,195312,")


def test_scan_json_lines(capsys):
    code, out, _ = invoke(capsys, "scan", "--q", "5", "--m-max", "8",
                          "--format", "json")
    assert code == 0
    rows = [json.loads(line) for line in out.strip().splitlines()]
    assert len(rows) == 1
    assert rows[0]["spec"]["m"] == 8
    assert rows[0]["all_checks_pass"] is True


def test_scan_include_degenerate(capsys):
    code, out, _ = invoke(capsys, "scan", "--q", "5", "--m-max", "8",
                          "--include-degenerate", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 4   # header + m in {2, 4, 8}
    assert [line.split(",")[1] for line in lines[1:]] == ["2", "4", "8"]


def test_scan_all_b_rule(capsys):
    code, out, _ = invoke(capsys, "scan", "--q", "5", "--m-max", "8",
                          "--b-rule", "all", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 5   # header + b in {1, 2, 3, 4}
    assert [line.split(",")[3] for line in lines[1:]] == ["1", "2", "3", "4"]


def test_scan_budget_exit_code(capsys):
    code, _, _ = invoke(capsys, "scan", "--q", "5", "--m-max", "8",
                        "--factor-cap", "1000", "--format", "json")
    assert code == 3


def test_usage_error_exit_code(capsys):
    assert run(["params", "--q", "5"]) == 2        # missing --m
    assert run(["nonsense"]) == 2
    assert run([]) == 2


def test_missing_b_defaults_to_one(capsys):
    code, out, _ = invoke(capsys, "verify", "--q", "5", "--m", "8",
                          "--format", "json")
    data = json.loads(out)
    assert data["spec"]["b"] == 1


def test_scan_output_deterministic(capsys):
    argv = ("scan", "--q", "5", "--q", "7", "--m-max", "9", "--format", "csv")
    _, first, _ = invoke(capsys, *argv)
    _, second, _ = invoke(capsys, *argv)
    assert first == second


def test_failed_check_exit_code(capsys, monkeypatch):
    # no valid instance fails its checks, so force one through the seam
    import binord.cli as cli_module
    from binord.oracle import verify_instance as real_verify

    def failing_verify(q, m, b=1, **kwargs):
        report = real_verify(q, m, b, **kwargs)
        report.checks["theorem1_holds"] = False
        return report

    monkeypatch.setattr(cli_module, "verify_instance", failing_verify)
    code, out, _ = invoke(capsys, "verify", "--q", "5", "--m", "8",
                          "--format", "json")
    assert code == 1
    assert json.loads(out)["all_checks_pass"] is False


def test_a_override_flag(capsys):
    code, out, _ = invoke(capsys, "params", "--q", "5", "--m", "8",
                          "--a", "3", "--format", "json")
    assert code == 0
    assert json.loads(out)["a"] == 3
    code, _, err = invoke(capsys, "params", "--q", "5", "--m", "8", "--a", "1")
    assert code == 2
    assert "not irreducible" in err
