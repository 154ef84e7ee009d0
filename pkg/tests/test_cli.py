import json
import subprocess
import sys

from heckealg.cli import main


def run_cli(args, capsys):
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


def test_describe_builtin_sp58(capsys):
    code, out, _ = run_cli(["describe", "--example", "sp58"], capsys)
    assert code == 0
    assert "BC2 x B3" in out
    assert "|W| = 384" in out
    assert "(T[beta3] - q^5)*(T[beta3] + 1) = 0" in out


def test_describe_json_format(capsys):
    code, out, _ = run_cli(["describe", "--example", "gl-a2",
                            "--format", "json", "--q", "3"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["weyl_order"] == 6
    assert all(rel["q_power_value"] == "9"
               for rel in doc["specializations"])


def test_describe_cuspidal(capsys):
    code, out, _ = run_cli(["describe", "--example", "gl-cuspidal"], capsys)
    assert code == 0
    assert "torus dimension 1" in out
    assert "|W| = 1" in out


def test_describe_file_input(tmp_path, capsys):
    from heckealg.pipeline import BUILTIN_EXAMPLES
    p = tmp_path / "datum.json"
    p.write_text(json.dumps(BUILTIN_EXAMPLES["sp58"]))
    code, out, _ = run_cli(["describe", "--input", str(p)], capsys)
    assert code == 0 and "BC2 x B3" in out


def test_malformed_json_exit_2(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    code, _, err = run_cli(["describe", "--input", str(p)], capsys)
    assert code == 2
    assert "input error" in err


def test_unknown_field_exit_2(tmp_path, capsys):
    p = tmp_path / "bad2.json"
    p.write_text(json.dumps({"group": {"family": "Sp", "n": 1},
                             "blocks": [], "junk": True}))
    code, _, err = run_cli(["describe", "--input", str(p)], capsys)
    assert code == 2


def test_invalid_datum_exit_2(tmp_path, capsys):
    p = tmp_path / "bad3.json"
    p.write_text(json.dumps({"group": {"family": "Sp", "n": 3},
                             "blocks": [{"side": "S", "dim": 1, "e": 1,
                                         "ell": 5}]}))
    code, _, err = run_cli(["describe", "--input", str(p)], capsys)
    assert code == 2
    assert "d(d+1)" in err


def test_missing_input_exit_2(capsys):
    code, _, err = run_cli(["describe"], capsys)
    assert code == 2


def test_unknown_example_exit_2(capsys):
    code, _, err = run_cli(["describe", "--example", "nope"], capsys)
    assert code == 2
    assert "available" in err


def test_nonpositive_q_exit_2(capsys):
    code, _, err = run_cli(["describe", "--example", "gl-a2", "--q", "-1"],
                           capsys)
    assert code == 2
    assert "positive" in err


def test_count_cap_exit_2(capsys):
    code, _, err = run_cli(["count", "--example", "gl-a2", "--order", "100"],
                           capsys)
    assert code == 2
    assert "cap" in err


def test_check_small(capsys):
    code, out, _ = run_cli(["check", "--seed", "7", "--triples", "3",
                            "--im-pairs", "2", "--cone-samples", "20"],
                           capsys)
    assert code == 0
    assert "0 failure(s)" in out


def test_check_rank_bound_zero(capsys):
    code, out, _ = run_cli(["check", "--rank-bound", "0", "--triples", "1",
                            "--im-pairs", "1", "--cone-samples", "1"],
                           capsys)
    assert code == 0
    assert "0 checks, 0 failure(s)" in out


def test_check_deterministic(capsys):
    args = ["check", "--seed", "7", "--triples", "2", "--im-pairs", "2",
            "--cone-samples", "10"]
    code1, out1, _ = run_cli(args, capsys)
    code2, out2, _ = run_cli(args, capsys)
    assert code1 == code2 == 0
    assert out1 == out2


def test_count_cuspidal(capsys):
    code, out, _ = run_cli(["count", "--example", "gl-cuspidal",
                            "--order", "3"], capsys)
    assert code == 0
    assert "total irreducibles: 3" in out


def test_count_rank1_inversion(capsys):
    # W = S_2 inverting a rank-1 torus: both order-2 points are fixed,
    # each contributing the 2 irreducibles of S_2
    code, out, _ = run_cli(["count", "--example", "sp2-iwahori",
                            "--order", "2"], capsys)
    assert code == 0
    assert "total irreducibles: 4" in out


def test_count_order_1(capsys):
    code, out, _ = run_cli(["count", "--example", "gl-a2", "--order", "1",
                            "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert len(doc["orbits"]) == 1
    assert doc["orbits"][0]["representative"] == [0, 0, 0]


def test_count_sl_quotient_classes(tmp_path, capsys):
    # SL-type datum: the R-group translation identifies exponent classes
    # modulo the central direction; at order 1 the single class has the
    # full (Z/2)^2 stabilizer with a symmetric cocycle: 4 irreducibles
    doc = {
        "group": {"family": "SL", "n": 4, "division_degree": 1},
        "blocks": [
            {"side": "GL", "dim": 1, "e": 2, "levi": 2, "torsion": 2},
        ],
        "sl_rgroup": {
            "labels": ["e", "g"],
            "matrices": {"e": [[1, 0], [0, 1]], "g": [[1, 0], [0, 1]]},
            "table": {"e,e": "e", "e,g": "g", "g,e": "g", "g,g": "e"},
            "cocycle": {"e,e": 1, "e,g": 1, "g,e": 1, "g,g": -1},
            "translations": {"g": ["1/2", "1/2"]},
        },
    }
    p = tmp_path / "sl.json"
    p.write_text(json.dumps(doc))
    code, out, _ = run_cli(["count", "--input", str(p), "--order", "1"],
                           capsys)
    assert code == 0
    assert "total irreducibles: 4" in out


def test_console_script_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "heckealg.cli", "describe", "--example",
         "gl-a2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "A2" in proc.stdout
