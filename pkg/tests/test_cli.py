import json
import os
import subprocess
import sys

import pytest

from smzv.cli import EXIT_FAIL, EXIT_PRECISION, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_numeric_text(capsys):
    code, out, _ = run(capsys, "eval", "--index", "3", "--m", "2", "--numeric", "--prec", "40")
    assert code == 0
    assert "-3*zeta(4)" in out
    assert "-3.246969701133414574548011089623503708" in out


def test_eval_empty_and_zero(capsys):
    code, out, _ = run(capsys, "eval", "--index", "", "--m", "1", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["schema"] == "smzv-report/1"
    assert rep["series"]["coeffs"] == [[{"coeff": {"num": "1", "den": "1"}, "monomial": []}]]
    code, out, _ = run(capsys, "eval", "--index", "3,1,3", "--m", "1", "--format", "json")
    assert json.loads(out)["series"]["coeffs"] == [[]]


def test_eval_star_flavor(capsys):
    code, out, _ = run(capsys, "eval", "--index", "1,3", "--m", "2", "--flavor", "star", "--format", "json")
    assert code == 0 and json.loads(out)["flavor"] == "star"


def test_usage_errors(capsys):
    assert run(capsys, "eval", "--index", "3,x")[0] == EXIT_USAGE
    assert run(capsys, "eval", "--index", "3", "--m", "0")[0] == EXIT_USAGE
    assert run(capsys, "verify", "theorem", "main9")[0] == EXIT_USAGE
    assert run(capsys, "verify", "nothing")[0] == EXIT_USAGE
    assert run(capsys, "series", "lem:nope")[0] == EXIT_USAGE
    assert run(capsys, "verify", "word", "--tol", "-1")[0] == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["eval", "--index", "3", "--flavor", "bad"])
    assert exc.value.code == EXIT_USAGE


def test_precision_exit(capsys):
    code, _, err = run(capsys, "eval", "--index", "3", "--m", "2", "--numeric", "--prec", "30000")
    assert code == EXIT_PRECISION and "precision" in err


def test_verify_pass_and_fail(capsys):
    code, out, _ = run(capsys, "verify", "word", "wordA", "--max-n", "10")
    assert code == 0 and "PASS  wordA" in out
    code, out, _ = run(capsys, "verify", "theorem", "main1", "--max-n", "1", "--tol", "1e-200")
    assert code == EXIT_FAIL and "verdict: fail" in out


def test_verify_json_is_deterministic(capsys):
    args = ("verify", "index", "sigma", "--seed", "7", "--format", "json")
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args)
    assert a == b
    rep = json.loads(a)
    assert rep["seed"] == 7 and rep["verdict"] == "pass"


def test_series_command(capsys):
    code, out, _ = run(capsys, "series", "lem:zeta(1,3,1)_gen", "--order", "14", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    inner = rep["checks"][0]["report"]
    assert inner["lemma"] == "zeta(1,3,1)_gen" and inner["verdict"] == "pass"
    assert len(inner["coefficients"]) == 14


def test_cache_env_overrides_flag(tmp_path):
    env_file, flag_file = tmp_path / "env.jsonl", tmp_path / "flag.jsonl"
    env = dict(os.environ, SMZV_CACHE=str(env_file))
    subprocess.run([sys.executable, "-m", "smzv.cli", "eval", "--index", "2,3", "--m", "1",
                    "--numeric", "--prec", "20", "--cache", str(flag_file)],
                   check=True, env=env, capture_output=True)
    assert env_file.exists() and not flag_file.exists()


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "all", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["verdict"] == "pass"
    names = {c["name"] for c in rep["checks"]}
    assert {"wordA", "I1rev", "regshwd", "astsh", "antipode", "main0", "intro-t2",
            "Z(xyxy)_gen", "series-preamble"} <= names
