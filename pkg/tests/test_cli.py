import json

import pytest

import main
from exceptions import InexactDivisionError

GF4 = '{"p": 2, "m": 2}'
GF16 = '{"p": 2, "m": 4}'
C1_GENERATOR = '[["1", "a", "1"], ["1", "a", "0"]]'


def _run(capsys, argv):
    code = main.main(argv)
    return code, capsys.readouterr().out


def test_enumerate_from_generator(capsys):
    code, out = _run(capsys, ["enumerate", "--field", GF4, "--generator", C1_GENERATOR])
    assert code == main.EXIT_OK
    report = json.loads(out)
    assert report["command"] == "enumerate"
    assert report["status"] == "pass"
    assert report["params"] == {"q": "2", "m": "2", "n": "3", "k": "2"}
    rank, hamming = report["results"]["enumerators"]
    assert rank["coeffs"] == ["1", "3", "12", "0"]
    assert hamming["coeffs"] == ["1", "3", "3", "9"]


def test_reference_code_by_name(capsys):
    code, out = _run(capsys, ["enumerate", "--field", GF4, "--code-name", "c1"])
    assert code == main.EXIT_OK
    assert json.loads(out)["results"]["enumerators"][0]["coeffs"] == ["1", "3", "12", "0"]


def test_dual_command(capsys):
    code, out = _run(capsys, ["dual", "--field", GF4, "--code-name", "c1"])
    assert code == main.EXIT_OK
    results = json.loads(out)["results"]
    assert results["dual_code"]["k"] == 1
    assert results["enumerators"][0]["coeffs"] == ["1", "0", "3", "0"]


def test_macwilliams_command(capsys):
    code, out = _run(capsys, ["macwilliams", "--field", GF4, "--code-name", "c1"])
    assert code == main.EXIT_OK
    report = json.loads(out)
    assert report["results"]["input"]["coeffs"] == ["1", "3", "12", "0"]
    assert report["results"]["output"]["coeffs"] == ["1", "0", "3", "0"]
    assert report["checks"] == [{"name": "rank_kernel_form", "status": "pass", "detail": ""}]

    code, out = _run(capsys, ["macwilliams", "--field", GF4, "--code-name", "c1", "--metric", "hamming"])
    assert code == main.EXIT_OK
    assert json.loads(out)["results"]["output"]["coeffs"] == ["1", "0", "3", "0"]


def test_moments_command(capsys):
    code, out = _run(capsys, ["moments", "--field", GF16, "--code-name", "c2"])
    assert code == main.EXIT_OK
    rows = json.loads(out)["results"]["moments"]
    assert [row["lhs"] for row in rows] == ["256", "240", "35", "15", "1"]
    assert all(row["equal"] for row in rows)

    code, out = _run(capsys, ["moments", "--field", GF16, "--code-name", "c2", "--nu", "2"])
    assert [row["nu"] for row in json.loads(out)["results"]["moments"]] == [2]


def test_mrd_command(capsys):
    code, out = _run(capsys, ["mrd", "--field", GF16, "--n", "4", "--k", "2"])
    assert code == main.EXIT_OK
    assert json.loads(out)["results"]["distribution"]["coeffs"] == ["1", "0", "0", "225", "30"]


def test_verify_text_format(capsys):
    code, out = _run(capsys, ["verify", "--field", GF4, "--code-name", "c1", "--format", "text"])
    assert code == main.EXIT_OK
    assert out.startswith("command: verify\nstatus: pass\n")
    assert "[PASS] rank_macwilliams" in out
    assert "[SKIPPED] mrd_distribution" in out


def test_output_is_deterministic(capsys):
    argv = ["verify", "--field", GF4, "--generator", C1_GENERATOR]
    _, first = _run(capsys, argv)
    _, second = _run(capsys, argv)
    assert first == second


def test_job_file_and_output_dir(capsys, tmp_path):
    spec = tmp_path / "job.json"
    spec.write_text(json.dumps({"command": "enumerate", "field": {"p": 3, "m": 2}, "code": {"name": "c1"}}))
    out_dir = tmp_path / "reports"
    code, out = _run(capsys, ["enumerate", "--spec", str(spec), "--output-dir", str(out_dir)])
    assert code == main.EXIT_OK
    saved = (out_dir / "enumerate-report.json").read_text()
    assert saved == out
    assert json.loads(saved)["results"]["enumerators"][0]["coeffs"] == ["1", "8", "72", "0"]


def test_flags_override_job_file(capsys, tmp_path):
    spec = tmp_path / "job.json"
    spec.write_text(json.dumps({"command": "enumerate", "field": {"p": 3, "m": 2}, "code": {"name": "c1"}}))
    code, out = _run(capsys, ["enumerate", "--spec", str(spec), "--field", GF4])
    assert code == main.EXIT_OK
    assert json.loads(out)["params"]["q"] == "2"


def test_empty_generator_needs_length(capsys):
    code, out = _run(capsys, ["enumerate", "--field", GF4, "--generator", "[]", "--n", "2"])
    assert code == main.EXIT_OK
    assert json.loads(out)["results"]["enumerators"][0]["coeffs"] == ["1", "0", "0"]
    code, _ = _run(capsys, ["enumerate", "--field", GF4, "--generator", "[]"])
    assert code == main.EXIT_PARSE


@pytest.mark.parametrize(
    "argv",
    [
        ["enumerate", "--field", GF4, "--generator", "[[1, 2"],
        ["enumerate", "--field", GF4, "--code-name", "c9"],
        ["enumerate", "--field", '{"p": 6, "m": 2}', "--code-name", "c1"],
        ["enumerate", "--field", GF4, "--generator", '[["1", "b"]]'],
        ["enumerate", "--field", GF4, "--generator", '[["1", "a"], ["a", "a^2"]]'],
        ["enumerate", "--code-name", "c1"],
        ["mrd", "--field", GF4, "--n", "3", "--k", "2"],
    ],
)
def test_parse_errors_exit_with_two(capsys, argv):
    code, out = _run(capsys, argv)
    assert code == main.EXIT_PARSE
    assert out == ""


def test_guard_exits_with_three(capsys):
    code, out = _run(capsys, ["enumerate", "--field", GF4, "--code-name", "c1", "--guard", "15"])
    assert code == main.EXIT_GUARD
    assert out == ""


def test_inexact_division_exits_with_one(capsys, monkeypatch):
    def failing_run(job, save_manager=None):
        raise InexactDivisionError(7, 4)

    monkeypatch.setattr(main, "run", failing_run)
    code, _ = _run(capsys, ["macwilliams", "--field", GF4, "--code-name", "c1", "--no-validate"])
    assert code == main.EXIT_VIOLATION


def test_build_job_merges_flags():
    args = main.build_arg_parser().parse_args(
        ["verify", "--field", GF4, "--generator", "[]", "--n", "3", "--workers", "2", "--no-validate"]
    )
    raw = main.build_job(args)
    assert raw["command"] == "verify"
    assert raw["code"] == {"generator": [], "n": 3}
    assert "n" not in raw
    assert raw["options"] == {"workers": 2, "validate_input": False}


def test_job_file_with_top_level_generator(capsys, tmp_path):
    spec = tmp_path / "code.json"
    spec.write_text('{"field":{"p":2,"s":1,"m":2},"generator":[["1","a^1","1"],["1","a^1","0"]]}')
    code, out = _run(capsys, ["enumerate", "--spec", str(spec)])
    assert code == main.EXIT_OK
    report = json.loads(out)
    assert report["params"] == {"q": "2", "m": "2", "n": "3", "k": "2"}
    assert report["results"]["enumerators"][0]["coeffs"] == ["1", "3", "12", "0"]

    code, out = _run(capsys, ["enumerate", "--spec", str(spec), "--code-name", "c1"])
    assert code == main.EXIT_OK
    assert json.loads(out)["results"]["enumerators"][0]["coeffs"] == ["1", "3", "12", "0"]
