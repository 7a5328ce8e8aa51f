import json
import subprocess
import sys

import pytest

from hyperlin import cli, suites
from hyperlin.errors import ConfigError, UnknownSuiteError


def test_catalog():
    names = [s["name"] for s in suites.list_suites()]
    assert len(names) == 9
    assert {"fourier", "ccr", "all"} <= set(names)
    assert names[-1] == "all"


def test_unknown_suite():
    with pytest.raises(UnknownSuiteError):
        suites.run_suite(suites.SuiteConfig(suite="nope"))
    assert cli.main(["--suite", "nope"]) == 2


@pytest.mark.parametrize(
    "kwargs", [{"tolerance": 0.0}, {"tolerance": -1.0}, {"points": 100}, {"half_width": -1.0}, {"backend": "int"}]
)
def test_bad_config(kwargs):
    with pytest.raises(ConfigError):
        suites.run_suite(suites.SuiteConfig(suite="weyl", **kwargs))


def test_bad_grid_flag_exit_code():
    assert cli.main(["--suite", "weyl", "--grid-points", "10"]) == 2


def test_algebra_report_contains_witness():
    report = suites.run_suite(suites.SuiteConfig(suite="algebra"))
    assert report.passed
    check = next(c for c in report.checks if c.id == "hyperbolic_norm_not_multiplicative")
    assert check.measured["defect"] == pytest.approx(2.0)


def test_eigen_report_negative_discriminant_example():
    report = suites.run_suite(suites.SuiteConfig(suite="eigen", samples=300))
    check = next(c for c in report.checks if c.id == "example_delta_negative")
    assert check.passed
    assert "NoEigenvalues vs t_map eigenvalues +-1" in check.description


def test_report_schema_and_stability():
    config = suites.SuiteConfig(suite="weyl", seed=3)
    a = suites.run_suite(config).to_json(stable=True)
    b = suites.run_suite(config).to_json(stable=True)
    assert a == b
    data = json.loads(a)
    assert data["schema"] == 1 and data["pass"] is True
    assert "run" not in data
    assert set(data["checks"][0]) == {"id", "description", "anchor", "measured", "expected", "pass"}
    assert "run" in json.loads(suites.run_suite(config).to_json())


def test_overall_pass_requires_every_check():
    report = suites.VerificationReport("demo")
    report.add("a", "ok", "x", {}, None, True)
    assert report.passed
    report.add("b", "bad", "x", {}, None, False)
    assert not report.passed
    assert "FAIL" in report.to_text()


def test_float_backend(monkeypatch):
    monkeypatch.setenv(suites.BACKEND_ENV, "float")
    assert suites.backend_from_env() == "float"
    report = suites.run_suite(suites.SuiteConfig(suite="axioms", backend="float"))
    assert report.passed


def test_algebra_and_matrix_files(tmp_path):
    algebra_file = tmp_path / "split_quaternions.json"
    # split-quaternions: e1^2 = -1, e2^2 = e3^2 = +1; norm not multiplicative
    algebra_file.write_text(json.dumps({
        "name": "split-H", "dim": 4,
        "triples": [[1, 1, 0, -1], [2, 2, 0, 1], [3, 3, 0, 1],
                    [1, 2, 3, 1], [2, 1, 3, -1], [2, 3, 1, -1], [3, 2, 1, 1], [3, 1, 2, 1], [1, 3, 2, -1]],
    }))
    matrix_file = tmp_path / "m.json"
    matrix_file.write_text(json.dumps([[[2, 0], [1, 1]], [[1, -1], [0, 0]]]))
    config = suites.SuiteConfig(suite="algebra", algebra_file=str(algebra_file), samples=500)
    report = suites.run_suite(config)
    custom = next(c for c in report.checks if c.id == "custom_algebra_multiplicativity")
    assert custom.measured["multiplicative"] is False
    report = suites.run_suite(suites.SuiteConfig(suite="eigen", matrix_file=str(matrix_file), samples=200))
    m = next(c for c in report.checks if c.id == "matrix_file")
    assert m.passed and m.measured["classification"] == "TwoRealPlusTwoHyperbolic"


def test_missing_matrix_file_is_config_error(tmp_path):
    with pytest.raises(ConfigError):
        suites.run_suite(suites.SuiteConfig(suite="eigen", matrix_file=str(tmp_path / "absent.json"), samples=10))


def test_cli_writes_stable_output(tmp_path):
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    for out in (out1, out2):
        proc = subprocess.run(
            [sys.executable, "-m", "hyperlin", "--suite", "delta", "--format", "json", "--output", str(out)],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0, proc.stderr
        assert "PASS" in proc.stdout
    assert out1.read_bytes() == out2.read_bytes()


def test_cli_text_format(capsys):
    assert cli.main(["--suite", "weyl", "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert "suite: weyl" in out and "checks passed" in out


def test_cli_list(capsys):
    assert cli.main(["--list"]) == 0
    assert len(capsys.readouterr().out.strip().splitlines()) == 9


def test_argparse_usage_error_exit_code():
    with pytest.raises(SystemExit) as info:
        cli.main(["--format", "xml"])
    assert info.value.code == 2
