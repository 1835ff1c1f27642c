"""
CLI tests

Functions:
    test_help():
        No command and "help" both print the usage text
    test_job_config_*():
        Validation and JSON round trips of JobConfig
    test_series_*():
        Report contents, exit codes for bad primes, additive curves and levels
    test_verify_*():
        Exit codes of the checkers
    test_cache_*():
        Build, list, corrupt and clear the symbol cache
    test_curves_list():
        The bundled table with cusp form dimensions
    test_manifest_dependencies_are_imported():
        Every runtime dependency in pyproject.toml is imported by the package
"""

import json
import os
import re
from pathlib import Path

import pandas as pd
import pytest
from pydantic import ValidationError

from padic_ell.cli import JobConfig, expand_jobs, verdict_exit_code
from padic_ell.main import main
from padic_ell.utils.const import CHECK_FAILED, ENV_CACHE, ENV_OUTPUT, FAILURE, INDETERMINATE, SUCCESS
from padic_ell.utils.log import log
from padic_ell.utils.paths import Paths


def run(capsys, *args):
    code = main(args=list(args))
    out, err = capsys.readouterr()
    return code, out, err


def test_help(capsys):
    code, out, _ = run(capsys)
    assert code == SUCCESS
    assert "Usage:" in out
    code, out, _ = run(capsys, "help")
    assert code == SUCCESS
    assert "verify" in out


def test_job_config_round_trip():
    job = JobConfig(command="verify", curve="11a1", p=5, psi="teich:5", check="fe", level=3, t_order=2)
    assert job.psi == "teich:1"
    assert JobConfig.from_json(job.to_json()) == job
    assert JobConfig.from_json(json.dumps(job.to_json())) == job


@pytest.mark.parametrize(
    "overrides, message",
    [
        ({"p": 2}, "p must be odd"),
        ({"p": 9}, "p must be prime"),
        ({"level": 0}, "level must be at least 1"),
        ({"t_order": -1}, "t_order must be non-negative"),
        ({"alpha": "root3"}, "alpha must be one of"),
        ({"psi": "kron:5"}, "divides D"),
        ({"format": "xml"}, "format must be one of"),
        ({"level": 1, "t_order": 1}, "p^(n-1) > t_order"),
        ({"command": "verify"}, "verify needs a check name"),
    ],
)
def test_job_config_rejects(overrides, message):
    fields = {"command": "series", "curve": "11a1", "p": 5}
    fields.update(overrides)
    with pytest.raises(ValidationError) as info:
        JobConfig(**fields)
    assert message in str(info.value)


def test_expand_jobs():
    jobs = expand_jobs("series", curve="11a1", p=[5, 7], psi=["triv", "teich:2"], level=2, t_order=1)
    assert [(job.p, job.psi) for job in jobs] == [(5, "triv"), (5, "teich:2"), (7, "triv"), (7, "teich:2")]


def test_series_report(capsys, tmp_path, maps_11a1):
    output = tmp_path / "series.json"
    code, _, _ = run(capsys, "series", "--curve", "11a1", "--p", "5", "--psi", "triv", "--level", "4",
                     "--output", str(output))
    assert code == SUCCESS
    document = json.loads(output.read_text())
    assert document["curve"] == "11a1"
    assert document["level"] == 4
    assert document["kappa_gamma"] == "1+p"
    assert [c["k"] for c in document["coefficients"]] == [0, 1, 2, 3, 4]


def test_series_deterministic(capsys, tmp_path, maps_11a1):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for path in paths:
        assert run(capsys, "series", "--curve", "11a1", "--p", "5", "--level", "3", "--t-order", "2",
                   "--output", str(path))[0] == SUCCESS
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_series_csv(capsys, tmp_path, maps_11a1):
    output = tmp_path / "series.csv"
    code, _, _ = run(capsys, "series", "--curve", "11a1", "--p", "5", "--level", "3", "--t-order", "2",
                     "--format", "csv", "--output", str(output))
    assert code == SUCCESS
    frame = pd.read_csv(output)
    assert list(frame["k"]) == [0, 1, 2]
    assert set(frame["psi"]) == {"triv"}


def test_series_even_prime(capsys):
    code, _, err = run(capsys, "series", "--curve", "11a1", "--p", "2")
    assert code == FAILURE
    assert "p must be odd" in err


def test_series_additive(capsys):
    code, _, err = run(capsys, "series", "--curve", "27a1", "--p", "3", "--level", "2", "--t-order", "0")
    assert code == FAILURE
    assert "AdditiveReduction" in err


def test_series_unknown_curve(capsys):
    code, _, err = run(capsys, "series", "--curve", "99z9", "--p", "5")
    assert code == FAILURE
    assert "unknown curve label" in err


def test_series_parallel_jobs(capsys, tmp_path, maps_11a1):
    output = tmp_path / "jobs.json"
    code, _, _ = run(capsys, "series", "--curve", "11a1", "--p", "5", "7", "--level", "2", "--t-order", "1",
                     "--jobs", "2", "--output", str(output))
    assert code == SUCCESS
    documents = json.loads(output.read_text())
    assert [d["p"] for d in documents] == [5, 7]


def test_taylor_report(capsys, maps_11a1):
    code, out, _ = run(capsys, "taylor", "--curve", "11a1", "--p", "5", "--level", "3", "--t-order", "2")
    assert code == SUCCESS
    document = json.loads(out)
    assert document["variable"] == "s-1"
    assert len(document["coefficients"]) == 3


def test_verify_fe(capsys, maps_11a1):
    code, out, _ = run(capsys, "verify", "fe", "--curve", "11a1", "--p", "5", "--psi", "triv", "--level", "4")
    assert code == SUCCESS
    report = json.loads(out)
    assert report["verdict"] == "pass"
    assert report["inputs"]["Q"] == 11


def test_verify_fe_nontrivial_characters(capsys, maps_11a1):
    code, out, _ = run(capsys, "verify", "fe", "--curve", "11a1", "--p", "5", "--psi", "teich:1", "kron:-4",
                       "--level", "4", "--t-order", "3")
    assert code == SUCCESS
    reports = json.loads(out)
    assert [r["inputs"]["psi"] for r in reports] == ["teich:1", "kron:-4"]
    assert all(r["verdict"] == "pass" and r["inputs"]["Q"] == 11 for r in reports)


def test_verify_mains(capsys, maps_11a1):
    code, out, _ = run(capsys, "verify", "mains", "--curve", "11a1", "--p", "5", "--level", "4")
    assert code == SUCCESS
    report = json.loads(out)
    assert report["inputs"]["m"] == 0
    # mu = 1 for 11a1 at 5
    assert report["details"]["leading_valuation"] == "1"


def test_verify_mu_bar(capsys, maps_11a1):
    code, out, _ = run(capsys, "verify", "mu-bar", "--curve", "11a1", "--p", "5", "--psi", "teich:1",
                       "--level", "3", "--t-order", "3")
    assert code == SUCCESS
    report = json.loads(out)
    assert report["details"]["mu"] == report["details"]["mu_bar"]


def test_verify_basechange_needs_field(capsys):
    code, _, err = run(capsys, "verify", "basechange", "--curve", "11a1", "--p", "5")
    assert code == FAILURE
    assert "field" in err


def test_verdict_exit_codes():
    assert verdict_exit_code(["pass", "pass"]) == SUCCESS
    assert verdict_exit_code(["pass", "indeterminate"]) == INDETERMINATE
    assert verdict_exit_code(["indeterminate", "fail"]) == CHECK_FAILED


@pytest.fixture
def private_cache(tmp_path):
    previous = os.environ.get(ENV_CACHE)
    os.environ[ENV_CACHE] = str(tmp_path / "cache")
    Paths().refresh_paths()
    yield tmp_path / "cache"
    if previous is None:
        os.environ.pop(ENV_CACHE, None)
    else:
        os.environ[ENV_CACHE] = previous
    Paths().refresh_paths()


def test_cache_round_trip(capsys, private_cache):
    assert run(capsys, "cache", "build", "--curve", "11a1")[0] == SUCCESS
    code, out, _ = run(capsys, "cache", "list")
    assert code == SUCCESS
    assert "11a1_plus.json" in out and "11a1_minus.json" in out
    assert run(capsys, "cache", "load", "--curve", "11a1")[0] == SUCCESS

    path = private_cache / "11a1_plus.json"
    document = json.loads(path.read_text())
    document["body"]["scale"] = "12345"
    path.write_text(json.dumps(document))
    code, _, err = run(capsys, "cache", "load", "--curve", "11a1")
    log.info(f"corrupt cache load: {err.strip()}")
    assert code == FAILURE
    assert "CacheCorrupt" in err

    assert run(capsys, "cache", "clear")[0] == SUCCESS
    assert not list(private_cache.glob("*.json"))


def test_cache_load_miss(capsys, private_cache):
    code, out, _ = run(capsys, "cache", "load", "--curve", "11a1")
    assert code == FAILURE
    assert "not cached" in out


def test_curves_list(capsys):
    code, out, _ = run(capsys, "curves", "list", "--dimensions", "--format", "json")
    assert code == SUCCESS
    rows = {row["label"]: row for row in json.loads(out)}
    assert {"11a1", "14a1", "27a1", "37a1"} <= set(rows)
    assert rows["11a1"]["dim_S2"] == 1
    assert rows["37a1"]["dim_S2"] == 2


def test_series_output_dir(capsys, tmp_path, monkeypatch, maps_11a1):
    monkeypatch.setenv(ENV_OUTPUT, str(tmp_path / "reports"))
    code, _, _ = run(capsys, "series", "--curve", "11a1", "--p", "5", "--level", "2", "--t-order", "1",
                     "--output", "bare.json")
    assert code == SUCCESS
    assert json.loads((tmp_path / "reports" / "bare.json").read_text())["p"] == 5


def test_manifest_dependencies_are_imported():
    root = Path(__file__).resolve().parents[2]
    manifest = (root / "pyproject.toml").read_text()
    block = re.search(r"^dependencies = \[(.*?)^\]", manifest, re.S | re.M).group(1)
    names = [re.split(r"[<>=\[ ]", spec)[0] for spec in re.findall(r'"([^"]+)"', block)]
    modules = {"pyyaml": "yaml"}
    sources = "\n".join(path.read_text() for path in (root / "padic_ell").rglob("*.py"))
    for name in names:
        if name in ("build", "setuptools", "wheel"):
            continue
        module = modules.get(name, name.replace("-", "_"))
        assert re.search(rf"^\s*(import|from) {module}\b", sources, re.M), f"{name} is never imported"
