import io
import json
import subprocess
import sys

import pytest

from qfoulkes import cache
from qfoulkes.cli import EXIT_FOUND, EXIT_OK, EXIT_USAGE, RunConfig, UsageError, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv, "--emit", "json", "--no-timing")
    return code, json.loads(out) if out else None


@pytest.fixture(autouse=True)
def no_env_cache(monkeypatch):
    monkeypatch.delenv(cache.ENV_VAR, raising=False)


def test_foulkes_q_prints_expansion():
    code, out, _ = call("foulkes", "--a", "2", "--b", "3", "--q")
    assert code == EXIT_OK
    assert "Schur positive" in out and "s[222]" in out


def test_foulkes_q0_is_s222():
    code, data = call_json("foulkes", "--a", "2", "--b", "3", "--q0")
    assert code == EXIT_OK and data["positive"]
    assert data["expansion"]["terms"] == [{"coeff": ["1"], "partition": "[2,2,2]"}]


def test_configs_prime_has_none():
    code, data = call_json("configs", "--n", "7")
    assert code == EXIT_OK and data["count"] == 0


def test_json_output_is_deterministic():
    first = call("foulkes", "--a", "2", "--b", "4", "--emit", "json", "--no-timing")
    second = call("foulkes", "--a", "2", "--b", "4", "--emit", "json", "--no-timing")
    assert first == second and "ms" not in json.loads(first[1])


def test_timing_present_by_default():
    _, out, _ = call("foulkes", "--a", "2", "--b", "3", "--emit", "json")
    assert "ms" in json.loads(out)


@pytest.mark.parametrize("argv", [
    ["foulkes", "--a", "3", "--b", "2"],
    ["foulkes", "--a", "2"],
    ["foulkes", "--a", "5", "--b", "5"],
    ["foulkes", "--a", "2", "--b", "3", "--q0", "--q1"],
    ["bogus"],
    ["configs"],
    ["suite", "nothing"],
    ["foulkes", "--a", "2", "--b", "3", "--jobs", "0"],
    ["dims", "--a", "3", "--b", "3"],
])
def test_usage_errors(argv):
    code, _, err = call(*argv)
    assert code == EXIT_USAGE and "usage error" in err


def test_degree_cap_can_be_raised():
    code, _, _ = call("foulkes", "--a", "3", "--b", "7", "--degree-cap", "10")
    assert code == EXIT_USAGE


def test_counterexample_exit_code():
    code, data = call_json("configs", "--guess", "--a", "2", "--b", "6", "--c", "3", "--d", "4", "--k", "1")
    assert code == EXIT_FOUND
    assert data["config_61"] and not data["holds_62"] and data["witness_62"]


def test_other_subcommands():
    assert call("stability", "--a", "2", "--b", "3")[0] == EXIT_OK
    assert call("manivel", "--a", "2", "--b", "3", "--q0")[0] == EXIT_OK
    code, data = call_json("dims", "--a", "2", "--b", "3")
    assert code == EXIT_OK and data["at_q1"] == "360"
    assert call("q1-forms", "--a", "2", "--b", "4")[0] == EXIT_OK
    assert call("q1-forms", "--a", "2", "--b", "6", "--c", "3", "--d", "4")[0] == EXIT_OK
    assert call("generalized", "--a", "2", "--b", "6", "--c", "3", "--d", "4")[0] == EXIT_OK
    assert call("foulkes", "--a", "3", "--b", "4", "--q1")[0] == EXIT_OK
    assert call("kostka", "--n", "5", "--verdict-only")[0] == EXIT_OK
    assert call("theta", "--a", "2", "--b", "5")[0] == EXIT_OK
    code, data = call_json("configs", "--n", "8", "--conj4")
    assert code == EXIT_OK and data["holds"]
    code, data = call_json("configs", "--n", "12", "--check-table", "--q")
    assert code == EXIT_OK and data["counts"]["12"] == 5


def test_suites():
    code, data = call_json("suite", "paper-goldens")
    assert code == EXIT_OK and all(r["ok"] for r in data["results"])
    code, data = call_json("suite", "tables", "--degree-cap", "10")
    assert code == EXIT_OK and len(data["results"]) == 30
    code, data = call_json("suite", "properties")
    assert code == EXIT_OK


def test_cache_flag_writes_file(tmp_path):
    path = tmp_path / "memo.jsonl"
    assert call("foulkes", "--a", "2", "--b", "3", "--cache", str(path))[0] == EXIT_OK
    assert cache.cache_load(path).state == "loaded"
    assert call("foulkes", "--a", "2", "--b", "3", "--cache", str(path))[0] == EXIT_OK


def test_run_config_validation():
    with pytest.raises(UsageError):
        RunConfig(degree_cap=0)
    with pytest.raises(UsageError):
        RunConfig(emit="xml")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qfoulkes", "foulkes", "--a", "2", "--b", "3", "--q0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "Schur positive" in proc.stdout
