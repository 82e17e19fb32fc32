import json
import warnings

import pytest

from qfoulkes import cache
from qfoulkes.characters import CHARACTERS, character, character_table
from qfoulkes.foulkes import clear_caches, f_q
from qfoulkes.hall_littlewood import KOSTKA, kostka_foulkes


@pytest.fixture(autouse=True)
def fresh_memo():
    cache.clear_memory()
    yield
    cache.clear_memory()


def _warm():
    character_table(6)
    character([3, 2], [2, 2, 1])
    kostka_foulkes([3, 1, 1], [2, 2, 1])
    kostka_foulkes([4, 1], [2, 1, 1, 1])


def _snapshot():
    return (dict(CHARACTERS.values), {n: t.tolist() for n, t in CHARACTERS.tables.items()},
            dict(KOSTKA.values))


def test_round_trip(tmp_path):
    _warm()
    before = _snapshot()
    path = tmp_path / "memo.jsonl"
    stored = cache.cache_store(path)
    assert stored.state == "stored" and stored.kostka == len(before[2])
    cache.clear_memory()
    assert not KOSTKA.values
    loaded = cache.cache_load(path)
    assert loaded.state == "loaded"
    assert _snapshot() == before


def test_missing_file_is_cold_start(tmp_path):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        status = cache.cache_load(tmp_path / "absent.jsonl")
    assert status.state == "missing" and not KOSTKA.values


def test_wrong_version_is_discarded(tmp_path):
    _warm()
    path = tmp_path / "memo.jsonl"
    cache.cache_store(path)
    lines = path.read_text().splitlines()
    lines[0] = json.dumps({"format": cache.FORMAT, "version": 999})
    path.write_text("\n".join(lines) + "\n")
    cache.clear_memory()
    with pytest.warns(cache.CacheWarning, match="version"):
        status = cache.cache_load(path)
    assert status.state == "discarded"
    assert not KOSTKA.values and not CHARACTERS.values and not CHARACTERS.tables


@pytest.mark.parametrize("damage", ["flip", "truncate", "garbage", "empty"])
def test_corruption_is_discarded(tmp_path, damage):
    _warm()
    path = tmp_path / "memo.jsonl"
    cache.cache_store(path)
    lines = path.read_text().splitlines()
    if damage == "flip":
        lines[1] = lines[1].replace('"v":', '"v":1')
    elif damage == "truncate":
        lines = lines[:-2]
    elif damage == "garbage":
        lines.insert(2, "{not json")
    else:
        lines = []
    path.write_text("\n".join(lines))
    cache.clear_memory()
    with pytest.warns(cache.CacheWarning):
        status = cache.cache_load(path)
    assert status.state == "discarded" and not KOSTKA.values


def test_cold_and_warm_values_agree(tmp_path):
    path = tmp_path / "memo.jsonl"
    clear_caches()
    cold = f_q(2, 4)
    cache.cache_store(path)
    cache.clear_memory()
    clear_caches()
    cache.cache_load(path)
    assert f_q(2, 4) == cold


def test_default_path_follows_environment(monkeypatch, tmp_path):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path / "x.jsonl"))
    assert cache.default_path() == tmp_path / "x.jsonl"
    monkeypatch.delenv(cache.ENV_VAR)
    monkeypatch.setenv("XDG_CACHE_HOME", str(tmp_path))
    assert cache.default_path() == tmp_path / "qfoulkes" / "memo.jsonl"


def test_io_errors_propagate(tmp_path):
    with pytest.raises(OSError):
        cache.cache_load(tmp_path)  # a directory
