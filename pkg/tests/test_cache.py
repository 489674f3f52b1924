import json

import pytest

from diagcoset.cache import (ENV_VAR, SCHEMA_VERSION, CharacterCache, decode_character,
                             default_cache_dir, encode_character)
from diagcoset.characters import clear_memo, graded_character
from diagcoset.lie import build_root_system

A1 = build_root_system("A1")
A2 = build_root_system("A2")


@pytest.fixture(autouse=True)
def _fresh_memo():
    clear_memo()
    yield
    clear_memo()


def test_round_trip():
    ch = graded_character(A2, 2, (1, 0), 3)
    assert decode_character(json.loads(json.dumps(encode_character(ch)))) == ch


def test_get_put(tmp_path):
    cache = CharacterCache(tmp_path)
    assert cache.get(A1, 1, (0,), 3) is None
    ch = graded_character(A1, 1, (0,), 5)
    cache.put(ch)
    assert cache.get(A1, 1, (0,), 5) == ch
    # deeper entries answer shallower requests; the caller truncates
    assert cache.get(A1, 1, (0,), 2) == ch
    assert cache.get(A1, 1, (0,), 6) is None
    assert cache.get(A1, 1, (1,), 2) is None


def test_deeper_entry_subsumes(tmp_path):
    cache = CharacterCache(tmp_path)
    cache.put(graded_character(A1, 1, (0,), 2))
    cache.put(graded_character(A1, 1, (0,), 4))
    cache.put(graded_character(A1, 1, (0,), 3))
    lines = cache.path_for("A1", 1).read_text().splitlines()
    assert len(lines) == 2
    assert json.loads(lines[1])["depth"] == 4


def test_file_layout(tmp_path):
    cache = CharacterCache(tmp_path)
    cache.put(graded_character(A1, 1, (1,), 2))
    cache.put(graded_character(A1, 1, (0,), 2))
    lines = cache.path_for("A1", 1).read_text().splitlines()
    header = json.loads(lines[0])
    assert header["schema_version"] == SCHEMA_VERSION
    recs = [json.loads(line) for line in lines[1:]]
    assert [r["weight"] for r in recs] == [[0], [1]]
    assert all(set(r) == {"schema_version", "algebra", "level", "weight", "depth", "payload"}
               for r in recs)
    # no temporary files left behind
    assert sorted(p.name for p in tmp_path.iterdir()) == ["characters-A1-k1.ndjson"]


def test_version_mismatch_invalidates(tmp_path):
    cache = CharacterCache(tmp_path)
    cache.put(graded_character(A1, 1, (0,), 3))
    path = cache.path_for("A1", 1)
    lines = path.read_text().splitlines()
    header = json.loads(lines[0])
    header["schema_version"] = SCHEMA_VERSION + 1
    path.write_text("\n".join([json.dumps(header)] + lines[1:]) + "\n")
    assert cache.get(A1, 1, (0,), 3) is None
    rec = json.loads(lines[1])
    rec["schema_version"] = SCHEMA_VERSION + 1
    path.write_text("\n".join([lines[0], json.dumps(rec)]) + "\n")
    assert cache.get(A1, 1, (0,), 3) is None


def test_corrupt_lines_are_skipped(tmp_path):
    cache = CharacterCache(tmp_path)
    ch = graded_character(A1, 1, (0,), 3)
    cache.put(ch)
    path = cache.path_for("A1", 1)
    path.write_text(path.read_text() + '{"truncated": \n')
    assert cache.get(A1, 1, (0,), 3) == ch
    path.write_text("not json\n")
    assert cache.get(A1, 1, (0,), 3) is None
    cache.put(ch)
    assert cache.get(A1, 1, (0,), 3) == ch


def test_graded_character_uses_cache(tmp_path):
    cache = CharacterCache(tmp_path)
    cold = graded_character(A2, 1, (0, 0), 3, cache=cache)
    clear_memo()
    assert cache.get(A2, 1, (0, 0), 3) == cold
    warm = graded_character(A2, 1, (0, 0), 2, cache=cache)
    assert warm == cold.truncate(2)


def test_default_dir(monkeypatch, tmp_path):
    monkeypatch.setenv(ENV_VAR, str(tmp_path / "x"))
    assert default_cache_dir() == tmp_path / "x"
    assert CharacterCache().directory == tmp_path / "x"
    monkeypatch.delenv(ENV_VAR)
    monkeypatch.setenv("XDG_CACHE_HOME", str(tmp_path))
    assert default_cache_dir() == tmp_path / "diagcoset"
