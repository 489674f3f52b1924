"""On-disk cache of graded characters.

One newline-delimited JSON file per (algebra, level).  The first line is a
header carrying the schema version; every further line is one record::

    {"schema_version": 1, "algebra": "E8", "level": 1,
     "weight": [0, ...], "depth": 2, "payload": {"grades": [[[[0, ...], 1]], ...]}}

A record of depth N answers every request of depth <= N.  Writes go to a
temporary file in the same directory followed by ``os.replace``, so readers
never see a partial file.
"""
from __future__ import annotations

import json
import logging
import os
import tempfile
from pathlib import Path

from .characters import GradedCharacter

SCHEMA_VERSION = 1
ENV_VAR = "DIAGCOSET_CACHE_DIR"
_HEADER = {"format": "diagcoset-character-cache", "schema_version": SCHEMA_VERSION}

log = logging.getLogger(__name__)


def default_cache_dir():
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "diagcoset"


def encode_character(ch):
    return {
        "schema_version": SCHEMA_VERSION,
        "algebra": ch.algebra,
        "level": ch.level,
        "weight": list(ch.base),
        "depth": ch.depth,
        "payload": {"grades": [[[list(lam), m] for lam, m in sorted(g.items())]
                               for g in ch.grades]},
    }


def decode_character(rec):
    grades = tuple({tuple(lam): m for lam, m in g} for g in rec["payload"]["grades"])
    if len(grades) != rec["depth"] + 1:
        raise ValueError("grade count does not match depth")
    return GradedCharacter(rec["algebra"], rec["level"], tuple(rec["weight"]),
                           rec["depth"], grades)


class CharacterCache:
    def __init__(self, directory=None):
        self.directory = Path(directory) if directory is not None else default_cache_dir()

    def path_for(self, algebra, level):
        return self.directory / f"characters-{algebra}-k{level}.ndjson"

    def _records(self, path):
        try:
            lines = path.read_text().splitlines()
        except FileNotFoundError:
            return []
        if not lines:
            return []
        try:
            header = json.loads(lines[0])
        except json.JSONDecodeError:
            log.warning("ignoring cache file with unreadable header: %s", path)
            return []
        if header.get("schema_version") != SCHEMA_VERSION:
            return []
        out = []
        for line in lines[1:]:
            try:
                rec = json.loads(line)
            except json.JSONDecodeError:
                continue
            if rec.get("schema_version") == SCHEMA_VERSION:
                out.append(rec)
        return out

    def get(self, rs, k, lam, depth):
        best = None
        for rec in self._records(self.path_for(rs.name, k)):
            if tuple(rec["weight"]) == tuple(lam) and rec["depth"] >= depth:
                if best is None or rec["depth"] > best["depth"]:
                    best = rec
        if best is None:
            return None
        try:
            return decode_character(best)
        except (KeyError, TypeError, ValueError):
            return None

    def put(self, ch):
        path = self.path_for(ch.algebra, ch.level)
        self.directory.mkdir(parents=True, exist_ok=True)
        keep = [rec for rec in self._records(path)
                if not (tuple(rec["weight"]) == ch.base and rec["depth"] <= ch.depth)]
        if any(tuple(rec["weight"]) == ch.base for rec in keep):
            return  # a deeper record already exists
        keep.append(encode_character(ch))
        keep.sort(key=lambda rec: (rec["weight"], rec["depth"]))
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-", suffix=".ndjson")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(json.dumps(_HEADER, sort_keys=True) + "\n")
                for rec in keep:
                    fh.write(json.dumps(rec, sort_keys=True, separators=(",", ":")) + "\n")
            os.chmod(tmp, 0o644)
            os.replace(tmp, path)
        except BaseException:
            try:
                os.unlink(tmp)
            except FileNotFoundError:
                pass
            raise
