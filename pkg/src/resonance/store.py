"""Append-only newline-delimited JSON store of computed invariants.

Records sharing a key must carry equal values whatever method produced
them; a conflicting write raises :class:`StoreConflict` and loading a file
that already contains a conflict raises it too.
"""

from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from .arrangement import format_rational
from .errors import StoreConflict

PROVENANCES = ("nbc", "finite-field", "oracle", "fit", "formula", "rank")


def make_key(S: Sequence, n: int, quantity: str, **extra) -> str:
    parts = {"S": [format_rational(v) for v in S], "n": n, "q": quantity}
    parts.update({k: v for k, v in sorted(extra.items()) if v is not None})
    return json.dumps(parts, sort_keys=True, separators=(",", ":"))


@dataclass
class InvariantRecord:
    key: str
    value: object
    provenance: str
    timestamp: str

    def to_json(self) -> dict:
        return {"key": self.key, "value": self.value, "provenance": self.provenance,
                "timestamp": self.timestamp}


class Store:
    def __init__(self, path: Optional[os.PathLike] = None, strict: bool = True):
        self.path = Path(path) if path else None
        self.strict = strict
        self.index: Dict[str, List[InvariantRecord]] = {}
        self._lock = threading.Lock()
        if self.path and self.path.exists():
            self._load()

    def _load(self) -> None:
        with open(self.path) as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                data = json.loads(line)
                rec = InvariantRecord(data["key"], data["value"], data["provenance"], data["timestamp"])
                if self.strict:
                    self._check(rec)
                self.index.setdefault(rec.key, []).append(rec)

    def _check(self, rec: InvariantRecord) -> None:
        for old in self.index.get(rec.key, []):
            if _canonical(old.value) != _canonical(rec.value):
                raise StoreConflict(rec.key, old.value, rec.value)

    def get(self, key: str):
        recs = self.index.get(key)
        return recs[0].value if recs else None

    def records(self, key: str) -> List[InvariantRecord]:
        return list(self.index.get(key, []))

    def put(self, key: str, value, provenance: str) -> InvariantRecord:
        """Record a value; a repeat of an identical record is not appended."""
        value = json.loads(json.dumps(value))
        with self._lock:
            for old in self.index.get(key, []):
                if old.provenance == provenance and _canonical(old.value) == _canonical(value):
                    return old
            rec = InvariantRecord(key, value, provenance,
                                  datetime.now(timezone.utc).isoformat(timespec="seconds"))
            self._check(rec)
            self.index.setdefault(key, []).append(rec)
            if self.path:
                self.path.parent.mkdir(parents=True, exist_ok=True)
                with open(self.path, "a") as fh:
                    fh.write(json.dumps(rec.to_json(), sort_keys=True) + "\n")
            return rec

    def verify(self) -> List[StoreConflict]:
        """All key conflicts present in the index."""
        problems = []
        for key, recs in self.index.items():
            for r in recs[1:]:
                if _canonical(r.value) != _canonical(recs[0].value):
                    problems.append(StoreConflict(key, recs[0].value, r.value))
        return problems


def _canonical(value) -> str:
    return json.dumps(value, sort_keys=True)


def default_store_path() -> Optional[str]:
    return os.environ.get("STORE_PATH")
