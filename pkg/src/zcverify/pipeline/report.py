"""Verdict reports and the content-addressed report store.

Reports are plain JSON (schema 1) and reproducible: two runs over the same
inputs differ at most in the "timings" block. The store is a directory of
JSON files keyed by group name and input hash; the quotient method reads and
writes it to realize the induction on group order.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass, field

SCHEMA = 1


@dataclass
class OrderReport:
    order: int
    solutions: list            # serialized CandidateSolution dicts
    outcomes: list             # per-solution outcome dicts ({"method", "witness"})
    status: str                # "resolved" | "unresolved" | "inconclusive"
    note: str = ""

    def to_json(self):
        return {
            "order": self.order,
            "solutions": self.solutions,
            "outcomes": self.outcomes,
            "status": self.status,
            "note": self.note,
        }


@dataclass
class VerdictReport:
    group: str
    order: int
    sieve: dict
    orders: list = field(default_factory=list)   # list of OrderReport JSON dicts
    status: str = "verified"                     # "verified" | "unresolved" | "inconclusive"
    survivors: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)
    toolchain: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "schema": SCHEMA,
            "group": self.group,
            "group_order": self.order,
            "sieve": self.sieve,
            "orders": self.orders,
            "status": self.status,
            "survivors": self.survivors,
            "toolchain": self.toolchain,
            "timings": self.timings,
        }

    @staticmethod
    def from_json(obj) -> "VerdictReport":
        r = VerdictReport(
            group=obj["group"],
            order=obj["group_order"],
            sieve=obj["sieve"],
            orders=obj["orders"],
            status=obj["status"],
            survivors=obj.get("survivors", []),
            timings=obj.get("timings", {}),
            toolchain=obj.get("toolchain", {}),
        )
        return r


def stable_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def content_key(name: str, payload) -> str:
    digest = hashlib.sha256(stable_json(payload).encode()).hexdigest()[:16]
    safe = "".join(c if c.isalnum() or c in "(),-" else "_" for c in name)
    return f"{safe}-{digest}"


class ReportStore:
    """Directory of report JSON files; ZCV_STORE overrides the location."""

    def __init__(self, path: str | None = None):
        self.path = path or os.environ.get("ZCV_STORE") or ".zcv_store"
        os.makedirs(self.path, exist_ok=True)
        self._cache: dict[str, dict] = {}

    def _file(self, key: str) -> str:
        return os.path.join(self.path, key + ".json")

    def load(self, key: str):
        if key in self._cache:
            return self._cache[key]
        try:
            with open(self._file(key), "r", encoding="utf-8") as fh:
                obj = json.load(fh)
        except FileNotFoundError:
            return None
        self._cache[key] = obj
        return obj

    def save(self, key: str, obj) -> None:
        self._cache[key] = obj
        tmp = self._file(key) + ".tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(obj, fh, sort_keys=True, indent=1)
        os.replace(tmp, self._file(key))
