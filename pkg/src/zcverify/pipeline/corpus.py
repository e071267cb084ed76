"""Corpus ingestion: group files, character-table files, decomposition data.

File schemas (JSON):
  group:               {"name": str, "degree": int, "generators": [[1-based images]]}
  character table:     {"classes": [{"label","size","order"}], "powermaps": {...},
                        "inverse_map": [...], "characters":
                        [{"label", "values": [cyclotomic serializations]}]}
  decomposition matrix: {"prime": p, "ordinary": [labels], "brauer": [labels],
                        "matrix": [[int]]}
Schema violations are rejected with a field diagnostic; ingested tables must
pass exact orthogonality.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from importlib import resources

from ..exactmath import Cyclotomic
from ..groups import CharacterTable, GroupData, conjugacy_classes, group_from_generators
from ..groups.brauer import DecompositionMatrix


class IngestError(Exception):
    pass


@dataclass
class CorpusEntry:
    name: str
    group_file: dict
    table_file: dict | None = None
    decomposition_files: dict = field(default_factory=dict)  # prime -> dict
    expected: dict | None = None
    _group: GroupData | None = None

    def group(self) -> GroupData:
        if self._group is None:
            self._group = load_group(self.group_file)
        return self._group


@dataclass
class CorpusIndex:
    entries: dict

    def names(self) -> list[str]:
        return sorted(self.entries)

    def get(self, name: str) -> CorpusEntry:
        if name not in self.entries:
            raise IngestError(f"unknown corpus group {name!r}")
        return self.entries[name]


def load_group(obj) -> GroupData:
    for key in ("name", "degree", "generators"):
        if key not in obj:
            raise IngestError(f"group file missing field {key!r}")
    degree = int(obj["degree"])
    gens = []
    for gi, images in enumerate(obj["generators"]):
        if sorted(images) != list(range(1, degree + 1)):
            raise IngestError(f"generator {gi} is not a bijection on [1,{degree}]")
        gens.append(tuple(x - 1 for x in images))
    return group_from_generators(degree, gens, str(obj["name"]))


def load_table(group: GroupData, obj) -> CharacterTable:
    cd = conjugacy_classes(group)
    want = [(c.label, c.size, c.order) for c in cd.classes]
    got = [(str(c["label"]), int(c["size"]), int(c["order"])) for c in obj["classes"]]
    if want != got:
        raise IngestError(f"class metadata mismatch: file {got} vs computed {want}")
    rows = []
    for crow in obj["characters"]:
        values = [Cyclotomic.from_json(v) for v in crow["values"]]
        if len(values) != cd.n_classes():
            raise IngestError(f"character {crow.get('label')} has wrong arity")
        rows.append(values)
    if len(rows) != cd.n_classes():
        raise IngestError("character count must equal class count")
    table = CharacterTable(group, cd, rows)
    table.validate()
    return table


def load_decomposition(obj) -> DecompositionMatrix:
    try:
        return DecompositionMatrix.from_json(obj)
    except Exception as e:  # shape/rank diagnostics bubble up
        raise IngestError(f"bad decomposition matrix: {e}") from e


def ingest(path: str) -> CorpusEntry:
    """Validate one group file (with optional sibling data) into an entry."""
    with open(path, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    entry = CorpusEntry(name=str(obj["name"]), group_file=obj)
    entry.group()  # force validation
    return entry


def packaged_corpus() -> CorpusIndex:
    """The corpus shipped inside the package."""
    root = resources.files("zcverify") / "corpus"
    with (root / "index.json").open("r", encoding="utf-8") as fh:
        index = json.load(fh)
    entries = {}
    for item in index["groups"]:
        name = item["name"]
        with (root / item["file"]).open("r", encoding="utf-8") as fh:
            gobj = json.load(fh)
        entry = CorpusEntry(name=name, group_file=gobj, expected=item.get("expected"))
        for prime, fname in item.get("decomposition", {}).items():
            with (root / fname).open("r", encoding="utf-8") as fh:
                entry.decomposition_files[int(prime)] = json.load(fh)
        entries[name] = entry
    return CorpusIndex(entries=entries)


def golden_data() -> dict:
    root = resources.files("zcverify") / "corpus"
    with (root / "golden.json").open("r", encoding="utf-8") as fh:
        return json.load(fh)
