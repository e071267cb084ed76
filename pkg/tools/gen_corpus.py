"""Generate the shipped corpus: group files, index, decomposition data.

Run from the repository root:  python3 tools/gen_corpus.py
Regenerates src/zcverify/corpus/*.json deterministically from the
constructions and re-derives the decomposition-matrix character labels from
the computed table (golden.json is maintained by hand next to them).
"""

from __future__ import annotations

import json
import os
import sys

sys.path.insert(0, "tools")
sys.path.insert(0, "src")

from constructions import corpus_constructions

from zcverify.groups import dixon_character_table, group_from_generators

OUT = os.path.join("src", "zcverify", "corpus")

EXPECTED_ORDERS = {
    "S3": 6, "D8": 8, "Q8": 8, "A4": 12, "S4": 24, "C12": 12, "C2xS4": 48,
    "SG(48,30)": 48, "SG(72,40)": 72, "SG(96,65)": 96, "SG(96,186)": 96,
    "SG(96,227)": 96, "SG(144,117)": 144, "SG(144,119)": 144, "SG(150,5)": 150,
    "SG(160,234)": 160, "SG(168,43)": 168, "SG(192,955)": 192, "SG(200,43)": 200,
    "SG(216,153)": 216, "SG(216,161)": 216, "SG(240,91)": 240,
}

DROPPED = {"SG(216,33)", "SG(216,35)", "SG(216,37)"}


def group_filename(name: str) -> str:
    safe = name.replace("(", "_").replace(")", "").replace(",", "_")
    return f"group_{safe}.json"


def main() -> None:
    os.makedirs(OUT, exist_ok=True)
    cons = corpus_constructions()
    index = {"groups": []}
    for name, (deg, gens, desc) in cons.items():
        if name in DROPPED:
            continue
        g = group_from_generators(deg, gens, name)
        assert g.order == EXPECTED_ORDERS[name], (name, g.order)
        obj = {
            "name": name,
            "description": desc,
            "degree": deg,
            "generators": [[x + 1 for x in p] for p in gens],
        }
        fname = group_filename(name)
        with open(os.path.join(OUT, fname), "w", encoding="utf-8") as fh:
            json.dump(obj, fh, indent=1, sort_keys=True)
        item = {"name": name, "file": fname}
        if name == "SG(216,153)":
            item["decomposition"] = {"3": "decomp_SG_216_153_p3.json"}
        index["groups"].append(item)

    # decomposition matrix for SG(216,153) at p = 3: rows for the trivial,
    # the rational degree-2, the degree-3 and the rational degree-8 character
    deg, gens, _ = cons["SG(216,153)"]
    g = group_from_generators(deg, gens, "SG(216,153)")
    table = dixon_character_table(g)

    def rational_row(degree: int) -> str:
        for i, lab in enumerate(table.char_labels):
            if table.degrees[i] == degree and all(v.is_rational() for v in table.rows[i]):
                return lab
        raise AssertionError(f"no rational degree-{degree} character")

    ordinary = [rational_row(1), rational_row(2), rational_row(3), rational_row(8)]
    decomp = {
        "prime": 3,
        "ordinary": ordinary,
        "brauer": ["1a", "2a", "3a"],
        "matrix": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 2, 1]],
    }
    with open(os.path.join(OUT, "decomp_SG_216_153_p3.json"), "w", encoding="utf-8") as fh:
        json.dump(decomp, fh, indent=1, sort_keys=True)

    index["groups"].sort(key=lambda it: it["name"])
    with open(os.path.join(OUT, "index.json"), "w", encoding="utf-8") as fh:
        json.dump(index, fh, indent=1, sort_keys=True)
    print("corpus written:", len(index["groups"]), "groups")
    print("decomposition ordinary labels:", ordinary)


if __name__ == "__main__":
    main()
