"""Dev harness: print structural fingerprints for each corpus construction."""

from __future__ import annotations

import sys
import time
from collections import Counter

sys.path.insert(0, "tools")
sys.path.insert(0, "src")

from constructions import corpus_constructions

from zcverify.groups import (
    conjugacy_classes,
    dixon_character_table,
    group_from_generators,
    lower_central_series,
    normal_subgroups,
    structure_predicates,
)


def main(names):
    cons = corpus_constructions()
    for name, (deg, gens, desc) in cons.items():
        if names and name not in names:
            continue
        t0 = time.time()
        try:
            g = group_from_generators(deg, gens, name)
        except Exception as e:  # noqa: BLE001
            print(f"{name}: CONSTRUCTION FAILED: {e}")
            continue
        cd = conjugacy_classes(g)
        hist = Counter((c.order) for c in cd.classes)
        flags = structure_predicates(g)
        lcs = lower_central_series(g)
        ns = normal_subgroups(g)
        line = (
            f"{name}: |G|={g.order} classes={cd.n_classes()} "
            f"orders={dict(sorted(hist.items()))} exp={flags.exponent} "
            f"|L|={lcs[-1].order} normals={sorted(h.order for h in ns)}"
        )
        try:
            tab = dixon_character_table(g)
            line += f" degrees={Counter(tab.degrees).most_common()}"
        except Exception as e:  # noqa: BLE001
            line += f" TABLE FAILED: {e}"
        line += (
            f" nilp={flags.nilpotent} cba={flags.cyclic_by_abelian}"
            f" dSyl={flags.derived_in_sylow} c2f={flags.c2_direct_factor}"
        )
        print(line, f"[{time.time()-t0:.1f}s]")
        sizes = [(c.label, c.size) for c in cd.classes]
        print("   classes:", sizes)


if __name__ == "__main__":
    main(set(sys.argv[1:]))
