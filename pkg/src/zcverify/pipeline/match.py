"""Table automorphisms, solution orbits, and golden-data matching.

Class labels are convention-dependent, so every comparison against external
data goes through a label-binding search: a bijection constrained by element
orders, printed table fragments, chains and whole solution sets at once. For
in-engine comparisons a table automorphism is a class permutation preserving
orders, sizes, power maps and the row set of the character table.
"""

from __future__ import annotations

from itertools import permutations

from ..exactmath import Cyclotomic
from ..groups import CharacterTable


def table_automorphisms(table: CharacterTable, cap: int = 20000) -> list[tuple]:
    """All class permutations preserving orders, sizes, power maps and the
    set of character rows. The identity is always first."""
    cd = table.classes
    r = cd.n_classes()
    blocks: dict[tuple, list[int]] = {}
    for i, c in enumerate(cd.classes):
        blocks.setdefault((c.order, c.size), []).append(i)
    col_fp = []
    for k in range(r):
        col_fp.append(frozenset((str(table.rows[i][k].sort_key()), 0) for i in range(r)))
    # candidate images per class, filtered by the column fingerprint
    cands = []
    for i in range(r):
        key = (cd.classes[i].order, cd.classes[i].size)
        cands.append([j for j in blocks[key] if col_fp[j] == col_fp[i]])
    primes = sorted(cd.powermaps)
    row_set = {tuple(v.sort_key() for v in row) for row in table.rows}
    autos: list[tuple] = []

    perm = [-1] * r
    used = [False] * r

    def consistent(i: int, j: int) -> bool:
        for p in primes:
            pi = cd.powermaps[p][i]
            pj = cd.powermaps[p][j]
            if perm[pi] >= 0 and perm[pi] != pj:
                return False
        ii, ij = cd.inverse_map[i], cd.inverse_map[j]
        if perm[ii] >= 0 and perm[ii] != ij:
            return False
        return True

    def full_check() -> bool:
        for row in table.rows:
            imaged = [None] * r
            for k in range(r):
                imaged[perm[k]] = row[k]
            if tuple(v.sort_key() for v in imaged) not in row_set:
                return False
        return True

    def rec(i: int):
        if len(autos) >= cap:
            return
        if i == r:
            if full_check():
                autos.append(tuple(perm))
            return
        for j in cands[i]:
            if not used[j] and consistent(i, j):
                perm[i] = j
                used[j] = True
                rec(i + 1)
                used[j] = False
                perm[i] = -1

    rec(0)
    assert autos and autos[0] == tuple(range(r)), "identity must be an automorphism"
    return autos


def solution_key(sol_json: dict) -> tuple:
    return (
        tuple(sorted(sol_json["chain"].items())),
        tuple(sorted(sol_json["pa"].items())),
    )


def apply_auto_to_solution(sol_json: dict, auto: tuple, labels: list[str], label_to_idx) -> dict:
    pa = {labels[auto[label_to_idx[lab]]]: v for lab, v in sol_json["pa"].items()}
    chain = {e: labels[auto[label_to_idx[lab]]] for e, lab in sol_json["chain"].items()}
    out = dict(sol_json)
    out["pa"] = pa
    out["chain"] = chain
    return out


def solution_orbits(table: CharacterTable, sol_jsons: list[dict]) -> list[list[int]]:
    """Partition solution dicts (same order) into table-automorphism orbits."""
    autos = table_automorphisms(table)
    labels = [c.label for c in table.classes.classes]
    l2i = {lab: i for i, lab in enumerate(labels)}
    keys = [solution_key(s) for s in sol_jsons]
    key_pos = {k: i for i, k in enumerate(keys)}
    parent = list(range(len(sol_jsons)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for i, s in enumerate(sol_jsons):
        for auto in autos:
            img = solution_key(apply_auto_to_solution(s, auto, labels, l2i))
            if img in key_pos:
                union(i, key_pos[img])
    orbits: dict[int, list[int]] = {}
    for i in range(len(sol_jsons)):
        orbits.setdefault(find(i), []).append(i)
    return [sorted(v) for _, v in sorted(orbits.items())]


# -- golden matching ---------------------------------------------------------


class GoldenMismatch(Exception):
    pass


def _label_order(label: str) -> int:
    digits = "".join(ch for ch in label if ch.isdigit())
    return int(digits)


def _value_from_golden(v) -> Cyclotomic:
    if isinstance(v, (int, float)):
        return Cyclotomic.from_rational(int(v))
    return Cyclotomic.from_json(v)


def _sol_matches(gsol: dict, s: dict, binding: dict) -> bool:
    if {binding[l]: v for l, v in gsol["pa"].items()} != s["pa"]:
        return False
    loose = set(gsol.get("chain_loose", []))
    for e, lab in gsol["chain"].items():
        if e in loose:
            if e not in s["chain"]:
                return False
        elif s["chain"].get(e) != binding[lab]:
            return False
    return True


def match_golden_group(
    table: CharacterTable, golden: dict, computed_orders: dict, validators=None
):
    """Bind golden labels to computed classes so that every golden fact holds.

    golden: {"table_fragment": {...}?, "orders": {n: block}} where a block has
    one of:
      "solutions":        full nontrivial list, matched one-to-one;
      "orbit_solutions":  one representative per orbit, matched orbit-wise;
      "count_only_orbits": only the orbit count is compared.
    computed_orders maps int n -> {"solutions": [sol dicts], "orbits":
    [[indices]]}. `validators` optionally maps (n, golden idx) to a predicate
    on the computed solution dict; a pairing only counts when the predicate
    holds, so method facts can constrain the search. Returns (binding,
    matches) where matches[(n, golden idx)] is the solution key of a matched
    computed solution. Raises GoldenMismatch.
    """
    validators = validators or {}
    cd = table.classes
    labels = [c.label for c in cd.classes]
    golden_labels = set()
    frag = golden.get("table_fragment")
    if frag:
        golden_labels.update(frag["classes"])
    for _, block in golden.get("orders", {}).items():
        for sol in block.get("solutions", []) + block.get("orbit_solutions", []):
            golden_labels.update(sol["pa"])
            loose = set(sol.get("chain_loose", []))
            golden_labels.update(
                lab for e, lab in sol["chain"].items() if e not in loose
            )
    golden_labels = sorted(golden_labels)
    cands = {
        lab: [i for i, c in enumerate(cd.classes) if c.order == _label_order(lab)]
        for lab in golden_labels
    }
    for lab, cs in cands.items():
        if not cs:
            raise GoldenMismatch(f"no computed class of order {_label_order(lab)} for {lab!r}")

    def fragment_ok(binding) -> bool:
        if not frag:
            return True
        col_idx = {lab: table.classes.label_to_idx[binding[lab]] for lab in frag["classes"]}
        cols = [col_idx[lab] for lab in frag["classes"]]
        used_rows = set()
        for grow in frag["rows"]:
            want = [_value_from_golden(v) for v in grow["values"]]
            found = None
            for ri, row in enumerate(table.rows):
                if ri in used_rows or table.degrees[ri] != grow["degree"]:
                    continue
                if all(row[c] == w for c, w in zip(cols, want)):
                    found = ri
                    break
            if found is None:
                return False
            used_rows.add(found)
        return True

    def block_match(binding, n: int, block: dict, matches: dict) -> bool:
        data = computed_orders.get(n, {"solutions": [], "orbits": []})
        computed = data["solutions"]
        orbits = data["orbits"]
        if "count_only_orbits" in block:
            if len(orbits) != block["count_only_orbits"]:
                return False
            return True
        want = block.get("solutions")
        if want is not None:
            if len(want) != len(computed):
                return False
            matched = set()
            for gi, gsol in enumerate(want):
                val = validators.get((n, gi))
                hit = None
                for s in computed:
                    if solution_key(s) in matched:
                        continue
                    if _sol_matches(gsol, s, binding) and (val is None or val(s)):
                        hit = solution_key(s)
                        break
                if hit is None:
                    return False
                matched.add(hit)
                matches[(n, gi)] = hit
            return True
        want = block.get("orbit_solutions")
        if want is not None:
            if len(want) != len(orbits):
                return False
            taken = set()
            for gi, gsol in enumerate(want):
                val = validators.get((n, gi))
                hit = None
                for oi, members in enumerate(orbits):
                    if oi in taken:
                        continue
                    for mi in members:
                        s = computed[mi]
                        if _sol_matches(gsol, s, binding) and (val is None or val(s)):
                            hit = (oi, solution_key(s))
                            break
                    if hit:
                        break
                if hit is None:
                    return False
                taken.add(hit[0])
                matches[(n, gi)] = hit[1]
            return True
        return True

    def all_blocks(binding, matches) -> bool:
        for n_str, block in golden.get("orders", {}).items():
            if not block_match(binding, int(n_str), block, matches):
                return False
        return True

    by_order: dict[int, list[str]] = {}
    for lab in golden_labels:
        by_order.setdefault(_label_order(lab), []).append(lab)
    order_keys = sorted(by_order)

    def rec(oi: int, binding: dict):
        if oi == len(order_keys):
            matches: dict = {}
            if fragment_ok(binding) and all_blocks(binding, matches):
                return dict(binding), matches
            return None
        o = order_keys[oi]
        labs = by_order[o]
        pool = [labels[i] for i in cands[labs[0]]]
        for image in permutations(pool, len(labs)):
            for lab, img in zip(labs, image):
                binding[lab] = img
            res = rec(oi + 1, binding)
            if res is not None:
                return res
            for lab in labs:
                del binding[lab]
        return None

    result = rec(0, {})
    if result is None:
        raise GoldenMismatch(
            f"no label binding reconciles the golden data (labels {golden_labels})"
        )
    return result


def match_up_to_table_automorphism(
    table: CharacterTable, report: dict, golden: dict, validators=None
):
    """Align a run report against golden data by label-binding search.

    The report's nontrivial solutions per order are compared under every
    admissible class-label binding; survivors are compared through the
    golden "survivors" block when present. Returns (binding, matches) or
    raises GoldenMismatch with a certificate.
    """
    computed: dict[int, dict] = {}
    for oblock in report.get("orders", []):
        sols = [s for s in oblock["solutions"] if not s["trivial"]]
        computed[oblock["order"]] = {
            "solutions": sols,
            "orbits": oblock.get("nontrivial_orbits", [list(range(len(sols)))]),
        }
    golden2 = dict(golden)
    orders = {
        n: block
        for n, block in golden.get("orders", {}).items()
        if not block.get("post_quotient")
    }
    surv: dict[int, list] = {}
    for s in report.get("survivors", []):
        surv.setdefault(s["order"], []).append(s)
    if "survivors" in golden or "survivor_count_only" in golden:
        golden_surv = golden.get("survivors", {})
        count_only = golden.get("survivor_count_only", {})
        for n_str, gsols in golden_surv.items():
            n = int(n_str)
            ss = surv.get(n, [])
            computed[10_000 + n] = {"solutions": ss, "orbits": solution_orbits(table, ss)}
            orders[str(10_000 + n)] = {"orbit_solutions": gsols}
        for n_str, cnt in count_only.items():
            n = int(n_str)
            ss = surv.get(n, [])
            computed[10_000 + n] = {"solutions": ss, "orbits": solution_orbits(table, ss)}
            orders[str(10_000 + n)] = {"count_only_orbits": cnt}
        for n, ss in surv.items():
            if (
                str(n) not in golden_surv
                and str(n) not in count_only
                and ss
            ):
                raise GoldenMismatch(f"unexpected survivors at order {n}")
    elif surv:
        raise GoldenMismatch(f"survivors present but none expected: {sorted(surv)}")
    golden2["orders"] = orders
    return match_golden_group(table, golden2, computed, validators)


def report_diff(a: dict, b: dict):
    """Structural diff of two reports, ignoring timings.

    Returns None on match or a (path, left, right) certificate.
    """

    def scrub(r):
        r = dict(r)
        r.pop("timings", None)
        return r

    def walk(x, y, path):
        if isinstance(x, dict) and isinstance(y, dict):
            for k in sorted(set(x) | set(y)):
                if k not in x or k not in y:
                    return (path + [k], x.get(k), y.get(k))
                got = walk(x[k], y[k], path + [k])
                if got:
                    return got
            return None
        if isinstance(x, list) and isinstance(y, list):
            if len(x) != len(y):
                return (path + ["len"], len(x), len(y))
            for i, (xi, yi) in enumerate(zip(x, y)):
                got = walk(xi, yi, path + [i])
                if got:
                    return got
            return None
        if x != y:
            return (path, x, y)
        return None

    return walk(scrub(a), scrub(b), [])
