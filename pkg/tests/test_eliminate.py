from zcverify.eliminate import (
    fuse_solution,
    lcs_resolve,
    partially_central_test,
    pzc3_resolve,
    vanishing_constraint_eliminate,
)
from zcverify.groups import (
    lower_central_series,
    normal_subgroups,
    quotient_with_fusion,
    structure_predicates,
)
from zcverify.help import solve_order


def _qexp(pipe, g, normals):
    out = {}
    for pos, h in enumerate(normals):
        if h.p_group is not None and 1 < h.order < g.order:
            q, _, _ = quotient_with_fusion(g, h)
            out[pos] = q.exponent()
    return out


def test_methods_never_eliminate_trivial_solutions(corpus, tables, pipeline):
    for name, orders in (("S4", (2, 3, 4)), ("SG(48,30)", (4, 6)), ("SG(72,40)", (6,))):
        g = corpus.get(name).group()
        tab = tables(name)
        normals = normal_subgroups(g)
        qexp = _qexp(pipeline, g, normals)
        lcs_last = lower_central_series(g)[-1].order
        for n in orders:
            for s in solve_order(g, tab, n):
                if not s.trivial:
                    continue
                assert partially_central_test(s, tab).method == "none"
                assert vanishing_constraint_eliminate(s, tab, normals, qexp).method == "none"
                # the quotient method must not contradict genuine elements
                out = pipeline._battery(
                    s, g, tab, normals, qexp, lcs_last,
                    structure_predicates(g).solvable, None,
                )
                assert out.method in ("none", "pzc3-resolved", "lcs-resolved")


def test_fusion_preserves_augmentation(corpus, tables):
    g = corpus.get("SG(48,30)").group()
    tab = tables("SG(48,30)")
    normals = normal_subgroups(g)
    for s in solve_order(g, tab, 4):
        if s.trivial:
            continue
        for h in normals:
            if not 1 < h.order < g.order:
                continue
            _, fusion, _ = quotient_with_fusion(g, h)
            fused = fuse_solution(s, tab, fusion, h.members)
            if fused is not None:
                _, fused_pa, _ = fused
                assert sum(fused_pa.values()) == 1


def test_pzc3_witness_rechecks(corpus, tables):
    g = corpus.get("SG(160,234)").group()
    tab = tables("SG(160,234)")
    normals = normal_subgroups(g)
    cd = tab.classes
    hits = 0
    for s in solve_order(g, tab, 2):
        if s.trivial:
            continue
        out = pzc3_resolve(s, tab, normals)
        if out.method != "pzc3-resolved":
            continue
        hits += 1
        w = out.witness_dict()
        h = next(x for x in normals if x.order == w["subgroup_order"] and x.p_group == w["prime"])
        for lab in w["support"]:
            assert cd.classes[cd.label_to_idx[lab]].rep in h.members
    assert hits >= 3


def test_vanishing_witness_rechecks(corpus, tables, pipeline):
    g = corpus.get("SG(72,40)").group()
    tab = tables("SG(72,40)")
    normals = normal_subgroups(g)
    qexp = _qexp(pipeline, g, normals)
    cd = tab.classes
    fired = 0
    for s in solve_order(g, tab, 6):
        if s.trivial:
            continue
        out = vanishing_constraint_eliminate(s, tab, normals, qexp)
        assert out.method == "vanishing-contradiction"
        fired += 1
        w = out.witness_dict()
        assert w["prime"] == 3 and w["subgroup_order"] == 9
        # recheck: the violating class has a strictly smaller p-part and a
        # nonzero partial augmentation
        ci = cd.label_to_idx[w["violating_class"]]
        assert cd.classes[ci].order % 3 != 0
        assert dict(s.pa)[ci] == w["violating_value"] != 0
    assert fired == 4


def test_lcs_resolution_rules(corpus):
    g153 = corpus.get("SG(216,153)").group()
    l153 = lower_central_series(g153)[-1].order
    assert l153 == 72
    for n in (2, 3, 4):
        assert lcs_resolve(g153, n, l153, True).method == "lcs-resolved"
    assert lcs_resolve(g153, 6, l153, True).method == "none"  # not a prime power
    g161 = corpus.get("SG(216,161)").group()
    l161 = lower_central_series(g161)[-1].order
    assert l161 == 27
    assert lcs_resolve(g161, 3, l161, True).method == "lcs-resolved"
    # p^4 | |G| blocks the rule
    assert lcs_resolve(g161, 2, l161, True).method == "none"


def test_battery_final_status_is_order_independent(corpus, store_dir):
    import itertools

    from zcverify.pipeline import Pipeline, PipelineConfig, ReportStore

    name = "SG(48,30)"
    base = None
    orders = [
        ("pzc3", "vanishing", "lcs", "quotient", "partially-central", "lattice"),
        ("partially-central", "quotient", "lcs", "vanishing", "pzc3", "lattice"),
        ("quotient", "partially-central", "pzc3", "vanishing", "lcs", "lattice"),
    ]
    for i, battery in enumerate(orders):
        from zcverify.pipeline import packaged_corpus

        pipe = Pipeline(
            PipelineConfig(
                store=ReportStore(f"{store_dir}/battery{i}"),
                corpus=packaged_corpus(),
                battery=battery,
            )
        )
        rep = pipe.run_name(name)
        resolved = {}
        for o in rep.orders:
            for sol, out in zip(o["solutions"], o["outcomes"]):
                if not sol["trivial"]:
                    key = (o["order"], tuple(sorted(sol["pa"].items())),
                           tuple(sorted(sol["chain"].items())))
                    resolved[key] = out["method"] != "none"
        if base is None:
            base = resolved
        else:
            assert resolved == base


def test_partially_central_modular_equals_exact_on_48_30(corpus, tables):
    g = corpus.get("SG(48,30)").group()
    tab = tables("SG(48,30)")
    sols = solve_order(g, tab, 4)
    nontrivial = [s for s in sols if not s.trivial][:2]
    trivial = [s for s in sols if s.trivial][:2]
    for s in nontrivial + trivial:
        fast = partially_central_test(s, tab).method
        slow = partially_central_test(s, tab, exact=True).method
        assert fast == slow
