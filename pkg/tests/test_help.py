import itertools

from zcverify.groups import conjugacy_classes, dixon_character_table
from zcverify.help import (
    PowerChain,
    allowed_classes,
    build_constraint_system,
    enumerate_power_chains,
    multiplicity_forms,
    pa_power_congruence,
    power_congruence_filter,
    profile_of,
    solve_order,
)

ORACLE_BOX = 6
ORACLE_VAR_CAP = 4  # 13^4 direct evaluations per chain is the desk-scale cap


def brute_force_solutions(g, table, n):
    """Direct re-evaluation of every HeLP+ constraint over the eps box."""
    out = set()
    for chain in enumerate_power_chains(g, n):
        classes = allowed_classes(table, n)
        if len(classes) > ORACLE_VAR_CAP:
            raise RuntimeError("oracle box too large")
        forms = [
            multiplicity_forms(
                (lambda ri: lambda ci: table.rows[ri][ci])(ri),
                table.degrees[ri],
                classes,
                chain,
                n,
            )
            for ri in range(len(table.rows))
        ]
        for vals in itertools.product(range(-ORACLE_BOX, ORACLE_BOX + 1), repeat=len(classes)):
            if sum(vals) != 1:
                continue
            ok = True
            for rows, consts in forms:
                for l in range(n):
                    total = consts[l] + sum(c * v for c, v in zip(rows[l], vals))
                    if total % n != 0 or total < 0:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            eps = {ci: v for ci, v in zip(classes, vals) if v}
            if not pa_power_congruence(table, chain, n, eps):
                continue
            if not power_congruence_filter(table, chain, n, eps):
                continue
            out.add((chain.assignment, tuple(sorted(eps.items()))))
    return out


def test_oracle_equivalence_small_groups(corpus, tables):
    checked = 0
    for name in ("S3", "D8", "Q8", "A4", "S4", "C12"):
        g = corpus.get(name).group()
        tab = tables(name)
        exp = g.exponent()
        for n in [d for d in range(2, exp + 1) if exp % d == 0]:
            if len(allowed_classes(tab, n)) > ORACLE_VAR_CAP:
                continue
            want = brute_force_solutions(g, tab, n)
            got = {(s.chain.assignment, s.pa) for s in solve_order(g, tab, n)}
            assert got == want, (name, n)
            checked += 1
    assert checked >= 12


def test_s3_sign_character_multiplicities(tables, corpus):
    g = corpus.get("S3").group()
    tab = tables("S3")
    cd = tab.classes
    sign_row = next(
        i for i, d in enumerate(tab.degrees)
        if d == 1 and tab.rows[i][cd.label_to_idx["2a"]] == -1
    )
    chain = PowerChain(2, ())
    rows, consts = multiplicity_forms(
        lambda ci: tab.rows[sign_row][ci], 1, [cd.label_to_idx["2a"]], chain, 2
    )
    # trivial unit u = g in 2a: eigenvalue -1, so mu_1 = 1 and mu_0 = 0
    mu0 = (consts[0] + rows[0][0] * 1) // 2
    mu1 = (consts[1] + rows[1][0] * 1) // 2
    assert (mu0, mu1) == (0, 1)


def test_identity_character_profile(corpus, tables):
    g = corpus.get("S4").group()
    tab = tables("S4")
    triv = next(i for i, d in enumerate(tab.degrees)
                if d == 1 and all(v == 1 for v in tab.rows[i]))
    for n in (2, 3, 4):
        for s in solve_order(g, tab, n):
            mus = s.profile[triv]
            assert mus[0] == 1 and all(m == 0 for m in mus[1:])


def test_chains_prime_order_single_empty():
    from zcverify.groups import from_cycles, group_from_generators

    g = group_from_generators(3, [from_cycles(3, [(1, 2, 3)])], "C3")
    chains = enumerate_power_chains(g, 3)
    assert chains == [PowerChain(3, ())]


def test_chains_c6(corpus):
    g = corpus.get("C12").group()
    chains = enumerate_power_chains(g, 12)
    cd = conjugacy_classes(g)
    for chain in chains:
        m = chain.as_dict()
        assert set(m) == {2, 3, 4, 6}
        for e, ci in m.items():
            assert cd.classes[ci].order == e
        # power-compatibility across comparable divisors
        assert cd.power_class(m[6], 3) == m[2]
        assert cd.power_class(m[6], 2) == m[3]
        assert cd.power_class(m[4], 2) == m[2]


def test_no_chain_when_order_missing(corpus):
    g = corpus.get("S4").group()  # no elements of order 6
    assert enumerate_power_chains(g, 12) == []
    tab = dixon_character_table(g)
    assert solve_order(g, tab, 12) == []


def test_every_element_order_gives_present_trivial_solution(corpus, tables):
    for name in ("S3", "S4", "SG(48,30)"):
        g = corpus.get(name).group()
        tab = tables(name)
        cd = tab.classes
        for n in {c.order for c in cd.classes if c.order > 1}:
            sols = solve_order(g, tab, n)
            for ci, c in enumerate(cd.classes):
                if c.order != n:
                    continue
                chain = tuple(
                    sorted((e, cd.power_class(ci, n // e))
                           for e in range(2, n) if n % e == 0)
                )
                assert any(
                    s.trivial and s.pa == ((ci, 1),) and s.chain.assignment == chain
                    for s in sols
                ), (name, n, c.label)


def test_profile_row_sums_equal_degrees(corpus, tables):
    for name in ("S4", "SG(48,30)", "SG(72,40)"):
        tab = tables(name)
        g = corpus.get(name).group()
        for n in (2, 4, 6):
            if g.exponent() % n:
                continue
            for s in solve_order(g, tab, n):
                for ri, mus in enumerate(s.profile):
                    assert sum(mus) == tab.degrees[ri]
                    assert all(m >= 0 for m in mus)


def test_solution_sets_closed_under_table_automorphisms(corpus, tables):
    from zcverify.pipeline import table_automorphisms
    from zcverify.pipeline.match import apply_auto_to_solution, solution_key

    for name, n in (("SG(48,30)", 4), ("SG(72,40)", 6)):
        g = corpus.get(name).group()
        tab = tables(name)
        sols = [s.to_json(tab) for s in solve_order(g, tab, n)]
        keys = {solution_key(s) for s in sols}
        labels = [c.label for c in tab.classes.classes]
        l2i = {lab: i for i, lab in enumerate(labels)}
        for auto in table_automorphisms(tab):
            for s in sols:
                assert solution_key(apply_auto_to_solution(s, auto, labels, l2i)) in keys


def test_modular_data_only_restricts(corpus, tables):
    from zcverify.groups.brauer import DecompositionMatrix, brauer_values

    entry = corpus.get("SG(216,153)")
    g = entry.group()
    tab = tables("SG(216,153)")
    bd = brauer_values(tab, DecompositionMatrix.from_json(entry.decomposition_files[3]))
    for n in (2, 4):
        plain = {(s.chain.assignment, s.pa) for s in solve_order(g, tab, n)}
        modular = {(s.chain.assignment, s.pa) for s in solve_order(g, tab, n, [bd])}
        assert modular <= plain


def test_build_constraint_system_contains_trivial_point(corpus, tables):
    g = corpus.get("S4").group()
    tab = tables("S4")
    cd = tab.classes
    ci = cd.label_to_idx["4a"]
    chain = PowerChain(4, ((2, cd.power_class(ci, 2)),))
    built = build_constraint_system(g, tab, chain, 4)
    point = [0] * built.system.n_vars
    point[built.classes_idx.index(ci)] = 1
    prof = profile_of(tab, chain, 4, {ci: 1})
    for (label, ri, l), pos in built.form_of.items():
        if label == "ordinary":
            point[len(built.classes_idx) + pos] = prof[ri][l]
    assert built.system.satisfies(point)
