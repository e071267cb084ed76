import copy
import json
import os

import pytest

from zcverify.pipeline import (
    GoldenMismatch,
    IngestError,
    Pipeline,
    PipelineConfig,
    ReportStore,
    match_golden_group,
    packaged_corpus,
    report_diff,
    solution_orbits,
    table_automorphisms,
)
from zcverify.pipeline.corpus import load_group, load_table
from zcverify.pipeline.cli import main as cli_main


def test_packaged_corpus_loads(corpus):
    assert "SG(216,153)" in corpus.names()
    g = corpus.get("SG(48,30)").group()
    assert g.order == 48
    g2 = corpus.get("SG(216,153)").group()
    assert g2.order == 216


def test_ingest_rejects_bad_generators(tmp_path):
    bad = {"name": "broken", "degree": 3, "generators": [[1, 1, 2]]}
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(bad))
    from zcverify.pipeline import ingest

    with pytest.raises(IngestError):
        ingest(str(p))


def test_table_file_roundtrip_and_validation(corpus, tables):
    entry = corpus.get("S4")
    g = entry.group()
    tab = tables("S4")
    obj = tab.to_json()
    tab2 = load_table(g, obj)
    assert tab2.char_labels == tab.char_labels
    # corrupt one value: orthogonality must reject
    bad = copy.deepcopy(obj)
    bad["characters"][2]["values"][1] = {"conductor": 1, "terms": [[0, 99, 1]]}
    with pytest.raises(Exception):
        load_table(g, bad)


def test_decomposition_wrong_labels_rejected(corpus, tables):
    from zcverify.groups.brauer import DecompositionMatrix, DecompositionDataError, brauer_values

    tab = tables("S4")
    d = DecompositionMatrix(prime=3, ordinary_labels=["9z"], brauer_labels=["x"], matrix=[[1]])
    with pytest.raises(DecompositionDataError):
        brauer_values(tab, d)


def test_reports_reproducible_apart_from_timings(corpus, tmp_path):
    reports = []
    for i in range(2):
        pipe = Pipeline(
            PipelineConfig(store=ReportStore(str(tmp_path / f"s{i}")), corpus=corpus)
        )
        reports.append(pipe.run_name("SG(48,30)").to_json())
    a, b = reports
    assert report_diff(a, b) is None
    a_scrubbed = {k: v for k, v in a.items() if k != "timings"}
    b_scrubbed = {k: v for k, v in b.items() if k != "timings"}
    assert json.dumps(a_scrubbed, sort_keys=True) == json.dumps(b_scrubbed, sort_keys=True)


def test_report_diff_certificate():
    a = {"x": [1, {"y": 2}], "timings": {"t": 1}}
    b = {"x": [1, {"y": 3}], "timings": {"t": 9}}
    assert report_diff(a, a) is None
    path, left, right = report_diff(a, b)
    assert path == ["x", 1, "y"] and (left, right) == (2, 3)


def test_table_automorphisms_identity_and_structure(tables):
    tab = tables("SG(216,153)")
    autos = table_automorphisms(tab)
    assert tuple(range(tab.classes.n_classes())) in autos
    cd = tab.classes
    for auto in autos:
        for i, c in enumerate(cd.classes):
            assert cd.classes[auto[i]].order == c.order
            assert cd.classes[auto[i]].size == c.size
        for p, pm in cd.powermaps.items():
            for i in range(cd.n_classes()):
                assert auto[pm[i]] == pm[auto[i]]


def test_match_golden_rejects_corrupted_fragment(tables, golden):
    tab = tables("SG(216,153)")
    gold = copy.deepcopy(golden["SG(216,153)"])
    gold["orders"] = {}
    # sanity: the honest fragment matches
    match_golden_group(tab, gold, {})
    gold["table_fragment"]["rows"][3]["values"][2] = 7
    with pytest.raises(GoldenMismatch):
        match_golden_group(tab, gold, {})


def test_quotient_store_consistency(pipeline, corpus, store_dir):
    # every quotient used by a quotient-elimination witness must itself be
    # verified or have the fused candidate ruled out; spot-check by reloading
    rep = pipeline.run_name("SG(48,30)")
    assert rep.status == "verified"
    files = os.listdir(store_dir)
    assert any(f.startswith("SG(48,30)") and f.endswith(".json") for f in files)
    # quotient reports were persisted during recursion
    assert any("_N" in f or "N" in f for f in files)


def test_cli_classes_and_run(tmp_path, capsys):
    rc = cli_main(["--store", str(tmp_path / "s"), "classes", "S4"])
    out = capsys.readouterr().out
    assert rc == 0 and "order 24" in out.replace("order  24", "order 24")
    rc = cli_main(["--store", str(tmp_path / "s"), "run", "S3"])
    out = capsys.readouterr().out
    assert rc == 0
    assert json.loads(out)["status"] == "verified"


def test_cli_help_subcommand(tmp_path, capsys):
    rc = cli_main(["--store", str(tmp_path / "s"), "help", "SG(48,30)", "--order", "4"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "HeLP+ solutions of order 4" in out


def test_cli_unresolved_exit_code(tmp_path, capsys, store_dir):
    # reuse the session store so the run is cached and fast
    rc = cli_main(["--store", store_dir, "run", "SG(216,153)"])
    capsys.readouterr()
    assert rc == 2


def test_cli_report_diff(tmp_path, capsys, store_dir, pipeline):
    rep = pipeline.run_name("S4").to_json()
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    a.write_text(json.dumps(rep))
    rep2 = copy.deepcopy(rep)
    rep2["timings"] = {"total_s": 999}
    b.write_text(json.dumps(rep2))
    assert cli_main(["report", "diff", str(a), str(b)]) == 0
    rep2["status"] = "unresolved"
    b.write_text(json.dumps(rep2))
    assert cli_main(["report", "diff", str(a), str(b)]) == 2
    capsys.readouterr()


def test_cli_input_error(tmp_path, capsys):
    rc = cli_main(["--store", str(tmp_path / "s"), "run", "nonexistent-group"])
    capsys.readouterr()
    assert rc == 3
