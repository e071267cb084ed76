"""Command-line interface.

Subcommands:
  classes  <group>              print conjugacy class data
  chartable <group>             print the exact character table
  help     <group> --order n    print HeLP+ solutions of one order
  run      <group>              full pipeline for one group
  corpus   run                  full pipeline over the shipped corpus
  report   diff <a.json> <b.json>   structural report comparison

Options: --decomp FILE attaches a decomposition matrix, --modular p enables
modular constraints at p, --store DIR (or ZCV_STORE) selects the store.
Exit codes: 0 verified/match, 2 unresolved, 3 input error, 4 inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys

from ..groups import conjugacy_classes, dixon_character_table
from ..help import solve_order
from .corpus import CorpusIndex, IngestError, ingest, packaged_corpus
from .match import report_diff
from .report import ReportStore
from .run import Pipeline, PipelineConfig

EXIT_OK = 0
EXIT_UNRESOLVED = 2
EXIT_INPUT = 3
EXIT_INCONCLUSIVE = 4


def _corpus(args) -> CorpusIndex:
    corpus = packaged_corpus()
    if getattr(args, "group_file", None):
        entry = ingest(args.group_file)
        corpus.entries[entry.name] = entry
    return corpus


def _entry(args, corpus: CorpusIndex):
    entry = corpus.get(args.group)
    if getattr(args, "decomp", None):
        with open(args.decomp, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
        entry.decomposition_files[int(obj["prime"])] = obj
    return entry


def _pipeline(args, corpus: CorpusIndex) -> Pipeline:
    store = ReportStore(getattr(args, "store", None))
    modular = tuple(args.modular) if getattr(args, "modular", None) else ()
    return Pipeline(PipelineConfig(store=store, corpus=corpus, modular_primes=modular))


def cmd_classes(args) -> int:
    corpus = _corpus(args)
    g = corpus.get(args.group).group()
    cd = conjugacy_classes(g)
    print(f"{g.name}: order {g.order}, {cd.n_classes()} classes")
    for i, c in enumerate(cd.classes):
        inv = cd.classes[cd.inverse_map[i]].label
        print(f"  {c.label:>4}  size {c.size:>3}  order {c.order:>3}  inverse {inv}")
    return EXIT_OK


def cmd_chartable(args) -> int:
    corpus = _corpus(args)
    entry = corpus.get(args.group)
    g = entry.group()
    pipe = _pipeline(args, corpus)
    table = pipe.table_for(g, entry)
    labels = [c.label for c in table.classes.classes]
    print(f"{g.name}: character table on classes {' '.join(labels)}")
    for i, row in enumerate(table.rows):
        cells = []
        for v in row:
            if v.is_rational():
                cells.append(str(v.rational_value()))
            else:
                cells.append(json_compact(v.to_json()))
        print(f"  {table.char_labels[i]:>4}: {'  '.join(cells)}")
    return EXIT_OK


def json_compact(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def cmd_help(args) -> int:
    corpus = _corpus(args)
    entry = _entry(args, corpus)
    g = entry.group()
    pipe = _pipeline(args, corpus)
    table = pipe.table_for(g, entry)
    modular = pipe._modular_data(table, entry)
    sols = solve_order(g, table, args.order, modular)
    print(f"{g.name}: {len(sols)} HeLP+ solutions of order {args.order}")
    for s in sols:
        print("  " + json_compact(s.to_json(table)))
    return EXIT_OK


def cmd_run(args) -> int:
    corpus = _corpus(args)
    entry = _entry(args, corpus)
    pipe = _pipeline(args, corpus)
    report = pipe.run_name(entry.name)
    print(json.dumps(report.to_json(), indent=1, sort_keys=True))
    return _status_code(report.status)


def cmd_corpus_run(args) -> int:
    corpus = _corpus(args)
    pipe = _pipeline(args, corpus)
    worst = EXIT_OK
    for name in corpus.names():
        report = pipe.run_name(name)
        print(f"{name}: {report.status}"
              + (f" ({report.sieve['reason']})" if report.sieve["eliminated"] else ""))
        worst = max(worst, _status_code(report.status))
    return worst


def cmd_report_diff(args) -> int:
    with open(args.a, "r", encoding="utf-8") as fh:
        a = json.load(fh)
    with open(args.b, "r", encoding="utf-8") as fh:
        b = json.load(fh)
    diff = report_diff(a, b)
    if diff is None:
        print("match")
        return EXIT_OK
    path, left, right = diff
    print(f"mismatch at {'.'.join(map(str, path))}: {left!r} != {right!r}")
    return EXIT_UNRESOLVED


def _status_code(status: str) -> int:
    return {"verified": EXIT_OK, "unresolved": EXIT_UNRESOLVED}.get(
        status, EXIT_INCONCLUSIVE
    )


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="zcv", description=__doc__)
    parser.add_argument("--store", help="report store directory (default ZCV_STORE or .zcv_store)")
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add_group_cmd(name, fn):
        p = sub.add_parser(name)
        p.add_argument("group")
        p.add_argument("--group-file", help="ingest an extra group JSON file")
        p.add_argument("--decomp", help="attach a decomposition matrix JSON file")
        p.add_argument("--modular", type=int, action="append",
                       help="enable modular constraints at this prime")
        p.set_defaults(fn=fn)
        return p

    add_group_cmd("classes", cmd_classes)
    add_group_cmd("chartable", cmd_chartable)
    p_help = add_group_cmd("help", cmd_help)
    p_help.add_argument("--order", type=int, required=True)
    add_group_cmd("run", cmd_run)

    p_corpus = sub.add_parser("corpus")
    corpus_sub = p_corpus.add_subparsers(dest="corpus_cmd", required=True)
    p_crun = corpus_sub.add_parser("run")
    p_crun.add_argument("--modular", type=int, action="append")
    p_crun.set_defaults(fn=cmd_corpus_run)

    p_report = sub.add_parser("report")
    report_sub = p_report.add_subparsers(dest="report_cmd", required=True)
    p_diff = report_sub.add_parser("diff")
    p_diff.add_argument("a")
    p_diff.add_argument("b")
    p_diff.set_defaults(fn=cmd_report_diff)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except IngestError as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except FileNotFoundError as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
