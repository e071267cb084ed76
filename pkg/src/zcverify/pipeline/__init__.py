"""Orchestration, persistence and the CLI."""

from .corpus import CorpusEntry, CorpusIndex, IngestError, golden_data, ingest, packaged_corpus
from .match import (
    GoldenMismatch,
    match_golden_group,
    match_up_to_table_automorphism,
    report_diff,
    solution_orbits,
    table_automorphisms,
)
from .report import OrderReport, ReportStore, VerdictReport
from .run import DEFAULT_BATTERY, Pipeline, PipelineConfig

__all__ = [
    "CorpusEntry",
    "CorpusIndex",
    "DEFAULT_BATTERY",
    "GoldenMismatch",
    "IngestError",
    "OrderReport",
    "Pipeline",
    "PipelineConfig",
    "ReportStore",
    "VerdictReport",
    "golden_data",
    "ingest",
    "match_golden_group",
    "match_up_to_table_automorphism",
    "packaged_corpus",
    "report_diff",
    "solution_orbits",
    "table_automorphisms",
]
