"""Pipeline orchestration: sieve -> HeLP+ -> elimination battery -> lattice.

A run consults and updates the persistent store; quotient recursion runs the
full pipeline on each proper quotient (strictly smaller order), realizing the
induction on group order. Reports are deterministic apart from timings.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .. import __version__
from ..exactmath import UnboundedSystemError
from ..exactmath.cyclo import divisors
from ..groups import (
    CharacterTable,
    GroupData,
    conjugacy_classes,
    dixon_character_table,
    lower_central_series,
    normal_subgroups,
    quotient_with_fusion,
    structure_predicates,
)
from ..groups.brauer import BrauerData, brauer_values
from ..eliminate import (
    EliminationOutcome,
    lcs_resolve,
    partially_central_test,
    pzc3_resolve,
    quotient_eliminate,
    vanishing_constraint_eliminate,
)
from ..help import CandidateSolution, solve_order
from ..latticemethod import UnsupportedLatticeCase, lattice_contradiction
from ..sieve import sieve_group
from .corpus import CorpusEntry, CorpusIndex, load_decomposition, load_table
from .match import solution_orbits
from .report import OrderReport, ReportStore, VerdictReport, content_key

DEFAULT_BATTERY = (
    "pzc3",
    "vanishing",
    "lcs",
    "quotient",
    "partially-central",
    "lattice",
)


@dataclass
class PipelineConfig:
    store: ReportStore
    corpus: CorpusIndex | None = None
    modular_primes: tuple = ()
    battery: tuple = DEFAULT_BATTERY
    known_good: frozenset = frozenset()


class Pipeline:
    def __init__(self, config: PipelineConfig):
        self.config = config
        self._tables: dict[str, CharacterTable] = {}
        self._running: set[str] = set()

    # -- table/report plumbing ------------------------------------------

    def group_key(self, g: GroupData) -> str:
        payload = {"degree": g.degree, "generators": [list(p) for p in g.generators]}
        return content_key(g.name, payload)

    def table_for(self, g: GroupData, entry: CorpusEntry | None = None) -> CharacterTable:
        key = self.group_key(g)
        if key not in self._tables:
            if entry is not None and entry.table_file is not None:
                self._tables[key] = load_table(g, entry.table_file)
            else:
                self._tables[key] = dixon_character_table(g)
        return self._tables[key]

    # -- main entry points ------------------------------------------------

    def run_name(self, name: str) -> VerdictReport:
        entry = self.config.corpus.get(name)
        return self.run_group(entry.group(), entry)

    def run_group(self, g: GroupData, entry: CorpusEntry | None = None) -> VerdictReport:
        key = self.group_key(g)
        cached = self.config.store.load(key)
        if cached is not None:
            return VerdictReport.from_json(cached)
        if key in self._running:
            raise RuntimeError(f"recursive pipeline cycle on {g.name}")
        self._running.add(key)
        try:
            report = self._run(g, entry)
        finally:
            self._running.discard(key)
        self.config.store.save(key, report.to_json())
        return report

    # -- the pipeline proper ----------------------------------------------

    def _run(self, g: GroupData, entry: CorpusEntry | None) -> VerdictReport:
        t0 = time.time()
        verdict = sieve_group(
            g,
            known_good=self.config.known_good,
            complement_check=lambda h: self.run_group(h).status == "verified",
        )
        report = VerdictReport(
            group=g.name,
            order=g.order,
            sieve={"eliminated": verdict.eliminated, "reason": verdict.reason},
            toolchain={"engine": f"zcverify {__version__}"},
        )
        if verdict.eliminated:
            report.status = "verified"
            report.timings = {"total_s": round(time.time() - t0, 3)}
            return report

        table = self.table_for(g, entry)
        cd = table.classes
        modular = self._modular_data(table, entry)
        normals = normal_subgroups(g)
        flags = structure_predicates(g)
        lcs_last = lower_central_series(g)[-1].order
        quotient_exponents = {
            pos: self._quotient_exponent(g, h)
            for pos, h in enumerate(normals)
            if h.p_group is not None and 1 < h.order < g.order
        }
        decomp_data = self._decomposition(entry)

        status = "verified"
        survivors = []
        exp = flags.exponent
        for n in [d for d in divisors(exp) if d > 1]:
            t_order = time.time()
            try:
                sols = solve_order(g, table, n, modular)
            except UnboundedSystemError as e:
                report.orders.append(
                    OrderReport(n, [], [], "inconclusive", note=str(e)).to_json()
                )
                status = "inconclusive"
                continue
            outcomes = []
            unresolved_here = []
            for sol in sols:
                if sol.trivial:
                    outcomes.append(EliminationOutcome.none().to_json())
                    continue
                out = self._battery(sol, g, table, normals, quotient_exponents,
                                    lcs_last, flags.solvable, decomp_data)
                outcomes.append(out.to_json())
                if out.method == "none":
                    unresolved_here.append(sol)
            sol_jsons = [s.to_json(table) for s in sols]
            orbit_sets = solution_orbits(
                table, [s.to_json(table) for s in sols if not s.trivial]
            )
            order_status = "unresolved" if unresolved_here else "resolved"
            note = ""
            if self._lattice_applicable(n) and decomp_data is None:
                note = "lattice method skipped: no decomposition data"
            report.orders.append(
                OrderReport(
                    n,
                    sol_jsons,
                    outcomes,
                    order_status,
                    note=note,
                ).to_json()
            )
            report.orders[-1]["nontrivial_orbits"] = orbit_sets
            report.timings[f"order_{n}_s"] = round(time.time() - t_order, 3)
            if unresolved_here:
                status = "unresolved" if status != "inconclusive" else status
                survivors.extend(s.to_json(table) for s in unresolved_here)
        report.status = status
        report.survivors = survivors
        report.timings["total_s"] = round(time.time() - t0, 3)
        return report

    def _modular_data(self, table: CharacterTable, entry: CorpusEntry | None):
        if entry is None or not self.config.modular_primes:
            return []
        out = []
        for p in self.config.modular_primes:
            obj = entry.decomposition_files.get(p)
            if obj is not None:
                out.append(brauer_values(table, load_decomposition(obj)))
        return out

    def _decomposition(self, entry: CorpusEntry | None):
        if entry is None:
            return None
        out = {}
        for p, obj in entry.decomposition_files.items():
            out[p] = load_decomposition(obj)
        return out or None

    def _lattice_applicable(self, n: int) -> bool:
        # cyclic order q*3 with q prime, q != 3 (the supported reduction)
        if n % 3 != 0:
            return False
        q = n // 3
        if q < 2 or q == 3:
            return False
        return all(q % d for d in range(2, q))

    def _quotient_exponent(self, g: GroupData, h) -> int:
        q, _, _ = self._quotient(g, h)
        return q.exponent()

    def _quotient(self, g: GroupData, h):
        key = (self.group_key(g), tuple(sorted(h.members)))
        cache = getattr(self, "_quotient_cache", None)
        if cache is None:
            cache = self._quotient_cache = {}
        if key not in cache:
            cache[key] = quotient_with_fusion(g, h)
        return cache[key]

    def _battery(
        self,
        sol: CandidateSolution,
        g: GroupData,
        table: CharacterTable,
        normals,
        quotient_exponents,
        lcs_last: int,
        solvable: bool,
        decomp_data,
    ) -> EliminationOutcome:
        for method in self.config.battery:
            out = EliminationOutcome.none()
            if method == "pzc3":
                out = pzc3_resolve(sol, table, normals)
            elif method == "vanishing":
                out = vanishing_constraint_eliminate(
                    sol, table, normals, quotient_exponents
                )
            elif method == "lcs":
                out = lcs_resolve(g, sol.n, lcs_last, solvable)
            elif method == "quotient":
                out = quotient_eliminate(sol, table, normals, self._quotient_oracle(g))
            elif method == "partially-central":
                out = partially_central_test(sol, table)
            elif method == "lattice":
                out = self._lattice(sol, table, decomp_data)
            if out.method != "none":
                return out
        return EliminationOutcome.none()

    def _lattice(self, sol, table, decomp_data) -> EliminationOutcome:
        if decomp_data is None:
            return EliminationOutcome.none()
        for p, decomp in decomp_data.items():
            if p != 3 or sol.n % p != 0:
                continue
            q = sol.n // p
            if q < 2 or q == p or any(q % d == 0 for d in range(2, q)):
                continue
            try:
                out = lattice_contradiction(sol, table, decomp, p, q)
            except UnsupportedLatticeCase:
                continue
            if out.method != "none":
                return out
        return EliminationOutcome.none()

    def _quotient_oracle(self, g: GroupData):
        def oracle(h):
            if not (1 < h.order < g.order):
                return None
            quotient, fusion, _ = self._quotient(g, h)
            qreport = self.run_group(quotient)
            qcd = conjugacy_classes(quotient)

            def matching_survives(m: int, fused_pa: dict, fused_chain: dict) -> bool:
                if qreport.status == "verified":
                    return False
                if qreport.status == "inconclusive":
                    return True  # cannot rule anything out from a failed run
                want_pa = {qcd.classes[ci].label: v for ci, v in fused_pa.items()}
                want_chain = {
                    str(e): qcd.classes[ci].label for e, ci in fused_chain.items()
                }
                for s in qreport.survivors:
                    if s["order"] == m and s["pa"] == want_pa and s["chain"] == want_chain:
                        return True
                return False

            return quotient, fusion, matching_survives

        return oracle
