"""Exhaustive enumeration of small effect algebras and the theorem harness.

enumerate_all produces every effect algebra on a given carrier size
exactly once up to isomorphism (isomorphisms fix zero and one, so they
automatically preserve supplements).  naive_oracle is the deliberately
unclever cross-check: it tries every assignment of the free table cells,
validates each completed table with the core validator and deduplicates by
explicitly minimizing over the permutation orbit.  The theorem harness
runs every state-space and structure theorem instance over the census and
reports any violated implication together with the offending table.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Iterator, Optional

from . import classify, states
from ._kernel import BACKEND, search_tables
from ._tablesearch_py import UNDEF, middle_cells
from .core import EffectAlgebra, SumTable, check_table, validate

ENUMERATION_CAP = 6
ORACLE_CAP = 4


def encoding_to_algebra(n: int, enc: tuple[int, ...]) -> EffectAlgebra:
    entries = []
    for (i, j), v in zip(middle_cells(n), enc):
        if v != UNDEF:
            entries.append((i, j, v))
    return validate(SumTable.from_entries(n, 1, entries))


def encoding_str(n: int, enc: tuple[int, ...]) -> str:
    return f"{n}:" + ",".join("u" if v == UNDEF else str(v) for v in enc)


def enumerate_encodings(n: int, cap: int = ENUMERATION_CAP) -> list[tuple[int, ...]]:
    if not 2 <= n <= cap:
        raise ValueError(f"carrier size {n} outside [2, {cap}]")
    return search_tables(n)


def enumerate_all(n: int, cap: int = ENUMERATION_CAP) -> list[EffectAlgebra]:
    """Canonical representatives, re-validated through the core checker."""
    return [encoding_to_algebra(n, enc) for enc in enumerate_encodings(n, cap)]


# -- independent brute-force oracle --------------------------------------------


def _orbit_min(n: int, enc: tuple[int, ...]) -> tuple[int, ...]:
    """Minimum of the permutation orbit, spelled out directly on the
    encoding; intentionally separate from the search kernels."""
    cells = middle_cells(n)
    cell_index = {c: k for k, c in enumerate(cells)}
    best = enc
    for perm in permutations(range(2, n)):
        sigma = {0: 0, 1: 1, UNDEF: UNDEF}
        for src, dst in zip(range(2, n), perm):
            sigma[src] = dst
        mapped = [UNDEF] * len(enc)
        for (i, j), v in zip(cells, enc):
            si, sj = sigma[i], sigma[j]
            key = (si, sj) if si <= sj else (sj, si)
            mapped[cell_index[key]] = sigma[v]
        tup = tuple(mapped)
        if tup < best:
            best = tup
    return best


def naive_oracle_encodings(n: int, cap: int = ORACLE_CAP) -> list[tuple[int, ...]]:
    """Every assignment of the free cells, full validation at the leaves,
    explicit orbit deduplication.  Early abandonment happens only on
    instant axiom failures (any defined one+x entry for x != 0)."""
    if not 2 <= n <= cap:
        raise ValueError(f"carrier size {n} outside naive-oracle range [2, {cap}]")
    cells = [(i, j) for i in range(1, n) for j in range(i, n)]
    found: set[tuple[int, ...]] = set()
    assignment: dict[tuple[int, int], int] = {}

    def rec(k: int) -> None:
        if k == len(cells):
            entries = [(i, j, v) for (i, j), v in assignment.items() if v != UNDEF]
            table = SumTable.from_entries(n, 1, entries)
            if not check_table(table):
                enc = tuple(
                    assignment.get((i, j), UNDEF) for (i, j) in middle_cells(n)
                )
                found.add(_orbit_min(n, enc))
            return
        i, j = cells[k]
        for v in range(UNDEF, n):
            if v != UNDEF and 1 in (i, j):
                continue  # one + x defined breaks the zero-one law at once
            assignment[(i, j)] = v
            rec(k + 1)
        del assignment[(i, j)]

    rec(0)
    return sorted(found)


def naive_oracle(n: int, cap: int = ORACLE_CAP) -> list[EffectAlgebra]:
    return [encoding_to_algebra(n, enc) for enc in naive_oracle_encodings(n, cap)]


def census_lines(n: int) -> list[str]:
    """One line per algebra: canonical encoding then classification flags."""
    out = []
    for enc in enumerate_encodings(n):
        alg = encoding_to_algebra(n, enc)
        report = classify.classify(alg)
        flags = " ".join(f"{k}={'true' if v else 'false'}" for k, v in report.flags.items())
        out.append(f"{encoding_str(n, enc)} {flags}")
    return out


# -- theorem harness ------------------------------------------------------------


@dataclass
class TheoremRecord:
    name: str
    checked: int = 0  # instances with a satisfied hypothesis
    violations: list[str] = field(default_factory=list)


@dataclass
class HarnessReport:
    max_n: int
    algebras: int = 0
    records: dict[str, TheoremRecord] = field(default_factory=dict)

    def record(self, name: str, hypothesis: bool, conclusion: bool, context: str) -> None:
        rec = self.records.setdefault(name, TheoremRecord(name))
        if hypothesis:
            rec.checked += 1
            if not conclusion:
                rec.violations.append(context)

    @property
    def ok(self) -> bool:
        return all(not r.violations for r in self.records.values())

    def lines(self) -> list[str]:
        out = [f"algebras up to n={self.max_n}: {self.algebras}"]
        for name in sorted(self.records):
            rec = self.records[name]
            status = "ok" if not rec.violations else f"{len(rec.violations)} VIOLATIONS"
            out.append(f"{name}: hypothesis held {rec.checked}x, {status}")
            out.extend(f"  !! {v}" for v in rec.violations)
        return out


def _jp_states_pinning(alg: EffectAlgebra, element: int, two_valued, jp_two_valued):
    """A Jauch-Piron state with s(element) = 1, if one can be exhibited:
    two-valued ones first, then the LP vertex, then the uniform mixture of
    all two-valued states pinning the element."""
    for s in jp_two_valued:
        if s[element] == 1:
            return s
    candidates = []
    vertex = states.lp_feasible(alg, pins=[(element, Fraction(1))])
    if vertex is not None:
        candidates.append(vertex)
    pinning = [s for s in two_valued if s[element] == 1]
    if pinning:
        w = Fraction(1, len(pinning))
        candidates.append(states.convex_combine(pinning, [w] * len(pinning)))
    for s in candidates:
        if states.jp_state_check(alg, s)[0]:
            return s
    return None


def check_algebra_theorems(alg: EffectAlgebra, report: HarnessReport, context: str) -> None:
    flags = classify.classify(alg, with_states=True).flags
    two_valued = states.two_valued_states(alg)
    jp_two_valued = [s for s in two_valued if states.jp_state_check(alg, s)[0]]

    assembled = []
    assembled_unital = True
    for a in alg.elements():
        if a == alg.zero:
            continue
        s = _jp_states_pinning(alg, a, two_valued, jp_two_valued)
        if s is None:
            assembled_unital = False
        else:
            assembled.append(s)

    state_sets = {
        "two-valued": two_valued,
        "two-valued-jp": jp_two_valued,
        "assembled-jp": assembled,
    }

    # strong order determination forces unitality, for sets and in full
    for label, S in state_sets.items():
        report.record(
            "sod_set_implies_unital_set",
            states.sod_set_check(alg, S)[0],
            states.unital_set_check(alg, S)[0],
            f"{context} set={label}",
        )
    report.record(
        "sod_full_implies_unital_full",
        flags["sod_full"],
        flags["unital_full"],
        context,
    )

    # a unital state space forces an orthoalgebra
    report.record(
        "unital_implies_orthoalgebra",
        flags["unital_full"] or states.unital_set_check(alg, two_valued)[0],
        flags["orthoalgebra"],
        context,
    )

    # a strongly order determining state space forces an orthomodular poset
    report.record(
        "sod_implies_omp",
        flags["sod_full"] or states.sod_set_check(alg, two_valued)[0],
        flags["omp"],
        context,
    )

    # maximality + a unital set of Jauch-Piron states forces an OMP
    report.record(
        "maximality_unital_jp_implies_omp",
        flags["maximality"] and assembled_unital,
        flags["omp"],
        context,
    )

    # for Jauch-Piron state sets under maximality: unital iff SOD
    for label in ("two-valued-jp", "assembled-jp"):
        S = state_sets[label]
        if flags["maximality"]:
            unital = states.unital_set_check(alg, S)[0]
            sod = states.sod_set_check(alg, S)[0]
            report.record(
                "jp_sets_unital_iff_sod",
                True,
                unital == sod,
                f"{context} set={label} unital={unital} sod={sod}",
            )
    if flags["maximality"] and flags["jp_algebra"]:
        report.record(
            "jp_all_states_unital_iff_sod",
            True,
            flags["unital_full"] == flags["sod_full"],
            context,
        )

    # Jauch-Piron + countable unital state space forces an OML; finitely
    # many pinning states witness countable unitality on a finite carrier
    jpcu = flags["jp_algebra"] and flags["unital_full"]
    report.record("jp_countable_unital_implies_oml", jpcu, flags["oml"], context)
    report.record("jp_countable_unital_implies_lattice", jpcu, flags["lattice"], context)

    # structural implication chain
    for hyp, con in [
        ("finite", "chain_finite"),
        ("chain_finite", "orthocomplete"),
        ("orthocomplete", "chain_upper_bounds"),
        ("chain_upper_bounds", "maximality"),
        ("lattice", "chain_upper_bounds"),
        ("oml", "omp"),
        ("omp", "orthoalgebra"),
    ]:
        report.record(f"{hyp}_implies_{con}", flags[hyp], flags[con], context)


def theorem_harness(max_n: int, cap: int = ENUMERATION_CAP) -> HarnessReport:
    report = HarnessReport(max_n=max_n)
    for n in range(2, max_n + 1):
        for enc in enumerate_encodings(n, cap):
            alg = encoding_to_algebra(n, enc)
            report.algebras += 1
            check_algebra_theorems(alg, report, context=encoding_str(n, enc))
    return report
