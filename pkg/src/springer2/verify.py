"""The ten-point verification suite shared by the CLI and the test suite.

Each criterion checks one contract of the correspondence machinery over a
range of ranks; all checks are exact (no tolerances anywhere).  The
SPRINGER2_THREADS environment variable caps the worker pool used to spread
criteria across threads; results are reported in criterion order regardless.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .bipartition import (
    branch as branch_bipartition,
    branch_unordered,
    count_constrained,
    enumerate_bipartitions,
)
from .degeneration import (
    check_restriction,
    epsilon_pairs,
    orbit_degenerations,
    symbol_branch,
)
from .interval import character_subsets, decompose, similarity_class
from .orbit import (
    LieCase,
    OrbitDatum,
    a_group_order,
    enumerate_orbits,
    render_orbit,
)
from .springer import rho, rho_inverse, table, verify_bijection
from .symbol import SymbolSpace, enumerate_space, is_empty, validate


@dataclass
class CriterionResult:
    number: int
    name: str
    ok: bool
    detail: str

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = f" ({self.detail})" if self.detail else ""
        return f"{status} {self.number:2d} {self.name}{tail}"


def _c1_orbit_counts(cases, max_n):
    bad = []
    for case in cases:
        for n in range(max_n + 1):
            got = len(enumerate_orbits(case, n))
            want = count_constrained(n, case.constraint)
            if got != want:
                bad.append(f"{case.value} n={n}: {got} != {want}")
    return bad


def _c2_rho_round_trip(cases, max_n):
    bad = []
    for case in cases:
        for n in range(max_n + 1):
            space = case.space(n)
            for datum in enumerate_orbits(case, n):
                sym = rho(datum)
                if validate(sym.a, sym.b, space) or not sym.is_distinguished():
                    bad.append(f"rho({datum}) invalid")
                elif rho_inverse(sym, case, n) != datum:
                    bad.append(f"round trip failed at {datum}")
            for sym in enumerate_space(space):
                if sym.is_distinguished() and rho(rho_inverse(sym, case, n)) != sym:
                    bad.append(f"round trip failed at {sym}")
    return bad


def _c3_bijectivity(cases, max_n):
    bad = []
    for case in cases:
        for n in range(max_n + 1):
            total = sum(a_group_order(d) for d in enumerate_orbits(case, n))
            size = len(enumerate_space(case.space(n)))
            if total != size:
                bad.append(f"{case.value} n={n}: sum {total} != {size}")
            entries = table(case, n)
            symbols = [e.symbol for e in entries]
            if len(set(symbols)) != len(symbols) or len(symbols) != size:
                bad.append(f"{case.value} n={n}: table not bijective")
    return bad


def _c4_component_group_cross_check(cases, max_n):
    bad = []
    for case in cases:
        for n in range(max_n + 1):
            for datum in enumerate_orbits(case, n):
                dec = decompose(rho(datum))
                if case.space(n).unordered:
                    expected = 2 ** max(len(dec.intervals) - 1, 0)
                else:
                    expected = 2 ** len(dec.proper)
                if a_group_order(datum) != expected:
                    bad.append(
                        f"{case.value} n={n} {render_orbit(datum)}: "
                        f"{a_group_order(datum)} != {expected}"
                    )
    return bad


def _c5_anchors(cases, max_n):
    bad = []
    for case in cases:
        for n in range(max_n + 1):
            report = verify_bijection(case, n)
            anchored = [p for p in report.problems if "orbit" in p]
            if anchored:
                bad.append(f"{case.value} n={n}: " + "; ".join(anchored))
    return bad


def _c6_branching_consistency(cases, max_n):
    bad = []
    for case in cases:
        for n in range(1, max_n + 1):
            unordered = case.space(n).unordered and case.space(n).d == 0
            for sym in enumerate_space(case.space(n)):
                got = sorted(
                    str(t.to_bipartition()) for t in symbol_branch(sym, case, n)
                )
                bp = sym.to_bipartition()
                want = sorted(
                    str(t)
                    for t in (
                        branch_unordered(bp) if unordered else branch_bipartition(bp)
                    )
                )
                if got != want:
                    bad.append(f"{case.value} n={n} {sym}")
    return bad


def _c7_restriction(cases, max_n):
    bad = []
    for case in cases:
        for n in range(1, max_n + 1):
            report = check_restriction(case, n)
            if not report.ok:
                bad.append(
                    f"{case.value} n={n}: " + "; ".join(report.problems[:3])
                )
    if LieCase.OO in cases and max_n >= 5:
        bad.extend(_worked_instance())
    return bad


def _worked_instance():
    """The o(11) -> o(9) hand computation reproduced by the suite."""
    bad = []
    source = OrbitDatum.of(LieCase.OO, 5, (0, 0, 1, 1, 1, 4, 4), {1: 1, 4: 3})
    sym = rho(source)
    if (sym.a, sym.b) != ((0, 8, 16, 26), (6, 15, 24)):
        bad.append(f"worked instance symbol is {sym}")
    rows = {(t.a, t.b) for t in symbol_branch(sym, LieCase.OO, 5)}
    for target_rows in (((0, 7, 14, 23), (5, 13, 20)), ((0, 7, 14, 22), (5, 13, 21))):
        if target_rows not in rows:
            bad.append(f"branch target {target_rows} missing")
    by_chi = {}
    for rec in orbit_degenerations(source):
        tgt = dict(rec.target_chi)
        if rec.target_lam.count(3) == 2:
            by_chi[tgt[3]] = rec
    keep = epsilon_pairs(source, by_chi[3])
    drop = epsilon_pairs(source, by_chi[2])
    if keep != frozenset({(frozenset(), frozenset())}):
        bad.append(f"chi'=3 multiplicity set {sorted(map(sorted, keep))}")
    if drop != frozenset(
        {
            (frozenset(), frozenset()),
            (frozenset({(24, 26)}), frozenset({(21, 22)})),
        }
    ):
        bad.append(f"chi'=2 multiplicity set {sorted(map(sorted, drop))}")
    return bad


def _c8_simply_transitive(cases, max_n):
    bad = []
    for case in cases:
        for n in range(max_n + 1):
            space = case.space(n)
            symbols = enumerate_space(space)
            seen: dict = {}
            for sym in symbols:
                orbit = similarity_class(sym)
                subsets = character_subsets(decompose(sym))
                if len(set(orbit)) != len(subsets):
                    bad.append(f"action not free at {sym}")
                distinguished = [t for t in orbit if t.is_distinguished()]
                if len(distinguished) != 1:
                    bad.append(
                        f"{len(distinguished)} distinguished in class of {sym}"
                    )
                rep = sym.at_m(n + 1)
                key = (tuple(sorted(set(rep.a) | set(rep.b))),
                       tuple(sorted(set(rep.a) & set(rep.b))))
                members = frozenset(orbit)
                if seen.setdefault(key, members) != members:
                    bad.append(f"action not transitive near {sym}")
    return bad


def _c9_restriction_injectivity(cases, max_n):
    bad = []
    for n in range(3, max_n + 1):
        seen = {}
        for bp in enumerate_bipartitions(n):
            key = tuple(branch_bipartition(bp))
            if key in seen:
                bad.append(f"ordered collision at n={n}: {bp} vs {seen[key]}")
            seen[key] = bp
        seen = {}
        for ubp in enumerate_bipartitions(n, unordered=True):
            if ubp.degenerate:
                continue
            key = tuple(branch_unordered(ubp))
            if key in seen:
                bad.append(f"unordered collision at n={n}: {ubp} vs {seen[key]}")
            seen[key] = ubp
    return bad


def _c10_emptiness(cases, max_n):
    bad = []
    for n in range(min(max_n, 6) + 1):
        for d in (-3, -1, 3, 5):
            for r, s in ((n + 1, n + 1), (2, n + 1)):
                if not is_empty(SymbolSpace(r, s, n, d)):
                    bad.append(f"X({n},{d})^({r},{s}) nonempty")
        for d in (2, 3, 4, 5):
            if not is_empty(SymbolSpace(n + 1, 0, n, d, unordered=True)):
                bad.append(f"Y({n},{d})^({n + 1}) nonempty")
    return bad


CRITERIA = (
    (1, "orbit counts match the bipartition oracles", _c1_orbit_counts),
    (2, "rho round-trips and lands distinguished", _c2_rho_round_trip),
    (3, "correspondence tables are bijections", _c3_bijectivity),
    (4, "component group orders match interval counts", _c4_component_group_cross_check),
    (5, "zero orbit gives sign, regular orbit gives trivial", _c5_anchors),
    (6, "symbol branching matches box removal", _c6_branching_consistency),
    (7, "restriction-formula compatibility", _c7_restriction),
    (8, "subset action simply transitive, unique distinguished", _c8_simply_transitive),
    (9, "restriction multisets determine characters", _c9_restriction_injectivity),
    (10, "out-of-range symbol spaces are empty", _c10_emptiness),
)


def max_workers() -> int:
    value = os.environ.get("SPRINGER2_THREADS", "")
    try:
        return max(1, int(value))
    except ValueError:
        return min(4, os.cpu_count() or 1)


def run_verification(
    cases: list[LieCase] | None = None, max_n: int = 8
) -> list[CriterionResult]:
    cases = list(cases or LieCase)
    workers = max_workers()

    def run_one(entry):
        number, name, func = entry
        try:
            problems = func(cases, max_n)
        except Exception as exc:  # surface internal breakage as a failure
            problems = [f"{type(exc).__name__}: {exc}"]
        detail = "" if not problems else "; ".join(problems[:3])
        return CriterionResult(number, name, not problems, detail)

    if workers == 1:
        return [run_one(entry) for entry in CRITERIA]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run_one, CRITERIA))
