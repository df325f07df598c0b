"""Rank-lowering structure: symbol branching, minimal orbit degenerations,
subgroup triples and the restriction-formula compatibility checker.

Symbol branching realizes restriction of a rank-n character to rank n-1 in
symbol coordinates: every entry drops by the difference of the two staircase
offsets, one chosen entry drops by one more, and a candidate survives iff it
is a member of the rank-(n-1) space.

Orbit degenerations are the minimal pairs (x, x') enumerated clause by
clause.  Conditions that reach below the sequence read lambda_0 = 0 and
chi_0 = 0; upper-bound conditions reaching past the end read satisfied and
equality triggers read failed.  Each record keeps the target both canonically
padded (for identity) and index-aligned with the source (for the subgroup
computation).

The subgroup triple (A_P, A_P', h) is F2 linear algebra on generator classes:
A_P is spanned by the generators alive on both sides, A_P' by the images of
the relations among them, and h maps generator to generator.  The pairs of
characters with nonzero multiplicity are those trivial on the graph subgroup
H = span{(a_i, a_i')}; for the even orthogonal case the computation runs in
the full orthogonal-level groups and restricts to the even subgroups.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bipartition import branch as branch_bipartition
from .bipartition import branch_unordered
from .interval import act, character_subsets
from .orbit import (
    ChiPairs,
    LieCase,
    OrbitDatum,
    canonicalize_padding,
    component_presentation,
    enumerate_orbits,
    is_valid,
    render_orbit,
    validate_orbit,
)
from .springer import rho, sigma_data
from .symbol import Symbol, enumerate_space, to_bipartition, validate


class NotADegenerationError(ValueError):
    pass


# -- symbol-level branching --------------------------------------------------


def _base_decrements(case: LieCase, la: int, lb: int) -> tuple[list[int], list[int]]:
    if case is LieCase.SP:
        return [2 * (j - 1) for j in range(1, la + 1)], [
            2 * j - 1 for j in range(1, lb + 1)
        ]
    if case in (LieCase.OO, LieCase.SPD):
        return [j - 1 for j in range(1, la + 1)], [j for j in range(1, lb + 1)]
    return [j - 1 for j in range(1, la + 1)], [j - 1 for j in range(1, lb + 1)]


def symbol_branch(sym: Symbol, case: LieCase, n: int) -> list[Symbol]:
    """All restriction targets of sym in the rank-(n-1) space.

    The list is a multiset: for unordered classes a target can arise from a
    decrement in either row.
    """
    if n < 1:
        raise ValueError("branching needs n >= 1")
    space = case.space(n)
    bad = validate(sym.a, sym.b, space)
    if bad:
        raise ValueError(f"{sym} not in {space}: " + "; ".join(bad))
    target = case.space(n - 1)
    dec_a, dec_b = _base_decrements(case, len(sym.a), len(sym.b))
    base_a = [x - d for x, d in zip(sym.a, dec_a)]
    base_b = [x - d for x, d in zip(sym.b, dec_b)]
    out: list[Symbol] = []
    for row, base in (("a", base_a), ("b", base_b)):
        for i in range(len(base)):
            cand_a, cand_b = list(base_a), list(base_b)
            (cand_a if row == "a" else cand_b)[i] -= 1
            if min(cand_a + cand_b, default=0) < 0:
                continue
            if not validate(tuple(cand_a), tuple(cand_b), target):
                out.append(Symbol(tuple(cand_a), tuple(cand_b), target))
    return out


# -- orbit-level degenerations ------------------------------------------------


@dataclass(frozen=True)
class DegenerationRecord:
    source: OrbitDatum
    target: OrbitDatum
    rule: str
    dim_y: int
    target_lam: tuple[int, ...]
    target_chi: ChiPairs
    target_m: int | None


def _aligned_record(source, rule, dim_y, lam, chi_seq, m):
    """Assemble a record from index-aligned target data; None if malformed."""
    chi_map: dict[int, int] = {}
    for v, c in zip(lam, chi_seq):
        if chi_map.setdefault(v, c) != c:
            return None
    if any(c < 0 for c in chi_seq) or any(v < 0 for v in lam):
        return None
    if list(lam) != sorted(lam):
        return None
    aligned = OrbitDatum.of(source.case, source.n - 1, lam, chi_map, m)
    if not is_valid(aligned):
        return None
    return DegenerationRecord(
        source,
        canonicalize_padding(aligned),
        rule,
        dim_y,
        tuple(lam),
        aligned.chi,
        m,
    )


def orbit_degenerations(datum: OrbitDatum) -> list[DegenerationRecord]:
    """Every minimal degeneration out of the (canonically padded) datum."""
    bad = validate_orbit(datum)
    if bad:
        raise ValueError(f"invalid orbit {datum!r}: " + "; ".join(bad))
    if datum.n < 1:
        return []
    datum = canonicalize_padding(datum)
    case = datum.case
    lam, chi = datum.lam, datum.chi_map
    size = len(lam)

    def lv(i: int) -> int:  # lambda_i with the lambda_0 = 0 convention
        return lam[i - 1] if i >= 1 else 0

    def cv(i: int) -> int:
        return chi[lam[i - 1]] if i >= 1 else 0

    records: list[DegenerationRecord] = []

    if case is LieCase.SP:
        m_half = (size - 1) // 2
        for i in range(1, size + 1):
            v = lv(i)
            if v - lv(i - 1) >= 2 and 2 * cv(i) == v and all(
                2 * cv(j) >= 2 * lv(j) - v + 2 for j in range(1, i)
            ):
                lam2 = list(lam)
                lam2[i - 1] = v - 2
                chi2 = list(datum.chi_seq)
                chi2[i - 1] = (v - 2) // 2
                rec = _aligned_record(
                    datum, "sp-a", 2 * m_half - i + 1, lam2, chi2, None
                )
                if rec:
                    records.append(rec)
        records.extend(_pair_clause(datum, "sp-b", 2 * m_half + 1))
    elif case in (LieCase.OO, LieCase.EO):
        for i in range(0, size - 1):
            if not (lv(i) < lv(i + 1) < lv(i + 2)):
                continue
            if cv(i + 2) != lv(i + 2):
                continue
            lam2 = list(lam)
            lam2[i] -= 1
            lam2[i + 1] -= 1
            chi2 = list(datum.chi_seq)
            for j in range(i + 2):
                chi2[j] = lam2[j]
            rec = _aligned_record(datum, "o-a", size - i - 2, lam2, chi2, None)
            if rec:
                records.append(rec)
        records.extend(_pair_clause(datum, "o-b", size))
    elif case is LieCase.SPD:
        records.extend(_pair_clause(datum, "spd", size))
    else:  # OOD
        top_gap = lam[-1] - chi[lam[-1]] if lam else 0
        if datum.m - 1 >= top_gap:
            records.append(
                DegenerationRecord(
                    datum,
                    canonicalize_padding(
                        OrbitDatum.of(case, datum.n - 1, lam, chi, datum.m - 1)
                    ),
                    "ood-a",
                    0,
                    lam,
                    datum.chi,
                    datum.m - 1,
                )
            )
        records.extend(_pair_clause(datum, "ood-b", size + 1))
    return records


def _pair_clause(datum: OrbitDatum, rule: str, dim_base: int):
    """The shared clause: decrement a doubled part lambda_{i+1} = lambda_i.

    dim Y = dim_base - i (chi kept) or dim_base - i - 1 (chi lowered).
    """
    case = datum.case
    lam, chi = datum.lam, datum.chi_map
    size = len(lam)

    def lv(i):
        return lam[i - 1] if i >= 1 else 0

    def cv(i):
        return chi[lam[i - 1]] if i >= 1 else 0

    lower_wall = {
        LieCase.SP: lambda v, c: c >= 0 and 2 * c <= v,
        LieCase.OO: lambda v, c: 2 * c >= v and c <= v,
        LieCase.EO: lambda v, c: 2 * c >= v and c <= v,
        LieCase.SPD: lambda v, c: 2 * c >= v - 1 and c <= v,
        LieCase.OOD: lambda v, c: 2 * c >= v and c <= v,
    }[case]

    out = []
    for i in range(1, size):
        if not (lv(i + 1) == lv(i) > lv(i - 1)):
            continue
        v2 = lv(i) - 1
        for new_chi in (cv(i), cv(i) - 1):
            in_wall = new_chi >= 0 and lower_wall(v2, new_chi)
            window = cv(i - 1) <= new_chi <= cv(i - 1) + lv(i) - lv(i - 1) - 1
            if not (in_wall and window):
                continue
            lam2 = list(lam)
            lam2[i - 1] = lam2[i] = v2
            chi2 = list(datum.chi_seq)
            chi2[i - 1] = chi2[i] = new_chi
            dim_y = dim_base - i if new_chi == cv(i) else dim_base - i - 1
            rec = _aligned_record(datum, rule, dim_y, lam2, chi2, datum.m)
            if rec:
                out.append(rec)
    return out


def find_record(source: OrbitDatum, target: OrbitDatum) -> DegenerationRecord:
    for rec in orbit_degenerations(source):
        if rec.target == target:
            return rec
    raise NotADegenerationError(f"{target} is not a degeneration of {source}")


# -- subgroup triples and multiplicity sets -----------------------------------


def _span(elems):
    out = {(0, 0)}
    for g in elems:
        out |= {(u ^ g[0], v ^ g[1]) for u, v in out}
    return out


def _gf2_rank(vectors) -> int:
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def _parity(x: int) -> int:
    return bin(x).count("1") & 1


@dataclass(frozen=True)
class SubgroupTriple:
    """(A_P, A_P', h) for a degeneration pair, over the free-class bases.

    For the even orthogonal case the groups are the full orthogonal-level
    ones.  h lists (image of a_i in A(x), image of a_i' in A'(x')) for each
    generator index alive on both sides.
    """

    common: tuple[int, ...]
    h: tuple[tuple[int, int], ...]
    ap_rank: int
    a_rank: int
    app_elems: frozenset[int]

    @property
    def index_in_a(self) -> int:
        return 2 ** (self.a_rank - self.ap_rank)

    @property
    def app_order(self) -> int:
        return len(self.app_elems)


def _triple_data(rec: DegenerationRecord):
    source = rec.source
    pres_x = component_presentation(
        source.case, source.n, source.lam, source.chi, source.m
    )
    pres_t = component_presentation(
        source.case, source.n - 1, rec.target_lam, rec.target_chi, rec.target_m
    )
    common = tuple(
        i for i in pres_x.generators if i in set(pres_t.generators)
    )
    h = tuple((pres_x.vec(i), pres_t.vec(i)) for i in common)
    return pres_x, pres_t, common, h


def subgroup_triple(source: OrbitDatum, target: OrbitDatum) -> SubgroupTriple:
    rec = target if isinstance(target, DegenerationRecord) else None
    rec = rec or find_record(source, target)
    pres_x, pres_t, common, h = _triple_data(rec)
    ap_rank = _gf2_rank([u for u, _ in h])
    app = frozenset(v for u, v in _span(h) if u == 0)
    return SubgroupTriple(common, h, ap_rank, pres_x.rank, app)


def epsilon_pairs(source: OrbitDatum, target: OrbitDatum) -> frozenset:
    """Character pairs with nonzero multiplicity, as canonical interval
    subsets of rho(source) and rho(target)."""
    rec = target if isinstance(target, DegenerationRecord) else None
    rec = rec or find_record(source, target)
    pres_x, pres_t, common, h = _triple_data(rec)
    sx = sigma_data(rec.source)
    st = sigma_data(rec.target)
    assert pres_t.rank == st.pres.rank, (rec, pres_t, st.pres)

    def masks(sigma):
        return {
            f: _or_all(sigma.interval_vec[i] for i in f)
            for f in character_subsets(sigma.dec)
        }

    fmasks, fpmasks = masks(sx), masks(st)
    if source.case is LieCase.EO:
        constraints = [
            (u, v)
            for u, v in _span(h)
            if _parity(u) == 0 and _parity(v) == 0
        ]
    else:
        constraints = list(h)
    pairs = set()
    for f, fm in fmasks.items():
        for fp, fpm in fpmasks.items():
            if all(
                (_parity(fm & u) ^ _parity(fpm & v)) == 0
                for u, v in constraints
            ):
                pairs.add((f, fp))
    return frozenset(pairs)


def _or_all(values) -> int:
    out = 0
    for v in values:
        out |= v
    return out


# -- corollary conformance -----------------------------------------------------


def predicted_corollary(rec: DegenerationRecord):
    """(|A(x)/A_P|, |A_P'|, element) from the propositions' corollaries.

    Conditions reaching past the sequence: bounds read satisfied, equality
    triggers read failed.  The element is the generator word spanning A_P'
    (as index pair/singleton), or None.
    """
    case = rec.source.case
    if case is LieCase.SP:
        return 1, 1, None
    lam, chi = rec.source.lam, rec.source.chi_map
    size = len(lam)

    def lv(i):
        return lam[i - 1] if 1 <= i <= size else None

    def cv(i):
        return chi[lam[i - 1]] if 1 <= i <= size else None

    if rec.rule == "o-a":
        # locate i: the two decremented positions are i+1, i+2
        i = next(
            j for j in range(size) if rec.target_lam[j] != lam[j]
        )  # 0-based position of the first decremented part
        i_pos = i
        trigger = (
            lv(i_pos + 3) is not None
            and lv(i_pos + 2) + cv(i_pos + 3) == lv(i_pos + 3) + 1
        )
        return 1, (2 if trigger else 1), ((i_pos + 3,) if trigger else None)
    if rec.rule == "ood-a":
        return 1, 1, None

    # pair clauses: find i (1-based) and the chi choice
    i = next(j for j in range(size) if rec.target_lam[j] != lam[j]) + 1
    new_chi = dict(rec.target_chi)[rec.target_lam[i - 1]]
    lowered = new_chi == cv(i) - 1
    v = lv(i)
    last_pair = i == size - 1
    if case in (LieCase.OO, LieCase.EO):
        on_wall = 2 * cv(i) == v + 1
        bound_ok = lv(i + 2) is None or 2 * (lv(i + 2) - cv(i + 2)) >= v + 1
        index2 = on_wall and bound_ok and lowered
        trigger = (
            not on_wall
            and lowered
            and lv(i + 2) is not None
            and cv(i + 2) + cv(i) == lv(i + 2) + 1
        )
        elem = (i + 1, i + 2) if trigger else None
        return (2 if index2 else 1), (2 if trigger else 1), elem
    if case is LieCase.SPD:
        on_wall = 2 * cv(i) == v
        bound_ok = lv(i + 2) is None or 2 * (lv(i + 2) - cv(i + 2)) > v
        index2 = on_wall and bound_ok and lowered
        trigger = (
            not on_wall
            and lowered
            and lv(i + 2) is not None
            and cv(i + 2) + cv(i) == lv(i + 2)
        )
        elem = (i + 1, i + 2) if trigger else None
        return (2 if index2 else 1), (2 if trigger else 1), elem
    # OOD pair clause; the top pair consults the defect instead
    m = rec.source.m
    on_wall = 2 * cv(i) == v + 1
    if last_pair:
        bound_ok = 2 * m >= v + 1
        trigger = not on_wall and lowered and cv(i) == m + 1
        elem = (size,) if trigger else None
    else:
        bound_ok = lv(i + 2) is None or 2 * (lv(i + 2) - cv(i + 2)) >= v + 1
        trigger = (
            not on_wall
            and lowered
            and lv(i + 2) is not None
            and cv(i + 2) + cv(i) == lv(i + 2) + 1
        )
        elem = (i + 1, i + 2) if trigger else None
    index2 = on_wall and bound_ok and lowered
    return (2 if index2 else 1), (2 if trigger else 1), elem


# -- the compatibility checker --------------------------------------------------


@dataclass
class RestrictionReport:
    case: LieCase
    n: int
    pairs: int
    problems: list[str]

    @property
    def ok(self) -> bool:
        return not self.problems


def check_restriction(case: LieCase, n: int) -> RestrictionReport:
    """End-to-end compatibility at rank n -> n-1 (see module docstring)."""
    if n < 1:
        raise ValueError("check_restriction needs n >= 1")
    problems: list[str] = []
    sources = enumerate_orbits(case, n)
    targets = enumerate_orbits(case, n - 1)

    records: dict[tuple, DegenerationRecord] = {}
    for x in sources:
        for rec in orbit_degenerations(x):
            key = (render_orbit(x), render_orbit(rec.target))
            if key in records:
                problems.append(f"duplicate degeneration {key}")
            records[key] = rec

    # (i) listed pairs == distinguished-symbol branch pairs
    rho_of = {x: rho(x) for x in sources}
    target_of = {rho(t): t for t in targets}
    branch_pairs = set()
    for x in sources:
        for cand in symbol_branch(rho_of[x], case, n):
            t = target_of.get(cand)
            if t is not None:
                branch_pairs.add((render_orbit(x), render_orbit(t)))
    if branch_pairs != set(records):
        missing = sorted(branch_pairs - set(records))
        extra = sorted(set(records) - branch_pairs)
        problems.append(
            f"degeneration list mismatch: symbol-only {missing}, orbit-only {extra}"
        )

    # (ii) multiplicity sets match the symbol-level (F, F') sets,
    # plus corollary conformance of the subgroup triples
    by_render = {render_orbit(t): t for t in targets}
    for (sx_key, st_key), rec in sorted(records.items()):
        x = rec.source
        eps = epsilon_pairs(x, rec)
        data_x = sigma_data(x)
        data_t = sigma_data(rec.target)
        branch_cache = {}
        symbol_side = set()
        for f in character_subsets(data_x.dec):
            acted = act(data_x.sym, f)
            branch_cache[f] = set(symbol_branch(acted, case, n))
        for fp in character_subsets(data_t.dec):
            acted_t = act(data_t.sym, fp)
            for f, branches in branch_cache.items():
                if acted_t in branches:
                    symbol_side.add((f, fp))
        if symbol_side != eps:
            problems.append(
                f"({sx_key} -> {st_key}): multiplicity set {sorted(map(sorted, eps))} "
                f"!= symbol side {sorted(map(sorted, symbol_side))}"
            )
        triple = subgroup_triple(x, rec)
        want_index, want_app, elem = predicted_corollary(rec)
        if triple.index_in_a != want_index:
            problems.append(
                f"({sx_key} -> {st_key}): |A/A_P| = {triple.index_in_a}, "
                f"corollary predicts {want_index}"
            )
        if triple.app_order != want_app:
            problems.append(
                f"({sx_key} -> {st_key}): |A_P'| = {triple.app_order}, "
                f"corollary predicts {want_app}"
            )
        elif elem is not None:
            pres_t = component_presentation(
                case, n - 1, rec.target_lam, rec.target_chi, rec.target_m
            )
            vec = _or_all(pres_t.vec(i) or 0 for i in elem)
            if set(triple.app_elems) != {0, vec}:
                problems.append(
                    f"({sx_key} -> {st_key}): A_P' != predicted <a'_{elem}>"
                )

    # (iii) branching pushed to bipartitions = box removal
    for sym in enumerate_space(case.space(n)):
        got = sorted(
            str(to_bipartition(t)) for t in symbol_branch(sym, case, n)
        )
        bp = to_bipartition(sym)
        if case.space(n).unordered and case.space(n).d == 0:
            want = sorted(str(t) for t in branch_unordered(bp))
        else:
            want = sorted(str(t) for t in branch_bipartition(bp))
        if got != want:
            problems.append(f"branch mismatch at {sym}: {got} != {want}")

    return RestrictionReport(case, n, len(records), problems)
