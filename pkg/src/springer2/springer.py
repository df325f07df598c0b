"""The five correspondence maps between orbit data and distinguished symbols.

rho sends an orbit datum to a merged sequence c_1 <= ... built positionally
from (lambda, chi) with case-specific offsets, read alternately into the two
symbol rows; the result is a distinguished member of the case's space.  Its
inverse recovers (lambda, chi) (and the defect, for OOD) from the merged
sequence of any sufficiently long representative.

Characters of the component group are identified with canonical subsets of
the character-bearing intervals of rho(x): the generator attached to index i
lands in the interval containing c_i, killed classes land in the initial (or
defect) interval, and the free classes match the proper intervals one for
one.  The full correspondence maps (orbit, character) to the acted symbol
act(rho(x), F).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bipartition import Bipartition, UnorderedBipartition
from .interval import (
    IntervalDecomposition,
    act,
    character_subsets,
    decompose,
)
from .orbit import (
    LieCase,
    OrbitDatum,
    a_group_order,
    canonicalize_padding,
    component_group,
    ComponentGroupPresentation,
    enumerate_orbits,
    is_degenerate,
    regular_orbit,
    render_orbit,
    validate_orbit,
    zero_orbit,
)
from .symbol import Symbol, enumerate_space, to_bipartition, validate


class NotDistinguishedError(ValueError):
    pass


class InversionError(ValueError):
    pass


def rho(datum: OrbitDatum) -> Symbol:
    """The distinguished symbol of an orbit, at the datum's own padding."""
    bad = validate_orbit(datum)
    if bad:
        raise ValueError(f"invalid orbit {datum!r}: " + "; ".join(bad))
    case, n = datum.case, datum.n
    lam, chi = datum.lam, datum.chi_map
    size = len(lam)
    c: list[int] = []
    if case is LieCase.SP:
        i = 1
        while i <= size:
            v = lam[i - 1]
            if 2 * chi[v] == v:
                c.append(v // 2 + (n + 1) * (i - 1))
                i += 1
            else:
                assert i < size and lam[i] == v
                c.append(v - chi[v] + (n + 1) * (i - 1))
                c.append(chi[v] + (n + 1) * i)
                i += 2
    elif case is LieCase.OO:
        jumps = [j for j in range(3, size + 1, 2) if lam[j - 1] > lam[j - 2]]
        m0 = jumps[0]
        for idx in range(1, size + 1):
            v = lam[idx - 1]
            if idx % 2 == 1:
                j = (idx + 1) // 2
                base = chi[v] + (j - 1) * (n + 3)
                c.append(base if idx < m0 else base - 1)
            else:
                j = idx // 2
                base = v - chi[v] + n + 1 + (j - 1) * (n + 3)
                c.append(base if idx < m0 else base + 1)
    elif case is LieCase.EO:
        for idx in range(1, size + 1):
            v = lam[idx - 1]
            j = (idx + 1) // 2
            if idx % 2 == 1:
                c.append(v - chi[v] + (j - 1) * (n + 1))
            else:
                c.append(chi[v] + (j - 1) * (n + 1))
    elif case is LieCase.SPD:
        for idx in range(1, size + 1):
            v = lam[idx - 1]
            if idx % 2 == 1:
                j = (idx + 1) // 2
                c.append(chi[v] + (j - 1) * (n + 2))
            else:
                j = idx // 2
                c.append(v - chi[v] + n + 1 + (j - 1) * (n + 2))
    else:  # OOD
        for idx in range(1, size + 1):
            v = lam[idx - 1]
            j = (idx + 1) // 2
            if idx % 2 == 1:
                c.append(v - chi[v] + (j - 1) * (n + 1))
            else:
                c.append(chi[v] + (j - 1) * (n + 1))
        c.append(datum.m + (size // 2) * (n + 1))
    sym = Symbol(tuple(c[0::2]), tuple(c[1::2]), case.space(n))
    assert sym.is_distinguished(), (datum, sym)
    return sym


def _set_chi(chi: dict[int, int], v: int, x: int) -> None:
    if v < 0 or x < 0:
        raise InversionError(f"recovered negative value chi({v}) = {x}")
    if chi.setdefault(v, x) != x:
        raise InversionError(f"inconsistent chi({v}): {chi[v]} vs {x}")


def rho_inverse(sym: Symbol, case: LieCase, n: int) -> OrbitDatum:
    """The orbit datum whose rho is (the class of) sym."""
    space = case.space(n)
    bad = validate(sym.a, sym.b, space)
    if bad:
        raise ValueError(f"{sym} not in {space}: " + "; ".join(bad))
    if not sym.is_distinguished():
        raise NotDistinguishedError(f"{sym} is not distinguished")
    c = sym.at_m(n + 1).merged()
    size = len(c)
    chi: dict[int, int] = {}
    lam = [0] * size
    m = None
    if case is LieCase.SP:
        i = 1
        while i <= size:
            if i < size and c[i] < c[i - 1] + (n + 1):
                v = c[i - 1] + c[i] - (n + 1) * (2 * i - 1)
                lam[i - 1] = lam[i] = v
                _set_chi(chi, v, c[i] - (n + 1) * i)
                i += 2
            else:
                v = 2 * (c[i - 1] - (n + 1) * (i - 1))
                lam[i - 1] = v
                _set_chi(chi, v, v // 2)
                i += 1
    elif case is LieCase.OO:
        half = (size - 1) // 2
        flags = [
            c[2 * j - 1] > (n + 1) + (j - 1) * (n + 3)
            for j in range(1, half + 1)
        ]
        low = flags.count(False)
        if flags != [False] * low + [True] * (half - low) or low == 0:
            raise InversionError(f"no defect index for {sym}")
        m0 = 2 * low + 1
        _set_chi(chi, 0, 0)
        for j in range(1, half + 1):
            if 2 * j + 1 < m0:
                v = c[2 * j] - j * (n + 3)
                x = v
            elif 2 * j + 1 > m0:
                v = c[2 * j - 1] + c[2 * j] - (2 * j - 1) * (n + 3) - (n + 1)
                x = c[2 * j] - j * (n + 3) + 1
            else:
                w = c[2 * j] + 1 - j * (n + 3)
                lam[2 * j - 1] = max(w - 1, 0)
                lam[2 * j] = w
                _set_chi(chi, w, w)
                if w - 1 > 0:
                    _set_chi(chi, w - 1, w - 1)
                continue
            lam[2 * j - 1] = lam[2 * j] = v
            _set_chi(chi, v, x)
    elif case in (LieCase.EO, LieCase.OOD):
        pairs = size // 2
        for j in range(1, pairs + 1):
            v = c[2 * j - 2] + c[2 * j - 1] - (2 * j - 2) * (n + 1)
            x = c[2 * j - 1] - (j - 1) * (n + 1)
            lam[2 * j - 2] = lam[2 * j - 1] = v
            _set_chi(chi, v, x)
        if case is LieCase.OOD:
            m = c[-1] - pairs * (n + 1)
            if m < 0:
                raise InversionError(f"recovered negative defect for {sym}")
    else:  # SPD
        _set_chi(chi, 0, 0)
        for j in range(1, (size - 1) // 2 + 1):
            v = c[2 * j - 1] + c[2 * j] - (2 * j - 1) * (n + 2) - (n + 1)
            x = c[2 * j] - j * (n + 2)
            lam[2 * j - 1] = lam[2 * j] = v
            _set_chi(chi, v, x)
    if any(v < 0 for v in lam):
        raise InversionError(f"recovered negative part for {sym}")
    try:
        datum = canonicalize_padding(
            OrbitDatum.of(case, n, lam, {v: chi[v] for v in set(lam)}, m)
        )
    except (KeyError, ValueError) as exc:
        raise InversionError(f"cannot assemble orbit for {sym}: {exc}") from exc
    bad = validate_orbit(datum)
    if bad:
        raise InversionError(f"recovered orbit invalid for {sym}: " + "; ".join(bad))
    if rho(datum) != sym:
        raise InversionError(f"round trip failed for {sym}")
    return datum


# -- characters as interval subsets -----------------------------------------


@dataclass(frozen=True)
class SigmaData:
    """rho(x) with its decomposition, group presentation, and the map sending
    each interval to the group element shared by its generators (as a bitmask
    over the free classes)."""

    datum: OrbitDatum
    sym: Symbol
    dec: IntervalDecomposition
    pres: ComponentGroupPresentation
    interval_vec: dict

    @property
    def char_pool(self) -> tuple:
        if self.datum.case is LieCase.EO:
            return self.dec.intervals
        if self.datum.case is LieCase.OOD:
            return self.dec.non_anchor
        return self.dec.proper


def sigma_data(datum: OrbitDatum) -> SigmaData:
    sym = rho(datum)
    dec = decompose(sym)
    pres = component_group(datum)
    c = sym.merged()
    by_value = {v: i for i in dec.intervals for v in i}
    interval_vec: dict = {}
    for g in pres.generators:
        interval = by_value.get(c[g - 1])
        assert interval is not None, (datum, g)
        vec = pres.vec(g)
        prev = interval_vec.setdefault(interval, vec)
        assert prev == vec, (datum, interval)
    data = SigmaData(datum, sym, dec, pres, interval_vec)
    pool = data.char_pool
    assert pres.rank == len(pool), (datum, pres, dec)
    vecs = sorted(interval_vec.get(i, 0) for i in pool)
    assert vecs == [1 << k for k in range(len(pool))], (datum, interval_vec)
    for interval in dec.intervals:
        if interval not in pool:
            assert interval_vec.get(interval, 0) == 0, (datum, interval)
    return data


def character_space(datum: OrbitDatum) -> list:
    """Canonical character subsets of rho(datum); one per group character."""
    chars = character_subsets(decompose(rho(datum)))
    assert len(chars) == a_group_order(datum)
    return chars


def correspondence(datum: OrbitDatum, character) -> Symbol:
    """The symbol of the pair (orbit, character): act(rho(x), F)."""
    return act(rho(datum), character)


# -- tables ------------------------------------------------------------------


@dataclass(frozen=True)
class CorrespondenceEntry:
    orbit: OrbitDatum
    character: frozenset
    symbol: Symbol
    bipartition: object

    @property
    def degenerate(self) -> bool:
        return is_degenerate(self.orbit)


def _char_key(character) -> tuple:
    return tuple(sorted(character))


def table(case: LieCase, n: int) -> list[CorrespondenceEntry]:
    """Every (orbit, character) pair with its symbol and bipartition."""
    entries: list[CorrespondenceEntry] = []
    for datum in enumerate_orbits(case, n):
        base = rho(datum)
        for character in sorted(character_space(datum), key=_char_key):
            sym = act(base, character)
            entries.append(
                CorrespondenceEntry(datum, character, sym, to_bipartition(sym))
            )
    entries.sort(key=lambda e: (render_orbit(e.orbit), _char_key(e.character)))
    return entries


@dataclass
class BijectionReport:
    case: LieCase
    n: int
    entries: int
    problems: list[str]

    @property
    def ok(self) -> bool:
        return not self.problems


def verify_bijection(case: LieCase, n: int) -> BijectionReport:
    """Check the table is a bijection onto the symbol space, with anchors."""
    problems: list[str] = []
    entries = table(case, n)
    symbols = [e.symbol for e in entries]
    if len(set(symbols)) != len(symbols):
        problems.append("duplicate symbols in the table")
    space_symbols = set(enumerate_space(case.space(n)))
    if set(symbols) != space_symbols:
        missing = space_symbols - set(symbols)
        extra = set(symbols) - space_symbols
        problems.append(f"not onto: missing {len(missing)}, extra {len(extra)}")

    unordered_class = case.space(n).unordered and case.space(n).d == 0
    if unordered_class:
        sign = UnorderedBipartition.of((), (1,) * n)
        trivial = UnorderedBipartition.of((n,) if n else (), ())
    else:
        sign = Bipartition((), (1,) * n)
        trivial = Bipartition((n,) if n else (), ())

    zero = zero_orbit(case, n)
    found = [e for e in entries if e.orbit == zero and not e.character]
    if len(found) != 1 or found[0].bipartition != sign:
        problems.append("zero orbit does not map to the sign bipartition")
    regular = regular_orbit(case, n)
    found = [e for e in entries if e.orbit == regular and not e.character]
    if len(found) != 1 or found[0].bipartition != trivial:
        problems.append("regular orbit does not map to the trivial bipartition")
    return BijectionReport(case, n, len(entries), problems)
