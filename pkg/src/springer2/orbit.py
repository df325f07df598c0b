"""Nilpotent orbit data for the five classical families in characteristic 2.

An orbit is recorded by a partition lambda (stored ascending, with the
case's canonical zero padding), a per-part-value marking chi, and for the
o(2n+1)* family an extra defect integer m.  Cases and their conventions:

  SP   sp(2n):     sum = 2n,   odd length, lambda_1 = 0, 0 <= chi(v) <= v/2;
                   values with chi(v) < v/2 must have even multiplicity
                   (each index with chi = v/2 is a singleton block, the rest
                   pair up into consecutive equal blocks).
  OO   o(2n+1):    sum = 2n+1, odd length, lambda_1 = 0, v/2 <= chi(v) <= v;
                   odd-multiplicity positive values form {a, a-1} for some
                   a >= 1; there is a unique odd index m0 >= 3 where lambda
                   jumps, the jump is by 1, and chi(v) = v below it.
  EO   o(2n):      sum = 2n,   even length, parts pair up (2i-1, 2i),
                   v/2 <= chi(v) <= v.  Data are orbits of the full
                   orthogonal group; characters live on the even subgroup.
  SPD  sp(2n)*:    sum = 2n,   odd length, lambda_1 = 0, parts pair up
                   (2j, 2j+1), (v-1)/2 <= chi(v) <= v.
  OOD  o(2n+1)*:   defect 0 <= m <= n, sum = 2n-2m, even length, parts pair
                   up (2j-1, 2j), v/2 <= chi(v) <= v, m >= max part - its chi.

All cases require chi and lambda - chi nondecreasing along indices.

Component groups are elementary abelian 2-groups presented by one generator
per index whose chi is off the case's wall, merged along adjacent indices by
the case's chaining relation and killed by the case's vanishing relation.

Orbit string grammar (shared with the CLI): positive parts descending as
"v_chi" joined by commas, "-" when there are none, and an "m=<k>;" prefix for
the OOD case.  Zero padding is implicit.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .bipartition import Constraint, partitions
from .symbol import SymbolSpace


class LieCase(Enum):
    SP = "sp"
    OO = "oo"
    EO = "eo"
    SPD = "spd"
    OOD = "ood"

    def space(self, n: int) -> SymbolSpace:
        if self is LieCase.SP:
            return SymbolSpace(n + 1, n + 1, n, 1)
        if self is LieCase.OO:
            return SymbolSpace(2, n + 1, n, 1)
        if self is LieCase.EO:
            return SymbolSpace(n + 1, 0, n, 0, unordered=True)
        if self is LieCase.SPD:
            return SymbolSpace(1, n + 1, n, 1)
        return SymbolSpace(n + 1, 0, n, 1, unordered=True)

    @property
    def constraint(self) -> Constraint:
        return {
            LieCase.SP: Constraint.ALL,
            LieCase.OO: Constraint.NU_LE_MU_PLUS_2,
            LieCase.EO: Constraint.NU_LE_MU,
            LieCase.SPD: Constraint.NU_LE_MU_PLUS_1,
            LieCase.OOD: Constraint.NU_SHIFTED_LE_MU,
        }[self]

    @property
    def has_defect(self) -> bool:
        return self is LieCase.OOD

    def total(self, n: int, m: int | None = None) -> int:
        if self is LieCase.OO:
            return 2 * n + 1
        if self is LieCase.OOD:
            return 2 * n - 2 * (m or 0)
        return 2 * n

    @property
    def odd_length(self) -> bool:
        return self in (LieCase.SP, LieCase.OO, LieCase.SPD)

    @property
    def needs_leading_zero(self) -> bool:
        return self in (LieCase.SP, LieCase.OO, LieCase.SPD)


ChiPairs = tuple[tuple[int, int], ...]


def _chi_pairs(lam, chi) -> ChiPairs:
    values = sorted(set(lam))
    if isinstance(chi, dict):
        mapping = dict(chi)
    else:
        mapping = {v: c for v, c in chi}
    if 0 in values:
        mapping.setdefault(0, 0)
    missing = [v for v in values if v not in mapping]
    if missing:
        raise ValueError(f"chi missing values {missing}")
    return tuple((v, int(mapping[v])) for v in values)


@dataclass(frozen=True, eq=False)
class OrbitDatum:
    case: LieCase
    n: int
    lam: tuple[int, ...]
    chi: ChiPairs
    m: int | None = None

    @classmethod
    def of(cls, case: LieCase, n: int, lam, chi, m: int | None = None):
        lam = tuple(sorted(int(v) for v in lam))
        return cls(case, n, lam, _chi_pairs(lam, chi), m)

    def chi_of(self, value: int) -> int:
        for v, c in self.chi:
            if v == value:
                return c
        raise KeyError(value)

    @property
    def chi_map(self) -> dict[int, int]:
        return dict(self.chi)

    @property
    def chi_seq(self) -> tuple[int, ...]:
        return tuple(self.chi_map[v] for v in self.lam)

    def _key(self) -> tuple:
        c = canonicalize_padding(self)
        return (c.case, c.n, c.lam, c.chi, c.m)

    def __eq__(self, other) -> bool:
        return isinstance(other, OrbitDatum) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __str__(self) -> str:
        return render_orbit(self)

    def __repr__(self) -> str:
        return f"OrbitDatum({self.case.value!r}, n={self.n}, {render_orbit(self)!r})"


def validate_orbit(datum: OrbitDatum) -> list[str]:
    """All violated validity conditions (empty list when valid).

    Accepts any amount of zero padding beyond the canonical one.
    """
    case, n, lam = datum.case, datum.n, datum.lam
    bad: list[str] = []
    if list(lam) != sorted(lam) or any(v < 0 for v in lam):
        return [f"lambda not ascending nonnegative: {lam}"]
    try:
        chi = datum.chi_map
    except ValueError as exc:
        return [str(exc)]
    if case.has_defect:
        if datum.m is None or not 0 <= datum.m <= n:
            bad.append(f"defect m = {datum.m} not in [0, {n}]")
    elif datum.m is not None:
        bad.append("defect m only applies to the ood case")
    if sum(lam) != case.total(n, datum.m):
        bad.append(f"sum {sum(lam)} != {case.total(n, datum.m)}")
    if case.odd_length and len(lam) % 2 == 0:
        bad.append("length must be odd")
    if not case.odd_length and len(lam) % 2 == 1:
        bad.append("length must be even")
    if case.needs_leading_zero and (not lam or lam[0] != 0):
        bad.append("lambda_1 must be 0")

    # chi range per value
    for v, c in sorted(chi.items()):
        lo, hi = _chi_range(case, v)
        if not lo <= c <= hi:
            bad.append(f"chi({v}) = {c} not in [{lo}, {hi}]")
    # chi and lambda - chi nondecreasing along indices
    values = sorted(set(lam))
    for u, v in zip(values, values[1:]):
        if chi[u] > chi[v]:
            bad.append(f"chi({u}) > chi({v})")
        if u - chi[u] > v - chi[v]:
            bad.append(f"{u} - chi({u}) > {v} - chi({v})")

    mult = Counter(lam)
    if case is LieCase.SP:
        for v in sorted(mult):
            if v > 0 and 2 * chi[v] < v and mult[v] % 2 == 1:
                bad.append(f"value {v} with chi < v/2 has odd multiplicity")
    elif case is LieCase.OO:
        odd = {v for v in mult if v > 0 and mult[v] % 2 == 1}
        ok = odd == {1} or (
            len(odd) == 2 and max(odd) - min(odd) == 1 and min(odd) >= 1
        )
        if not ok:
            bad.append(f"odd-multiplicity positive values {sorted(odd)}")
        bad.extend(_oo_jump_structure(lam, chi))
    elif case in (LieCase.EO, LieCase.SPD, LieCase.OOD):
        for v in sorted(mult):
            if v > 0 and mult[v] % 2 == 1:
                bad.append(f"positive value {v} has odd multiplicity")
        pairs_from = 1 if case is LieCase.SPD else 0
        for i in range(pairs_from, len(lam) - 1, 2):
            if lam[i] != lam[i + 1]:
                bad.append(f"parts {i + 1},{i + 2} not paired: {lam}")
        if case is LieCase.OOD and lam:
            top = lam[-1]
            if datum.m is not None and datum.m < top - chi[top]:
                bad.append(f"m = {datum.m} < {top} - chi({top})")
    return bad


def _chi_range(case: LieCase, v: int) -> tuple[int, int]:
    if case is LieCase.SP:
        return 0, v // 2
    if case is LieCase.SPD:
        return v // 2, v  # ceil((v-1)/2) = floor(v/2)
    return (v + 1) // 2, v


def _oo_jump_structure(lam, chi) -> list[str]:
    bad = []
    jumps = [
        j
        for j in range(3, len(lam) + 1, 2)
        if lam[j - 1] > lam[j - 2]
    ]
    if len(jumps) != 1:
        return [f"odd jump indices {jumps}, expected exactly one"]
    m0 = jumps[0]
    if lam[m0 - 1] != lam[m0 - 2] + 1:
        bad.append(f"jump at {m0} is by {lam[m0 - 1] - lam[m0 - 2]}, not 1")
    for j in range(m0):
        if chi[lam[j]] != lam[j]:
            bad.append(f"chi({lam[j]}) != {lam[j]} below the jump index {m0}")
            break
    return bad


def is_valid(datum: OrbitDatum) -> bool:
    return not validate_orbit(datum)


def canonicalize_padding(datum: OrbitDatum) -> OrbitDatum:
    """Minimal zero padding meeting the case's length/leading-zero demands."""
    case = datum.case
    positive = tuple(v for v in datum.lam if v > 0)
    zeros = 0
    if case.needs_leading_zero:
        zeros = 1
    if case.odd_length and (len(positive) + zeros) % 2 == 0:
        zeros += 1
    if not case.odd_length and (len(positive) + zeros) % 2 == 1:
        zeros += 1
    lam = (0,) * zeros + positive
    chi = {v: c for v, c in datum.chi if v in lam}
    if zeros:
        chi[0] = 0
    return OrbitDatum.of(case, datum.n, lam, chi, datum.m)


def pad_zero_pair(datum: OrbitDatum) -> OrbitDatum:
    """Add one zero pair (used by the padding-equivariance checks)."""
    lam = (0, 0) + datum.lam
    chi = dict(datum.chi)
    chi[0] = 0
    return OrbitDatum.of(datum.case, datum.n, lam, chi, datum.m)


# -- enumeration ----------------------------------------------------------


@lru_cache(maxsize=None)
def enumerate_orbits(case: LieCase, n: int) -> tuple[OrbitDatum, ...]:
    """All orbits of the case at rank n, canonically padded, sorted by the
    orbit grammar string."""
    found: list[OrbitDatum] = []
    if case is LieCase.OOD:
        for m in range(n, -1, -1):
            for lam in _doubled_partitions(n - m):
                for chi in _admissible_chis(case, lam):
                    datum = canonicalize_padding(
                        OrbitDatum.of(case, n, lam, chi, m)
                    )
                    if is_valid(datum):
                        found.append(datum)
    else:
        if case is LieCase.OO:
            bases = partitions(2 * n + 1)
        elif case is LieCase.SP:
            bases = partitions(2 * n)
        else:
            bases = _doubled_partitions(n)
        for lam in bases:
            for chi in _admissible_chis(case, lam):
                datum = canonicalize_padding(OrbitDatum.of(case, n, lam, chi))
                if is_valid(datum):
                    found.append(datum)
    found.sort(key=render_orbit)
    return tuple(found)


def _doubled_partitions(k: int):
    """Partitions where every value has even multiplicity (sum 2k)."""
    return [
        tuple(sorted([p for p in base for _ in range(2)], reverse=True))
        for base in partitions(k)
    ]


def _admissible_chis(case: LieCase, lam) -> list[dict[int, int]]:
    """chi assignments in the case's box satisfying both monotonicity chains.

    Case-specific structure (blockability, jump structure, defect bound) is
    left to the validity predicate.
    """
    values = sorted({v for v in lam if v > 0})
    out: list[dict[int, int]] = []

    def go(i: int, prev_chi: int, prev_gap: int, acc: dict[int, int]):
        if i == len(values):
            out.append(dict(acc))
            return
        v = values[i]
        lo, hi = _chi_range(case, v)
        lo = max(lo, prev_chi)
        hi = min(hi, v - prev_gap)
        for c in range(lo, hi + 1):
            acc[v] = c
            go(i + 1, c, v - c, acc)
        acc.pop(v, None)

    go(0, 0, 0, {0: 0} if 0 in lam else {})
    return out


# -- component groups ------------------------------------------------------


@dataclass(frozen=True)
class ComponentGroupPresentation:
    """Elementary abelian 2-group from the case's generators and relations.

    classes: merged generator-index classes (1-based indices), in order of
    their smallest index; killed marks classes forced trivial.  For the EO
    case this presents the full orthogonal-level group; the character-carrying
    group is its even-product subgroup of index 2 (when nontrivial).
    """

    case: LieCase
    size: int
    generators: tuple[int, ...]
    classes: tuple[frozenset, ...]
    killed: tuple[bool, ...]

    @property
    def free_classes(self) -> tuple[frozenset, ...]:
        return tuple(c for c, k in zip(self.classes, self.killed) if not k)

    @property
    def rank(self) -> int:
        return len(self.free_classes)

    @property
    def order(self) -> int:
        return 2 ** self.rank

    @property
    def even_subgroup_order(self) -> int:
        return self.order // 2 if self.order > 1 else 1

    def vec(self, index: int) -> int | None:
        """Image of generator a_index as a bitmask over the free classes.

        0 for killed generators, None for non-generator indices.
        """
        if index not in self.generators:
            return None
        free = self.free_classes
        for bit, cls in enumerate(free):
            if index in cls:
                return 1 << bit
        return 0


def component_presentation(
    case: LieCase, n: int, lam, chi, m: int | None = None
) -> ComponentGroupPresentation:
    """Presentation from raw (possibly non-canonically padded) data."""
    lam = tuple(lam)
    chi_map = {v: c for v, c in _chi_pairs(lam, chi)}
    size = len(lam)
    if case is LieCase.SP:
        return ComponentGroupPresentation(case, size, (), (), ())

    def is_generator(i: int) -> bool:  # 1-based
        v = lam[i - 1]
        if case is LieCase.SPD:
            return 2 * chi_map[v] != v - 1
        return 2 * chi_map[v] != v

    gens = tuple(i for i in range(1, size + 1) if is_generator(i))
    parent = {i: i for i in gens}

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    strict = case is not LieCase.SPD
    for i in range(1, size):
        if i in parent and (i + 1) in parent:
            lhs = chi_map[lam[i - 1]] + chi_map[lam[i]]
            if (lhs > lam[i]) if strict else (lhs >= lam[i]):
                parent[find(i)] = find(i + 1)

    mult = Counter(lam)
    killed_gens = set()
    for i in gens:
        v = lam[i - 1]
        if case in (LieCase.OO, LieCase.EO):
            if mult[v] % 2 == 1:
                killed_gens.add(i)
        elif case is LieCase.SPD:
            if v == 0:
                killed_gens.add(i)
        elif case is LieCase.OOD:
            # strict comparison; the killed generator is exactly the one whose
            # merged entry joins the defect interval
            if i == size and m is not None and chi_map[v] > m:
                killed_gens.add(i)

    groups: dict[int, set[int]] = {}
    for i in gens:
        groups.setdefault(find(i), set()).add(i)
    classes = tuple(
        frozenset(c) for c in sorted(groups.values(), key=min)
    )
    killed = tuple(bool(c & killed_gens) for c in classes)
    return ComponentGroupPresentation(case, size, gens, classes, killed)


def component_group(datum: OrbitDatum) -> ComponentGroupPresentation:
    return component_presentation(
        datum.case, datum.n, datum.lam, datum.chi, datum.m
    )


def a_group_order(datum: OrbitDatum) -> int:
    """Order of the character-carrying component group."""
    pres = component_group(datum)
    if datum.case is LieCase.EO:
        return pres.even_subgroup_order
    return pres.order


def is_degenerate(datum: OrbitDatum) -> bool:
    """EO only: classes not split by the full orthogonal group."""
    if datum.case is not LieCase.EO:
        return False
    return all(2 * c == v for v, c in datum.chi)


# -- distinguished constructions -------------------------------------------


def zero_orbit(case: LieCase, n: int) -> OrbitDatum:
    ones = {
        LieCase.SP: (2 * n, 0),
        LieCase.OO: (2 * n + 1, 1),
        LieCase.EO: (2 * n, 1),
        LieCase.SPD: (2 * n, 0),
        LieCase.OOD: (2 * n, 1),
    }[case]
    count, chi1 = ones
    lam = (1,) * count
    chi = {1: chi1} if count else {}
    m = 0 if case.has_defect else None
    return canonicalize_padding(OrbitDatum.of(case, n, lam, chi, m))


def regular_orbit(case: LieCase, n: int) -> OrbitDatum:
    if case is LieCase.OOD:
        return OrbitDatum.of(case, n, (), {}, n)
    if n == 0:
        return zero_orbit(case, n)
    if case is LieCase.SP:
        lam, chi = (2 * n,), {2 * n: n}
    elif case is LieCase.OO:
        lam, chi = (n, n + 1), {n: n, n + 1: n + 1}
    elif case is LieCase.EO:
        lam, chi = (n, n), {n: n}
    else:
        lam, chi = (n, n), {n: n}
    return canonicalize_padding(OrbitDatum.of(case, n, lam, chi))


# -- string grammar ---------------------------------------------------------


def render_orbit(datum: OrbitDatum) -> str:
    chi = datum.chi_map
    items = [f"{v}_{chi[v]}" for v in datum.lam[::-1] if v > 0]
    body = ",".join(items) if items else "-"
    if datum.case.has_defect:
        return f"m={datum.m};{body}"
    return body


def parse_orbit(text: str, case: LieCase, n: int) -> OrbitDatum:
    """Parse the grammar; the result is canonically padded and validated."""
    text = text.strip()
    m = None
    if case.has_defect:
        if not text.startswith("m="):
            raise ValueError(f"{case.value} orbit string needs an m= prefix")
        head, _, text = text.partition(";")
        m = int(head[2:])
    elif text.startswith("m="):
        raise ValueError("m= prefix only applies to the ood case")
    parts: list[int] = []
    chi: dict[int, int] = {}
    if text != "-":
        for item in text.split(","):
            v_str, _, c_str = item.partition("_")
            v, c = int(v_str), int(c_str)
            if chi.setdefault(v, c) != c:
                raise ValueError(f"conflicting chi for value {v}")
            parts.append(v)
    datum = canonicalize_padding(OrbitDatum.of(case, n, parts, chi, m))
    bad = validate_orbit(datum)
    if bad:
        raise ValueError(f"invalid orbit {text!r}: " + "; ".join(bad))
    return datum
