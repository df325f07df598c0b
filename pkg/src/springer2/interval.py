"""Interval decompositions and the F2 subset action on similarity classes.

For a symbol (A, B) with r >= 1, the rows are treated as subsets of the
naturals (an integer appearing in both rows lies in A & B; within a row
entries are distinct because gaps are >= r + s >= 1).  The working set is
S = (A | B) - (A & B); an interval is a maximal cluster of S whose consecutive
elements differ by less than r + s.  An interval is initial when it contains
an element < s, proper otherwise.

Subsets F of the proper intervals act by swapping the A/B membership of the
entries inside each I in F; the orbit of this action is the similarity class
(all symbols with the same A | B and A & B).  For unordered spaces the action
factors through subsets modulo {empty, E}; class representatives are chosen
not to contain the anchor interval (the one containing max(S), which is the
interval of the last merged entry for the s = 0, d = 1 family).

Decompositions are computed on the representative rows a symbol carries; the
proper-interval structure does not depend on the choice (shifting translates S
and only grows the initial cluster), which the test suite checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .symbol import Symbol, validate

Interval = tuple[int, ...]
CharacterSubset = frozenset  # of Interval


class NoDistinguishedElementError(ValueError):
    pass


class MultipleDistinguishedElementsError(ValueError):
    pass


class NotAnIntervalError(ValueError):
    pass


@dataclass(frozen=True)
class IntervalDecomposition:
    sym: Symbol
    s_values: tuple[int, ...]
    intervals: tuple[Interval, ...]
    initial: Interval | None
    anchor: Interval | None

    @property
    def proper(self) -> tuple[Interval, ...]:
        return tuple(i for i in self.intervals if i != self.initial)

    @property
    def non_anchor(self) -> tuple[Interval, ...]:
        return tuple(i for i in self.intervals if i != self.anchor)


def decompose(sym: Symbol) -> IntervalDecomposition:
    space = sym.space
    if space.r < 1:
        raise ValueError("interval decomposition requires r >= 1")
    set_a, set_b = set(sym.a), set(sym.b)
    assert len(set_a) == len(sym.a) and len(set_b) == len(sym.b)
    s_values = tuple(sorted(set_a ^ set_b))
    step = space.step
    intervals: list[Interval] = []
    cluster: list[int] = []
    for v in s_values:
        if cluster and v - cluster[-1] >= step:
            intervals.append(tuple(cluster))
            cluster = []
        cluster.append(v)
    if cluster:
        intervals.append(tuple(cluster))
    initial = next((i for i in intervals if i[0] < space.s), None)
    anchor = None
    if space.s == 0 and intervals:
        anchor = intervals[-1]
    return IntervalDecomposition(sym, s_values, tuple(intervals), initial, anchor)


def act(sym: Symbol, subset) -> Symbol:
    """Swap A/B membership of the entries inside each interval of the subset.

    For unordered spaces the subset is reduced modulo complement first, so the
    action is well defined on character classes (acting by all of E fixes the
    class).
    """
    dec = decompose(sym)
    known = set(dec.intervals)
    chosen = set()
    for interval in subset:
        interval = tuple(interval)
        if interval not in known:
            raise NotAnIntervalError(f"{interval} is not an interval of {sym}")
        chosen.add(interval)
    if sym.space.unordered:
        chosen = set(canonical_character(dec, chosen))
    swap = set()
    for interval in chosen:
        swap.update(interval)
    set_a, set_b = set(sym.a), set(sym.b)
    new_a = sorted((set_a - swap) | (set_b & swap) | (set_a & set_b))
    new_b = sorted((set_b - swap) | (set_a & swap) | (set_a & set_b))
    if len(new_a) != len(sym.a):
        raise NotAnIntervalError(
            f"subset {sorted(chosen)} swaps an unbalanced interval of {sym}"
        )
    out = Symbol(tuple(new_a), tuple(new_b), sym.space)
    assert validate(out.a, out.b, sym.space) == []
    return out


def character_subsets(dec: IntervalDecomposition) -> list[CharacterSubset]:
    """The character space attached to a symbol, as canonical subsets.

    Ordered spaces: all subsets of the proper intervals.  Unordered spaces:
    subsets modulo complement, represented by the member avoiding the anchor.
    """
    if dec.sym.space.unordered:
        pool = dec.non_anchor
    else:
        pool = dec.proper
    out = []
    for k in range(len(pool) + 1):
        for combo in combinations(pool, k):
            out.append(frozenset(combo))
    return out


def canonical_character(dec: IntervalDecomposition, subset) -> CharacterSubset:
    """Reduce a subset of intervals to its canonical representative."""
    chosen = frozenset(tuple(i) for i in subset)
    if dec.sym.space.unordered and dec.anchor in chosen:
        chosen = frozenset(set(dec.intervals) - chosen)
    return chosen


def similarity_class(sym: Symbol) -> list[Symbol]:
    """The full orbit of the subset action (= all similar symbols)."""
    dec = decompose(sym)
    return [act(sym, f) for f in character_subsets(dec)]


def similar(x: Symbol, y: Symbol) -> bool:
    ax, bx = set(x.a), set(x.b)
    ay, by = set(y.a), set(y.b)
    return (ax | bx) == (ay | by) and (ax & bx) == (ay & by)


def distinguished_of_class(sym: Symbol) -> Symbol:
    """The unique distinguished element similar to sym.

    Raises a diagnostic error if none or several exist; neither happens for
    the five case families, which the verification suite certifies.
    """
    found = [t for t in similarity_class(sym) if t.is_distinguished()]
    if not found:
        raise NoDistinguishedElementError(f"no distinguished element: {sym}")
    if len(set(found)) > 1:
        raise MultipleDistinguishedElementsError(
            f"{len(found)} distinguished elements in the class of {sym}"
        )
    return found[0]
