import pytest

from springer2.bipartition import enumerate_bipartitions
from springer2.symbol import Symbol, SymbolSpace, enumerate_space, from_bipartition
from springer2.interval import (
    MultipleDistinguishedElementsError,
    NoDistinguishedElementError,
    NotAnIntervalError,
    act,
    canonical_character,
    character_subsets,
    decompose,
    distinguished_of_class,
    similar,
    similarity_class,
)

FAMILIES = {
    "sp": lambda n: SymbolSpace(n + 1, n + 1, n, 1),
    "oo": lambda n: SymbolSpace(2, n + 1, n, 1),
    "eo": lambda n: SymbolSpace(n + 1, 0, n, 0, unordered=True),
    "spd": lambda n: SymbolSpace(1, n + 1, n, 1),
    "ood": lambda n: SymbolSpace(n + 1, 0, n, 1, unordered=True),
}


def test_decompose_examples():
    dec = decompose(Symbol((0, 4, 8), (2, 7), SymbolSpace(2, 2, 1, 1)))
    assert dec.intervals == ((0, 2, 4, 7, 8),)
    assert dec.initial == (0, 2, 4, 7, 8)
    assert dec.proper == ()

    # A = B: empty working set
    dec = decompose(Symbol((1,), (1,), SymbolSpace(3, 0, 2, 0, unordered=True)))
    assert dec.s_values == ()
    assert dec.intervals == ()

    dec = decompose(Symbol((0, 8, 16, 26), (6, 15, 24), SymbolSpace(2, 6, 5, 1)))
    assert dec.intervals == ((0, 6, 8, 15, 16), (24, 26))
    assert dec.initial == (0, 6, 8, 15, 16)
    assert dec.proper == ((24, 26),)


def test_decompose_rejects_r0():
    with pytest.raises(ValueError):
        decompose(Symbol((0, 0), (1,), SymbolSpace(0, 0, 1, 1)))


def test_act_examples():
    sym = Symbol((0, 8, 16, 26), (6, 15, 24), SymbolSpace(2, 6, 5, 1))
    assert act(sym, []) is not None
    assert act(sym, []).a == sym.a
    swapped = act(sym, [(24, 26)])
    assert (swapped.a, swapped.b) == ((0, 8, 16, 24), (6, 15, 26))
    with pytest.raises(NotAnIntervalError):
        act(sym, [(6, 8)])


def test_act_full_set_fixes_unordered_class():
    sym = from_bipartition(
        enumerate_bipartitions(3, unordered=True)[1],
        SymbolSpace(4, 0, 3, 0, unordered=True),
    )
    dec = decompose(sym)
    assert act(sym, dec.intervals) == sym


def test_similarity_class_examples():
    sym = Symbol((0, 8, 16, 26), (6, 15, 24), SymbolSpace(2, 6, 5, 1))
    assert len(similarity_class(sym)) == 2
    sym = Symbol((0, 4), (3,), SymbolSpace(2, 2, 1, 1))
    assert similarity_class(sym) == [sym]
    sym = Symbol((1,), (1,), SymbolSpace(3, 0, 2, 0, unordered=True))
    assert similarity_class(sym) == [sym]


def test_distinguished_of_class_examples():
    sym = Symbol((0, 8, 16, 24), (6, 15, 26), SymbolSpace(2, 6, 5, 1))
    assert distinguished_of_class(sym) == Symbol(
        (0, 8, 16, 26), (6, 15, 24), SymbolSpace(2, 6, 5, 1)
    )
    dist = Symbol((0, 4), (3,), SymbolSpace(2, 2, 1, 1))
    assert distinguished_of_class(dist) == dist
    sym = Symbol((0, 3), (1, 4), SymbolSpace(3, 0, 2, 0, unordered=True))
    assert distinguished_of_class(sym) == sym


@pytest.mark.parametrize("family", sorted(FAMILIES))
@pytest.mark.parametrize("n", range(7))
def test_action_group_laws(family, n):
    space = FAMILIES[family](n)
    for sym in enumerate_space(space):
        dec = decompose(sym)
        subsets = character_subsets(dec)
        for f in subsets:
            for g in subsets:
                lhs = act(act(sym, f), g)
                sym_diff = canonical_character(dec, f ^ g)
                assert lhs == act(sym, sym_diff)


@pytest.mark.parametrize("family", sorted(FAMILIES))
@pytest.mark.parametrize("n", range(7))
def test_action_free_transitive_and_preserves_structure(family, n):
    space = FAMILIES[family](n)
    all_symbols = enumerate_space(space)
    for sym in all_symbols:
        dec = decompose(sym)
        orbit = similarity_class(sym)
        # free: distinct subsets give distinct symbols
        assert len(set(orbit)) == len(orbit)
        # transitive: the orbit is exactly the similar members of the space,
        # compared at a common representative length
        by_similarity = set()
        for t in all_symbols:
            length = max(sym.m, t.canonical().m)
            if similar(t.at_m(length), sym.at_m(length)):
                by_similarity.add(t)
        assert set(orbit) == by_similarity
        expected = 2 ** len(dec.proper)
        if space.unordered:
            expected = 2 ** max(len(dec.intervals) - 1, 0)
        assert len(orbit) == expected
        for t in orbit:
            tdec = decompose(t)
            assert tdec.s_values == dec.s_values
            assert set(t.a) & set(t.b) == set(sym.a) & set(sym.b)
            assert tdec.intervals == dec.intervals


@pytest.mark.parametrize("family", sorted(FAMILIES))
@pytest.mark.parametrize("n", range(7))
def test_exactly_one_distinguished_per_class(family, n):
    space = FAMILIES[family](n)
    seen = set()
    for sym in enumerate_space(space):
        if sym in seen:
            continue
        orbit = similarity_class(sym)
        seen.update(orbit)
        found = [t for t in orbit if t.is_distinguished()]
        assert len(found) == 1, (sym, found)


@pytest.mark.parametrize("family", sorted(FAMILIES))
@pytest.mark.parametrize("n", range(7))
def test_proper_interval_structure_is_shift_stable(family, n):
    space = FAMILIES[family](n)
    for sym in enumerate_space(space):
        dec = decompose(sym)
        shifted_dec = decompose(sym.shift())
        assert len(shifted_dec.proper) == len(dec.proper)
        step = space.step
        assert shifted_dec.proper == tuple(
            tuple(v + step for v in i) for i in dec.proper
        )
