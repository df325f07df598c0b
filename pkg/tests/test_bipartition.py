import pytest

from springer2.bipartition import (
    Bipartition,
    Constraint,
    UnorderedBipartition,
    branch,
    branch_unordered,
    count_constrained,
    enumerate_bipartitions,
    nu_le_mu_plus,
    partitions,
    removable_boxes,
)


def partition_count(n: int) -> int:
    # Independent oracle: DP over (amount, max part), not the generator's
    # descending-lex recursion.
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for k in range(n + 1):
        table[0][k] = 1
    for amount in range(1, n + 1):
        for k in range(1, n + 1):
            table[amount][k] = table[amount][k - 1]
            if amount >= k:
                table[amount][k] += table[amount - k][k]
    return table[n][n]


def test_enumerate_trivial_cases():
    assert enumerate_bipartitions(0) == [Bipartition((), ())]
    assert enumerate_bipartitions(1) == [
        Bipartition((1,), ()),
        Bipartition((), (1,)),
    ]
    assert len(enumerate_bipartitions(4)) == 20  # 5+3+4+3+5


@pytest.mark.parametrize("n", range(13))
def test_enumerate_counts(n):
    ordered = enumerate_bipartitions(n)
    expected = sum(
        partition_count(k) * partition_count(n - k) for k in range(n + 1)
    )
    assert len(ordered) == expected
    assert len(set(ordered)) == len(ordered)

    unordered = enumerate_bipartitions(n, unordered=True)
    degenerate = sum(1 for u in unordered if u.degenerate)
    # mu == nu forces n even and mu a partition of n/2
    assert degenerate == (partition_count(n // 2) if n % 2 == 0 else 0)
    assert 2 * len(unordered) == expected + degenerate


def test_branch_examples():
    assert branch(Bipartition((2,), ())) == [Bipartition((1,), ())]
    assert sorted(branch(Bipartition((1,), (1,)))) == sorted(
        [Bipartition((), (1,)), Bipartition((1,), ())]
    )
    assert sorted(branch(Bipartition((2, 1), (1,)))) == sorted(
        [
            Bipartition((1, 1), (1,)),
            Bipartition((2,), (1,)),
            Bipartition((2, 1), ()),
        ]
    )


def test_branch_unordered_examples():
    assert branch_unordered(UnorderedBipartition.of((1,), (1,))) == [
        UnorderedBipartition.of((), (1,)),
        UnorderedBipartition.of((), (1,)),
    ]
    assert branch_unordered(UnorderedBipartition.of((2,), ())) == [
        UnorderedBipartition.of((1,), ())
    ]
    assert branch_unordered(UnorderedBipartition.of((1, 1), ())) == [
        UnorderedBipartition.of((1,), ())
    ]


def test_branch_errors_on_empty():
    with pytest.raises(ValueError):
        branch(Bipartition((), ()))
    with pytest.raises(ValueError):
        branch_unordered(UnorderedBipartition.of((), ()))


@pytest.mark.parametrize("n", range(1, 9))
def test_branch_shape(n):
    for bp in enumerate_bipartitions(n):
        targets = branch(bp)
        assert len(targets) == len(set(targets))
        assert len(targets) == len(removable_boxes(bp.mu)) + len(
            removable_boxes(bp.nu)
        )
        assert all(t.n == n - 1 for t in targets)


@pytest.mark.parametrize("n", range(3, 11))
def test_branch_injectivity_ordered(n):
    seen = {}
    for bp in enumerate_bipartitions(n):
        key = tuple(branch(bp))
        assert key not in seen, (bp, seen[key])
        seen[key] = bp


@pytest.mark.parametrize("n", range(3, 11))
def test_branch_injectivity_unordered(n):
    seen = {}
    for ubp in enumerate_bipartitions(n, unordered=True):
        if ubp.degenerate:
            continue
        key = tuple(branch_unordered(ubp))
        assert key not in seen, (ubp, seen[key])
        seen[key] = ubp


def test_count_constrained_examples():
    assert count_constrained(2, nu_le_mu_plus(2)) == 5
    assert count_constrained(2, nu_le_mu_plus(0)) == 3
    assert count_constrained(1, Constraint.NU_SHIFTED_LE_MU) == 2
    assert count_constrained(3, Constraint.ALL) == 10


def test_partitions_descending_lex():
    assert partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
