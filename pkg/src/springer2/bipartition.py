"""Integer partitions and pairs of partitions indexing Weyl group characters.

Conventions:
  - A partition is a tuple of positive integers, nonincreasing.  The empty
    partition is ().
  - A Bipartition is an ordered pair (mu, nu) of partitions; it indexes an
    irreducible character of the hyperoctahedral group of rank |mu| + |nu|.
    The trivial character is ((n), ()) and the sign character is ((), (1^n)).
  - An UnorderedBipartition is a swap-class {mu, nu}; the stored representative
    is the lexicographically smaller ordered pair.  A class is degenerate when
    mu == nu.
  - Componentwise constraints read the parts in descending order, with missing
    parts equal to 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

Partition = tuple[int, ...]


def is_partition(parts: tuple[int, ...]) -> bool:
    return all(p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def as_partition(parts) -> Partition:
    """Coerce an iterable of positive integers into a partition tuple."""
    t = tuple(sorted((int(p) for p in parts), reverse=True))
    if not is_partition(t):
        raise ValueError(f"not a partition: {parts!r}")
    return t


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n with parts <= max_part, in descending-lex order."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    if max_part is None or max_part > n:
        max_part = n
    result = []
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            result.append((first,) + rest)
    return tuple(result)


def removable_boxes(p: Partition) -> list[int]:
    """0-based part indices from which one box can be removed."""
    return [
        i
        for i in range(len(p))
        if i + 1 == len(p) or p[i] > p[i + 1]
    ]


def remove_box(p: Partition, i: int) -> Partition:
    parts = list(p)
    parts[i] -= 1
    if parts[i] == 0:
        del parts[i]
    return tuple(parts)


@dataclass(frozen=True, order=True)
class Bipartition:
    """Ordered pair of partitions (mu, nu)."""

    mu: Partition
    nu: Partition

    def __post_init__(self) -> None:
        if not (is_partition(self.mu) and is_partition(self.nu)):
            raise ValueError(f"invalid bipartition ({self.mu}, {self.nu})")

    @property
    def n(self) -> int:
        return sum(self.mu) + sum(self.nu)

    def __str__(self) -> str:
        fmt = lambda p: "(" + ",".join(map(str, p)) + ")" if p else "()"
        return f"({fmt(self.mu)},{fmt(self.nu)})"


@dataclass(frozen=True, order=True)
class UnorderedBipartition:
    """Swap-class {mu, nu}; representative is the lex-smaller ordered pair."""

    mu: Partition
    nu: Partition

    def __post_init__(self) -> None:
        if (self.nu, self.mu) < (self.mu, self.nu):
            raise ValueError("unordered representative must be lex-minimal")
        if not (is_partition(self.mu) and is_partition(self.nu)):
            raise ValueError(f"invalid bipartition ({self.mu}, {self.nu})")

    @classmethod
    def of(cls, mu, nu) -> "UnorderedBipartition":
        a, b = tuple(mu), tuple(nu)
        if (b, a) < (a, b):
            a, b = b, a
        return cls(a, b)

    @property
    def n(self) -> int:
        return sum(self.mu) + sum(self.nu)

    @property
    def degenerate(self) -> bool:
        return self.mu == self.nu

    def ordered(self) -> Bipartition:
        return Bipartition(self.mu, self.nu)

    def __str__(self) -> str:
        fmt = lambda p: "(" + ",".join(map(str, p)) + ")" if p else "()"
        return f"{{{fmt(self.mu)},{fmt(self.nu)}}}"


def enumerate_bipartitions(n: int, unordered: bool = False) -> list:
    """All (un)ordered bipartitions of n, deterministically ordered.

    Ordered count is sum_k p(k) p(n-k).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not unordered:
        return [
            Bipartition(mu, nu)
            for k in range(n, -1, -1)
            for mu in partitions(k)
            for nu in partitions(n - k)
        ]
    seen: set[UnorderedBipartition] = set()
    out: list[UnorderedBipartition] = []
    for bp in enumerate_bipartitions(n):
        ubp = UnorderedBipartition.of(bp.mu, bp.nu)
        if ubp not in seen:
            seen.add(ubp)
            out.append(ubp)
    return out


def branch(bp: Bipartition) -> list[Bipartition]:
    """All bipartitions obtained by removing one removable box from mu or nu.

    Multiplicity-free; this is restriction of the rank-n character to rank n-1.
    """
    if bp.n == 0:
        raise ValueError("cannot branch the empty bipartition")
    out = []
    for i in removable_boxes(bp.mu):
        out.append(Bipartition(remove_box(bp.mu, i), bp.nu))
    for i in removable_boxes(bp.nu):
        out.append(Bipartition(bp.mu, remove_box(bp.nu, i)))
    return sorted(out)


def branch_unordered(ubp: UnorderedBipartition) -> list[UnorderedBipartition]:
    """Class-level branching; the list carries class multiplicities."""
    if ubp.n == 0:
        raise ValueError("cannot branch the empty class")
    return sorted(
        UnorderedBipartition.of(t.mu, t.nu) for t in branch(ubp.ordered())
    )


class Constraint(Enum):
    """Componentwise constraints on (mu, nu), descending parts, zero padded."""

    ALL = "all"
    NU_LE_MU = "nu<=mu"
    NU_LE_MU_PLUS_1 = "nu<=mu+1"
    NU_LE_MU_PLUS_2 = "nu<=mu+2"
    NU_SHIFTED_LE_MU = "nu[i+1]<=mu[i]"


def nu_le_mu_plus(k: int) -> Constraint:
    try:
        return {
            0: Constraint.NU_LE_MU,
            1: Constraint.NU_LE_MU_PLUS_1,
            2: Constraint.NU_LE_MU_PLUS_2,
        }[k]
    except KeyError:
        raise ValueError(f"k must be 0, 1 or 2, got {k}") from None


def satisfies(bp: Bipartition, constraint: Constraint) -> bool:
    mu, nu = bp.mu, bp.nu
    if constraint is Constraint.ALL:
        return True
    if constraint is Constraint.NU_SHIFTED_LE_MU:
        # nu_{i+1} <= mu_i for i >= 1; nu_1 unconstrained (mu_0 = +infinity).
        return all(
            nu[j] <= (mu[j - 1] if j - 1 < len(mu) else 0)
            for j in range(1, len(nu))
        )
    k = {
        Constraint.NU_LE_MU: 0,
        Constraint.NU_LE_MU_PLUS_1: 1,
        Constraint.NU_LE_MU_PLUS_2: 2,
    }[constraint]
    return all(
        nu[j] <= (mu[j] if j < len(mu) else 0) + k for j in range(len(nu))
    )


def count_constrained(n: int, constraint: Constraint) -> int:
    """Number of ordered bipartitions of n satisfying the constraint."""
    return sum(1 for bp in enumerate_bipartitions(n) if satisfies(bp, constraint))
