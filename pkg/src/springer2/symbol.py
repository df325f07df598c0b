"""Gap-constrained symbol spaces with shift, addition and bipartition bijections.

A space is parameterized by (r, s, n, d).  Members are pairs (A, B) of
nondecreasing sequences of nonnegative integers with len(A) = m + d and
len(B) = m, row gaps >= r + s, b_1 >= s, and row sum

    n + r*(m+e)*(m+d-e-1) + s*(m+e)*(m+d-e),        e = floor(d/2).

The shift prepends (0, s) and translates everything else by r + s; members are
considered up to shift.  Unordered spaces (s = 0) are additionally quotiented
by swapping the rows (d = 0) or by the d <-> -d involution (d = 1, where the
d = +1 orientation is the stored one).

Representatives: a Symbol keeps the rows it was built with (tables and the CLI
show natural-length representatives), while equality and hashing go through
the minimal-shift, swap-oriented normal form, so symbols of the same class
always compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bipartition import (
    Bipartition,
    UnorderedBipartition,
    enumerate_bipartitions,
)

Row = tuple[int, ...]


@dataclass(frozen=True)
class SymbolSpace:
    r: int
    s: int
    n: int
    d: int
    unordered: bool = False

    def __post_init__(self) -> None:
        if self.r < 0 or self.s < 0 or self.n < 0:
            raise ValueError("r, s, n must be nonnegative")
        if self.unordered and (self.s != 0 or self.d < 0):
            raise ValueError("unordered spaces require s = 0 and d >= 0")

    @property
    def e(self) -> int:
        return self.d // 2

    @property
    def step(self) -> int:
        return self.r + self.s

    def sum_target(self, m: int) -> int:
        e = self.e
        return (
            self.n
            + self.r * (m + e) * (m + self.d - e - 1)
            + self.s * (m + e) * (m + self.d - e)
        )

    def __str__(self) -> str:
        kind = "Y" if self.unordered else "X"
        return f"{kind}({self.n},{self.d})^({self.r},{self.s})"


def validate(a, b, space: SymbolSpace) -> list[str]:
    """Return the list of violated membership conditions (empty if valid)."""
    a, b = tuple(a), tuple(b)
    bad: list[str] = []
    m = len(b)
    if len(a) - m != space.d:
        bad.append(f"len(A) - len(B) = {len(a) - m}, expected d = {space.d}")
    if any(x < 0 for x in a + b):
        bad.append("negative entry")
    step = space.step
    for row, name in ((a, "A"), (b, "B")):
        for i in range(len(row) - 1):
            if row[i + 1] - row[i] < step:
                bad.append(
                    f"{name} gap {row[i]}..{row[i + 1]} < r+s = {step}"
                )
    if b and b[0] < space.s:
        bad.append(f"b_1 = {b[0]} < s = {space.s}")
    if len(a) - m == space.d:
        want = space.sum_target(m)
        got = sum(a) + sum(b)
        if got != want:
            bad.append(f"sum {got} != {want}")
    return bad


class InvalidSymbolError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Symbol:
    a: Row
    b: Row
    space: SymbolSpace

    def __post_init__(self) -> None:
        bad = validate(self.a, self.b, self.space)
        if bad:
            raise InvalidSymbolError(
                f"({self.a}, {self.b}) not in {self.space}: " + "; ".join(bad)
            )

    # -- representatives -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.b)

    def shift(self) -> "Symbol":
        step, s = self.space.step, self.space.s
        return Symbol(
            (0,) + tuple(x + step for x in self.a),
            (s,) + tuple(x + step for x in self.b),
            self.space,
        )

    def _key(self) -> tuple:
        a, b = _strip(self.a, self.b, self.space.r, self.space.s)
        if self.space.unordered and self.space.d == 0 and (b, a) < (a, b):
            a, b = b, a
        return (self.space, a, b)

    def canonical(self) -> "Symbol":
        """Minimal-length (and, for unordered d=0, swap-oriented) member."""
        _, a, b = self._key()
        return Symbol(a, b, self.space)

    def at_m(self, m: int) -> "Symbol":
        """The representative with len(B) = m (shift up from canonical)."""
        sym = self.canonical()
        if sym.m > m:
            raise ValueError(f"class of {self} needs at least m = {sym.m}")
        while sym.m < m:
            sym = sym.shift()
        return sym

    def __eq__(self, other) -> bool:
        return isinstance(other, Symbol) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    # -- structure -------------------------------------------------------

    def is_distinguished(self) -> bool:
        """Interleaving test a_1 <= b_1 <= a_2 <= ...; d in {0, 1} only.

        For unordered d = 0 classes either orientation may interleave.
        """
        if self.space.d not in (0, 1):
            raise ValueError("distinguished is defined for d in {0, 1}")
        if _interleaves(self.a, self.b):
            return True
        if self.space.unordered and self.space.d == 0:
            return _interleaves(self.b, self.a)
        return False

    def merged(self) -> Row:
        """The c-sequence a_1 <= b_1 <= a_2 <= ... of a distinguished symbol."""
        if not self.is_distinguished():
            raise ValueError(f"{self} is not distinguished")
        a, b = self.a, self.b
        if not _interleaves(a, b):
            a, b = b, a
        out = []
        for i in range(len(b)):
            out.append(a[i])
            out.append(b[i])
        out.extend(a[len(b):])
        return tuple(out)

    def to_bipartition(self):
        return to_bipartition(self)

    def __str__(self) -> str:
        return render_symbol(self)

    def __repr__(self) -> str:
        return f"Symbol({self.a}, {self.b}, {self.space})"


def _interleaves(a: Row, b: Row) -> bool:
    merged = []
    for i in range(len(b)):
        merged.append(a[i])
        merged.append(b[i])
    merged.extend(a[len(b):])
    return all(merged[i] <= merged[i + 1] for i in range(len(merged) - 1))


def _strip(a: Row, b: Row, r: int, s: int) -> tuple[Row, Row]:
    step = r + s
    while a and b and a[0] == 0 and b[0] == s:
        a = tuple(x - step for x in a[1:])
        b = tuple(x - step for x in b[1:])
    return a, b


def normalize(a, b, space: SymbolSpace) -> Symbol:
    """Validate (A, B) and return the canonical representative."""
    return Symbol(tuple(a), tuple(b), space).canonical()


def add(x: Symbol, y: Symbol) -> Symbol:
    """Entrywise sum, on representatives re-shifted to a common length."""
    if x.space.d != y.space.d:
        raise ValueError(f"mismatched d: {x.space.d} != {y.space.d}")
    while x.m < y.m:
        x = x.shift()
    while y.m < x.m:
        y = y.shift()
    sp = SymbolSpace(
        x.space.r + y.space.r,
        x.space.s + y.space.s,
        x.space.n + y.space.n,
        x.space.d,
        x.space.unordered and y.space.unordered,
    )
    return Symbol(
        tuple(p + q for p, q in zip(x.a, y.a)),
        tuple(p + q for p, q in zip(x.b, y.b)),
        sp,
    )


def from_bipartition(bp, space: SymbolSpace) -> Symbol:
    """Closed-form bijection: pad mu, nu ascending to lengths m+d, m and add
    the staircase a_i = mu_i + (i-1)(r+s), b_i = nu_i + s + (i-1)(r+s),
    with m = max(len(mu), len(nu))."""
    if space.d not in (0, 1):
        raise ValueError("bipartition bijections require d in {0, 1}")
    if isinstance(bp, UnorderedBipartition):
        if not (space.unordered and space.d == 0):
            raise ValueError(f"{space} indexes ordered bipartitions")
        mu, nu = bp.mu, bp.nu
    else:
        if space.unordered and space.d == 0:
            raise ValueError(f"{space} indexes unordered bipartitions")
        mu, nu = bp.mu, bp.nu
    if sum(mu) + sum(nu) != space.n:
        raise ValueError(f"size {sum(mu) + sum(nu)} != n = {space.n}")
    m = max(len(mu), len(nu))
    step = space.step
    mu_asc = [0] * (m + space.d - len(mu)) + sorted(mu)
    nu_asc = [0] * (m - len(nu)) + sorted(nu)
    a = tuple(mu_asc[i] + i * step for i in range(m + space.d))
    b = tuple(nu_asc[i] + space.s + i * step for i in range(m))
    return Symbol(a, b, space)


def to_bipartition(sym: Symbol):
    """Inverse of from_bipartition; works on any representative."""
    space = sym.space
    if space.d not in (0, 1):
        raise ValueError("bipartition bijections require d in {0, 1}")
    step = space.step
    mu = _row_to_partition(sym.a, 0, step)
    nu = _row_to_partition(sym.b, space.s, step)
    if space.unordered and space.d == 0:
        return UnorderedBipartition.of(mu, nu)
    return Bipartition(mu, nu)


def _row_to_partition(row: Row, base: int, step: int) -> tuple[int, ...]:
    parts = [row[i] - base - i * step for i in range(len(row))]
    assert all(p >= 0 for p in parts)
    return tuple(sorted((p for p in parts if p > 0), reverse=True))


def enumerate_space(space: SymbolSpace, max_m: int | None = None) -> list[Symbol]:
    """All classes of the space, duplicate-free, deterministically ordered.

    d in {0, 1}: image of the bipartition bijection.  Other d: bounded direct
    search over representatives of row length up to max_m (default
    max(0, -d) + n + 1, which exhausts all classes).
    """
    if space.d in (0, 1):
        unord = space.unordered and space.d == 0
        return [
            from_bipartition(bp, space)
            for bp in enumerate_bipartitions(space.n, unordered=unord)
        ]
    if max_m is None:
        max_m = max(0, -space.d) + space.n + 1
    seen: set[Symbol] = set()
    out: list[Symbol] = []
    for m in range(max(0, -space.d), max_m + 1):
        for a, b in _search_members(space, m):
            sym = Symbol(a, b, space)
            if sym not in seen:
                seen.add(sym)
                out.append(sym)
    return out


def _search_members(space: SymbolSpace, m: int):
    """Exhaustive search for members with len(B) = m, via the sum identity."""
    total = space.sum_target(m)
    if total < 0:
        return
    la = m + space.d
    step = space.step
    min_a = step * la * (la - 1) // 2
    min_b = space.s * m + step * m * (m - 1) // 2
    if min_a + min_b > total:
        return
    for sum_a in range(min_a, total - min_b + 1):
        for a in _gapped_rows(la, 0, step, sum_a):
            for b in _gapped_rows(m, space.s, step, total - sum_a):
                yield a, b


def _gapped_rows(length: int, first_min: int, step: int, total: int):
    """Nondecreasing rows with gaps >= step, first entry >= first_min,
    exact sum total."""
    if length == 0:
        if total == 0:
            yield ()
        return
    if length == 1:
        if total >= first_min:
            yield (total,)
        return
    # smallest possible sum given first value v is length*v + staircase
    tail = step * length * (length - 1) // 2
    if total < tail + first_min * length:
        return
    v_max = (total - tail) // length
    for v in range(first_min, v_max + 1):
        for rest in _gapped_rows(length - 1, v + step, step, total - v):
            yield (v,) + rest


def is_empty(space: SymbolSpace, max_m: int | None = None) -> bool:
    """Certify emptiness by bounded direct search."""
    return not enumerate_space(space, max_m=max_m)


# -- string grammar ------------------------------------------------------


def render_symbol(sym: Symbol) -> str:
    return "A={};B={}".format(
        ",".join(map(str, sym.a)), ",".join(map(str, sym.b))
    )


def parse_symbol(text: str, space: SymbolSpace) -> Symbol:
    """Parse 'A=0,4,8;B=2,7' (empty row after '=' allowed)."""
    try:
        part_a, part_b = text.strip().split(";")
        if not part_a.startswith("A=") or not part_b.startswith("B="):
            raise ValueError
        row = lambda t: tuple(int(x) for x in t.split(",")) if t else ()
        a, b = row(part_a[2:].strip()), row(part_b[2:].strip())
    except ValueError:
        raise ValueError(f"cannot parse symbol string {text!r}") from None
    return Symbol(a, b, space)
