"""The finite set of normalized ideals of a semigroup, and the gap antichains it mirrors."""

from __future__ import annotations

from functools import cached_property
from typing import Iterator

import numpy as np

from . import _kernels
from .ideals import (
    Kunz,
    NormalizedIdeal,
    _make,
    ideal_from_generators,
    ideal_from_kunz,
)
from .semigroup import NumericalSemigroup


class IdealFamily:
    """All normalized ideals of ``ambient`` in lexicographic order of Kunz vectors.

    Index 0 is always the natural numbers (the zero vector) and the last index
    is the ambient semigroup. Because ``I ⊊ J`` forces ``J``'s vector to be
    lexicographically smaller, every strictly larger ideal (for ⊆ or ⪯) has a
    smaller index; :mod:`kunzlattice.order` relies on this.
    """

    def __init__(self, ambient: NumericalSemigroup, vectors: list[Kunz]):
        self.ambient = ambient
        self.ideals: tuple[NormalizedIdeal, ...] = tuple(_make(ambient, x) for x in vectors)
        self.index: dict[Kunz, int] = {x: i for i, x in enumerate(vectors)}
        self._orders: dict[str, object] = {}

    def __len__(self) -> int:
        return len(self.ideals)

    def __iter__(self) -> Iterator[NormalizedIdeal]:
        return iter(self.ideals)

    def __getitem__(self, i: int) -> NormalizedIdeal:
        return self.ideals[i]

    def __contains__(self, I: NormalizedIdeal) -> bool:
        return I.ambient == self.ambient and I.kunz in self.index

    def __repr__(self) -> str:
        return f"IdealFamily({self.ambient}, {len(self)} ideals)"

    def index_of(self, I: NormalizedIdeal | Kunz) -> int:
        key = I.kunz if isinstance(I, NormalizedIdeal) else tuple(I)
        return self.index[key]

    def lookup(self, x) -> NormalizedIdeal:
        """The family member with Kunz vector ``x``; raises if ``x`` is not valid."""
        x = tuple(x)
        if x in self.index:
            return self.ideals[self.index[x]]
        return ideal_from_kunz(self.ambient, x)

    @property
    def vectors(self) -> list[Kunz]:
        return [I.kunz for I in self.ideals]

    @cached_property
    def rows(self) -> np.ndarray:
        """Kunz vectors as an ``n x m`` array with a leading zero column."""
        return _kernels.full_rows(self.vectors, self.ambient.multiplicity)

    @cached_property
    def sum_table(self) -> np.ndarray:
        """``sum_table[i, j]`` is the index of ``ideals[i] + ideals[j]``."""
        X = self.rows
        n, m = X.shape
        radix = np.array([k + 1 for k in self.ambient.kunz], dtype=np.int64)
        weights = np.ones(m - 1, dtype=np.int64)
        for t in range(m - 3, -1, -1):
            weights[t] = weights[t + 1] * radix[t + 1]
        size = int(np.prod(radix)) if m > 1 else 1
        lut = np.full(size, -1, dtype=np.int64)
        lut[X[:, 1:] @ weights] = np.arange(n)
        table = np.empty((n, n), dtype=np.int64)
        for i in range(n):
            Z = _kernels.batch_sum(X[i], X)
            table[i] = lut[Z[:, 1:] @ weights]
        return table


def _kunz_vectors(S: NumericalSemigroup) -> list[Kunz]:
    """Backtracking over x_1, x_2, ... with the inequalities checked as soon as both ends are set.

    Each inequality reads ``x_b <= x_a + c(a, b)`` with
    ``c(a, b) = k_{(b-a) mod m} + [b < a]``.
    """
    m = S.multiplicity
    k = (0,) + S.kunz
    if m == 1:
        return [()]
    c = [[0] * m for _ in range(m)]
    for a in range(1, m):
        for b in range(1, m):
            if a != b:
                c[a][b] = k[(b - a) % m] + (b < a)

    out: list[Kunz] = []
    x = [0] * m

    def extend(t: int) -> None:
        if t == m:
            out.append(tuple(x[1:]))
            return
        hi = k[t]
        lo = 0
        for a in range(1, t):
            hi = min(hi, x[a] + c[a][t])
            lo = max(lo, x[a] - c[t][a])
        for v in range(lo, hi + 1):
            x[t] = v
            extend(t + 1)

    extend(1)
    return out


def enumerate_normalized_ideals(S: NumericalSemigroup) -> IdealFamily:
    return IdealFamily(S, _kunz_vectors(S))


def gap_comparabilities(S: NumericalSemigroup) -> tuple[tuple[int, ...], list[int]]:
    """Gaps of ``S`` and, per gap, a bitmask of the other gaps comparable to it under ``<=_S``."""
    gaps = S.gaps
    comp = [0] * len(gaps)
    for i, g in enumerate(gaps):
        for j, h in enumerate(gaps):
            if i != j and (S.leq(g, h) or S.leq(h, g)):
                comp[i] |= 1 << j
    return gaps, comp


BRUTE_FORCE_LIMIT = 16


def _antichains_by_subsets(comp: list[int]) -> int:
    n = len(comp)
    count = 0
    for mask in range(1 << n):
        rest = mask
        ok = True
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            if comp[i] & mask:
                ok = False
                break
            rest ^= low
        count += ok
    return count


def _antichains_by_recursion(comp: list[int]) -> int:
    memo: dict[int, int] = {0: 1}

    def count(avail: int) -> int:
        if avail in memo:
            return memo[avail]
        low = avail & -avail
        i = low.bit_length() - 1
        rest = avail ^ low
        # antichains avoiding gap i, plus those containing it
        total = count(rest) + count(rest & ~comp[i])
        memo[avail] = total
        return total

    return count((1 << len(comp)) - 1)


def antichain_count(S: NumericalSemigroup, method: str = "auto") -> int:
    """Number of antichains (empty one included) of the gaps under ``<=_S``."""
    _, comp = gap_comparabilities(S)
    if method == "auto":
        method = "subsets" if len(comp) <= BRUTE_FORCE_LIMIT else "recursion"
    if method == "subsets":
        return _antichains_by_subsets(comp)
    if method == "recursion":
        return _antichains_by_recursion(comp)
    raise ValueError(f"unknown method {method!r}")


def principal_family(S: NumericalSemigroup) -> list[NormalizedIdeal]:
    """The ideals ``{0, g} + S`` for the gaps ``g``, deduplicated, in canonical order."""
    seen = {ideal_from_generators(S, (0, g)) for g in S.gaps}
    return sorted(seen, key=lambda I: I.kunz)
