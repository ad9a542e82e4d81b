"""Numerical semigroups, their invariants, and the tree of semigroups by genus.

A semigroup is stored three ways at once: its minimal generators, its Kunz
coordinates with respect to the multiplicity, and a bitmask of its members
below the conductor. All three are computed once, at construction.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import NotCoFinite, NotMinimalGenerator


@dataclass(frozen=True)
class NumericalSemigroup:
    """A co-finite submonoid of the non-negative integers.

    Equality and hashing only look at ``minimal_generators``; every other
    field is derived from it.
    """

    minimal_generators: tuple[int, ...]
    multiplicity: int = field(compare=False)
    frobenius: int = field(compare=False)
    kunz: tuple[int, ...] = field(compare=False)
    small_elements: int = field(compare=False, repr=False)

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    @property
    def genus(self) -> int:
        return sum(self.kunz)

    @property
    def gaps(self) -> tuple[int, ...]:
        mask = self.small_elements
        return tuple(n for n in range(self.conductor) if not mask >> n & 1)

    @property
    def apery(self) -> tuple[int, ...]:
        """Smallest member in each residue class modulo the multiplicity."""
        m = self.multiplicity
        return (0,) + tuple(m * k + i for i, k in enumerate(self.kunz, start=1))

    @property
    def is_ordinary(self) -> bool:
        return self.multiplicity == self.conductor or self.multiplicity == 1

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n >= self.conductor:
            return True
        return bool(self.small_elements >> n & 1)

    def contains(self, n: int) -> bool:
        return n in self

    def leq(self, a: int, b: int) -> bool:
        """The order induced by the semigroup: ``a <=_S b`` iff ``b - a`` is a member."""
        return (b - a) in self

    def elements(self, bound: int) -> Iterator[int]:
        """Members of the semigroup below ``bound``."""
        return (n for n in range(bound) if n in self)

    def remove_generator(self, a: int) -> NumericalSemigroup:
        """Return the semigroup with the minimal generator ``a`` deleted."""
        if a not in self.minimal_generators:
            raise NotMinimalGenerator(f"{a} is not a minimal generator of {self}")
        old = self.conductor
        new = max(old, a + 1)
        mask = self.small_elements | (((1 << new) - 1) ^ ((1 << old) - 1))
        return _from_mask(mask & ~(1 << a), new)

    def children(self) -> list[NumericalSemigroup]:
        """Children in the genus tree: remove each minimal generator above F(S)."""
        return [
            self.remove_generator(a)
            for a in self.minimal_generators
            if a > self.frobenius
        ]

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.minimal_generators)) + ">"


def _from_mask(mask: int, conductor: int) -> NumericalSemigroup:
    """Build a semigroup from its members below the conductor."""
    if conductor == 0:
        return NumericalSemigroup((1,), 1, -1, (), 0)

    def member(n: int) -> bool:
        return n >= conductor or bool(mask >> n & 1)

    m = next(n for n in range(1, conductor + 1) if member(n))
    apery = []
    for i in range(m):
        n = i
        while not member(n):
            n += m
        apery.append(n)
    kunz = tuple((apery[i] - i) // m for i in range(1, m))

    # w_i is a minimal generator unless it is a sum of two nonzero Apery elements
    sums = {apery[j] + apery[k] for j in range(1, m) for k in range(j, m)}
    gens = sorted([m] + [w for w in apery[1:] if w not in sums])
    mask &= (1 << conductor) - 1
    sg = NumericalSemigroup(tuple(gens), m, conductor - 1, kunz, mask)
    if __debug__:
        assert len(sg.gaps) == sum(kunz)
        assert max(sg.apery) - m == conductor - 1
    return sg


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """The semigroup generated by ``gens``.

    >>> from_generators([4, 9]).frobenius
    23
    """
    gens = sorted(set(int(g) for g in gens))
    if not gens:
        raise ValueError("at least one generator is required")
    if gens[0] <= 0:
        raise ValueError(f"generators must be positive, got {gens[0]}")
    if math.gcd(*gens) != 1:
        raise NotCoFinite(f"gcd{tuple(gens)} = {math.gcd(*gens)} != 1")
    m = gens[0]
    if m == 1:
        return _from_mask(0, 0)

    # shortest paths on residues modulo m give the Apery set
    dist = [math.inf] * m
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if d > dist[r]:
            continue
        for g in gens[1:]:
            nd, nr = d + g, (r + g) % m
            if nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    conductor = max(dist) - m + 1
    mask = 0
    for n in range(conductor):
        if n >= dist[n % m]:
            mask |= 1 << n
    return _from_mask(mask, conductor)


def ordinary(m: int) -> NumericalSemigroup:
    """H_m, the semigroup whose only gaps are 1, ..., m - 1."""
    if m < 1:
        raise ValueError(f"multiplicity must be positive, got {m}")
    if m == 1:
        return _from_mask(0, 0)
    return _from_mask(1, m)


def natural_numbers() -> NumericalSemigroup:
    return _from_mask(0, 0)


def leq_S(S: NumericalSemigroup, a: int, b: int) -> bool:
    return S.leq(a, b)


def contains(S: NumericalSemigroup, n: int) -> bool:
    return n in S


def remove_generator(S: NumericalSemigroup, a: int) -> NumericalSemigroup:
    return S.remove_generator(a)


def iter_by_genus(g_max: int) -> Iterator[NumericalSemigroup]:
    """Depth-first walk of the genus tree, children by increasing removed generator."""
    if g_max < 0:
        raise ValueError("g_max must be non-negative")
    stack = [natural_numbers()]
    while stack:
        S = stack.pop()
        yield S
        if S.genus < g_max:
            stack.extend(reversed(S.children()))


def enumerate_by_genus(g_max: int) -> list[NumericalSemigroup]:
    """All numerical semigroups of genus at most ``g_max``, each exactly once."""
    return list(iter_by_genus(g_max))
