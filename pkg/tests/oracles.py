"""Reference implementations that avoid Kunz-coordinate arithmetic.

Semigroups and ideals are plain sets of integers below a bound; everything
at or above the bound is implicitly a member. The bound must be at least the
conductor of the semigroup for this to be faithful.
"""

from __future__ import annotations

from functools import reduce
from math import gcd


def semigroup_set(gens, bound: int) -> frozenset[int]:
    """Elements of the monoid generated by ``gens`` that are below ``bound``."""
    reach = [False] * bound
    if bound:
        reach[0] = True
    for n in range(1, bound):
        reach[n] = any(g <= n and reach[n - g] for g in gens)
    return frozenset(n for n in range(bound) if reach[n])


def frobenius_of(gens) -> int:
    """Largest integer outside the monoid (-1 for the naturals), by sieving up to Schur's bound."""
    assert reduce(gcd, gens) == 1
    bound = (min(gens) - 1) * (max(gens) - 1) + 1
    S = semigroup_set(gens, bound)
    return max((n for n in range(bound) if n not in S), default=-1)


def ideal_set(I, bound: int) -> frozenset[int]:
    """Members of ``I`` below ``bound``, read off its Apery set."""
    m = I.multiplicity
    return frozenset(n for n in range(bound) if n >= I.apery[n % m])


def generated_ideal(S_set: frozenset[int], X, bound: int) -> frozenset[int]:
    """``X + S`` shifted so its minimum is 0."""
    lo = min(X)
    return frozenset(x - lo + s for x in X for s in S_set if x - lo + s < bound)


def set_sum(A: frozenset[int], B: frozenset[int], bound: int) -> frozenset[int]:
    """``A + B`` below ``bound`` (both sets contain 0 and the implicit tail)."""
    return frozenset(a + b for a in A for b in B if a + b < bound)


def kunz_of_set(A: frozenset[int], m: int, bound: int) -> tuple[int, ...]:
    out = []
    for r in range(1, m):
        n = r
        while n < bound and n not in A:
            n += m
        out.append((n - r) // m)
    return tuple(out)


def residual_contains(J: frozenset[int], I: frozenset[int], z: int, bound: int) -> bool:
    """Does ``z + I ⊆ J`` hold (with the implicit tail on both sides)?"""
    for i in list(I) + list(range(bound, bound + abs(z) + 1)):
        n = z + i
        if n < 0 or (n < bound and n not in J):
            return False
    return True


def preceq_sets(family_sets, bound: int) -> dict[frozenset[int], set[frozenset[int]]]:
    """For each ideal ``I`` the set ``{I + K : K in family}``; ``I ⪯ J`` iff ``J`` is in it."""
    return {I: {set_sum(I, K, bound) for K in family_sets} for I in family_sets}


def mask_of(A: frozenset[int]) -> int:
    return sum(1 << n for n in A)


def mask_sum(a: int, b: int, bound: int) -> int:
    """Bitmask version of :func:`set_sum`."""
    full = (1 << bound) - 1
    out, n = 0, 0
    while a >> n:
        if a >> n & 1:
            out |= b << n
        n += 1
    return out & full
