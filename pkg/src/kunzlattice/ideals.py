"""Normalized ideals of a numerical semigroup, handled in Kunz coordinates.

An ideal ``I`` with ``min(I) = 0`` is determined by its Apery set
``w_i = m*x_i + i`` (one smallest member per residue class modulo the
multiplicity ``m``), so the tuple ``(x_1, ..., x_{m-1})`` is the canonical
key. The member bitmask below the conductor of the ambient semigroup is kept
alongside for set-level queries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    AmbientMismatch,
    IsFullIdeal,
    KunzViolation,
    NotAnIdeal,
    NotMinimalGenerator,
)
from .semigroup import NumericalSemigroup

Kunz = tuple[int, ...]


@dataclass(frozen=True)
class NormalizedIdeal:
    ambient: NumericalSemigroup
    kunz: Kunz
    members: int = field(compare=False, repr=False)

    @property
    def multiplicity(self) -> int:
        return self.ambient.multiplicity

    @property
    def apery(self) -> tuple[int, ...]:
        m = self.ambient.multiplicity
        return (0,) + tuple(m * x + i for i, x in enumerate(self.kunz, start=1))

    @property
    def genus(self) -> int:
        return sum(self.kunz)

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n >= self.ambient.conductor:
            return True
        return bool(self.members >> n & 1)

    def __add__(self, other: NormalizedIdeal) -> NormalizedIdeal:
        return ideal_add(self, other)

    def __or__(self, other: NormalizedIdeal) -> NormalizedIdeal:
        return ideal_union(self, other)

    def __and__(self, other: NormalizedIdeal) -> NormalizedIdeal:
        return ideal_intersection(self, other)

    def __str__(self) -> str:
        return format_kunz(self.kunz)


def format_kunz(x: Sequence[int]) -> str:
    return "(" + ",".join(map(str, x)) + ")"


def _members(S: NumericalSemigroup, x: Sequence[int]) -> int:
    m = S.multiplicity
    xs = (0,) + tuple(x)
    mask = 0
    for n in range(S.conductor):
        if n // m >= xs[n % m]:
            mask |= 1 << n
    return mask


def _make(S: NumericalSemigroup, x: Kunz) -> NormalizedIdeal:
    return NormalizedIdeal(S, x, _members(S, x))


def kunz_violation(k: Sequence[int], x: Sequence[int]) -> tuple[int, int | None] | None:
    """First Kunz inequality broken by ``x`` against semigroup coordinates ``k``.

    Returns ``(i, None)`` for ``x_i > k_i`` and ``(i, j)`` for
    ``x_i + k_j + floor((i+j)/m) < x_{(i+j) mod m}``; ``None`` when ``x`` is valid.
    """
    m = len(k) + 1
    xs = (0,) + tuple(x)
    for i in range(1, m):
        if xs[i] < 0 or xs[i] > k[i - 1]:
            return (i, None)
    for i in range(1, m):
        for j in range(1, m):
            t = (i + j) % m
            if xs[i] + k[j - 1] + (i + j) // m < xs[t]:
                return (i, j)
    return None


def ideal_from_kunz(S: NumericalSemigroup, x: Iterable[int]) -> NormalizedIdeal:
    x = tuple(int(v) for v in x)
    if len(x) != S.multiplicity - 1:
        raise ValueError(
            f"expected {S.multiplicity - 1} Kunz coordinates for {S}, got {len(x)}"
        )
    bad = kunz_violation(S.kunz, x)
    if bad is not None:
        i, j = bad
        if j is None:
            msg = f"x_{i} = {x[i - 1]} is outside [0, k_{i} = {S.kunz[i - 1]}]"
        else:
            msg = f"inequality for (i, j) = ({i}, {j}) fails for {format_kunz(x)}"
        raise KunzViolation(msg, i, j)
    return _make(S, x)


def ideal_from_generators(S: NumericalSemigroup, X: Iterable[int]) -> NormalizedIdeal:
    """The normalized representative ``-min(X+S) + (X+S)``."""
    X = sorted(set(X))
    if not X:
        raise ValueError("an ideal needs at least one generator")
    lo = X[0]
    X = [v - lo for v in X]
    m = S.multiplicity
    ap = S.apery
    w = [min(v + ap[(i - v) % m] for v in X) for i in range(m)]
    return _make(S, tuple((w[i] - i) // m for i in range(1, m)))


def ideal_from_members(S: NumericalSemigroup, mask: int, bound: int) -> NormalizedIdeal:
    """The ideal whose members below ``bound`` are the set bits of ``mask``.

    Every integer at or above ``bound`` is taken to be a member. Raises
    :class:`NotAnIdeal` if the set is not a normalized ideal of ``S``.
    """

    def member(n: int) -> bool:
        return n >= bound or bool(mask >> n & 1)

    if not member(0):
        raise NotAnIdeal("0 is not in the set")
    m = S.multiplicity
    x = []
    for i in range(1, m):
        n = i
        while not member(n):
            n += m
        x.append((n - i) // m)
    x = tuple(x)
    if kunz_violation(S.kunz, x) is not None:
        raise NotAnIdeal(f"the set is not closed under adding {S}")
    I = _make(S, x)
    if any(member(n) != (n in I) for n in range(max(bound, S.conductor))):
        raise NotAnIdeal(f"the set is not closed under adding {S}")
    return I


def semigroup_ideal(S: NumericalSemigroup) -> NormalizedIdeal:
    """``S`` viewed as an ideal of itself (the identity for +)."""
    return _make(S, S.kunz)


def full_ideal(S: NumericalSemigroup) -> NormalizedIdeal:
    """The natural numbers viewed as an ideal of ``S`` (the top element)."""
    return _make(S, (0,) * (S.multiplicity - 1))


def _same_ambient(I: NormalizedIdeal, J: NormalizedIdeal) -> None:
    if I.ambient != J.ambient:
        raise AmbientMismatch(f"ideals of {I.ambient} and {J.ambient}")


def ideal_genus(I: NormalizedIdeal) -> int:
    return sum(I.kunz)


def ideal_subset(I: NormalizedIdeal, J: NormalizedIdeal) -> bool:
    """``I ⊆ J``: every coordinate of ``J`` is at most the matching one of ``I``."""
    _same_ambient(I, J)
    return all(y <= x for x, y in zip(I.kunz, J.kunz))


def ideal_union(I: NormalizedIdeal, J: NormalizedIdeal) -> NormalizedIdeal:
    _same_ambient(I, J)
    return _make(I.ambient, tuple(map(min, I.kunz, J.kunz)))


def ideal_intersection(I: NormalizedIdeal, J: NormalizedIdeal) -> NormalizedIdeal:
    _same_ambient(I, J)
    return _make(I.ambient, tuple(map(max, I.kunz, J.kunz)))


def kunz_sum(x: Sequence[int], y: Sequence[int], m: int) -> Kunz:
    """Kunz coordinates of a sum of ideals (general multiplicity-``m`` case).

    ``z_i = min(x_a + y_b + floor((a+b)/m))`` over residues with ``a + b = i mod m``.
    """
    xs = (0,) + tuple(x)
    ys = (0,) + tuple(y)
    z = []
    for i in range(1, m):
        best = xs[i]
        for a in range(m):
            b = (i - a) % m
            v = xs[a] + ys[b] + (a + b >= m)
            if v < best:
                best = v
        z.append(best)
    return tuple(z)


def kunz_sum_ordinary(x: Sequence[int], y: Sequence[int]) -> Kunz:
    """Sum of coordinates over an ordinary semigroup: no wrap-around terms."""
    xs = (0,) + tuple(x)
    ys = (0,) + tuple(y)
    return tuple(
        min(xs[a] + ys[i - a] for a in range(i + 1)) for i in range(1, len(xs))
    )


def ideal_add(I: NormalizedIdeal, J: NormalizedIdeal) -> NormalizedIdeal:
    _same_ambient(I, J)
    S = I.ambient
    return _make(S, kunz_sum(I.kunz, J.kunz, S.multiplicity))


def ideal_minimal_generators(I: NormalizedIdeal) -> tuple[int, ...]:
    """The ``<=_S``-minimal members of ``I``, ascending. Always contains 0."""
    S = I.ambient
    w = I.apery
    return tuple(
        sorted(
            wi
            for i, wi in enumerate(w)
            if not any(j != i and (wi - wj) in S for j, wj in enumerate(w))
        )
    )


def ideal_remove_generator(I: NormalizedIdeal, g: int) -> NormalizedIdeal:
    """``I`` minus one of its nonzero minimal generators; ``I`` covers it under ⊆."""
    if g == 0 or g not in ideal_minimal_generators(I):
        raise NotMinimalGenerator(f"{g} is not a nonzero minimal generator of {I}")
    m = I.multiplicity
    x = list(I.kunz)
    x[g % m - 1] += 1
    return _make(I.ambient, tuple(x))


def ideal_frobenius(I: NormalizedIdeal) -> int:
    """Largest integer outside ``I``; -1 for the natural numbers."""
    m = I.multiplicity
    return max(I.apery) - m


def ideal_adjoin_frobenius(I: NormalizedIdeal) -> NormalizedIdeal:
    """``I ∪ {F(I)}``, which is again a normalized ideal and covers ``I`` under ⊆."""
    f = ideal_frobenius(I)
    if f < 0:
        raise IsFullIdeal("the natural numbers have no Frobenius number to adjoin")
    m = I.multiplicity
    x = list(I.kunz)
    x[f % m - 1] -= 1
    return _make(I.ambient, tuple(x))


@dataclass(frozen=True)
class Residual:
    """A relative ideal ``{z : z + I ⊆ J}`` stored by its Apery set.

    It lies inside ``[0, ∞)`` and is normalized exactly when ``I ⊆ J``.
    """

    ambient: NumericalSemigroup
    apery: tuple[int, ...]

    @property
    def min(self) -> int:
        return min(self.apery)

    @property
    def is_normalized(self) -> bool:
        return self.apery[0] == 0

    def __contains__(self, n: int) -> bool:
        m = self.ambient.multiplicity
        return n >= self.apery[n % m]

    @property
    def members(self) -> int:
        """Members below the ambient conductor as a bitmask; the tail is implicit."""
        return sum(1 << n for n in range(self.ambient.conductor) if n in self)

    def normalized(self) -> NormalizedIdeal:
        S = self.ambient
        m = S.multiplicity
        lo = self.min
        w = [self.apery[(i + lo) % m] - lo for i in range(m)]
        return _make(S, tuple((w[i] - i) // m for i in range(1, m)))


def ideal_residual(J: NormalizedIdeal, I: NormalizedIdeal) -> Residual:
    """``J - I = {z ∈ Z : z + I ⊆ J}``.

    Since ``I = Ap(I) + S`` and ``J + S = J``, ``z`` works iff ``z + w_j(I) ∈ J``
    for each Apery element, so the residue-``r`` minimum is
    ``max_j (w_{r+j}(J) - w_j(I))``.
    """
    _same_ambient(I, J)
    m = I.multiplicity
    wi, wj = I.apery, J.apery
    return Residual(
        I.ambient,
        tuple(max(wj[(r + j) % m] - wi[j] for j in range(m)) for r in range(m)),
    )


def preceq(I: NormalizedIdeal, J: NormalizedIdeal) -> bool:
    """``I ⪯ J``: some normalized ideal ``K`` has ``I + K = J``.

    Any witness lies inside ``J - I``, and ``I + (J - I) ⊆ J`` always, so the
    residual is a witness whenever one exists.
    """
    if not ideal_subset(I, J):
        return False
    return ideal_add(I, ideal_residual(J, I).normalized()) == J
