"""The orders ⪯ and ⊆ on an ideal family: covers, bounds, lattice tests, irreducibles.

Relations are stored as one int bitset per element: ``up[i]`` has bit ``j``
set when ``ideals[i] <= ideals[j]``. Family indices run against the order
(larger ideals have smaller indices), so the highest set bit of an up-set
is always one of its minimal elements, and the lowest set bit of a
down-set one of its maximal elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Literal, Sequence

import numpy as np

from . import _kernels
from .errors import NotALattice
from .family import IdealFamily
from .ideals import NormalizedIdeal, format_kunz, preceq

__all__ = [
    "OrderStructure",
    "LatticeCheck",
    "DistributivityCheck",
    "build_order",
    "preceq",
    "minimal_bounds",
    "join",
    "meet",
    "is_lattice",
    "is_distributive",
    "sublattice_shape",
    "irreducibles",
    "irreducibles_by_pairs",
    "to_dot",
]

Kind = Literal["preceq", "subset"]
IrreducibleKind = Literal["plus", "join", "meet", "union", "intersection"]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class OrderStructure:
    def __init__(self, family: IdealFamily, kind: Kind, up: list[int]):
        self.family = family
        self.kind = kind
        self.up = up
        n = len(up)
        down = [0] * n
        for i, row in enumerate(up):
            for j in _bits(row):
                down[j] |= 1 << i
        self.down = down
        strict_up = [row & ~(1 << i) for i, row in enumerate(up)]
        self.upper_covers: list[tuple[int, ...]] = []
        for i, row in enumerate(strict_up):
            above = 0
            for j in _bits(row):
                above |= strict_up[j]
            self.upper_covers.append(tuple(sorted(_bits(row & ~above))))
        lower: list[list[int]] = [[] for _ in range(n)]
        for i, cov in enumerate(self.upper_covers):
            for j in cov:
                lower[j].append(i)
        self.lower_covers: list[tuple[int, ...]] = [tuple(sorted(c)) for c in lower]

    def __len__(self) -> int:
        return len(self.up)

    def __repr__(self) -> str:
        return f"OrderStructure({self.family.ambient}, {self.kind}, {len(self)} elements)"

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def idx(self, I: NormalizedIdeal | int) -> int:
        return I if isinstance(I, (int, np.integer)) else self.family.index_of(I)

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Cover pairs ``(lower, upper)`` in canonical order."""
        return [(i, j) for i, cov in enumerate(self.upper_covers) for j in cov]

    def join_index(self, i: int, j: int) -> int | None:
        U = self.up[i] & self.up[j]
        u = U.bit_length() - 1
        return u if U & ~self.up[u] == 0 else None

    def meet_index(self, i: int, j: int) -> int | None:
        D = self.down[i] & self.down[j]
        d = (D & -D).bit_length() - 1
        return d if D & ~self.down[d] == 0 else None

    @cached_property
    def tables(self) -> tuple[np.ndarray, np.ndarray]:
        """Join and meet index tables, -1 where the bound does not exist."""
        n = len(self)
        J = np.full((n, n), -1, dtype=np.int64)
        M = np.full((n, n), -1, dtype=np.int64)
        for i in range(n):
            for j in range(i, n):
                a = self.join_index(i, j)
                b = self.meet_index(i, j)
                if a is not None:
                    J[i, j] = J[j, i] = a
                if b is not None:
                    M[i, j] = M[j, i] = b
        return J, M


def _subset_matrix(F: IdealFamily) -> np.ndarray:
    X = F.rows
    # I ⊆ J  iff  every coordinate of J is <= the matching one of I
    return (X[None, :, :] <= X[:, None, :]).all(axis=2)


def _preceq_matrix(F: IdealFamily) -> np.ndarray:
    X = F.rows
    sub = _subset_matrix(F)
    M = np.zeros_like(sub)
    for i in range(len(F)):
        cand = np.flatnonzero(sub[i])
        Y = X[cand]
        R = _kernels.batch_residual(X[i], Y)
        Z = _kernels.batch_sum(X[i], R)
        M[i, cand] = (Z == Y).all(axis=1)
    return M


def build_order(F: IdealFamily, kind: Kind = "preceq") -> OrderStructure:
    """The order ``kind`` on ``F`` with its cover relation. Cached on the family."""
    if kind in F._orders:
        return F._orders[kind]
    if kind == "preceq":
        M = _preceq_matrix(F)
    elif kind == "subset":
        M = _subset_matrix(F)
    else:
        raise ValueError(f"unknown order kind {kind!r}")
    O = OrderStructure(F, kind, _kernels.bool_rows_to_bitsets(M))
    F._orders[kind] = O
    return O


def minimal_bounds(
    O: OrderStructure,
    I: NormalizedIdeal,
    J: NormalizedIdeal,
    direction: Literal["upper", "lower"] = "upper",
) -> list[NormalizedIdeal]:
    """Minimal common upper bounds (or maximal common lower bounds) of ``I`` and ``J``."""
    i, j = O.idx(I), O.idx(J)
    if direction == "upper":
        B = O.up[i] & O.up[j]
        keep = [u for u in _bits(B) if O.down[u] & B == 1 << u]
    elif direction == "lower":
        B = O.down[i] & O.down[j]
        keep = [d for d in _bits(B) if O.up[d] & B == 1 << d]
    else:
        raise ValueError(f"direction must be 'upper' or 'lower', got {direction!r}")
    return [O.family[k] for k in keep]


def join(O: OrderStructure, I: NormalizedIdeal, J: NormalizedIdeal) -> NormalizedIdeal | None:
    k = O.join_index(O.idx(I), O.idx(J))
    return None if k is None else O.family[k]


def meet(O: OrderStructure, I: NormalizedIdeal, J: NormalizedIdeal) -> NormalizedIdeal | None:
    k = O.meet_index(O.idx(I), O.idx(J))
    return None if k is None else O.family[k]


@dataclass(frozen=True)
class LatticeCheck:
    """Outcome of :func:`is_lattice`; truthy when the order is a lattice.

    On failure ``pair`` has no join (``direction == "upper"``) or no meet
    (``"lower"``), and ``bounds`` lists its minimal upper or maximal lower bounds.
    """

    ok: bool
    pair: tuple[NormalizedIdeal, NormalizedIdeal] | None = None
    direction: str | None = None
    bounds: tuple[NormalizedIdeal, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def is_lattice(O: OrderStructure) -> LatticeCheck:
    """Check every pair for a join, then every pair for a meet.

    The first failing pair in canonical order is reported.
    """
    F = O.family
    n = len(O)
    for direction, bound in (("upper", O.join_index), ("lower", O.meet_index)):
        for i in range(n):
            for j in range(i + 1, n):
                if bound(i, j) is None:
                    b = minimal_bounds(O, F[i], F[j], direction)
                    return LatticeCheck(False, (F[i], F[j]), direction, tuple(b))
    return LatticeCheck(True)


def _require_lattice(O: OrderStructure) -> None:
    check = is_lattice(O)
    if not check:
        a, b = check.pair
        raise NotALattice(
            f"({O.family.ambient}, {O.kind}) is not a lattice: {a} and {b} "
            f"have no {'join' if check.direction == 'upper' else 'meet'}"
        )


@dataclass(frozen=True)
class DistributivityCheck:
    """Outcome of :func:`is_distributive`; truthy when distributive.

    On failure ``triple`` is ``(x, y, z)`` with ``x∧(y∨z) != (x∧y)∨(x∧z)`` and
    ``sublattice`` a five-element sublattice of shape ``shape`` ("N5" or "M3")
    listed bottom first, top last.
    """

    ok: bool
    triple: tuple[NormalizedIdeal, NormalizedIdeal, NormalizedIdeal] | None = None
    shape: str | None = None
    sublattice: tuple[NormalizedIdeal, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def _closure(O: OrderStructure, seeds: Sequence[int]) -> list[int]:
    Jt, Mt = O.tables
    elems = set(seeds)
    frontier = list(elems)
    while frontier:
        new = []
        for a in frontier:
            for b in list(elems):
                for c in (Jt[a, b], Mt[a, b]):
                    c = int(c)
                    if c not in elems:
                        elems.add(c)
                        new.append(c)
        frontier = new
    return sorted(elems)


def _five_element_sublattice(O: OrderStructure, pool: list[int]) -> tuple[str, tuple[int, ...]] | None:
    """An N5 (preferred) or M3 sublattice drawn from ``pool``, listed bottom to top."""
    Jt, Mt = O.tables
    # N5: c < a, b incomparable to both, same join and same meet with b
    for a, c in combinations(pool, 2):
        if not O.leq(a, c) and not O.leq(c, a):
            continue
        lo, hi = (a, c) if O.leq(a, c) else (c, a)
        for b in pool:
            if b in (lo, hi):
                continue
            top, bot = Jt[lo, b], Mt[lo, b]
            if top == Jt[hi, b] and bot == Mt[hi, b] and len({lo, hi, b, top, bot}) == 5:
                return "N5", (int(bot), lo, hi, b, int(top))
    for a, b, c in combinations(pool, 3):
        top, bot = Jt[a, b], Mt[a, b]
        if (
            top == Jt[a, c] == Jt[b, c]
            and bot == Mt[a, c] == Mt[b, c]
            and len({a, b, c, top, bot}) == 5
        ):
            return "M3", (int(bot), a, b, c, int(top))
    return None


def is_distributive(O: OrderStructure) -> DistributivityCheck:
    _require_lattice(O)
    Jt, Mt = O.tables
    n = len(O)
    F = O.family
    for x in range(n):
        lhs = Mt[x][Jt]
        rhs = Jt[Mt[x][:, None], Mt[x][None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            y, z = (int(v) for v in bad[0])
            found = _five_element_sublattice(O, _closure(O, (x, y, z)))
            assert found is not None, "a non-distributive lattice holds N5 or M3"
            shape, elems = found
            return DistributivityCheck(False, (F[x], F[y], F[z]), shape, tuple(F[k] for k in elems))
    return DistributivityCheck(True)


def sublattice_shape(O: OrderStructure, ideals: Sequence[NormalizedIdeal]) -> str | None:
    """"N5" or "M3" if ``ideals`` form such a sublattice of ``O``, else ``None``.

    Joins and meets are taken in the whole order; the set must be closed
    under them.
    """
    idx = sorted({O.idx(I) for I in ideals})
    if len(idx) != 5:
        return None
    pool = set(idx)
    for a in idx:
        for b in idx:
            ja, mb = O.join_index(a, b), O.meet_index(a, b)
            if ja not in pool or mb not in pool:
                return None
    found = _five_element_sublattice(O, idx)
    return None if found is None else found[0]


def _plus_irreducible(F: IdealFamily) -> list[int]:
    T = F.sum_table
    n = len(F)
    bottom = n - 1
    reducible = np.zeros(n, dtype=bool)
    ii, jj = np.nonzero(np.ones((n, n), dtype=bool))
    s = T[ii, jj]
    proper = (s != ii) & (s != jj)
    reducible[np.unique(s[proper])] = True
    return [k for k in range(n) if k != bottom and not reducible[k]]


def _order_for(F: IdealFamily, kind: IrreducibleKind) -> OrderStructure:
    if kind in ("join", "meet"):
        O = build_order(F, "preceq")
        _require_lattice(O)
        return O
    return build_order(F, "subset")


def irreducibles(F: IdealFamily, kind: IrreducibleKind) -> list[NormalizedIdeal]:
    """Irreducible ideals of the given kind, in canonical order.

    ``plus`` scans all sums and never includes the ambient semigroup. The
    other kinds use the cover criterion in a finite lattice: ``join`` and
    ``union`` keep elements covering at most one element, ``meet`` and
    ``intersection`` those with at most one cover (so bottom, resp. top,
    always qualify).
    """
    if kind == "plus":
        return [F[k] for k in _plus_irreducible(F)]
    if kind not in ("join", "meet", "union", "intersection"):
        raise ValueError(f"unknown irreducibility kind {kind!r}")
    O = _order_for(F, kind)
    covers = O.lower_covers if kind in ("join", "union") else O.upper_covers
    return [F[k] for k in range(len(F)) if len(covers[k]) <= 1]


def irreducibles_by_pairs(F: IdealFamily, kind: IrreducibleKind) -> list[NormalizedIdeal]:
    """Same classification as :func:`irreducibles`, from the definition.

    ``p`` is irreducible unless ``p = q op r`` for some ``q, r`` both different from ``p``.
    """
    if kind == "plus":
        return irreducibles(F, "plus")
    O = _order_for(F, kind)
    Jt, Mt = O.tables
    T = Jt if kind in ("join", "union") else Mt
    n = len(F)
    hit = np.zeros(n, dtype=bool)
    for q in range(n):
        for r in range(n):
            p = T[q, r]
            if p != q and p != r:
                hit[p] = True
    return [F[k] for k in range(n) if not hit[k]]


def to_dot(O: OrderStructure) -> str:
    """Hasse diagram in Graphviz syntax; edges point from covered to covering ideal."""
    name = str(O.family.ambient).replace('"', "")
    lines = [
        "digraph ideals {",
        f'  label="{name} {O.kind}";',
        "  rankdir=BT;",
        "  node [shape=plaintext];",
    ]
    for i, I in enumerate(O.family):
        lines.append(f'  {i} [label="{format_kunz(I.kunz)}"];')
    for i, j in O.edges:
        lines.append(f"  {i} -> {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
