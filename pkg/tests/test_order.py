import pytest

from oracles import ideal_set, preceq_sets

from kunzlattice import (
    NotALattice,
    build_order,
    enumerate_normalized_ideals,
    from_generators,
    full_ideal,
    ideal_from_generators,
    ideal_subset,
    irreducibles,
    irreducibles_by_pairs,
    is_distributive,
    is_lattice,
    iter_by_genus,
    join,
    meet,
    minimal_bounds,
    ordinary,
    preceq,
    principal_family,
    semigroup_ideal,
    sublattice_shape,
    to_dot,
)


def order(gens, kind="preceq"):
    return build_order(enumerate_normalized_ideals(from_generators(gens)), kind)


def oracle_covers(F):
    """Cover pairs of ⪯ computed from plain set sums."""
    C = F.ambient.conductor
    sets = [ideal_set(I, C) for I in F]
    reach = preceq_sets(sets, C)
    n = len(F)
    le = [[sets[j] in reach[sets[i]] for j in range(n)] for i in range(n)]
    return {
        (i, j)
        for i in range(n)
        for j in range(n)
        if i != j and le[i][j] and not any(le[i][k] and le[k][j] for k in range(n) if k not in (i, j))
    }


def test_preceq_against_oracle_small():
    for S in iter_by_genus(5):
        F = enumerate_normalized_ideals(S)
        O = build_order(F, "preceq")
        assert set(O.edges) == oracle_covers(F)
        for i, I in enumerate(F):
            for j, J in enumerate(F):
                assert O.leq(i, j) == preceq(I, J)


def test_preceq_is_finer_than_inclusion():
    for S in iter_by_genus(6):
        F = enumerate_normalized_ideals(S)
        P, Q = build_order(F, "preceq"), build_order(F, "subset")
        for i in range(len(F)):
            assert P.up[i] & ~Q.up[i] == 0
        for i, I in enumerate(F):
            for j, J in enumerate(F):
                assert Q.leq(i, j) == ideal_subset(I, J)


def test_h4_orders():
    H4 = ordinary(4)
    F = enumerate_normalized_ideals(H4)
    P = build_order(F, "preceq")
    assert len(P) == 8 and is_lattice(P)
    Q = build_order(F, "subset")
    # Boolean algebra on three atoms
    assert len(Q.edges) == 12
    assert sorted(len(c) for c in Q.lower_covers) == [0, 1, 1, 1, 2, 2, 2, 3]
    assert all(len(Q.lower_covers[k]) == 3 - F[k].genus for k in range(8))


def test_4_9_bounds():
    S = from_generators([4, 9])
    O = build_order(enumerate_normalized_ideals(S), "preceq")
    A = ideal_from_generators(S, [0, 1, 2])
    D = ideal_from_generators(S, [0, 1, 6])
    assert minimal_bounds(O, A, D, "upper") == [ideal_from_generators(S, [0, 1, 2, 7])]
    with pytest.raises(ValueError):
        minimal_bounds(O, A, D, "sideways")
    bottom, top = semigroup_ideal(S), full_ideal(S)
    for I in O.family:
        assert join(O, bottom, I) == I and meet(O, top, I) == I
        assert join(O, top, I) == top and meet(O, bottom, I) == bottom


def test_h5_not_a_lattice():
    O = order([5, 6, 7, 8, 9])
    check = is_lattice(O)
    assert not check
    H5 = O.family.ambient
    assert check.pair == (ideal_from_generators(H5, [0, 1, 3]), ideal_from_generators(H5, [0, 1]))
    assert check.direction == "upper"
    assert set(check.bounds) == {
        ideal_from_generators(H5, [0, 1, 2, 3]),
        ideal_from_generators(H5, [0, 1, 3, 4]),
    }


def test_small_multiplicity_lattices():
    for S in iter_by_genus(6):
        O = build_order(enumerate_normalized_ideals(S), "preceq")
        assert bool(is_lattice(O)) == (S.multiplicity <= 4)
        assert is_lattice(build_order(enumerate_normalized_ideals(S), "subset"))


def test_distributivity():
    check = is_distributive(order([4, 5, 6, 7]))
    assert not check and check.shape == "N5"
    assert sublattice_shape(order([4, 5, 6, 7]), check.sublattice) == "N5"
    check = is_distributive(order([3, 7, 8]))
    assert not check and sublattice_shape(order([3, 7, 8]), check.sublattice) == check.shape
    assert is_distributive(order([2, 5]))
    assert is_distributive(order([1]))
    with pytest.raises(NotALattice):
        is_distributive(order([5, 6, 7, 8, 9]))


def test_sublattice_shape_rejects_non_sublattices():
    O = order([4, 5, 6, 7])
    H4 = O.family.ambient
    fake = [semigroup_ideal(H4), full_ideal(H4)] + [ideal_from_generators(H4, [0, g]) for g in (1, 2, 3)]
    # {0,1}+H4 and {0,3}+H4 join to {0,1,3}+H4, which is outside the set
    assert sublattice_shape(O, fake) is None
    assert sublattice_shape(O, fake[:4]) is None


def test_named_irreducibility_examples():
    S = from_generators([4, 7, 9])
    F = enumerate_normalized_ideals(S)
    I = ideal_from_generators(S, [0, 1, 2])
    assert I in irreducibles(F, "join") and I not in irreducibles(F, "plus")
    S = from_generators([3, 7])
    F = enumerate_normalized_ideals(S)
    I = ideal_from_generators(S, [0, 4, 8])
    assert I.kunz == (1, 2)
    assert I in irreducibles(F, "meet") and I not in irreducibles(F, "intersection")


def test_union_irreducibles_are_principal():
    S = from_generators([3, 7])
    F = enumerate_normalized_ideals(S)
    got = irreducibles(F, "union")
    assert len(got) == 7
    assert set(got) == set(principal_family(S)) | {semigroup_ideal(S)}


def test_cover_criterion_matches_definition():
    for S in iter_by_genus(6):
        F = enumerate_normalized_ideals(S)
        kinds = ["union", "intersection"] + (["join", "meet"] if S.multiplicity <= 4 else [])
        for kind in kinds:
            assert irreducibles(F, kind) == irreducibles_by_pairs(F, kind)


def test_irreducibles_errors():
    F = enumerate_normalized_ideals(ordinary(5))
    with pytest.raises(NotALattice):
        irreducibles(F, "join")
    with pytest.raises(ValueError):
        irreducibles(F, "sum")


def test_plus_irreducibles_never_include_identity():
    for S in iter_by_genus(5):
        F = enumerate_normalized_ideals(S)
        plus = irreducibles(F, "plus")
        assert semigroup_ideal(S) not in plus
        for I in plus:
            for J in F:
                for K in F:
                    if J + K == I:
                        assert I in (J, K)


def test_dot_output():
    O = order([4, 5, 6, 7])
    dot = to_dot(O)
    lines = dot.splitlines()
    assert lines[0] == "digraph ideals {"
    assert lines[-1] == "}"
    assert sum('[label="(' in line for line in lines) == 8
    edges = [line for line in lines if "->" in line]
    assert len(edges) == len(O.edges)
    assert '  7 [label="(1,1,1)"];' in lines
    assert to_dot(order([4, 5, 6, 7])) == dot
