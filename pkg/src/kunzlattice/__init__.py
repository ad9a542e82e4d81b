"""Ideal class monoids of numerical semigroups, computed in Kunz coordinates."""

from .errors import (
    AmbientMismatch,
    IsFullIdeal,
    KunzLatticeError,
    KunzViolation,
    NotALattice,
    NotAnIdeal,
    NotCoFinite,
    NotMinimalGenerator,
    PreconditionViolated,
)
from .family import (
    IdealFamily,
    antichain_count,
    enumerate_normalized_ideals,
    gap_comparabilities,
    principal_family,
)
from .ideals import (
    NormalizedIdeal,
    Residual,
    full_ideal,
    ideal_add,
    ideal_adjoin_frobenius,
    ideal_frobenius,
    ideal_from_generators,
    ideal_from_kunz,
    ideal_from_members,
    ideal_genus,
    ideal_intersection,
    ideal_minimal_generators,
    ideal_remove_generator,
    ideal_residual,
    ideal_subset,
    ideal_union,
    kunz_sum,
    kunz_sum_ordinary,
    preceq,
    semigroup_ideal,
)
from .order import (
    DistributivityCheck,
    LatticeCheck,
    OrderStructure,
    build_order,
    irreducibles,
    irreducibles_by_pairs,
    is_distributive,
    is_lattice,
    join,
    meet,
    minimal_bounds,
    sublattice_shape,
    to_dot,
)
from .semigroup import (
    NumericalSemigroup,
    enumerate_by_genus,
    from_generators,
    iter_by_genus,
    natural_numbers,
    ordinary,
)
from .verify import CLAIMS, VerificationReport, run_claim

__version__ = "0.1.0"
