"""Exact computation of affine symmetry groups of orbit polytopes.

The package computes, in exact rational (and rational-function)
arithmetic: linear symmetry groups of vector families, affine symmetry
groups of orbit polytopes of finite rational matrix groups, generic
symmetry groups over Q(X), splitting idempotents and representation
polytope symmetries in the group algebra, and the cut polytope
constructions for elementary abelian 2-groups.
"""

from .errors import (
    BoundViolatedError,
    DimensionTooLargeError,
    NoGeneratingPointError,
    NotASymmetryError,
    NotGeneratingError,
    NotIdempotentError,
    NotOrthogonalError,
    OrbitopeError,
    OrderExceededError,
    PreconditionError,
    ResourceCapError,
    SingularGramError,
)
from .exactmath import Matrix, MultiPoly, det_adj, inverse, rank, solve_exact
from .perm import PermGroup
from .symcore import VectorFamily, color_matrix, gram, linsym_group, realize
from .orbit import (
    MatrixGroup,
    affsym_group,
    barycenter,
    close_group,
    generic_closure_check,
    generic_linsym,
    is_generating_point,
    is_generic,
    stabilizer_in_group,
)
from .grpalg import (
    GroupAlgebraElement,
    bigsym_lower_bound,
    gale_complement,
    gamma_character,
    has_inversion_symmetry,
    is_central,
    orbit_character,
    reppoly_symgroup,
    splitting_idempotent,
)
from .elab2 import (
    CutSpace,
    GF2Matrix,
    Graph,
    admissible_perms,
    caterpillar_complement,
    class_t_check,
    count_ideal_orbit_bound,
    cut_space,
    diag_rep,
    hamming_gamma,
    is_ideal_character,
    permutation_rep,
)

__version__ = "0.1.0"
