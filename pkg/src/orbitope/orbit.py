"""Finite matrix groups over Q, orbit families, and generic symmetry groups.

An orbit polytope is the convex hull of {g v : g in G}.  After translating
by the barycenter (the unique fixed point), its affine symmetries are the
linear symmetries of the orbit vector family, indexed by group elements.
The generic symmetry group is the linear symmetry group of the symbolic
family (g X)_g over the function field Q(X1,...,Xd); it is contained in
the symmetry group of every generating point's orbit.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DimensionTooLargeError,
    NoGeneratingPointError,
    NotGeneratingError,
    OrderExceededError,
)
from .exactmath import (
    Matrix,
    MultiPoly,
    det_adj,
    mat_vec,
    pivot_columns,
)
from .perm import Perm, PermGroup
from . import symcore
from .symcore import VectorFamily

DEFAULT_MAX_ORDER = 10_000
DEFAULT_SYMBOLIC_DIM = 4
DEFAULT_SYMBOLIC_ORDER = 16
SAMPLE_COORD_BOUND = 1000


class MatrixGroup:
    """A finite group of invertible rational matrices, fully enumerated.

    Element order is the canonical index set for every permutation
    reported on the group.  The multiplication table is precomputed;
    instances are immutable.
    """

    def __init__(self, dim: int, elements, generator_indices=()):
        self.dim = dim
        self.elements: tuple[Matrix, ...] = tuple(elements)
        self.generator_indices = tuple(generator_indices)
        self._index = {m: i for i, m in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError("duplicate elements")
        n = len(self.elements)
        table = []
        for a in self.elements:
            row = []
            for b in self.elements:
                prod = a @ b
                idx = self._index.get(prod)
                if idx is None:
                    raise ValueError("element list is not closed under products")
                row.append(idx)
            table.append(tuple(row))
        self.table: tuple[tuple[int, ...], ...] = tuple(table)
        ident = Matrix.identity(dim)
        if not self.elements or self.elements[0] != ident:
            raise ValueError("element 0 must be the identity")
        inverses = [0] * n
        for i in range(n):
            inverses[i] = self.table[i].index(0)
        self.inverses = tuple(inverses)

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, m: Matrix) -> int:
        return self._index[m]

    def left_regular(self, i: int) -> Perm:
        """Permutation g -> g_i * g on element indices."""
        return self.table[i]

    def right_regular(self, i: int) -> Perm:
        """Permutation g -> g * g_i on element indices."""
        return tuple(self.table[j][i] for j in range(self.order))

    def inversion_perm(self) -> Perm:
        """Permutation g -> g^-1 on element indices."""
        return self.inverses

    def center_indices(self) -> tuple[int, ...]:
        n = self.order
        return tuple(
            i
            for i in range(n)
            if all(self.table[i][j] == self.table[j][i] for j in range(n))
        )

    def is_elementary_abelian_2(self) -> bool:
        n = self.order
        return len(self.center_indices()) == n and all(
            self.table[i][i] == 0 for i in range(n)
        )

    def __repr__(self) -> str:
        return f"MatrixGroup(dim={self.dim}, order={self.order})"


def close_group(generators, max_order: int = DEFAULT_MAX_ORDER, dim: int | None = None) -> MatrixGroup:
    """Close a generator list into a MatrixGroup.

    Elements are enumerated breadth-first from the identity,
    right-multiplying by generators in the given order, which fixes the
    canonical element indexing.  Raises OrderExceededError when the
    closure passes ``max_order``.
    """
    gens = [g if isinstance(g, Matrix) else Matrix(g) for g in generators]
    if dim is None:
        if not gens:
            raise ValueError("dim is required when there are no generators")
        dim = gens[0].nrows
    for g in gens:
        if g.nrows != dim or g.ncols != dim:
            raise ValueError("generator dimension mismatch")
    ident = Matrix.identity(dim)
    elements = [ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        new_frontier = []
        for x in frontier:
            for g in gens:
                y = x @ g
                if y not in seen:
                    seen.add(y)
                    elements.append(y)
                    new_frontier.append(y)
                    if len(elements) > max_order:
                        raise OrderExceededError(
                            f"group closure exceeds max order {max_order}"
                        )
        frontier = new_frontier
    gen_indices = [elements.index(g) for g in gens]
    return MatrixGroup(dim, elements, gen_indices)


def barycenter(group: MatrixGroup, point) -> tuple:
    """(1/|G|) sum_g g v; the unique point fixed by every group element."""
    point = tuple(Fraction(x) for x in point)
    total = [Fraction(0)] * group.dim
    for g in group.elements:
        gv = mat_vec(g, point)
        for i in range(group.dim):
            total[i] += gv[i]
    return tuple(x / group.order for x in total)


def orbit_family(group: MatrixGroup, point, centered: bool = True) -> VectorFamily:
    """The orbit of ``point`` as a vector family indexed by group elements."""
    point = tuple(Fraction(x) for x in point)
    shift = barycenter(group, point) if centered else (Fraction(0),) * group.dim
    cols = []
    for g in group.elements:
        gv = mat_vec(g, point)
        cols.append(tuple(a - b for a, b in zip(gv, shift)))
    return VectorFamily.from_columns(group.dim, cols)


def is_generating_point(group: MatrixGroup, point) -> bool:
    """Whether the centered orbit spans the whole space (det Q != 0)."""
    if group.dim == 0:
        return True
    family = orbit_family(group, point)
    det, _ = det_adj(symcore.gram(family))
    return bool(det)


def stabilizer_in_group(group: MatrixGroup, point) -> tuple[int, ...]:
    """Indices of the elements fixing the point (a subgroup)."""
    point = tuple(Fraction(x) for x in point)
    return tuple(
        i for i, g in enumerate(group.elements) if mat_vec(g, point) == point
    )


def affsym_group(group: MatrixGroup, point) -> PermGroup:
    """Affine symmetry group of the orbit polytope, as permutations of G.

    Requires a generating point (after centering); raises
    NotGeneratingError otherwise.
    """
    if group.dim == 0:
        return PermGroup.symmetric(group.order)
    if not is_generating_point(group, point):
        raise NotGeneratingError(
            "orbit of the point does not span the space; no full-dimensional polytope"
        )
    return symcore.linsym_group(orbit_family(group, point))


def realize_symmetry(group: MatrixGroup, point, sigma: Perm) -> tuple[Matrix, tuple]:
    """Realizing affine map of an orbit symmetry, in original coordinates.

    Returns (A, t) with (A x + t) mapping vertex g v to sigma(g) v; t is
    nonzero only when the barycenter is off the origin.
    """
    family = orbit_family(group, point)
    a = symcore.realize(family, sigma)
    c = barycenter(group, point)
    ac = mat_vec(a, c)
    t = tuple(ci - aci for ci, aci in zip(c, ac))
    return a, t


def symbolic_orbit_family(group: MatrixGroup) -> VectorFamily:
    """The family (g X)_g over Q[X1,...,Xd], columns indexed by elements."""
    d = group.dim
    xvec = [MultiPoly.variable(i, d) for i in range(d)]
    cols = [mat_vec(g, xvec) for g in group.elements]
    return VectorFamily.from_columns(d, cols)


@dataclass(frozen=True)
class GenericSymResult:
    """Outcome of a generic symmetry group computation."""

    group: PermGroup
    mode: str  # "exact" or "monte_carlo"
    exact: bool  # genuine certificate (symbolic, or all generators verified)
    samples: int | None = None
    seed: int | None = None
    generator_verified: tuple[bool, ...] = ()


def generic_linsym(
    group: MatrixGroup,
    mode: str = "auto",
    samples: int = 5,
    seed: int = 0,
    max_dim: int = DEFAULT_SYMBOLIC_DIM,
    max_order: int = DEFAULT_SYMBOLIC_ORDER,
    threads: int = 1,
) -> GenericSymResult:
    """Linear symmetry group of the symbolic orbit family (g X)_g.

    ``exact`` mode conjugation-tests the symbolic color matrix; it is
    capped by ``max_dim``/``max_order`` because the adjugate of Q(X) grows
    quickly.  ``monte_carlo`` intersects the symmetry groups of sampled
    generating points (an over-approximation) and then certifies each
    reported generator by one exact symbolic membership check; when all
    generators certify, the result is exact.  ``auto`` picks whichever
    applies.
    """
    if mode not in ("auto", "exact", "monte_carlo"):
        raise ValueError(f"unknown mode {mode!r}")
    fits_exact = group.dim <= max_dim and group.order <= max_order
    if mode == "exact" and not fits_exact:
        raise DimensionTooLargeError(
            f"exact symbolic mode capped at dim {max_dim}, order {max_order}"
        )
    if mode == "auto":
        mode = "exact" if fits_exact else "monte_carlo"

    if mode == "exact":
        family = symbolic_orbit_family(group)
        num, _den = symcore.symbolic_color_matrix(family)
        return GenericSymResult(symcore.automorphism_group(num), "exact", True)

    rng = random.Random(seed)
    points = []
    color_layers = []
    while len(points) < samples:
        candidate = tuple(
            Fraction(rng.randint(-SAMPLE_COORD_BOUND, SAMPLE_COORD_BOUND))
            for _ in range(group.dim)
        )
        if len(stabilizer_in_group(group, candidate)) != 1:
            continue
        if not is_generating_point(group, candidate):
            continue
        points.append(candidate)

    def layer(point):
        w = symcore.color_matrix(orbit_family(group, point))
        return symcore.bucket_colors(w)

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            color_layers = list(pool.map(layer, points))
    else:
        color_layers = [layer(p) for p in points]

    n = group.order
    combined = [
        [tuple(layer[i][j] for layer in color_layers) for j in range(n)]
        for i in range(n)
    ]
    candidate_group = symcore.automorphism_group(symcore.bucket_colors(combined))
    verified = tuple(
        verify_generic_symmetry(group, g, witness=points[0])
        for g in candidate_group.generators
    )
    return GenericSymResult(
        candidate_group,
        "monte_carlo",
        all(verified),
        samples=samples,
        seed=seed,
        generator_verified=verified,
    )


def verify_generic_symmetry(group: MatrixGroup, sigma: Perm, witness=None) -> bool:
    """Exact symbolic membership test for the generic symmetry group.

    Solves for the realizing matrix over Q(X) on a spanning subfamily
    (chosen by a rational witness point) and checks the defining
    polynomial identities on every column; no floating point, no
    sampling.
    """
    if group.dim == 0:
        return True
    if witness is None:
        witness = _find_generating_point(group)
    numeric = orbit_family(group, witness)
    pivots = pivot_columns(numeric.columns)
    if len(pivots) != group.dim:
        raise NotGeneratingError("witness point is not generating")
    family = symbolic_orbit_family(group)
    cols = family.columns
    m_j = Matrix([[cols[i, j] for j in pivots] for i in range(group.dim)])
    det, adj = det_adj(m_j)
    target = Matrix([[cols[i, sigma[j]] for j in pivots] for i in range(group.dim)])
    a_num = target @ adj
    for g_idx in range(group.order):
        lhs = mat_vec(a_num, cols.column(g_idx))
        rhs = tuple(det * entry for entry in cols.column(sigma[g_idx]))
        if lhs != rhs:
            return False
    return True


def _find_generating_point(group: MatrixGroup, seed: int = 0):
    rng = random.Random(seed)
    for bound in (3, 10, 100, SAMPLE_COORD_BOUND):
        for _ in range(200):
            candidate = tuple(
                Fraction(rng.randint(-bound, bound)) for _ in range(group.dim)
            )
            if len(stabilizer_in_group(group, candidate)) != 1:
                continue
            if is_generating_point(group, candidate):
                return candidate
    raise NoGeneratingPointError("no generating point found by sampling")


def is_generic(
    group: MatrixGroup,
    point,
    max_dim: int = DEFAULT_SYMBOLIC_DIM,
    max_order: int = DEFAULT_SYMBOLIC_ORDER,
    seed: int = 0,
) -> bool:
    """Full-dimensional orbit + trivial stabilizer + no extra symmetries."""
    if not is_generating_point(group, point):
        return False
    if len(stabilizer_in_group(group, point)) != 1:
        return False
    result = generic_linsym(
        group, mode="auto", seed=seed, max_dim=max_dim, max_order=max_order
    )
    if not result.exact:
        raise DimensionTooLargeError(
            "generic symmetry group could not be certified exactly"
        )
    return result.group.order() == affsym_group(group, point).order()


@dataclass(frozen=True)
class ClosureReport:
    """Certificate that the realized symmetry group is generically closed."""

    base_order: int
    affsym_order: int
    realized_order: int
    witness: tuple
    witness_affsym_order: int
    closed: bool


def generic_closure_check(
    group: MatrixGroup,
    point,
    witness=None,
    seed: int = 0,
    max_order: int = DEFAULT_MAX_ORDER,
) -> ClosureReport:
    """Realize the affine symmetry group G^ of P(G, v) and certify that a
    generic orbit polytope of G^ has symmetry group exactly G^."""
    sym = affsym_group(group, point)
    realized = []
    for g in sym.generators:
        a, _t = realize_symmetry(group, point, g)
        realized.append(a)
    if realized:
        ghat = close_group(realized, max_order=max_order, dim=group.dim)
    else:
        ghat = close_group([], max_order=max_order, dim=group.dim) if group.dim == 0 else close_group(
            [Matrix.identity(group.dim)], max_order=max_order
        )
    if witness is None:
        rng = random.Random(seed)
        while True:
            candidate = tuple(
                Fraction(rng.randint(-SAMPLE_COORD_BOUND, SAMPLE_COORD_BOUND))
                for _ in range(group.dim)
            )
            if len(stabilizer_in_group(ghat, candidate)) != 1:
                continue
            if is_generating_point(ghat, candidate):
                witness = candidate
                break
    else:
        witness = tuple(Fraction(x) for x in witness)
        if not is_generating_point(ghat, witness):
            raise NotGeneratingError("witness point is not generating for G^")
    wit_sym = affsym_group(ghat, witness)
    return ClosureReport(
        base_order=group.order,
        affsym_order=sym.order(),
        realized_order=ghat.order,
        witness=witness,
        witness_affsym_order=wit_sym.order(),
        closed=wit_sym.order() == ghat.order,
    )
