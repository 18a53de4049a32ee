"""The rational group algebra QG and representation polytope symmetries.

Every full-dimensional orbit polytope P(G, v) is a copy of P(G, f) for the
splitting idempotent f = sum_g ((gv)^t Q^-1 v) g, which is orthogonal to
its complement 1 - f.  Centrality of f characterizes the polytopes that
are G-equivalent to representation polytopes, and for those the vertex
permutations induced by affine symmetries are decided by the integer
character gamma via the colors gamma(g^-1 h).  gamma itself is computed
from the orbit formula (|G| times the orbit character of the vectorized
identity), never from character tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotGeneratingError, NotIdempotentError, NotOrthogonalError
from .exactmath import Matrix, inverse, mat_vec
from .perm import PermGroup
from . import symcore
from .orbit import MatrixGroup, barycenter, is_generating_point, orbit_family
from .symcore import VectorFamily


@dataclass(frozen=True)
class GroupAlgebraElement:
    """An element sum_g c_g g of QG, coefficients indexed by element order."""

    group: MatrixGroup
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.group.order:
            raise ValueError("coefficient count does not match group order")

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check(other)
        return GroupAlgebraElement(
            self.group, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check(other)
        return GroupAlgebraElement(
            self.group, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check(other)
        table = self.group.table
        inv = self.group.inverses
        n = self.group.order
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            row = table[inv[i]]
            for k in range(n):
                b = other.coeffs[row[k]]
                if b:
                    out[k] += a * b
        return GroupAlgebraElement(self.group, tuple(out))

    def _check(self, other):
        if other.group is not self.group:
            raise ValueError("elements live in different group algebras")

    def scale(self, factor) -> "GroupAlgebraElement":
        factor = Fraction(factor)
        return GroupAlgebraElement(self.group, tuple(factor * c for c in self.coeffs))

    def inner(self, other: "GroupAlgebraElement") -> Fraction:
        """Canonical inner product with <g, h> = delta_gh, extended bilinearly."""
        self._check(other)
        return sum((a * b for a, b in zip(self.coeffs, other.coeffs)), Fraction(0))

    def act_on(self, point) -> tuple:
        """Module action sum_g c_g (g x) on the underlying representation space."""
        point = tuple(Fraction(x) for x in point)
        total = [Fraction(0)] * self.group.dim
        for c, g in zip(self.coeffs, self.group.elements):
            if not c:
                continue
            gx = mat_vec(g, point)
            for i in range(self.group.dim):
                total[i] += c * gx[i]
        return tuple(total)

    def is_idempotent(self) -> bool:
        return self * self == self


def unit(group: MatrixGroup) -> GroupAlgebraElement:
    return GroupAlgebraElement(
        group, tuple(Fraction(1 if i == 0 else 0) for i in range(group.order))
    )


def averaging_idempotent(group: MatrixGroup) -> GroupAlgebraElement:
    """E_1 = (1/|G|) sum_g g, the central idempotent averaging over G."""
    c = Fraction(1, group.order)
    return GroupAlgebraElement(group, (c,) * group.order)


def orbit_character(group: MatrixGroup, point) -> tuple[Fraction, ...]:
    """g -> v^t Q^-1 (g v) on the centered orbit of a generating point.

    Symmetric under inversion (f(g) = f(g^-1)); it is a class function
    exactly when the orbit polytope is G-equivalent to a representation
    polytope.
    """
    if not is_generating_point(group, point):
        raise NotGeneratingError("orbit character requires a generating point")
    w = symcore.color_matrix(orbit_family(group, point))
    return tuple(w.rows[0])


def splitting_map(group: MatrixGroup, point, x) -> GroupAlgebraElement:
    """mu(x) = sum_g ((g v)^t Q^-1 x) g, a QG-module splitting of a -> a v.

    Satisfies mu(h x) = h mu(x) and mu(x) v = x; the splitting idempotent
    is mu(v).
    """
    if not is_generating_point(group, point):
        raise NotGeneratingError("splitting map requires a generating point")
    family = orbit_family(group, point)
    q_inv = inverse(symcore.gram(family))
    x = tuple(Fraction(t) for t in x)
    qx = mat_vec(q_inv, x)
    coeffs = []
    for i in range(group.order):
        col = family.column(i)
        coeffs.append(sum((a * b for a, b in zip(col, qx)), Fraction(0)))
    return GroupAlgebraElement(group, tuple(coeffs))


def splitting_idempotent(group: MatrixGroup, point) -> GroupAlgebraElement:
    """The idempotent f = sum_g ((gv)^t Q^-1 v) g with QGf isomorphic to the space.

    Postconditions f*f == f, f v == v and <1-f, f> == 0 are re-verified on
    every call; a failure would be an internal error, not bad input.
    """
    values = orbit_character(group, point)
    f = GroupAlgebraElement(group, values)
    cert = idempotent_certificate(f, point)
    if not all(cert.values()):
        raise AssertionError(f"splitting idempotent failed verification: {cert}")
    return f


def idempotent_certificate(f: GroupAlgebraElement, point) -> dict[str, bool]:
    """Exact checks of the three splitting-idempotent postconditions."""
    group = f.group
    centered = tuple(
        Fraction(x) - b for x, b in zip(point, barycenter(group, point))
    )
    complement = unit(group) - f
    return {
        "idempotent": f * f == f,
        "fixes_point": f.act_on(centered) == centered,
        "orthogonal_complement": complement.inner(f) == 0,
    }


def is_central(a: GroupAlgebraElement) -> bool:
    """Whether g a g^-1 == a for all g (class-function coefficient test)."""
    group = a.group
    n = group.order
    table, inv = group.table, group.inverses
    for i in range(n):
        conj = tuple(a.coeffs[table[table[inv[i]][k]][i]] for k in range(n))
        if conj != a.coeffs:
            return False
    return True


def has_inversion_symmetry(group: MatrixGroup, point) -> bool:
    """Whether the orbit polytope admits a symmetry sending each gv to g^-1 v.

    Equivalent to the orbit polytope being affinely G-equivalent to a
    representation polytope; double-checked against centrality of the
    splitting idempotent, and a disagreement raises (internal error).
    """
    values = orbit_character(group, point)
    table, inv = group.table, group.inverses
    n = group.order
    direct = all(
        values[table[i][inv[j]]] == values[table[inv[i]][j]]
        for i in range(n)
        for j in range(n)
    )
    central = is_central(splitting_idempotent(group, point))
    if direct != central:
        raise AssertionError(
            "inversion color check and idempotent centrality disagree"
        )
    return direct


def gale_complement(f: GroupAlgebraElement) -> GroupAlgebraElement:
    """1 - f for an orthogonal idempotent f; the dual orbit family's seed."""
    if not f.is_idempotent():
        raise NotIdempotentError("element is not an idempotent")
    complement = unit(f.group) - f
    if complement.inner(f) != 0:
        raise NotOrthogonalError("idempotent is not orthogonal to its complement")
    return complement


def algebra_orbit_family(a: GroupAlgebraElement) -> VectorFamily:
    """The family (g a)_g in coefficient coordinates of QG."""
    group = a.group
    n = group.order
    table, inv = group.table, group.inverses
    cols = [
        tuple(a.coeffs[table[inv[i]][k]] for k in range(n)) for i in range(n)
    ]
    return VectorFamily.from_columns(n, cols)


def gale_symmetry_groups(f: GroupAlgebraElement) -> tuple[PermGroup, PermGroup]:
    """Linear symmetry groups of (g f)_g and (g (1-f))_g, both on G.

    The two orbit families are reduced to their spans before the
    color-matrix criterion applies; the returned groups are equal as
    permutation groups.
    """
    complement = gale_complement(f)
    side_f = symcore.linsym_group(symcore.restrict_to_span(algebra_orbit_family(f)))
    side_c = symcore.linsym_group(
        symcore.restrict_to_span(algebra_orbit_family(complement))
    )
    return side_f, side_c


def vectorized_family(rep: MatrixGroup) -> VectorFamily:
    """Columns are the row-major vectorized matrices D(g)."""
    cols = [
        tuple(entry for row in g.rows for entry in row) for g in rep.elements
    ]
    return VectorFamily.from_columns(rep.dim * rep.dim, cols)


def gamma_character(rep: MatrixGroup) -> tuple[int, ...]:
    """The symmetry character of the representation polytope P(D).

    Computed from the orbit formula |G| * v^t Q^-1 (g v) for the
    vectorized identity inside the span of D(G) (centered), plus 1 when
    the averaging element sum_g D(g) is nonzero; always integer-valued.
    """
    family = vectorized_family(rep)
    n = rep.order
    dim = family.dim
    mean = [
        sum((family.columns[i, j] for j in range(n)), Fraction(0)) / n
        for i in range(dim)
    ]
    trivial_present = any(mean)
    centered = Matrix(
        [[family.columns[i, j] - mean[i] for j in range(n)] for i in range(dim)]
    )
    reduced = symcore.restrict_to_span(VectorFamily(dim, centered))
    w = symcore.color_matrix(reduced)
    shift = Fraction(1 if trivial_present else 0)
    gamma = []
    for value in w.rows[0]:
        scaled = n * value + shift
        if scaled.denominator != 1:
            raise AssertionError(f"gamma value {scaled} is not an integer")
        gamma.append(int(scaled))
    return tuple(gamma)


def reppoly_symgroup(rep: MatrixGroup) -> PermGroup:
    """All vertex permutations of P(D) induced by affine symmetries.

    These are the permutations pi with gamma(pi(g)^-1 pi(h)) equal to
    gamma(g^-1 h) for all g, h; computed by the colored-graph search with
    colors gamma(g^-1 h).
    """
    gamma = gamma_character(rep)
    table, inv = rep.table, rep.inverses
    n = rep.order
    colors = [[gamma[table[inv[i]][j]] for j in range(n)] for i in range(n)]
    return symcore.automorphism_group(colors)


def bigsym_lower_bound(group: MatrixGroup) -> int:
    """2 |G| |G : Z(G)|, the guaranteed symmetry count of P(D) for G not
    elementary abelian of exponent 2."""
    center = len(group.center_indices())
    return 2 * group.order * (group.order // center)
