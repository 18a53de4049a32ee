"""GF(2) machinery: diagonal sign representations, cut spaces of graphs,
admissible permutations, and the tree-complement graph family.

A d x n matrix C over GF(2) defines the representation
x -> diag((-1)^(Cx)) of GF(2)^n with symmetry character
gamma(x) = d - 2 w(Cx) (w = Hamming weight).  Cut polytopes arise from the
incidence matrix of a graph: the cut space CGamma is the GF(2) span of the
vertex cuts, and the vertex-stabilizing affine symmetries of the cut
polytope are the admissible permutations of CGamma (fixing the empty set
and preserving all symmetric-difference sizes).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import BoundViolatedError, DimensionTooLargeError, PreconditionError
from .exactmath import Matrix
from .perm import PermGroup
from . import symcore
from .orbit import MatrixGroup

ADMISSIBLE_DIM_CAP = 20


# ---------------------------------------------------------------------------
# GF(2) matrices and diagonal representations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GF2Matrix:
    """Dense matrix over GF(2), rows as 0/1 tuples."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if any(any(x not in (0, 1) for x in row) for row in self.rows):
            raise ValueError("entries must be 0 or 1")
        if self.rows and any(len(r) != len(self.rows[0]) for r in self.rows):
            raise ValueError("ragged rows")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @classmethod
    def from_strings(cls, lines) -> "GF2Matrix":
        rows = []
        for line in lines:
            line = line.strip().replace(" ", "")
            if line:
                rows.append(tuple(int(ch) for ch in line))
        return cls(tuple(rows))

    def to_strings(self) -> list[str]:
        return ["".join(str(x) for x in row) for row in self.rows]

    def mul_vec(self, x) -> tuple[int, ...]:
        return tuple(sum(a * b for a, b in zip(row, x)) % 2 for row in self.rows)

    def rank(self) -> int:
        rows = [int("".join(map(str, r)), 2) if r else 0 for r in self.rows]
        basis = []
        for r in rows:
            for b in basis:
                r = min(r, r ^ b)
            if r:
                basis.append(r)
        return len(basis)


def index_to_vector(k: int, n: int) -> tuple[int, ...]:
    """Element index -> GF(2)^n vector, lexicographic (first coord leads)."""
    return tuple((k >> (n - 1 - j)) & 1 for j in range(n))


def is_ideal_character(c: GF2Matrix) -> bool:
    """Rows pairwise distinct and nonzero: the character gamma of the
    diagonal representation is multiplicity-free without trivial part."""
    rows = set(c.rows)
    return len(rows) == c.nrows and all(any(r) for r in c.rows)


def hamming_gamma(c: GF2Matrix, x) -> int:
    """gamma(x) = d - 2 w(Cx)."""
    return c.nrows - 2 * sum(c.mul_vec(x))


def diag_rep(c: GF2Matrix) -> MatrixGroup:
    """The group {diag((-1)^(Cx)) : x in GF(2)^n}, indexed lexicographically.

    Faithful exactly when rank(C) = n; with lower rank, distinct vectors
    can share a matrix and the constructor below would reject duplicates,
    so the quotient group is returned in that case.
    """
    n = c.ncols
    d = c.nrows
    seen = {}
    elements = []
    for k in range(2 ** n):
        y = c.mul_vec(index_to_vector(k, n))
        key = tuple(y)
        if key in seen:
            continue
        seen[key] = len(elements)
        rows = [
            [Fraction(-1 if (i == j and y[i]) else (1 if i == j else 0)) for j in range(d)]
            for i in range(d)
        ]
        elements.append(Matrix(rows))
    return MatrixGroup(d, elements)


def permutation_rep(c: GF2Matrix) -> MatrixGroup:
    """Permutation representation on 2d points (the pairs +-b_i).

    Coordinate 2i / 2i+1 hold the two signs of basis vector b_i; the sign
    flip in coordinate i becomes the transposition of the pair.  Its
    representation polytope is affinely equivalent to the diagonal one
    with a trivial summand added, so both have the same symmetry group
    order.
    """
    n = c.ncols
    d = c.nrows
    seen = set()
    elements = []
    for k in range(2 ** n):
        y = c.mul_vec(index_to_vector(k, n))
        key = tuple(y)
        if key in seen:
            continue
        seen.add(key)
        rows = [[Fraction(0)] * (2 * d) for _ in range(2 * d)]
        for i in range(d):
            if y[i]:
                rows[2 * i][2 * i + 1] = Fraction(1)
                rows[2 * i + 1][2 * i] = Fraction(1)
            else:
                rows[2 * i][2 * i] = Fraction(1)
                rows[2 * i + 1][2 * i + 1] = Fraction(1)
        elements.append(Matrix(rows))
    return MatrixGroup(2 * d, elements)


def gl2_order(n: int) -> int:
    """|GL(n, 2)| = prod_i (2^n - 2^i)."""
    order = 1
    for i in range(n):
        order *= 2 ** n - 2 ** i
    return order


@dataclass(frozen=True)
class IdealOrbitBound:
    count: int
    gl_order: int
    forced_stabilizer: bool


def count_ideal_orbit_bound(n: int, d: int) -> IdealOrbitBound:
    """binom(2^n - 1, d) versus |GL(n, 2)|.

    When the count is smaller, every ideal character of degree d has a
    nontrivial stabilizer in GL(n, 2), so every corresponding orbit
    polytope has extra affine symmetries.
    """
    if not 1 <= d <= 2 ** n - 1:
        raise ValueError("need 1 <= d <= 2^n - 1")
    count = comb(2 ** n - 1, d)
    gl = gl2_order(n)
    return IdealOrbitBound(count, gl, count < gl)


# ---------------------------------------------------------------------------
# Graphs and cut spaces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        canon = []
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError("loops are not allowed")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError("edge endpoint out of range")
            e = (min(u, v), max(u, v))
            if e in seen:
                raise ValueError("duplicate edge")
            seen.add(e)
            canon.append(e)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def components(self) -> list[list[int]]:
        adj = self.adjacency()
        seen = [False] * self.n
        comps = []
        for start in range(self.n):
            if seen[start]:
                continue
            queue, comp = [start], []
            seen[start] = True
            while queue:
                x = queue.pop(0)
                comp.append(x)
                for y in sorted(adj[x]):
                    if not seen[y]:
                        seen[y] = True
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def is_tree(self) -> bool:
        return self.is_connected() and len(self.edges) == self.n - 1

    def complement(self) -> "Graph":
        present = set(self.edges)
        edges = [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if (u, v) not in present
        ]
        return Graph(self.n, tuple(edges))


def graph_automorphism_group(graph: Graph) -> PermGroup:
    """Automorphisms via the colored-graph engine (degrees as vertex colors)."""
    n = graph.n
    adj = graph.adjacency()
    colors = [
        [
            (2 + graph.degree(i)) if i == j else (1 if j in adj[i] else 0)
            for j in range(n)
        ]
        for i in range(n)
    ]
    return symcore.automorphism_group(colors)


@dataclass(frozen=True)
class CutSpace:
    """The GF(2) span of vertex cuts, edges encoded as bitmask positions."""

    graph: Graph
    basis: tuple[int, ...]  # independent principal cuts, vertex order
    dim: int

    def principal_cut(self, v: int) -> int:
        mask = 0
        for idx, (a, b) in enumerate(self.graph.edges):
            if (a == v) != (b == v):
                mask |= 1 << idx
        return mask

    def cut_of_vertex_set(self, vertices) -> int:
        mask = 0
        inside = set(vertices)
        for idx, (a, b) in enumerate(self.graph.edges):
            if (a in inside) != (b in inside):
                mask |= 1 << idx
        return mask

    def cut_sets(self) -> list[int]:
        """All 2^dim cut sets in Gray-code order over the basis; index 0 is
        the empty set."""
        cuts = []
        current = 0
        cuts.append(current)
        for k in range(1, 2 ** self.dim):
            bit = (k & -k).bit_length() - 1
            current ^= self.basis[bit]
            cuts.append(current)
        return cuts

    def mask_to_edges(self, mask: int) -> list[tuple[int, int]]:
        return [e for idx, e in enumerate(self.graph.edges) if mask >> idx & 1]


def cut_space(graph: Graph) -> CutSpace:
    """Basis of independent principal cuts; dimension |V| - #components."""
    masks = []
    for v in range(graph.n):
        mask = 0
        for idx, (a, b) in enumerate(graph.edges):
            if (a == v) != (b == v):
                mask |= 1 << idx
        masks.append(mask)
    basis = []
    reduced: list[int] = []
    for mask in masks:
        r = mask
        for b in reduced:
            r = min(r, r ^ b)
        if r:
            reduced.append(r)
            basis.append(mask)
    space = CutSpace(graph, tuple(basis), len(basis))
    expected = graph.n - len(graph.components())
    if space.dim != expected:
        raise AssertionError("cut space dimension disagrees with component count")
    return space


def _popcount(x: int) -> int:
    return bin(x).count("1")


def admissible_perms(graph: Graph, dim_cap: int = ADMISSIBLE_DIM_CAP) -> PermGroup:
    """Permutations of the cut-set list fixing the empty set and preserving
    all symmetric-difference sizes |S + T|.

    Vertex colors |S| and edge colors |S + T| feed the colored-graph
    engine; the empty set is the unique color-0 vertex, so the stabilizer
    condition holds automatically (asserted on the generators).
    """
    space = cut_space(graph)
    if space.dim > dim_cap:
        raise DimensionTooLargeError(
            f"cut space dimension {space.dim} over the cap {dim_cap}"
        )
    cuts = space.cut_sets()
    n = len(cuts)
    colors = [
        [
            _popcount(cuts[i]) if i == j else _popcount(cuts[i] ^ cuts[j])
            for j in range(n)
        ]
        for i in range(n)
    ]
    group = symcore.automorphism_group(colors)
    assert all(g[0] == 0 for g in group.generators)
    return group


def affine_symmetry_order_of_cut_polytope(
    graph: Graph, dim_cap: int = ADMISSIBLE_DIM_CAP
) -> int:
    """|CGamma| times the admissible-permutation count: translations act
    regularly on the vertices and the stabilizer is the admissible group."""
    if not graph.is_connected():
        raise PreconditionError("cut polytope order requires a connected graph")
    space = cut_space(graph)
    return 2 ** space.dim * admissible_perms(graph, dim_cap).order()


# ---------------------------------------------------------------------------
# The class T of tree complements and the caterpillar family
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassTCertificate:
    big_enough: bool  # |V| >= 7
    complement_is_tree: bool
    cover_gt_3: bool  # vertex cover number of the complement > 3

    @property
    def in_class(self) -> bool:
        return self.big_enough and self.complement_is_tree and self.cover_gt_3


def has_vertex_cover_at_most(graph: Graph, k: int) -> bool:
    """Exhaustive search over vertex subsets of size <= k."""
    edges = graph.edges
    if not edges:
        return True
    for size in range(k + 1):
        for subset in combinations(range(graph.n), size):
            chosen = set(subset)
            if all(u in chosen or v in chosen for u, v in edges):
                return True
    return False


def class_t_check(graph: Graph) -> ClassTCertificate:
    """Membership certificate for the tree-complement class."""
    complement = graph.complement()
    return ClassTCertificate(
        big_enough=graph.n >= 7,
        complement_is_tree=complement.is_tree(),
        cover_gt_3=not has_vertex_cover_at_most(complement, 3),
    )


def _is_four_cycle(edges: list[tuple[int, int]]) -> bool:
    if len(edges) != 4:
        return False
    degree: dict[int, int] = {}
    for u, v in edges:
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
    if len(degree) != 4 or any(d != 2 for d in degree.values()):
        return False
    # connected 2-regular on 4 vertices is a 4-cycle
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    start = edges[0][0]
    seen = {start}
    queue = [start]
    while queue:
        x = queue.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == 4


@dataclass(frozen=True)
class CutBoundsReport:
    vertex_count: int
    max_principal: int
    min_non_principal: int
    four_cycle_free: bool


def cut_size_bounds_check(graph: Graph) -> CutBoundsReport:
    """Verify by enumeration, for a class-T graph, that principal cuts have
    at most n-2 edges, non-principal nonempty cuts at least n-1, and that
    no cut set is a 4-cycle.  Violations raise BoundViolatedError."""
    cert = class_t_check(graph)
    if not cert.in_class:
        raise PreconditionError(f"graph is not in the tree-complement class: {cert}")
    space = cut_space(graph)
    principal = {space.principal_cut(v) for v in range(graph.n)}
    n = graph.n
    max_p = 0
    min_np = None
    for mask in space.cut_sets():
        if not mask:
            continue
        size = _popcount(mask)
        if mask in principal:
            max_p = max(max_p, size)
        else:
            min_np = size if min_np is None else min(min_np, size)
        if _is_four_cycle(space.mask_to_edges(mask)):
            raise BoundViolatedError("a cut set is a 4-cycle")
    if max_p > n - 2:
        raise BoundViolatedError(f"principal cut of size {max_p} > n-2")
    if min_np is not None and min_np < n - 1:
        raise BoundViolatedError(f"non-principal cut of size {min_np} < n-1")
    return CutBoundsReport(
        vertex_count=n,
        max_principal=max_p,
        min_non_principal=min_np if min_np is not None else 0,
        four_cycle_free=True,
    )


def caterpillar_tree(n: int) -> Graph:
    """Path 0-1-...-(n-2) with one extra leaf n-1 attached to vertex 2.

    Asymmetric for n >= 7; its complement is the counterexample graph
    family.  The leaf sits at the third path vertex, matching the
    convention documented in caterpillar_complement.
    """
    if n < 4:
        raise ValueError("need at least 4 vertices")
    edges = [(i, i + 1) for i in range(n - 2)]
    edges.append((2, n - 1))
    return Graph(n, tuple(edges))


def caterpillar_complement(n: int) -> Graph:
    """Complement of the asymmetric caterpillar tree on n >= 7 vertices.

    For n >= 8 the result is in the tree-complement class and yields a cut
    polytope whose full affine symmetry group is the translation group;
    for n = 7 the class membership fails (cover number 3) although the
    admissible group is still trivial.
    """
    if n < 7:
        raise ValueError("the family starts at 7 vertices")
    return caterpillar_tree(n).complement()


def induced_cut_permutation(graph: Graph, automorphism) -> tuple[int, ...]:
    """The permutation of the cut-set list induced by a graph automorphism."""
    space = cut_space(graph)
    cuts = space.cut_sets()
    position = {mask: i for i, mask in enumerate(cuts)}
    edge_index = {e: i for i, e in enumerate(graph.edges)}
    images = []
    for mask in cuts:
        new_mask = 0
        for u, v in space.mask_to_edges(mask):
            a, b = automorphism[u], automorphism[v]
            new_mask |= 1 << edge_index[(min(a, b), max(a, b))]
        images.append(position[new_mask])
    return tuple(images)
