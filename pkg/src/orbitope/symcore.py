"""Linear symmetries of vector families.

A permutation of the index set is a linear symmetry exactly when
conjugation by its permutation matrix fixes the color matrix
W = V^t Q^-1 V (Q = V V^t the Gram matrix), so the symmetry group is the
automorphism group of an edge-colored complete graph with vertex colors
w_ii and edge colors w_ij.  The search below is a backtracking
individualization-refinement on that colored graph and returns a
generating set; all color comparisons are exact (Fraction or polynomial),
so no tolerance parameter exists anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotASymmetryError, SingularGramError
from .exactmath import (
    Matrix,
    MultiPoly,
    det_adj,
    inverse,
    mat_vec,
    pivot_columns,
    solve_exact,
)
from .perm import Perm, PermGroup, identity_perm


@dataclass(frozen=True)
class VectorFamily:
    """An indexed family of column vectors (column i is v_i)."""

    dim: int
    columns: Matrix  # dim x n

    def __post_init__(self):
        if self.columns.nrows != self.dim:
            raise ValueError("column height does not match dim")

    @property
    def size(self) -> int:
        return self.columns.ncols

    @classmethod
    def from_columns(cls, dim: int, cols) -> "VectorFamily":
        return cls(dim, Matrix([[col[i] for col in cols] for i in range(dim)]))

    def column(self, i: int) -> tuple:
        return self.columns.column(i)


def gram(family: VectorFamily) -> Matrix:
    """Q = sum_i v_i v_i^t = V V^t; symmetric, positive definite iff spanning."""
    v = family.columns
    return v @ v.T


def color_matrix(family: VectorFamily) -> Matrix:
    """W = V^t Q^-1 V over Q; raises SingularGramError when Q is singular.

    W is the projector onto the row space of V: symmetric, idempotent,
    with trace equal to the dimension.
    """
    v = family.columns
    if family.dim == 0:
        return Matrix.zero(family.size, family.size)
    q = gram(family)
    try:
        q_inv = inverse(q)
    except ValueError:
        raise SingularGramError(
            "gram matrix is singular; the family does not span the space"
        ) from None
    return v.T @ q_inv @ v


def symbolic_color_matrix(family: VectorFamily) -> tuple[Matrix, MultiPoly]:
    """Color matrix over Q(X) as (numerator matrix V^t adj(Q) V, det Q).

    Entrywise polynomial equality of the shared-denominator numerators
    decides symbolic color equality, so no rational-function normalization
    is ever needed.
    """
    v = family.columns
    det, adj = det_adj(gram(family))
    if not det:
        raise SingularGramError("symbolic gram determinant is identically zero")
    return v.T @ adj @ v, det


def is_linear_symmetry(w_rows, sigma: Perm) -> bool:
    """Whether conjugating the color matrix by P(sigma) leaves it fixed.

    Accepts a Matrix or nested sequence with any exactly-comparable
    entries (Fraction, int bucket, MultiPoly numerator).
    """
    rows = w_rows.rows if isinstance(w_rows, Matrix) else w_rows
    n = len(rows)
    if len(sigma) != n:
        raise ValueError("permutation degree does not match family size")
    for i in range(n):
        wi, wsi = rows[i], rows[sigma[i]]
        for j in range(n):
            if wsi[sigma[j]] != wi[j]:
                return False
    return True


def realize(family: VectorFamily, sigma: Perm) -> Matrix:
    """The unique matrix A with A v_i = v_{sigma(i)}, via A = V P V^t Q^-1.

    Raises NotASymmetryError when sigma is not a linear symmetry; the
    returned matrix is always re-verified against every column.
    """
    v = family.columns
    try:
        q_inv = inverse(gram(family))
    except ValueError:
        raise SingularGramError(
            "gram matrix is singular; the family does not span the space"
        ) from None
    permuted = v.permute_columns(sigma)
    a = permuted @ v.T @ q_inv
    for i in range(family.size):
        if mat_vec(a, v.column(i)) != tuple(permuted.column(i)):
            raise NotASymmetryError(
                "permutation is not realized by any linear map on this family"
            )
    return a


def restrict_to_span(family: VectorFamily) -> VectorFamily:
    """Rewrite the family in coordinates of a basis of its column span.

    Linear symmetries are invariant under this reduction, which makes the
    color-matrix criterion applicable to families that do not span their
    ambient space (orbit families inside the group algebra, for example).
    """
    pivots = pivot_columns(family.columns)
    r = len(pivots)
    if r == family.dim:
        return family
    if r == 0:
        return VectorFamily(0, Matrix.zero(0, family.size))
    basis = Matrix([[family.columns[i, j] for j in pivots] for i in range(family.dim)])
    coords = solve_exact(basis, family.columns)
    assert coords is not None
    return VectorFamily(r, coords)


def bucket_colors(rows) -> list[list[int]]:
    """Map exact color values to small ints by first occurrence (row order)."""
    rows = rows.rows if isinstance(rows, Matrix) else rows
    ids: dict = {}
    out = []
    for row in rows:
        out_row = []
        for value in row:
            key = value
            if key not in ids:
                ids[key] = len(ids)
            out_row.append(ids[key])
        out.append(out_row)
    return out


def linsym_group(family: VectorFamily) -> PermGroup:
    """The full linear symmetry group of the family as a PermGroup.

    Families with repeated columns are allowed; the group then contains
    the kernel of fiber-preserving permutations.
    """
    return automorphism_group(color_matrix(family))


# ---------------------------------------------------------------------------
# Colored-graph automorphism search
# ---------------------------------------------------------------------------


def _refine(m, cells_dom, cells_rng, ncolors: int):
    """Refine two aligned ordered partitions to a stable (equitable) pair.

    Returns the refined pair, or None when the two sides cannot stay
    aligned (no isomorphism extends the current branch).  Within and
    across sides, split cells are ordered by their signature keys, so
    refinement is deterministic and side-symmetric.
    """
    n = len(m)
    while True:
        cid_dom = [0] * n
        cid_rng = [0] * n
        for c, cell in enumerate(cells_dom):
            for v in cell:
                cid_dom[v] = c
        for c, cell in enumerate(cells_rng):
            for v in cell:
                cid_rng[v] = c

        def signature(v, cid):
            row = m[v]
            codes = sorted(cid[u] * ncolors + row[u] for u in range(n) if u != v)
            return tuple(codes)

        new_dom, new_rng = [], []
        changed = False
        for c in range(len(cells_dom)):
            dgroups: dict[tuple, list[int]] = {}
            for v in cells_dom[c]:
                dgroups.setdefault(signature(v, cid_dom), []).append(v)
            rgroups: dict[tuple, list[int]] = {}
            for v in cells_rng[c]:
                rgroups.setdefault(signature(v, cid_rng), []).append(v)
            keys = sorted(dgroups)
            if keys != sorted(rgroups):
                return None
            for key in keys:
                if len(dgroups[key]) != len(rgroups[key]):
                    return None
                new_dom.append(sorted(dgroups[key]))
                new_rng.append(sorted(rgroups[key]))
            if len(dgroups) > 1:
                changed = True
        cells_dom, cells_rng = new_dom, new_rng
        if not changed:
            return cells_dom, cells_rng


def _orbit_of(point: int, gens: list[Perm]) -> set[int]:
    seen = {point}
    queue = [point]
    while queue:
        x = queue.pop(0)
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def automorphism_group(colors) -> PermGroup:
    """Automorphism group of a complete graph with exactly-comparable colors.

    ``colors`` is an n x n symmetric matrix (the diagonal holds vertex
    colors); entries may be any hashable exact values and are bucketed to
    small integers first.  Branching always individualizes the smallest
    vertex of the largest non-singleton cell, making the generator list
    deterministic.
    """
    m = tuple(tuple(row) for row in bucket_colors(colors))
    n = len(m)
    if n <= 1:
        return PermGroup(n, [])
    ncolors = max(max(row) for row in m) + 1

    diag_values = {m[i][i] for i in range(n)}
    off_values = {m[i][j] for i in range(n) for j in range(i + 1, n)}
    if len(diag_values) == 1 and len(off_values) <= 1:
        return PermGroup.symmetric(n)

    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(m[v][v], []).append(v)
    initial = [sorted(by_color[c]) for c in sorted(by_color)]

    found: list[Perm] = []

    def verify(sigma) -> bool:
        for i in range(n):
            mi, msi = m[i], m[sigma[i]]
            for j in range(n):
                if msi[sigma[j]] != mi[j]:
                    return False
        return True

    def target_cell(cells) -> int | None:
        best, best_size = None, 1
        for idx, cell in enumerate(cells):
            if len(cell) > best_size:
                best, best_size = idx, len(cell)
        return best

    def individualize(cells, idx, vertex):
        rest = [v for v in cells[idx] if v != vertex]
        return cells[:idx] + [[vertex], rest] + cells[idx + 1:]

    def dfs(cells_dom, cells_rng, on_first_path: bool) -> Perm | None:
        refined = _refine(m, cells_dom, cells_rng, ncolors)
        if refined is None:
            return None
        cells_dom, cells_rng = refined
        target = target_cell(cells_dom)
        if target is None:
            sigma = [0] * n
            for cd, cr in zip(cells_dom, cells_rng):
                sigma[cd[0]] = cr[0]
            sigma = tuple(sigma)
            if sigma == identity_perm(n) or not verify(sigma):
                return None
            return sigma
        b = cells_dom[target][0]
        if on_first_path:
            child_dom = individualize(cells_dom, target, b)
            dfs(child_dom, individualize(cells_rng, target, b), True)
            for w in cells_rng[target]:
                if w == b:
                    continue
                if w in _orbit_of(b, found):
                    continue
                auto = dfs(child_dom, individualize(cells_rng, target, w), False)
                if auto is not None:
                    found.append(auto)
            return None
        for w in cells_rng[target]:
            auto = dfs(
                individualize(cells_dom, target, b),
                individualize(cells_rng, target, w),
                False,
            )
            if auto is not None:
                return auto
        return None

    dfs(initial, initial, True)
    return PermGroup(n, found)


def brute_force_linsym(family: VectorFamily) -> set[Perm]:
    """Independent oracle: all sigma realized by some invertible A.

    Enumerates Sym(n) and solves A v_i = v_{sigma(i)} directly; intended
    for families with at most 8 columns.
    """
    from itertools import permutations as iter_permutations

    v = family.columns
    n = family.size
    accepted = set()
    vt = v.T
    for sigma in iter_permutations(range(n)):
        target = v.permute_columns(sigma)
        a_t = solve_exact(vt, target.T)
        if a_t is None:
            continue
        a = a_t.T
        if any(
            mat_vec(a, v.column(i)) != tuple(target.column(i)) for i in range(n)
        ):
            continue
        try:
            inverse(a)
        except ValueError:
            continue
        accepted.add(sigma)
    return accepted
