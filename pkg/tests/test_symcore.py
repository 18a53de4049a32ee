"""The symmetry engine: gram/color matrices, realization, group search."""

import random
from fractions import Fraction as F

import pytest

from orbitope.errors import NotASymmetryError, SingularGramError
from orbitope.exactmath import Matrix, inverse, solve_exact
from orbitope.orbit import close_group, orbit_family
from orbitope.perm import PermGroup, identity_perm
from orbitope.symcore import (
    VectorFamily,
    automorphism_group,
    brute_force_linsym,
    color_matrix,
    gram,
    is_linear_symmetry,
    linsym_group,
    realize,
    restrict_to_span,
)

from conftest import ROT4, REFL, ROT3, SWAP


def _oracle_color_matrix(family):
    """Independent W: each entry via a fresh linear solve, no inverse call."""
    v = family.columns
    q = gram(family)
    n = family.size
    entries = []
    for j in range(n):
        col = Matrix([[x] for x in v.column(j)])
        sol = solve_exact(q, col)
        assert sol is not None
        entries.append([
            sum((a * b for a, b in zip(v.column(i), sol.column(0))), F(0))
            for i in range(n)
        ])
    return Matrix([[entries[j][i] for j in range(n)] for i in range(n)])


def test_gram_identity_columns():
    fam = VectorFamily(3, Matrix.identity(3))
    assert gram(fam) == Matrix.identity(3)


def test_gram_d4_orbit_of_unit_vector(d4):
    fam = orbit_family(d4, (1, 0))
    assert gram(fam) == Matrix.identity(2).scale(F(4))


def test_gram_c4_orbit(c4):
    fam = orbit_family(c4, (1, 0))
    assert gram(fam) == Matrix.identity(2).scale(F(2))


def test_color_matrix_orthonormal_columns():
    fam = VectorFamily(2, Matrix.identity(2))
    assert color_matrix(fam) == Matrix.identity(2)


def test_color_matrix_square(c4):
    w = color_matrix(orbit_family(c4, (1, 0)))
    half = F(1, 2)
    expected = Matrix([
        [half, F(0), -half, F(0)],
        [F(0), half, F(0), -half],
        [-half, F(0), half, F(0)],
        [F(0), -half, F(0), half],
    ])
    assert w == expected


def test_color_matrix_generic_octagon(d4):
    fam = orbit_family(d4, (2, 1))
    w = color_matrix(fam)
    assert w == _oracle_color_matrix(fam)
    off = {w[i, j] for i in range(8) for j in range(8) if i != j}
    assert len(off) == 5
    # value multiset along the first row is symmetric under inversion
    for i in range(8):
        assert w[0, i] == w[0, d4.inverses[i]]


def test_color_matrix_projector_invariants(d4, c4, d3):
    for group, point in ((d4, (2, 1)), (c4, (3, -1)), (d3, (2, 5))):
        fam = orbit_family(group, point)
        w = color_matrix(fam)
        assert w @ w == w
        assert w.T == w
        assert w.trace() == group.dim


def test_color_matrix_left_invariance(d4):
    # w(g, h) depends only on g^-1 h
    w = color_matrix(orbit_family(d4, (2, 1)))
    table = d4.table
    for x in range(8):
        for g in range(8):
            for h in range(8):
                assert w[g, h] == w[table[x][g], table[x][h]]


def test_singular_gram_raises():
    fam = VectorFamily(2, Matrix([[F(1), F(2)], [F(0), F(0)]]))
    with pytest.raises(SingularGramError):
        color_matrix(fam)


def test_is_linear_symmetry(d4):
    fam = orbit_family(d4, (2, 1))
    w = color_matrix(fam)
    assert is_linear_symmetry(w, identity_perm(8))
    for i in d4.generator_indices:
        assert is_linear_symmetry(w, d4.left_regular(i))
    swapped = list(range(8))
    swapped[0], swapped[1] = swapped[1], swapped[0]
    assert not is_linear_symmetry(w, tuple(swapped))


def test_realize_identity(c4):
    fam = orbit_family(c4, (1, 0))
    assert realize(fam, identity_perm(4)) == Matrix.identity(2)


def test_realize_rotation(c4):
    fam = orbit_family(c4, (1, 0))
    a = realize(fam, c4.left_regular(1))
    assert a == Matrix([[F(0), F(-1)], [F(1), F(0)]])


def test_realize_reflection_fixing_point(c4):
    fam = orbit_family(c4, (1, 0))
    # the square has a reflection fixing (1,0) and swapping (0,1),(0,-1)
    sigma = (0, 3, 2, 1)
    a = realize(fam, sigma)
    assert a == Matrix([[F(1), F(0)], [F(0), F(-1)]])
    for i in range(4):
        from orbitope.exactmath import mat_vec

        assert mat_vec(a, fam.column(i)) == fam.column(sigma[i])


def test_realize_rejects_non_symmetry(d4):
    fam = orbit_family(d4, (2, 1))
    swapped = list(range(8))
    swapped[0], swapped[1] = swapped[1], swapped[0]
    with pytest.raises(NotASymmetryError):
        realize(fam, tuple(swapped))


def test_realize_is_homomorphism(d4):
    from orbitope.perm import compose

    fam = orbit_family(d4, (2, 1))
    group = linsym_group(fam)
    rng = random.Random(1)
    elems = list(group.elements())
    for _ in range(15):
        s, t = rng.choice(elems), rng.choice(elems)
        assert realize(fam, compose(s, t)) == realize(fam, s) @ realize(fam, t)


def test_linsym_simplex_family():
    cols = [(F(1), F(0)), (F(0), F(1)), (F(-1), F(-1))]
    fam = VectorFamily.from_columns(2, cols)
    assert linsym_group(fam).order() == 6


def test_linsym_square(c4):
    assert linsym_group(orbit_family(c4, (1, 0))).order() == 8


def test_linsym_generic_octagon(d4):
    assert linsym_group(orbit_family(d4, (2, 1))).order() == 8


def test_oracle_equivalence_small_families(c3, c4, d3):
    cases = [
        orbit_family(c3, (1, 0)),
        orbit_family(c4, (1, 0)),
        orbit_family(c4, (2, 1)),
        orbit_family(d3, (2, 5)),
        # repeated columns: fibers of size 2
        VectorFamily.from_columns(
            2, [(F(1), F(0)), (F(1), F(0)), (F(0), F(1)), (F(-1), F(-1))]
        ),
    ]
    for fam in cases:
        group = linsym_group(fam)
        oracle = brute_force_linsym(fam)
        assert set(group.elements()) == oracle


def test_engine_deterministic(d4):
    fam = orbit_family(d4, (2, 1))
    first = linsym_group(fam).generators
    second = linsym_group(fam).generators
    assert first == second


def test_automorphism_group_path_graph():
    # path 0-1-2-3: unique nontrivial automorphism is the reversal
    edge = {(0, 1), (1, 2), (2, 3)}
    colors = [
        [
            (2 if i in (1, 2) else 1) if i == j
            else (1 if (min(i, j), max(i, j)) in edge else 0)
            for j in range(4)
        ]
        for i in range(4)
    ]
    group = automorphism_group(colors)
    assert group.order() == 2
    assert group.contains((3, 2, 1, 0))


def test_restrict_to_span_preserves_symmetries(c4):
    fam = orbit_family(c4, (1, 0))
    # embed the square family into 4 dimensions by duplicating rows
    rows = list(fam.columns.rows)
    embedded = VectorFamily(4, Matrix(rows + rows))
    reduced = restrict_to_span(embedded)
    assert reduced.dim == 2
    assert linsym_group(reduced).order() == 8


def test_restrict_to_span_zero_family():
    fam = VectorFamily(3, Matrix.zero(3, 4))
    reduced = restrict_to_span(fam)
    assert reduced.dim == 0
    assert linsym_group(reduced).order() == 24


def test_repeated_columns_fiber_kernel(d4):
    # stabilizer of (1,1) in D4 has order 2: four fibers of size two
    fam = orbit_family(d4, (1, 1))
    group = linsym_group(fam)
    assert group.order() == 2 ** 4 * 8


def test_symbolic_color_matrix_matches_evaluation(c4):
    from orbitope.orbit import symbolic_orbit_family
    from orbitope.symcore import symbolic_color_matrix

    sym_fam = symbolic_orbit_family(c4)
    num, den = symbolic_color_matrix(sym_fam)
    point = (F(3), F(2))
    fam = orbit_family(c4, point)
    w = color_matrix(fam)
    den_val = den.evaluate(point)
    assert den_val != 0
    for i in range(4):
        for j in range(4):
            assert num[i, j].evaluate(point) == w[i, j] * den_val
