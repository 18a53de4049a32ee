"""Exact arithmetic kernel: determinant/adjugate, solving, polynomials."""

import random
from fractions import Fraction as F

import pytest

from orbitope.exactmath import (
    Matrix,
    MultiPoly,
    det_adj,
    inverse,
    mat_vec,
    parse_rational,
    pivot_columns,
    rank,
    render_rational,
    solve_exact,
)
from orbitope.orbit import close_group, orbit_family

from conftest import ROT4, REFL, diag


def test_parse_render_roundtrip_examples():
    assert parse_rational("-3/7") == F(-3, 7)
    assert render_rational(F(-3, 7)) == "-3/7"
    assert render_rational(F(5)) == "5"
    assert parse_rational("5") == F(5)


def test_parse_render_roundtrip_random():
    rng = random.Random(42)
    for _ in range(200):
        q = F(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
        assert parse_rational(render_rational(q)) == q


def test_det_adj_identity():
    det, adj = det_adj(Matrix.identity(2))
    assert det == 1
    assert adj == Matrix.identity(2)


def test_det_adj_textbook():
    m = Matrix([[F(1), F(2)], [F(3), F(4)]])
    det, adj = det_adj(m)
    assert det == -2
    assert adj == Matrix([[F(4), F(-2)], [F(-3), F(1)]])
    assert m @ adj == Matrix.identity(2).scale(det)


def test_det_adj_symbolic_sign_group():
    # orbit of X1 under {1, -1} in one dimension: Q = 2 X1^2
    x = MultiPoly.variable(0, 1)
    family = Matrix([[x, -x]])
    q = family @ family.T
    det, adj = det_adj(q)
    assert det == 2 * x * x
    assert adj == Matrix([[MultiPoly.const(1, 1)]])


def _random_fraction_matrix(rng, n):
    return Matrix(
        [[F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
    )


def _random_poly(rng, nvars, max_terms=3):
    p = MultiPoly(nvars)
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randint(0, 2) for _ in range(nvars))
        p = p + MultiPoly(nvars, {exps: F(rng.randint(-4, 4) or 1)})
    return p


def test_adjugate_identity_rational_random():
    rng = random.Random(7)
    for n in (1, 2, 3, 4):
        for _ in range(10):
            m = _random_fraction_matrix(rng, n)
            det, adj = det_adj(m)
            ident = Matrix.identity(n)
            assert m @ adj == ident.scale(det)
            assert adj @ m == ident.scale(det)


def test_adjugate_identity_polynomial_random():
    rng = random.Random(11)
    one = MultiPoly.const(2, 1)
    zero = MultiPoly.const(2, 0)
    for n in (2, 3):
        for _ in range(6):
            m = Matrix([[_random_poly(rng, 2) for _ in range(n)] for _ in range(n)])
            det, adj = det_adj(m)
            ident = Matrix.identity(n, one=one, zero=zero)
            assert m @ adj == ident.scale(det)
            assert adj @ m == ident.scale(det)


def test_multipoly_ring_axioms_random():
    rng = random.Random(3)
    for _ in range(60):
        f = _random_poly(rng, 2)
        g = _random_poly(rng, 2)
        h = _random_poly(rng, 2)
        assert f * g == g * f
        assert f * (g + h) == f * g + f * h
        assert (f * g) * h == f * (g * h)


def test_multipoly_exact_division():
    x = MultiPoly.variable(0, 2)
    y = MultiPoly.variable(1, 2)
    f = (x + y) * (x - y)
    assert f / (x + y) == x - y
    with pytest.raises(ValueError):
        (x * x + 1) / (x + y)


def test_multipoly_evaluate():
    x = MultiPoly.variable(0, 2)
    y = MultiPoly.variable(1, 2)
    p = 2 * x * x * y - y + 3
    assert p.evaluate((F(2), F(5))) == 2 * 4 * 5 - 5 + 3


def test_solve_identity():
    b = Matrix([[F(3)], [F(-2)]])
    assert solve_exact(Matrix.identity(2), b) == b


def test_solve_recovers_rotation_from_square_symmetry():
    # rotating the C4 orbit of (1, 0) one step is realized by the rotation
    c4 = close_group([ROT4])
    fam = orbit_family(c4, (1, 0))
    v = fam.columns
    rotated = v.permute_columns(c4.left_regular(1))
    a_t = solve_exact(v.T, rotated.T)
    assert a_t is not None
    assert a_t.T == Matrix([[F(0), F(-1)], [F(1), F(0)]])


def test_solve_inconsistent_for_non_symmetry():
    # swapping two adjacent vertices of a non-regular octagon is not linear
    d4 = close_group([ROT4, REFL])
    fam = orbit_family(d4, (2, 1))
    images = list(range(8))
    # transpose the identity vertex with an adjacent one
    images[0], images[1] = images[1], images[0]
    v = fam.columns
    target = v.permute_columns(tuple(images))
    assert solve_exact(v.T, target.T) is None


def test_rank_examples():
    assert rank(Matrix.zero(3, 4)) == 0
    assert rank(Matrix.identity(5)) == 5
    d4 = close_group([ROT4, REFL])
    fam = orbit_family(d4, (2, 1))
    with_ones = Matrix(list(fam.columns.rows) + [[F(1)] * 8])
    assert rank(with_ones) == 3


def test_pivot_columns():
    m = Matrix([[F(0), F(1), F(2)], [F(0), F(2), F(4)]])
    assert pivot_columns(m) == [1]


def test_inverse_and_singular():
    m = Matrix([[F(2), F(1)], [F(1), F(1)]])
    assert m @ inverse(m) == Matrix.identity(2)
    with pytest.raises(ValueError):
        inverse(Matrix([[F(1), F(2)], [F(2), F(4)]]))


def test_mat_vec():
    assert mat_vec(diag(2, 3), (F(1), F(10))) == (F(2), F(30))


def test_solve_underdetermined_consistent():
    a = Matrix([[F(1), F(1)]])
    b = Matrix([[F(4)]])
    x = solve_exact(a, b)
    assert x is not None and a @ x == b
