"""Shared builders: small rational matrix groups and oracle helpers."""

from fractions import Fraction as F

import pytest

from orbitope.exactmath import Matrix
from orbitope.orbit import MatrixGroup, close_group

ROT4 = [[F(0), F(-1)], [F(1), F(0)]]
REFL = [[F(1), F(0)], [F(0), F(-1)]]
ROT3 = [[F(0), F(-1)], [F(1), F(-1)]]
ROT6 = [[F(1), F(-1)], [F(1), F(0)]]
SWAP = [[F(0), F(1)], [F(1), F(0)]]


def perm_matrix(images) -> Matrix:
    n = len(images)
    return Matrix([[F(1 if images[j] == i else 0) for j in range(n)] for i in range(n)])


def companion(coeffs) -> Matrix:
    """Companion matrix of x^n + c_{n-1} x^{n-1} + ... + c_0."""
    n = len(coeffs)
    rows = [[F(0)] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = F(1)
    for i in range(n):
        rows[i][n - 1] = -F(coeffs[i])
    return Matrix(rows)


def diag(*entries) -> Matrix:
    n = len(entries)
    return Matrix([[F(entries[i] if i == j else 0) for j in range(n)] for i in range(n)])


@pytest.fixture(scope="session")
def c4() -> MatrixGroup:
    return close_group([ROT4])


@pytest.fixture(scope="session")
def d4() -> MatrixGroup:
    return close_group([ROT4, REFL])


@pytest.fixture(scope="session")
def c3() -> MatrixGroup:
    return close_group([ROT3])


@pytest.fixture(scope="session")
def d3() -> MatrixGroup:
    return close_group([ROT3, SWAP])


@pytest.fixture(scope="session")
def c5() -> MatrixGroup:
    return close_group([companion([1, 1, 1, 1])])


@pytest.fixture(scope="session")
def s3_natural() -> MatrixGroup:
    """S3 as 3x3 permutation matrices (the Birkhoff polytope B3 setup)."""
    return close_group([perm_matrix((1, 0, 2)), perm_matrix((1, 2, 0))])


@pytest.fixture(scope="session")
def q8() -> MatrixGroup:
    i = Matrix([
        [F(0), F(-1), F(0), F(0)],
        [F(1), F(0), F(0), F(0)],
        [F(0), F(0), F(0), F(1)],
        [F(0), F(0), F(-1), F(0)],
    ])
    j = Matrix([
        [F(0), F(0), F(-1), F(0)],
        [F(0), F(0), F(0), F(-1)],
        [F(1), F(0), F(0), F(0)],
        [F(0), F(1), F(0), F(0)],
    ])
    return close_group([i, j])


def small_group_library() -> list[tuple[str, MatrixGroup]]:
    """Groups with |G| <= 12, dim <= 4, used by the randomized suites."""
    a4_flip = diag(-1, -1, 1)
    a4_cycle = perm_matrix((1, 2, 0))
    return [
        ("C2", close_group([diag(-1)])),
        ("C3", close_group([ROT3])),
        ("C4", close_group([ROT4])),
        ("V4", close_group([diag(-1, 1), diag(1, -1)])),
        ("C6", close_group([ROT6])),
        ("D3", close_group([ROT3, SWAP])),
        ("D4", close_group([ROT4, REFL])),
        ("C2xC4", close_group([diag(-1, 1, 1), Matrix([
            [F(1), F(0), F(0)], [F(0), F(0), F(-1)], [F(0), F(1), F(0)],
        ])])),
        ("D6", close_group([ROT6, SWAP])),
        ("A4", close_group([a4_flip, a4_cycle])),
        ("C8", close_group([companion([1, 0, 0, 0])])),
        ("C12", close_group([companion([1, 0, -1, 0])])),
    ]


def random_unimodular(rng, n: int) -> Matrix:
    """Product of random elementary integer matrices (det +-1)."""
    rows = [[F(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for _ in range(2 * n):
        kind = rng.randrange(3)
        i = rng.randrange(n)
        j = rng.randrange(n)
        if kind == 0 and i != j:
            k = rng.choice([-2, -1, 1, 2])
            for c in range(n):
                rows[i][c] += k * rows[j][c]
        elif kind == 1 and i != j:
            rows[i], rows[j] = rows[j], rows[i]
        else:
            for c in range(n):
                rows[i][c] = -rows[i][c]
    return Matrix(rows)


def conjugated(group: MatrixGroup, t: Matrix) -> MatrixGroup:
    """The group {t^-1 g t}, closed with its generators conjugated."""
    from orbitope.exactmath import inverse

    t_inv = inverse(t)
    gens = [t_inv @ group.elements[i] @ t for i in group.generator_indices]
    return close_group(gens)


def random_generating_point(rng, group: MatrixGroup, bound: int = 9):
    from orbitope.orbit import is_generating_point, stabilizer_in_group

    while True:
        v = tuple(F(rng.randint(-bound, bound)) for _ in range(group.dim))
        if len(stabilizer_in_group(group, v)) != 1:
            continue
        if is_generating_point(group, v):
            return v


def two_coloring_exists(edges) -> bool:
    """Whether the edge set, as a subgraph, is bipartite (oracle check)."""
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    color: dict[int, int] = {}
    for start in adj:
        if start in color:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            x = queue.pop()
            for y in adj[x]:
                if y not in color:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return False
    return True
