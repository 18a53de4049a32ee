"""Permutation groups: exact order, membership, stabilizers."""

import random

import pytest

from orbitope.perm import (
    PermGroup,
    compose,
    cycle_string,
    identity_perm,
    inverse_perm,
    parse_cycles,
)
from orbitope.orbit import close_group
from orbitope import grpalg

from conftest import ROT4, REFL, small_group_library


def test_cycle_group_order():
    eight_cycle = tuple(list(range(1, 8)) + [0])
    assert PermGroup(8, [eight_cycle]).order() == 8


def test_symmetric_group_order():
    transposition = (1, 0, 2, 3)
    four_cycle = (1, 2, 3, 0)
    assert PermGroup(4, [transposition, four_cycle]).order() == 24
    assert PermGroup.symmetric(8).order() == 40320


def test_left_regular_d4_is_regular():
    d4 = close_group([ROT4, REFL])
    perms = [d4.left_regular(i) for i in d4.generator_indices]
    assert PermGroup(8, perms).order() == 8


def test_wreath_c2_s4_on_16_points():
    # translations of GF(2)^4 plus coordinate permutations of the 4 bits
    def xor_perm(mask):
        return tuple(x ^ mask for x in range(16))

    def bit_perm(images):
        out = []
        for x in range(16):
            y = 0
            for bit in range(4):
                if x >> bit & 1:
                    y |= 1 << images[bit]
            out.append(y)
        return tuple(out)

    gens = [xor_perm(1 << b) for b in range(4)]
    gens.append(bit_perm((1, 0, 2, 3)))
    gens.append(bit_perm((1, 2, 3, 0)))
    assert PermGroup(16, gens).order() == 384


def test_trivial_group():
    assert PermGroup.trivial(5).order() == 1
    assert PermGroup.trivial(0).order() == 1


def test_contains_identity_and_odd_perm():
    group = PermGroup(4, [(1, 2, 0, 3), (0, 2, 3, 1)])  # alternating group A4
    assert group.order() == 12
    assert group.contains(identity_perm(4))
    assert not group.contains((1, 0, 2, 3))


def test_contains_inversion_in_square_symmetries(c4):
    sym = grpalg.reppoly_symgroup(c4)
    assert sym.contains(c4.inversion_perm())


def test_point_stabilizer_sym4():
    stab = PermGroup.symmetric(4).point_stabilizer(0)
    assert stab.order() == 6
    assert all(g[0] == 0 for g in stab.generators)


def test_lagrange_relation_random():
    rng = random.Random(5)
    for _ in range(20):
        degree = rng.randint(3, 9)
        gens = []
        for _ in range(rng.randint(1, 3)):
            images = list(range(degree))
            rng.shuffle(images)
            gens.append(tuple(images))
        group = PermGroup(degree, gens)
        point = rng.randrange(degree)
        stab = group.point_stabilizer(point)
        assert stab.order() * len(group.orbit(point)) == group.order()
        for g in gens:
            assert group.contains(g)
        assert group.order() % 1 == 0


def test_order_invariant_under_generator_shuffling():
    gens = [(1, 0, 2, 3), (1, 2, 3, 0)]
    base = PermGroup(4, gens).order()
    assert PermGroup(4, gens[::-1]).order() == base
    assert PermGroup(4, gens + gens).order() == base


def test_order_divides_factorial_library():
    import math

    for name, group in small_group_library():
        perms = [group.left_regular(i) for i in group.generator_indices]
        pg = PermGroup(group.order, perms)
        assert math.factorial(group.order) % pg.order() == 0, name
        assert pg.order() == group.order  # left action is regular


def test_compose_inverse():
    p = (2, 0, 1, 3)
    assert compose(p, inverse_perm(p)) == identity_perm(4)
    assert compose(inverse_perm(p), p) == identity_perm(4)


def test_cycle_notation_roundtrip():
    p = parse_cycles("(1 4 2 3)", 4)
    assert p == (3, 2, 0, 1)
    assert parse_cycles(cycle_string(p), 4) == p
    assert cycle_string(identity_perm(3)) == "()"
    with pytest.raises(ValueError):
        parse_cycles("(1 9)", 4)


def test_degree_mismatch_rejected():
    with pytest.raises(ValueError):
        PermGroup(4, [(1, 0)])
    group = PermGroup(4, [(1, 0, 2, 3)])
    with pytest.raises(ValueError):
        group.contains((0, 1))


def test_elements_enumeration():
    group = PermGroup(4, [(1, 0, 2, 3), (1, 2, 3, 0)])
    elements = list(group.elements())
    assert len(elements) == 24
    assert len(set(elements)) == 24
