# -*- coding: utf-8 -*-
import pytest
from hypothesis import given, settings, strategies as st

from liebranch.rootsys import LieType, SimpleLieType, Weight, build_root_system, is_root, raw_cartan
from liebranch.weyl import (
    NotDominantError,
    SimpleSubset,
    SimpleSystemError,
    bourbaki_reorder,
    identify,
    orbit,
    pairing_matrix,
    parabolic_antidominant,
    reflect,
    straighten,
)
from tests.oracles import weyl_order

A2 = SimpleLieType("A", 2)
B2 = SimpleLieType("B", 2)
G2 = SimpleLieType("G", 2)


def test_reflect():
    rs = build_root_system(A2)
    assert reflect(rs, 1, Weight.of(1, 0)) == Weight.of(-1, 1)
    assert reflect(rs, 2, (1, 0)) == Weight.of(1, 0)


def test_reflect_bad_index():
    with pytest.raises(IndexError):
        reflect(build_root_system(A2), 3, (1, 0))


def test_straighten_signs():
    rs = build_root_system(A2)
    regular = straighten(rs, (-2, 3))
    assert regular.weight == Weight.of(2, 1)
    assert regular.sign == -1
    assert straighten(rs, (1, 1)).sign == 1
    # dominant but on a wall
    assert straighten(rs, (1, 0)).sign == 0
    assert straighten(rs, (-1, 1)).sign == 0


@pytest.mark.parametrize(
    "t, w, size",
    [
        (A2, (1, 0), 3),
        (A2, (1, 1), 6),
        (B2, (1, 1), 8),
        (G2, (1, 0), 6),
        (G2, (1, 1), 12),
        (SimpleLieType("E", 6), (1, 0, 0, 0, 0, 0), 27),
        (SimpleLieType("E", 8), (0, 0, 0, 0, 0, 0, 0, 1), 240),
    ],
    ids=str,
)
def test_orbit_size(t, w, size):
    assert len(orbit(build_root_system(t), w)) == size


@pytest.mark.parametrize("t", [A2, B2, G2, SimpleLieType("A", 3), SimpleLieType("B", 3)], ids=str)
def test_regular_orbit_is_weyl_order(t):
    rs = build_root_system(t)
    assert len(orbit(rs, (1,) * rs.rank)) == weyl_order(t)


def test_orbit_rejects_non_dominant():
    with pytest.raises(NotDominantError):
        orbit(build_root_system(A2), (1, -1))


@given(st.integers(-6, 6), st.integers(-6, 6))
@settings(max_examples=60, deadline=None)
def test_straighten_lands_in_orbit(a, b):
    rs = build_root_system(G2)
    res = straighten(rs, (a, b))
    assert res.weight.is_dominant()
    assert Weight.of(a, b) in orbit(rs, res.weight)


def test_parabolic_antidominant_f4():
    rs = build_root_system(SimpleLieType("F", 4))
    S = SimpleSubset.of([1, 2, 3])
    v, steps = parabolic_antidominant(rs, S, rs.highest_root)
    assert v == (0, 1, 2, 2)
    assert steps == 5
    assert is_root(rs, v)


def test_parabolic_antidominant_requires_s_dominant():
    rs = build_root_system(A2)
    with pytest.raises(NotDominantError):
        parabolic_antidominant(rs, SimpleSubset.of([1]), (0, 1))


def test_simple_subset():
    s = SimpleSubset.of([3, 1, 3])
    assert s.indices == (1, 3)
    assert 3 in s and 2 not in s
    assert s.complement(4).indices == (2, 4)
    with pytest.raises(ValueError):
        SimpleSubset((2, 1))
    with pytest.raises(ValueError):
        SimpleSubset.of([0])
    with pytest.raises(ValueError):
        s.check(2)


def test_bourbaki_reorder_identity():
    rs = build_root_system(SimpleLieType("A", 3))
    t, perm = bourbaki_reorder(rs, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert str(t) == "A3"
    assert perm == (0, 1, 2)


def test_bourbaki_reorder_middle_first():
    rs = build_root_system(SimpleLieType("A", 3))
    t, perm = bourbaki_reorder(rs, [(0, 1, 0), (1, 0, 0), (0, 0, 1)])
    assert str(t) == "A3"
    assert perm == (1, 0, 2)


def test_bourbaki_reorder_long_root_first():
    rs = build_root_system(B2)
    t, perm = bourbaki_reorder(rs, [(0, 1), (1, 0)])
    assert str(t) == "B2"
    assert perm == (1, 0)


def test_bourbaki_reorder_product():
    rs = build_root_system(SimpleLieType("A", 3))
    t, perm = bourbaki_reorder(rs, [(1, 0, 0), (0, 0, 1)])
    assert t == LieType.parse("A1A1")
    assert perm == (0, 1)


def test_bourbaki_reorder_rejects_dependent():
    rs = build_root_system(A2)
    with pytest.raises(SimpleSystemError):
        bourbaki_reorder(rs, [(1, 0), (1, 0)])


def test_pairing_matrix_of_simple_roots_is_cartan():
    rs = build_root_system(G2)
    assert pairing_matrix(rs, [(1, 0), (0, 1)]) == [list(r) for r in rs.cartan]


@pytest.mark.parametrize("text", ["F4", "G2", "E7", "B3", "C3"])
def test_identify(text):
    t = LieType.parse(text).simple_factors[0]
    assert identify(raw_cartan(t.family, t.rank)) == LieType((t,))


def test_identify_rejects_scrambled_block():
    m = raw_cartan("B", 3)
    with pytest.raises(SimpleSystemError):
        identify(m, [2, 1, 0])
