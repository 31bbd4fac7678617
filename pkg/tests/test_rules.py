# -*- coding: utf-8 -*-
from fractions import Fraction

import pytest

from liebranch.reps import character_of, dim, restricted_character
from liebranch.rootsys import LieType, SimpleLieType, Weight, block_cartan, build_root_system, is_root, root_to_weight
from liebranch.rules import (
    CATALOG,
    CaseError,
    CaseId,
    InexactRestrictionError,
    catalog_spec,
    compose,
    conservation_check,
    direct_sum,
    folding_spec,
    identity_spec,
    load_shipped,
    make_case,
    res_wt_from_res_rt,
    borel_de_siebenthal,
)
from liebranch.weyl import pairing_matrix

FOLDING_SAMPLES = [
    ("A_D", 1), ("A_D", 2), ("A_D", 3), ("A_D", 5),
    ("A_B", 1), ("A_B", 2), ("A_B", 3),
    ("A_C", 1), ("A_C", 2), ("A_C", 3),
    ("D_BB", 0, 1), ("D_BB", 1, 1), ("D_BB", 2, 1), ("D_BB", 1, 2), ("D_BB", 2, 2), ("D_BB", 3, 0),
    ("D4_G2",), ("D4_A2",), ("E6_F4",), ("E6_C4",),
]
CLASSICAL_BDS_SAMPLES = [
    ("B_DB", 2, 0), ("B_DB", 2, 2), ("B_DB", 3, 1),
    ("D_DD", 2, 2), ("D_DD", 3, 2),
    ("C_CC", 1, 1), ("C_CC", 2, 2), ("C_CC", 3, 1),
]
EXCEPTIONAL_BDS = [(name,) for name, info in CATALOG.items() if info.kind == "bds" and not info.params]
ALL_SAMPLES = FOLDING_SAMPLES + CLASSICAL_BDS_SAMPLES + EXCEPTIONAL_BDS


def _case(sample):
    return CaseId(sample[0], tuple(sample[1:]))


def _ids(sample):
    return str(_case(sample))


def terms(dec):
    return {(w.coords, w.central): m for w, m in dec.items()}


def plain(dec):
    return {w.coords: m for w, m in dec.items()}


def fundamental_weights(n):
    return [tuple(int(i == j) for j in range(n)) for i in range(n)]


# ---------------- golden matrices and printed branchings ----------------

def test_su7_so7_matrix():
    spec = folding_spec(CaseId("A_B", (3,)))
    assert str(spec.g) == "A6" and str(spec.k) == "B3"
    assert spec.matrix.entries == ((1, 0, 0), (0, 1, 0), (0, 0, 2), (0, 0, 2), (0, 1, 0), (1, 0, 0))
    assert plain(spec.branch((1, 0, 0, 0, 0, 1))) == {(0, 1, 0): 1, (2, 0, 0): 1}


def test_a_d_8():
    spec = catalog_spec(make_case("A_D", m=8))
    w = (1, 1) + (0,) * 13
    assert plain(spec.branch(w)) == {(1, 0, 0, 0, 0, 0, 0, 0): 1, (1, 1, 0, 0, 0, 0, 0, 0): 1}


def test_a_d_5():
    spec = catalog_spec(make_case("A_D", m=5))
    w = (1, 2) + (0,) * 7
    assert plain(spec.branch(w)) == {
        (1, 0, 0, 0, 0): 1,
        (1, 1, 0, 0, 0): 1,
        (1, 2, 0, 0, 0): 1,
        (3, 0, 0, 0, 0): 1,
    }


def test_a_d_1_is_a_circle():
    spec = catalog_spec(make_case("A_D", m=1))
    assert spec.k == LieType((), 1)
    dec = spec.branch((1,))
    assert terms(dec) == {((), (Fraction(1),)): 1, ((), (Fraction(-1),)): 1}


def test_e6_f4():
    spec = catalog_spec(make_case("E6_F4"))
    assert plain(spec.branch((1, 0, 0, 0, 0, 0))) == {(0, 0, 0, 1): 1, (0, 0, 0, 0): 1}
    assert plain(spec.branch((0, 1, 0, 0, 0, 0))) == {(1, 0, 0, 0): 1, (0, 0, 0, 1): 1}


def test_e6_c4():
    spec = catalog_spec(make_case("E6_C4"))
    assert str(spec.k) == "C4"
    assert plain(spec.branch((0, 1, 0, 0, 0, 0))) == {(2, 0, 0, 0): 1, (0, 0, 0, 1): 1}
    assert plain(spec.branch((1, 0, 0, 0, 0, 0))) == {(0, 1, 0, 0): 1}


def test_e6_c4_shipped_matrix_matches_chain():
    # E6 > A5A1 > C3A1 must agree with E6 > C4 > C3C1
    a5a1 = catalog_spec(make_case("E6_A5A1a"))
    a5_c3 = folding_spec(make_case("A_C", m=3))
    via_a5 = compose(a5a1, direct_sum([a5_c3, identity_spec(LieType.parse("A1"))]))
    via_c4 = compose(catalog_spec(make_case("E6_C4")), catalog_spec(make_case("C_CC", p=3, q=1)))
    assert via_a5.k == via_c4.k == LieType.parse("C3A1")
    assert via_a5.matrix.entries == via_c4.matrix.entries
    assert load_shipped("e6_c4")["g"] == "E6"


def test_d4_a2():
    spec = catalog_spec(make_case("D4_A2"))
    assert spec.matrix.entries == ((1, 1), (3, 0), (1, 1), (1, 1))
    assert plain(spec.branch((0, 1, 0, 0))) == {(1, 1): 1, (3, 0): 1, (0, 3): 1}
    assert spec.order == 3


def test_d4_g2():
    spec = catalog_spec(make_case("D4_G2"))
    assert plain(spec.branch((1, 0, 0, 0))) == {(1, 0): 1, (0, 0): 1}
    assert plain(spec.branch((0, 1, 0, 0))) == {(0, 1): 1, (1, 0): 2}


def test_d_bb_low_rank_aliases():
    spec = catalog_spec(make_case("D_BB", p=1, q=2))
    assert str(spec.g) == "D4" and str(spec.k) == "A1B2"
    assert spec.matrix.entries[0] == (2, 0, 0)
    diag = catalog_spec(make_case("D_BB", p=0, q=1))
    assert str(diag.g) == "A1A1" and str(diag.k) == "A1"
    assert plain(diag.branch((1, 1))) == {(0,): 1, (2,): 1}


def test_c_cc_1_1_uses_b2():
    spec = catalog_spec(make_case("C_CC", p=1, q=1))
    assert str(spec.g) == "B2" and str(spec.k) == "A1A1"
    assert spec.gamma == 2
    assert plain(spec.branch((0, 2))) == {(2, 0): 1, (0, 2): 1, (1, 1): 1}


# ---------------- equal-rank construction ----------------

@pytest.mark.parametrize("sample", CLASSICAL_BDS_SAMPLES + EXCEPTIONAL_BDS, ids=_ids)
def test_bds_simple_system(sample):
    spec = catalog_spec(_case(sample))
    g = spec.g.simple_factors[0]
    rs = build_root_system(g)
    gamma = spec.gamma
    # the adjoined root sits where node γ was before reordering
    ws_beta = spec.simple_roots[spec.perm.index(gamma - 1)]
    assert is_root(rs, ws_beta)
    assert all(c >= 0 for c in ws_beta)
    assert ws_beta[gamma - 1] == rs.highest_root[gamma - 1] == spec.order
    assert pairing_matrix(rs, spec.simple_roots) == block_cartan(spec.k)
    assert spec.k.rank == g.rank


@pytest.mark.parametrize("sample", EXCEPTIONAL_BDS, ids=_ids)
def test_exceptional_k_type(sample):
    spec = catalog_spec(_case(sample))
    assert spec.k == LieType.parse(CATALOG[sample[0]].k)


def test_bds_rejects_levi_node():
    with pytest.raises(CaseError):
        borel_de_siebenthal(SimpleLieType("A", 2), 1)
    with pytest.raises(CaseError):
        borel_de_siebenthal(SimpleLieType("E", 6), 1)


# ---------------- conservation ----------------

@pytest.mark.parametrize("sample", ALL_SAMPLES, ids=_ids)
def test_dimension_conservation_small(sample):
    spec = catalog_spec(_case(sample))
    for w in fundamental_weights(spec.g.semisimple_rank):
        if dim(spec.g, w) <= 2000:
            expected, got = conservation_check(spec, w)
            assert expected == got


@pytest.mark.slow
@pytest.mark.parametrize("sample", ALL_SAMPLES, ids=_ids)
def test_dimension_conservation(sample):
    spec = catalog_spec(_case(sample))
    for w in fundamental_weights(spec.g.semisimple_rank):
        if dim(spec.g, w) <= 100_000:
            conservation_check(spec, w)


@pytest.mark.parametrize(
    "sample",
    [s for s in ALL_SAMPLES if catalog_spec(_case(s)).g.semisimple_rank <= 4],
    ids=_ids,
)
def test_character_conservation(sample):
    spec = catalog_spec(_case(sample))
    for w in fundamental_weights(spec.g.semisimple_rank):
        if dim(spec.g, w) > 4000:
            continue
        full, _ = restricted_character(spec.g, w, spec.matrix, spec.k, dominant_only=False)
        assert character_of(spec.k, spec.branch(w)) == full


@pytest.mark.parametrize(
    "sample",
    [s for s in ALL_SAMPLES if CATALOG[s[0]].order == 2 and catalog_spec(_case(s)).g.is_simple() and s != ("A_D", 1)],
    ids=_ids,
)
def test_symmetric_adjoint(sample):
    spec = catalog_spec(_case(sample))
    rs = build_root_system(spec.g.simple_factors[0])
    dec = spec.branch(root_to_weight(rs, rs.highest_root))
    k = spec.k
    assert dec[Weight((0,) * k.rank)] == 0
    for f, off in zip(k.simple_factors, k.offsets()):
        frs = build_root_system(f)
        top = [0] * k.rank
        top[off:off + f.rank] = root_to_weight(frs, frs.highest_root)
        assert dec[Weight(tuple(top))] == 1


@pytest.mark.slow
@pytest.mark.parametrize("name", ["E8_A4A4", "E8_D8", "E8_E7A1", "E8_A8", "E8_E6A2"])
def test_e8_adjoint(name):
    spec = catalog_spec(make_case(name))
    expected, got = conservation_check(spec, (0, 0, 0, 0, 0, 0, 0, 1))
    assert expected == got == 248


# ---------------- errors ----------------

def test_res_wt_inexact():
    with pytest.raises(InexactRestrictionError):
        res_wt_from_res_rt(SimpleLieType("A", 2), LieType.parse("A1"), [[1], [0]])


def test_res_wt_matches_folding():
    rt = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, 1], [0, 1, 0], [1, 0, 0]]
    m = res_wt_from_res_rt(SimpleLieType("A", 6), LieType.parse("B3"), rt)
    assert m.entries == folding_spec(CaseId("A_B", (3,))).matrix.entries


@pytest.mark.parametrize(
    "name, kwargs",
    [
        ("NOPE", {}),
        ("A_D", {}),
        ("A_D", {"m": 0}),
        ("E6_F4", {"m": 1}),
        ("B_DB", {"p": 1, "q": 1}),
        ("D_DD", {"p": 2, "q": 1}),
        ("D_BB", {"p": 0, "q": 0}),
        ("C_CC", {"p": 0, "q": 2}),
    ],
)
def test_make_case_rejects(name, kwargs):
    with pytest.raises(CaseError):
        make_case(name, **kwargs)


def test_compose_rejects_mismatch():
    with pytest.raises(CaseError):
        compose(catalog_spec(make_case("E6_F4")), catalog_spec(make_case("D4_G2")))


def test_catalog_orders():
    assert CATALOG["E8_A4A4"].order == 5
    assert catalog_spec(make_case("E8_A4A4")).order == 5
    assert catalog_spec(make_case("G2_A2")).order == 3
