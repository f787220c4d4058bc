import itertools

import pytest
from hypothesis import given, strategies as st

from densetop import (
    GroupTable,
    TopologizedGroup,
    continuity_class,
    dense_subgroup_P,
    dense_subgroups,
    discrete,
    identity_neighborhood_conditions,
    indiscrete,
    is_dense_connected_fast,
    validate_topology,
    verify_group_theorems,
)
from densetop.enumeration import all_spaces
from densetop.errors import CapExceeded, NotAGroup, UnknownTheorem
from densetop.groups import (
    FINITE_SCALE_BANNER,
    _row_class,
    _tables,
    catalogue,
    cyclic,
    joint_continuity,
    joint_continuity_by_product,
    klein_four,
    replay_group_failure,
    subgroups,
    symmetric3,
)

Z2, Z4 = cyclic(2), cyclic(4)


def test_validation():
    with pytest.raises(NotAGroup):
        GroupTable.from_mul([[0, 1], [1, 1]])  # 1 has no inverse
    assert GroupTable.from_mul([[1, 0], [0, 1]]).identity == 1
    with pytest.raises(NotAGroup):
        GroupTable.from_mul([[0, 1, 2], [1, 0, 0], [2, 0, 0]])


def test_json_round_trip():
    G = symmetric3()
    assert GroupTable.from_json(G.to_json()) == G
    with pytest.raises(NotAGroup):
        GroupTable.from_json({"order": 3, "mul": [[0, 1], [1, 0]]})


def _element_orders(G):
    out = []
    for g in range(G.order):
        k, x = 1, g
        while x != G.identity:
            x, k = G.mul[x][g], k + 1
        out.append(k)
    return sorted(out)


def test_catalogue():
    assert [len(catalogue(n)) for n in range(1, 7)] == [1, 1, 1, 2, 1, 2]
    assert _element_orders(cyclic(4)) == [1, 2, 4, 4]
    assert _element_orders(klein_four()) == [1, 2, 2, 2]
    S3 = symmetric3()
    assert any(S3.mul[a][b] != S3.mul[b][a] for a in range(6) for b in range(6))
    assert _element_orders(S3) == [1, 2, 2, 2, 3, 3]


def test_continuity_examples():
    for X in (indiscrete(2), discrete(2)):
        c = continuity_class(TopologizedGroup(Z2, X))
        assert c.semitopological and c.paratopological and c.quasitopological and c.topological
    X = validate_topology(4, [[], [1, 3], [0, 1, 2, 3]])
    c = continuity_class(TopologizedGroup(Z4, X))
    assert not any(vars(c).values())


def test_neighborhood_condition_examples():
    for G in (Z2, cyclic(3), symmetric3()):
        cond = identity_neighborhood_conditions(TopologizedGroup(G, indiscrete(G.order)))
        assert cond.t2_condition and cond.t3_condition
    cond = identity_neighborhood_conditions(TopologizedGroup(Z2, discrete(2)))
    assert not cond.t2_condition and not cond.t3_condition
    X = validate_topology(2, [[], [0], [0, 1]])  # {e} open
    cond = identity_neighborhood_conditions(TopologizedGroup(Z2, X))
    assert not cond.t2_condition and not cond.t3_condition


def test_sweep_examples():
    r = verify_group_theorems(2, "c1")
    assert r.checked == 4 and r.failures == []
    assert verify_group_theorems(4, "t3").failures == []
    assert verify_group_theorems(3, "t2").failures == []
    assert FINITE_SCALE_BANNER in r.notes
    assert verify_group_theorems(2, "ultra-corollary").theorem == "ultra"


def test_sweep_errors():
    with pytest.raises(UnknownTheorem):
        verify_group_theorems(3, "t9")
    with pytest.raises(CapExceeded):
        verify_group_theorems(7, "t2")


def test_dense_subgroup_examples():
    assert list(dense_subgroups(TopologizedGroup(Z4, indiscrete(4)))) == subgroups(Z4) == [0b0001, 0b0101, 0b1111]
    assert list(dense_subgroups(TopologizedGroup(Z4, discrete(4)))) == [0b1111]
    assert dense_subgroup_P(TopologizedGroup(Z2, indiscrete(2)), "connected")


def test_replay_of_passing_instance():
    rec = {"input": {"group": Z2.to_json(), "space": indiscrete(2).to_json()}}
    assert not replay_group_failure("c1", rec)


def _all_tgs(max_order):
    for n in range(1, max_order + 1):
        for _, G in catalogue(n):
            for X in all_spaces(n):
                yield TopologizedGroup(G, X)


@pytest.mark.parametrize("order", [1, 2, 3, 4])
def test_continuity_hierarchy_and_fast_paths(order):
    for TG in _all_tgs(order):
        if TG.group.order != order:
            continue
        c = continuity_class(TG)
        assert c.topological == (c.paratopological and c.quasitopological)
        assert not c.paratopological or c.semitopological
        assert not c.quasitopological or c.semitopological
        assert joint_continuity(TG) == joint_continuity_by_product(TG)
        fast = _row_class(TG.group, _tables(TG.group), TG.space.nbhd)
        assert fast == (c.semitopological, c.paratopological and c.semitopological,
                        c.quasitopological, c.topological and c.semitopological)


@pytest.mark.parametrize("order", [1, 2, 3, 4])
def test_conditions_depend_only_on_identity_neighborhood(order):
    for TG in _all_tgs(order):
        if TG.group.order != order:
            continue
        G, nb = TG.group, TG.space.nbhd
        ue = nb[G.identity]
        cond = identity_neighborhood_conditions(TG)
        assert cond.t2_condition == (G.setprod(ue, G.setinv(ue)) == TG.space.full)
        assert cond.t3_condition == (G.setprod(ue, ue) == TG.space.full)


@pytest.mark.parametrize("order", [2, 3, 4])
def test_dense_connected_semitopological_groups_are_dense_subgroup_connected(order):
    for TG in _all_tgs(order):
        if TG.group.order != order:
            continue
        if continuity_class(TG).semitopological and is_dense_connected_fast(TG.space):
            assert dense_subgroup_P(TG, "connected")


def test_subgroups_are_closed_under_inverse():
    for n in range(1, 7):
        for _, G in catalogue(n):
            for s in subgroups(G):
                assert G.setinv(s) == s
                assert G.order % bin(s).count("1") == 0
