import pytest
from hypothesis import given

from conftest import spaces_upto
from densetop import (
    PROPERTIES,
    dc_decomposition,
    dense_connected_component,
    dense_P,
    discrete,
    hereditarily_P,
    heredity_class,
    indiscrete,
    is_dense_connected_fast,
    is_dense_pathwise_fast,
    is_dense_pseudocompact,
    is_dense_ultraconnected_fast,
    locally_dense_P,
    max_real_range,
    one_dense_P,
    proper_one_dense_P,
    sierpinski,
    space_from_json,
    subspace,
    topological_sum,
)
from densetop.core import is_connected
from densetop.errors import NotLocallyDC, OutOfCarrier
from densetop.named import h_analogue, sierpinski_sq
from densetop.properties import (
    closure_criterion,
    dense_pathwise_profile,
    dense_witness,
    incomparable_pair,
    is_locally_dense_connected_fast,
    maximal_dense_connected_subsets,
    ultra_subspace_criterion,
)
from oracles import connected_by_definition, hyperconnected_by_definition

S = sierpinski()
SS = topological_sum([S, S])


def test_registry_contents():
    assert set(PROPERTIES) == {"connected", "hyperconnected", "ultraconnected", "path_connected", "T0",
                               "T1", "Hausdorff", "pseudocompact", "non_separated_points"}


def test_unknown_property():
    with pytest.raises(KeyError):
        dense_P(S, "compactish")


def test_dense_P_examples():
    assert dense_P(S, "connected")
    assert not dense_P(discrete(2), "connected")
    for name in ("connected", "hyperconnected", "ultraconnected", "path_connected", "non_separated_points"):
        assert dense_P(indiscrete(3), name)


def test_existential_variants():
    assert one_dense_P(S, "connected") and proper_one_dense_P(S, "connected")
    assert not one_dense_P(discrete(2), "connected")
    assert not proper_one_dense_P(discrete(2), "connected")
    one = discrete(1)
    assert one_dense_P(one, "connected") and not proper_one_dense_P(one, "connected")


def test_dense_witness():
    assert dense_witness(S, "connected") is None
    assert dense_witness(discrete(2), "connected") == 0b11


def test_locally_dense_examples():
    assert locally_dense_P(discrete(3), "connected")
    assert locally_dense_P(S, "connected")
    assert locally_dense_P(SS, "connected")
    assert not dense_P(SS, "connected")


def test_heredity_examples():
    assert heredity_class("T1", 4).closed_hereditary
    hc = heredity_class("connected", 3)
    assert not hc.closed_hereditary
    w = hc.witnesses["closed"]
    X = space_from_json(w["space"])
    s = sum(1 << p for p in w["subset"])
    # the witness replays: a connected space with a disconnected closed subspace
    assert is_connected(X) and X.is_closed(s)
    assert not is_connected(subspace(X, s).space)
    assert heredity_class("ultraconnected", 4).closed_hereditary


def test_hereditarily():
    assert hereditarily_P(indiscrete(3), "connected")
    assert not hereditarily_P(h_analogue(), "connected")
    assert hereditarily_P(discrete(3), "T1")


def test_fast_dense_connected_examples():
    assert is_dense_connected_fast(S)
    assert not is_dense_connected_fast(discrete(2))
    assert not is_dense_connected_fast(h_analogue())


def test_fast_dense_ultraconnected_examples():
    assert is_dense_ultraconnected_fast(S)
    # (0,1) and (1,0) of the Sierpinski square are points 1 and 2
    assert not is_dense_ultraconnected_fast(sierpinski_sq())
    assert incomparable_pair(sierpinski_sq()) == (1, 2)
    X = h_analogue()
    assert not is_dense_ultraconnected_fast(X)
    assert PROPERTIES["ultraconnected"](X)
    assert incomparable_pair(X) == (1, 2)


def test_pathwise_examples():
    assert is_dense_pathwise_fast(S)
    assert not is_dense_pathwise_fast(discrete(2))
    assert not is_dense_pathwise_fast(SS)
    prof = dense_pathwise_profile(S)
    assert prof.dense_pathwise_connected and prof.non_separated_points


def test_pseudocompact_examples():
    assert is_dense_pseudocompact(S)
    assert is_dense_pseudocompact(discrete(4)) and max_real_range(discrete(4)) == 4


def test_dc_component_examples():
    assert dense_connected_component(SS, 0) == 0b0011
    assert dense_connected_component(S, 0) == 0b11
    assert dense_connected_component(discrete(3), 2) == 0b100
    with pytest.raises(OutOfCarrier):
        dense_connected_component(S, 3)


def test_dc_decomposition_needs_local_dense_connectedness():
    X = h_analogue()
    assert not locally_dense_P(X, "connected")
    with pytest.raises(NotLocallyDC):
        dc_decomposition(X)
    with pytest.raises(NotLocallyDC):
        dense_connected_component(X, 0)
    assert dc_decomposition(SS) == [0b0011, 0b1100]


def test_maximal_dc_subsets():
    assert maximal_dense_connected_subsets(SS, 0) == [0b0011]


# --- invariants -------------------------------------------------------------

@given(spaces_upto(5))
def test_dense_connected_equivalences(X):
    brute = dense_P(X, "connected")
    assert brute == is_dense_connected_fast(X) == dense_P(X, "hyperconnected")
    assert brute == closure_criterion(X) == hyperconnected_by_definition(X)


@given(spaces_upto(5))
def test_dense_ultraconnected_equivalences(X):
    brute = dense_P(X, "ultraconnected")
    assert brute == is_dense_ultraconnected_fast(X) == ultra_subspace_criterion(X)
    if is_dense_ultraconnected_fast(X):
        assert is_dense_pathwise_fast(X)


@given(spaces_upto(5))
def test_pathwise_sufficient_condition(X):
    prof = dense_pathwise_profile(X)
    if prof.non_separated_points:
        assert prof.dense_pathwise_connected
    assert prof.dense_pathwise_connected == dense_P(X, "path_connected")


@given(spaces_upto(4))
def test_locally_dense_literal_vs_fast(X):
    assert locally_dense_P(X, "connected") == is_locally_dense_connected_fast(X)
    assert locally_dense_P(X, "connected") == all(dense_P(subspace(X, u).space, "connected") for u in X.nbhd)


@given(spaces_upto(5))
def test_dc_decomposition_structure(X):
    if not locally_dense_P(X, "connected"):
        with pytest.raises(NotLocallyDC):
            dc_decomposition(X)
        return
    parts = dc_decomposition(X)
    union = 0
    for p in parts:
        assert union & p == 0
        union |= p
        assert X.is_open(p) and X.is_closed(p)
        assert dense_P(subspace(X, p).space, "connected")
    assert union == X.full
    assert sorted(topological_sum([subspace(X, p).space for p in parts]).opens) == sorted(
        _relabel(X, [q for p in parts for q in _members(p)]))


def _members(mask):
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def _relabel(X, order):
    pos = {p: i for i, p in enumerate(order)}
    return [sum(1 << pos[p] for p in _members(u)) for u in X.opens]


@given(spaces_upto(5))
def test_closure_hereditary_certification(X):
    for name in PROPERTIES:
        if heredity_class(name, X.n).closed_hereditary and dense_P(X, name):
            assert hereditarily_P(X, name)


@given(spaces_upto(5))
def test_non_separated_points_hereditary(X):
    if PROPERTIES["non_separated_points"](X):
        assert hereditarily_P(X, "non_separated_points")


@given(spaces_upto(5))
def test_connected_oracle(X):
    assert PROPERTIES["connected"](X) == connected_by_definition(X)
