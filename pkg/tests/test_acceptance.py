"""Acceptance gate: each test prints one ``criterion N: PASS|FAIL`` line."""
import contextlib
import io
import json
import subprocess
import sys
import time

import pytest

from densetop import (
    canonical_form,
    classify_connectivity,
    cross_validate,
    dc_decomposition,
    dense_P,
    enumerate_topologies,
    h_analogue,
    is_dense_connected_fast,
    is_dense_ultraconnected_fast,
    sierpinski_sq,
    space_from_json,
    sym_claim,
    verify_group_theorems,
    verify_theorem,
)
from densetop import theorems
from densetop.cli import run, search
from densetop.enumeration import all_spaces, preorder_rows
from densetop.errors import NotLocallyDC
from densetop.groups import TopologizedGroup, catalogue, continuity_class, dense_subgroup_P
from densetop.properties import incomparable_pair, is_locally_dense_connected_fast
from densetop.symbolic import MODELS, WINDOW_CAP
from oracles import brute_topologies, closure_by_definition, transitive_relation_count


@pytest.fixture
def criterion(report_line):
    @contextlib.contextmanager
    def gate(number, label):
        t0 = time.perf_counter()
        try:
            yield
        except BaseException:
            report_line(f"criterion {number}: FAIL ({label})")
            raise
        report_line(f"criterion {number}: PASS ({label}, {time.perf_counter() - t0:.1f}s)")
    return gate


def _verified(tid, n, **kw):
    r = verify_theorem(tid, n, **kw)
    assert r.failures == [], (tid, n, r.failures[:1])
    assert r.checked > 0
    return r


def test_criterion_1_enumeration(criterion):
    with criterion(1, "labeled topology counts"):
        for n in range(1, 4):
            assert len(all_spaces(n)) == len(brute_topologies(n))
        for n in (4, 5):
            assert len(all_spaces(n)) == transitive_relation_count(n)
        preorder_rows.cache_clear()
        t0 = time.perf_counter()
        counts = [sum(1 for _ in enumerate_topologies(n)) for n in range(1, 6)]
        elapsed = time.perf_counter() - t0
        assert counts == [1, 4, 29, 355, 6942]
        assert elapsed < 10, elapsed


def test_criterion_2_dense_connected_equivalence(criterion):
    with criterion(2, "dense-connected characterizations"):
        assert _verified("t1", 4).checked == 355
        t0 = time.perf_counter()
        assert _verified("t1", 5).checked == 6942
        assert time.perf_counter() - t0 < 60


def test_criterion_3_dense_ultraconnected_equivalence(criterion):
    with criterion(3, "dense-ultraconnected characterizations"):
        assert _verified("t22", 4).checked == 355
        assert _verified("t22", 5).checked == 6942


def test_criterion_4_heredity_suite(criterion):
    with criterion(4, "closed/clopen-hereditary implications"):
        for tid in ("t44", "p566", "clopen-prop", "p11"):
            for n in range(1, 6):
                _verified(tid, n)


def test_criterion_5_structure(criterion):
    with criterion(5, "DC component structure"):
        for tid in ("p6", "p7", "p10", "t233"):
            for n in range(1, 6):
                _verified(tid, n)
        signalled = 0
        for n in range(1, 6):
            for X in all_spaces(n):
                if is_locally_dense_connected_fast(X):
                    parts = dc_decomposition(X)
                    assert sum(bin(p).count("1") for p in parts) == n
                else:
                    with pytest.raises(NotLocallyDC):
                        dc_decomposition(X)
                    signalled += 1
        assert signalled > 0


def test_criterion_6_preservation(criterion):
    with criterion(6, "preservation under maps, products and coarsening"):
        t0 = time.perf_counter()
        _verified("p1", 3)
        _verified("p3", 3)
        _verified("p2", 6)
        _verified("product-local", 6)
        _verified("p0", 4)
        assert time.perf_counter() - t0 < 300


def test_criterion_7_groups(criterion):
    with criterion(7, "topologized group statements at orders 2-6"):
        for order in range(2, 7):
            for tid in ("t2", "t3", "c1", "ultra-corollary", "dsc"):
                r = verify_group_theorems(order, tid)
                assert r.failures == [] and r.checked > 0, (tid, order)
        for order in range(2, 5):
            for _, G in catalogue(order):
                for X in all_spaces(order):
                    TG = TopologizedGroup(G, X)
                    if continuity_class(TG).semitopological and is_dense_connected_fast(X):
                        assert dense_subgroup_P(TG, "connected")


def test_criterion_8_named_witnesses(criterion):
    with criterion(8, "named witness regressions"):
        S = sierpinski_sq()
        assert not dense_P(S, "ultraconnected")
        assert not is_dense_ultraconnected_fast(S)
        pair = incomparable_pair(S)
        assert pair is not None
        p, q = 1 << pair[0], 1 << pair[1]
        # some dense set through the pair has two disjoint nonempty closed sets in its subspace
        found = False
        for d in range(1 << S.n):
            if d & p and d & q and closure_by_definition(S, d) == S.full:
                closed = {d & ~u for u in S.opens}
                found |= any(a & p and b & q and not a & b for a in closed for b in closed)
        assert found

        H = h_analogue()
        assert dense_P(H, "ultraconnected") is False
        assert is_dense_ultraconnected_fast(H) is False
        assert classify_connectivity(H).ultraconnected

        res = search("ultraconnected & !dense_ultraconnected", 3)
        assert res["result"] == "found"
        W = space_from_json(json.dumps(res["witness"]))
        assert W.n == 3 and canonical_form(W) == canonical_form(H)


def test_criterion_9_symbolic(criterion):
    with criterion(9, "symbolic models"):
        for name in MODELS:
            rep = cross_validate(name, WINDOW_CAP)
            assert rep.ok, (name, rep.disagreements[:2])
        assert sym_claim("cofinite_N", "dense_connected").value
        assert sym_claim("cofinite_N", "T1").value
        via_t2 = sym_claim("ray_R_closed", "dense_connected_t2").value
        via_coarsening = sym_claim("ray_R_closed", "dense_connected_p0").value
        assert via_t2 and via_coarsening
        assert sym_claim("window_Z", "t3_condition").value
        assert sym_claim("H_space", "ultraconnected").value
        assert not sym_claim("H_space", "dense_ultraconnected").value
        assert not sym_claim("opc_discrete", "proper_one_dense_pseudocompact").value


def _cli(argv):
    proc = subprocess.run([sys.executable, "-m", "densetop", *argv], capture_output=True, check=False)
    return proc.returncode, proc.stdout


def test_criterion_10_determinism_and_replay(criterion, monkeypatch):
    with criterion(10, "byte-identical reports and replayable failures"):
        for argv in (["verify", "t1", "--n", "4", "--no-timing"],
                     ["verify", "p2", "--n", "4", "--no-timing"],
                     ["verify", "t2", "--order", "4", "--no-timing"],
                     ["search", "--property", "ultraconnected & !dense_ultraconnected", "--n", "3"],
                     ["sym", "window_Z", "t3_condition", "--trace"]):
            first, second = _cli(argv), _cli(argv)
            assert first[0] == 0 and first == second, argv

        monkeypatch.setattr(theorems, "is_dense_connected_fast", lambda X: True)
        out = io.StringIO()
        assert run(["verify", "t1", "--n", "3", "--no-timing"], out, io.StringIO()) == 1
        failures = json.loads(out.getvalue())["failures"]
        assert failures
        for rec in failures:
            buf = io.StringIO()
            assert run(["check", json.dumps(rec["input"]["spaces"][0])], buf, io.StringIO()) == 0
            prof = json.loads(buf.getvalue())
            assert prof["dense_connected_brute"] == rec["witness"]["dense_connected"] != rec["witness"]["fast"]
