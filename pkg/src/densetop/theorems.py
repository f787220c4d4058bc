"""Finite-scale verification harness for the dense-P results.

Each registered statement has a universe of cases (tuples of spaces built
from the enumeration streams) and a check that returns witness records for
every way the case violates the statement.  Brute-force combinators and
fast characterizations are compared wherever both exist.
"""
from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .core import (
    FiniteSpace,
    PointMap,
    bits,
    closure,
    clopen_splitting_decomposition,
    connected_components,
    discrete,
    has_non_separated_points,
    is_connected,
    is_hyperconnected,
    map_profile,
    max_real_range,
    members,
    product,
    separation_profile,
    space_from_json,
    subspace,
    topological_sum,
)
from .enumeration import all_spaces, check_cap, dense_subsets, enumerate_maps, MODES
from .errors import NotLocallyDC, UnknownTheorem
from .properties import (
    PROPERTIES,
    closure_criterion,
    dc_decomposition,
    dense_connected_component,
    dense_connected_subsets,
    dense_P,
    dense_witness,
    hereditary_witness,
    heredity_class,
    is_dense_connected_fast,
    is_dense_pathwise_fast,
    is_dense_pseudocompact,
    is_dense_ultraconnected_fast,
    is_locally_dense_connected_fast,
    locally_dense_P,
    maximal_dense_connected_subsets,
    ultra_subspace_criterion,
)
from .report import TheoremReport

GROUP_THEOREMS = ("t2", "t3", "c1", "ultra", "dsc")

# properties preserved by continuous surjections (used for the almost-open statement)
SURJECTION_STABLE = ("connected", "hyperconnected", "ultraconnected", "path_connected", "pseudocompact")


@dataclass(frozen=True)
class Theorem:
    id: str
    statement: str
    universe: Callable[[int, str], list[tuple]]
    describe: Callable[[int, str], str]
    check: Callable[..., list[dict]]
    notes: tuple[str, ...] = ()


# ---------------------------------------------------------------------------
# Universes
# ---------------------------------------------------------------------------

def _single(n: int, mode: str) -> list[tuple]:
    return [(X,) for X in all_spaces(n, mode)]


def _single_desc(n, mode):
    return f"all {mode} topologies on {n} points"


def _pairs_upto(n: int, mode: str) -> list[tuple]:
    out = []
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            for X in all_spaces(a, mode):
                for Y in all_spaces(b, mode):
                    out.append((X, Y))
    return out


def _pairs_desc(n, mode):
    return f"pairs of {mode} spaces with 1..{n} points each"


def _factor_pairs(n: int, mode: str) -> list[tuple]:
    out = []
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if a * b <= 2 * n:
                for X in all_spaces(a, "classes"):
                    for Y in all_spaces(b, "classes"):
                        out.append((X, Y))
    return out


def _factor_desc(n, mode):
    return f"factor pairs up to homeomorphism, factors of 1..{n} points, product size <= {2 * n}"


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------

@lru_cache(maxsize=1 << 16)
def _dc(X: FiniteSpace) -> bool:
    return dense_P(X, "connected")


@lru_cache(maxsize=1 << 16)
def _ldc(X: FiniteSpace) -> bool:
    return locally_dense_P(X, "connected")


def _mismatch(values: dict) -> list[dict]:
    return [] if len(set(values.values())) == 1 else [dict(values)]


def check_t1(X):
    values = {
        "dense_connected": _dc(X),
        "closure_criterion": closure_criterion(X),
        "hyperconnected": is_hyperconnected(X),
        "dense_hyperconnected": dense_P(X, "hyperconnected"),
        "fast": is_dense_connected_fast(X),
    }
    out = _mismatch(values)
    if out:
        s = dense_witness(X, "connected")
        out[0]["dense_subset"] = None if s is None else list(members(s))
    return out


def check_t22(X):
    return _mismatch({
        "dense_ultraconnected": dense_P(X, "ultraconnected"),
        "comparability": is_dense_ultraconnected_fast(X),
        "subspace_criterion": ultra_subspace_criterion(X),
    })


@lru_cache(maxsize=None)
def _certified(kind: str, n: int) -> tuple[str, ...]:
    out = []
    for name in PROPERTIES:
        hc = heredity_class(name, n)
        if getattr(hc, f"{kind}_hereditary"):
            out.append(name)
    return tuple(out)


def check_t44(X):
    out = []
    for name in _certified("closed", X.n):
        if dense_P(X, name):
            s = hereditary_witness(X, name)
            if s is not None:
                out.append({"property": name, "subset": list(members(s))})
    return out


def check_p566(X):
    out = []
    for name in PROPERTIES:
        if not dense_P(X, name):
            continue
        for s in dense_subsets(X):
            if not dense_P(subspace(X, s).space, name):
                out.append({"property": name, "dense_subset": list(members(s))})
    return out


def check_clopen_prop(X):
    out = []
    for name in _certified("clopen", X.n):
        if not dense_P(X, name):
            continue
        for u in X.opens:
            if not dense_P(subspace(X, u).space, name):
                out.append({"property": name, "open_subset": list(members(u))})
    return out


def check_p11(X):
    return _mismatch({
        "dense_pseudocompact": dense_P(X, "pseudocompact"),
        "open_subspaces": all(dense_P(subspace(X, u).space, "pseudocompact") for u in X.opens),
        "decider": is_dense_pseudocompact(X),
    })


def check_t4_finite(X):
    out = []
    comps = connected_components(X)
    parts = clopen_splitting_decomposition(X)
    if sorted(parts) != sorted(comps):
        out.append({"splitting": [list(members(p)) for p in parts],
                    "components": [list(members(c)) for c in comps]})
    k = len(comps)
    if max_real_range(X) != k:
        out.append({"max_real_range": max_real_range(X), "components": k})
    if comps:
        label = [0] * X.n
        for i, c in enumerate(comps):
            for x in bits(c):
                label[x] = i
        indicator = PointMap(X, discrete(k), tuple(label))
        if not map_profile(indicator).continuous:
            out.append({"indicator_not_continuous": label})
    if 0 < X.n <= 4:
        m = min(X.n, 3)
        best = max(len(set(f.table)) for f in enumerate_maps(X, discrete(m), {"continuous"}))
        if best != min(k, m):
            out.append({"codomain": m, "max_values": best, "expected": min(k, m)})
    if not is_dense_pseudocompact(X):
        out.append({"dense_pseudocompact": False})
    return out


def check_c0(X):
    if X.n >= 2 and _dc(X) and separation_profile(X).Hausdorff:
        return [{"hausdorff_dense_connected": True}]
    return []


def _coarser(sigma: FiniteSpace) -> list[FiniteSpace]:
    return [t for t in all_spaces(sigma.n, "labeled") if t.open_set <= sigma.open_set]


def check_p0(sigma):
    out = []
    if not _dc(sigma):
        return out
    for tau in _coarser(sigma):
        if not _dc(tau) or not is_dense_connected_fast(tau):
            out.append({"coarser": tau.to_json()})
    return out


def check_l3(sigma):
    out = []
    if not PROPERTIES["path_connected"](sigma):
        return out
    for tau in _coarser(sigma):
        if not PROPERTIES["path_connected"](tau):
            out.append({"coarser": tau.to_json()})
    return out


def check_p1(X, Y):
    if not _dc(X) or _dc(Y):
        return []
    return [{"map": list(f.table)} for f in enumerate_maps(X, Y, {"continuous", "surjective"})]


def check_p3(X, Y):
    if not _ldc(X) or _ldc(Y):
        return []
    return [{"map": list(f.table)} for f in enumerate_maps(X, Y, {"continuous", "open", "surjective"})]


@lru_cache(maxsize=1 << 16)
def _stable_profile(X: FiniteSpace) -> tuple[bool, ...]:
    return tuple(dense_P(X, name) for name in SURJECTION_STABLE)


def check_almost_open(X, Y):
    px, py = _stable_profile(X), _stable_profile(Y)
    bad = [name for name, a, b in zip(SURJECTION_STABLE, px, py) if a and not b]
    if not bad:
        return []
    out = []
    for f in enumerate_maps(X, Y, {"continuous", "almost_open", "surjective"}):
        out.extend({"property": name, "map": list(f.table)} for name in bad)
    return out


def check_p2(X, Y):
    Z = product(X, Y)
    values = {"product_fast": is_dense_connected_fast(Z),
              "factors": _dc(X) and _dc(Y)}
    if Z.n <= 6:
        values["product_brute"] = _dc(Z)
    return _mismatch(values)


def check_product_local(X, Y):
    Z = product(X, Y)
    values = {"product_fast": is_locally_dense_connected_fast(Z),
              "factors": _ldc(X) and _ldc(Y)}
    if Z.n <= 6:
        values["product_literal"] = _ldc(Z)
    return _mismatch(values)


@lru_cache(maxsize=4096)
def _dc_sets(X: FiniteSpace) -> frozenset[int]:
    return frozenset(dense_connected_subsets(X))


def check_union_prop(X):
    dcs = _dc_sets(X)
    fam = sorted(s for s in dcs if s)
    opens = [u for u in X.opens if u]
    arity = (2, 3) if X.n <= 4 else (2,)
    out = []
    for r in arity:
        for combo in itertools.combinations(fam, r):
            union = 0
            for a in combo:
                union |= a
            if union in dcs:
                continue
            if all(u & union == 0 or all(u & a for a in combo) for u in opens):
                out.append({"family": [list(members(a)) for a in combo]})
    return out


def check_p4(X):
    dcs = _dc_sets(X)
    fam = [u for u in X.opens if u and u in dcs]
    out = []
    for r in (2, 3):
        for combo in itertools.combinations(fam, r):
            if all(a & b for a, b in itertools.combinations(combo, 2)):
                union = 0
                for a in combo:
                    union |= a
                if union not in dcs:
                    out.append({"family": [list(members(a)) for a in combo]})
    return out


def check_p5(Y):
    dcs = _dc_sets(Y)
    out = []
    for x in sorted(dcs):
        free = closure(Y, x) & ~x
        sub = free
        while True:
            if x | sub not in dcs:
                out.append({"subspace": list(members(x)), "between": list(members(x | sub))})
            if sub == 0:
                break
            sub = (sub - 1) & free
    return out


def check_p9_open(X):
    if not _dc(X):
        return []
    return [{"open_subset": list(members(u))} for u in X.opens
            if not dense_P(subspace(X, u).space, "connected")]


def check_p6(X):
    out = []
    if not _ldc(X):
        try:
            dense_connected_component(X, 0)
        except NotLocallyDC:
            return out
        return [{"expected": "NotLocallyDC"}] if X.n else out
    dcs = _dc_sets(X)
    for x in range(X.n):
        comp = dense_connected_component(X, x)
        if not (X.is_open(comp) and X.is_closed(comp)):
            out.append({"point": x, "component": list(members(comp)), "clopen": False})
        maxi = maximal_dense_connected_subsets(X, x, dc_sets=dcs)
        if maxi != [comp]:
            out.append({"point": x, "component": list(members(comp)),
                        "maximal": [list(members(m)) for m in maxi]})
    return out


def check_p7(X):
    if not _ldc(X):
        return []
    comps = [dense_connected_component(X, x) for x in range(X.n)]
    out = []
    for x, y in itertools.combinations(range(X.n), 2):
        a, b = comps[x], comps[y]
        if a != b and a & b:
            out.append({"points": [x, y]})
    union = 0
    for a in comps:
        union |= a
    if union != X.full:
        out.append({"uncovered": list(members(X.full & ~union))})
    return out


def check_p10(X):
    dcs = _dc_sets(X)
    rhs = True
    for w in X.opens:
        for x in bits(w):
            # within an open W, sets open in W are exactly the opens of X inside W
            if any(not X.is_open(m) for m in maximal_dense_connected_subsets(X, x, w, dcs)):
                rhs = False
                break
        if not rhs:
            break
    return _mismatch({"locally_dense_connected": _ldc(X), "components_open": rhs})


def _sum_matches(X: FiniteSpace, parts: list[int]) -> bool:
    spaces = [subspace(X, p) for p in parts]
    S = topological_sum([sp.space for sp in spaces])
    order = [p for sp in spaces for p in sp.points]
    relabeled = set()
    for u in S.opens:
        relabeled.add(sum(1 << order[i] for i in bits(u)))
    return relabeled == X.open_set


def check_t233(X):
    comps = connected_components(X)
    ldc = _ldc(X)
    values = {
        "locally_dense_connected": ldc,
        "sum_of_dense_connected": all(_dc(subspace(X, c).space) for c in comps)
                                  and _sum_matches(X, comps),
    }
    out = _mismatch(values)
    if ldc:
        parts = dc_decomposition(X)
        if sorted(parts) != sorted(comps) or not _sum_matches(X, parts):
            out.append({"dc_decomposition": [list(members(p)) for p in parts]})
    else:
        try:
            dc_decomposition(X)
            out.append({"expected": "NotLocallyDC"})
        except NotLocallyDC:
            pass
    return out


def check_t5555(X):
    if not has_non_separated_points(X):
        return []
    values = {"dense_path_connected": dense_P(X, "path_connected"),
              "fast": is_dense_pathwise_fast(X)}
    return [] if all(values.values()) else [values]


def check_l2(X):
    if not has_non_separated_points(X):
        return []
    s = hereditary_witness(X, "non_separated_points")
    return [] if s is None else [{"subset": list(members(s))}]


THEOREMS: dict[str, Theorem] = {t.id: t for t in (
    Theorem("t1", "dense-connected, closure criterion, hyperconnected and dense-hyperconnected coincide",
            _single, _single_desc, check_t1),
    Theorem("t22", "dense-ultraconnected iff subspace criterion iff specialization comparability",
            _single, _single_desc, check_t22),
    Theorem("t44", "for closed-hereditary P, dense-P implies hereditarily P",
            _single, _single_desc, check_t44,
            ("closed heredity certified by heredity_class over spaces of the same size",)),
    Theorem("p566", "dense subspaces of a dense-P space are dense-P", _single, _single_desc, check_p566),
    Theorem("clopen-prop", "for clopen-hereditary P, open subspaces of a dense-P space are dense-P",
            _single, _single_desc, check_clopen_prop,
            ("clopen heredity certified by heredity_class over spaces of the same size",)),
    Theorem("almost-open-prop", "continuous almost-open surjections carry dense-P forward for P stable under continuous surjections",
            _pairs_upto, _pairs_desc, check_almost_open,
            ("P ranges over " + ", ".join(SURJECTION_STABLE),)),
    Theorem("p11", "dense-pseudocompact iff every open subspace is dense-pseudocompact",
            _single, _single_desc, check_p11),
    Theorem("t4-finite", "clopen splitting yields the components; real range equals component count",
            _single, _single_desc, check_t4_finite),
    Theorem("c0", "dense-connected spaces with two or more points are not Hausdorff",
            _single, _single_desc, check_c0),
    Theorem("p0", "coarser topologies of dense-connected topologies are dense-connected",
            _single, _single_desc, check_p0, ("each space is compared with every coarser labeled topology",)),
    Theorem("p1", "continuous surjective images of dense-connected spaces are dense-connected",
            _pairs_upto, _pairs_desc, check_p1),
    Theorem("p2", "a product is dense-connected iff both factors are",
            _factor_pairs, _factor_desc, check_p2, ("finite-instance check (binary products)",)),
    Theorem("union-prop", "unions of dense-connected subspaces meeting each open set together are dense-connected",
            _single, _single_desc, check_union_prop,
            ("finite-instance check (binary families; ternary up to 4 points)",)),
    Theorem("p4", "pairwise meeting open dense-connected subspaces have dense-connected union",
            _single, _single_desc, check_p4, ("finite-instance check (binary and ternary families)",)),
    Theorem("p5", "sets between a dense-connected subspace and its closure are dense-connected",
            _single, _single_desc, check_p5, ("each enumerated space serves as the ambient space",)),
    Theorem("p9-open", "open subspaces of dense-connected spaces are dense-connected",
            _single, _single_desc, check_p9_open),
    Theorem("p6", "in locally dense-connected spaces each DC(x) is clopen and the unique maximal one",
            _single, _single_desc, check_p6),
    Theorem("p7", "DC components are equal or disjoint", _single, _single_desc, check_p7),
    Theorem("p10", "locally dense-connected iff DC components of open subspaces are open",
            _single, _single_desc, check_p10),
    Theorem("t233", "locally dense-connected iff a topological sum of dense-connected spaces",
            _single, _single_desc, check_t233),
    Theorem("p3", "continuous open surjections preserve local dense-connectedness",
            _pairs_upto, _pairs_desc, check_p3),
    Theorem("product-local", "a product is locally dense-connected iff both factors are",
            _factor_pairs, _factor_desc, check_product_local, ("finite-instance check (binary products)",)),
    Theorem("t5555", "non-separated-points spaces are dense-pathwise connected",
            _single, _single_desc, check_t5555),
    Theorem("l2", "subspaces of non-separated-points spaces are non-separated-points",
            _single, _single_desc, check_l2),
    Theorem("l3", "coarser topologies of path-connected topologies are path-connected",
            _single, _single_desc, check_l3),
)}

ALIASES = {"p6/p7": "p6", "p9": "p9-open", "t4": "t4-finite", "clopen": "clopen-prop",
           "almost-open": "almost-open-prop", "union": "union-prop", "ultra-corollary": "ultra"}


def theorem_ids() -> list[str]:
    return list(THEOREMS) + list(GROUP_THEOREMS)


def _resolve(theorem_id: str) -> str:
    tid = ALIASES.get(theorem_id, theorem_id)
    if tid not in THEOREMS and tid not in GROUP_THEOREMS:
        raise UnknownTheorem(theorem_id)
    return tid


def _encode(case: tuple) -> dict:
    return {"spaces": [X.to_json() for X in case]}


def _decode(data: dict) -> tuple:
    return tuple(space_from_json(s) for s in data["spaces"])


@lru_cache(maxsize=64)
def _cases(tid: str, n: int, mode: str) -> tuple:
    return tuple(THEOREMS[tid].universe(n, mode))


def _run_slice(tid: str, n: int, mode: str, start: int, stop: int) -> list[dict]:
    th = THEOREMS[tid]
    cases = _cases(tid, n, mode)
    failures = []
    for i in range(start, stop):
        for w in th.check(*cases[i]):
            failures.append({"case": i, "input": _encode(cases[i]), "witness": w})
    return failures


def verify_theorem(theorem_id: str, n: int, mode: str = "labeled", jobs: int = 1) -> TheoremReport:
    """Check one statement over the universe of size ``n``.

    Group statements (``t2``, ``t3``, ``c1``, ``ultra``, ``dsc``) read ``n``
    as the group order.
    """
    tid = _resolve(theorem_id)
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if tid in GROUP_THEOREMS:
        from .groups import verify_group_theorems
        return verify_group_theorems(n, tid)
    check_cap(n)
    th = THEOREMS[tid]
    t0 = time.perf_counter()
    cases = _cases(tid, n, mode)
    total = len(cases)
    if jobs > 1 and total > 1:
        step = -(-total // (jobs * 4))
        bounds = [(s, min(s + step, total)) for s in range(0, total, step)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = pool.map(_run_slice, *zip(*[(tid, n, mode, a, b) for a, b in bounds]))
            failures = [f for chunk in chunks for f in chunk]
    else:
        failures = _run_slice(tid, n, mode, 0, total)
    elapsed = int((time.perf_counter() - t0) * 1000)
    return TheoremReport(
        theorem=tid,
        n=n,
        mode=mode,
        universe=th.describe(n, mode),
        checked=total,
        failures=failures,
        elapsed_ms=elapsed,
        notes=list(th.notes),
    )


def replay_failure(theorem_id: str, record: dict) -> bool:
    """Re-check a failure record; True when it still fails."""
    tid = _resolve(theorem_id)
    if tid in GROUP_THEOREMS:
        from .groups import replay_group_failure
        return replay_group_failure(tid, record)
    return bool(THEOREMS[tid].check(*_decode(record["input"])))
