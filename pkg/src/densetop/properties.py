"""Property combinators (dense-P and friends), fast characterizations, DC components."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable

from .core import (
    FiniteSpace,
    as_mask,
    bits,
    closure,
    has_non_separated_points,
    is_connected,
    is_hyperconnected,
    is_ultraconnected,
    separation_profile,
    subspace,
)
from .enumeration import check_cap, dense_subsets, enumerate_topologies
from .errors import NotLocallyDC, OutOfCarrier


@dataclass(frozen=True)
class Property:
    name: str
    predicate: Callable[[FiniteSpace], bool] = field(compare=False)

    def __call__(self, X: FiniteSpace) -> bool:
        return self.predicate(X)


PROPERTIES: dict[str, Property] = {
    p.name: p
    for p in (
        Property("connected", is_connected),
        Property("hyperconnected", is_hyperconnected),
        Property("ultraconnected", is_ultraconnected),
        # finite spaces: path-connected coincides with connected
        Property("path_connected", is_connected),
        Property("T0", lambda X: separation_profile(X).T0),
        Property("T1", lambda X: separation_profile(X).T1),
        Property("Hausdorff", lambda X: separation_profile(X).Hausdorff),
        Property("pseudocompact", lambda X: True),
        Property("non_separated_points", has_non_separated_points),
    )
}


def get_property(P: Property | str) -> Property:
    if isinstance(P, Property):
        return P
    try:
        return PROPERTIES[P]
    except KeyError:
        raise KeyError(f"unknown property {P!r}; known: {sorted(PROPERTIES)}") from None


@lru_cache(maxsize=1 << 18)
def _holds(P: Property, X: FiniteSpace) -> bool:
    return P.predicate(X)


@lru_cache(maxsize=1 << 16)
def _dense_subspaces(X: FiniteSpace) -> tuple[tuple[int, FiniteSpace], ...]:
    return tuple((s, subspace(X, s).space) for s in dense_subsets(X))


# ---------------------------------------------------------------------------
# Combinators
# ---------------------------------------------------------------------------

def dense_P(X: FiniteSpace, P: Property | str) -> bool:
    """Every dense subset, as a subspace, has ``P``."""
    P = get_property(P)
    check_cap(X.n)
    return all(_holds(P, Y) for _, Y in _dense_subspaces(X))


def one_dense_P(X: FiniteSpace, P: Property | str) -> bool:
    P = get_property(P)
    check_cap(X.n)
    return any(_holds(P, Y) for _, Y in _dense_subspaces(X))


def proper_one_dense_P(X: FiniteSpace, P: Property | str) -> bool:
    P = get_property(P)
    check_cap(X.n)
    return any(_holds(P, Y) for s, Y in _dense_subspaces(X) if s != X.full)


def dense_witness(X: FiniteSpace, P: Property | str) -> int | None:
    """A dense subset failing ``P``, or None when ``X`` is dense-P."""
    P = get_property(P)
    check_cap(X.n)
    for s, Y in _dense_subspaces(X):
        if not _holds(P, Y):
            return s
    return None


def locally_dense_P(X: FiniteSpace, P: Property | str) -> bool:
    """For every ``x`` and open ``U`` containing it, some neighborhood ``V``
    of ``x`` inside ``U`` is dense-P.

    Neighborhoods are arbitrary sets containing an open set around ``x``;
    any such ``V`` contains the minimal open neighborhood, so ``V`` ranges
    over the sets sandwiched between it and ``U``.
    """
    P = get_property(P)
    check_cap(X.n)
    memo: dict[int, bool] = {}

    def good(v: int) -> bool:
        if v not in memo:
            memo[v] = dense_P(subspace(X, v).space, P)
        return memo[v]

    for x in range(X.n):
        core = X.nbhd[x]
        for u in X.opens:
            if not u >> x & 1:
                continue
            free = u & ~core
            sub = free
            while True:
                if good(core | sub):
                    break
                if sub == 0:
                    return False
                sub = (sub - 1) & free
    return True


def hereditarily_P(X: FiniteSpace, P: Property | str) -> bool:
    return hereditary_witness(X, P) is None


def hereditary_witness(X: FiniteSpace, P: Property | str) -> int | None:
    P = get_property(P)
    check_cap(X.n)
    for s in range(1 << X.n):
        if not _holds(P, subspace(X, s).space):
            return s
    return None


@dataclass
class HeredityClass:
    """Empirical heredity of a property over every space up to a size."""

    property: str
    n: int
    closed_hereditary: bool
    clopen_hereditary: bool
    open_hereditary: bool
    witnesses: dict[str, dict] = field(default_factory=dict)


_SUBSET_KINDS = ("closed", "clopen", "open")


@lru_cache(maxsize=None)
def heredity_class(P: Property | str, n: int, mode: str = "classes") -> HeredityClass:
    """Does ``P`` pass from a space to its closed / clopen / open subspaces?

    Sweeps every space with at most ``n`` points.  Properties are invariant
    under homeomorphism, so one space per class suffices by default.
    """
    P = get_property(P)
    check_cap(n)
    found: dict[str, dict] = {}
    for k in range(n + 1):
        for X in enumerate_topologies(k, mode):
            if not _holds(P, X):
                continue
            for s in range(1 << k):
                kinds = []
                if X.is_closed(s):
                    kinds.append("closed")
                    if X.is_open(s):
                        kinds.append("clopen")
                if X.is_open(s):
                    kinds.append("open")
                pending = [kd for kd in kinds if kd not in found]
                if pending and not _holds(P, subspace(X, s).space):
                    for kd in pending:
                        found[kd] = {"space": X.to_json(), "subset": list(bits(s))}
            if len(found) == len(_SUBSET_KINDS):
                break
    return HeredityClass(
        property=P.name,
        n=n,
        closed_hereditary="closed" not in found,
        clopen_hereditary="clopen" not in found,
        open_hereditary="open" not in found,
        witnesses=found,
    )


# ---------------------------------------------------------------------------
# Fast characterizations
# ---------------------------------------------------------------------------

def is_dense_connected_fast(X: FiniteSpace) -> bool:
    """No two disjoint nonempty open sets.

    Every nonempty open set contains some minimal neighborhood, so pairwise
    meeting of those decides it.
    """
    nb = X.nbhd
    return all(nb[x] & nb[y] for x in range(X.n) for y in range(x))


def closure_criterion(X: FiniteSpace) -> bool:
    """Every nonempty open set has the whole space as closure."""
    return all(closure(X, u) == X.full for u in X.opens if u)


def is_dense_ultraconnected_fast(X: FiniteSpace) -> bool:
    """Every two points are comparable in the specialization preorder."""
    nb = X.nbhd
    return all(nb[x] >> y & 1 or nb[y] >> x & 1 for x in range(X.n) for y in range(x))


def ultra_subspace_criterion(X: FiniteSpace) -> bool:
    """For each ``x``: either ``cl{x}`` is everything, or inside
    ``Y = {x} + (X - cl{x})`` the only open set around ``x`` is ``Y`` itself."""
    for x in range(X.n):
        cl = closure(X, 1 << x)
        if cl == X.full:
            continue
        y_mask = (1 << x) | (X.full & ~cl)
        Y, points = subspace(X, y_mask)
        if Y.nbhd[points.index(x)] != Y.full:
            return False
    return True


@dataclass(frozen=True)
class DensePathwiseProfile:
    dense_pathwise_connected: bool
    non_separated_points: bool  # sufficient condition; implies the verdict


def is_dense_pathwise_fast(X: FiniteSpace) -> bool:
    # finite path-connected coincides with connected, so dense-pathwise is dense-connected
    return is_dense_connected_fast(X)


def dense_pathwise_profile(X: FiniteSpace) -> DensePathwiseProfile:
    return DensePathwiseProfile(is_dense_pathwise_fast(X), has_non_separated_points(X))


def is_dense_pseudocompact(X: FiniteSpace) -> bool:
    """Finite spaces are pseudocompact, and so is every subspace of one."""
    return True


def is_locally_dense_connected_fast(X: FiniteSpace) -> bool:
    """Each minimal neighborhood is hyperconnected as a subspace.

    Inside ``U_x`` the minimal neighborhood of ``y`` is ``U_y`` itself.
    """
    nb = X.nbhd
    for x in range(X.n):
        pts = list(bits(nb[x]))
        if any(nb[a] & nb[b] == 0 for i, a in enumerate(pts) for b in pts[:i]):
            return False
    return True


# ---------------------------------------------------------------------------
# Dense-connected components
# ---------------------------------------------------------------------------

def _is_dc_subset(X: FiniteSpace, s: int) -> bool:
    return is_dense_connected_fast(subspace(X, s).space)


def dense_connected_component(X: FiniteSpace, x: int) -> int:
    """Union of the open dense-connected sets containing ``x``."""
    if not isinstance(x, int) or not 0 <= x < X.n:
        raise OutOfCarrier(f"point {x!r} is not in the carrier")
    if not is_locally_dense_connected_fast(X):
        raise NotLocallyDC("DC components need a locally dense-connected space")
    w = 0
    for u in X.opens:
        if u >> x & 1 and _is_dc_subset(X, u):
            w |= u
    return w


def dc_decomposition(X: FiniteSpace) -> list[int]:
    """Partition into DC components, ordered by least point."""
    if not is_locally_dense_connected_fast(X):
        raise NotLocallyDC("DC components need a locally dense-connected space")
    parts = []
    covered = 0
    for x in range(X.n):
        if covered >> x & 1:
            continue
        part = dense_connected_component(X, x)
        parts.append(part)
        covered |= part
    return parts


def dense_connected_subsets(X: FiniteSpace) -> list[int]:
    """Every subset whose subspace is dense-connected, by the brute-force combinator."""
    check_cap(X.n)
    return [s for s in range(1 << X.n) if dense_P(subspace(X, s).space, "connected")]


def maximal_dense_connected_subsets(X: FiniteSpace, x: int, within: int | None = None,
                                    dc_sets: Iterable[int] | None = None) -> list[int]:
    """Inclusion-maximal dense-connected subsets containing ``x`` (inside ``within``)."""
    within = X.full if within is None else as_mask(within, X.n)
    pool = dense_connected_subsets(X) if dc_sets is None else dc_sets
    cands = [s for s in pool if s >> x & 1 and s & ~within == 0]
    return [s for s in cands if not any(t != s and s & ~t == 0 for t in cands)]


def incomparable_pair(X: FiniteSpace) -> tuple[int, int] | None:
    """First pair ``x < y`` with neither point in the closure of the other."""
    nb = X.nbhd
    for y in range(X.n):
        for x in range(y):
            if not (nb[x] >> y & 1 or nb[y] >> x & 1):
                return (x, y)
    return None
