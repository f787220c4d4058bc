"""Exhaustive universes: topologies, dense subsets and maps at desk scale.

Topologies are produced through the finite topology / preorder bijection:
a preorder on ``n`` points is grown one point at a time, and its up-sets
are the open sets.
"""
from __future__ import annotations

import itertools
import os
from functools import lru_cache
from typing import Iterable, Iterator

from .core import FiniteSpace, PointMap, Preorder, bits, full_mask, map_profile, upsets
from .errors import CapExceeded

HARD_MAX_N = 6
MAP_CAP = 10**6
MODES = ("labeled", "classes")
MAP_FILTERS = ("continuous", "surjective", "open", "almost_open")


def default_max_n() -> int:
    """The default size cap: ``DENSETOP_MAX_N`` if set, never above the hard cap."""
    raw = os.environ.get("DENSETOP_MAX_N")
    if raw is None:
        return HARD_MAX_N
    return max(0, min(int(raw), HARD_MAX_N))


def check_cap(n: int, cap: int | None = None) -> None:
    limit = default_max_n() if cap is None else min(cap, HARD_MAX_N)
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > limit:
        raise CapExceeded(f"n={n} exceeds the cap {limit}")


# ---------------------------------------------------------------------------
# Preorders
# ---------------------------------------------------------------------------

def _extend(rows: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All preorders on ``k + 1`` points restricting to ``rows`` on the first ``k``."""
    k = len(rows)
    full = full_mask(k)
    opens = upsets(k, rows)
    new = 1 << k
    for closed in (full ^ u for u in opens):
        # the new point sits above `closed` and below some up-set inside `bound`
        bound = full
        for d in bits(closed):
            bound &= rows[d]
        lifted = tuple(r | new if closed >> x & 1 else r for x, r in enumerate(rows))
        for u in opens:
            if u & ~bound == 0:
                yield lifted + (u | new,)


def _matrix_key(rows: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    n = len(rows)
    return tuple(tuple(r >> y & 1 for y in range(n)) for r in rows)


@lru_cache(maxsize=None)
def preorder_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """Row masks of every preorder on ``n`` points, in lexicographic matrix order."""
    check_cap(n, HARD_MAX_N)
    if n == 0:
        return ((),)
    out = [r for rows in preorder_rows(n - 1) for r in _extend(rows)]
    out.sort(key=_matrix_key)
    return tuple(out)


def enumerate_preorders(n: int, cap: int | None = None) -> Iterator[Preorder]:
    check_cap(n, cap)
    for rows in preorder_rows(n):
        yield Preorder(n, rows)


def topology_from_preorder(P: Preorder) -> FiniteSpace:
    """Opens are the up-sets of ``P``."""
    return FiniteSpace(P.n, upsets(P.n, P.up))


# ---------------------------------------------------------------------------
# Relabelings and classes
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _perm_tables(n: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """Each permutation of ``n`` points paired with its mask-relabeling table."""
    out = []
    for perm in itertools.permutations(range(n)):
        table = []
        for mask in range(1 << n):
            img = 0
            for x in bits(mask):
                img |= 1 << perm[x]
            table.append(img)
        out.append((perm, tuple(table)))
    return tuple(out)


def _relabel_rows(rows, perm, table) -> tuple[int, ...]:
    out = [0] * len(rows)
    for x, r in enumerate(rows):
        out[perm[x]] = table[r]
    return tuple(out)


def canonical_form(X: FiniteSpace, cap: int | None = None) -> tuple:
    """A key shared exactly by homeomorphic spaces.

    The minimum, over all relabelings of the carrier, of the specialization
    rows; the rows determine the opens, so equal keys mean homeomorphic.
    """
    check_cap(X.n, cap)
    rows = X.nbhd
    best = min(_matrix_key(_relabel_rows(rows, p, t)) for p, t in _perm_tables(X.n))
    return (X.n, best)


@lru_cache(maxsize=None)
def class_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """First preorder of each isomorphism class, in labeled stream order."""
    seen: set[tuple[int, ...]] = set()
    reps = []
    perms = _perm_tables(n)
    for rows in preorder_rows(n):
        if rows in seen:
            continue
        reps.append(rows)
        for p, t in perms:
            seen.add(_relabel_rows(rows, p, t))
    return tuple(reps)


class TopologyStream:
    """Every topology on ``{0..n-1}`` once (``labeled``) or one per homeomorphism class (``classes``)."""

    def __init__(self, n: int, mode: str = "labeled", cap: int | None = None):
        if mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
        check_cap(n, cap)
        self.n = n
        self.mode = mode

    def _rows(self):
        return preorder_rows(self.n) if self.mode == "labeled" else class_rows(self.n)

    def __iter__(self) -> Iterator[FiniteSpace]:
        n = self.n
        for rows in self._rows():
            yield FiniteSpace(n, upsets(n, rows))

    def __len__(self) -> int:
        return len(self._rows())


def enumerate_topologies(n: int, mode: str = "labeled", cap: int | None = None) -> TopologyStream:
    return TopologyStream(n, mode, cap)


@lru_cache(maxsize=16)
def all_spaces(n: int, mode: str = "labeled") -> tuple[FiniteSpace, ...]:
    """Materialised :func:`enumerate_topologies`, cached for repeated sweeps."""
    return tuple(enumerate_topologies(n, mode))


# ---------------------------------------------------------------------------
# Dense subsets and maps
# ---------------------------------------------------------------------------

def dense_subsets(X: FiniteSpace, cap: int | None = None) -> Iterator[int]:
    """Masks meeting every minimal open neighborhood, in increasing order."""
    check_cap(X.n, cap)
    nb = X.nbhd
    for s in range(1 << X.n):
        if all(u & s for u in nb):
            yield s


def enumerate_maps(X: FiniteSpace, Y: FiniteSpace, filter: Iterable[str] = (),
                   cap: int = MAP_CAP) -> Iterator[PointMap]:
    wanted = set(filter)
    unknown = wanted - set(MAP_FILTERS)
    if unknown:
        raise ValueError(f"unknown map filters {sorted(unknown)}")
    total = Y.n ** X.n
    if total > cap:
        raise CapExceeded(f"{total} candidate maps exceeds the cap {cap}")
    want_cont = "continuous" in wanted
    want_surj = "surjective" in wanted
    rest = wanted - {"continuous", "surjective"}
    xs, ys = X.nbhd, Y.nbhd
    dom_nb = [tuple(bits(u)) for u in xs]
    for table in itertools.product(range(Y.n), repeat=X.n):
        if want_surj and len(set(table)) != Y.n:
            continue
        # continuity of a map between finite spaces: f(U_x) lies inside U_f(x)
        if want_cont and not all(ys[table[x]] >> table[z] & 1 for x in range(X.n) for z in dom_nb[x]):
            continue
        f = PointMap(X, Y, table)
        if rest:
            prof = map_profile(f)
            if not all(getattr(prof, name) for name in rest):
                continue
        yield f
