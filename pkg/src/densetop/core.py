"""Finite topological spaces, point sets and maps.

Point sets are bitmasks: bit ``i`` set means point ``i`` is a member.  Every
public function that takes a point set also accepts an iterable of point
indices and coerces it.  Results are always masks; use :func:`members` to
turn one back into a sorted tuple.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import CapExceeded, NotAPreorder, NotATopology, OutOfCarrier

PRODUCT_CAP = 16


# ---------------------------------------------------------------------------
# Point sets
# ---------------------------------------------------------------------------

def bits(mask: int) -> Iterator[int]:
    """Yield the members of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


def full_mask(n: int) -> int:
    return (1 << n) - 1


def as_mask(points, n: int) -> int:
    """Coerce a mask or an iterable of points to a mask inside ``{0..n-1}``."""
    if isinstance(points, int):
        if points < 0 or points >> n:
            raise OutOfCarrier(f"mask {points:#b} leaves the carrier of size {n}")
        return points
    mask = 0
    for p in points:
        if not isinstance(p, int) or not 0 <= p < n:
            raise OutOfCarrier(f"point {p!r} is not in {{0..{n - 1}}}")
        mask |= 1 << p
    return mask


def _point(x: int, n: int) -> int:
    if not isinstance(x, int) or not 0 <= x < n:
        raise OutOfCarrier(f"point {x!r} is not in {{0..{n - 1}}}")
    return x


def _compress(mask: int, points: Sequence[int]) -> int:
    out = 0
    for i, p in enumerate(points):
        if mask >> p & 1:
            out |= 1 << i
    return out


def upsets(n: int, up: Sequence[int]) -> tuple[int, ...]:
    """All unions of the sets ``up[0..n-1]`` (the Alexandrov opens), sorted."""
    family = {0}
    for x in range(n):
        u = up[x]
        family |= {a | u for a in family}
    return tuple(sorted(family))


# ---------------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FiniteSpace:
    """A topology on ``{0..n-1}`` stored as its sorted tuple of open masks.

    Construct through :func:`validate_topology` for untrusted input; the
    constructor itself does not re-check the axioms.
    """

    n: int
    opens: tuple[int, ...]

    @cached_property
    def full(self) -> int:
        return full_mask(self.n)

    @cached_property
    def open_set(self) -> frozenset[int]:
        return frozenset(self.opens)

    @cached_property
    def nbhd(self) -> tuple[int, ...]:
        """Minimal open neighborhood of each point."""
        out = []
        for x in range(self.n):
            acc = self.full
            for u in self.opens:
                if u >> x & 1:
                    acc &= u
            out.append(acc)
        return tuple(out)

    @cached_property
    def down(self) -> tuple[int, ...]:
        """``down[y]`` is the closure of ``{y}``."""
        out = [0] * self.n
        for x, u in enumerate(self.nbhd):
            for y in bits(u):
                out[y] |= 1 << x
        return tuple(out)

    def is_open(self, s: int) -> bool:
        return s in self.open_set

    def is_closed(self, s: int) -> bool:
        return (self.full ^ s) in self.open_set

    def to_json(self) -> dict:
        return {"n": self.n, "opens": [list(members(u)) for u in _display_order(self.opens)]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    def __repr__(self) -> str:
        return f"FiniteSpace(n={self.n}, opens={[list(members(u)) for u in _display_order(self.opens)]})"


def _display_order(opens: Iterable[int]) -> list[int]:
    return sorted(opens, key=lambda u: (u.bit_count(), members(u)))


@dataclass(frozen=True)
class Preorder:
    """Reflexive transitive relation; ``up[x]`` is the mask of all ``y`` with ``x <= y``."""

    n: int
    up: tuple[int, ...]

    def __post_init__(self):
        if len(self.up) != self.n:
            raise NotAPreorder(f"expected {self.n} rows, got {len(self.up)}")
        full = full_mask(self.n)
        for x, row in enumerate(self.up):
            if row & ~full:
                raise NotAPreorder(f"row {x} leaves the carrier")
            if not row >> x & 1:
                raise NotAPreorder(f"not reflexive at {x}")
            for y in bits(row):
                if self.up[y] & ~row:
                    z = next(bits(self.up[y] & ~row))
                    raise NotAPreorder(f"not transitive: {x}<={y}<={z} but not {x}<={z}")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Preorder":
        """Build from explicit ``(x, y)`` pairs meaning ``x <= y``; the diagonal is implied."""
        up = [1 << x for x in range(n)]
        for x, y in pairs:
            up[_point(x, n)] |= 1 << _point(y, n)
        return cls(n, tuple(up))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[bool]]) -> "Preorder":
        n = len(matrix)
        return cls(n, tuple(sum(1 << y for y in range(n) if matrix[x][y]) for x in range(n)))

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def matrix(self) -> list[list[bool]]:
        return [[self.leq(x, y) for y in range(self.n)] for x in range(self.n)]

    def pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.n) for y in bits(self.up[x])]

    def is_total(self) -> bool:
        return all(self.leq(x, y) or self.leq(y, x) for x in range(self.n) for y in range(x))


@dataclass(frozen=True)
class PointMap:
    domain: FiniteSpace
    codomain: FiniteSpace
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != self.domain.n:
            raise ValueError(f"table has {len(self.table)} entries for {self.domain.n} points")
        for p in self.table:
            _point(p, self.codomain.n)

    def image(self, s: int) -> int:
        out = 0
        for x in bits(s):
            out |= 1 << self.table[x]
        return out

    def preimage(self, t: int) -> int:
        out = 0
        for x, y in enumerate(self.table):
            if t >> y & 1:
                out |= 1 << x
        return out


class Subspace(NamedTuple):
    space: FiniteSpace
    points: tuple[int, ...]  # points[i] is the original index of new point i


@dataclass(frozen=True)
class SeparationProfile:
    T0: bool
    T1: bool
    Hausdorff: bool


@dataclass(frozen=True)
class ConnectivityProfile:
    connected: bool
    hyperconnected: bool
    ultraconnected: bool
    path_connected: bool
    non_separated_points: bool


@dataclass(frozen=True)
class MapProfile:
    continuous: bool
    open: bool
    almost_open: bool
    surjective: bool


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def validate_topology(n: int, family: Iterable) -> FiniteSpace:
    """Check the open-set axioms and return the deduplicated space.

    Raises :class:`NotATopology` naming the first violated axiom; escape
    witnesses are the first offending pair in increasing mask order.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    opens = sorted({as_mask(u, n) for u in family})
    present = set(opens)
    if 0 not in present:
        raise NotATopology("missing-empty")
    if full_mask(n) not in present:
        raise NotATopology("missing-full")
    for i, u in enumerate(opens):
        for v in opens[i + 1:]:
            if u | v not in present:
                raise NotATopology("union-escape", (members(u), members(v)))
            if u & v not in present:
                raise NotATopology("intersection-escape", (members(u), members(v)))
    return FiniteSpace(n, tuple(opens))


def space_from_json(obj: dict | str) -> FiniteSpace:
    if isinstance(obj, str):
        obj = json.loads(obj)
    n = obj["n"]
    for u in obj["opens"]:
        if list(u) != sorted(set(u)):
            raise ValueError(f"open set {u} is not a strictly increasing list")
    return validate_topology(n, obj["opens"])


def space_from_nbhds(n: int, nbhd: Sequence[int]) -> FiniteSpace:
    """The Alexandrov space whose minimal neighborhoods are ``nbhd``."""
    return FiniteSpace(n, upsets(n, nbhd))


def discrete(n: int) -> FiniteSpace:
    return space_from_nbhds(n, [1 << x for x in range(n)])


def indiscrete(n: int) -> FiniteSpace:
    return FiniteSpace(n, tuple(sorted({0, full_mask(n)})))


def sierpinski() -> FiniteSpace:
    return FiniteSpace(2, (0b00, 0b10, 0b11))


# ---------------------------------------------------------------------------
# Single-space primitives
# ---------------------------------------------------------------------------

def closure(X: FiniteSpace, S) -> int:
    s = as_mask(S, X.n)
    out = 0
    for x, u in enumerate(X.nbhd):
        if u & s:
            out |= 1 << x
    return out


def interior(X: FiniteSpace, S) -> int:
    s = as_mask(S, X.n)
    out = 0
    for u in X.opens:
        if u & ~s == 0:
            out |= u
    return out


def is_dense(X: FiniteSpace, S) -> bool:
    s = as_mask(S, X.n)
    return all(u & s for u in X.nbhd)


def minimal_open_neighborhood(X: FiniteSpace, x: int) -> int:
    return X.nbhd[_point(x, X.n)]


def specialization_preorder(X: FiniteSpace) -> Preorder:
    """``x <= y`` iff ``x`` lies in the closure of ``{y}``."""
    return Preorder(X.n, X.nbhd)


def subspace(X: FiniteSpace, S) -> Subspace:
    s = as_mask(S, X.n)
    points = members(s)
    opens = sorted({_compress(u & s, points) for u in X.opens})
    return Subspace(FiniteSpace(len(points), tuple(opens)), points)


def product(X: FiniteSpace, Y: FiniteSpace, cap: int = PRODUCT_CAP) -> FiniteSpace:
    """Product space; the pair ``(x, y)`` becomes point ``x * Y.n + y``.

    Finite spaces are Alexandrov, so the box ``U_x x U_y`` is the minimal
    neighborhood of ``(x, y)`` and the box topology is generated from those
    boxes alone.
    """
    m = X.n * Y.n
    if m > cap:
        raise CapExceeded(f"product has {m} points, cap is {cap}")
    nbhd = []
    for x in range(X.n):
        for y in range(Y.n):
            box = 0
            for a in bits(X.nbhd[x]):
                box |= Y.nbhd[y] << (a * Y.n)
            nbhd.append(box)
    return space_from_nbhds(m, nbhd)


def topological_sum(parts: Sequence[FiniteSpace]) -> FiniteSpace:
    nbhd: list[int] = []
    offset = 0
    for part in parts:
        nbhd.extend(u << offset for u in part.nbhd)
        offset += part.n
    return space_from_nbhds(offset, nbhd)


def connected_components(X: FiniteSpace) -> list[int]:
    """Components as masks, ordered by least point."""
    adj = [X.nbhd[x] | X.down[x] for x in range(X.n)]
    seen = 0
    out = []
    for x in range(X.n):
        if seen >> x & 1:
            continue
        comp = frontier = 1 << x
        while frontier:
            nxt = 0
            for y in bits(frontier):
                nxt |= adj[y]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        out.append(comp)
    return out


def separation_profile(X: FiniteSpace) -> SeparationProfile:
    nb = X.nbhd
    t0 = all(not (nb[x] >> y & 1 and nb[y] >> x & 1) for x in range(X.n) for y in range(x))
    t1 = all(closure(X, 1 << x) == 1 << x for x in range(X.n))
    t2 = all(nb[x] & nb[y] == 0 for x in range(X.n) for y in range(x))
    return SeparationProfile(T0=t0, T1=t1, Hausdorff=t2)


def is_connected(X: FiniteSpace) -> bool:
    full = X.full
    return not any(0 < u < full and (full ^ u) in X.open_set for u in X.opens)


def is_hyperconnected(X: FiniteSpace) -> bool:
    ne = [u for u in X.opens if u]
    return not any(u & v == 0 for i, u in enumerate(ne) for v in ne[i + 1:])


def is_ultraconnected(X: FiniteSpace) -> bool:
    full = X.full
    closed = [full ^ u for u in X.opens if u != full]
    return not any(c & d == 0 for i, c in enumerate(closed) for d in closed[i + 1:])


def has_non_separated_points(X: FiniteSpace) -> bool:
    """Every pair ``x != y`` has some ``z`` in ``{x, y}`` whose every open neighborhood holds both."""
    for x in range(X.n):
        for y in range(x):
            pair = 1 << x | 1 << y
            if not any(all(u & pair == pair for u in X.opens if u >> z & 1) for z in (x, y)):
                return False
    return True


def classify_connectivity(X: FiniteSpace) -> ConnectivityProfile:
    connected = is_connected(X)
    return ConnectivityProfile(
        connected=connected,
        hyperconnected=is_hyperconnected(X),
        ultraconnected=is_ultraconnected(X),
        path_connected=connected,
        non_separated_points=has_non_separated_points(X),
    )


def map_profile(f: PointMap) -> MapProfile:
    dom, cod = f.domain, f.codomain
    continuous = all(f.preimage(v) in dom.open_set for v in cod.opens)
    images = [f.image(u) for u in dom.opens if u]
    return MapProfile(
        continuous=continuous,
        open=all(w in cod.open_set for w in images),
        almost_open=all(interior(cod, w) for w in images),
        surjective=len(set(f.table)) == cod.n,
    )


def max_real_range(X: FiniteSpace) -> int:
    """Largest size of ``f(X)`` over continuous real-valued ``f``.

    Continuous maps into the reals are constant on components, and indicator
    combinations of components realise one value per component.
    """
    return len(connected_components(X))


def clopen_splitting_decomposition(X: FiniteSpace) -> list[int]:
    """Split off a minimal proper clopen piece repeatedly until the rest is connected.

    The remaining piece plays the role of ``U_i`` and each split-off piece
    the role of ``V_i``; parts are returned in the order they were split.
    """
    parts = []
    rest = X.full
    while rest:
        # sets clopen in the subspace `rest` are the clopen sets of X inside it, since rest is clopen
        splits = [u for u in X.opens
                  if 0 < u < rest and u & ~rest == 0 and X.is_open(rest ^ u)]
        if not splits:
            parts.append(rest)
            break
        piece = min(splits, key=lambda u: (u.bit_count(), u))
        parts.append(piece)
        rest ^= piece
    return parts
