"""Finite groups carrying a topology on the same carrier."""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .core import FiniteSpace, PointMap, bits, full_mask, is_dense, map_profile, members, product, space_from_json, subspace, upsets
from .enumeration import check_cap, preorder_rows
from .errors import NotAGroup, UnknownTheorem
from .properties import get_property
from .report import TheoremReport

FINITE_SCALE_BANNER = "finite-scale evidence only"


@dataclass(frozen=True)
class GroupTable:
    order: int
    mul: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    identity: int

    def __post_init__(self):
        n = self.order
        if n < 1:
            raise NotAGroup("a group needs at least one element")
        if len(self.mul) != n or any(len(row) != n for row in self.mul):
            raise NotAGroup(f"multiplication table must be {n}x{n}")
        if any(not 0 <= v < n for row in self.mul for v in row):
            raise NotAGroup("table entries outside the carrier")
        m, e = self.mul, self.identity
        if not 0 <= e < n or any(m[e][x] != x or m[x][e] != x for x in range(n)):
            raise NotAGroup("identity law fails")
        if len(self.inv) != n or any(m[x][self.inv[x]] != e or m[self.inv[x]][x] != e for x in range(n)):
            raise NotAGroup("inverse law fails")
        for a, b, c in itertools.product(range(n), repeat=3):
            if m[m[a][b]][c] != m[a][m[b][c]]:
                raise NotAGroup(f"associativity fails at ({a}, {b}, {c})")

    @classmethod
    def from_mul(cls, mul) -> "GroupTable":
        """Derive identity and inverses from a multiplication table, then validate."""
        mul = tuple(tuple(int(v) for v in row) for row in mul)
        n = len(mul)
        idents = [e for e in range(n) if all(mul[e][x] == x and mul[x][e] == x for x in range(n))]
        if not idents:
            raise NotAGroup("no two-sided identity")
        e = idents[0]
        inv = []
        for x in range(n):
            found = [y for y in range(n) if mul[x][y] == e and mul[y][x] == e]
            if not found:
                raise NotAGroup(f"element {x} has no inverse")
            inv.append(found[0])
        return cls(n, mul, tuple(inv), e)

    @classmethod
    def from_json(cls, obj: dict) -> "GroupTable":
        G = cls.from_mul(obj["mul"])
        if "order" in obj and obj["order"] != G.order:
            raise NotAGroup("order does not match the table")
        return G

    def to_json(self) -> dict:
        return {"order": self.order, "mul": [list(r) for r in self.mul]}

    def setprod(self, a: int, b: int) -> int:
        """The set ``{xy : x in a, y in b}`` as a mask."""
        out = 0
        for x in bits(a):
            row = self.mul[x]
            for y in bits(b):
                out |= 1 << row[y]
        return out

    def setinv(self, a: int) -> int:
        out = 0
        for x in bits(a):
            out |= 1 << self.inv[x]
        return out


def cyclic(n: int) -> GroupTable:
    return GroupTable.from_mul([[(a + b) % n for b in range(n)] for a in range(n)])


def klein_four() -> GroupTable:
    return GroupTable.from_mul([[a ^ b for b in range(4)] for a in range(4)])


def symmetric3() -> GroupTable:
    perms = sorted(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    # (p * q)(i) = p(q(i))
    return GroupTable.from_mul([[index[tuple(p[q[i]] for i in range(3))] for q in perms] for p in perms])


CATALOGUE_NAMES: dict[int, tuple[str, ...]] = {
    1: ("Z1",), 2: ("Z2",), 3: ("Z3",), 4: ("Z4", "V4"), 5: ("Z5",), 6: ("Z6", "S3"),
}


@lru_cache(maxsize=None)
def catalogue(order: int) -> tuple[tuple[str, GroupTable], ...]:
    """Every group of the given order up to isomorphism (orders 1 to 6)."""
    if order not in CATALOGUE_NAMES:
        raise ValueError(f"no catalogued groups of order {order}")
    out = []
    for name in CATALOGUE_NAMES[order]:
        if name.startswith("Z"):
            out.append((name, cyclic(order)))
        elif name == "V4":
            out.append((name, klein_four()))
        else:
            out.append((name, symmetric3()))
    return tuple(out)


@dataclass(frozen=True)
class TopologizedGroup:
    group: GroupTable
    space: FiniteSpace

    def __post_init__(self):
        if self.group.order != self.space.n:
            raise ValueError(f"group of order {self.group.order} on a {self.space.n}-point space")

    def to_json(self) -> dict:
        return {"group": self.group.to_json(), "space": self.space.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "TopologizedGroup":
        return cls(GroupTable.from_json(obj["group"]), space_from_json(obj["space"]))


@dataclass(frozen=True)
class ContinuityClass:
    semitopological: bool
    paratopological: bool
    quasitopological: bool
    topological: bool


@dataclass(frozen=True)
class NeighborhoodConditions:
    t2_condition: bool
    t3_condition: bool


def _continuous(X: FiniteSpace, table) -> bool:
    return map_profile(PointMap(X, X, tuple(table))).continuous


def joint_continuity(TG: TopologizedGroup) -> bool:
    """Multiplication is continuous from the square.

    The minimal neighborhood of ``(a, b)`` in the square is the box
    ``U_a x U_b``, so continuity is ``U_a U_b`` inside ``U_ab`` everywhere.
    """
    G, nb = TG.group, TG.space.nbhd
    return all(G.setprod(nb[a], nb[b]) & ~nb[G.mul[a][b]] == 0
               for a in range(G.order) for b in range(G.order))


def joint_continuity_by_product(TG: TopologizedGroup) -> bool:
    """Materialize the square and test multiplication as a map out of it (order at most 4)."""
    G, X = TG.group, TG.space
    sq = product(X, X)
    table = tuple(G.mul[p // G.order][p % G.order] for p in range(sq.n))
    return map_profile(PointMap(sq, X, table)).continuous


def continuity_class(TG: TopologizedGroup) -> ContinuityClass:
    G, X = TG.group, TG.space
    n = G.order
    semi = all(_continuous(X, G.mul[g]) and _continuous(X, [G.mul[x][g] for x in range(n)])
               for g in range(n))
    inversion = _continuous(X, G.inv)
    para = joint_continuity(TG)
    return ContinuityClass(
        semitopological=semi,
        paratopological=para,
        quasitopological=semi and inversion,
        topological=para and inversion,
    )


def identity_neighborhood_conditions(TG: TopologizedGroup) -> NeighborhoodConditions:
    G, X = TG.group, TG.space
    full = X.full
    around_e = [u for u in X.opens if u >> G.identity & 1]
    t2 = all(G.setprod(u, G.setinv(v)) == full for u in around_e for v in around_e)
    t3 = all(G.setprod(u, v) == full for u in around_e for v in around_e)
    return NeighborhoodConditions(t2, t3)


def subgroups(G: GroupTable) -> list[int]:
    """Every subgroup as a mask, ascending.

    A nonempty subset of a finite group closed under multiplication is a subgroup.
    """
    out = []
    for s in range(1, 1 << G.order):
        if s >> G.identity & 1 and G.setprod(s, s) == s:
            out.append(s)
    return out


def dense_subgroups(TG: TopologizedGroup) -> Iterator[int]:
    for s in subgroups(TG.group):
        if is_dense(TG.space, s):
            yield s


def dense_subgroup_P(TG: TopologizedGroup, P) -> bool:
    P = get_property(P)
    return all(P(subspace(TG.space, s).space) for s in dense_subgroups(TG))


# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------

GROUP_CHECKS = {
    "t2": ("paratopological", "dense-connected iff U V^-1 = G for open U, V around e"),
    "t3": ("quasitopological", "dense-connected iff U V = G for open U, V around e"),
    "c1": ("topological", "dense-connected iff indiscrete"),
    "ultra": ("quasitopological", "dense-ultraconnected iff indiscrete"),
    "dsc": ("semitopological", "dense-connected implies dense-subgroup-connected"),
}


@dataclass(frozen=True)
class _Tables:
    """Mask images under left and right translation and inversion."""

    left: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]


@lru_cache(maxsize=None)
def _tables(G: GroupTable) -> _Tables:
    n = G.order
    masks = range(1 << n)
    left = tuple(tuple(G.setprod(1 << g, m) for m in masks) for g in range(n))
    right = tuple(tuple(G.setprod(m, 1 << g) for m in masks) for g in range(n))
    return _Tables(left, right, tuple(G.setinv(m) for m in masks))


def _row_class(G: GroupTable, T: _Tables, rows: tuple[int, ...]) -> tuple[bool, bool, bool, bool]:
    """Continuity class from minimal neighborhoods via ``f(U_x) inside U_f(x)``."""
    n, mul = G.order, G.mul
    semi = all(T.left[g][rows[x]] & ~rows[mul[g][x]] == 0 and T.right[g][rows[x]] & ~rows[mul[x][g]] == 0
               for g in range(n) for x in range(n))
    inversion = all(T.inv[rows[x]] & ~rows[G.inv[x]] == 0 for x in range(n))
    para = semi and all(G.setprod(rows[a], rows[b]) & ~rows[mul[a][b]] == 0
                        for a in range(n) for b in range(n))
    return semi, para, semi and inversion, para and inversion


def _instance_check(which: str, G: GroupTable, rows: tuple[int, ...]) -> tuple[bool, dict | None]:
    """(precondition held, witness dict when the statement fails)."""
    T = _tables(G)
    semi, para, quasi, top = _row_class(G, T, rows)
    need = GROUP_CHECKS[which][0]
    held = {"semitopological": semi, "paratopological": para,
            "quasitopological": quasi, "topological": top}[need]
    if not held:
        return False, None
    n = G.order
    full = full_mask(n)
    dc = all(rows[x] & rows[y] for x in range(n) for y in range(x))
    indiscrete = all(r == full for r in rows)
    ue = rows[G.identity]
    if which == "t2":
        cond = G.setprod(ue, T.inv[ue]) == full
        ok, data = dc == cond, {"dense_connected": dc, "t2_condition": cond}
    elif which == "t3":
        cond = G.setprod(ue, ue) == full
        ok, data = dc == cond, {"dense_connected": dc, "t3_condition": cond}
    elif which == "c1":
        ok, data = dc == indiscrete, {"dense_connected": dc, "indiscrete": indiscrete}
    elif which == "ultra":
        du = all(rows[x] >> y & 1 or rows[y] >> x & 1 for x in range(n) for y in range(x))
        ok, data = du == indiscrete, {"dense_ultraconnected": du, "indiscrete": indiscrete}
    else:
        if not dc:
            return True, None
        TG = TopologizedGroup(G, FiniteSpace(n, upsets(n, rows)))
        bad = [s for s in dense_subgroups(TG)
               if not get_property("connected")(subspace(TG.space, s).space)]
        ok, data = not bad, {"disconnected_dense_subgroups": [list(members(s)) for s in bad]}
    return True, None if ok else data


def verify_group_theorems(order: int, which: str) -> TheoremReport:
    """Sweep every catalogued group of ``order`` against every topology on its carrier."""
    which = {"ultra-corollary": "ultra"}.get(which, which)
    if which not in GROUP_CHECKS:
        raise UnknownTheorem(which)
    check_cap(order)
    groups = catalogue(order)
    t0 = time.perf_counter()
    all_rows = preorder_rows(order)
    failures = []
    substantive = 0
    para_count = para_not_top = 0
    case = 0
    for name, G in groups:
        T = _tables(G)
        for rows in all_rows:
            held, witness = _instance_check(which, G, rows)
            _, para, _, top = _row_class(G, T, rows)
            para_count += para
            para_not_top += para and not top
            substantive += held
            if witness is not None:
                X = FiniteSpace(order, upsets(order, rows))
                failures.append({"case": case,
                                 "input": {"group": G.to_json(), "space": X.to_json(), "name": name},
                                 "witness": witness})
            case += 1
    need, statement = GROUP_CHECKS[which]
    notes = [
        f"statement: {need} groups, {statement}",
        f"substantive instances (precondition holds): {substantive}",
        f"precondition-vacuous instances: {case - substantive}",
        f"paratopological instances: {para_count}, of which not topological: {para_not_top}",
        FINITE_SCALE_BANNER,
    ]
    return TheoremReport(
        theorem=which,
        n=order,
        mode="labeled",
        universe=f"groups {', '.join(nm for nm, _ in groups)} x all labeled topologies on {order} points",
        checked=case,
        failures=failures,
        elapsed_ms=int((time.perf_counter() - t0) * 1000),
        notes=notes,
    )


def replay_group_failure(which: str, record: dict) -> bool:
    which = {"ultra-corollary": "ultra"}.get(which, which)
    data = record["input"]
    G = GroupTable.from_json(data["group"])
    X = space_from_json(data["space"])
    _, witness = _instance_check(which, G, X.nbhd)
    return witness is not None
