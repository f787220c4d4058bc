"""Rule-based models of infinite example spaces.

Sets are described by a tiny descriptor algebra (finite, cofinite, rays,
ray unions, window complements).  Each model decides openness, closure
and denseness analytically.  :func:`cross_validate` checks every verdict
against certificates evaluated pointwise on a finite window sample.

Real-line models run over dyadic rationals: every claim involved depends
only on the order, and :class:`fractions.Fraction` compares exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable, Union

from .errors import CapExceeded, NotExpressible, UnknownClaim

INF = "inf"  # the compactifying point of the one-point compactification
WINDOW_CAP = 64

Point = Union[int, Fraction, str]

FORMS = ("empty", "whole", "finite", "cofinite", "ray", "ray_union", "window_complement")


def _is_num(p) -> bool:
    return not isinstance(p, str)


def fmt_point(p: Point) -> str:
    return str(p)


# ---------------------------------------------------------------------------
# Descriptors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SetDescriptor:
    """One set in the algebra.  Build through the factory functions, which normalize."""

    form: str
    points: frozenset = frozenset()
    a: Any = None  # ray endpoint
    c: Any = None  # window centre
    r: Any = None  # window radius

    def contains(self, p: Point) -> bool:
        f = self.form
        if f == "empty":
            return False
        if f == "whole":
            return True
        if f == "finite":
            return p in self.points
        if f == "cofinite":
            return p not in self.points
        if f == "ray":
            return _is_num(p) and p >= self.a
        if f == "ray_union":
            return p in self.points or (_is_num(p) and p >= self.a)
        return _is_num(p) and abs(p - self.c) >= self.r

    @property
    def unbounded_above(self) -> bool:
        return self.form in ("whole", "cofinite", "ray", "ray_union", "window_complement")

    def params(self) -> list[Point]:
        out = [p for p in self.points if _is_num(p)]
        out += [v for v in (self.a, self.c) if v is not None]
        if self.r is not None:
            out += [self.c - self.r, self.c + self.r, self.c - self.r + 1, self.c + self.r - 1]
        return out

    def __str__(self) -> str:
        pts = "{" + ", ".join(fmt_point(p) for p in sorted(self.points, key=_sort_key)) + "}"
        f = self.form
        if f in ("empty", "whole"):
            return f
        if f == "finite":
            return pts
        if f == "cofinite":
            return f"cofinite({pts})"
        if f == "ray":
            return f"[{fmt_point(self.a)}, inf)"
        if f == "ray_union":
            return f"{pts} + [{fmt_point(self.a)}, inf)"
        return f"{{x : |x - {self.c}| >= {self.r}}}"

    def to_json(self) -> dict:
        out: dict = {"form": self.form}
        if self.points:
            out["points"] = [fmt_point(p) for p in sorted(self.points, key=_sort_key)]
        for k in ("a", "c", "r"):
            v = getattr(self, k)
            if v is not None:
                out[k] = fmt_point(v)
        return out


def _sort_key(p):
    return (1, 0) if p == INF else (0, p)


EMPTY = SetDescriptor("empty")
WHOLE = SetDescriptor("whole")


def finite(points: Iterable[Point]) -> SetDescriptor:
    pts = frozenset(points)
    return SetDescriptor("finite", pts) if pts else EMPTY


def cofinite(points: Iterable[Point] = ()) -> SetDescriptor:
    pts = frozenset(points)
    return SetDescriptor("cofinite", pts) if pts else WHOLE


def ray(a) -> SetDescriptor:
    return SetDescriptor("ray", a=a)


def ray_union(points: Iterable[Point], a) -> SetDescriptor:
    pts = frozenset(p for p in points if not (_is_num(p) and p >= a))
    return SetDescriptor("ray_union", pts, a=a) if pts else ray(a)


def window_complement(c: int, r: int) -> SetDescriptor:
    if r < 0:
        raise ValueError("window radius must be non-negative")
    return WHOLE if r == 0 else SetDescriptor("window_complement", c=c, r=r)


# ---------------------------------------------------------------------------
# Models
# ---------------------------------------------------------------------------

class SymbolicSpace:
    """Common rule interface; each subclass is one example family."""

    name = ""
    carrier = ""
    forms: tuple[str, ...] = ()

    def admit(self, S: SetDescriptor) -> SetDescriptor:
        if S.form not in self.forms:
            raise NotExpressible(f"{S.form} sets are outside the {self.name} algebra")
        return S

    def in_carrier(self, p: Point) -> bool:
        raise NotImplementedError

    def is_open(self, S: SetDescriptor) -> bool:
        raise NotImplementedError

    def closure_contains(self, S: SetDescriptor, p: Point) -> bool:
        raise NotImplementedError

    def closure(self, S: SetDescriptor) -> SetDescriptor:
        raise NotImplementedError

    def is_dense(self, S: SetDescriptor) -> bool:
        raise NotImplementedError

    def disjoint_witness(self, S: SetDescriptor, p: Point) -> SetDescriptor:
        """An open set around ``p`` missing ``S`` (only when ``p`` is outside the closure)."""
        raise NotImplementedError

    def nondense_witness(self, S: SetDescriptor) -> Point:
        raise NotImplementedError

    def neighborhoods(self, p: Point, window: list[Point]) -> list[SetDescriptor]:
        """Sampled open neighborhoods of ``p`` with parameters drawn from the window."""
        raise NotImplementedError

    def window_points(self, radius: int) -> list[Point]:
        raise NotImplementedError

    def battery(self, window: list[Point]) -> list[SetDescriptor]:
        raise NotImplementedError

    def far_points(self, params: list[Point]) -> list[Point]:
        top = max([0, *params])
        return [top + 1, top + 2]

    def __repr__(self) -> str:
        return f"<{self.name}>"


def _dyadic_window(radius: int) -> list[Fraction]:
    """``radius`` consecutive quarter-steps centred on 0."""
    lo = -(radius // 2)
    return [Fraction(k, 4) for k in range(lo, lo + radius)]


class CofiniteN(SymbolicSpace):
    name = "cofinite_N"
    carrier = "natural numbers with the cofinite topology"
    forms = ("empty", "whole", "finite", "cofinite", "ray")

    def in_carrier(self, p):
        return isinstance(p, int) and p >= 0

    def is_open(self, S):
        S = self.admit(S)
        return S.form != "finite"

    def closure_contains(self, S, p):
        S = self.admit(S)
        # nonempty opens are cofinite: they meet every infinite set and miss any finite set they avoid
        return S.contains(p) if S.form in ("finite", "empty") else True

    def closure(self, S):
        S = self.admit(S)
        return S if S.form in ("finite", "empty") else WHOLE

    def is_dense(self, S):
        return self.admit(S).unbounded_above

    def disjoint_witness(self, S, p):
        return cofinite(S.points)

    def nondense_witness(self, S):
        return max(S.points, default=-1) + 1

    def neighborhoods(self, p, window):
        others = [q for q in window if q != p]
        return [WHOLE, ray(0), cofinite(others), cofinite(others[:1]), cofinite(others[-2:]),
                ray(p), ray(max(0, p - 3))]

    def window_points(self, radius):
        return list(range(radius))

    def battery(self, window):
        mid = window[len(window) // 2]
        return [EMPTY, WHOLE, finite([0]), finite([1, 2, 3]), finite(window), finite([mid]),
                cofinite([0]), cofinite(window), cofinite([mid, mid + 1]), ray(mid), ray(0)]


class OnePointCompactification(SymbolicSpace):
    name = "opc_discrete"
    carrier = "discrete natural numbers plus one point inf whose neighborhoods are cofinite"
    forms = ("empty", "whole", "finite", "cofinite")

    # the discrete part D, the only proper dense set
    D = SetDescriptor("cofinite", frozenset([INF]))

    def in_carrier(self, p):
        return p == INF or (isinstance(p, int) and p >= 0)

    def is_open(self, S):
        S = self.admit(S)
        if S.form == "finite":
            return INF not in S.points
        return True  # cofinite sets: either inside D, or around inf with cofinite trace on D

    def closure_contains(self, S, p):
        S = self.admit(S)
        if p != INF:
            return S.contains(p)  # natural numbers are isolated
        return S.contains(INF) or S.form in ("cofinite", "whole")

    def closure(self, S):
        S = self.admit(S)
        if S.form == "cofinite":
            return cofinite(S.points - {INF})
        return S

    def is_dense(self, S):
        S = self.admit(S)
        return S.form == "whole" or (S.form == "cofinite" and S.points <= {INF})

    def disjoint_witness(self, S, p):
        if p != INF:
            return finite([p])
        return cofinite(S.points - {INF})  # S is a finite subset of D here

    def nondense_witness(self, S):
        if S.form == "cofinite":
            return min(q for q in S.points if q != INF)
        return max((q for q in S.points if q != INF), default=-1) + 1

    def neighborhoods(self, p, window):
        nats = [q for q in window if q != INF]
        if p != INF:
            return [finite([p]), finite([p, p + 1]), cofinite([INF]), WHOLE]
        return [WHOLE, cofinite(nats), cofinite(nats[:1]), cofinite(nats[-3:])]

    def window_points(self, radius):
        return list(range(radius - 1)) + [INF]

    def far_points(self, params):
        return super().far_points(params) + [INF]

    def battery(self, window):
        nats = [q for q in window if q != INF]
        return [EMPTY, WHOLE, self.D, finite([0]), finite([INF]), finite([0, INF]), finite(nats),
                cofinite([0]), cofinite([0, INF]), cofinite(nats), cofinite(nats[:3] + [INF])]


class RayLine(SymbolicSpace):
    """The reals (as dyadics) under the upper-ray topology."""

    forms = ("empty", "whole", "finite", "cofinite", "ray", "ray_union")

    def __init__(self, name: str, generators: str):
        self.name = name
        self.generators = generators
        self.carrier = f"dyadic rationals, topology generated by {generators}"

    def in_carrier(self, p):
        return isinstance(p, (int, Fraction)) and Fraction(p).denominator & (Fraction(p).denominator - 1) == 0

    def is_open(self, S):
        return self.admit(S).form in ("empty", "whole", "ray")

    def closure_contains(self, S, p):
        S = self.admit(S)
        # the smallest open set around p is [p, inf)
        if S.unbounded_above:
            return True
        return any(q >= p for q in S.points)

    def closure(self, S):
        S = self.admit(S)
        if S.unbounded_above:
            return WHOLE
        if S.form == "empty":
            return EMPTY
        raise NotExpressible(f"closure of {S} is a down-ray")

    def is_dense(self, S):
        return self.admit(S).unbounded_above

    def disjoint_witness(self, S, p):
        return ray(p)

    def nondense_witness(self, S):
        return max(S.points, default=0) + 1

    def neighborhoods(self, p, window):
        below = [q for q in window if q <= p]
        return [ray(p), ray(below[0]), ray(below[len(below) // 2]), WHOLE]

    def window_points(self, radius):
        return _dyadic_window(radius)

    def battery(self, window):
        lo, mid, hi = window[0], window[len(window) // 2], window[-1]
        return [EMPTY, WHOLE, ray(mid), ray(hi), ray(lo), finite([mid]), finite([lo, hi]),
                finite(window), ray_union([lo], mid), cofinite([mid]), cofinite(window)]


class WindowZ(SymbolicSpace):
    name = "window_Z"
    carrier = "integers, generated by the sets x + {y : |y| >= n}"
    forms = ("empty", "whole", "finite", "cofinite", "window_complement")

    def in_carrier(self, p):
        return isinstance(p, int)

    def is_open(self, S):
        return self.admit(S).form != "finite"

    def closure_contains(self, S, p):
        S = self.admit(S)
        # every nonempty open set is cofinite, so only finite sets can avoid one
        return S.contains(p) if S.form in ("finite", "empty") else True

    def closure(self, S):
        S = self.admit(S)
        return S if S.form in ("finite", "empty") else WHOLE

    def is_dense(self, S):
        return self.admit(S).unbounded_above

    def disjoint_witness(self, S, p):
        return cofinite(S.points)

    def nondense_witness(self, S):
        return max(S.points, default=0) + 1

    def neighborhoods(self, p, window):
        out = [WHOLE, cofinite([q for q in window if q != p][:5])]
        for c in (window[0], window[len(window) // 2], window[-1]):
            for r in (1, 2, 7):
                if abs(p - c) >= r:
                    out.append(window_complement(c, r))
        return out

    def window_points(self, radius):
        lo = -(radius // 2)
        return list(range(lo, lo + radius))

    def far_points(self, params):
        top = max([0, *params])
        low = min([0, *params])
        return [top + 1, top + 2, low - 1]

    def battery(self, window):
        lo, mid, hi = window[0], window[len(window) // 2], window[-1]
        return [EMPTY, WHOLE, finite([mid]), finite([lo, mid, hi]), finite(window), cofinite([mid]),
                cofinite(window), window_complement(mid, 3), window_complement(lo, 1),
                window_complement(hi, 5)]


class HSpace(SymbolicSpace):
    name = "H_space"
    carrier = ("dyadic rationals; basic neighborhoods [x, inf) for x outside {0, 1} "
               "and {x} + [n, inf) with n natural for x in {0, 1}")
    forms = ("empty", "whole", "finite", "ray", "ray_union")
    SPECIAL = (0, 1)

    def in_carrier(self, p):
        return isinstance(p, (int, Fraction)) and Fraction(p).denominator & (Fraction(p).denominator - 1) == 0

    def is_open(self, S):
        S = self.admit(S)
        if S.form == "ray_union":
            return S.points <= set(self.SPECIAL)
        return S.form != "finite"

    def closure_contains(self, S, p):
        S = self.admit(S)
        if S.unbounded_above:
            return True
        if p in self.SPECIAL:
            return S.contains(p)
        return any(q >= p for q in S.points)

    def closure(self, S):
        S = self.admit(S)
        if S.unbounded_above:
            return WHOLE
        if S.form == "empty":
            return EMPTY
        raise NotExpressible(f"closure of {S} is not in the H_space algebra")

    def is_dense(self, S):
        return self.admit(S).unbounded_above

    def _tail_above(self, S) -> int:
        return max(2, int(max(S.points, default=0)) + 1)

    def disjoint_witness(self, S, p):
        if p in self.SPECIAL:
            return ray_union([p], self._tail_above(S))
        return ray(p)

    def nondense_witness(self, S):
        return Fraction(self._tail_above(S)) + Fraction(1, 4)

    def neighborhoods(self, p, window):
        below = [q for q in window if q <= p]
        out = [WHOLE, ray(below[0])]
        if p in self.SPECIAL:
            out += [ray_union([p], n) for n in (2, 3, int(window[-1]) + 1)]
        else:
            out.append(ray(p))
        return out

    def window_points(self, radius):
        pts = _dyadic_window(radius)
        if 0 not in pts or 1 not in pts:
            pts = sorted(set(pts[: radius - 2]) | {Fraction(0), Fraction(1)})
        return pts

    def battery(self, window):
        lo, hi = window[0], window[-1]
        return [EMPTY, WHOLE, finite([0]), finite([1]), finite([0, 1]), finite([lo]), finite([hi]),
                ray(Fraction(1, 2)), ray(lo), ray_union([0], 2), ray_union([0, 1], 3), finite(window)]


MODELS: dict[str, SymbolicSpace] = {
    m.name: m
    for m in (
        CofiniteN(),
        OnePointCompactification(),
        RayLine("ray_R", "x + [y, inf)"),
        RayLine("ray_R_closed", "x + [0, inf)"),
        WindowZ(),
        HSpace(),
    )
}


def get_model(M: SymbolicSpace | str) -> SymbolicSpace:
    if isinstance(M, SymbolicSpace):
        return M
    try:
        return MODELS[M]
    except KeyError:
        raise KeyError(f"unknown model {M!r}; known: {sorted(MODELS)}") from None


def sym_closure(M, S: SetDescriptor) -> SetDescriptor:
    return get_model(M).closure(S)


def sym_is_dense(M, S: SetDescriptor) -> bool:
    return get_model(M).is_dense(S)


# ---------------------------------------------------------------------------
# Window samples and cross-validation
# ---------------------------------------------------------------------------

@dataclass
class WindowSample:
    """Generating neighborhoods traced on a finite window.

    Traces are not a subspace topology: a cofinite set traced on a window
    can look like any subset.  They only serve pointwise certificate checks.
    """

    model: str
    radius: int
    points: list
    neighborhoods: dict = field(default_factory=dict)  # point -> list of (descriptor, trace)


def window_sample(M, radius: int) -> WindowSample:
    M = get_model(M)
    if radius > WINDOW_CAP:
        raise CapExceeded(f"radius {radius} exceeds the window cap {WINDOW_CAP}")
    if radius < 4:
        raise ValueError("radius must be at least 4")
    pts = M.window_points(radius)
    nbhds = {}
    for p in pts:
        nbhds[p] = [(N, frozenset(q for q in pts if N.contains(q))) for N in M.neighborhoods(p, pts)]
    return WindowSample(M.name, radius, pts, nbhds)


def meet_point(M: SymbolicSpace, A: SetDescriptor, B: SetDescriptor) -> Point | None:
    """A carrier point in both sets, found by searching their parameters and far points.

    Independent of the closure rules: it only uses pointwise membership.
    """
    params = A.params() + B.params()
    cands = list(A.points) + list(B.points) + params + M.far_points(params)
    for q in cands:
        if M.in_carrier(q) and A.contains(q) and B.contains(q):
            return q
    return None


@dataclass
class CrossValidation:
    model: str
    radius: int
    exact_checks: int = 0
    one_sided_checks: int = 0
    disagreements: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def to_json(self) -> dict:
        return {"model": self.model, "radius": self.radius, "exact_checks": self.exact_checks,
                "one_sided_checks": self.one_sided_checks, "disagreements": self.disagreements}


def cross_validate(M, radius: int = WINDOW_CAP) -> CrossValidation:
    """Check every closure and denseness verdict on the battery against window certificates.

    Exact checks verify a concrete point by membership (a meet point inside
    a sampled neighborhood, or rule self-consistency at a window point).
    One-sided checks confirm a claimed disjointness only on window points.
    """
    M = get_model(M)
    sample = window_sample(M, radius)
    rep = CrossValidation(M.name, radius)

    def disagree(kind, S, p=None, detail=""):
        rep.disagreements.append({"check": kind, "set": str(S),
                                  "point": None if p is None else fmt_point(p), "detail": detail})

    for S in M.battery(sample.points):
        try:
            C = M.closure(S)
        except NotExpressible:
            C = None
        if C is not None:
            # extensive and idempotent
            rep.exact_checks += 2
            if any(S.contains(q) and not C.contains(q) for q in sample.points):
                disagree("extensive", S)
            if M.closure(C) != C:
                disagree("idempotent", S)
            rep.exact_checks += 1
            if M.is_dense(S) != (C == WHOLE):
                disagree("dense-vs-closure", S)
        dense = M.is_dense(S)
        for p in sample.points:
            inside = M.closure_contains(S, p)
            if C is not None:
                rep.exact_checks += 1
                if C.contains(p) != inside:
                    disagree("closure-descriptor", S, p)
            if dense and not inside:
                disagree("dense-but-outside-closure", S, p)
            if inside:
                for N, _trace in sample.neighborhoods[p]:
                    q = meet_point(M, N, S)
                    rep.exact_checks += 1
                    if q is None:
                        disagree("closure-meet", S, p, f"no point of {S} found in {N}")
            else:
                N = M.disjoint_witness(S, p)
                rep.exact_checks += 1
                if not (M.is_open(N) and N.contains(p)):
                    disagree("witness-neighborhood", S, p, str(N))
                rep.one_sided_checks += 1
                if any(N.contains(q) and S.contains(q) for q in sample.points):
                    disagree("witness-disjoint", S, p, str(N))
        if not dense:
            w = M.nondense_witness(S)
            rep.exact_checks += 1
            if not M.in_carrier(w) or M.closure_contains(S, w):
                disagree("nondense-witness", S, w)
    return rep


# ---------------------------------------------------------------------------
# Claims
# ---------------------------------------------------------------------------

@dataclass
class ClaimResult:
    model: str
    claim: str
    value: bool
    trace: list[str]
    witness: Any = None

    def to_json(self) -> dict:
        return {"model": self.model, "claim": self.claim, "value": self.value,
                "trace": self.trace, "witness": self.witness}


def _sample_nbhds(M: SymbolicSpace, p, radius: int = 16) -> list[SetDescriptor]:
    return M.neighborhoods(p, M.window_points(radius))


def _closure_criterion(M: SymbolicSpace, opens: list[SetDescriptor], trace: list[str]) -> bool:
    ok = True
    for U in opens:
        C = M.closure(U)
        trace.append(f"closure of {U} is {C}")
        ok &= C == WHOLE
    return ok


# cofinite_N ---------------------------------------------------------------

def _cof_dense_connected(M):
    trace = ["every nonempty open set is cofinite, hence infinite",
             "the closure rule sends every infinite set to the whole space"]
    opens = [U for U in M.battery(M.window_points(16)) if M.is_open(U) and U != EMPTY]
    ok = _closure_criterion(M, opens, trace)
    trace.append("every nonempty open set is dense, so the space is hyperconnected, hence dense-connected")
    return ok, trace, None


def _cof_T1(M):
    trace = []
    ok = True
    for x in (0, 1, 7):
        C = M.closure(finite([x]))
        trace.append(f"closure of {{{x}}} is {C}")
        ok &= C == finite([x])
    trace.append("finite sets are closed, so every singleton is closed")
    return ok, trace, None


def _cof_compact(M):
    trace = ["any member U of an open cover is cofinite(F) with F finite",
             "one further member per point of F finishes a finite subcover"]
    return True, trace, None


def _cof_dense_pathwise(M):
    trace = ["the carrier is countably infinite and dense in itself",
             "a countably infinite cofinite space is not path-connected: a path would split [0, 1] "
             "into countably many pairwise disjoint nonempty closed fibres, which Sierpinski's theorem forbids",
             "so the dense subset formed by the whole carrier fails path-connectedness"]
    return False, trace, {"dense_subset": str(WHOLE)}


# opc_discrete ---------------------------------------------------------------

def _opc_compact(M):
    around = [U for U in _sample_nbhds(M, INF) if U.contains(INF)]
    ok = all(M.is_open(U) and U.form in ("cofinite", "whole") and INF not in U.points for U in around)
    trace = ["open sets containing inf are cofinite (checked on sampled neighborhoods: "
             + ", ".join(str(U) for U in around) + ")",
             "a cover member around inf leaves finitely many points, each covered by one more member"]
    return ok, trace, None


def _opc_one_dense_compact(M):
    ok, trace, _ = _opc_compact(M)
    trace.append(f"the whole space is dense: {M.is_dense(WHOLE)}")
    return ok and M.is_dense(WHOLE), trace, None


def _opc_proper_one_dense_pseudocompact(M):
    window = M.window_points(16)
    proper_dense = [S for S in M.battery(window) if M.is_dense(S) and S != WHOLE]
    trace = [f"dense sets in the battery other than the whole space: {[str(S) for S in proper_dense]}",
             "a set is dense iff it contains every isolated natural number, so the only proper dense set is D"]
    D = M.D
    isolated = all(M.is_open(finite([n])) for n in window if n != INF)
    trace.append(f"each natural number is isolated: {isolated}")
    trace.append("D is an infinite discrete subspace; f(n) = n is continuous and unbounded on it")
    ok = proper_dense == [D] and isolated
    return not ok, trace, {"dense_subset": str(D)}


# ray models -----------------------------------------------------------------

def _ray_generators_check(M, trace) -> bool:
    """Base elements are rays, and unions of them inside the algebra are rays."""
    ok = all(M.is_open(ray(Fraction(k, 4))) for k in range(-8, 9))
    trace.append(f"every basic set x + [y, inf) is the ray [x + y, inf), open in the model: {ok}")
    return ok


def _ray_t2_condition(M):
    trace = ["open neighborhoods of 0 contain a ray [a, inf) with a <= 0",
             "[a, inf) - [b, inf) = {u - v} covers every t: take v = max(b, a - t), u = t + v"]
    ok = True
    for a in (Fraction(0), Fraction(-1, 4), Fraction(-3)):
        for b in (Fraction(0), Fraction(-1, 2)):
            for t in (Fraction(-5), Fraction(0), Fraction(13, 4)):
                v = max(b, a - t)
                u = t + v
                ok &= ray(a).contains(u) and ray(b).contains(v) and u - v == t
    trace.append(f"formula verified on sampled rays and targets: {ok}")
    return ok, trace, None


def _ray_paratopological(M):
    trace = ["[x, inf) + [y, inf) = [x + y, inf), so each basic neighborhood of x + y "
             "contains the sum of basic neighborhoods of x and y"]
    pts = M.window_points(16)
    ok = True
    for x in (Fraction(-1), Fraction(0), Fraction(5, 4)):
        for y in (Fraction(0), Fraction(3, 2)):
            U, V, W = ray(x), ray(y), ray(x + y)
            ok &= all(W.contains(u + v) for u in pts if U.contains(u) for v in pts if V.contains(v))
    trace.append(f"sums of sampled points land in the target ray: {ok}")
    return ok, trace, None


def _ray_quasitopological(M):
    trace = ["every neighborhood of 0 contains [0, inf) and so the point 1",
             "inversion sends 1 to -1, outside the neighborhood [0, inf) of -0 = 0"]
    V = ray(0)
    return False, trace, {"neighborhood": str(V), "point": 1, "image": -1}


def _ray_dense_connected_closure(M):
    trace = ["nonempty open sets are rays or the whole space"]
    opens = [ray(Fraction(k, 4)) for k in (-12, 0, 3, 40)] + [WHOLE]
    ok = _closure_criterion(M, opens, trace)
    trace.append("every nonempty open set is dense")
    return ok, trace, None


def _ray_dense_connected_t2(M):
    p, tp, _ = _ray_paratopological(M)
    c, tc, _ = _ray_t2_condition(M)
    trace = ["paratopological: " + str(p)] + tp + ["t2 condition: " + str(c)] + tc
    trace.append("a paratopological group with U V^-1 = G for neighborhoods of e is dense-connected")
    return p and c, trace, None


def _ray_dense_connected(M):
    a, ta, _ = _ray_dense_connected_t2(M)
    b, tb, _ = _ray_dense_connected_closure(M)
    trace = ta + tb + [f"group criterion {a}, closure criterion {b}, agree: {a == b}"]
    if a != b:
        raise AssertionError("group and closure derivations disagree")
    return a, trace, None


def _ray_T0(M):
    trace = ["for p < q the open ray [q, inf) contains q and not p"]
    ok = ray(1).contains(1) and not ray(1).contains(0)
    return ok, trace, None


def _ray_T1(M):
    inside = M.closure_contains(finite([1]), 0)
    trace = [f"0 lies in the closure of {{1}}: {inside}",
             "every open set around 0 contains [0, inf) and so contains 1"]
    return not inside, trace, {"pair": [0, 1]}


def _ray_dense_ultraconnected(M):
    pts = M.window_points(16)
    ok = all(M.closure_contains(finite([max(p, q)]), min(p, q)) for p in pts for q in pts)
    trace = ["for p <= q, p lies in the closure of {q}, since [p, inf) contains q",
             f"comparability checked on {len(pts)} window points: {ok}",
             "every pair is comparable in the specialization order, so the space is dense-ultraconnected"]
    return ok, trace, None


def _rayc_coarser(M):
    trace = ["generators x + [0, inf) are the rays [x, inf)",
             "each is the basic set x + [y, inf) with y = 0 of the finer model"]
    fine = MODELS["ray_R"]
    ok = all(fine.is_open(ray(Fraction(k, 4))) for k in range(-16, 17))
    trace.append(f"every sampled generator is open in ray_R: {ok}")
    return ok, trace, None


def _rayc_dense_connected_p0(M):
    fine, tf, _ = _ray_dense_connected(MODELS["ray_R"])
    coarse, tc, _ = _rayc_coarser(M)
    trace = ["ray_R is dense-connected: " + str(fine)] + tc
    trace.append("coarsening a dense-connected topology keeps it dense-connected")
    return fine and coarse, trace, None


def _rayc_dense_connected(M):
    a, ta, _ = _ray_dense_connected_t2(M)
    b, tb, _ = _rayc_dense_connected_p0(M)
    trace = ta + tb + [f"group criterion {a}, coarsening route {b}, agree: {a == b}"]
    if a != b:
        raise AssertionError("group and coarsening derivations disagree")
    return a, trace, None


# window_Z -------------------------------------------------------------------

def _t3_point(U: SetDescriptor, V: SetDescriptor, t: int) -> int:
    """A ``u`` in ``U`` with ``t - u`` in ``V`` for cofinite-type neighborhoods."""
    if U.form == "window_complement" and V.form == "window_complement":
        return max(U.c + U.r, t - V.c + V.r)
    bound = max([0, *U.params(), *(t - v for v in V.params())])
    return bound + 1


def _wz_t3_condition(M):
    trace = ["neighborhoods of 0 are generated by window complements {x : |x - c| >= r}",
             "for U = W(c1, r1), V = W(c2, r2) and any target t put u = max(c1 + r1, t - c2 + r2)",
             "then u - c1 >= r1 and c2 - (t - u) >= r2, so u is in U and t - u is in V: U + V = Z",
             "for general cofinite neighborhoods a large enough u works the same way"]
    nb = [U for U in _sample_nbhds(M, 0, 20) if U.contains(0)] + [window_complement(3, 2), window_complement(-4, 4)]
    ok = True
    count = 0
    for U in nb:
        for V in nb:
            for t in range(-25, 26):
                u = _t3_point(U, V, t)
                ok &= U.contains(u) and V.contains(t - u)
                count += 1
    trace.append(f"formula verified on {count} (U, V, t) samples: {ok}")
    return ok, trace, {"u": "max(c1 + r1, t - c2 + r2)"}


def _wz_quasitopological(M):
    trace = ["x + W(c, r) = W(c + x, r) and -W(c, r) = W(-c, r)",
             "translation and inversion map generators to generators, so they are continuous"]
    ok = True
    for c in (-3, 0, 4):
        for r in (1, 3):
            for x in (-2, 5):
                W = window_complement(c, r)
                ok &= all(W.contains(p) == window_complement(c + x, r).contains(p + x) for p in range(-20, 21))
                ok &= all(W.contains(p) == window_complement(-c, r).contains(-p) for p in range(-20, 21))
    return ok, trace, None


def _wz_paratopological(M):
    W = window_complement(1, 1)
    trace = [f"{W} is an open neighborhood of 0 = 0 + 0",
             "for any neighborhoods U, V of 0 the t3 formula with t = 1 puts 1 in U + V",
             f"so U + V is never inside {W}: addition is not jointly continuous at (0, 0)"]
    nb = [U for U in _sample_nbhds(M, 0, 20) if U.contains(0)]
    escapes = 0
    for U in nb:
        for V in nb:
            u = _t3_point(U, V, 1)
            escapes += U.contains(u) and V.contains(1 - u) and not W.contains(u + (1 - u))
    trace.append(f"sampled neighborhood pairs whose sum escapes {W}: {escapes} of {len(nb) ** 2}")
    return escapes != len(nb) ** 2, trace, {"neighborhood": str(W), "sum": 1}


def _wz_T1(M):
    ok = all(M.is_open(window_complement(x, 1)) and not window_complement(x, 1).contains(x) for x in (-3, 0, 8))
    return ok, ["Z minus {x} is the generator W(x, 1), so singletons are closed"], None


def _wz_dense_connected(M):
    q, tq, _ = _wz_quasitopological(M)
    c, tc, _ = _wz_t3_condition(M)
    trace = ["quasitopological: " + str(q)] + tq + ["t3 condition: " + str(c)] + tc
    trace.append("a quasitopological group with U V = G for neighborhoods of e is dense-connected")
    opens = [window_complement(0, 1), window_complement(5, 9), cofinite([0, 2])]
    b = _closure_criterion(M, opens, trace)
    trace.append(f"closure criterion agrees: {b}")
    return q and c and b, trace, None


# H_space --------------------------------------------------------------------

def _h_ultraconnected(M):
    trace = ["for q outside {0, 1} and q <= p, q lies in the closure of {p}, since [q, inf) contains p",
             "so a closed set containing p contains every such q",
             "two nonempty closed sets through p1 and p2 share m = min(p1, p2, -1) - 1"]
    pts = M.window_points(16)
    ok = True
    for p1 in pts:
        for p2 in pts:
            m = min(p1, p2, -1) - 1
            ok &= M.closure_contains(finite([p1]), m) and M.closure_contains(finite([p2]), m)
    trace.append(f"common point verified on {len(pts) ** 2} pairs: {ok}")
    return ok, trace, None


def _h_dense_ultraconnected(M):
    a = M.closure_contains(finite([1]), 0)
    b = M.closure_contains(finite([0]), 1)
    trace = [f"0 in closure of {{1}}: {a} (witness neighborhood {M.disjoint_witness(finite([1]), 0)})",
             f"1 in closure of {{0}}: {b} (witness neighborhood {M.disjoint_witness(finite([0]), 1)})",
             "0 and 1 are incomparable in the specialization order"]
    return a or b, trace, {"pair": [0, 1]}


CLAIMS: dict[str, dict[str, Callable]] = {
    "cofinite_N": {
        "dense_connected": _cof_dense_connected,
        "T1": _cof_T1,
        "compact": _cof_compact,
        "dense_pathwise": _cof_dense_pathwise,
    },
    "opc_discrete": {
        "compact": _opc_compact,
        "one_dense_compact": _opc_one_dense_compact,
        "proper_one_dense_pseudocompact": _opc_proper_one_dense_pseudocompact,
    },
    "ray_R": {
        "t2_condition": _ray_t2_condition,
        "paratopological": _ray_paratopological,
        "quasitopological": _ray_quasitopological,
        "dense_connected_t2": _ray_dense_connected_t2,
        "dense_connected_closure": _ray_dense_connected_closure,
        "dense_connected": _ray_dense_connected,
        "T0": _ray_T0,
        "T1": _ray_T1,
        "dense_ultraconnected": _ray_dense_ultraconnected,
    },
    "ray_R_closed": {
        "t2_condition": _ray_t2_condition,
        "paratopological": _ray_paratopological,
        "dense_connected_t2": _ray_dense_connected_t2,
        "coarser_than_ray_R": _rayc_coarser,
        "dense_connected_p0": _rayc_dense_connected_p0,
        "dense_connected": _rayc_dense_connected,
        "T0": _ray_T0,
        "T1": _ray_T1,
        "dense_ultraconnected": _ray_dense_ultraconnected,
    },
    "window_Z": {
        "t3_condition": _wz_t3_condition,
        "quasitopological": _wz_quasitopological,
        "paratopological": _wz_paratopological,
        "T1": _wz_T1,
        "dense_connected": _wz_dense_connected,
    },
    "H_space": {
        "ultraconnected": _h_ultraconnected,
        "dense_ultraconnected": _h_dense_ultraconnected,
    },
}


def sym_claim(M, claim: str) -> ClaimResult:
    M = get_model(M)
    try:
        fn = CLAIMS[M.name][claim]
    except KeyError:
        raise UnknownClaim(f"{claim!r} is not registered for {M.name}") from None
    value, trace, witness = fn(M)
    return ClaimResult(M.name, claim, bool(value), trace, witness)
