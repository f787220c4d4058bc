"""Command-line front end.

Exit codes: 0 success or verified, 1 falsified, 2 usage error, 3 cap exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass
from typing import Callable

from .core import (
    FiniteSpace,
    classify_connectivity,
    connected_components,
    members,
    separation_profile,
    space_from_json,
)
from .enumeration import MODES, default_max_n, enumerate_topologies
from .errors import CapExceeded, DensetopError, NotExpressible, UnknownClaim, UnknownTheorem
from .named import named_space
from .properties import (
    PROPERTIES,
    dc_decomposition,
    dense_P,
    hereditarily_P,
    incomparable_pair,
    is_dense_connected_fast,
    is_dense_pathwise_fast,
    is_dense_pseudocompact,
    is_dense_ultraconnected_fast,
    is_locally_dense_connected_fast,
    locally_dense_P,
    one_dense_P,
    proper_one_dense_P,
)
from .symbolic import MODELS, WINDOW_CAP, cross_validate, sym_claim
from .theorems import theorem_ids, verify_theorem

EXIT_OK, EXIT_FALSIFIED, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
FORMATS = ("json", "csv", "text")


class UsageError(DensetopError):
    pass


@dataclass
class RunConfig:
    command: str
    n: int | None = None
    order: int | None = None
    radius: int | None = None
    mode: str = "labeled"
    output: str | None = None
    format: str = "json"
    jobs: int = 1
    timing: bool = True


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------

def _render(obj: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(obj, sort_keys=True, indent=2)
    if fmt == "text":
        lines = []
        for k in sorted(obj):
            v = obj[k]
            lines.append(f"{k}: {v if isinstance(v, (str, int, float, bool)) or v is None else json.dumps(v, sort_keys=True)}")
        return "\n".join(lines)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["key", "value"])
    for k in sorted(obj):
        v = obj[k]
        w.writerow([k, v if isinstance(v, (str, int, float, bool)) else json.dumps(v, sort_keys=True)])
    return buf.getvalue().rstrip("\n")


# ---------------------------------------------------------------------------
# Space loading and profiles
# ---------------------------------------------------------------------------

def load_space(ref: str) -> FiniteSpace:
    """``named:<name>``, inline JSON, ``-`` for stdin, or a path to a JSON file."""
    if ref.startswith("named:"):
        try:
            return named_space(ref[6:])
        except KeyError as e:
            raise UsageError(str(e.args[0])) from None
    if ref.lstrip().startswith("{"):
        text = ref
    elif ref == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(ref) as fh:
                text = fh.read()
        except OSError as e:
            raise UsageError(f"cannot read {ref}: {e.strerror}") from None
    try:
        return space_from_json(text)
    except (json.JSONDecodeError, KeyError, TypeError) as e:
        raise UsageError(f"malformed space JSON: {e}") from None


def space_profile(X: FiniteSpace) -> dict:
    sep = separation_profile(X)
    conn = classify_connectivity(X)
    pair = incomparable_pair(X)
    ldc = is_locally_dense_connected_fast(X)
    profile = {
        "space": X.to_json(),
        "T0": sep.T0,
        "T1": sep.T1,
        "Hausdorff": sep.Hausdorff,
        "connected": conn.connected,
        "hyperconnected": conn.hyperconnected,
        "ultraconnected": conn.ultraconnected,
        "path_connected": conn.path_connected,
        "non_separated_points": conn.non_separated_points,
        "dense_connected": is_dense_connected_fast(X),
        "dense_ultraconnected": is_dense_ultraconnected_fast(X),
        "dense_pathwise_connected": is_dense_pathwise_fast(X),
        "dense_pseudocompact": is_dense_pseudocompact(X),
        "locally_dense_connected": ldc,
        "components": [list(members(c)) for c in connected_components(X)],
        "dc_components": [list(members(c)) for c in dc_decomposition(X)] if ldc else None,
        "incomparable_pair": None if pair is None else list(pair),
    }
    if X.n <= default_max_n():
        profile["dense_connected_brute"] = dense_P(X, "connected")
        profile["dense_ultraconnected_brute"] = dense_P(X, "ultraconnected")
    return profile


# ---------------------------------------------------------------------------
# Predicate expressions for search
# ---------------------------------------------------------------------------

_PREFIXES: dict[str, Callable] = {
    "proper_one_dense_": proper_one_dense_P,
    "one_dense_": one_dense_P,
    "locally_dense_": locally_dense_P,
    "hereditarily_": hereditarily_P,
    "dense_": dense_P,
}


def _discrete(X: FiniteSpace) -> bool:
    return all(u == 1 << x for x, u in enumerate(X.nbhd))


def _indiscrete(X: FiniteSpace) -> bool:
    return all(u == X.full for u in X.nbhd)


def predicate(name: str) -> Callable[[FiniteSpace], bool]:
    if name in PROPERTIES:
        return PROPERTIES[name].predicate
    if name == "discrete":
        return _discrete
    if name == "indiscrete":
        return _indiscrete
    for prefix, combinator in _PREFIXES.items():
        if name.startswith(prefix) and name[len(prefix):] in PROPERTIES:
            base = name[len(prefix):]
            return lambda X, c=combinator, b=base: c(X, b)
    raise UsageError(f"unknown predicate {name!r}")


_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|([&|!()]))")


def parse_expression(text: str) -> tuple[Callable[[FiniteSpace], bool], list[str]]:
    """Compile ``a & !(b | c)``; ``!`` binds tightest, then ``&``, then ``|``.

    Returns the predicate and the identifiers it mentions.
    """
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise UsageError(f"unexpected character at {pos} in {text!r}")
        tokens.append(m.group(1) or m.group(2))
        pos = m.end()
    names: list[str] = []
    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else None

    def take(expected=None):
        nonlocal i
        tok = peek()
        if tok is None or (expected and tok != expected):
            raise UsageError(f"expected {expected or 'a term'} in {text!r}")
        i += 1
        return tok

    def disjunction():
        terms = [conjunction()]
        while peek() == "|":
            take("|")
            terms.append(conjunction())
        return terms[0] if len(terms) == 1 else (lambda X, ts=terms: any(t(X) for t in ts))

    def conjunction():
        terms = [negation()]
        while peek() == "&":
            take("&")
            terms.append(negation())
        return terms[0] if len(terms) == 1 else (lambda X, ts=terms: all(t(X) for t in ts))

    def negation():
        if peek() == "!":
            take("!")
            inner = negation()
            return lambda X: not inner(X)
        if peek() == "(":
            take("(")
            inner = disjunction()
            take(")")
            return inner
        tok = take()
        if tok in "&|)":
            raise UsageError(f"unexpected {tok!r} in {text!r}")
        names.append(tok)
        return predicate(tok)

    if not tokens:
        raise UsageError("empty expression")
    pred = disjunction()
    if i != len(tokens):
        raise UsageError(f"trailing input {tokens[i]!r} in {text!r}")
    return pred, names


def search(expression: str, n: int, mode: str = "classes") -> dict:
    """First space with 1..n points satisfying the expression, smallest size first."""
    pred, names = parse_expression(expression)
    searched = 0
    witness = None
    for k in range(1, n + 1):
        for X in enumerate_topologies(k, mode):
            searched += 1
            if pred(X):
                witness = X
                break
        if witness is not None:
            break
    notes = ["finite-scale evidence only"]
    if "T1" in names or "Hausdorff" in names:
        notes.append("finite T1 spaces are discrete, so no finite witness bears on questions about infinite T1 spaces")
    return {
        "expression": expression,
        "n": n,
        "mode": mode,
        "searched": searched,
        "result": "found" if witness is not None else "none at this scale",
        "witness": None if witness is None else witness.to_json(),
        "notes": notes,
    }


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _write(text: str, out) -> None:
    out.write(text + "\n")


def cmd_enumerate(args, cfg: RunConfig, out) -> int:
    count = 0
    if cfg.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["index", "n", "opens"])
    for X in enumerate_topologies(cfg.n, cfg.mode):
        if cfg.format == "json":
            _write(X.dumps(), out)
        elif cfg.format == "csv":
            w.writerow([count, X.n, json.dumps(X.to_json()["opens"])])
        else:
            _write(f"{count}: {X.to_json()['opens']}", out)
        count += 1
    tail = {"count": count, "mode": cfg.mode, "n": cfg.n}
    if cfg.format == "json":
        _write(json.dumps(tail, sort_keys=True), out)
    elif cfg.format == "text":
        _write(f"count: {count}", out)
    return EXIT_OK


def cmd_check(args, cfg: RunConfig, out) -> int:
    X = load_space(args.space)
    _write(_render(space_profile(X), cfg.format), out)
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig, out) -> int:
    size = cfg.order if cfg.order is not None else cfg.n
    if size is None:
        raise UsageError("verify needs --n (or --order for group statements)")
    report = verify_theorem(args.theorem, size, cfg.mode, cfg.jobs)
    data = report.to_json(cfg.timing)
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(json.dumps(data, sort_keys=True, indent=2) + "\n")
    _write(_render(data, cfg.format), out)
    return EXIT_OK if report.verified else EXIT_FALSIFIED


def cmd_search(args, cfg: RunConfig, out) -> int:
    _write(_render(search(args.property, cfg.n, cfg.mode), cfg.format), out)
    return EXIT_OK


def cmd_sym(args, cfg: RunConfig, out) -> int:
    if args.model not in MODELS:
        raise UsageError(f"unknown model {args.model!r}; known: {', '.join(MODELS)}")
    if args.cross_validate:
        rep = cross_validate(args.model, cfg.radius or WINDOW_CAP)
        _write(_render(rep.to_json(), cfg.format), out)
        return EXIT_OK if rep.ok else EXIT_FALSIFIED
    if not args.claim:
        raise UsageError("sym needs a claim or --cross-validate")
    res = sym_claim(args.model, args.claim).to_json()
    if not args.trace:
        res.pop("trace")
    _write(_render(res, cfg.format), out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="json")

    p = argparse.ArgumentParser(prog="densetop", description="Dense-P properties of finite and symbolic spaces.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", parents=[common], help="dump every topology on n points")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--mode", choices=MODES, default="labeled")

    c = sub.add_parser("check", parents=[common], help="profile one space")
    c.add_argument("space", help="named:<name>, a JSON file, inline JSON, or - for stdin")

    v = sub.add_parser("verify", parents=[common], help="check a statement over a finite universe")
    v.add_argument("theorem", help="one of: " + ", ".join(theorem_ids()))
    v.add_argument("--n", type=int)
    v.add_argument("--order", type=int, help="group order for t2, t3, c1, ultra, dsc")
    v.add_argument("--mode", choices=MODES, default="labeled")
    v.add_argument("--json", dest="output", help="also write the report to this file")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0 for byte-stable output")

    s = sub.add_parser("search", parents=[common], help="find a space satisfying a predicate expression")
    s.add_argument("--property", required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--mode", choices=MODES, default="classes")

    y = sub.add_parser("sym", parents=[common], help="symbolic claims about infinite example spaces")
    y.add_argument("model", help="one of: " + ", ".join(MODELS))
    y.add_argument("claim", nargs="?")
    y.add_argument("--trace", action="store_true")
    y.add_argument("--cross-validate", action="store_true")
    y.add_argument("--radius", type=int)
    return p


COMMANDS = {"enumerate": cmd_enumerate, "check": cmd_check, "verify": cmd_verify,
            "search": cmd_search, "sym": cmd_sym}


def _config(args) -> RunConfig:
    cfg = RunConfig(
        command=args.command,
        n=getattr(args, "n", None),
        order=getattr(args, "order", None),
        radius=getattr(args, "radius", None),
        mode=getattr(args, "mode", "labeled"),
        output=getattr(args, "output", None),
        format=args.format,
        jobs=getattr(args, "jobs", 1),
        timing=not getattr(args, "no_timing", False),
    )
    for label, value in (("n", cfg.n), ("order", cfg.order), ("radius", cfg.radius)):
        if value is not None and value < 0:
            raise UsageError(f"--{label} must be non-negative")
    if cfg.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    return cfg


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    fmt = args.format

    def fail(code: int, kind: str, message: str) -> int:
        if fmt == "json":
            _write(json.dumps({"error": kind, "message": message, "exit_code": code}, sort_keys=True), out)
        else:
            err.write(f"densetop: {kind}: {message}\n")
        return code

    try:
        cfg = _config(args)
        return COMMANDS[args.command](args, cfg, out)
    except CapExceeded as e:
        return fail(EXIT_CAP, "CapExceeded", str(e))
    except (UsageError, UnknownTheorem, UnknownClaim, NotExpressible) as e:
        return fail(EXIT_USAGE, type(e).__name__, str(e).strip("'\""))
    except DensetopError as e:
        return fail(EXIT_USAGE, type(e).__name__, str(e))


def main() -> None:
    sys.exit(run())

