"""Stable names for the recurring witness spaces."""
from __future__ import annotations

from .core import FiniteSpace, discrete, indiscrete, product, sierpinski, topological_sum, validate_topology

# a bottom point 0 below two incomparable points 1 and 2
H_ANALOGUE_OPENS = ((), (1,), (2,), (1, 2), (0, 1, 2))


def h_analogue() -> FiniteSpace:
    return validate_topology(3, H_ANALOGUE_OPENS)


def sierpinski_sq() -> FiniteSpace:
    """Sierpinski square; point ``(a, b)`` is ``2a + b``."""
    return product(sierpinski(), sierpinski())


_FIXED = {"sierpinski": sierpinski, "h_analogue": h_analogue, "sierpinski_sq": sierpinski_sq}
_SIZED = {"discrete": discrete, "indiscrete": indiscrete}


def named_space(name: str) -> FiniteSpace:
    """Resolve names like ``sierpinski``, ``discrete:3`` or ``sum:sierpinski+discrete:2``."""
    if name.startswith("sum:"):
        parts = [p for p in name[4:].split("+")]
        if not all(parts):
            raise KeyError(f"malformed sum {name!r}")
        return topological_sum([named_space(p) for p in parts])
    if name in _FIXED:
        return _FIXED[name]()
    kind, sep, arg = name.partition(":")
    if sep and kind in _SIZED and arg.isdigit():
        return _SIZED[kind](int(arg))
    raise KeyError(f"unknown named space {name!r}")


NAMES = ("sierpinski", "discrete:<n>", "indiscrete:<n>", "h_analogue", "sierpinski_sq", "sum:<a>+<b>")
