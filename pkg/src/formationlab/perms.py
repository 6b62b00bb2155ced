"""Exact arithmetic on permutations of {1..n} and disjoint-cycle notation.

Composition is left-to-right throughout the package: ``compose(a, b)`` applies
``a`` first, then ``b``.  The commutator is ``[a, b] = a^-1 b^-1 a b`` under
that convention.
"""

from __future__ import annotations

from math import lcm
from typing import Iterator

from .errors import InputError

__all__ = [
    "Permutation",
    "identity",
    "compose",
    "inverse",
    "power",
    "commutator",
    "order_of",
    "parse_cycles",
    "format_cycles",
]


class Permutation:
    """A bijection on {1..n}, stored as the tuple of images of 1..n."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        if n == 0:
            raise InputError("a permutation needs degree at least 1")
        seen = [False] * n
        for v in images:
            if not isinstance(v, int) or not 1 <= v <= n:
                raise InputError(f"image {v!r} out of range 1..{n}")
            if seen[v - 1]:
                raise InputError(f"image {v} repeated; not a bijection")
            seen[v - 1] = True
        object.__setattr__(self, "images", images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        # Differing degrees never arise inside one group context; treat as
        # plain inequality so hashing stays safe.
        return self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, e: int) -> "Permutation":
        return power(self, e)

    def __invert__(self) -> "Permutation":
        return inverse(self)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles of length >= 2, ordered by smallest moved point."""
        n = self.degree
        seen = [False] * n
        out = []
        for start in range(1, n + 1):
            if seen[start - 1] or self.images[start - 1] == start:
                continue
            cyc = [start]
            seen[start - 1] = True
            p = self.images[start - 1]
            while p != start:
                cyc.append(p)
                seen[p - 1] = True
                p = self.images[p - 1]
            out.append(tuple(cyc))
        return out

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"


def identity(degree: int) -> Permutation:
    if degree < 1:
        raise InputError(f"degree must be positive, got {degree}")
    return Permutation(range(1, degree + 1))


def _check_degrees(a: Permutation, b: Permutation) -> None:
    if a.degree != b.degree:
        raise InputError(f"degree mismatch: {a.degree} vs {b.degree}")


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Apply ``a`` first, then ``b``: the result maps i to b(a(i))."""
    _check_degrees(a, b)
    bi = b.images
    return Permutation(bi[v - 1] for v in a.images)


def inverse(a: Permutation) -> Permutation:
    inv = [0] * a.degree
    for i, v in enumerate(a.images):
        inv[v - 1] = i + 1
    return Permutation(inv)


def order_of(a: Permutation) -> int:
    """Least m >= 1 with a^m = identity; the lcm of the cycle lengths."""
    return lcm(1, *(len(c) for c in a.cycles()))


def power(a: Permutation, e: int) -> Permutation:
    """a^e for any integer e; the exponent reduces modulo the order of a
    (cycle by cycle, so arbitrarily large |e| stays O(degree))."""
    images = list(range(1, a.degree + 1))
    for cyc in a.cycles():
        k = e % len(cyc)
        for i, p in enumerate(cyc):
            images[p - 1] = cyc[(i + k) % len(cyc)]
    return Permutation(images)


def commutator(a: Permutation, b: Permutation) -> Permutation:
    """[a, b] = a^-1 b^-1 a b; identity exactly when a and b commute."""
    _check_degrees(a, b)
    return compose(compose(compose(inverse(a), inverse(b)), a), b)


def _tokens(text: str) -> Iterator[tuple[str, int]]:
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c in "()":
            yield c, i
            i += 1
        elif c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            yield text[i:j], i
            i = j
        else:
            raise InputError(f"unexpected character {c!r} in cycle notation", i)


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation like ``(1 2 3)(4 5)``; ``()`` is the identity."""
    if degree < 1:
        raise InputError(f"degree must be positive, got {degree}")
    if not text.strip():
        raise InputError("empty cycle text; the identity is written '()'")
    images = list(range(1, degree + 1))
    used = [False] * degree
    cycle: list[int] | None = None
    open_pos = 0
    for tok, pos in _tokens(text):
        if tok == "(":
            if cycle is not None:
                raise InputError("nested '(' in cycle notation", pos)
            cycle = []
            open_pos = pos
        elif tok == ")":
            if cycle is None:
                raise InputError("')' without matching '('", pos)
            for k, p in enumerate(cycle):
                images[p - 1] = cycle[(k + 1) % len(cycle)]
            cycle = None
        else:
            if cycle is None:
                raise InputError("point outside any cycle", pos)
            p = int(tok)
            if not 1 <= p <= degree:
                raise InputError(f"point {p} out of range 1..{degree}", pos)
            if used[p - 1]:
                raise InputError(f"point {p} repeated", pos)
            used[p - 1] = True
            cycle.append(p)
    if cycle is not None:
        raise InputError("unclosed '(' in cycle notation", open_pos)
    return Permutation(images)


def format_cycles(a: Permutation) -> str:
    """Canonical cycle form: cycles sorted by smallest moved point, fixed points
    omitted, the identity printed as ``()``."""
    cycles = a.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycles)
