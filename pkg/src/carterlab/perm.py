"""Permutations of ``{0, ..., n-1}``.

A :class:`Permutation` is a tuple of images, so it hashes and compares like
one.  Products are read left to right: ``p * q`` applies ``p`` first, then
``q``, and conjugation is ``x ** g == g**-1 * x * g``.  Cycle notation at the
text boundary is 1-indexed.
"""
from __future__ import annotations

import math
import re
from typing import Iterable, Sequence

from .errors import MalformedPermutation, MixedDegree, ParseError

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def mul(a: tuple, b: tuple) -> tuple:
    """Plain-tuple product, ``a`` then ``b``."""
    return tuple(map(b.__getitem__, a))


def inv(a: tuple) -> tuple:
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def conj(x: tuple, g: tuple) -> tuple:
    """``g^-1 x g`` on plain tuples: maps ``i^g`` to ``(i^x)^g``."""
    out = [0] * len(x)
    for i, j in enumerate(x):
        out[g[i]] = g[j]
    return tuple(out)


def identity(n: int) -> tuple:
    return tuple(range(n))


def is_identity(a: Sequence[int]) -> bool:
    return all(i == j for i, j in enumerate(a))


def perm_order(a: Sequence[int]) -> int:
    seen = [False] * len(a)
    order = 1
    for start in range(len(a)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = a[j]
            length += 1
        order = order * length // math.gcd(order, length)
    return order


def power(a: tuple, k: int) -> tuple:
    if k < 0:
        a, k = inv(a), -k
    result = identity(len(a))
    base = a
    while k:
        if k & 1:
            result = mul(result, base)
        base = mul(base, base)
        k >>= 1
    return result


def cycles_of(a: Sequence[int]) -> list[tuple[int, ...]]:
    """Non-trivial cycles, each starting at its smallest point (0-indexed)."""
    seen = set()
    out = []
    for start in range(len(a)):
        if start in seen or a[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        j = a[start]
        while j != start:
            cyc.append(j)
            seen.add(j)
            j = a[j]
        out.append(tuple(cyc))
    return out


def format_cycles(a: Sequence[int]) -> str:
    """1-indexed cycle notation, ``()`` for the identity."""
    cyc = cycles_of(a)
    if not cyc:
        return "()"
    return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cyc)


class Permutation(tuple):
    """An immutable bijection of ``range(degree)`` stored as its image tuple."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int] = ()):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise MalformedPermutation(f"{images!r} is not a bijection of 0..{len(images) - 1}")
        return tuple.__new__(cls, images)

    @classmethod
    def _trusted(cls, images: tuple) -> "Permutation":
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """Build from 0-indexed cycles; later cycles act after earlier ones."""
        result = list(range(degree))
        for c in cycles:
            c = list(c)
            if len(set(c)) != len(c):
                raise MalformedPermutation(f"repeated point in cycle {c}")
            if any(not 0 <= x < degree for x in c):
                raise MalformedPermutation(f"cycle {c} leaves 0..{degree - 1}")
            step = list(range(degree))
            for x, y in zip(c, c[1:] + c[:1]):
                step[x] = y
            result = [step[i] for i in result]
        return cls._trusted(tuple(result))

    @classmethod
    def parse(cls, text: str, degree: int) -> "Permutation":
        """Parse 1-indexed cycle notation such as ``"(1 2)(3 4)"``."""
        stripped = text.strip()
        if not stripped or stripped == "()":
            return cls.identity(degree)
        pos = 0
        cycles = []
        for m in _CYCLE_RE.finditer(stripped):
            gap = stripped[pos:m.start()]
            if gap.strip():
                raise ParseError(f"unexpected text {gap.strip()!r}", column=pos + 1)
            body = m.group(1).replace(",", " ").split()
            try:
                pts = [int(x) - 1 for x in body]
            except ValueError:
                raise ParseError(f"non-integer point in {m.group(0)!r}", column=m.start() + 1) from None
            if any(p < 0 or p >= degree for p in pts):
                raise MalformedPermutation(f"point out of range 1..{degree} in {m.group(0)!r}")
            if pts:
                cycles.append(pts)
            pos = m.end()
        if stripped[pos:].strip():
            raise ParseError(f"unexpected text {stripped[pos:].strip()!r}", column=pos + 1)
        return cls.from_cycles(cycles, degree)

    @property
    def degree(self) -> int:
        return len(self)

    @property
    def images(self) -> tuple:
        return tuple(self)

    def __mul__(self, other):
        if not isinstance(other, tuple):
            return NotImplemented
        if len(other) != len(self):
            raise MixedDegree(f"degrees {len(self)} and {len(other)} differ")
        return Permutation._trusted(mul(self, other))

    __rmul__ = None

    def __pow__(self, k: int) -> "Permutation":
        return Permutation._trusted(power(self, k))

    def __xor__(self, g) -> "Permutation":
        """``x ^ g`` is the conjugate ``g^-1 x g``."""
        if len(g) != len(self):
            raise MixedDegree(f"degrees {len(self)} and {len(g)} differ")
        return Permutation._trusted(conj(self, g))

    def inverse(self) -> "Permutation":
        return Permutation._trusted(inv(self))

    def __invert__(self) -> "Permutation":
        return self.inverse()

    def __call__(self, point: int) -> int:
        return self[point]

    def order(self) -> int:
        return perm_order(self)

    def is_identity(self) -> bool:
        return is_identity(self)

    def cycles(self) -> list[tuple[int, ...]]:
        return cycles_of(self)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, j in enumerate(self) if i != j)

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Permutation.parse({format_cycles(self)!r}, {len(self)})"


def as_perm(p, degree: int | None = None) -> Permutation:
    """Coerce a Permutation, image sequence or cycle string."""
    if isinstance(p, Permutation):
        out = p
    elif isinstance(p, str):
        if degree is None:
            raise ValueError("degree is required to parse cycle notation")
        out = Permutation.parse(p, degree)
    else:
        out = Permutation(p)
    if degree is not None and len(out) != degree:
        raise MixedDegree(f"permutation of degree {len(out)} where {degree} was expected")
    return out
