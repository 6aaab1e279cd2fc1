"""Constructors for the permutation groups and Cayley tables used as test material."""
from __future__ import annotations

from itertools import product

from .group import FiniteGroup, generate
from .perm import Permutation, identity, mul

# -- permutation groups ------------------------------------------------------------


def symmetric(n: int) -> FiniteGroup:
    if n == 1:
        return generate([], 1)
    gens = [Permutation.from_cycles([[0, 1]], n)]
    if n > 2:
        gens.append(Permutation.from_cycles([list(range(n))], n))
    return generate(gens, n)


def alternating(n: int) -> FiniteGroup:
    if n < 3:
        return generate([], n)
    gens = [Permutation.from_cycles([[0, 1, i]], n) for i in range(2, n)]
    return generate(gens, n)


def cyclic(n: int) -> FiniteGroup:
    return generate([Permutation.from_cycles([list(range(n))], n)] if n > 1 else [], n)


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the ``n``-gon (order ``2n``) on ``n`` points, ``n >= 3``."""
    rot = Permutation.from_cycles([list(range(n))], n)
    ref = Permutation._trusted(tuple((-i) % n for i in range(n)))
    return generate([rot, ref], n)


def direct_product(*groups: FiniteGroup) -> FiniteGroup:
    """Direct product acting on the disjoint union of the point sets."""
    degree = sum(G.degree for G in groups)
    gens = []
    offset = 0
    for G in groups:
        for g in G.generators:
            imgs = list(range(degree))
            for i, x in enumerate(g):
                imgs[offset + i] = offset + x
            gens.append(Permutation._trusted(tuple(imgs)))
        offset += G.degree
    return generate(gens, degree)


def wreath_product(G: FiniteGroup, p: int) -> FiniteGroup:
    """``G wr C_p`` in its imprimitive action on ``p`` copies of the points of ``G``."""
    d = G.degree
    base = direct_product(*([G] * p))
    top = Permutation._trusted(tuple(((i // d + 1) % p) * d + i % d for i in range(p * d)))
    return generate(list(base.generators) + [top], p * d)


# -- Cayley tables (0-indexed, element 0 the identity) --------------------------------


def cayley_from_group(G: FiniteGroup) -> list[list[int]]:
    """Multiplication table of ``G`` in sorted element order."""
    table = G.table
    n = table.size
    return [[table.mul(a, b) for b in range(n)] for a in range(n)]


def cyclic_extension(base: list[list[int]], p: int, alpha: list[int], c: int) -> list[list[int]]:
    """The group ``<N, x>`` with ``x^p = c`` and ``x^-1 n x = alpha(n)``.

    Requires ``alpha`` to fix ``c`` and ``alpha^p`` to be conjugation by
    ``c``.  Element ``k * |N| + n`` stands for ``x^k n``.
    """
    m = len(base)
    powers = [list(range(m))]
    for _ in range(p):
        powers.append([alpha[i] for i in powers[-1]])
    out = []
    for a, n1 in product(range(p), range(m)):
        row = []
        for b, n2 in product(range(p), range(m)):
            # x^a n1 x^b n2 = x^(a+b) alpha^b(n1) n2
            rest = base[powers[b][n1]][n2]
            k = a + b
            if k >= p:
                k -= p
                rest = base[c][rest]
            row.append(k * m + rest)
        out.append(row)
    return out


def cyclic_table(n: int) -> list[list[int]]:
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def dihedral_table(n: int) -> list[list[int]]:
    """Dihedral group of order ``2n``: ``C_n`` extended by an inverting involution."""
    inversion = [(-i) % n for i in range(n)]
    return cyclic_extension(cyclic_table(n), 2, inversion, 0)


def dicyclic_table(n: int) -> list[list[int]]:
    """Dicyclic group of order ``4n`` (quaternion for ``n = 2``)."""
    inversion = [(-i) % (2 * n) for i in range(2 * n)]
    return cyclic_extension(cyclic_table(2 * n), 2, inversion, n)


def permutation_of_table(table: list[list[int]]) -> FiniteGroup:
    """Right regular representation of a 0-indexed table."""
    n = len(table)
    gens = [Permutation(tuple(table[a][g] for a in range(n))) for g in range(1, n)]
    return generate(gens, n)


__all__ = [
    "alternating", "cayley_from_group", "cyclic", "cyclic_extension", "cyclic_table", "dicyclic_table",
    "dihedral", "dihedral_table", "direct_product", "permutation_of_table", "symmetric", "wreath_product",
]
