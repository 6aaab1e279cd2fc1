"""All soluble groups of small order, up to isomorphism, as Cayley tables.

Every soluble group ``G`` of order ``n`` has a normal subgroup ``N`` of prime
index ``p``; picking ``x`` outside ``N`` gives ``G = <N, x>`` with ``x^p = c``
in ``N`` and conjugation by ``x`` an automorphism ``alpha`` of ``N`` that
fixes ``c`` and whose ``p``-th power is conjugation by ``c``.  Running over
all such data for all soluble groups of order ``n/p`` yields every soluble
group of order ``n``, and nothing else.  Below order 60 every group is
soluble.  Duplicates are removed with an explicit isomorphism test.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache

from .builders import cyclic_extension

Table = list[list[int]]


def _prime_divisors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _inverse(t: Table) -> list[int]:
    n = len(t)
    inv = [0] * n
    for a in range(n):
        inv[a] = t[a].index(0)
    return inv


def _orders(t: Table) -> list[int]:
    out = []
    for a in range(len(t)):
        k, x = 1, a
        while x != 0:
            x = t[x][a]
            k += 1
        out.append(k)
    return out


def _closure(t: Table, gens: list[int]) -> set[int]:
    seen = {0}
    queue = [0]
    for a in queue:
        for g in gens:
            b = t[a][g]
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return seen


def _generating_set(t: Table) -> list[int]:
    orders = _orders(t)
    gens: list[int] = []
    span = {0}
    for a in sorted(range(len(t)), key=lambda a: (-orders[a], a)):
        if a not in span:
            gens.append(a)
            span = _closure(t, gens)
            if len(span) == len(t):
                break
    return gens


def _extend_map(t1: Table, t2: Table, gens: list[int], images: list[int]) -> dict[int, int] | None:
    """The homomorphism on ``<gens>`` with ``gens[i] -> images[i]``, or ``None`` if inconsistent."""
    phi = {0: 0}
    queue = [0]
    for a in queue:
        fa = phi[a]
        for g, h in zip(gens, images):
            b = t1[a][g]
            fb = t2[fa][h]
            got = phi.get(b)
            if got is None:
                phi[b] = fb
                queue.append(b)
            elif got != fb:
                return None
    return phi


def is_isomorphic(t1: Table, t2: Table) -> bool:
    """Brute-force isomorphism test, generator by generator."""
    if len(t1) != len(t2) or invariants(t1) != invariants(t2):
        return False
    n = len(t1)
    gens = _generating_set(t1)
    o1, o2 = _orders(t1), _orders(t2)

    def search(i: int, images: list[int]) -> bool:
        if i == len(gens):
            phi = _extend_map(t1, t2, gens, images)
            return phi is not None and len(set(phi.values())) == n
        for h in range(n):
            if o2[h] != o1[gens[i]]:
                continue
            cand = images + [h]
            phi = _extend_map(t1, t2, gens[:i + 1], cand)
            if phi is None or len(set(phi.values())) != len(phi):
                continue
            if search(i + 1, cand):
                return True
        return False

    return search(0, [])


def _center_size(t: Table) -> int:
    n = len(t)
    return sum(1 for a in range(n) if all(t[a][b] == t[b][a] for b in range(n)))


def _derived_size(t: Table) -> int:
    inv = _inverse(t)
    comms = {t[t[inv[a]][inv[b]]][t[a][b]] for a in range(len(t)) for b in range(len(t))}
    return len(_closure(t, sorted(comms)))


@lru_cache(maxsize=None)
def _invariants_cached(key: tuple) -> tuple:
    t = [list(r) for r in key]
    orders = _orders(t)
    n = len(t)
    # (order, centralizer size) pairs refine the element-order statistics
    cent = Counter((orders[a], sum(1 for b in range(n) if t[a][b] == t[b][a])) for a in range(n))
    sq = Counter(orders[t[a][a]] for a in range(n))
    return (n, tuple(sorted(cent.items())), tuple(sorted(sq.items())), _derived_size(t))


def invariants(t: Table) -> tuple:
    return _invariants_cached(tuple(tuple(r) for r in t))


def automorphisms(t: Table) -> list[list[int]]:
    """Every automorphism, as the list of images of all elements."""
    n = len(t)
    gens = _generating_set(t)
    orders = _orders(t)
    out = []

    def search(i: int, images: list[int]) -> None:
        if i == len(gens):
            phi = _extend_map(t, t, gens, images)
            if phi is not None and len(set(phi.values())) == n:
                out.append([phi[a] for a in range(n)])
            return
        for h in range(n):
            if orders[h] != orders[gens[i]]:
                continue
            cand = images + [h]
            phi = _extend_map(t, t, gens[:i + 1], cand)
            if phi is None or len(set(phi.values())) != len(phi):
                continue
            search(i + 1, cand)

    search(0, [])
    return out


def _power_map(alpha: list[int], p: int) -> list[int]:
    out = list(range(len(alpha)))
    for _ in range(p):
        out = [alpha[i] for i in out]
    return out


def _automorphism_class_reps(t: Table) -> list[list[int]]:
    """One automorphism from each conjugacy class of ``Aut(N)``.

    Conjugate automorphisms (with ``c`` moved along) give isomorphic
    extensions, so class representatives suffice.
    """
    from .group import generate
    from .lattice import element_classes
    from .perm import Permutation

    auts = automorphisms(t)
    m = len(t)
    if len(auts) == 1:
        return auts
    gens: list[Permutation] = []
    A = generate(gens, m)
    for a in auts:
        if not A.contains(a):
            gens.append(Permutation(tuple(a)))
            A = generate(gens, m)
    table = A.table
    return [list(table.elements[cls[0]]) for cls in element_classes(table)]


@lru_cache(maxsize=None)
def _groups_of_order(n: int) -> tuple:
    if n == 1:
        return (((0,),),)
    found: list[Table] = []
    for p in _prime_divisors(n):
        for base_key in _groups_of_order(n // p):
            base = [list(r) for r in base_key]
            inv = _inverse(base)
            m = len(base)
            for alpha in _automorphism_class_reps(base):
                ap = _power_map(alpha, p)
                for c in range(m):
                    if alpha[c] != c:
                        continue
                    # alpha^p must be conjugation by c
                    if any(ap[a] != base[base[inv[c]][a]][c] for a in range(m)):
                        continue
                    cand = cyclic_extension(base, p, alpha, c)
                    if not any(is_isomorphic(cand, f) for f in found):
                        found.append(cand)
    found.sort(key=invariants)
    return tuple(tuple(tuple(r) for r in t) for t in found)


def soluble_groups_of_order(n: int) -> list[Table]:
    """Representatives of the isomorphism classes of soluble groups of order ``n``.

    Practical up to order 63 and for most orders below 100; orders with a
    large 2-part (64, 96) are out of reach of the brute-force automorphism
    enumeration.
    """
    return [[list(r) for r in t] for t in _groups_of_order(n)]


__all__ = ["automorphisms", "soluble_groups_of_order", "invariants", "is_isomorphic"]
