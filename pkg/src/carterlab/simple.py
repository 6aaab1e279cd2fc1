"""Naming non-abelian simple composition factors of order at most 10**4.

Every such order belongs to exactly one simple group, so the order picks a
candidate name; the multiset of element orders then has to match the
candidate's, otherwise the factor is reported as unidentified.
"""
from __future__ import annotations

import math
from collections import Counter
from functools import lru_cache
from typing import Callable

from .perm import Permutation, perm_order

IDENTIFY_LIMIT = 10_000

# order -> (label, fingerprint source)
_SIMPLE = {
    60: ("Alt_5", ("alt", 5)),
    168: ("PSL(2,7)", ("psl2", 7)),
    360: ("Alt_6", ("alt", 6)),
    504: ("PSL(2,8)", ("psl2", 8)),
    660: ("PSL(2,11)", ("psl2", 11)),
    1092: ("PSL(2,13)", ("psl2", 13)),
    2448: ("PSL(2,17)", ("psl2", 17)),
    2520: ("Alt_7", ("alt", 7)),
    3420: ("PSL(2,19)", ("psl2", 19)),
    4080: ("PSL(2,16)", ("psl2", 16)),
    5616: ("PSL(3,3)", ("psl33", None)),
    6048: ("PSU(3,3)", None),
    7800: ("PSL(2,25)", ("psl2", 25)),
    7920: ("M_11", ("m11", None)),
    9828: ("PSL(2,27)", ("psl2", 27)),
}


def psl2_element_orders(q: int) -> Counter:
    """Element-order multiset of PSL(2, q).

    The identity, ``q^2 - 1`` unipotent elements of order ``p``, and the
    non-identity elements of ``q(q+1)/2`` split tori (cyclic of order
    ``(q-1)/d``) and ``q(q-1)/2`` non-split tori (cyclic of order
    ``(q+1)/d``), ``d = gcd(2, q-1)``; distinct tori meet trivially.
    """
    p = min(f for f in range(2, q + 1) if q % f == 0)
    d = math.gcd(2, q - 1)
    counts: Counter = Counter({1: 1, p: q * q - 1})
    for m, ntori in (((q - 1) // d, q * (q + 1) // 2), ((q + 1) // d, q * (q - 1) // 2)):
        for k in range(2, m + 1):
            if m % k == 0:
                counts[k] += ntori * _phi(k)
    return counts


def _phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def alternating_element_orders(n: int) -> Counter:
    """Element orders of Alt(n) from its cycle types."""
    counts: Counter = Counter()
    for parts in _partitions(n):
        if sum(len_ - 1 for len_ in parts) % 2:
            continue
        size = math.factorial(n)
        for length, mult in Counter(parts).items():
            size //= length ** mult * math.factorial(mult)
        order = math.lcm(*parts)
        counts[order] += size
    return counts


def _partitions(n: int, largest: int | None = None):
    if largest is None:
        largest = n
    if n == 0:
        yield []
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield [k] + rest


def _orders_of_group(gens, degree) -> Counter:
    from .group import generate
    G = generate([Permutation(g) for g in gens], degree)
    return Counter(perm_order(e) for e in G.chain.iter_elements())


def psl33_generators() -> list[tuple]:
    """SL(3,3) generators acting on the 13 points of the projective plane over GF(3)."""
    points = []
    for v in ((a, b, c) for a in range(3) for b in range(3) for c in range(3)):
        if v == (0, 0, 0):
            continue
        lead = next(x for x in v if x)
        inv = 1 if lead == 1 else 2
        norm = tuple(x * inv % 3 for x in v)
        if norm not in points:
            points.append(norm)
    index = {p: i for i, p in enumerate(points)}

    def act(m):
        out = []
        for v in points:
            w = tuple(sum(v[i] * m[i][j] for i in range(3)) % 3 for j in range(3))
            lead = next(x for x in w if x)
            inv = 1 if lead == 1 else 2
            out.append(index[tuple(x * inv % 3 for x in w)])
        return tuple(out)

    e12 = ((1, 1, 0), (0, 1, 0), (0, 0, 1))
    cyc = ((0, 1, 0), (0, 0, 1), (1, 0, 0))
    return [act(e12), act(cyc)]


_M11 = ["(1 2 3 4 5 6 7 8 9 10 11)", "(3 7 11 8)(4 10 5 6)"]


@lru_cache(maxsize=None)
def reference_element_orders(order: int) -> Counter | None:
    entry = _SIMPLE.get(order)
    if entry is None or entry[1] is None:
        return None
    kind, arg = entry[1]
    if kind == "alt":
        return alternating_element_orders(arg)
    if kind == "psl2":
        return psl2_element_orders(arg)
    if kind == "psl33":
        return _orders_of_group(psl33_generators(), 13)
    if kind == "m11":
        return _orders_of_group([Permutation.parse(s, 11) for s in _M11], 11)
    return None


def identify_simple(order: int, element_orders: Callable[[], Counter]) -> str:
    """Label for a non-abelian simple factor of the given order."""
    entry = _SIMPLE.get(order)
    if order > IDENTIFY_LIMIT or entry is None:
        return f"unidentified-simple-{order}"
    ref = reference_element_orders(order)
    if ref is not None and Counter(element_orders()) != ref:
        return f"unidentified-simple-{order}"
    return entry[0]
