"""Commutator series and the predicates and subgroups built from them."""
from __future__ import annotations

from .group import FiniteGroup, Subgroup, _ensure_subgroup, prime_factors
from .perm import Permutation, conj, inv, is_identity, mul


def normal_closure(G: FiniteGroup, elements) -> Subgroup:
    """Smallest normal subgroup of ``G`` containing ``elements``."""
    gens: list[tuple] = []
    K = Subgroup(G, [], check=False)
    # redundant inputs are dropped so the generating set stays short
    for x in elements:
        x = tuple(x)
        if not is_identity(x) and not K.contains(x):
            gens.append(x)
            K = Subgroup(G, [Permutation._trusted(y) for y in gens], check=False)
    queue = list(gens)
    for x in queue:
        for g in G.generators:
            c = conj(x, tuple(g))
            if not K.contains(c):
                gens.append(c)
                queue.append(c)
                K = Subgroup(G, [Permutation._trusted(y) for y in gens], check=False)
    return K


def commutator(x: tuple, y: tuple) -> tuple:
    """``[x, y] = x^-1 y^-1 x y``."""
    return mul(mul(inv(x), inv(y)), mul(x, y))


def commutator_subgroup(G: FiniteGroup, A: FiniteGroup, B: FiniteGroup) -> Subgroup:
    """``[A, B]`` for subgroups ``A, B`` of ``G`` both normalized by ``G``."""
    comms = [commutator(tuple(a), tuple(b)) for a in A.generators for b in B.generators]
    return normal_closure(G, comms)


def derived_subgroup(G: FiniteGroup) -> Subgroup:
    return commutator_subgroup(G, G, G)


def derived_series(G: FiniteGroup) -> list[Subgroup]:
    """``G = G^(0) >= G^(1) >= ...`` stopping at the first repeat."""
    series = [_ensure_subgroup(G, G)]
    while True:
        top = series[-1]
        nxt = _as_sub(G, derived_subgroup(top))
        if nxt.order == top.order:
            return series
        series.append(nxt)


def lower_central_series(G: FiniteGroup) -> list[Subgroup]:
    """``G = gamma_1 >= gamma_2 = [G, G] >= ...`` stopping at the first repeat."""
    series = [_ensure_subgroup(G, G)]
    while True:
        top = series[-1]
        nxt = commutator_subgroup(G, top, G)
        if nxt.order == top.order:
            return series
        series.append(nxt)


def _as_sub(G: FiniteGroup, K: FiniteGroup) -> Subgroup:
    return Subgroup(G, K.generators, check=False)


def is_nilpotent(G: FiniteGroup) -> bool:
    return lower_central_series(G)[-1].order == 1


def is_soluble(G: FiniteGroup) -> bool:
    return derived_series(G)[-1].order == 1


def is_abelian(G: FiniteGroup) -> bool:
    gens = [tuple(g) for g in G.generators]
    return all(mul(a, b) == mul(b, a) for i, a in enumerate(gens) for b in gens[i + 1:])


def sylow_subgroup(G: FiniteGroup, p: int) -> Subgroup:
    """A Sylow ``p``-subgroup, grown inside successive normalizers."""
    table = G.table
    n = G.order
    target = 1
    while n % (target * p) == 0:
        target *= p
    orders = table.orders
    P = frozenset((0,))
    gens: list[int] = []
    while len(P) < target:
        N = _normalizer_indices(table, P, gens)
        x = next(i for i in sorted(N) if i not in P and _p_power(orders[i], p)
                 and _order_mod(table, i, P) == p)
        gens.append(x)
        P = table.extend(P, x)
    return Subgroup.from_indices(G, P)


def _p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _order_mod(table, i: int, sub: frozenset) -> int:
    k, j = 1, i
    while j not in sub:
        j = table.mul(j, i)
        k += 1
    return k


def _normalizer_indices(table, sub: frozenset, gens: list[int]) -> frozenset:
    elts, index = table.elements, table.index
    sgens = [elts[i] for i in gens]
    found = sub
    ngens = list(gens)
    for i, e in enumerate(elts):
        if i in found:
            continue
        if all(index[conj(s, e)] in sub for s in sgens):
            ngens.append(i)
            found = table.closure(ngens, start=found)
    return found


def core(G: FiniteGroup, H: FiniteGroup) -> Subgroup:
    """Largest normal subgroup of ``G`` inside ``H``."""
    table = G.table
    H = _ensure_subgroup(G, H)
    orbit, _ = table.orbit(H.indices)
    out = frozenset.intersection(*orbit)
    return Subgroup.from_indices(G, out)


def p_core(G: FiniteGroup, p: int) -> Subgroup:
    """``O_p(G)``, the intersection of all Sylow ``p``-subgroups."""
    return core(G, sylow_subgroup(G, p))


def fitting_subgroup(G: FiniteGroup) -> Subgroup:
    """``F(G)``, the product of the ``p``-cores over primes dividing ``|G|``."""
    gens = []
    for p in prime_factors(G.order):
        gens.extend(p_core(G, p).generators)
    if not gens:
        return G.trivial_subgroup() if not isinstance(G, Subgroup) else Subgroup(G, ())
    table = G.table
    idx = table.closure(table.index[tuple(g)] for g in gens)
    return Subgroup.from_indices(G, idx)
