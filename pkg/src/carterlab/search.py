"""Centralizers, normalizers and the center.

Groups up to ``ENUMERATION_LIMIT`` are filtered element by element; larger
groups go through a backtrack search over the stabilizer chain.  Both paths
are selectable through ``method`` so they can be checked against each other.
"""
from __future__ import annotations

from typing import Callable

from .errors import NotAMember
from .group import ENUMERATION_LIMIT, FiniteGroup, StabChain, Subgroup, _ensure_subgroup
from .perm import Permutation, as_perm, conj, cycles_of, mul

Partial = Callable[[list[int], list[int]], bool]


def _filter(G: FiniteGroup, test, seed: list[tuple]) -> Subgroup:
    """Subgroup of ``G`` of elements passing ``test`` (closed under products)."""
    table = G.table
    gens = [table.index[tuple(s)] for s in seed]
    found = table.closure(gens)
    for i, e in enumerate(table.elements):
        if i in found or not test(e):
            continue
        gens.append(i)
        found = table.closure(gens, start=found)
    return Subgroup.from_indices(G, found)


def backtrack(G: FiniteGroup, test, partial: Partial | None = None, seed=()) -> Subgroup:
    """The subgroup ``{g in G : test(g)}`` by search over the stabilizer chain.

    ``partial(points, images)`` may reject a branch once the images of the
    first few base points are fixed.  ``seed`` lists elements already known
    to pass.  The result is assembled stabilizer by stabilizer: at level ``i``
    one element is looked for per orbit of the part found so far.
    """
    chain = G.chain
    base, trans = chain.base, chain.transversals
    m = len(base)
    found = [tuple(s) for s in seed]

    def orbit_of(level: int) -> set[int]:
        # only found elements inside the level's stabilizer may be used
        fixed = base[:level]
        gens = [s for s in found if all(s[b] == b for b in fixed)]
        point = base[level]
        orb = {point}
        queue = [point]
        for q in queue:
            for s in gens:
                r = s[q]
                if r not in orb:
                    orb.add(r)
                    queue.append(r)
        return orb

    def dfs(k: int, q: tuple):
        if k == m:
            return q if test(q) else None
        for u in trans[k].values():
            q2 = mul(u, q)
            if partial is not None and not partial(base[:k + 1], [q2[b] for b in base[:k + 1]]):
                continue
            r = dfs(k + 1, q2)
            if r is not None:
                return r
        return None

    for i in range(m - 1, -1, -1):
        covered = orbit_of(i)
        for gamma in sorted(trans[i]):
            if gamma in covered:
                continue
            u = trans[i][gamma]
            if partial is not None and not partial(base[:i + 1], [u[b] for b in base[:i + 1]]):
                continue
            g = dfs(i + 1, u)
            if g is not None:
                found.append(g)
                covered = orbit_of(i)
    return Subgroup(G, [Permutation._trusted(g) for g in found], check=False)


def _use_backtrack(G: FiniteGroup, method: str) -> bool:
    if method == "auto":
        return G.order > ENUMERATION_LIMIT
    if method not in ("enumerate", "backtrack"):
        raise ValueError(f"unknown method {method!r}")
    return method == "backtrack"


def _cycle_partial(z: tuple) -> Partial:
    """Prune for elements commuting with ``z``: they map z-cycles onto z-cycles."""
    length = {}
    for c in cycles_of(z):
        for x in c:
            length[x] = len(c)

    def ok(points, images):
        fwd: dict[int, int] = {}
        back: dict[int, int] = {}
        for b, c in zip(points, images):
            if length.get(b, 1) != length.get(c, 1):
                return False
            x, y = b, c
            for _ in range(length.get(b, 1)):
                if fwd.get(x, y) != y or back.get(y, x) != x:
                    return False
                fwd[x] = y
                back[y] = x
                x, y = z[x], z[y]
        return True

    return ok


def _orbit_partial(gens: tuple) -> Partial:
    """Prune for elements normalizing a group: they permute its orbits."""
    n = len(gens[0]) if gens else 0
    label = list(range(n))
    for start in range(n):
        if label[start] != start:
            continue
        queue = [start]
        for q in queue:
            for s in gens:
                r = s[q]
                if label[r] == r and r != start:
                    label[r] = start
                    queue.append(r)
    size: dict[int, int] = {}
    for lab in label:
        size[lab] = size.get(lab, 0) + 1

    def ok(points, images):
        pairs = {}
        for b, c in zip(points, images):
            lb, lc = label[b], label[c]
            if size[lb] != size[lc]:
                return False
            if pairs.setdefault(lb, lc) != lc:
                return False
        return len(set(pairs.values())) == len(pairs)

    return ok


def centralizer(G: FiniteGroup, z, method: str = "auto") -> Subgroup:
    """``C_G(z)``; ``z`` must lie in ``G``."""
    z = as_perm(z, G.degree)
    if not G.contains(z):
        raise NotAMember(f"{z} is not an element of the group")
    zt = tuple(z)

    def test(g):
        return mul(g, zt) == mul(zt, g)

    seed = [zt] if not z.is_identity() else []
    if _use_backtrack(G, method):
        return backtrack(G, test, _cycle_partial(zt), seed=seed)
    return _filter(G, test, seed)


def centralizer_of_subgroup(G: FiniteGroup, H: FiniteGroup, method: str = "auto") -> Subgroup:
    """``C_G(H)``, the elements commuting with every generator of ``H``."""
    gens = [tuple(h) for h in H.generators if not h.is_identity()]

    def test(g):
        return all(mul(g, h) == mul(h, g) for h in gens)

    if _use_backtrack(G, method):
        if not gens:
            return Subgroup(G, G.generators, check=False)
        checks = [_cycle_partial(h) for h in gens]
        return backtrack(G, test, lambda p, i: all(c(p, i) for c in checks))
    return _filter(G, test, [])


def normalizer(G: FiniteGroup, H: FiniteGroup, method: str = "auto") -> Subgroup:
    """``N_G(H)``; every generator of ``H`` must lie in ``G``."""
    H = _ensure_subgroup(G, H)
    hgens = [tuple(h) for h in H.generators if not h.is_identity()]
    if not hgens:
        return Subgroup(G, G.generators, check=False)
    if _use_backtrack(G, method):
        chain = H.chain

        def test(g):
            return all(chain.contains(conj(h, g)) for h in hgens)

        return backtrack(G, test, _orbit_partial(tuple(hgens)), seed=hgens)
    members = H.element_set()

    def test(g):
        return all(conj(h, g) in members for h in hgens)

    return _filter(G, test, hgens)


def center(G: FiniteGroup) -> Subgroup:
    """``Z(G)``."""
    return centralizer_of_subgroup(G, G)


def is_normal(G: FiniteGroup, H: FiniteGroup) -> bool:
    """Whether ``H`` is normal in ``G`` (``H`` must be a subgroup)."""
    H = _ensure_subgroup(G, H)
    hgens = [tuple(h) for h in H.generators]
    return all(H.contains(conj(h, tuple(g))) for h in hgens for g in G.generators)


def normalizes(g, H: FiniteGroup) -> bool:
    g = tuple(g)
    return all(H.contains(conj(tuple(h), g)) for h in H.generators)


__all__ = [
    "StabChain", "backtrack", "center", "centralizer", "centralizer_of_subgroup",
    "is_normal", "normalizer", "normalizes",
]
