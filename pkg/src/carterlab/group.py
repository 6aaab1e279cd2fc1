"""Permutation groups: stabilizer chains, subgroups and the element table.

Every group keeps its generators and lazily builds a deterministic
Schreier-Sims stabilizer chain.  Groups small enough to list (see
``TABLE_LIMIT``) also get an :class:`ElementTable`, which numbers the
elements in lexicographic order so that subgroup searches can work with
frozensets of small integers.
"""
from __future__ import annotations

import random
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import GroupTooLarge, MixedDegree, NotASubgroup
from .perm import Permutation, as_perm, conj, identity, inv, is_identity, mul, perm_order

# Groups up to this order may be listed element by element.
TABLE_LIMIT = 50_000
# Centralizers and normalizers filter the element list up to this order
# and switch to backtrack search above it.
ENUMERATION_LIMIT = 10_000
# element tables up to this size also keep a full multiplication table
MUL_TABLE_LIMIT = 512


class StabChain:
    """Base, strong generators and Schreier transversals.

    ``transversals[i]`` maps each point ``q`` of the orbit of ``base[i]``
    under the ``i``-th stabilizer to an element sending ``base[i]`` to ``q``.
    """

    def __init__(self, generators: Sequence[tuple], degree: int):
        self.degree = degree
        self.base: list[int] = []
        self.strong: list[list[tuple]] = []
        self.transversals: list[dict[int, tuple]] = []
        self._inverses: list[dict[int, tuple]] = []
        self._build([tuple(g) for g in generators])

    def _orbit(self, level: int) -> None:
        b = self.base[level]
        gens = self.strong[level]
        trans = {b: identity(self.degree)}
        queue = [b]
        for pt in queue:
            u = trans[pt]
            for s in gens:
                q = s[pt]
                if q not in trans:
                    trans[q] = mul(u, s)
                    queue.append(q)
        self.transversals[level] = trans
        self._inverses[level] = {}

    def _u_inv(self, level: int, pt: int) -> tuple:
        cache = self._inverses[level]
        u = cache.get(pt)
        if u is None:
            u = cache[pt] = inv(self.transversals[level][pt])
        return u

    def _add_level(self, point: int) -> None:
        self.base.append(point)
        self.strong.append([])
        self.transversals.append({point: identity(self.degree)})
        self._inverses.append({})

    def _build(self, gens: list[tuple]) -> None:
        seen = set()
        gens = [g for g in gens if not is_identity(g) and not (g in seen or seen.add(g))]
        if not gens:
            return
        for g in gens:
            if all(g[b] == b for b in self.base):
                self._add_level(next(i for i, j in enumerate(g) if i != j))
        for lvl in range(len(self.base)):
            fixed = self.base[:lvl]
            self.strong[lvl] = [g for g in gens if all(g[b] == b for b in fixed)]
            self._orbit(lvl)
        i = len(self.base) - 1
        while i >= 0:
            i = self._check_level(i)

    def _check_level(self, i: int) -> int:
        """Sift every Schreier generator of level ``i``; return next level."""
        trans = self.transversals[i]
        for beta, u in list(trans.items()):
            for s in list(self.strong[i]):
                us = mul(u, s)
                v = trans[s[beta]]
                if us == v:
                    continue
                h, j = self.sift(mul(us, inv(v)), start=i + 1)
                if j < len(self.base) or not is_identity(h):
                    if j == len(self.base):
                        self._add_level(next(p for p, q in enumerate(h) if p != q))
                    for lvl in range(i + 1, j + 1):
                        self.strong[lvl].append(h)
                        self._orbit(lvl)
                    return j
        return i - 1

    def sift(self, g: tuple, start: int = 0) -> tuple[tuple, int]:
        for lvl in range(start, len(self.base)):
            beta = g[self.base[lvl]]
            if beta not in self.transversals[lvl]:
                return g, lvl
            g = mul(g, self._u_inv(lvl, beta))
        return g, len(self.base)

    def contains(self, g: tuple) -> bool:
        h, j = self.sift(g)
        return j == len(self.base) and is_identity(h)

    @property
    def order(self) -> int:
        n = 1
        for t in self.transversals:
            n *= len(t)
        return n

    def iter_elements(self) -> Iterator[tuple]:
        """Every element exactly once, as ``u_m ... u_1 u_0``."""
        elems = [identity(self.degree)]
        for lvl in range(len(self.base) - 1, -1, -1):
            us = list(self.transversals[lvl].values())
            elems = [mul(e, u) for e in elems for u in us]
        return iter(elems)

    def random_element(self, rng: random.Random) -> tuple:
        g = identity(self.degree)
        for lvl in range(len(self.base) - 1, -1, -1):
            us = self.transversals[lvl]
            g = mul(g, us[rng.choice(sorted(us))])
        return g


class ElementTable:
    """All elements of a group, numbered in lexicographic order.

    Index 0 is the identity.  Subgroups are handled as frozensets of indices.
    """

    def __init__(self, group: "FiniteGroup"):
        self.degree = group.degree
        self.elements: list[tuple] = sorted(group.chain.iter_elements())
        self.index: dict[tuple, int] = {e: i for i, e in enumerate(self.elements)}
        self.size = len(self.elements)
        self.generators = [self.index[tuple(g)] for g in group.generators if not is_identity(g)]

    def mul(self, i: int, j: int) -> int:
        if self.size <= MUL_TABLE_LIMIT:
            return self._mul_table[i][j]
        return self.index[mul(self.elements[i], self.elements[j])]

    @cached_property
    def _mul_table(self) -> list[list[int]]:
        index, elts = self.index, self.elements
        return [[index[mul(a, b)] for b in elts] for a in elts]

    def inv(self, i: int) -> int:
        return self.index[inv(self.elements[i])]

    def conj(self, i: int, g: int) -> int:
        """Index of ``g^-1 x g`` where ``x`` has index ``i``."""
        return self.index[conj(self.elements[i], self.elements[g])]

    def power(self, i: int, k: int) -> int:
        e = self.elements[i]
        out = identity(self.degree)
        for _ in range(k % self.orders[i]):
            out = mul(out, e)
        return self.index[out]

    @cached_property
    def orders(self) -> list[int]:
        return [perm_order(e) for e in self.elements]

    @cached_property
    def conj_maps(self) -> list[list[int]]:
        """For each generator, the permutation of indices it induces by conjugation."""
        index, elts = self.index, self.elements
        return [[index[conj(e, elts[g])] for e in elts] for g in self.generators]

    def conj_set(self, s: Iterable[int], g: int) -> frozenset:
        gp = self.elements[g]
        index, elts = self.index, self.elements
        return frozenset(index[conj(elts[i], gp)] for i in s)

    def closure(self, gens: Iterable[int], start: Iterable[int] = (0,)) -> frozenset:
        """Subgroup generated by ``gens``.

        ``start`` may name a subgroup already known to lie in the result;
        ``gens`` must then still generate all of it.
        """
        seen = set(start)
        seen.add(0)
        index, elts = self.index, self.elements
        gens = [g for g in dict.fromkeys(gens) if g != 0]
        if len(seen) > 1:
            # one pass with every generator: the start set is not generated
            # by any prefix of gens, so nothing may be skipped
            return frozenset(self._right_closure(seen, [elts[g] for g in gens]))
        gen_perms: list[tuple] = []
        # seen is always <gen_perms>, so generators already inside are skipped
        # and long generator lists (whole conjugacy classes) stay cheap
        for g in gens:
            if g in seen:
                continue
            gen_perms.append(elts[g])
            self._right_closure(seen, gen_perms)
        return frozenset(seen)

    def _right_closure(self, seen: set, gen_perms: list[tuple]) -> set:
        index, elts = self.index, self.elements
        queue = list(seen)
        for i in queue:
            e = elts[i]
            for gp in gen_perms:
                j = index[mul(e, gp)]
                if j not in seen:
                    seen.add(j)
                    queue.append(j)
        return seen

    def extend(self, sub: frozenset, x: int) -> frozenset:
        """``<sub, x>`` for ``x`` normalizing ``sub``: the union of cosets ``x^i sub``."""
        out = set(sub)
        index, elts = self.index, self.elements
        xp = elts[x]
        layer = list(sub)
        while True:
            layer = [index[mul(xp, elts[i])] for i in layer]
            if layer[0] in out:
                return frozenset(out)
            out.update(layer)

    def generators_of(self, sub: frozenset) -> list[int]:
        """A small generating set, chosen greedily in index order."""
        gens: list[int] = []
        current = frozenset((0,))
        # elements of large order first keeps the list short
        for i in sorted(sub, key=lambda i: (-self.orders[i], i)):
            if i not in current:
                gens.append(i)
                current = self.closure(gens)
                if len(current) == len(sub):
                    break
        return sorted(gens)

    def cached_generators(self, sub: frozenset) -> list[int]:
        cache = self.__dict__.setdefault("_gen_cache", {})
        gens = cache.get(sub)
        if gens is None:
            gens = cache[sub] = self.generators_of(sub)
        return gens

    def orbit(self, sub: frozenset) -> tuple[list[frozenset], dict[frozenset, int]]:
        """Conjugation orbit of a subgroup with a transversal of conjugating elements."""
        maps = self.conj_maps
        trans = {sub: 0}
        queue = [sub]
        for s in queue:
            t = trans[s]
            for g, m in zip(self.generators, maps):
                img = frozenset(map(m.__getitem__, s))
                if img not in trans:
                    trans[img] = self.mul(t, g)
                    queue.append(img)
        return queue, trans

    def stabilizer(self, sub: frozenset, orbit: list[frozenset] | None = None,
                   trans: dict[frozenset, int] | None = None) -> frozenset:
        """Normalizer of ``sub`` from Schreier generators of its conjugation orbit."""
        if orbit is None:
            orbit, trans = self.orbit(sub)
        target = self.size // len(orbit)
        found = sub
        if len(found) == target:
            return found
        gens = self.generators_of(sub)
        maps = self.conj_maps
        for s in orbit:
            t = trans[s]
            for g, m in zip(self.generators, maps):
                img = frozenset(map(m.__getitem__, s))
                sg = self.mul(self.mul(t, g), self.inv(trans[img]))
                if sg not in found:
                    gens.append(sg)
                    found = self.closure(gens, start=found)
                    if len(found) == target:
                        return found
        return found

    def is_nilpotent_set(self, sub: frozenset) -> bool:
        """Nilpotent iff, for each prime, the p-elements number exactly |sub|_p."""
        n = len(sub)
        orders = self.orders
        for p in prime_factors(n):
            pa = 1
            while n % (pa * p) == 0:
                pa *= p
            count = sum(1 for i in sub if _is_power_of(orders[i], p))
            if count != pa:
                return False
        return True


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FiniteGroup:
    """A permutation group given by generators on ``degree`` points."""

    def __init__(self, generators: Iterable = (), degree: int | None = None):
        gens = []
        for g in generators:
            gens.append(as_perm(g, degree))
        if degree is None:
            if not gens:
                raise ValueError("degree is required for an empty generating set")
            degree = len(gens[0])
        if degree < 1:
            raise ValueError("degree must be positive")
        for g in gens:
            if len(g) != degree:
                raise MixedDegree(f"generator of degree {len(g)} in a group of degree {degree}")
        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self._element_set: frozenset | None = None

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators) or "()"
        return f"<{type(self).__name__} of order {self.order} on {self.degree} points: {gens}>"

    @cached_property
    def chain(self) -> StabChain:
        return StabChain(self.generators, self.degree)

    @cached_property
    def order(self) -> int:
        if self._element_set is not None:
            return len(self._element_set)
        return self.chain.order

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def is_trivial(self) -> bool:
        return all(g.is_identity() for g in self.generators)

    def contains(self, p) -> bool:
        if len(p) != self.degree:
            raise MixedDegree(f"permutation of degree {len(p)} against group of degree {self.degree}")
        if self._element_set is not None:
            return tuple(p) in self._element_set
        return self.chain.contains(tuple(p))

    __contains__ = contains

    @cached_property
    def table(self) -> ElementTable:
        if self.order > TABLE_LIMIT:
            raise GroupTooLarge(f"order {self.order} exceeds the element-table limit {TABLE_LIMIT}")
        return ElementTable(self)

    def element_set(self) -> frozenset:
        """All elements as a frozenset of image tuples."""
        if self._element_set is None:
            if self.order > TABLE_LIMIT:
                raise GroupTooLarge(f"order {self.order} exceeds the element-table limit {TABLE_LIMIT}")
            self._element_set = frozenset(self.chain.iter_elements())
        return self._element_set

    def elements(self) -> list[Permutation]:
        return [Permutation._trusted(e) for e in self.table.elements]

    def random_element(self, rng: random.Random | None = None) -> Permutation:
        rng = rng or random.Random()
        return Permutation._trusted(self.chain.random_element(rng))

    def subgroup(self, generators: Iterable) -> "Subgroup":
        return Subgroup(self, generators)

    def whole(self) -> "Subgroup":
        """This group viewed as a subgroup of itself."""
        return Subgroup(self, self.generators)

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, ())

    def is_subgroup_of(self, other: "FiniteGroup") -> bool:
        return self.degree == other.degree and all(other.contains(g) for g in self.generators)

    def same_group(self, other: "FiniteGroup") -> bool:
        return self.order == other.order and self.is_subgroup_of(other)

    def root(self) -> "FiniteGroup":
        return self

    def sorted_generator_words(self) -> list[str]:
        return sorted(str(g) for g in self.generators if not g.is_identity())


class Subgroup(FiniteGroup):
    """A subgroup handle: generators inside a parent group.

    Handles built by the lattice code also carry ``indices``, the frozenset
    of parent-table indices of their elements.
    """

    def __init__(self, parent: FiniteGroup, generators: Iterable = (), *, check: bool = True):
        super().__init__(generators, parent.degree)
        self.parent = parent
        if check:
            for g in self.generators:
                if not parent.contains(g):
                    raise NotASubgroup(f"{g} is not an element of the parent group")

    @classmethod
    def from_indices(cls, parent: FiniteGroup, indices: frozenset) -> "Subgroup":
        table = parent.table
        gens = [Permutation._trusted(table.elements[i]) for i in table.generators_of(indices)]
        sub = cls(parent, gens, check=False)
        sub.__dict__["indices"] = frozenset(indices)
        sub.__dict__["order"] = len(indices)
        return sub

    @cached_property
    def indices(self) -> frozenset:
        table = self.parent.table
        return table.closure(table.index[tuple(g)] for g in self.generators)

    def contains(self, p) -> bool:
        if "indices" in self.__dict__ and "table" in self.parent.__dict__:
            if len(p) != self.degree:
                raise MixedDegree(f"permutation of degree {len(p)} against group of degree {self.degree}")
            i = self.parent.table.index.get(tuple(p))
            return i is not None and i in self.indices
        return super().contains(p)

    __contains__ = contains

    def root(self) -> FiniteGroup:
        g = self.parent
        while isinstance(g, Subgroup):
            g = g.parent
        return g

    def sorted_elements_key(self) -> tuple:
        """Lexicographically sorted element list, the global tie-break key."""
        return tuple(sorted(self.element_set()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.same_group(other)

    def __hash__(self) -> int:
        return hash((self.degree, self.order))


def generate(perms: Iterable = (), degree: int | None = None) -> FiniteGroup:
    """The group generated by ``perms`` (``degree`` is needed when empty)."""
    return FiniteGroup(perms, degree)


def _ensure_subgroup(G: FiniteGroup, H: FiniteGroup) -> Subgroup:
    if H.degree != G.degree:
        raise MixedDegree(f"degrees {H.degree} and {G.degree} differ")
    for g in H.generators:
        if not G.contains(g):
            raise NotASubgroup(f"{g} is not an element of the ambient group")
    if isinstance(H, Subgroup) and H.parent is G:
        return H
    sub = Subgroup(G, H.generators, check=False)
    if "order" in H.__dict__:
        sub.__dict__["order"] = H.order
    return sub


def index_set(G: FiniteGroup, H: FiniteGroup) -> frozenset:
    """Indices in ``G.table`` of the elements of ``H``."""
    H = _ensure_subgroup(G, H)
    return H.indices
