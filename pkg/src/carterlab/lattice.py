"""Subgroup lattice work at desk scale.

Subgroups are enumerated up to conjugacy by cyclic extension: every soluble
subgroup is reached from the trivial group by repeatedly adjoining an
element that normalizes the current subgroup and has prime order modulo it.
Non-soluble subgroups are reached the same way from their perfect residuals,
which are collected first as residuals of two-generator subgroups.

All representatives are canonical: the conjugate whose sorted element list
is lexicographically least.  Element indices in an :class:`ElementTable`
follow lexicographic order, so comparing sorted index tuples does the job.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .errors import AbelianFactor, GroupTooLarge, MixedDegree, NotASubgroup, NotMinimalNormal, NotNormal
from .group import ElementTable, FiniteGroup, Subgroup, _ensure_subgroup, generate
from .perm import Permutation, conj, mul

DEFAULT_SUBGROUP_LIMIT = 400
NORMAL_SEARCH_LIMIT = 10_000


@dataclass(frozen=True)
class SubgroupClass:
    representative: Subgroup
    class_size: int

    @property
    def order(self) -> int:
        return self.representative.order

    def conjugates(self) -> list[Subgroup]:
        """Every member of the class, in canonical order."""
        G = self.representative.parent
        orbit, _ = G.table.orbit(self.representative.indices)
        return [Subgroup.from_indices(G, s) for s in sorted(orbit, key=_key)]


@dataclass(frozen=True)
class FactorDescriptor:
    order: int
    abelian: bool
    label: str


@dataclass(frozen=True)
class CompositionSeries:
    terms: list[Subgroup]
    factors: list[FactorDescriptor] = field(default_factory=list)

    def factor_orders(self) -> list[int]:
        return [f.order for f in self.factors]


def _key(s: frozenset) -> tuple:
    return tuple(sorted(s))


def _canonical(orbit) -> frozenset:
    return min(orbit, key=_key)


# -- enumeration -------------------------------------------------------------


def _order_mod(table: ElementTable, x: int, sub: frozenset) -> int:
    k, j = 1, x
    while j not in sub:
        j = table.mul(j, x)
        k += 1
    return k


def _is_prime(n: int) -> bool:
    return n > 1 and all(n % d for d in range(2, int(n ** 0.5) + 1))


class _ClassCollector:
    """Registers subgroups up to conjugacy, remembering every conjugate seen."""

    def __init__(self, table: ElementTable):
        self.table = table
        self.seen: dict[frozenset, int] = {}
        self.classes: list[tuple[frozenset, int]] = []

    def add(self, sub: frozenset) -> int | None:
        if sub in self.seen:
            return None
        orbit, _ = self.table.orbit(sub)
        cid = len(self.classes)
        for s in orbit:
            self.seen[s] = cid
        self.classes.append((_canonical(orbit), len(orbit)))
        return cid


def _extend_classes(table: ElementTable, collector: _ClassCollector, queue: list[int],
                    accept: Callable[[frozenset], bool] | None,
                    element_ok: Callable[[int], bool] | None = None) -> None:
    """Close the collected classes under cyclic extension."""
    prime = {}
    for cid in queue:
        sub = collector.classes[cid][0]
        norm = table.stabilizer(sub)
        covered = set(sub)
        for x in sorted(norm):
            if x in covered:
                continue
            if element_ok is not None and not element_ok(x):
                continue
            m = _order_mod(table, x, sub)
            if m not in prime:
                prime[m] = _is_prime(m)
            if not prime[m]:
                continue
            ext = table.extend(sub, x)
            covered.update(ext)
            if accept is not None and not accept(ext):
                continue
            new = collector.add(ext)
            if new is not None:
                queue.append(new)


def _derived_indices(table: ElementTable, sub: frozenset) -> frozenset:
    gens = table.generators_of(sub)
    elts = table.elements
    comms = set()
    for a in gens:
        for b in gens:
            if a < b:
                ea, eb = elts[a], elts[b]
                c = table.index[mul(mul(_inv(ea), _inv(eb)), mul(ea, eb))]
                if c:
                    comms.add(c)
    # normal closure inside sub
    closure = table.closure(comms)
    queue = list(comms)
    gens_all = list(comms)
    for c in queue:
        for g in gens:
            d = table.conj(c, g)
            if d not in closure:
                gens_all.append(d)
                queue.append(d)
                closure = table.closure(gens_all, start=closure)
    return closure


def _inv(e: tuple) -> tuple:
    out = [0] * len(e)
    for i, j in enumerate(e):
        out[j] = i
    return tuple(out)


def _soluble_residual(table: ElementTable, sub: frozenset) -> frozenset:
    while True:
        d = _derived_indices(table, sub)
        if len(d) == len(sub):
            return sub
        sub = d


def element_classes(table: ElementTable, within: frozenset | None = None,
                    acting: list[int] | None = None) -> list[list[int]]:
    """Conjugacy classes of elements (of ``within`` under ``acting``)."""
    if acting is None:
        maps = table.conj_maps
    else:
        maps = [[table.conj(i, g) for i in range(table.size)] for g in acting]
    pool = range(table.size) if within is None else sorted(within)
    done: set[int] = set()
    out = []
    for i in pool:
        if i in done:
            continue
        cls = [i]
        done.add(i)
        for j in cls:
            for m in maps:
                k = m[j]
                if k not in done:
                    done.add(k)
                    cls.append(k)
        out.append(sorted(cls))
    return out


def _perfect_seeds(table: ElementTable) -> list[frozenset]:
    """Non-trivial soluble residuals of subgroups ``<x, y>``, ``x`` a class representative.

    Every perfect group met at desk scale is two-generated, so this finds
    all perfect subgroups up to conjugacy.
    """
    reps = [c[0] for c in element_classes(table) if c[0] != 0]
    out: dict[frozenset, None] = {}
    done: set[frozenset] = set()
    for x in reps:
        for y in range(1, table.size):
            sub = table.closure([x, y])
            if sub in done:
                continue
            done.add(sub)
            res = _soluble_residual(table, sub)
            if len(res) > 1:
                out.setdefault(res, None)
    return list(out)


def _check_cap(G: FiniteGroup, cap: int) -> None:
    if G.order > cap:
        raise GroupTooLarge(f"order {G.order} exceeds the exhaustive subgroup limit {cap}")


def all_subgroup_classes(G: FiniteGroup, order_cap: int = DEFAULT_SUBGROUP_LIMIT) -> list[SubgroupClass]:
    """Every conjugacy class of subgroups, by order then canonical element list."""
    _check_cap(G, order_cap)
    table = G.table
    collector = _ClassCollector(table)
    queue = [collector.add(frozenset((0,)))]
    _extend_classes(table, collector, queue, None)
    from .series import is_soluble
    if not is_soluble(G):
        queue = []
        for seed in _perfect_seeds(table):
            cid = collector.add(seed)
            if cid is not None:
                queue.append(cid)
        _extend_classes(table, collector, queue, None)
    return _emit(G, collector)


def nilpotent_classes(G: FiniteGroup, order_cap: int) -> list[SubgroupClass]:
    """Conjugacy classes of nilpotent subgroups.

    Extends only by elements of prime-power order and discards non-nilpotent
    extensions; every nilpotent subgroup has a nilpotent subgroup of prime
    index, so nothing is lost.
    """
    _check_cap(G, order_cap)
    table = G.table
    orders = table.orders
    collector = _ClassCollector(table)
    queue = [collector.add(frozenset((0,)))]
    _extend_classes(table, collector, queue, table.is_nilpotent_set,
                    element_ok=lambda x: len(_prime_set(orders[x])) <= 1)
    return _emit(G, collector)


@lru_cache(maxsize=None)
def _prime_set(n: int) -> frozenset:
    from .group import prime_factors
    return frozenset(prime_factors(n))


def _emit(G: FiniteGroup, collector: _ClassCollector) -> list[SubgroupClass]:
    rows = sorted(collector.classes, key=lambda c: (len(c[0]), _key(c[0])))
    return [SubgroupClass(Subgroup.from_indices(G, rep), size) for rep, size in rows]


# -- conjugacy ---------------------------------------------------------------


def are_conjugate(G: FiniteGroup, H: FiniteGroup, K: FiniteGroup) -> Permutation | None:
    """Some ``g`` in ``G`` with ``H^g = K``, or ``None``."""
    H = _ensure_subgroup(G, H)
    K = _ensure_subgroup(G, K)
    if H.order != K.order:
        return None
    table = G.table
    target = K.indices
    start = H.indices
    if start == target:
        return G.identity
    trans = {start: 0}
    queue = [start]
    for s in queue:
        t = trans[s]
        for g, m in zip(table.generators, table.conj_maps):
            img = frozenset(map(m.__getitem__, s))
            if img not in trans:
                trans[img] = table.mul(t, g)
                if img == target:
                    return Permutation._trusted(table.elements[trans[img]])
                queue.append(img)
    return None


def conjugacy_class_size(G: FiniteGroup, H: FiniteGroup) -> int:
    H = _ensure_subgroup(G, H)
    orbit, _ = G.table.orbit(H.indices)
    return len(orbit)


# -- normal structure --------------------------------------------------------


def _normal_subgroups_idx(table: ElementTable, group: frozenset, acting: list[int],
                          inside: frozenset | None = None) -> list[frozenset]:
    """Subgroups of ``group`` normalized by ``acting`` (that contain ``inside``).

    Normal subgroups are joins of normal closures of single classes; joins
    are only formed when the order can still divide ``|group|``.
    """
    n = len(group)
    classes = element_classes(table, within=group, acting=acting)
    base = inside if inside is not None else frozenset((0,))
    closures: dict[frozenset, None] = {base: None}
    for cls in classes:
        if cls == [0]:
            continue
        c = table.closure(cls + table_gens(table, base))
        closures.setdefault(c, None)
    result = set(closures)
    # every normal subgroup is a join of class closures, so joining the
    # frontier with those alone reaches all of them
    atoms = [(c, table_gens(table, c)) for c in closures if c != base]
    frontier = list(result)
    while frontier:
        new = []
        for a in frontier:
            agens = table_gens(table, a)
            for b, bgens in atoms:
                if b <= a:
                    continue
                j = table.closure(agens + bgens, start=a)
                if n % len(j) == 0 and j not in result:
                    result.add(j)
                    new.append(j)
        frontier = new
    return sorted(result, key=lambda s: (len(s), _key(s)))


def table_gens(table: ElementTable, s: frozenset) -> list[int]:
    return table.cached_generators(s)


def normal_subgroups(G: FiniteGroup, limit: int = NORMAL_SEARCH_LIMIT) -> list[Subgroup]:
    """All normal subgroups of ``G``, smallest first."""
    if G.order > limit:
        raise GroupTooLarge(f"order {G.order} exceeds the normal-subgroup limit {limit}")
    table = G.table
    whole = frozenset(range(table.size))
    return [Subgroup.from_indices(G, s) for s in _normal_subgroups_idx(table, whole, table.generators)]


def minimal_normal_subgroups(G: FiniteGroup, limit: int = NORMAL_SEARCH_LIMIT) -> list[Subgroup]:
    """Minimal non-trivial normal subgroups, from normal closures of single classes."""
    if G.order > limit:
        raise GroupTooLarge(f"order {G.order} exceeds the normal-subgroup limit {limit}")
    table = G.table
    closures = {}
    for cls in element_classes(table):
        if cls == [0]:
            continue
        closures.setdefault(table.closure(cls), None)
    cands = list(closures)
    mins = [c for c in cands if not any(d < c for d in cands)]
    mins.sort(key=lambda s: (len(s), _key(s)))
    return [Subgroup.from_indices(G, s) for s in mins]


def decompose_direct_factors(B: Subgroup) -> list[Subgroup]:
    """Simple direct factors ``T_1, ..., T_k`` of a non-abelian minimal normal subgroup."""
    G = B.parent
    table = G.table
    bidx = B.indices
    from .search import is_normal
    if not is_normal(G, B) or len(bidx) == 1:
        raise NotMinimalNormal("subgroup is not a non-trivial normal subgroup of its parent")
    from .series import is_abelian
    if is_abelian(B):
        raise AbelianFactor("an abelian minimal normal subgroup has no non-abelian simple factors")
    for cls in element_classes(table, within=bidx):
        if cls == [0]:
            continue
        if len(table.closure(cls)) != len(bidx):
            raise NotMinimalNormal("a smaller non-trivial normal subgroup lies inside")
    factors = _minimal_normal_of(table, bidx)
    return [Subgroup.from_indices(G, f) for f in factors]


def _minimal_normal_of(table: ElementTable, group: frozenset) -> list[frozenset]:
    acting = table_gens(table, group)
    closures = {}
    for cls in element_classes(table, within=group, acting=acting):
        if cls == [0]:
            continue
        closures.setdefault(table.closure(cls), None)
    cands = list(closures)
    mins = [c for c in cands if not any(d < c for d in cands)]
    return sorted(mins, key=_key)


def direct_factors_of(G: FiniteGroup, B: FiniteGroup) -> list[Subgroup]:
    """Minimal normal subgroups of ``B`` itself, without the minimality check on ``B``."""
    B = _ensure_subgroup(G, B)
    return [Subgroup.from_indices(G, f) for f in _minimal_normal_of(G.table, B.indices)]


# -- composition series ------------------------------------------------------


def _maximal_normal_chain(table: ElementTable, top: frozenset, bottom: frozenset) -> list[frozenset]:
    """``top = X_0 > X_1 > ... > bottom`` with each ``X_{j+1}`` maximal normal in ``X_j``."""
    chain = [top]
    cur = top
    while cur != bottom:
        step = _prime_index_step(table, cur, bottom)
        if step is not None:
            cur = step
            chain.append(cur)
            continue
        acting = table_gens(table, cur)
        normals = _normal_subgroups_idx(table, cur, acting, inside=bottom)
        proper = [s for s in normals if s != cur and bottom <= s]
        maximal = [s for s in proper if not any(s < t for t in proper)]
        cur = max(maximal, key=lambda s: (len(s), tuple(-i for i in _key(s))))
        chain.append(cur)
    return chain


def _prime_index_step(table: ElementTable, cur: frozenset, bottom: frozenset) -> frozenset | None:
    """A maximal subgroup of ``cur`` over ``D = cur' bottom``, when ``D < cur``.

    ``cur / D`` is abelian, so such a subgroup is normal of prime index.
    """
    d = table.closure(table_gens(table, _derived_indices(table, cur)) + table_gens(table, bottom))
    if d == cur:
        return None
    if _is_prime(len(cur) // len(d)):
        return d
    m, mgens = d, table_gens(table, d)
    for x in sorted(cur):
        if x in m:
            continue
        j = table.closure(mgens + [x], start=m)
        if j != cur:
            m, mgens = j, mgens + [x]
    return m


def composition_series(G: FiniteGroup, strategy: str = "top-down",
                       limit: int = NORMAL_SEARCH_LIMIT) -> CompositionSeries:
    """A composition series of ``G``.

    ``"top-down"`` peels off maximal normal subgroups of each term;
    ``"chief"`` builds a chief series from the bottom and refines each chief
    factor.  Both exist so that the factor multisets can be compared.
    """
    if G.order > limit:
        raise GroupTooLarge(f"order {G.order} exceeds the composition-series limit {limit}")
    table = G.table
    whole = frozenset(range(table.size))
    triv = frozenset((0,))
    if strategy == "top-down":
        terms = _maximal_normal_chain(table, whole, triv)
    elif strategy == "chief":
        chief = [triv]
        normals = _normal_subgroups_idx(table, whole, table.generators)
        while chief[-1] != whole:
            cur = chief[-1]
            above = [s for s in normals if cur < s]
            chief.append(min(above, key=lambda s: (len(s), _key(s))))
        terms = [whole]
        for hi, lo in zip(reversed(chief[1:]), reversed(chief[:-1])):
            terms.extend(_maximal_normal_chain(table, hi, lo)[1:])
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    subs = [Subgroup.from_indices(G, t) for t in terms]
    factors = [describe_factor(table, a, b) for a, b in zip(terms, terms[1:])]
    return CompositionSeries(subs, factors)


def factor_element_orders(table: ElementTable, top: frozenset, bottom: frozenset) -> Counter:
    """Multiset of element orders of the section ``top / bottom``."""
    seen: set[int] = set()
    counts: Counter = Counter()
    for a in sorted(top):
        if a in seen:
            continue
        coset = {table.mul(b, a) for b in bottom}
        seen.update(coset)
        k, j = 1, a
        while j not in bottom:
            j = table.mul(j, a)
            k += 1
        counts[k] += 1
    return counts


def describe_factor(table: ElementTable, top: frozenset, bottom: frozenset) -> FactorDescriptor:
    order = len(top) // len(bottom)
    if _is_prime(order):
        return FactorDescriptor(order, True, f"C_{order}")
    from .simple import identify_simple
    label = identify_simple(order, lambda: factor_element_orders(table, top, bottom))
    return FactorDescriptor(order, False, label)


__all__ = [
    "CompositionSeries", "FactorDescriptor", "SubgroupClass", "all_subgroup_classes",
    "are_conjugate", "composition_series", "decompose_direct_factors", "minimal_normal_subgroups",
    "nilpotent_classes", "normal_subgroups",
]
