"""Executable checks of the structural lemmas behind the conjugacy theorem.

* :func:`verify_quotient_image` checks that a Carter subgroup maps onto a
  Carter subgroup of a quotient.
* :func:`build_wreath_embedding` constructs the embedding of ``G = HB``,
  ``B = T_1 x ... x T_k``, into ``A wr C_p`` and checks its invariants.
* :func:`verify_lemma3` checks that ``Aut_H(T_1)`` is Carter in
  ``<Aut_H(T_1), T_1>``, together with the inner claim on ``H_1``.
* :func:`verify_lemma5` checks the four conclusions about a central
  element of a Carter subgroup.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .carter import carter_subgroups, check_star, is_carter
from .config import DEFAULT_LIMITS, Limits
from .errors import (
    CentralizerNotTrivial, NoBlockSystem, NotCarter, NotCentral, NotNormal, NotSupplemented,
    NotTransitive, StarFails,
)
from .group import ENUMERATION_LIMIT, FiniteGroup, Subgroup, _ensure_subgroup, generate
from .lattice import all_subgroup_classes, are_conjugate, direct_factors_of, element_classes
from .perm import Permutation, as_perm, conj, identity, inv, is_identity, mul, perm_order, power
from .search import _filter, backtrack, center, centralizer, centralizer_of_subgroup, is_normal
from .sections import DEFAULT_DEGREE_LIMIT, SectionMap, SectionRealization, quotient

# -- quotient images -----------------------------------------------------------


def verify_quotient_image(G: FiniteGroup, H: FiniteGroup, N: FiniteGroup) -> bool:
    """Whether ``HN/N`` is a Carter subgroup of ``G/N``.

    ``H`` must be Carter in ``G`` (else :class:`NotCarter`) and ``N`` normal
    (else :class:`NotNormal`).  Condition (*) on ``G`` is left to the caller.
    """
    H = _ensure_subgroup(G, H)
    N = _ensure_subgroup(G, N)
    if not is_normal(G, N):
        raise NotNormal("N must be normal in G")
    if not is_carter(G, H):
        raise NotCarter("H is not a Carter subgroup of G")
    sec = quotient(G, N)
    return is_carter(sec.image_group, sec.image_of(H))


# -- the wreath embedding ------------------------------------------------------


class _BlockAction:
    """Action of ``G`` on the blocks ``Delta_1, ..., Delta_p`` by conjugation of factors."""

    def __init__(self, factors: list[Subgroup], blocks: list[tuple[int, ...]]):
        self.factors = factors
        self.markers = [tuple(next(g for g in T.generators if not g.is_identity())) for T in factors]
        self.block_of = {j: i for i, blk in enumerate(blocks) for j in blk}
        self.degree = len(blocks)

    def factor_image(self, g) -> tuple[int, ...]:
        g = tuple(g)
        out = []
        for t in self.markers:
            c = conj(t, g)
            out.append(next(m for m, T in enumerate(self.factors) if T.contains(c)))
        return tuple(out)

    def image(self, g) -> Permutation:
        fimg = self.factor_image(g)
        imgs = [0] * self.degree
        for j, b in self.block_of.items():
            imgs[b] = self.block_of[fimg[j]]
        return Permutation._trusted(tuple(imgs))


def _factor_permutation(factors: list[Subgroup], markers: list[tuple], g) -> tuple[int, ...]:
    g = tuple(g)
    return tuple(next(m for m, T in enumerate(factors) if T.contains(conj(t, g))) for t in markers)


def _is_block(block: frozenset, perms: list[tuple]) -> bool:
    for g in perms:
        img = frozenset(g[i] for i in block)
        if img != block and img & block:
            return False
    return True


def _prime_block_system(omega: FiniteGroup, k: int) -> list[frozenset]:
    """The least maximal block system with a prime number of blocks.

    Blocks containing point 0 are tried by brute force; a maximal block gives
    a primitive action on the block system.
    """
    perms = list(omega.element_set())
    candidates = []
    for size in range(1, k):
        if k % size:
            continue
        for rest in itertools.combinations(range(1, k), size - 1):
            blk = frozenset((0,) + rest)
            if _is_block(blk, perms):
                candidates.append(blk)
    maximal = [b for b in candidates if not any(b < c for c in candidates)]
    maximal.sort(key=lambda b: (-len(b), sorted(b)))
    for blk in maximal:
        p = k // len(blk)
        if all(p % d for d in range(2, int(p ** 0.5) + 1)):
            system = {blk}
            queue = [blk]
            for b in queue:
                for g in omega.generators:
                    img = frozenset(g[i] for i in b)
                    if img not in system:
                        system.add(img)
                        queue.append(img)
            return sorted(system, key=sorted)
    raise NoBlockSystem("no block system on the factors has a prime number of blocks")


@dataclass
class WreathEmbedding:
    """The data of the embedding ``eta: G -> A wr C_p``.

    ``factors`` lists ``T_1, ..., T_k`` in the order forced by the blocks:
    ``blocks[i]`` holds the positions of the factors of ``Delta_{i+1}`` and
    ``h`` maps ``Delta_i`` to ``Delta_{i+1}``.  ``transversal[i]`` is the
    least element of ``G`` carrying ``Delta_1`` to ``Delta_{i+1}``.
    Points of the wreath product are pairs ``(i, q)`` numbered ``i*d + q``
    with ``d = A.degree``.
    """

    G: FiniteGroup
    H: Subgroup
    B: Subgroup
    factors: list[Subgroup]
    blocks: list[tuple[int, ...]]
    p: int
    l: int
    phi: SectionMap
    Y: Subgroup
    S_list: list[Subgroup]
    xi: SectionMap
    A: FiniteGroup
    S: FiniteGroup
    transversal: list[tuple]
    h: Permutation
    eta_images: dict = field(default_factory=dict)
    H_list: list[FiniteGroup] = field(default_factory=list)
    N: FiniteGroup | None = None
    wreath: FiniteGroup | None = None
    invariants: dict[str, bool] = field(default_factory=dict)

    @property
    def d(self) -> int:
        return self.A.degree

    def top(self, x) -> tuple[int, ...]:
        """``x^phi`` as images of block positions."""
        return tuple(self.phi.image(x))

    def coordinates(self, x) -> list[tuple]:
        """``a_i = (x_i x x_{i^pi}^-1)^xi`` for each block."""
        x = tuple(x)
        pi = self.top(x)
        xs = self.transversal
        return [tuple(self.xi.image(mul(mul(xs[i], x), inv(xs[pi[i]])))) for i in range(self.p)]

    def eta(self, x) -> Permutation:
        pi = self.top(x)
        d = self.d
        imgs = [0] * (self.p * d)
        for i, a in enumerate(self.coordinates(x)):
            off = pi[i] * d
            for q in range(d):
                imgs[i * d + q] = off + a[q]
        return Permutation._trusted(tuple(imgs))

    def psi(self, i: int, y) -> Permutation:
        """Coordinate ``i`` (0-based) of ``y^eta`` for ``y`` in ``Y``."""
        y = tuple(y)
        x = self.transversal[i]
        return Permutation._trusted(tuple(self.xi.image(mul(mul(x, y), inv(x)))))

    @property
    def psi_projections(self) -> list:
        """The coordinate maps ``psi_1, ..., psi_p`` restricted to ``Y``."""
        return [lambda y, i=i: self.psi(i, y) for i in range(self.p)]


def _intersection(X: FiniteGroup, member) -> Subgroup:
    X = X if isinstance(X, Subgroup) else X.whole()
    if X.order > ENUMERATION_LIMIT:
        return backtrack(X, lambda g: member(g))
    return _filter(X, lambda g: member(g), [])


def _check_supplement(G: FiniteGroup, H: Subgroup, B: Subgroup) -> None:
    HB = _intersection(H, B.contains)
    if H.order * B.order // HB.order != G.order:
        raise NotSupplemented("G is not the product HB")


def _sample_elements(G: FiniteGroup, n: int, seed: int = 0) -> list[tuple]:
    rng = random.Random(seed)
    return [tuple(G.random_element(rng)) for _ in range(n)]


def build_wreath_embedding(G: FiniteGroup, H: FiniteGroup, B: FiniteGroup,
                           degree_limit: int = DEFAULT_DEGREE_LIMIT, samples: int = 40) -> WreathEmbedding:
    """Embed ``G = HB`` into ``A wr C_p`` along a prime block system of the factors of ``B``."""
    H = _ensure_subgroup(G, H)
    B = _ensure_subgroup(G, B)
    if not is_normal(G, B):
        raise NotNormal("B must be normal in G")
    factors = direct_factors_of(G, B)
    k = len(factors)
    if k < 2:
        raise NoBlockSystem("B has a single direct factor")
    markers = [tuple(next(g for g in T.generators if not g.is_identity())) for T in factors]
    omega = generate([_factor_permutation(factors, markers, g) for g in G.generators], k)
    orbit = {0}
    queue = [0]
    for a in queue:
        for g in omega.generators:
            if g[a] not in orbit:
                orbit.add(g[a])
                queue.append(g[a])
    if len(orbit) != k:
        raise NotTransitive("G does not permute the direct factors of B transitively")
    if centralizer_of_subgroup(G, B).order != 1:
        raise CentralizerNotTrivial("C_G(B) is not trivial")
    system = _prime_block_system(omega, k)
    p = len(system)

    first = next(b for b in system if 0 in b)
    S1 = generate([g for j in sorted(first) for g in factors[j].generators], G.degree)
    from .search import normalizer
    Y = normalizer(G, S1)
    h = Permutation._trusted(min(e for e in H.element_set() if not Y.contains(e)))

    # Delta_{i+1} = Delta_i^h
    fh = _factor_permutation(factors, markers, h)
    ordered = [first]
    while len(ordered) < p:
        ordered.append(frozenset(fh[j] for j in ordered[-1]))
    new_order = [j for blk in ordered for j in sorted(blk)]
    factors = [factors[j] for j in new_order]
    l = k // p
    blocks = [tuple(range(i * l, (i + 1) * l)) for i in range(p)]
    S_list = [Subgroup(G, [g for j in blk for g in factors[j].generators], check=False) for blk in blocks]

    block_action = _BlockAction(factors, blocks)
    phi_images = {g: block_action.image(g) for g in G.generators}
    phi = SectionMap(_ensure_subgroup(G, G), G, Y, generate(phi_images.values(), p), phi_images,
                     Y, block_action)

    y_elems = sorted(Y.element_set())
    transversal = [identity(G.degree)]
    hp = tuple(h)
    for _ in range(1, p):
        transversal.append(min(mul(y, hp) for y in y_elems))
        hp = mul(hp, tuple(h))

    real = SectionRealization(S_list[0], None, degree_limit)
    xi = real.induced(Y)
    A = xi.image_group
    S = real.inner

    emb = WreathEmbedding(G, H, B, factors, blocks, p, l, phi, Y, S_list, xi, A, S,
                          transversal, h)
    d = emb.d
    emb.eta_images = {g: emb.eta(g) for g in G.generators}
    base_gens = [Permutation._trusted(tuple(a) + tuple(range(d, p * d))) for a in A.generators]
    top = Permutation._trusted(tuple(((i + 1) % p) * d + q for i in range(p) for q in range(d)))
    emb.wreath = generate(base_gens + [top], p * d)

    HY = _intersection(H, Y.contains)
    emb.H_list = [generate([emb.psi(i, y) for y in HY.generators], d) for i in range(p)]

    def spread(a: tuple, i: int) -> Permutation:
        imgs = list(range(p * d))
        for q in range(d):
            imgs[i * d + q] = i * d + a[q]
        return Permutation._trusted(tuple(imgs))

    product = generate([spread(tuple(g), i) for i, Hi in enumerate(emb.H_list) for g in Hi.generators],
                       p * d)
    Yeta = generate([emb.eta(y) for y in Y.generators], p * d)
    emb.N = _intersection(product, Yeta.contains)
    emb.invariants = _check_invariants(emb, Yeta, samples)
    return emb


def _check_invariants(emb: WreathEmbedding, Yeta: FiniteGroup, samples: int) -> dict[str, bool]:
    p, d = emb.p, emb.d
    out: dict[str, bool] = {}
    out["phi_image_cyclic_prime"] = emb.phi.image_group.order == p
    out["kernel_trivial"] = centralizer_of_subgroup(emb.G, emb.B).order == 1

    sampled = _sample_elements(emb.G, samples)
    ident = tuple(range(p * d))
    out["eta_injective_on_samples"] = all(is_identity(x) or tuple(emb.eta(x)) != ident for x in sampled)
    out["eta_homomorphism_on_samples"] = all(
        emb.eta(mul(a, b)) == emb.eta(a) * emb.eta(b) for a, b in zip(sampled, sampled[1:]))

    # B^eta = S^p, block-diagonal
    beta = generate([emb.eta(b) for b in emb.B.generators], p * d)
    trivial_top = all(emb.top(b) == tuple(range(p)) for b in emb.B.generators)
    coords = all(generate([emb.psi(i, b) for b in emb.B.generators], d).same_group(emb.S) for i in range(p))
    out["B_block_form"] = trivial_top and coords and beta.order == emb.S.order ** p
    out["Y_projects_onto_A"] = all(
        generate([emb.psi(i, y) for y in emb.Y.generators], d).same_group(emb.A) for i in range(p))

    h = tuple(emb.h)
    cycle = tuple((i + 1) % p for i in range(p))
    out["h_top_is_p_cycle"] = emb.top(h) == cycle
    out["h_power_in_Y"] = emb.Y.contains(power(h, p))

    a = emb.coordinates(h)
    ok = True
    c = tuple(range(d))
    H1 = emb.H_list[0]
    for i in range(1, p):
        c = mul(c, a[i - 1])
        conj_h1 = generate([conj(tuple(g), c) for g in H1.generators], d)
        ok = ok and conj_h1.same_group(emb.H_list[i])
    out["H_i_conjugate_chain"] = ok

    hetas = [tuple(emb.eta(x)) for x in emb.H.generators]
    N = emb.N
    out["N_normalized_by_H"] = all(N.contains(conj(tuple(n), x)) for n in N.generators for x in hetas)
    out["N_inside_wreath"] = all(emb.wreath.contains(n) for n in N.generators) and N.is_subgroup_of(Yeta)
    return out


# -- Lemma 3 ---------------------------------------------------------------------


@dataclass
class Lemma3Result:
    claim: bool
    h1_carter: bool | None
    bridge: bool | None
    k: int
    embedding: WreathEmbedding | None = None


def _aut_h1_on_t1(emb: WreathEmbedding, t1_real: SectionRealization) -> FiniteGroup:
    """``Aut_{H_1}(T_1)``: the stabilizer of ``T_1`` in ``H_1``, restricted to it."""
    s_reps = emb.xi.action.reps
    s_lookup = emb.xi.action.lookup
    t_points = [s_lookup[r] for r in t1_real.action.reps]
    point_set = frozenset(t_points)
    H1 = emb.H_list[0]
    stab = _intersection(H1, lambda g: frozenset(g[i] for i in point_set) == point_set)
    gens = []
    for g in stab.generators:
        gens.append(tuple(t1_real.action.lookup[s_reps[g[pt]]] for pt in t_points))
    return generate(gens, t1_real.degree)


def verify_lemma3(G: FiniteGroup, H: FiniteGroup, B: FiniteGroup,
                  degree_limit: int = DEFAULT_DEGREE_LIMIT, limits: Limits = DEFAULT_LIMITS) -> Lemma3Result:
    """Check ``Aut_H(T_1)`` Carter in ``<Aut_H(T_1), T_1>``, plus ``H_1`` Carter in ``A`` when ``k >= 2``.

    With a single factor there is no embedding and ``h1_carter`` and
    ``bridge`` are ``None``.
    """
    H = _ensure_subgroup(G, H)
    B = _ensure_subgroup(G, B)
    if not is_normal(G, B):
        raise NotNormal("B must be normal in G")
    if not is_carter(G, H):
        raise NotCarter("H is not a Carter subgroup of G")
    _check_supplement(G, H, B)
    factors = direct_factors_of(G, B)
    k = len(factors)
    emb = None
    if k >= 2:
        emb = build_wreath_embedding(G, H, B, degree_limit)
        T1 = emb.factors[0]
    else:
        T1 = factors[0]
    real = SectionRealization(T1, None, degree_limit)
    aut = real.induced(H).image_group
    claim = is_carter(real.with_induced(H), aut)
    if emb is None:
        return Lemma3Result(claim, None, None, k)
    h1_carter = is_carter(emb.A, emb.H_list[0])
    bridge = _aut_h1_on_t1(emb, real).same_group(aut)
    return Lemma3Result(claim, h1_carter, bridge, k, emb)


# -- Lemma 5 ---------------------------------------------------------------------

Z_K_NOTE = ("conclusion (2) is checked against Z(K); the variant reading with Z(G) "
            "in place of Z(K) is not checked")


@dataclass
class Lemma5Result:
    overgroups_self_normalizing: bool
    conjugates_in_ZK: bool
    center_meeting_other_carter: bool
    power_conjugacy: bool
    overgroups_checked: int = 0
    overgroups_partial: bool = False
    note: str = Z_K_NOTE

    def all_true(self) -> bool:
        return (self.overgroups_self_normalizing and self.conjugates_in_ZK
                and self.center_meeting_other_carter and self.power_conjugacy)


def _element_class(table, i: int) -> set[int]:
    cls = {i}
    queue = [i]
    for x in queue:
        for m in table.conj_maps:
            y = m[x]
            if y not in cls:
                cls.add(y)
                queue.append(y)
    return cls


def _overgroups(G: FiniteGroup, K: Subgroup, limits: Limits) -> tuple[list[frozenset], bool]:
    table = G.table
    kidx = K.indices
    if G.order <= limits.overgroups:
        out = []
        for cls in all_subgroup_classes(G, limits.overgroups):
            if cls.order % K.order:
                continue
            orbit, _ = table.orbit(cls.representative.indices)
            out.extend(s for s in orbit if kidx <= s)
        return out, False
    seen: dict[frozenset, None] = {}
    for cls in element_classes(table):
        seen.setdefault(table.closure(table.cached_generators(kidx) + [cls[0]], start=kidx), None)
    return list(seen), True


def verify_lemma5(G: FiniteGroup, K: FiniteGroup, z, limits: Limits = DEFAULT_LIMITS) -> Lemma5Result:
    """Check the four conclusions for a Carter subgroup ``K`` and ``1 != z`` in ``Z(K)``.

    Above ``limits.overgroups`` only the overgroups ``<K, r>`` for ``r``
    running over conjugacy class representatives are checked, and the
    result is marked partial.
    """
    K = _ensure_subgroup(G, K)
    z = as_perm(z, G.degree)
    if not is_carter(G, K):
        raise NotCarter("K is not a Carter subgroup of G")
    ZK = center(K)
    if z.is_identity() or not K.contains(z) or not ZK.contains(z):
        raise NotCentral("z must be a non-identity element of Z(K)")
    if not check_star(centralizer(G, z), limits).satisfied:
        raise StarFails("C_G(z) does not satisfy condition (*)")

    table = G.table
    zt = tuple(z)
    zi = table.index[zt]
    zclass = _element_class(table, zi)
    zclass_elems = [table.elements[i] for i in zclass]

    conj_ok = not any(i != zi and ZK.contains(table.elements[i]) for i in zclass)

    other_ok = True
    for cls in _memo(G, ("carter", limits), lambda: carter_subgroups(G, limits)).classes:
        Hrep = cls.representative
        if are_conjugate(G, Hrep, K) is not None:
            continue
        ZH = center(Hrep)
        if any(ZH.contains(e) for e in zclass_elems):
            other_ok = False

    n = perm_order(zt)
    power_ok = True
    for k in range(2, n):
        zk = power(zt, k)
        if zk != zt and table.index[zk] in zclass:
            power_ok = False

    over_ok, n_over, partial = _memo(G, ("overgroups", K.indices, limits),
                                     lambda: _check_overgroups(G, K, limits))
    return Lemma5Result(over_ok, conj_ok, other_ok, power_ok, n_over, partial)


def _memo(G: FiniteGroup, key: tuple, compute):
    """Per-group cache for the parts of the Lemma 5 check that do not depend on ``z``."""
    cache = G.__dict__.setdefault("_lemma5_cache", {})
    if key not in cache:
        cache[key] = compute()
    return cache[key]


def _check_overgroups(G: FiniteGroup, K: Subgroup, limits: Limits) -> tuple[bool, int, bool]:
    overs, partial = _overgroups(G, K, limits)
    ok = True
    for s in overs:
        Y = Subgroup.from_indices(G, s)
        if not check_star(Y, limits).satisfied:
            continue
        orbit, _ = G.table.orbit(s)
        if len(orbit) * len(s) != G.order:
            ok = False
    return ok, len(overs), partial


__all__ = [
    "Lemma3Result", "Lemma5Result", "WreathEmbedding", "build_wreath_embedding", "verify_lemma3",
    "verify_lemma5", "verify_quotient_image",
]
