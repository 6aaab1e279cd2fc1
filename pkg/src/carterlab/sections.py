"""Quotients and induced automorphism groups as permutation groups.

A section ``A/B`` (``B`` normal in ``A``) is realized on its non-identity
cosets.  An element ``x`` normalizing both ``A`` and ``B`` acts by
``Ba -> B x^-1 a x``; when ``A/B`` has trivial center this action is
faithful on ``A/B`` and its image is the induced automorphism group.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GroupTooLarge, MixedDegree, NontrivialCenter, NotNormal
from .group import ENUMERATION_LIMIT, FiniteGroup, Subgroup, _ensure_subgroup, generate
from .perm import Permutation, conj, is_identity, mul
from .search import _filter, backtrack, is_normal

DEFAULT_DEGREE_LIMIT = 2500


class _CosetAction:
    """Action on the cosets ``Bx`` of a subgroup ``B`` inside the element set ``top``.

    ``mode="right"`` is right multiplication, ``mode="conj"`` conjugation.
    Points are numbered by the least element of each coset; with
    ``drop_identity`` the coset ``B`` itself is left out.
    """

    def __init__(self, top: FiniteGroup, bottom: FiniteGroup, mode: str, drop_identity: bool):
        self.mode = mode
        elements = sorted(top.element_set())
        bottom_elems = sorted(bottom.element_set())
        self.lookup: dict[tuple, int] = {}
        reps: list[tuple] = []
        for e in elements:
            if e in self.lookup:
                continue
            coset = [mul(b, e) for b in bottom_elems]
            if drop_identity and is_identity(e):
                for c in coset:
                    self.lookup[c] = -1
                continue
            k = len(reps)
            reps.append(e)
            for c in coset:
                self.lookup[c] = k
        self.reps = reps
        self.degree = len(reps)

    def image(self, g) -> Permutation:
        g = tuple(g)
        lookup = self.lookup
        if self.mode == "right":
            return Permutation._trusted(tuple(lookup[mul(r, g)] for r in self.reps))
        return Permutation._trusted(tuple(lookup[conj(r, g)] for r in self.reps))


@dataclass
class SectionMap:
    """A homomorphism from ``source`` onto a permutation realization of a section.

    ``map`` holds the images of the source generators; :meth:`image`
    evaluates the defining action on any element of ``source``.
    """

    source: Subgroup
    section_top: FiniteGroup
    section_bottom: FiniteGroup
    image_group: FiniteGroup
    map: dict
    kernel: Subgroup
    action: _CosetAction = field(repr=False)

    def image(self, g) -> Permutation:
        return self.action.image(g)

    def image_of(self, K: FiniteGroup) -> FiniteGroup:
        """Image of a subgroup of ``source``."""
        return generate([self.image(k) for k in K.generators], self.image_group.degree)

    def check_homomorphism(self, samples: int = 100, seed: int = 0) -> bool:
        import random
        rng = random.Random(seed)
        for _ in range(samples):
            a = self.source.random_element(rng)
            b = self.source.random_element(rng)
            if self.image(a * b) != self.image(a) * self.image(b):
                return False
        return True


def _kernel(source: Subgroup, action: _CosetAction) -> Subgroup:
    ident = tuple(range(action.degree))
    if source.order > ENUMERATION_LIMIT:
        return backtrack(source, lambda g: tuple(action.image(g)) == ident)
    return _filter(source, lambda g: tuple(action.image(g)) == ident, [])


def _root_subgroup(G: FiniteGroup, X: FiniteGroup) -> Subgroup:
    if X.degree != G.degree:
        raise MixedDegree(f"degrees {X.degree} and {G.degree} differ")
    return _ensure_subgroup(G, X)


def quotient(G: FiniteGroup, N: FiniteGroup) -> SectionMap:
    """``G -> G/N`` realized as the action of ``G`` on the right cosets of ``N``."""
    N = _root_subgroup(G, N)
    if not is_normal(G, N):
        raise NotNormal("the kernel of a quotient must be normal")
    action = _CosetAction(G, N, "right", drop_identity=False)
    images = {g: action.image(g) for g in G.generators}
    image_group = generate(images.values(), action.degree)
    source = _ensure_subgroup(G, G)
    return SectionMap(source, G, N, image_group, images, _kernel(source, action), action)


def section_normalizer(H: FiniteGroup, A: FiniteGroup, B: FiniteGroup) -> Subgroup:
    """``N_H(A/B) = N_H(A) & N_H(B)``."""
    if not (H.degree == A.degree == B.degree):
        raise MixedDegree("H, A and B must act on the same points")
    if not B.is_subgroup_of(A) or not is_normal(A, B):
        raise NotNormal("the bottom of a section must be normal in its top")
    agens = [tuple(a) for a in A.generators]
    bgens = [tuple(b) for b in B.generators]

    def test(h):
        return all(A.contains(conj(a, h)) for a in agens) and all(B.contains(conj(b, h)) for b in bgens)

    H = H if isinstance(H, Subgroup) else H.whole()
    if H.order > ENUMERATION_LIMIT:
        return backtrack(H, test)
    return _filter(H, test, [])


def _check_section(A: FiniteGroup, B: FiniteGroup, degree_limit: int) -> None:
    points = A.order // B.order - 1
    if points > degree_limit:
        raise GroupTooLarge(f"realization on {points} points exceeds the degree limit {degree_limit}")


class SectionRealization:
    """The section ``A/B`` on its non-identity cosets, reusable across acting groups."""

    def __init__(self, A: FiniteGroup, B: FiniteGroup | None = None,
                 degree_limit: int = DEFAULT_DEGREE_LIMIT):
        B = B if B is not None else generate([], A.degree)
        if not B.is_subgroup_of(A) or not is_normal(A, B):
            raise NotNormal("the bottom of a section must be normal in its top")
        _check_section(A, B, degree_limit)
        self.top = A
        self.bottom = B
        self.action = _CosetAction(A, B, "conj", drop_identity=True)
        self.degree = self.action.degree
        self.inner = generate([self.action.image(a) for a in A.generators], self.degree)
        if self.inner.order * B.order != A.order:
            raise NontrivialCenter("the section has a non-trivial center")

    def induced(self, H: FiniteGroup) -> SectionMap:
        """``N_H(A/B) -> Aut_H(A/B)``."""
        source = section_normalizer(H, self.top, self.bottom)
        images = {g: self.action.image(g) for g in source.generators}
        image_group = generate(images.values(), self.degree)
        return SectionMap(source, self.top, self.bottom, image_group, images,
                          _kernel(source, self.action), self.action)

    def with_induced(self, H: FiniteGroup) -> FiniteGroup:
        """``<Aut_H(A/B), Inn(A/B)>``."""
        return with_inner(self.induced(H))


def induced_automorphisms(H: FiniteGroup, S: FiniteGroup, bottom: FiniteGroup | None = None,
                          degree_limit: int = DEFAULT_DEGREE_LIMIT) -> SectionMap:
    """``N_H(S/B) -> Aut_H(S/B)`` acting on the non-identity elements (cosets) of ``S/B``.

    ``bottom`` defaults to the trivial group, making ``S`` itself the section.
    Raises :class:`NontrivialCenter` when the section has a non-trivial
    center, since the action would then not be faithful on it.
    """
    return SectionRealization(S, bottom, degree_limit).induced(H)


def inner_image(section: SectionMap) -> FiniteGroup:
    """The realization of the section itself (its inner automorphisms)."""
    top = section.section_top
    return generate([section.image(s) for s in top.generators], section.action.degree)


def group_with_induced(H: FiniteGroup, S: FiniteGroup, bottom: FiniteGroup | None = None,
                       degree_limit: int = DEFAULT_DEGREE_LIMIT) -> FiniteGroup:
    """``<Aut_H(S), S>`` realized on the non-identity elements of ``S`` (or ``S/B``)."""
    sec = induced_automorphisms(H, S, bottom, degree_limit)
    return with_inner(sec)


def with_inner(sec: SectionMap) -> FiniteGroup:
    gens = list(sec.map.values()) + [sec.image(s) for s in sec.section_top.generators]
    return generate(gens, sec.action.degree)


__all__ = [
    "SectionMap", "SectionRealization", "group_with_induced", "induced_automorphisms", "inner_image", "quotient",
    "section_normalizer", "with_inner",
]
