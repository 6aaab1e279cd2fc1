import random
from collections import Counter

import pytest

from carterlab.builders import alternating, cyclic, direct_product, symmetric
from carterlab.errors import NontrivialCenter, NotNormal
from carterlab.group import Subgroup, generate
from carterlab.lattice import all_subgroup_classes, normal_subgroups
from carterlab.search import is_normal, normalizer
from carterlab.sections import (
    SectionRealization, group_with_induced, induced_automorphisms, inner_image, quotient, section_normalizer,
)
from carterlab.series import is_nilpotent, sylow_subgroup

from conftest import cyc, klein_four, named
from oracles import NaiveGroup


def _order_stats(G):
    return Counter(g.order() for g in G.elements())


def test_quotient_sym4_by_klein():
    S4 = named("Sym4")
    q = quotient(S4, klein_four())
    assert q.image_group.order == 6
    assert _order_stats(q.image_group) == _order_stats(named("Sym3"))
    assert q.kernel.same_group(klein_four())
    assert q.check_homomorphism()


def test_quotient_degenerate_cases():
    S4 = named("Sym4")
    assert quotient(S4, S4).image_group.order == 1
    q = quotient(S4, S4.trivial_subgroup())
    assert q.image_group.order == 24 and q.kernel.order == 1
    with pytest.raises(NotNormal):
        quotient(S4, generate([cyc(4, (0, 1))]))


def test_quotient_orders_over_corpus(soluble_corpus):
    for gid, G in soluble_corpus[::11]:
        for N in normal_subgroups(G):
            q = quotient(G, N)
            assert q.image_group.order * N.order == G.order, gid
            assert q.kernel.order == N.order


def test_section_normalizer_examples():
    S4 = named("Sym4")
    V4 = klein_four()
    triv = S4.trivial_subgroup()
    assert section_normalizer(S4, V4, triv).order == 24
    A = generate([cyc(4, (0, 1, 2))])
    assert section_normalizer(S4, A, A).same_group(normalizer(S4, A))
    # (0 1) inverts (0 1 2), so it normalizes <(0 1 2)>: the answer is H itself
    H = Subgroup(S4, [cyc(4, (0, 1))])
    naive = NaiveGroup(S4.element_set())
    a = naive.close([naive.index[tuple(cyc(4, (0, 1, 2)))]])
    expected = naive.normalizer(a) & naive.indices_of(H.element_set())
    assert section_normalizer(H, A, triv).element_set() == naive.elements_of(expected)
    assert section_normalizer(H, A, triv).order == 2
    with pytest.raises(NotNormal):
        section_normalizer(S4, S4, generate([cyc(4, (0, 1))]))


def test_section_normalizer_properties():
    S4 = named("Sym4")
    A4 = Subgroup(S4, alternating(4).generators)
    V4 = Subgroup(S4, klein_four().generators)
    for c in all_subgroup_classes(S4):
        H = c.representative
        N = section_normalizer(H, A4, V4)
        assert N.is_subgroup_of(H)
        # A4 and V4 are normal in S4, so every H normalizes both
        assert N.order == H.order


def test_induced_automorphisms_examples():
    S5 = named("Sym5")
    A5 = Subgroup(S5, alternating(5).generators)
    sec = induced_automorphisms(S5, A5)
    assert sec.image_group.order == 120 and sec.kernel.order == 1
    assert sec.image_group.degree == 59
    inner = induced_automorphisms(A5, A5)
    assert inner.image_group.order == 60
    with pytest.raises(NontrivialCenter):
        induced_automorphisms(Subgroup(named("Sym4"), [cyc(4, (0, 1), (2, 3))]), klein_four())


def test_group_with_induced_examples():
    S5 = named("Sym5")
    A5 = Subgroup(S5, alternating(5).generators)
    H = Subgroup(S5, sylow_subgroup(A5, 2).generators)
    assert is_nilpotent(H)
    assert group_with_induced(H, A5).order == 60
    P = sylow_subgroup(S5, 2)
    assert P.order == 8
    assert group_with_induced(P, A5).order == 120
    assert group_with_induced(S5.trivial_subgroup(), A5).order == 60


def test_inner_image_is_normal_of_small_index():
    S5 = named("Sym5")
    A5 = Subgroup(S5, alternating(5).generators)
    real = SectionRealization(A5)
    for c in all_subgroup_classes(S5):
        sec = real.induced(c.representative)
        assert sec.check_homomorphism(samples=20)
        assert sec.source.order // sec.kernel.order == sec.image_group.order
        X = real.with_induced(c.representative)
        inner = inner_image(sec)
        assert inner.order == 60
        assert is_normal(X, Subgroup(X, inner.generators))
        assert X.order // inner.order in (1, 2)


def test_faithful_on_simple_sections():
    for G in (alternating(5), alternating(6)):
        assert induced_automorphisms(G, G).image_group.order == G.order


def test_one_step_and_two_step_realizations_agree():
    """A section A/B with B != 1: coset action directly, or quotient by B first and then element action."""
    G = direct_product(symmetric(5), cyclic(2))
    flip = cyc(7, (5, 6))
    A = Subgroup(G, [tuple(g) + (5, 6) for g in alternating(5).generators] + [flip])
    B = Subgroup(G, [flip])
    assert A.order == 120 and is_normal(G, A) and is_normal(G, B)
    one = SectionRealization(A, B)
    rng = random.Random(3)
    for _ in range(8):
        H = Subgroup(G, [G.random_element(rng), G.random_element(rng)])
        X = Subgroup(G, list(H.generators) + list(A.generators))
        q = quotient(X, B)
        QX = q.image_group
        QA = Subgroup(QX, [q.image(a) for a in A.generators])
        QH = Subgroup(QX, [q.image(h) for h in H.generators])
        two = SectionRealization(QA)
        assert one.induced(H).image_group.order == two.induced(QH).image_group.order
        assert one.with_induced(H).order == two.with_induced(QH).order
