import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from carterlab.builders import alternating, cyclic, direct_product, symmetric, wreath_product
from carterlab.errors import AbelianFactor, GroupTooLarge, NotMinimalNormal
from carterlab.group import Subgroup, generate
from carterlab.lattice import (
    _normal_subgroups_idx, all_subgroup_classes, are_conjugate, composition_series, decompose_direct_factors,
    minimal_normal_subgroups, nilpotent_classes, normal_subgroups,
)
from carterlab.perm import Permutation
from carterlab.search import is_normal, normalizer
from carterlab.series import is_nilpotent
from carterlab.simple import alternating_element_orders, identify_simple, psl2_element_orders

from conftest import cyc, klein_four, named
from oracles import NaiveGroup


def _class_orders(classes):
    return [(c.order, c.class_size) for c in classes]


def test_subgroup_classes_sym3():
    classes = all_subgroup_classes(named("Sym3"))
    assert _class_orders(classes) == [(1, 1), (2, 3), (3, 1), (6, 1)]
    assert sum(c.class_size for c in classes) == 6


def test_subgroup_classes_small_cases():
    assert len(all_subgroup_classes(generate([], degree=2))) == 1
    classes = all_subgroup_classes(klein_four())
    assert len(classes) == 5 and all(c.class_size == 1 for c in classes)


def test_subgroup_classes_refuses_large_groups():
    with pytest.raises(GroupTooLarge):
        all_subgroup_classes(symmetric(6))
    assert len(all_subgroup_classes(symmetric(6), order_cap=720)) == 56


def test_class_size_is_index_of_normalizer():
    G = named("Sym4")
    for c in all_subgroup_classes(G):
        assert c.class_size == G.order // normalizer(G, c.representative).order
        members = c.conjugates()
        assert len(members) == c.class_size
        assert members[0].element_set() == c.representative.element_set()


def test_representatives_are_lexicographically_least():
    G = named("Sym4")
    for c in all_subgroup_classes(G):
        keys = [tuple(sorted(H.element_set())) for H in c.conjugates()]
        assert tuple(sorted(c.representative.element_set())) == min(keys)


def _naive_count(G) -> int:
    return len(NaiveGroup(G.element_set()).all_subgroups)


@pytest.mark.parametrize("name", ["Sym3", "Sym4", "Alt4", "Alt5", "D8", "D10"])
def test_subgroup_totals_named(name):
    G = named(name)
    assert sum(c.class_size for c in all_subgroup_classes(G)) == _naive_count(G)


def test_subgroup_totals_over_corpus(soluble_corpus):
    checked = 0
    for gid, G in soluble_corpus:
        if G.order > 48 and not gid.endswith("_01"):
            continue
        assert sum(c.class_size for c in all_subgroup_classes(G)) == _naive_count(G), gid
        checked += 1
    assert checked > 150


@pytest.mark.parametrize("G", [symmetric(5), alternating(6), direct_product(symmetric(4), symmetric(3)),
                               direct_product(alternating(5), cyclic(2))], ids=["S5", "A6", "S4xS3", "A5xC2"])
def test_nilpotent_search_matches_filtered_enumeration(G):
    full = [c for c in all_subgroup_classes(G, order_cap=G.order) if is_nilpotent(c.representative)]
    fast = nilpotent_classes(G, G.order)
    assert [(c.order, c.class_size, tuple(sorted(c.representative.indices))) for c in fast] == \
        [(c.order, c.class_size, tuple(sorted(c.representative.indices))) for c in full]


# -- conjugacy -------------------------------------------------------------------


def test_are_conjugate_examples():
    S3 = named("Sym3")
    H = generate([cyc(3, (0, 1))])
    K = generate([cyc(3, (1, 2))])
    g = are_conjugate(S3, H, K)
    assert g is not None and (cyc(3, (0, 1)) ^ g) == cyc(3, (1, 2))
    assert are_conjugate(S3, H, H).is_identity()
    S4 = named("Sym4")
    assert are_conjugate(S4, generate([cyc(4, (0, 1))]), generate([cyc(4, (0, 1), (2, 3))])) is None


def _conjugate_subgroup(H, g):
    return generate([h ^ g for h in H.generators], H.degree)


@settings(max_examples=40)
@given(st.integers(0, 10 ** 6))
def test_are_conjugate_is_an_equivalence(seed):
    G = named("Sym4")
    rng = random.Random(seed)
    H = generate([G.random_element(rng)], 4)
    K = _conjugate_subgroup(H, G.random_element(rng))
    L = _conjugate_subgroup(K, G.random_element(rng))
    g = are_conjugate(G, H, K)
    h = are_conjugate(G, K, L)
    assert g is not None and h is not None
    assert _conjugate_subgroup(H, g).same_group(K)
    back = are_conjugate(G, K, H)
    assert back is not None and _conjugate_subgroup(K, g.inverse()).same_group(H)
    assert _conjugate_subgroup(H, g * h).same_group(L)


# -- normal structure ------------------------------------------------------------


def test_minimal_normal_examples():
    mins = minimal_normal_subgroups(named("Sym4"))
    assert len(mins) == 1 and mins[0].same_group(klein_four())
    AA = direct_product(alternating(5), alternating(5))
    mins = minimal_normal_subgroups(AA)
    assert [M.order for M in mins] == [60, 60]
    A5 = named("Alt5")
    assert [M.order for M in minimal_normal_subgroups(A5)] == [60]


def test_minimal_normal_are_normal_and_minimal(soluble_corpus):
    for gid, G in soluble_corpus[::9]:
        mins = minimal_normal_subgroups(G)
        normals = [N.element_set() for N in normal_subgroups(G) if N.order > 1]
        for M in mins:
            assert is_normal(G, M)
            assert not any(N < M.element_set() for N in normals), gid


def test_decompose_direct_factors():
    S5 = named("Sym5")
    A5 = Subgroup(S5, alternating(5).generators)
    assert [T.order for T in decompose_direct_factors(A5)] == [60]
    W = wreath_product(alternating(5), 2)
    B = next(M for M in minimal_normal_subgroups(W))
    factors = decompose_direct_factors(B)
    assert [T.order for T in factors] == [60, 60]
    T1, T2 = factors
    assert all(a * b == b * a for a in T1.generators for b in T2.generators)
    assert not (T1.element_set() & T2.element_set()) - {W.identity}
    assert generate(T1.generators + T2.generators, 10).order == B.order
    with pytest.raises(AbelianFactor):
        decompose_direct_factors(Subgroup(named("Sym4"), klein_four().generators))
    with pytest.raises(NotMinimalNormal):
        decompose_direct_factors(Subgroup(S5, [cyc(5, (0, 1, 2))]))


# -- composition series ----------------------------------------------------------


def test_composition_series_examples():
    cs = composition_series(named("Sym4"))
    assert cs.factor_orders() == [2, 3, 2, 2]
    assert [f.label for f in cs.factors] == ["C_2", "C_3", "C_2", "C_2"]
    cs = composition_series(named("Alt5"))
    assert [(f.order, f.label, f.abelian) for f in cs.factors] == [(60, "Alt_5", False)]
    assert composition_series(generate([], degree=3)).factors == []


def _factor_is_simple(G, top, bottom) -> bool:
    mids = _normal_subgroups_idx(G.table, top.indices, G.table.cached_generators(top.indices), inside=bottom.indices)
    return sorted(len(m) for m in mids) == [bottom.order, top.order]


def test_composition_series_over_corpus(soluble_corpus, named_corpus):
    for gid, G in soluble_corpus[::4] + [g for g in named_corpus if g[1].order <= 120]:
        a = composition_series(G, "top-down")
        b = composition_series(G, "chief")
        assert Counter(a.factor_orders()) == Counter(b.factor_orders()), gid
        prod = 1
        for o in a.factor_orders():
            prod *= o
        assert prod == G.order
        for f in a.factors:
            assert f.abelian == all(f.order % d for d in range(2, f.order))
        for hi, lo in zip(a.terms, a.terms[1:]):
            assert is_normal(hi, Subgroup(hi, lo.generators))


def test_composition_factors_are_simple():
    for G in (named("Sym4"), named("Sym5"), direct_product(alternating(5), cyclic(2))):
        cs = composition_series(G)
        for hi, lo in zip(cs.terms, cs.terms[1:]):
            assert _factor_is_simple(G, hi, lo)


def test_jordan_holder_on_non_soluble_groups():
    for G in (symmetric(5), direct_product(alternating(5), symmetric(3)), wreath_product(alternating(5), 2)):
        a = composition_series(G, "top-down")
        b = composition_series(G, "chief")
        assert Counter(f.label for f in a.factors) == Counter(f.label for f in b.factors)


# -- simple factor labels ----------------------------------------------------------


def test_simple_labels():
    psl27 = generate([Permutation.parse("(1 2 3 4 5 6 7)", 7), Permutation.parse("(1 2)(3 6)", 7)])
    assert psl27.order == 168
    assert [f.label for f in composition_series(psl27).factors] == ["PSL(2,7)"]
    assert [f.label for f in composition_series(alternating(6)).factors] == ["Alt_6"]
    assert identify_simple(20160, Counter) == "unidentified-simple-20160"
    assert identify_simple(60, lambda: Counter({1: 60})) == "unidentified-simple-60"


def test_reference_fingerprints_match_real_groups():
    A6 = NaiveGroup(alternating(6).element_set())
    orders = Counter()
    for x in A6.elements:
        orders[Permutation(x).order()] += 1
    assert orders == alternating_element_orders(6)
    psl27 = generate([Permutation.parse("(1 2 3 4 5 6 7)", 7), Permutation.parse("(1 2)(3 6)", 7)])
    assert Counter(g.order() for g in psl27.elements()) == psl2_element_orders(7)
