import random

import pytest

from carterlab.builders import alternating, cyclic, direct_product, symmetric
from carterlab.carter import carter_subgroups, check_star, check_theorem, is_carter, nilpotent_subgroup_classes
from carterlab.config import Limits
from carterlab.errors import GroupTooLarge, NotASubgroup
from carterlab.group import Subgroup, generate
from carterlab.lattice import all_subgroup_classes
from carterlab.sections import SectionRealization
from carterlab.series import is_nilpotent, is_soluble

from conftest import cyc, d8, klein_four, named
from oracles import NaiveGroup

PRUNED_ONLY = Limits(subgroups=0)


def _naive_carter(G):
    naive = NaiveGroup(G.element_set())
    carter = naive.carter_subgroups()
    classes = naive.conjugacy_classes_of(carter)
    return sorted((len(c[0]), len(c)) for c in classes), {naive.elements_of(s) for s in carter}


def _report_shape(rep):
    return sorted((c.order, c.class_size) for c in rep.classes)


def _report_members(rep):
    return {H.element_set() for c in rep.classes for H in c.conjugates()}


def test_is_carter_examples():
    assert is_carter(named("Sym3"), generate([cyc(3, (0, 1))]))
    assert not is_carter(named("Sym4"), klein_four())
    assert is_carter(d8(), d8())
    with pytest.raises(NotASubgroup):
        is_carter(named("Alt4"), generate([cyc(4, (0, 1))]))


# named ground truth, frozen from the naive oracle
GROUND_TRUTH = {
    "Sym3": [(2, 3)],
    "Alt4": [(3, 4)],
    "Sym4": [(8, 3)],
    "Alt5": [],
    "Sym5": [(8, 15)],
}


@pytest.mark.parametrize("name", sorted(GROUND_TRUTH))
def test_carter_subgroups_named(name):
    G = named(name)
    rep = carter_subgroups(G)
    shape, members = _naive_carter(G)
    assert shape == GROUND_TRUTH[name]
    assert _report_shape(rep) == shape
    assert _report_members(rep) == members
    assert rep.total_count == sum(s for _, s in shape)
    assert rep.conjugate


def test_alt5_has_no_carter_subgroups_but_counts_as_conjugate():
    rep = carter_subgroups(named("Alt5"))
    assert rep.classes == [] and rep.total_count == 0 and rep.conjugate is True


@pytest.mark.parametrize("G", [symmetric(4), symmetric(5), direct_product(alternating(5), cyclic(2)),
                               direct_product(symmetric(4), symmetric(3))], ids=["S4", "S5", "A5xC2", "S4xS3"])
def test_pruned_search_agrees_with_exhaustive(G):
    ex = carter_subgroups(G, Limits(subgroups=G.order))
    pr = carter_subgroups(G, PRUNED_ONLY)
    assert ex.method == "exhaustive" and pr.method == "pruned"
    assert [(c.order, c.class_size, c.representative.indices) for c in ex.classes] == \
        [(c.order, c.class_size, c.representative.indices) for c in pr.classes]


def test_limits_are_enforced():
    with pytest.raises(GroupTooLarge):
        carter_subgroups(symmetric(5), Limits(subgroups=10, pruned=100))


def test_nilpotent_subgroup_classes_examples():
    assert [c.order for c in nilpotent_subgroup_classes(named("Sym3"))] == [1, 2, 3]
    assert len(nilpotent_subgroup_classes(generate([], degree=2))) == 1
    assert len(nilpotent_subgroup_classes(klein_four())) == 5


def test_star_examples():
    rep = check_star(named("Sym4"))
    assert rep.satisfied and rep.entries == []
    rep = check_star(named("Alt5"))
    assert rep.satisfied and rep.entries
    assert {e.induced_group_order for e in rep.entries} == {60}
    assert rep.factors == ["Alt_5"]
    rep = check_star(named("Sym5"))
    assert rep.satisfied
    assert {e.induced_group_order for e in rep.entries} == {60, 120}


def test_star_deduplication_by_conjugacy():
    """Conjugate nilpotent subgroups give induced groups of the same order and verdict."""
    S5 = named("Sym5")
    A5 = Subgroup(S5, alternating(5).generators)
    real = SectionRealization(A5)
    rng = random.Random(11)
    for cls in nilpotent_subgroup_classes(S5):
        N = cls.representative
        base = real.with_induced(N)
        verdict = carter_subgroups(base).conjugate
        for _ in range(2):
            g = S5.random_element(rng)
            M = Subgroup(S5, [h ^ g for h in N.generators])
            other = real.with_induced(M)
            assert other.order == base.order
            assert carter_subgroups(other).conjugate == verdict


@pytest.mark.parametrize("name", ["Sym4", "Alt5", "Sym5"])
def test_theorem_examples(name):
    v = check_theorem(named(name))
    assert (v.star, v.carter_conjugate, v.verdict) == (True, True, "consistent")


def test_soluble_corpus_has_one_carter_class(soluble_corpus):
    for gid, G in soluble_corpus[::4]:
        rep = carter_subgroups(G)
        assert is_soluble(G)
        if G.order > 1:
            assert len(rep.classes) == 1 and rep.total_count >= 1, gid
        for c in rep.classes:
            assert is_carter(G, c.representative), gid
            assert is_nilpotent(c.representative)


def test_no_carter_subgroup_is_missed(soluble_corpus):
    for gid, G in soluble_corpus[::3]:
        shape, members = _naive_carter(G)
        rep = carter_subgroups(G)
        assert _report_shape(rep) == shape, gid
        assert _report_members(rep) == members, gid


def test_class_sizes_match_exhaustive_list():
    G = named("Sym5")
    full = {c.representative.indices: c.class_size for c in all_subgroup_classes(G)}
    for c in carter_subgroups(G).classes:
        assert full[c.representative.indices] == c.class_size
