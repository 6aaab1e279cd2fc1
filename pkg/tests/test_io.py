import json
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from carterlab.builders import alternating, cayley_from_group, symmetric
from carterlab.carter import carter_subgroups, check_theorem
from carterlab.catalog import catalog_lookup
from carterlab.errors import DegreeMismatch, NotALatinSquare, ParseError
from carterlab.group import generate
from carterlab.io import (
    format_cayley_file, format_group_file, parse_group_file, read_group_file, serialize_report, to_record,
)
from carterlab.perm import Permutation

from oracles import closure

KLEIN = "cayley 4\n1 2 3 4\n2 1 4 3\n3 4 1 2\n4 3 2 1\n"


def test_alt4_from_text():
    G = parse_group_file("degree 4\n(1 2)(3 4)\n(1 2 3)\n")
    assert G.order == 12
    assert G.element_set() == closure([Permutation.parse("(1 2)(3 4)", 4), Permutation.parse("(1 2 3)", 4)], 4)


def test_trivial_group_of_degree_one():
    G = parse_group_file("degree 1\n")
    assert G.order == 1 and G.degree == 1


def test_klein_cayley_table():
    G = parse_group_file(KLEIN)
    assert G.order == 4 and G.degree == 4
    assert all(g.order() <= 2 for g in G.elements())
    # regular action: no non-identity element fixes a point
    assert all(all(g[i] != i for i in range(4)) for g in G.elements() if not g.is_identity())


def test_metadata_and_ids(tmp_path):
    gf = read_group_file("# id: Alt4\n# source: hand\ndegree 4\n(1 2 3)\n(2 3 4)\n")
    assert gf.id == "Alt4" and gf.metadata == {"id": "Alt4", "source": "hand"}
    p = tmp_path / "mine.grp"
    p.write_text("degree 3\n(1 2)\n")
    assert read_group_file(p).id == "mine"
    assert read_group_file(str(p)).group().order == 2


@pytest.mark.parametrize("text, line, column", [
    ("degree 4\n(1 2\n", 2, None),
    ("degree 3\n(1 2)\n(1 x)\n", 3, None),
    ("order 4\n", 1, 1),
    ("degree four\n", 1, 8),
    ("", 1, None),
    ("cayley 2\n1 2\n2 a\n", 3, 3),
])
def test_parse_errors_carry_positions(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_group_file(text)
    assert info.value.line == line
    if column is not None:
        assert info.value.column == column
    assert f"line {line}" in str(info.value)


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch) as info:
        parse_group_file("degree 3\n(1 2)\n(1 4)\n")
    assert (info.value.line, info.value.column) == (3, 4)
    with pytest.raises(DegreeMismatch):
        parse_group_file("cayley 2\n1 2\n2 1 3\n")
    with pytest.raises(DegreeMismatch):
        parse_group_file("cayley 3\n1 2 3\n2 3 1\n")


def test_not_a_latin_square():
    with pytest.raises(NotALatinSquare):
        parse_group_file("cayley 2\n1 2\n2 2\n")
    with pytest.raises(NotALatinSquare):
        parse_group_file("cayley 2\n2 1\n1 2\n")


def test_non_associative_table_is_rejected():
    # a Latin square with identity row/column that is not a group
    text = "cayley 5\n1 2 3 4 5\n2 1 4 5 3\n3 5 1 2 4\n4 3 5 1 2\n5 4 2 3 1\n"
    with pytest.raises(ParseError, match="associative"):
        parse_group_file(text)


@pytest.mark.parametrize("G", [symmetric(4), alternating(5), generate([], degree=3)], ids=["S4", "A5", "1"])
def test_round_trip(G):
    back = parse_group_file(format_group_file(G, "x"))
    assert back.element_set() == G.element_set()
    table = [[x + 1 for x in row] for row in cayley_from_group(G)] if G.order <= 60 else None
    if table:
        H = parse_group_file(format_cayley_file(table, "x"))
        assert H.order == G.order


@given(st.integers(1, 6).flatmap(lambda n: st.lists(st.permutations(list(range(n))), max_size=3)
                                 .map(lambda gs: (n, gs))))
def test_round_trip_property(data):
    n, gens = data
    G = generate([Permutation(g) for g in gens], degree=n)
    assert parse_group_file(format_group_file(G)).element_set() == G.element_set()


def test_serialization_is_deterministic():
    a = serialize_report(carter_subgroups(symmetric(4), group_id="Sym4"), "text")
    b = serialize_report(carter_subgroups(symmetric(4), group_id="Sym4"), "text")
    assert a == b
    s1 = serialize_report(check_theorem(symmetric(4), group_id="Sym4"), "structured")
    s2 = serialize_report(check_theorem(symmetric(4), group_id="Sym4"), "structured")
    assert s1 == s2


GOLDEN_CARTER_SYM4 = """\
kind: carter
group_id: Sym4
group_order: 24
method: exhaustive
conjugate: true
total_count: 3
classes:
- order: 8
  generators:
  - (1 3 2 4)
  - (3 4)
  class_size: 3
limits:
  subgroups: 400
  pruned: 10000
  degree: 2500
  overgroups: 400
  normal: 10000
"""


def test_golden_field_names():
    rec = to_record(carter_subgroups(symmetric(4), group_id="Sym4"))
    assert list(rec) == ["kind", "group_id", "group_order", "method", "conjugate", "total_count", "classes",
                         "limits"]
    assert list(rec["classes"][0]) == ["order", "generators", "class_size"]
    text = serialize_report(carter_subgroups(symmetric(4), group_id="Sym4"), "text")
    assert text == GOLDEN_CARTER_SYM4
    theorem = to_record(check_theorem(symmetric(4), group_id="Sym4"))
    assert list(theorem)[:5] == ["kind", "group_id", "star", "carter_conjugate", "verdict"]
    cat = to_record(catalog_lookup("alternating"))
    assert list(cat) == ["kind", "family", "verdict", "conjugate", "condition", "condition_text", "row",
                         "parameter_constraints", "unevaluated"]


def test_structured_output_is_json_of_the_same_record():
    rep = carter_subgroups(symmetric(3), group_id="Sym3")
    assert json.loads(serialize_report(rep, "structured")) == to_record(rep)
    with pytest.raises(ValueError):
        serialize_report(rep, "xml")
