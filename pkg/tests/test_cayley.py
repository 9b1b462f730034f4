# MIT License: Copyright (c) 2026, the vtlink developers.
# See the LICENSE file in the root directory for full license text.

import pytest

from vtlink.cayley import (
    Census,
    GroupTable,
    GroupTableError,
    cayley_graph,
    connection_set,
    connection_sets,
    cyclic_group,
    default_catalog,
    dihedral_group,
    direct_product,
    generated_subgroup,
    group_from_table,
    is_left_translation_automorphism,
    left_translation,
    load_census,
    make_group,
    neighbourhood_census,
    proposition_check,
    quaternion_group,
    save_census,
    semidihedral_demo,
    semidihedral_group,
    soundness_check,
)
from vtlink.graphs import graph_stats, make_named_graph, parse_graph6
from vtlink.permutations import all_isomorphisms, automorphism_group, canonical_form, is_asymmetric

NON_ASSOCIATIVE_LOOP = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]


@pytest.mark.parametrize(
    "table, axiom",
    [
        ([[0, 2], [1, 0]], "closure"),
        ([[0, 0], [0, 0]], "identity"),
        ([[0, 1], [1, 1]], "inverse"),
        (NON_ASSOCIATIVE_LOOP, "associativity"),
        ([], "closure"),
    ],
)
def test_group_table_axioms(table, axiom):
    with pytest.raises(GroupTableError) as excinfo:
        GroupTable(table)
    assert excinfo.value.axiom == axiom


def test_group_table_operations():
    group = cyclic_group(6)
    assert group.identity == 0
    assert group.product(2, 3, 4) == 3
    assert group.power(5, 3) == 3
    assert group.power(1, -1) == 5
    assert [group.element_order(a) for a in range(6)] == [1, 6, 3, 2, 3, 6]
    assert group.element("4") == 4
    with pytest.raises(KeyError):
        group.element("g")
    with pytest.raises(ValueError):
        GroupTable(group.mul, names=["a"])


def test_dihedral_group():
    group = dihedral_group(8)
    assert group.order == 8
    r, s = group.element("r"), group.element("s")
    assert group.element_order(r) == 4
    assert group.element_order(s) == 2
    assert group.product(s, r, s) == group.power(r, -1)
    assert sorted(group.element_order(a) for a in range(8)) == [1, 2, 2, 2, 2, 2, 4, 4]
    with pytest.raises(ValueError):
        dihedral_group(7)


def test_quaternion_group():
    group = quaternion_group()
    assert group.name == "Q8"
    assert sorted(group.element_order(a) for a in range(8)) == [1, 2, 4, 4, 4, 4, 4, 4]


def test_semidihedral_group():
    group = semidihedral_group()
    x, y = group.element("x"), group.element("y")
    assert group.order == 16
    assert group.element_order(y) == 8
    assert group.element_order(x) == 2
    assert group.product(x, y, x) == group.power(y, 3)
    # y^5x equals x y^-1
    assert group.element("y^5x") == group.product(x, group.power(y, -1))


def test_direct_product():
    klein = direct_product(cyclic_group(2), cyclic_group(2))
    assert klein.name == "C2xC2"
    assert klein.names == ("(0,0)", "(0,1)", "(1,0)", "(1,1)")
    assert [klein.element_order(a) for a in range(4)] == [1, 2, 2, 2]


def test_group_from_table():
    group = group_from_table("# Klein four-group\norder=4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n")
    assert group.order == 4
    with pytest.raises(GroupTableError):
        group_from_table("order=2\n0 1")
    with pytest.raises(GroupTableError):
        group_from_table("n=2\n0 1\n1 0")
    with pytest.raises(GroupTableError):
        group_from_table("order=3\n0 1 2\n1 2 0\n2 0 0")


def test_make_group():
    assert make_group("cyclic(5)").order == 5
    assert make_group("dihedral(10)").name == "D10"
    assert make_group("quaternion8").name == "Q8"
    assert make_group("semidihedral16").order == 16
    assert make_group("direct_product(direct_product(cyclic(2),cyclic(2)), cyclic(3))").order == 12
    with pytest.raises(ValueError):
        make_group("alternating(4)")


def test_default_catalog():
    catalog = default_catalog()
    assert max(group.order for group in catalog) == 16
    assert "SD16" in {group.name for group in catalog}
    assert all(group.order <= 6 for group in default_catalog(6))


def test_connection_set_validation():
    group = cyclic_group(5)
    assert connection_set(group, [1, 4]) == {1, 4}
    with pytest.raises(ValueError):
        connection_set(group, [0, 1, 4])
    with pytest.raises(ValueError):
        connection_set(group, [1])
    with pytest.raises(ValueError):
        connection_set(group, [5])


def test_connection_sets():
    group = cyclic_group(6)
    sets = list(connection_sets(group))
    # Atoms {1, 5}, {2, 4} and {3}
    assert len(sets) == 8
    assert all(connection_set(group, s) == s for s in sets)
    assert all(len(s) <= 2 for s in connection_sets(group, max_size=2))
    assert len(list(connection_sets(group, max_size=2))) == 4


def test_cayley_graph():
    cycle = cayley_graph(cyclic_group(5), {1, 4})
    assert canonical_form(cycle) == canonical_form(make_named_graph("cycle", 5))
    assert cycle.labels == ("0", "1", "2", "3", "4")
    assert cayley_graph(cyclic_group(4), set()) == make_named_graph("empty", 4)


def test_cayley_graph_connectivity_matches_generation():
    for group in default_catalog(8):
        for elements in connection_sets(group):
            graph = cayley_graph(group, elements)
            generates = generated_subgroup(group, elements) == frozenset(range(group.order))
            assert graph_stats(graph).is_connected == generates


def test_left_translations_are_automorphisms():
    group = dihedral_group(10)
    graph = cayley_graph(group, [group.element("r"), group.element("r^4"), group.element("s")])
    for a in range(group.order):
        assert left_translation(group, a)(group.identity) == a
        assert is_left_translation_automorphism(graph, group, a)
    assert automorphism_group(graph).group_order % group.order == 0


def test_generated_subgroup():
    group = cyclic_group(12)
    assert generated_subgroup(group, [4]) == {0, 4, 8}
    assert generated_subgroup(group, []) == {0}
    assert generated_subgroup(group, [4, 6]) == {0, 2, 4, 6, 8, 10}


def test_semidihedral_demo(sd16_neighbourhood_graph):
    demo = semidihedral_demo()
    assert demo.group.name == "SD16"
    assert len(demo.connection_set) == 6
    assert graph_stats(demo.graph).valencies == (6,) * 16

    neighbourhood = parse_graph6(demo.graph6)
    assert neighbourhood.order == 6
    assert is_asymmetric(neighbourhood)
    assert all_isomorphisms(neighbourhood, sd16_neighbourhood_graph)
    assert demo.report.asymmetric
    assert demo.report.overall.outcome != "eliminated"


def test_semidihedral_neighbourhood_edges():
    demo = semidihedral_demo()
    edges = {frozenset(demo.neighbourhood.label(v) for v in edge) for edge in demo.neighbourhood.edges()}
    expected = [("y", "yx"), ("y^7", "x"), ("yx", "y^5x"), ("yx", "y^4"), ("y^5x", "x"), ("y^5x", "y^4")]
    assert edges == {frozenset(edge) for edge in expected}


def test_neighbourhood_census_of_cyclic_group():
    census = neighbourhood_census([cyclic_group(5)])
    assert census.forms == (b"A?", b"C~")
    assert census.meta.catalog == ("C5",)
    assert census.sources[b"A?"][0] == "C5"

    with_disconnected = neighbourhood_census([cyclic_group(5)], connected_only=False)
    assert b"?" in with_disconnected.forms


def test_census_round_trip(tmp_path):
    census = neighbourhood_census(default_catalog(6))
    path = tmp_path / "census.g6"
    save_census(census, path)
    loaded = load_census(path)
    assert loaded.forms == census.forms
    assert loaded.meta == census.meta
    assert isinstance(loaded, Census)

    (tmp_path / "broken.g6").write_text("A_\n")
    with pytest.raises(ValueError):
        load_census(tmp_path / "broken.g6")


def test_proposition_check(sd16_neighbourhood_graph):
    assert proposition_check(sd16_neighbourhood_graph) == []
    # Only asymmetric graphs are checked
    assert proposition_check(make_named_graph("cycle", 5)) == []


def test_soundness_on_small_catalog():
    census = neighbourhood_census(default_catalog(8))
    assert len(census.forms) > 10
    assert soundness_check(census) == []


def test_soundness_check_reports_a_planted_graph(asymmetric26_graph):
    census = neighbourhood_census(default_catalog(8))
    violations = soundness_check([*census.graphs(), asymmetric26_graph])
    assert {violation.form for violation in violations} == {canonical_form(asymmetric26_graph)}
    assert "eliminated" in {violation.kind for violation in violations}


def test_semidihedral_census_contains_demo_neighbourhood(sd16_neighbourhood_graph):
    census = neighbourhood_census([semidihedral_group()])
    assert canonical_form(sd16_neighbourhood_graph) in census.forms


def test_soundness_on_graph_list():
    graphs = [make_named_graph("cycle", 5), make_named_graph("cycle", 6), make_named_graph("empty", 3)]
    assert soundness_check(graphs) == []


@pytest.mark.slow
def test_soundness_on_full_catalog(sd16_neighbourhood_graph):
    census = neighbourhood_census(default_catalog(16))
    assert canonical_form(sd16_neighbourhood_graph) in census.forms
    assert soundness_check(census) == []
