# MIT License: Copyright (c) 2026, the vtlink developers.
# See the LICENSE file in the root directory for full license text.

from itertools import permutations

import pytest

from vtlink.graphs import make_named_graph, parse_graph6, relabel
from vtlink.permutations import (
    AutGroup,
    Permutation,
    all_isomorphisms,
    automorphism_group,
    brute_force_automorphisms,
    canonical_form,
    canonical_labeling,
    find_fpf_involution,
    has_fpf_involution_automorphism,
    has_involution_automorphism,
    is_asymmetric,
    is_regular_action,
    perm_profile,
)
from vtlink.random import random_graph, random_relabelling
from vtlink.testing import assert_automorphism

from .utils import from_networkx


def atlas_graphs(max_order):
    nx = pytest.importorskip("networkx")
    return [from_networkx(g) for g in nx.graph_atlas_g() if 1 <= g.number_of_nodes() <= max_order]


def test_permutation_basics():
    p = Permutation.from_cycles([(0, 2, 1)], degree=4)
    assert p.image == (2, 0, 1, 3)
    assert p(0) == 2
    assert list(p) == [2, 0, 1, 3]
    assert len(p) == p.degree == 4
    assert p * p.inverse() == Permutation.identity(4)
    assert (p * p * p).is_identity()
    assert p.cycles() == [(0, 2, 1), (3,)]
    assert p.cycle_notation() == "(0 2 1)"
    assert p.cycle_notation(names="abcd") == "(a c b)"
    assert Permutation.identity(3).cycle_notation() == "()"
    assert Permutation.from_mapping({0: 1, 1: 0}, 3).image == (1, 0, 2)
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])
    with pytest.raises(ValueError):
        p * Permutation.identity(3)


def test_composition_is_function_composition():
    p = Permutation([1, 2, 0])
    q = Permutation([0, 2, 1])
    for i in range(3):
        assert (p * q)(i) == p(q(i))


@pytest.mark.parametrize(
    "image, order, lengths, semiregular, fpf",
    [
        ([0, 1, 2, 3], 1, (1, 1, 1, 1), True, False),
        ([1, 0, 3, 2], 2, (2, 2), True, True),
        ([1, 0, 2], 2, (1, 2), False, False),
        ([1, 2, 0, 4, 3], 6, (2, 3), False, False),
        ([1, 2, 3, 4, 5, 0], 6, (6,), True, False),
    ],
)
def test_perm_profile(image, order, lengths, semiregular, fpf):
    profile = perm_profile(Permutation(image))
    assert profile.order == order
    assert profile.cycle_lengths == lengths
    assert profile.is_semiregular == semiregular
    assert profile.is_fpf_involution == fpf


@pytest.mark.parametrize(
    "graph, order",
    [
        (make_named_graph("path", 4), 2),
        (make_named_graph("cycle", 5), 10),
        (make_named_graph("complete", 5), 120),
        (make_named_graph("star", 5), 24),
        (make_named_graph("empty", 4), 24),
        (make_named_graph("empty", 0), 1),
        (make_named_graph("complete", 1), 1),
    ],
)
def test_automorphism_group_order(graph, order):
    group = automorphism_group(graph)
    assert group.group_order == order
    for generator in group.generators:
        assert_automorphism(graph, generator)


def test_automorphism_group_of_bundled_graphs(asymmetric26_graph, sd16_neighbourhood_graph, petersen_graph):
    assert automorphism_group(sd16_neighbourhood_graph).group_order == 1
    assert automorphism_group(asymmetric26_graph).group_order == 1
    assert automorphism_group(petersen_graph).group_order == 120


def test_sd16_neighbourhood_graph_is_asymmetric_by_brute_force(sd16_neighbourhood_graph):
    assert brute_force_automorphisms(sd16_neighbourhood_graph) == [Permutation.identity(6)]


def test_brute_force_threshold():
    with pytest.raises(ValueError):
        brute_force_automorphisms(make_named_graph("cycle", 9))
    assert len(brute_force_automorphisms(make_named_graph("cycle", 9), threshold=9)) == 18


def test_aut_group_elements_and_orbits():
    group = automorphism_group(make_named_graph("path", 4))
    assert group.elements() == [Permutation([0, 1, 2, 3]), Permutation([3, 2, 1, 0])]
    assert sorted(sorted(orbit) for orbit in group.orbits()) == [[0, 3], [1, 2]]
    assert group.fixes_set({1, 2})
    assert not group.fixes_set({0, 1})
    with pytest.raises(ValueError):
        automorphism_group(make_named_graph("complete", 6)).elements(max_elements=100)


def test_aut_group_drops_identity_generators():
    group = AutGroup(3, [Permutation.identity(3)], 1)
    assert group.generators == []
    assert group.elements() == [Permutation.identity(3)]


def test_automorphisms_match_brute_force_on_atlas():
    for graph in atlas_graphs(6):
        assert set(automorphism_group(graph).elements()) == set(brute_force_automorphisms(graph))


@pytest.mark.slow
def test_automorphisms_match_brute_force_on_atlas_order_7():
    for graph in atlas_graphs(7):
        if graph.order == 7:
            assert set(automorphism_group(graph).elements()) == set(brute_force_automorphisms(graph))


def test_asymmetric_graph_counts():
    counts = {}
    for graph in atlas_graphs(6):
        counts[graph.order] = counts.get(graph.order, 0) + is_asymmetric(graph)
    assert counts == {1: 1, 2: 0, 3: 0, 4: 0, 5: 0, 6: 8}


@pytest.mark.slow
def test_asymmetric_graph_count_order_7():
    assert sum(is_asymmetric(graph) for graph in atlas_graphs(7) if graph.order == 7) == 152


def test_is_asymmetric():
    assert is_asymmetric(make_named_graph("complete", 1))
    assert not is_asymmetric(make_named_graph("complete", 2))


def test_canonical_forms_separate_atlas_graphs():
    graphs = atlas_graphs(6)
    forms = {canonical_form(graph) for graph in graphs}
    assert len(forms) == len(graphs)


def test_canonical_form_is_invariant(random_small_graph, rng):
    form = canonical_form(random_small_graph)
    for _ in range(100):
        relabelled, _ = random_relabelling(random_small_graph, rng)
        assert canonical_form(relabelled) == form


def test_canonical_form_of_larger_graphs(rng):
    for order in [9, 12, 16]:
        graph = random_graph(order, 0.5, random_state=rng)
        relabelled, _ = random_relabelling(graph, rng)
        assert canonical_form(relabelled) == canonical_form(graph)


def test_canonical_form_parses_back():
    triangle = parse_graph6(canonical_form(make_named_graph("complete", 3)))
    assert triangle == make_named_graph("complete", 3)
    assert canonical_form(make_named_graph("path", 4)) != canonical_form(make_named_graph("star", 4))


def test_canonical_labeling_gives_canonical_copy(random_small_graph, rng):
    relabelled, _ = random_relabelling(random_small_graph, rng)
    first = relabel(random_small_graph, canonical_labeling(random_small_graph))
    second = relabel(relabelled, canonical_labeling(relabelled))
    assert first == second


def test_all_isomorphisms():
    k3 = make_named_graph("complete", 3)
    family = all_isomorphisms(k3, k3)
    assert len(family) == 6
    assert len(set(family.isomorphisms())) == 6

    assert not all_isomorphisms(make_named_graph("path", 4), make_named_graph("star", 4))
    assert len(all_isomorphisms(make_named_graph("path", 4), make_named_graph("star", 4))) == 0
    assert not all_isomorphisms(make_named_graph("path", 4), make_named_graph("path", 5))

    c5 = make_named_graph("cycle", 5)
    assert len(all_isomorphisms(c5, relabel(c5, [3, 0, 4, 1, 2]))) == 10


def test_all_isomorphisms_are_isomorphisms(random_small_graph, rng):
    relabelled, _ = random_relabelling(random_small_graph, rng)
    family = all_isomorphisms(random_small_graph, relabelled)
    assert len(family) == automorphism_group(relabelled).group_order
    for phi in family.isomorphisms():
        assert relabel(random_small_graph, phi) == relabelled


def _brute_force_fpf(graph):
    return any(perm_profile(p).is_fpf_involution for p in brute_force_automorphisms(graph))


@pytest.mark.parametrize(
    "graph, expected",
    [
        (make_named_graph("cycle", 4), True),
        (make_named_graph("cycle", 5), False),
        (make_named_graph("path", 4), True),
        (make_named_graph("star", 4), False),
        (make_named_graph("empty", 0), True),
    ],
)
def test_has_fpf_involution_automorphism(graph, expected):
    assert has_fpf_involution_automorphism(graph) == expected


def test_fpf_involution_matches_brute_force_on_atlas():
    for graph in atlas_graphs(6):
        involution = find_fpf_involution(graph)
        assert (involution is not None) == _brute_force_fpf(graph)
        if involution is not None:
            assert perm_profile(involution).is_fpf_involution
            assert_automorphism(graph, involution)


def test_has_involution_automorphism_with_fixed_points():
    star = make_named_graph("star", 4)
    assert not has_involution_automorphism(star)
    assert has_involution_automorphism(star, fixed_points=True)
    assert not has_involution_automorphism(make_named_graph("complete", 1), fixed_points=True)


def test_is_regular_action():
    rotations = [Permutation([(i + k) % 4 for i in range(4)]) for k in range(4)]
    report = is_regular_action(rotations, 4)
    assert report == (True, True, True, True, True)

    symmetric = [Permutation(image) for image in permutations(range(3))]
    report = is_regular_action(symmetric, 3)
    assert report == (False, False, False, False, True)

    klein = [Permutation(image) for image in ([0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0])]
    assert is_regular_action(klein, 4).agree


def test_is_regular_action_rejects_invalid_groups():
    with pytest.raises(ValueError):
        is_regular_action([], 3)
    with pytest.raises(ValueError):
        is_regular_action([Permutation([1, 2, 0])], 3)
    with pytest.raises(ValueError):
        is_regular_action([Permutation([0, 1, 2]), Permutation([1, 0, 2])], 3)
