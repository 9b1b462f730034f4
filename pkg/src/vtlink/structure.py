# MIT License: Copyright (c) 2026, the vtlink developers.
# See the LICENSE file in the root directory for full license text.
"""Neighbourhood classes, cliques, orbit-restrictors and fixed subsets.

Statements of the form "every isomorphism between the neighbourhoods of two
members of a class" are never evaluated by enumerating isomorphisms. For a class
with representative ``r`` a :class:`NeighbourhoodFamily` stores one isomorphism
``beta_w`` from the neighbourhood of ``r`` onto the neighbourhood of each member
``w`` and generators ``tau_i`` of the automorphism group of the neighbourhood of
``r``. Every isomorphism from the neighbourhood of ``v1`` onto that of ``v2`` is
``beta_v2 * tau * beta_v1^-1`` for some ``tau``, so a set of vertices lying in every
member neighbourhood is mapped onto itself by all of them exactly when it is
mapped onto itself by every ``beta_w`` and every ``tau_i``.
"""

import logging
from collections import deque
from functools import lru_cache
from typing import FrozenSet, NamedTuple, Tuple

import numpy as np

from ._utils import as_vertex_set
from .graphs import common_neighbourhood, induced_neighbourhood, induced_subgraph, is_clique_set
from .permutations import Permutation, all_isomorphisms, automorphism_group, canonical_form

__all__ = [
    "ClassPartition",
    "CliqueWitness",
    "NeighbourhoodFamily",
    "RestrictedIsomorphisms",
    "classify_vertices",
    "cliques_of_order",
    "unique_neighbourhood_cliques",
    "neighbourhood_family",
    "vertex_family",
    "is_orbit_restrictor",
    "orbit_restrictors",
    "class_common_neighbourhood",
    "is_fixed_subset",
    "max_fixed_subset",
    "restricted_isomorphisms",
]

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

UNIQUENESS_MODES = {"iso": "iso-unique", "count": "count-unique"}


class ClassPartition(NamedTuple):
    classes: Tuple[FrozenSet[int], ...]  #: Vertex classes, ordered by smallest member
    class_key: Tuple[bytes, ...]  #: Canonical form of the induced neighbourhood shared by each class
    class_of: Tuple[int, ...]  #: Class index of every vertex

    def members(self, v):
        """The class ``[v]``."""
        return self.classes[self.class_of[v]]


class CliqueWitness(NamedTuple):
    members: FrozenSet[int]  #: The clique S
    common: FrozenSet[int]  #: Common neighbourhood of S
    uniqueness: str  #: ``"iso-unique"``, ``"count-unique"`` or ``"none"``


@lru_cache(maxsize=256)
def classify_vertices(graph):
    """Group vertices by the isomorphism type of their induced neighbourhoods.

    Examples
    --------
    >>> from vtlink.graphs import make_named_graph
    >>> from vtlink.structure import classify_vertices
    >>> [sorted(c) for c in classify_vertices(make_named_graph("star", 4)).classes]
    [[0], [1, 2, 3]]
    """
    keys = [canonical_form(induced_neighbourhood(graph, v).graph) for v in range(graph.order)]
    index = {}
    classes = []
    class_of = []
    for v, key in enumerate(keys):
        if key not in index:
            index[key] = len(classes)
            classes.append([])
        classes[index[key]].append(v)
        class_of.append(index[key])
    return ClassPartition(
        classes=tuple(frozenset(c) for c in classes),
        class_key=tuple(sorted(index, key=index.get)),
        class_of=tuple(class_of),
    )


def cliques_of_order(graph, k):
    """All vertex sets of size ``k`` that induce complete subgraphs.

    Cliques of order ``j`` are extended by common neighbours with a larger id
    than every current member.

    Raises
    ------
    ValueError
        If ``k`` is not in ``1..n``.

    Examples
    --------
    >>> from vtlink.graphs import make_named_graph
    >>> from vtlink.structure import cliques_of_order
    >>> len(cliques_of_order(make_named_graph("complete", 4), 3))
    4
    >>> cliques_of_order(make_named_graph("cycle", 5), 3)
    []
    """
    if not 1 <= k <= graph.order:
        raise ValueError("The clique order must be between 1 and {}, not {}".format(graph.order, k))

    adjacency = graph.adjacency
    # Each partial clique is stored with its candidate extensions
    level = [((v,), np.flatnonzero(adjacency[v, v + 1 :]) + v + 1) for v in range(graph.order)]
    for _ in range(k - 1):
        extended = []
        for clique, candidates in level:
            for position, w in enumerate(candidates):
                rest = candidates[position + 1 :]
                extended.append((clique + (int(w),), rest[adjacency[w, rest]]))
        level = extended
    return [frozenset(clique) for clique, _ in level]


def unique_neighbourhood_cliques(graph, k, mode="iso"):
    """Cliques of order ``k`` whose common neighbourhood is unlike that of every other such clique.

    Parameters
    ----------
    graph : Graph
    k : int
        Clique order.
    mode : {"iso", "count"}
        Compare the induced common neighbourhoods up to isomorphism, or only their sizes.

    Returns
    -------
    list of CliqueWitness

    Examples
    --------
    >>> from vtlink.graphs import make_named_graph
    >>> from vtlink.structure import unique_neighbourhood_cliques
    >>> [sorted(w.members) for w in unique_neighbourhood_cliques(make_named_graph("path", 3), 1, "count")]
    [[1]]
    >>> unique_neighbourhood_cliques(make_named_graph("complete", 4), 2)
    []
    """
    if mode not in UNIQUENESS_MODES:
        raise ValueError("Unknown uniqueness mode {!r}, expected 'iso' or 'count'".format(mode))

    cliques = cliques_of_order(graph, k)
    commons = [common_neighbourhood(graph, clique) for clique in cliques]
    if mode == "iso":
        keys = [canonical_form(induced_subgraph(graph, common).graph) for common in commons]
    else:
        keys = [len(common) for common in commons]

    multiplicity = {}
    for key in keys:
        multiplicity[key] = multiplicity.get(key, 0) + 1
    return [
        CliqueWitness(clique, common, UNIQUENESS_MODES[mode])
        for clique, common, key in zip(cliques, commons, keys)
        if multiplicity[key] == 1
    ]


class NeighbourhoodFamily:
    """Isomorphisms between the neighbourhoods of the members of one vertex class.

    Attributes
    ----------
    members : tuple of int
        The class, in ascending order.
    representative : int
        Smallest member ``r``.
    star : dict
        For each member ``w``, a dict mapping every vertex of ``N(r)`` to its image in ``N(w)``.
    automorphisms : list of dict
        Generators of the automorphism group of the neighbourhood of ``r``, as dicts on ``N(r)``.
    automorphism_order : int
        Order of that group.
    """

    def __init__(self, graph, members):
        self.graph = graph
        self.members = tuple(sorted(members))
        self.representative = self.members[0]

        view = induced_neighbourhood(graph, self.representative)
        self.star = {}
        for w in self.members:
            other = induced_neighbourhood(graph, w)
            base = all_isomorphisms(view.graph, other.graph).base
            if base is None:
                raise ValueError(
                    "Vertices {} and {} do not have isomorphic neighbourhoods".format(self.representative, w)
                )
            self.star[w] = {view.back_map[i]: other.back_map[base(i)] for i in range(len(view.back_map))}

        group = automorphism_group(view.graph)
        self.automorphism_order = group.group_order
        self.automorphisms = [
            {view.back_map[i]: view.back_map[g(i)] for i in range(len(view.back_map))} for g in group.generators
        ]

    def generator_maps(self):
        """Star isomorphisms followed by automorphism generators, as dicts."""
        return [self.star[w] for w in self.members] + list(self.automorphisms)

    def isomorphism(self, source, target, automorphism=None):
        """The isomorphism ``beta_target * automorphism * beta_source^-1`` from ``N(source)`` onto ``N(target)``."""
        inverse = {image: point for point, image in self.star[source].items()}
        forward = self.star[target]
        if automorphism is None:
            return {x: forward[inverse[x]] for x in inverse}
        return {x: forward[automorphism[inverse[x]]] for x in inverse}

    def fixes(self, vertices):
        """True if every isomorphism of the family maps ``vertices`` onto itself.

        ``vertices`` must lie in every member neighbourhood.
        """
        vertices = frozenset(vertices)
        return all(frozenset(mapping[x] for x in vertices) == vertices for mapping in self.generator_maps())

    def __repr__(self):
        return "NeighbourhoodFamily(members={}, automorphism_order={})".format(
            self.members, self.automorphism_order
        )


@lru_cache(maxsize=1024)
def _family(graph, members):
    return NeighbourhoodFamily(graph, members)


def neighbourhood_family(graph, partition=None, class_index=0):
    """The :class:`NeighbourhoodFamily` of one class of ``partition`` (by default :func:`classify_vertices`)."""
    if partition is None:
        partition = classify_vertices(graph)
    if not 0 <= class_index < len(partition.classes):
        raise IndexError("Class index {} out of range for {} classes".format(class_index, len(partition.classes)))
    return _family(graph, partition.classes[class_index])


def vertex_family(graph, v):
    """The :class:`NeighbourhoodFamily` of the class containing ``v``."""
    partition = classify_vertices(graph)
    return _family(graph, partition.members(v))


def is_orbit_restrictor(graph, s):
    """True if the clique ``s`` contains the class of each member and is respected by all class isomorphisms.

    For every ``v`` in ``s`` the class ``[v]`` must lie in ``s``, and every isomorphism
    from the neighbourhood of ``v1`` onto that of ``v2``, for ``v1, v2`` in ``[v]``, must map
    ``s - {v1}`` onto ``s - {v2}``.

    Raises
    ------
    ValueError
        If ``s`` is not a clique.

    Examples
    --------
    >>> from vtlink.graphs import make_named_graph
    >>> from vtlink.structure import is_orbit_restrictor
    >>> is_orbit_restrictor(make_named_graph("complete", 4), {0, 1})
    False
    >>> is_orbit_restrictor(make_named_graph("star", 4), {0})
    True
    """
    s = as_vertex_set(s, graph.order)
    if not is_clique_set(graph, s):
        raise ValueError("{} is not a clique".format(sorted(s)))

    partition = classify_vertices(graph)
    for class_index in sorted({partition.class_of[v] for v in s}):
        members = partition.classes[class_index]
        if not members <= s:
            return False
        family = _family(graph, members)
        r = family.representative
        for w in family.members:
            if frozenset(family.star[w][x] for x in s - {r}) != s - {w}:
                return False
        if not all(frozenset(tau[x] for x in s - {r}) == s - {r} for tau in family.automorphisms):
            return False
    return True


def orbit_restrictors(graph, max_order=8):
    """All orbit-restrictors with at most ``max_order`` vertices, smallest first."""
    partition = classify_vertices(graph)
    found = []
    for k in range(1, min(max_order, graph.order) + 1):
        for clique in cliques_of_order(graph, k):
            if all(partition.members(v) <= clique for v in clique) and is_orbit_restrictor(graph, clique):
                found.append(clique)
    return found


def class_common_neighbourhood(graph, v):
    """The vertices adjacent to every member of the class of ``v``."""
    return common_neighbourhood(graph, classify_vertices(graph).members(v))


def is_fixed_subset(graph, v, z):
    """True if ``z`` lies in every neighbourhood of the class of ``v`` and every class isomorphism fixes it.

    Examples
    --------
    >>> from vtlink.graphs import make_named_graph
    >>> from vtlink.structure import is_fixed_subset
    >>> is_fixed_subset(make_named_graph("complete", 4), 0, set())
    True
    >>> is_fixed_subset(make_named_graph("complete", 4), 0, {1})
    False
    """
    if not 0 <= v < graph.order:
        raise IndexError("Vertex {} is out of range for a graph of order {}".format(v, graph.order))
    z = as_vertex_set(z, graph.order)
    if not z <= class_common_neighbourhood(graph, v):
        return False
    return vertex_family(graph, v).fixes(z)


def max_fixed_subset(graph, v):
    """The largest subset fixed by every isomorphism between neighbourhoods of the class of ``v``.

    Starting from the common neighbourhood of the class, vertices that some
    generator map sends outside the current set are deleted until nothing changes.

    Examples
    --------
    >>> from vtlink.graphs import make_named_graph
    >>> from vtlink.structure import max_fixed_subset
    >>> sorted(max_fixed_subset(make_named_graph("star", 4), 0))
    [1, 2, 3]
    >>> max_fixed_subset(make_named_graph("cycle", 5), 0)
    frozenset()
    """
    family = vertex_family(graph, v)
    candidates = set(class_common_neighbourhood(graph, v))
    maps = family.generator_maps()
    inverses = [{image: point for point, image in mapping.items()} for mapping in maps]

    changed = True
    while changed:
        changed = False
        for mapping, inverse in zip(maps, inverses):
            for x in sorted(candidates):
                # Both directions are needed for the set to be mapped onto itself
                if mapping[x] not in candidates or inverse.get(x) not in candidates:
                    logger.debug("Removing vertex %d from the fixed subset candidates of %d", x, v)
                    candidates.discard(x)
                    changed = True
    return frozenset(candidates)


class RestrictedIsomorphisms(NamedTuple):
    points: Tuple[int, ...]  #: The invariant set F, sorted; permutations act on positions in this tuple
    permutations: FrozenSet[Permutation]  #: Distinct restrictions found
    complete: bool  #: False if enumeration stopped at the cap


def restricted_isomorphisms(family, f, targets=None, sources=None, max_isomorphisms=100000):
    """Restrictions to ``f`` of the isomorphisms between member neighbourhoods of a class.

    ``f`` must be fixed by the family (for instance :func:`max_fixed_subset`). Only
    isomorphisms from the neighbourhood of a member of ``sources`` onto that of a
    member of ``targets`` are considered; both default to the whole class.
    """
    points = tuple(sorted(f))
    position = {x: i for i, x in enumerate(points)}
    targets = family.members if targets is None else tuple(targets)
    sources = family.members if sources is None else tuple(sources)

    def restrict(mapping):
        return Permutation(position[mapping[x]] for x in points)

    generators = [restrict(tau) for tau in family.automorphisms]
    identity = Permutation.identity(len(points))
    restricted_group = {identity}
    queue = deque([identity])
    complete = True
    while queue and complete:
        element = queue.popleft()
        for generator in generators:
            product = generator * element
            if product not in restricted_group:
                restricted_group.add(product)
                queue.append(product)
                if len(restricted_group) > max_isomorphisms:
                    complete = False
                    break

    stars = {w: restrict(family.star[w]) for w in set(targets) | set(sources)}
    found = set()
    for target in targets:
        for source in sources:
            inverse_source = stars[source].inverse()
            for element in restricted_group:
                found.add(stars[target] * element * inverse_source)
                if len(found) > max_isomorphisms:
                    return RestrictedIsomorphisms(points, frozenset(found), False)
    return RestrictedIsomorphisms(points, frozenset(found), complete)
