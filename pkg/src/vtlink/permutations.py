# MIT License: Copyright (c) 2026, the vtlink developers.
# See the LICENSE file in the root directory for full license text.
"""Permutations, automorphism groups, isomorphism families and canonical forms."""

import logging
from collections import deque
from functools import lru_cache
from itertools import permutations as _all_permutations
from typing import NamedTuple, Tuple

import numpy as np

from ._refinement import canonical_search, refine
from ._utils import DisjointSets, InvariantViolation
from .graphs import emit_graph6, relabel

__all__ = [
    "Permutation",
    "PermProfile",
    "AutGroup",
    "IsoFamily",
    "RegularityReport",
    "perm_profile",
    "automorphism_group",
    "brute_force_automorphisms",
    "is_asymmetric",
    "canonical_labeling",
    "canonical_form",
    "all_isomorphisms",
    "find_fpf_involution",
    "has_fpf_involution_automorphism",
    "has_involution_automorphism",
    "is_regular_action",
]

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

DEFAULT_MAX_GROUP_ELEMENTS = 100000
BRUTE_FORCE_THRESHOLD = 8


class Permutation:
    """Bijection of ``0..degree-1`` stored as the tuple of images.

    Composition follows function composition: ``(p * q)(i) == p(q(i))``.

    Examples
    --------
    >>> from vtlink.permutations import Permutation
    >>> p = Permutation.from_cycles([(0, 3), (1, 2)], degree=4)
    >>> p.cycle_notation()
    '(0 3)(1 2)'
    >>> p * p == Permutation.identity(4)
    True
    >>> Permutation([1, 2, 0]).inverse().image
    (2, 0, 1)
    """

    __slots__ = ("image",)

    def __init__(self, image):
        image = tuple(int(i) for i in image)
        if sorted(image) != list(range(len(image))):
            raise ValueError("{} is not a permutation of 0..{}".format(image, len(image) - 1))
        self.image = image

    @classmethod
    def identity(cls, degree):
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles, degree):
        image = list(range(degree))
        for cycle in cycles:
            cycle = list(cycle)
            for position, point in enumerate(cycle):
                image[point] = cycle[(position + 1) % len(cycle)]
        return cls(image)

    @classmethod
    def from_mapping(cls, mapping, degree):
        """Permutation from a dict; points missing from ``mapping`` are fixed."""
        return cls(mapping.get(i, i) for i in range(degree))

    @property
    def degree(self):
        return len(self.image)

    def __call__(self, point):
        return self.image[point]

    def __iter__(self):
        return iter(self.image)

    def __len__(self):
        return len(self.image)

    def compose(self, other):
        if other.degree != self.degree:
            raise ValueError("Cannot compose permutations of degree {} and {}".format(self.degree, other.degree))
        return Permutation(self.image[i] for i in other.image)

    __mul__ = compose

    def inverse(self):
        inverse = [0] * self.degree
        for point, image in enumerate(self.image):
            inverse[image] = point
        return Permutation(inverse)

    def is_identity(self):
        return all(point == image for point, image in enumerate(self.image))

    def cycles(self):
        """All cycles, fixed points included, each starting at its smallest point."""
        seen = [False] * self.degree
        cycles = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            point = self.image[start]
            while point != start:
                cycle.append(point)
                seen[point] = True
                point = self.image[point]
            cycles.append(tuple(cycle))
        return cycles

    def cycle_notation(self, names=None):
        nontrivial = [cycle for cycle in self.cycles() if len(cycle) > 1]
        if not nontrivial:
            return "()"
        if names is None:
            names = [str(i) for i in range(self.degree)]
        return "".join("(" + " ".join(names[point] for point in cycle) + ")" for cycle in nontrivial)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.image == other.image

    def __hash__(self):
        return hash(self.image)

    def __repr__(self):
        return "Permutation({!r})".format(self.image)


class PermProfile(NamedTuple):
    order: int  #: Least common multiple of the cycle lengths
    cycle_lengths: Tuple[int, ...]  #: Sorted cycle lengths, fixed points included
    is_semiregular: bool  #: True if all cycles have the same length
    is_fpf_involution: bool  #: True if every cycle has length two


def perm_profile(permutation):
    """Cycle statistics of a permutation.

    Examples
    --------
    >>> from vtlink.permutations import Permutation, perm_profile
    >>> perm_profile(Permutation.identity(4))
    PermProfile(order=1, cycle_lengths=(1, 1, 1, 1), is_semiregular=True, is_fpf_involution=False)
    >>> perm_profile(Permutation([1, 0, 2])).is_semiregular
    False
    """
    lengths = tuple(sorted(len(cycle) for cycle in permutation.cycles()))
    return PermProfile(
        order=int(np.lcm.reduce((1,) + lengths)),
        cycle_lengths=lengths,
        is_semiregular=len(set(lengths)) <= 1,
        is_fpf_involution=all(length == 2 for length in lengths),
    )


class AutGroup:
    """Permutation group given by generators together with its order.

    Parameters
    ----------
    degree : int
    generators : list of Permutation
    group_order : int
    """

    def __init__(self, degree, generators, group_order):
        self.degree = degree
        self.generators = [g for g in generators if not g.is_identity()]
        self.group_order = group_order

    def elements(self, max_elements=DEFAULT_MAX_GROUP_ELEMENTS):
        """Enumerate the group by closure under the generators.

        Raises
        ------
        ValueError
            If the group has more than ``max_elements`` elements.
        """
        if self.group_order > max_elements:
            raise ValueError(
                "The group has {} elements, more than max_elements={}".format(self.group_order, max_elements)
            )
        identity = Permutation.identity(self.degree)
        found = {identity}
        queue = deque([identity])
        while queue:
            element = queue.popleft()
            for generator in self.generators:
                product = generator * element
                if product not in found:
                    found.add(product)
                    queue.append(product)
        if len(found) != self.group_order:
            raise InvariantViolation(
                "Closure produced {} elements but the group order is {}".format(len(found), self.group_order)
            )
        return sorted(found, key=lambda p: p.image)

    def orbits(self):
        orbits = DisjointSets(self.degree)
        for generator in self.generators:
            for point, image in enumerate(generator.image):
                orbits.union(point, image)
        return [frozenset(group) for group in orbits.groups()]

    def fixes_set(self, points):
        """True if every element maps ``points`` onto itself (checked on the generators)."""
        points = frozenset(points)
        return all(frozenset(g(p) for p in points) == points for g in self.generators)

    def __repr__(self):
        return "AutGroup(degree={}, group_order={}, generators={})".format(
            self.degree, self.group_order, len(self.generators)
        )


class IsoFamily:
    """All isomorphisms from one graph onto another, as ``sigma * base`` for ``sigma`` in ``target_aut``.

    An empty family (non-isomorphic graphs) has ``base = None``.
    """

    def __init__(self, base, target_aut):
        self.base = base
        self.target_aut = target_aut

    def __len__(self):
        return 0 if self.base is None else self.target_aut.group_order

    def __bool__(self):
        return self.base is not None

    def isomorphisms(self, max_elements=DEFAULT_MAX_GROUP_ELEMENTS):
        if self.base is None:
            return []
        return [sigma * self.base for sigma in self.target_aut.elements(max_elements)]

    def __repr__(self):
        return "IsoFamily(size={})".format(len(self))


def _automorphism_group_from_search(order, result):
    generators = [Permutation(image) for image in result.generators]
    return AutGroup(order, generators, result.group_order)


def automorphism_group(graph):
    """Automorphism group of a graph by individualisation and equitable refinement.

    Examples
    --------
    >>> from vtlink.graphs import make_named_graph
    >>> from vtlink.permutations import automorphism_group
    >>> automorphism_group(make_named_graph("path", 4)).group_order
    2
    >>> automorphism_group(make_named_graph("cycle", 5)).group_order
    10
    >>> automorphism_group(make_named_graph("empty", 0)).group_order
    1
    """
    return _automorphism_group_from_search(graph.order, canonical_search(graph.adjacency))


def brute_force_automorphisms(graph, threshold=BRUTE_FORCE_THRESHOLD):
    """Every automorphism, found by testing all ``n!`` permutations at once.

    Raises
    ------
    ValueError
        If the order exceeds ``threshold``.
    """
    order = graph.order
    if order > threshold:
        raise ValueError("Brute force is limited to order {}, got {}".format(threshold, order))
    if order == 0:
        return [Permutation(())]
    candidates = np.array(list(_all_permutations(range(order))), dtype=int)
    adjacency = graph.adjacency
    preserved = (adjacency[candidates[:, :, np.newaxis], candidates[:, np.newaxis, :]] == adjacency).all(axis=(1, 2))
    return [Permutation(image) for image in candidates[preserved]]


def is_asymmetric(graph):
    return automorphism_group(graph).group_order == 1


def canonical_labeling(graph):
    """Relabelling that sends ``graph`` to its canonical copy (use with :func:`vtlink.graphs.relabel`)."""
    labeling = canonical_search(graph.adjacency).labeling
    image = [0] * graph.order
    for position, vertex in enumerate(labeling):
        image[vertex] = position
    return Permutation(image)


@lru_cache(maxsize=8192)
def canonical_form(graph):
    """graph6 record of the canonically relabelled graph.

    Two graphs have the same canonical form exactly when they are isomorphic.

    Examples
    --------
    >>> from vtlink.graphs import make_named_graph, relabel
    >>> from vtlink.permutations import canonical_form
    >>> c5 = make_named_graph("cycle", 5)
    >>> canonical_form(c5) == canonical_form(relabel(c5, [2, 4, 0, 1, 3]))
    True
    >>> canonical_form(make_named_graph("path", 4)) == canonical_form(make_named_graph("star", 4))
    False
    """
    return emit_graph6(relabel(graph, canonical_labeling(graph)))


def all_isomorphisms(a, b):
    """Family of every isomorphism from ``a`` onto ``b``.

    Examples
    --------
    >>> from vtlink.graphs import make_named_graph
    >>> from vtlink.permutations import all_isomorphisms
    >>> len(all_isomorphisms(make_named_graph("complete", 3), make_named_graph("complete", 3)))
    6
    >>> len(all_isomorphisms(make_named_graph("path", 4), make_named_graph("star", 4)))
    0
    """
    result_b = canonical_search(b.adjacency)
    target_aut = _automorphism_group_from_search(b.order, result_b)
    if a.order != b.order or a.size != b.size:
        return IsoFamily(None, target_aut)

    result_a = canonical_search(a.adjacency)
    if result_a.certificate != result_b.certificate:
        return IsoFamily(None, target_aut)

    image = [0] * a.order
    for vertex_a, vertex_b in zip(result_a.labeling, result_b.labeling):
        image[vertex_a] = vertex_b
    return IsoFamily(Permutation(image), target_aut)


def find_fpf_involution(graph):
    """An automorphism whose cycles all have length two, or ``None`` if there is none.

    Vertices are paired within the cells of the coarsest equitable partition,
    which every automorphism preserves, and each new pair is checked against
    the pairs chosen so far.
    """
    order = graph.order
    if order % 2:
        return None
    if order == 0:
        return Permutation(())

    adjacency = graph.adjacency
    cells = refine(adjacency, [tuple(range(order))])
    if any(len(cell) % 2 for cell in cells):
        return None
    cell_of = {v: cell for cell in cells for v in cell}
    partner = np.full(order, -1)

    def extend():
        unpaired = np.flatnonzero(partner < 0)
        if not len(unpaired):
            return True
        u = unpaired[0]
        paired = np.flatnonzero(partner >= 0)
        for w in cell_of[u]:
            if w == u or partner[w] >= 0:
                continue
            if not np.array_equal(adjacency[u, paired], adjacency[w, partner[paired]]):
                continue
            if not np.array_equal(adjacency[w, paired], adjacency[u, partner[paired]]):
                continue
            partner[u], partner[w] = w, u
            if extend():
                return True
            partner[u] = partner[w] = -1
        return False

    if not extend():
        return None
    return Permutation(partner)


def has_fpf_involution_automorphism(graph):
    """True if some automorphism is a product of disjoint transpositions covering every vertex.

    The empty graph counts (the empty permutation), graphs of odd order never do.

    Examples
    --------
    >>> from vtlink.graphs import make_named_graph
    >>> from vtlink.permutations import has_fpf_involution_automorphism
    >>> has_fpf_involution_automorphism(make_named_graph("cycle", 4))
    True
    >>> has_fpf_involution_automorphism(make_named_graph("cycle", 5))
    False
    >>> has_fpf_involution_automorphism(make_named_graph("path", 4))
    True
    """
    return find_fpf_involution(graph) is not None


def has_involution_automorphism(graph, fixed_points=False):
    """Involution test with a switch for the loose reading.

    With ``fixed_points=False`` this is :func:`has_fpf_involution_automorphism`. With
    ``fixed_points=True`` any automorphism of order two counts, which exists exactly
    when the automorphism group has even order.
    """
    if not fixed_points:
        return has_fpf_involution_automorphism(graph)
    return automorphism_group(graph).group_order % 2 == 0


class RegularityReport(NamedTuple):
    stabilisers_trivial: bool  #: Only the identity fixes a point
    order_equals_degree: bool  #: The group has as many elements as points
    unique_transporter: bool  #: Exactly one element maps any point to any other
    all_semiregular: bool  #: Every element has cycles of one length
    agree: bool  #: True if the four conditions have the same value


def is_regular_action(perms, degree):
    """Evaluate the four equivalent characterisations of a regular transitive action.

    Parameters
    ----------
    perms : iterable of Permutation
        All elements of a permutation group.
    degree : int
        Number of points acted on.

    Raises
    ------
    ValueError
        If ``perms`` is empty, not closed under composition and inverses, or not transitive.

    Examples
    --------
    >>> from vtlink.permutations import Permutation, is_regular_action
    >>> rotations = [Permutation([(i + k) % 4 for i in range(4)]) for k in range(4)]
    >>> is_regular_action(rotations, 4).all_semiregular
    True
    """
    if degree < 1:
        raise ValueError("The degree must be positive, not {}".format(degree))
    elements = set(perms)
    if not elements:
        raise ValueError("A group must have at least one element")
    if any(p.degree != degree for p in elements):
        raise ValueError("Every permutation must have degree {}".format(degree))
    for p in elements:
        if p.inverse() not in elements:
            raise ValueError("The permutations are not closed under inverses: {} is missing".format(p.inverse()))
        for q in elements:
            if p * q not in elements:
                raise ValueError("The permutations are not closed under composition")
    if degree and {p(0) for p in elements} != set(range(degree)):
        raise ValueError("The group does not act transitively on {} points".format(degree))

    stabilisers_trivial = all(p.is_identity() for p in elements if any(p(x) == x for x in range(degree)))
    order_equals_degree = len(elements) == degree
    unique_transporter = all(
        sum(1 for p in elements if p(x) == y) == 1 for x in range(degree) for y in range(degree)
    )
    all_semiregular = all(perm_profile(p).is_semiregular for p in elements)
    conditions = (stabilisers_trivial, order_equals_degree, unique_transporter, all_semiregular)
    return RegularityReport(*conditions, agree=len(set(conditions)) == 1)
