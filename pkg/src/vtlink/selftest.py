# MIT License: Copyright (c) 2026, the vtlink developers.
# See the LICENSE file in the root directory for full license text.
"""Exhaustive oracles for small graphs and the suites run by ``vtlink selftest``."""

import logging
from itertools import chain, combinations, permutations
from typing import List, NamedTuple

import numpy as np

from ._utils import check_random_state
from .graphs import induced_neighbourhood
from .permutations import automorphism_group, brute_force_automorphisms, canonical_form
from .random import random_graph, random_relabelling
from .structure import class_common_neighbourhood, classify_vertices, max_fixed_subset

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


def brute_force_isomorphisms(a, b):
    """Every isomorphism from ``a`` onto ``b`` as a tuple of images, by testing all bijections."""
    if a.order != b.order or a.size != b.size:
        return []
    found = []
    for image in permutations(range(a.order)):
        image = np.asarray(image, dtype=int)
        if np.array_equal(b.adjacency[np.ix_(image, image)], a.adjacency):
            found.append(tuple(int(i) for i in image))
    return found


def _neighbourhood_isomorphisms(graph, members):
    """All isomorphisms between neighbourhoods of class members, as dicts of parent vertex ids."""
    views = {w: induced_neighbourhood(graph, w) for w in members}
    maps = []
    for source in members:
        for target in members:
            for image in brute_force_isomorphisms(views[source].graph, views[target].graph):
                back_source, back_target = views[source].back_map, views[target].back_map
                maps.append({back_source[i]: back_target[j] for i, j in enumerate(image)})
    return maps


def brute_force_max_fixed_subset(graph, v):
    """Largest subset of the class common neighbourhood mapped onto itself by every neighbourhood isomorphism.

    Tries every subset, largest first.
    """
    members = sorted(classify_vertices(graph).members(v))
    common = sorted(class_common_neighbourhood(graph, v))
    maps = _neighbourhood_isomorphisms(graph, members)
    subsets = chain.from_iterable(combinations(common, k) for k in range(len(common), -1, -1))
    for subset in subsets:
        subset = frozenset(subset)
        if all(frozenset(mapping[x] for x in subset) == subset for mapping in maps):
            return subset
    return frozenset()


class SuiteResult(NamedTuple):
    name: str  #: Name of the suite
    checked: int  #: Number of graphs checked
    failures: List[str]  #: graph6 records of the graphs that failed

    @property
    def passed(self):
        return not self.failures


def check_automorphisms(graph):
    """True if the refinement search and the brute-force filter agree element by element."""
    fast = set(automorphism_group(graph).elements())
    return fast == set(brute_force_automorphisms(graph, threshold=max(graph.order, 1)))


def check_canonical_form(graph, random_state=None, relabellings=10):
    rns = check_random_state(random_state)
    form = canonical_form(graph)
    return all(canonical_form(random_relabelling(graph, rns)[0]) == form for _ in range(relabellings))


def check_max_fixed_subsets(graph):
    representatives = [min(members) for members in classify_vertices(graph).classes]
    return all(max_fixed_subset(graph, v) == brute_force_max_fixed_subset(graph, v) for v in representatives)


def run_selftest(max_order=7, samples=50, random_state=None, verbose=False):
    """Compare the fast code paths with exhaustive oracles on random graphs.

    Parameters
    ----------
    max_order : int (default=7)
        Largest order of the random graphs.
    samples : int (default=50)
        Number of random graphs per order.
    random_state : None, int or np.random.RandomState
    verbose : bool (default=False)
        Print one line per order when checked.

    Returns
    -------
    list of SuiteResult
        One entry for each of the automorphism, canonical form and fixed subset suites.
    """
    rns = check_random_state(random_state)
    suites = {
        "automorphisms": (check_automorphisms, []),
        "canonical-form": (lambda g: check_canonical_form(g, rns), []),
        "fixed-subsets": (check_max_fixed_subsets, []),
    }
    checked = 0
    for order in range(1, max_order + 1):
        for _ in range(samples):
            graph = random_graph(order, edge_probability=rns.uniform(0.2, 0.8), random_state=rns)
            checked += 1
            for name, (check, failures) in suites.items():
                if not check(graph):
                    logger.info("%s suite failed for %s", name, canonical_form(graph))
                    failures.append(canonical_form(graph).decode("ascii"))
        if verbose:
            print("Checked {} random graphs of order {}".format(samples, order))

    return [SuiteResult(name, checked, failures) for name, (_, failures) in suites.items()]
