# MIT License: Copyright (c) 2026, the vtlink developers.
# See the LICENSE file in the root directory for full license text.

import numpy as np

from ._utils import check_random_state
from .graphs import Graph, relabel
from .permutations import Permutation


def random_graph(order, edge_probability=0.5, random_state=None):
    """Generate a random graph where every pair of vertices is joined independently.

    Parameters
    ----------
    order : int
        Number of vertices.
    edge_probability : float (default=0.5)
        Probability that a given pair of vertices is adjacent.
    random_state : None, int or np.random.RandomState

    Returns
    -------
    Graph

    Examples
    --------
    >>> from vtlink.random import random_graph
    >>> random_graph(6, 1.0, random_state=0)
    Graph(order=6, size=15)
    >>> random_graph(6, 0.0, random_state=0)
    Graph(order=6, size=0)
    """
    if order < 0:
        raise ValueError("The order must be non-negative, not {}".format(order))
    if not 0 <= edge_probability <= 1:
        raise ValueError("The edge probability must be in [0, 1], not {}".format(edge_probability))
    rns = check_random_state(random_state)

    upper = np.triu(rns.random_sample((order, order)) < edge_probability, 1)
    return Graph(upper | upper.T)


def random_permutation(degree, random_state=None):
    rns = check_random_state(random_state)
    return Permutation(rns.permutation(degree))


def random_relabelling(graph, random_state=None):
    """Return a copy of ``graph`` with the vertices shuffled, together with the permutation used.

    Vertex ``i`` of ``graph`` is vertex ``permutation(i)`` of the copy.

    Returns
    -------
    Graph
    Permutation
    """
    permutation = random_permutation(graph.order, random_state)
    return relabel(graph, permutation), permutation
