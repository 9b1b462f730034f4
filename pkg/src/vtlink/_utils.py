# MIT License: Copyright (c) 2026, the vtlink developers.
# See the LICENSE file in the root directory for full license text.
import numbers

import numpy as np


def is_iterable(x):
    try:
        iter(x)
    except TypeError:
        return False
    else:
        return True


def check_random_state(seed):
    """Turn ``seed`` into a :class:`numpy.random.RandomState` instance.

    Parameters
    ----------
    seed : None, int or np.random.RandomState
        If ``None``, the global numpy random state is used. If an int, a new
        ``RandomState`` seeded with it is returned. A ``RandomState`` is returned unchanged.

    Returns
    -------
    np.random.RandomState
    """
    if seed is None:
        return np.random.mtrand._rand
    if isinstance(seed, (numbers.Integral, np.integer)):
        return np.random.RandomState(int(seed))
    if isinstance(seed, np.random.RandomState):
        return seed
    raise ValueError("{} cannot be used to seed a numpy.random.RandomState instance".format(seed))


def as_vertex_set(vertices, order=None):
    """Convert an iterable of vertex ids to a frozenset, validating the range if ``order`` is given."""
    if not is_iterable(vertices):
        raise TypeError("A vertex set must be an iterable of ints, not {}".format(type(vertices)))
    vertex_set = frozenset(int(v) for v in vertices)
    if order is not None:
        for v in vertex_set:
            if not 0 <= v < order:
                raise IndexError("Vertex {} is out of range for a graph of order {}".format(v, order))
    return vertex_set


class DisjointSets:
    """Union-find over ``0..size-1``, used to track orbits while generators are discovered."""

    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        root_x, root_y = self.find(x), self.find(y)
        if root_x == root_y:
            return False
        # Smallest id becomes the root so orbit representatives are deterministic
        if root_y < root_x:
            root_x, root_y = root_y, root_x
        self.parent[root_y] = root_x
        return True

    def same(self, x, y):
        return self.find(x) == self.find(y)

    def groups(self):
        groups = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return [groups[root] for root in sorted(groups)]


class InvariantViolation(RuntimeError):
    """Raised when an internal consistency check fails, such as a witness that does not re-check."""
