# MIT License: Copyright (c) 2026, the vtlink developers.
# See the LICENSE file in the root directory for full license text.

import numpy as np

from ..elimination import ELIMINATED, verify_witness
from ..graphs import relabel
from ..permutations import Permutation


def assert_same_graph(actual, desired):
    """Assert that two graphs have identical adjacency matrices (labels are ignored)."""
    np.testing.assert_array_equal(actual.adjacency, desired.adjacency)


def assert_automorphism(graph, permutation):
    if not isinstance(permutation, Permutation):
        permutation = Permutation(permutation)
    assert_same_graph(relabel(graph, permutation), graph)


def assert_eliminated(graph, verdict, scope=None):
    """Assert that ``verdict`` eliminates ``graph`` and that its witness re-checks."""
    assert verdict.outcome == ELIMINATED, "{} was {}: {}".format(verdict.rule_id, verdict.outcome, verdict.explanation)
    if scope is not None:
        assert verdict.scope == scope
    assert verify_witness(graph, verdict)
