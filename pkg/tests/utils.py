# MIT License: Copyright (c) 2026, the vtlink developers.
# See the LICENSE file in the root directory for full license text.

from vtlink.graphs import Graph
from vtlink.random import random_graph
from vtlink.testing.utils import random_order


def k5_minus_edge():
    return Graph.from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])


def random_graphs(rng, count, largest=8):
    for _ in range(count):
        order = random_order(rng, largest=largest)
        yield random_graph(order, edge_probability=rng.uniform(0.2, 0.8), random_state=rng)


def to_networkx(graph):
    import networkx as nx

    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(graph.order))
    nx_graph.add_edges_from(graph.edges())
    return nx_graph


def from_networkx(nx_graph):
    nodes = list(nx_graph.nodes)
    index = {node: i for i, node in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(index[u], index[v]) for u, v in nx_graph.edges])
