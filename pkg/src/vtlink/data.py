# MIT License: Copyright (c) 2026, the vtlink developers.
# See the LICENSE file in the root directory for full license text.

from pathlib import Path

from .graphs import parse_edge_list

DATASET_PARENT = Path(__file__).parent / "datasets"


def load_edge_list_dataset(name):
    """Load one of the edge lists shipped in ``vtlink/datasets``.

    Parameters
    ----------
    name : str
        File name without the ``.edges`` suffix.

    Returns
    -------
    Graph
        Graph labelled with the vertex names of the file.
    """
    path = DATASET_PARENT / "{}.edges".format(name)
    if not path.is_file():
        available = sorted(p.stem for p in DATASET_PARENT.glob("*.edges"))
        raise ValueError("Unknown dataset {!r}, available datasets are {}".format(name, available))
    return parse_edge_list(path.read_text())


def get_asymmetric26_graph():
    r"""Asymmetric graph on 26 vertices that no vertex-transitive graph has as a neighbourhood.

    The two vertices of valency 6 are labelled ``u`` and ``v``. They are adjacent, and
    their four common neighbours ``T, U, V, W`` induce a path. The edge :math:`\{u, v\}`
    is the only clique of order two whose common neighbourhood is unique, which makes
    it an orbit-restrictor, and the path on four vertices has no automorphism of order
    three. Neither the edge bound nor the odd class rule applies to this graph.

    Returns
    -------
    Graph

    Examples
    --------
    >>> from vtlink.data import get_asymmetric26_graph
    >>> g = get_asymmetric26_graph()
    >>> g
    Graph(order=26, size=38)
    >>> sorted(g.label(w) for w in g.neighbours(g.vertex_by_label("u")) & g.neighbours(g.vertex_by_label("v")))
    ['T', 'U', 'V', 'W']
    """
    return load_edge_list_dataset("asymmetric26")


def get_sd16_neighbourhood_graph():
    """Asymmetric graph on six vertices that is the neighbourhood of a Cayley graph.

    A triangle ``A, B, C`` with a pendant vertex ``D`` on ``B`` and a path ``C, E, F``. It is
    the identity neighbourhood of a Cayley graph of the semidihedral group of order 16
    (see :func:`vtlink.cayley.semidihedral_demo`).

    Returns
    -------
    Graph
    """
    return load_edge_list_dataset("sd16_neighbourhood")


def get_petersen_graph():
    """The Petersen graph, vertex-transitive on ten vertices."""
    return load_edge_list_dataset("petersen")
