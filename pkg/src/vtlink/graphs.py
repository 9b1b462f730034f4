# MIT License: Copyright (c) 2026, the vtlink developers.
# See the LICENSE file in the root directory for full license text.

"""Finite simple graphs, neighbourhoods, induced subgraphs and the graph6 / edge-list formats."""

from typing import FrozenSet, NamedTuple, Optional, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from ._utils import as_vertex_set

__all__ = [
    "Graph",
    "GraphFormatError",
    "GraphStats",
    "SubgraphView",
    "parse_graph6",
    "emit_graph6",
    "parse_edge_list",
    "emit_edge_list",
    "read_graphs",
    "neighbourhood",
    "induced_subgraph",
    "induced_neighbourhood",
    "common_neighbourhood",
    "graph_stats",
    "is_clique_set",
    "relabel",
    "complement",
    "make_named_graph",
]

GRAPH6_HEADER = b">>graph6<<"

#: A set of vertex ids of one specific graph
VertexSet = FrozenSet[int]


class GraphFormatError(ValueError):
    """Raised when a graph6 record or an edge list cannot be parsed.

    The ``offset`` attribute is the byte (graph6) or character (edge list) offset
    in the input where the problem was detected.
    """

    def __init__(self, message, offset):
        super().__init__("{} (at offset {})".format(message, offset))
        self.offset = offset


class Graph:
    """Immutable finite simple graph on the vertex ids ``0, 1, ..., n-1``.

    Parameters
    ----------
    adjacency : array-like of shape (n, n)
        Symmetric boolean matrix with a zero diagonal.
    labels : sequence of str, optional
        Original names of the vertices (for example the tokens of an edge list).

    Examples
    --------
    >>> from vtlink.graphs import Graph
    >>> path = Graph.from_edges(3, [(0, 1), (1, 2)])
    >>> path
    Graph(order=3, size=2)
    >>> sorted(path.neighbours(1))
    [0, 2]

    Loops and asymmetric matrices are rejected

    >>> Graph([[1]])
    Traceback (most recent call last):
      ...
    ValueError: A graph cannot have loops, but vertex 0 is adjacent to itself
    """

    __slots__ = ("adjacency", "labels", "_hash")

    def __init__(self, adjacency, labels=None):
        adjacency = np.array(adjacency, dtype=bool)
        if adjacency.size == 0:
            adjacency = np.zeros((0, 0), dtype=bool)
        if adjacency.ndim != 2 or adjacency.shape[0] != adjacency.shape[1]:
            raise ValueError("The adjacency matrix must be square, not of shape {}".format(adjacency.shape))

        loops = np.flatnonzero(np.diag(adjacency))
        if len(loops):
            raise ValueError("A graph cannot have loops, but vertex {} is adjacent to itself".format(loops[0]))
        if not np.array_equal(adjacency, adjacency.T):
            raise ValueError("The adjacency matrix must be symmetric")

        if labels is not None:
            labels = tuple(str(label) for label in labels)
            if len(labels) != adjacency.shape[0]:
                raise ValueError(
                    "Got {} labels for a graph with {} vertices".format(len(labels), adjacency.shape[0])
                )
            if len(set(labels)) != len(labels):
                raise ValueError("Vertex labels must be distinct")

        adjacency.setflags(write=False)
        self.adjacency = adjacency
        self.labels = labels
        self._hash = None

    @classmethod
    def from_edges(cls, order, edges, labels=None):
        """Construct a graph of the given order from an iterable of vertex pairs."""
        adjacency = np.zeros((order, order), dtype=bool)
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise IndexError("Edge [{}, {}] is out of range for a graph of order {}".format(u, v, order))
            if u == v:
                raise ValueError("A graph cannot have loops, but got the edge [{}, {}]".format(u, v))
            adjacency[u, v] = adjacency[v, u] = True
        return cls(adjacency, labels=labels)

    @classmethod
    def from_adjacency(cls, matrix, labels=None):
        """Construct a graph from any array-like 0/1 matrix (nonzero entries are edges)."""
        return cls(np.asarray(matrix) != 0, labels=labels)

    @property
    def order(self):
        return self.adjacency.shape[0]

    @property
    def size(self):
        return int(self.adjacency.sum()) // 2

    @property
    def valencies(self):
        return tuple(int(d) for d in self.adjacency.sum(axis=1))

    def neighbours(self, v):
        return frozenset(int(w) for w in np.flatnonzero(self.adjacency[v]))

    def edges(self):
        rows, cols = np.nonzero(np.triu(self.adjacency, 1))
        return [(int(u), int(v)) for u, v in zip(rows, cols)]

    def label(self, v):
        """Name of vertex ``v``: its input label if there is one, otherwise the id."""
        if self.labels is None:
            return str(v)
        return self.labels[v]

    def vertex_by_label(self, label):
        if self.labels is None:
            return int(label)
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise KeyError("No vertex is labelled {!r}".format(label)) from None

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and np.array_equal(self.adjacency, other.adjacency)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.order, np.packbits(self.adjacency).tobytes()))
        return self._hash

    def __repr__(self):
        return "Graph(order={}, size={})".format(self.order, self.size)


class SubgraphView(NamedTuple):
    graph: Graph  #: The induced subgraph, re-indexed ``0..|S|-1``
    back_map: Tuple[int, ...]  #: ``back_map[i]`` is the parent id of local vertex ``i`` (strictly increasing)

    def to_parent(self, local_vertices):
        return frozenset(self.back_map[i] for i in local_vertices)

    def to_local(self, parent_vertices):
        index = {p: i for i, p in enumerate(self.back_map)}
        return frozenset(index[p] for p in parent_vertices)


class GraphStats(NamedTuple):
    n: int  #: Number of vertices
    m: int  #: Number of edges
    valencies: Tuple[int, ...]  #: Valency of every vertex
    complete_valency: FrozenSet[int]  #: Vertices adjacent to all other vertices
    is_clique: bool  #: True if every pair of vertices is adjacent
    is_connected: bool  #: True if the graph has at most one connected component


###
# graph6
###


def _graph6_order_bytes(order):
    if order <= 62:
        return bytes([order + 63])
    if order <= 258047:
        return bytes([126] + [((order >> shift) & 63) + 63 for shift in (12, 6, 0)])
    if order <= 68719476735:
        return bytes([126, 126] + [((order >> shift) & 63) + 63 for shift in (30, 24, 18, 12, 6, 0)])
    raise ValueError("Graphs with more than 68719476735 vertices cannot be written in graph6")


def _read_graph6_order(record, start):
    """Return the order and the offset of the first payload byte."""
    if len(record) <= start:
        raise GraphFormatError("Missing graph6 length byte", start)

    def sextets(first, count):
        if len(record) < first + count:
            raise GraphFormatError("Truncated graph6 length field", len(record))
        value = 0
        for offset in range(first, first + count):
            byte = record[offset]
            if not 63 <= byte <= 126:
                raise GraphFormatError("Byte {} is outside the graph6 range 63..126".format(byte), offset)
            value = (value << 6) | (byte - 63)
        return value

    first = record[start]
    if not 63 <= first <= 126:
        raise GraphFormatError("Byte {} is not a valid graph6 length byte".format(first), start)
    if first < 126:
        return first - 63, start + 1
    if len(record) > start + 1 and record[start + 1] == 126:
        return sextets(start + 2, 6), start + 8
    return sextets(start + 1, 3), start + 4


def parse_graph6(text):
    """Parse a single graph6 record.

    Parameters
    ----------
    text : bytes or str
        One graph6 record, optionally prefixed by ``>>graph6<<``. Surrounding whitespace is ignored.

    Returns
    -------
    Graph

    Raises
    ------
    GraphFormatError
        If the length byte is malformed, the payload is truncated or too long,
        or a byte lies outside ``63..126``.

    Examples
    --------
    >>> from vtlink.graphs import parse_graph6
    >>> parse_graph6("A_")
    Graph(order=2, size=1)
    >>> parse_graph6(b">>graph6<<Bw")
    Graph(order=3, size=3)
    >>> parse_graph6("Bw~")
    Traceback (most recent call last):
      ...
    vtlink.graphs.GraphFormatError: Got 2 payload bytes, but a graph of order 3 needs 1 (at offset 2)
    """
    if isinstance(text, str):
        try:
            text = text.encode("ascii")
        except UnicodeEncodeError as e:
            raise GraphFormatError("Non-ASCII character in graph6 record", e.start) from None

    start = len(text) - len(text.lstrip())
    record = text.rstrip()
    if record.startswith(GRAPH6_HEADER, start):
        start += len(GRAPH6_HEADER)

    order, payload_start = _read_graph6_order(record, start)
    num_bits = order * (order - 1) // 2
    num_bytes = (num_bits + 5) // 6
    payload = record[payload_start:]
    if len(payload) < num_bytes:
        raise GraphFormatError(
            "Truncated graph6 payload: got {} bytes, but a graph of order {} needs {}".format(
                len(payload), order, num_bytes
            ),
            len(record),
        )
    if len(payload) > num_bytes:
        raise GraphFormatError(
            "Got {} payload bytes, but a graph of order {} needs {}".format(len(payload), order, num_bytes),
            payload_start + num_bytes,
        )

    values = np.frombuffer(payload, dtype=np.uint8).astype(np.int16) - 63
    invalid = np.flatnonzero((values < 0) | (values > 63))
    if len(invalid):
        offset = payload_start + int(invalid[0])
        raise GraphFormatError("Byte {} is outside the graph6 range 63..126".format(record[offset]), offset)

    bits = np.unpackbits(values.astype(np.uint8)[:, np.newaxis], axis=1)[:, 2:].ravel()[:num_bits]

    # tril_indices enumerates (1, 0), (2, 0), (2, 1), (3, 0), ... which is the graph6
    # column order x(0,1), x(0,2), x(1,2), x(0,3), ... with the pair reversed
    adjacency = np.zeros((order, order), dtype=bool)
    rows, cols = np.tril_indices(order, -1)
    adjacency[rows, cols] = bits.astype(bool)
    adjacency |= adjacency.T
    return Graph(adjacency)


def emit_graph6(graph):
    """Encode a graph as a graph6 record (without header or newline).

    Examples
    --------
    >>> from vtlink.graphs import Graph, emit_graph6
    >>> emit_graph6(Graph.from_edges(3, [(0, 1), (1, 2)]))
    b'Bg'
    >>> emit_graph6(Graph.from_edges(1, []))
    b'@'
    """
    order = graph.order
    rows, cols = np.tril_indices(order, -1)
    bits = graph.adjacency[rows, cols].astype(np.uint8)
    padding = (-len(bits)) % 6
    bits = np.concatenate([bits, np.zeros(padding, dtype=np.uint8)]).reshape(-1, 6)
    values = bits.dot(1 << np.arange(5, -1, -1)) + 63
    return _graph6_order_bytes(order) + values.astype(np.uint8).tobytes()


###
# Edge lists
###


def parse_edge_list(text):
    """Parse a whitespace separated edge list.

    Every non-blank line holds two vertex names ``u v``. Text after ``#`` is a
    comment. An optional first line ``n=<count>`` declares the order of the graph;
    vertices that do not occur in any edge are then added as isolated vertices,
    named by the smallest unused non-negative integers. Vertex ids are assigned
    in order of first appearance and the names are kept as labels.

    Raises
    ------
    GraphFormatError
        On a self-loop, a line that does not contain exactly two names, or a
        malformed or too small ``n=`` declaration.

    Examples
    --------
    >>> from vtlink.graphs import parse_edge_list
    >>> g = parse_edge_list("a b\\nb c")
    >>> g, g.labels
    (Graph(order=3, size=2), ('a', 'b', 'c'))
    >>> parse_edge_list("n=3\\n0 1").labels
    ('0', '1', '2')
    >>> parse_edge_list("a a")
    Traceback (most recent call last):
      ...
    vtlink.graphs.GraphFormatError: Self-loop on vertex 'a' (at offset 0)
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")

    ids = {}
    edges = set()
    declared_order = None
    offset = 0
    seen_content = False
    for line in text.splitlines(keepends=True):
        line_offset, offset = offset, offset + len(line)
        content = line.split("#", 1)[0].strip()
        if not content:
            continue

        compact = "".join(content.split())
        if not seen_content and compact.startswith("n="):
            seen_content = True
            count = compact[2:]
            if not count.isdigit():
                raise GraphFormatError("Malformed order declaration {!r}".format(content), line_offset)
            declared_order = int(count)
            continue
        seen_content = True

        tokens = content.split()
        if len(tokens) != 2:
            raise GraphFormatError("Expected two vertex names, got {!r}".format(content), line_offset)
        u, v = tokens
        if u == v:
            raise GraphFormatError("Self-loop on vertex {!r}".format(u), line_offset)
        for token in tokens:
            ids.setdefault(token, len(ids))
        edges.add(frozenset((ids[u], ids[v])))

    labels = list(ids)
    if declared_order is not None:
        if declared_order < len(labels):
            raise GraphFormatError(
                "Declared n={} but the edge list names {} vertices".format(declared_order, len(labels)), 0
            )
        candidate = 0
        while len(labels) < declared_order:
            if str(candidate) not in ids:
                labels.append(str(candidate))
            candidate += 1

    return Graph.from_edges(len(labels), (tuple(edge) for edge in edges), labels=labels)


def emit_edge_list(graph):
    """Write a graph as an edge list using its vertex labels as names.

    An ``n=<order>`` header is written when the graph has isolated vertices, so
    :func:`parse_edge_list` reads back a graph with the same named vertices and edges.
    """
    lines = []
    if 0 in graph.valencies:
        lines.append("n={}".format(graph.order))
    lines.extend("{} {}".format(graph.label(u), graph.label(v)) for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def read_graphs(text, format="auto"):
    """Read one or more graphs.

    Parameters
    ----------
    text : str or bytes
    format : {"graph6", "edges", "auto"}
        With ``"graph6"`` every non-blank line is one graph6 record. With ``"edges"``
        the whole text is one edge list. ``"auto"`` tries graph6 first and falls back
        to the edge list format.

    Returns
    -------
    list of Graph
    """
    if format not in {"graph6", "edges", "auto"}:
        raise ValueError("Unknown graph format {!r}".format(format))
    if isinstance(text, bytes):
        text = text.decode("utf-8")

    if format in {"graph6", "auto"}:
        try:
            return [parse_graph6(line) for line in text.splitlines() if line.strip()]
        except GraphFormatError:
            if format == "graph6":
                raise
    return [parse_edge_list(text)]


###
# Neighbourhoods and induced subgraphs
###


def _check_vertex(graph, v):
    if not 0 <= v < graph.order:
        raise IndexError("Vertex {} is out of range for a graph of order {}".format(v, graph.order))


def neighbourhood(graph, v):
    """The set :math:`N(v, X)` of vertices adjacent to ``v``.

    Examples
    --------
    >>> from vtlink.graphs import Graph, neighbourhood
    >>> cycle = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    >>> sorted(neighbourhood(cycle, 0))
    [1, 4]
    """
    _check_vertex(graph, v)
    return graph.neighbours(v)


def induced_subgraph(graph, vertices):
    """The subgraph induced on ``vertices``, re-indexed in ascending parent-id order.

    Examples
    --------
    >>> from vtlink.graphs import Graph, induced_subgraph
    >>> cycle = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    >>> view = induced_subgraph(cycle, {0, 1, 3})
    >>> view.graph.edges(), view.back_map
    ([(0, 1)], (0, 1, 3))
    """
    back_map = tuple(sorted(as_vertex_set(vertices, graph.order)))
    adjacency = graph.adjacency[np.ix_(back_map, back_map)]
    labels = None if graph.labels is None else [graph.labels[v] for v in back_map]
    return SubgraphView(Graph(adjacency, labels=labels), back_map)


def induced_neighbourhood(graph, v):
    """The induced neighbourhood :math:`\\langle N(v, X) \\rangle` as a :class:`SubgraphView`."""
    return induced_subgraph(graph, neighbourhood(graph, v))


def common_neighbourhood(graph, vertices):
    """The set :math:`\\cap_{w \\in S} N(w, X)`.

    Raises
    ------
    ValueError
        If ``vertices`` is empty.

    Examples
    --------
    >>> from vtlink.graphs import Graph, common_neighbourhood
    >>> k4 = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    >>> sorted(common_neighbourhood(k4, {0, 1}))
    [2, 3]
    """
    vertices = sorted(as_vertex_set(vertices, graph.order))
    if not vertices:
        raise ValueError("The common neighbourhood of an empty vertex set is undefined")
    common = np.logical_and.reduce(graph.adjacency[vertices], axis=0)
    return frozenset(int(w) for w in np.flatnonzero(common))


def is_clique_set(graph, vertices):
    vertices = sorted(as_vertex_set(vertices, graph.order))
    block = graph.adjacency[np.ix_(vertices, vertices)]
    return bool(block.sum() == len(vertices) * (len(vertices) - 1))


def graph_stats(graph):
    """Order, size, valencies, complete-valency vertices, clique and connectivity flags.

    Examples
    --------
    >>> from vtlink.graphs import Graph, graph_stats
    >>> star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    >>> stats = graph_stats(star)
    >>> stats.m, stats.valencies, sorted(stats.complete_valency), stats.is_clique
    (3, (3, 1, 1, 1), [0], False)
    """
    n = graph.order
    valencies = graph.valencies
    m = sum(valencies) // 2
    complete_valency = frozenset(v for v, d in enumerate(valencies) if d == n - 1)
    if n == 0:
        is_connected = True
    else:
        n_components, _ = connected_components(csr_matrix(graph.adjacency), directed=False)
        is_connected = n_components == 1
    return GraphStats(
        n=n,
        m=m,
        valencies=valencies,
        complete_valency=complete_valency,
        is_clique=2 * m == n * (n - 1),
        is_connected=bool(is_connected),
    )


def relabel(graph, permutation):
    """Move vertex ``i`` to position ``permutation[i]``.

    ``permutation`` is any sequence (or :class:`vtlink.permutations.Permutation`)
    listing the image of every vertex.
    """
    image = np.asarray(list(permutation), dtype=int)
    if sorted(image.tolist()) != list(range(graph.order)):
        raise ValueError("The relabelling must be a permutation of 0..{}".format(graph.order - 1))
    inverse = np.empty_like(image)
    inverse[image] = np.arange(graph.order)
    labels = None if graph.labels is None else [graph.labels[i] for i in inverse]
    return Graph(graph.adjacency[np.ix_(inverse, inverse)], labels=labels)


def complement(graph):
    adjacency = ~graph.adjacency
    np.fill_diagonal(adjacency, False)
    return Graph(adjacency, labels=graph.labels)


def make_named_graph(name, order=None):
    """Small named graphs used in examples and tests.

    ``name`` is one of ``"complete"``, ``"cycle"``, ``"path"``, ``"star"`` (order = number of vertices)
    or ``"empty"``.
    """
    if order is None or order < 0:
        raise ValueError("A non-negative order is required for {!r}".format(name))
    if name == "complete":
        edges = [(u, v) for u in range(order) for v in range(u + 1, order)]
    elif name == "cycle":
        if order < 3:
            raise ValueError("A cycle needs at least three vertices")
        edges = [(i, (i + 1) % order) for i in range(order)]
    elif name == "path":
        edges = [(i, i + 1) for i in range(order - 1)]
    elif name == "star":
        edges = [(0, i) for i in range(1, order)]
    elif name == "empty":
        edges = []
    else:
        raise ValueError("Unknown graph name {!r}".format(name))
    return Graph.from_edges(order, edges)
