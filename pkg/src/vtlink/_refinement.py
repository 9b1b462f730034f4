# MIT License: Copyright (c) 2026, the vtlink developers.
# See the LICENSE file in the root directory for full license text.
"""Equitable refinement and the individualisation-refinement search tree.

Partitions are ordered lists of cells, each cell a sorted tuple of vertex ids.
Every step here commutes with relabelling the graph, so the search tree of a
relabelled graph is the relabelled search tree. This is what makes the smallest
leaf certificate a canonical form.
"""
import logging
from typing import List, NamedTuple, Tuple

import numpy as np

from ._utils import DisjointSets

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


class SearchResult(NamedTuple):
    certificate: bytes  #: Packed upper triangle of the graph relabelled by ``labeling``
    labeling: Tuple[int, ...]  #: ``labeling[k]`` is the vertex placed at position ``k``
    trace: Tuple[Tuple[int, ...], ...]  #: Cell sizes of every node on the path to the best leaf
    generators: List[Tuple[int, ...]]  #: Automorphism generators as image tuples
    group_order: int  #: Order of the stabiliser of the partition the search started from


def refine(adjacency, cells):
    """Coarsest equitable refinement of an ordered partition.

    Cells are split by the number of neighbours in a splitter cell and the
    pieces are placed in ascending order of that count, in the position of
    the cell they came from. After any split the splitters restart from the
    first cell.

    Examples
    --------
    >>> import numpy as np
    >>> from vtlink._refinement import refine
    >>> path = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=bool)
    >>> refine(path, [(0, 1, 2)])
    [(0, 2), (1,)]
    """
    cells = [tuple(cell) for cell in cells]
    splitter = 0
    while splitter < len(cells):
        counts = adjacency[:, list(cells[splitter])].sum(axis=1)
        refined = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            cell_counts = counts[list(cell)]
            if cell_counts.min() == cell_counts.max():
                refined.append(cell)
                continue
            for value in np.unique(cell_counts):
                refined.append(tuple(v for v, count in zip(cell, cell_counts) if count == value))

        if len(refined) != len(cells):
            cells = refined
            splitter = 0
        else:
            splitter += 1
    return cells


def individualise(cells, target, vertex):
    """Split ``vertex`` off as a singleton placed in front of the rest of its cell."""
    rest = tuple(v for v in cells[target] if v != vertex)
    return cells[:target] + [(vertex,), rest] + cells[target + 1 :]


def target_cell(cells):
    """Index of the first smallest non-singleton cell, or ``None`` for a discrete partition."""
    best = None
    for index, cell in enumerate(cells):
        if len(cell) > 1 and (best is None or len(cell) < len(cells[best])):
            best = index
    return best


def signature(cells):
    return tuple(len(cell) for cell in cells)


def certificate(adjacency, labeling):
    relabelled = adjacency[np.ix_(labeling, labeling)]
    rows, cols = np.triu_indices(len(labeling), 1)
    return np.packbits(relabelled[rows, cols]).tobytes()


def _leaf(adjacency, cells, cell_sizes):
    labeling = tuple(cell[0] for cell in cells)
    return SearchResult(certificate(adjacency, labeling), labeling, (cell_sizes,), [], 1)


def _follow(adjacency, cells, wanted, trace):
    if signature(cells) != trace[0]:
        return None
    target = target_cell(cells)
    if target is None:
        labeling = tuple(cell[0] for cell in cells)
        return labeling if certificate(adjacency, labeling) == wanted else None
    for vertex in cells[target]:
        found = _follow(adjacency, refine(adjacency, individualise(cells, target, vertex)), wanted, trace[1:])
        if found is not None:
            return found
    return None


def search(adjacency, cells):
    """Explore the search tree below ``cells``, pruning with discovered automorphisms.

    The returned group order and generators are those of the automorphisms that
    fix every cell of the refined starting partition.
    """
    cells = refine(adjacency, cells)
    cell_sizes = signature(cells)
    target = target_cell(cells)
    if target is None:
        return _leaf(adjacency, cells, cell_sizes)

    order = adjacency.shape[0]
    cell = cells[target]
    first = cell[0]
    first_result = search(adjacency, individualise(cells, target, first))

    generators = list(first_result.generators)
    orbits = DisjointSets(order)
    for generator in generators:
        for v, image in enumerate(generator):
            orbits.union(v, image)

    representatives = [(first, first_result)]
    best = first_result
    for vertex in cell[1:]:
        if any(orbits.same(vertex, explored) for explored, _ in representatives):
            continue

        child = individualise(cells, target, vertex)
        found = None
        for explored, result in representatives:
            labeling = _follow(adjacency, refine(adjacency, child), result.certificate, result.trace)
            if labeling is not None:
                found = (result.labeling, labeling)
                break

        if found is not None:
            automorphism = [0] * order
            for source, image in zip(*found):
                automorphism[source] = image
            automorphism = tuple(automorphism)
            logger.debug("Vertex %d joins an explored orbit", vertex)
            generators.append(automorphism)
            for v, image in enumerate(automorphism):
                orbits.union(v, image)
            continue

        result = search(adjacency, child)
        representatives.append((vertex, result))
        for generator in result.generators:
            generators.append(generator)
            for v, image in enumerate(generator):
                orbits.union(v, image)
        if result.certificate < best.certificate:
            best = result

    orbit_size = sum(1 for vertex in cell if orbits.same(vertex, first))
    return SearchResult(
        certificate=best.certificate,
        labeling=best.labeling,
        trace=(cell_sizes,) + best.trace,
        generators=generators,
        group_order=orbit_size * first_result.group_order,
    )


def canonical_search(adjacency):
    """Run the full search from the unit partition."""
    order = adjacency.shape[0]
    if order == 0:
        return SearchResult(b"", (), ((),), [], 1)
    return search(adjacency, [tuple(range(order))])
