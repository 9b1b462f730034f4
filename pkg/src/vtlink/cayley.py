# MIT License: Copyright (c) 2026, the vtlink developers.
# See the LICENSE file in the root directory for full license text.
"""Small groups as multiplication tables, Cayley graphs and the census of their neighbourhoods.

The census is the reference against which the elimination rules are tested:
every graph in it is the induced neighbourhood of a connected Cayley graph, so
no rule may eliminate it.
"""

import json
import logging
import re
from pathlib import Path
from typing import Dict, FrozenSet, NamedTuple, Optional, Tuple

import numpy as np
from sympy import isprime

try:
    from tqdm import tqdm
except ModuleNotFoundError:
    tqdm = None

from ._utils import InvariantViolation
from .data import get_sd16_neighbourhood_graph
from .elimination import ELIMINATED, EliminationLimits, _limits, run_all
from .graphs import Graph, common_neighbourhood, emit_graph6, graph_stats, induced_neighbourhood, parse_graph6
from .permutations import Permutation, all_isomorphisms, canonical_form, is_asymmetric
from .structure import max_fixed_subset, orbit_restrictors

__all__ = [
    "GroupTableError",
    "GroupTable",
    "cyclic_group",
    "dihedral_group",
    "quaternion_group",
    "semidihedral_group",
    "direct_product",
    "group_from_table",
    "make_group",
    "default_catalog",
    "connection_set",
    "connection_sets",
    "generated_subgroup",
    "cayley_graph",
    "left_translation",
    "is_left_translation_automorphism",
    "semidihedral_demo",
    "CensusMeta",
    "Census",
    "neighbourhood_census",
    "save_census",
    "load_census",
    "Violation",
    "proposition_check",
    "soundness_check",
]

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

#: Largest order for which associativity is checked on construction
ASSOCIATIVITY_CHECK_ORDER = 32


class GroupTableError(ValueError):
    """Raised when a multiplication table violates a group axiom.

    ``axiom`` names the violated axiom and ``indices`` the offending element ids.
    """

    def __init__(self, axiom, indices, message):
        super().__init__("{} ({} violated at {})".format(message, axiom, indices))
        self.axiom = axiom
        self.indices = indices


class GroupTable:
    """Finite group given by its multiplication table.

    Parameters
    ----------
    mul : array-like of shape (n, n)
        ``mul[a, b]`` is the id of the product ``a * b``.
    names : sequence of str, optional
        Display name of every element. Defaults to the ids.
    name : str, optional
        Name of the group.

    Examples
    --------
    >>> from vtlink.cayley import GroupTable
    >>> z3 = GroupTable([[0, 1, 2], [1, 2, 0], [2, 0, 1]], name="C3")
    >>> z3.identity, z3.inv.tolist()
    (0, [0, 2, 1])
    >>> GroupTable([[0, 1], [1, 1]])
    Traceback (most recent call last):
      ...
    vtlink.cayley.GroupTableError: Element 1 has no inverse (inverse violated at (1,))
    """

    def __init__(self, mul, names=None, name=None):
        mul = np.array(mul, dtype=int)
        if mul.ndim != 2 or mul.shape[0] != mul.shape[1] or mul.shape[0] == 0:
            raise GroupTableError("closure", (), "The table must be a nonempty square array, not {}".format(mul.shape))
        order = mul.shape[0]

        outside = np.argwhere((mul < 0) | (mul >= order))
        if len(outside):
            a, b = (int(i) for i in outside[0])
            raise GroupTableError("closure", (a, b), "The product of {} and {} is not an element".format(a, b))

        elements = np.arange(order)
        identities = [
            e for e in range(order) if np.array_equal(mul[e], elements) and np.array_equal(mul[:, e], elements)
        ]
        if not identities:
            raise GroupTableError("identity", (), "No element acts as identity")
        identity = identities[0]

        inv = np.full(order, -1)
        for a in range(order):
            candidates = np.flatnonzero((mul[a] == identity) & (mul[:, a] == identity))
            if not len(candidates):
                raise GroupTableError("inverse", (a,), "Element {} has no inverse".format(a))
            inv[a] = candidates[0]

        if order <= ASSOCIATIVITY_CHECK_ORDER:
            left = mul[mul]  # left[a, b, c] = (ab)c
            right = mul[elements[:, np.newaxis, np.newaxis], mul[np.newaxis, :, :]]  # a(bc)
            broken = np.argwhere(left != right)
            if len(broken):
                indices = tuple(int(i) for i in broken[0])
                raise GroupTableError("associativity", indices, "(ab)c != a(bc) for {}".format(indices))

        mul.setflags(write=False)
        inv.setflags(write=False)
        self.mul = mul
        self.inv = inv
        self.identity = identity
        self.names = tuple(str(i) for i in range(order)) if names is None else tuple(names)
        if len(self.names) != order:
            raise ValueError("Got {} element names for a group of order {}".format(len(self.names), order))
        self.name = "G{}".format(order) if name is None else name

    @property
    def order(self):
        return self.mul.shape[0]

    def product(self, *elements):
        result = self.identity
        for element in elements:
            result = self.mul[result, element]
        return int(result)

    def power(self, a, k):
        """``a`` multiplied with itself ``k`` times; negative ``k`` uses the inverse."""
        if k < 0:
            a, k = self.inv[a], -k
        result = self.identity
        for _ in range(k):
            result = self.mul[result, a]
        return int(result)

    def element_order(self, a):
        power, k = a, 1
        while power != self.identity:
            power, k = self.mul[power, a], k + 1
        return k

    def element(self, name):
        """Id of the element with the given display name."""
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError("{} has no element named {!r}".format(self.name, name)) from None

    def __repr__(self):
        return "GroupTable(name={!r}, order={})".format(self.name, self.order)


###
# Catalog
###


def cyclic_group(n):
    """Cyclic group of order ``n`` with element ``i`` standing for ``i mod n``."""
    if n < 1:
        raise ValueError("The order of a cyclic group must be positive, not {}".format(n))
    elements = np.arange(n)
    return GroupTable((elements[:, np.newaxis] + elements[np.newaxis, :]) % n, name="C{}".format(n))


def _pair_group(rotations, product, name, letters=("r", "s")):
    """Group on pairs ``(i, j)``, ``0 <= i < rotations``, ``j in {0, 1}``, with id ``i + rotations * j``."""
    order = 2 * rotations
    pairs = [(i, j) for j in range(2) for i in range(rotations)]
    mul = np.empty((order, order), dtype=int)
    for a, (i, j) in enumerate(pairs):
        for b, (k, l) in enumerate(pairs):
            p, q = product(i, j, k, l)
            mul[a, b] = p % rotations + rotations * (q % 2)
    names = []
    for i, j in pairs:
        word = "" if i == 0 else letters[0] if i == 1 else "{}^{}".format(letters[0], i)
        word += letters[1] if j else ""
        names.append(word or "e")
    return GroupTable(mul, names=names, name=name)


def dihedral_group(order):
    """Dihedral group of the given (even) order; ``r^i s^j`` with ``s r s = r^-1``."""
    if order < 2 or order % 2:
        raise ValueError("A dihedral group has even order, not {}".format(order))
    n = order // 2
    return _pair_group(n, lambda i, j, k, l: (i + (-1) ** j * k, j + l), "D{}".format(order))


def quaternion_group():
    """Quaternion group of order 8 as the dicyclic group on pairs ``(i, j)``, ``i`` mod 4."""

    def product(i, j, k, l):
        if j == 0:
            return i + k, l
        if l == 0:
            return i - k, 1
        return i - k + 2, 0

    return _pair_group(4, product, "Q8", letters=("a", "b"))


def semidihedral_group():
    """Semidihedral group of order 16: ``y^8 = x^2 = e`` and ``x y x = y^3``.

    The element ``y^i x^j`` has id ``i + 8 j`` and ``(i, j)(k, l) = (i + 3^j k mod 8, j + l mod 2)``.

    Examples
    --------
    >>> from vtlink.cayley import semidihedral_group
    >>> sd16 = semidihedral_group()
    >>> x, y = sd16.element("x"), sd16.element("y")
    >>> sd16.names[sd16.product(x, y, x)]
    'y^3'
    """
    return _pair_group(8, lambda i, j, k, l: (i + 3**j * k, j + l), "SD16", letters=("y", "x"))


def direct_product(first, second):
    """Direct product with element ``(a, b)`` stored as ``a * second.order + b``."""
    m = second.order
    a = np.arange(first.order * m)
    mul = first.mul[(a // m)[:, np.newaxis], (a // m)[np.newaxis, :]] * m + second.mul[
        (a % m)[:, np.newaxis], (a % m)[np.newaxis, :]
    ]
    names = ["({},{})".format(x, y) for x in first.names for y in second.names]
    return GroupTable(mul, names=names, name="{}x{}".format(first.name, second.name))


def group_from_table(text):
    """Parse a group from a header line ``order=<n>`` followed by ``n`` rows of ``n`` element ids.

    Raises
    ------
    GroupTableError
        If the text is malformed or the table violates a group axiom.

    Examples
    --------
    >>> from vtlink.cayley import group_from_table
    >>> group_from_table("order=2\\n0 1\\n1 0").order
    2
    """
    lines = [line.split("#", 1)[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise GroupTableError("format", (), "Empty group table")
    header = re.fullmatch(r"order\s*=\s*(\d+)", lines[0])
    if header is None:
        raise GroupTableError("format", (0,), "Expected a header 'order=<n>', got {!r}".format(lines[0]))
    order = int(header.group(1))
    rows = lines[1:]
    if len(rows) != order:
        raise GroupTableError("format", (len(rows),), "Expected {} rows, got {}".format(order, len(rows)))
    table = []
    for index, row in enumerate(rows):
        entries = row.split()
        if len(entries) != order or not all(entry.isdigit() for entry in entries):
            raise GroupTableError("format", (index,), "Row {} must hold {} element ids".format(index, order))
        table.append([int(entry) for entry in entries])
    return GroupTable(table, name="G{}".format(order))


def make_group(description):
    """Build a group from a description such as ``"cyclic(5)"`` or ``"direct_product(cyclic(2),cyclic(4))"``.

    Known constructors are ``cyclic(n)``, ``dihedral(order)``, ``quaternion8``,
    ``semidihedral16`` and ``direct_product(a,b)``.

    Examples
    --------
    >>> from vtlink.cayley import make_group
    >>> make_group("direct_product(cyclic(2), cyclic(2))")
    GroupTable(name='C2xC2', order=4)
    """
    description = description.replace(" ", "")
    if description == "quaternion8":
        return quaternion_group()
    if description == "semidihedral16":
        return semidihedral_group()
    match = re.fullmatch(r"(cyclic|dihedral)\((\d+)\)", description)
    if match:
        constructor = cyclic_group if match.group(1) == "cyclic" else dihedral_group
        return constructor(int(match.group(2)))
    if description.startswith("direct_product(") and description.endswith(")"):
        inner = description[len("direct_product(") : -1]
        depth = 0
        for position, character in enumerate(inner):
            depth += {"(": 1, ")": -1}.get(character, 0)
            if character == "," and depth == 0:
                return direct_product(make_group(inner[:position]), make_group(inner[position + 1 :]))
    raise ValueError("Unknown group description {!r}".format(description))


def default_catalog(max_order=16):
    """Groups used for the census, of order at most ``max_order``.

    Cyclic groups of order up to 16, dihedral groups of order 6 to 16, the abelian
    products of small cyclic groups up to order 16, the quaternion group and the
    semidihedral group of order 16.
    """
    c = cyclic_group
    catalog = [c(n) for n in range(1, 17)]
    catalog += [dihedral_group(2 * n) for n in range(3, 9)]
    catalog += [
        direct_product(c(2), c(2)),
        direct_product(c(2), c(4)),
        direct_product(direct_product(c(2), c(2)), c(2)),
        direct_product(c(3), c(3)),
        direct_product(c(2), c(6)),
        direct_product(c(2), c(8)),
        direct_product(c(4), c(4)),
        direct_product(direct_product(c(2), c(2)), c(4)),
        direct_product(direct_product(direct_product(c(2), c(2)), c(2)), c(2)),
        quaternion_group(),
        semidihedral_group(),
    ]
    return [group for group in catalog if group.order <= max_order]


###
# Cayley graphs
###


def connection_set(group, elements):
    """Validate a connection set: identity free and closed under inverses."""
    elements = frozenset(int(a) for a in elements)
    if any(not 0 <= a < group.order for a in elements):
        raise ValueError("Connection set {} has elements outside {}".format(sorted(elements), group.name))
    if group.identity in elements:
        raise ValueError("A connection set cannot contain the identity")
    missing = [a for a in elements if group.inv[a] not in elements]
    if missing:
        raise ValueError("The connection set lacks the inverse of {}".format(group.names[missing[0]]))
    return elements


def connection_sets(group, max_size=None):
    """Every connection set with at most ``max_size`` elements.

    Connection sets are unions of involutions and inverse pairs, so they are
    enumerated as subsets of those.

    Examples
    --------
    >>> from vtlink.cayley import connection_sets, cyclic_group, make_group
    >>> sorted(sorted(s) for s in connection_sets(cyclic_group(3)))
    [[], [1, 2]]
    >>> len(list(connection_sets(make_group("direct_product(cyclic(2),cyclic(2))"))))
    8
    """
    atoms = []
    for a in range(group.order):
        b = int(group.inv[a])
        if a != group.identity and a <= b:
            atoms.append((a,) if a == b else (a, b))

    def extend(start, chosen):
        yield frozenset(chosen)
        for index in range(start, len(atoms)):
            if max_size is None or len(chosen) + len(atoms[index]) <= max_size:
                yield from extend(index + 1, chosen + atoms[index])

    return extend(0, ())


def generated_subgroup(group, elements):
    """Closure of ``elements`` under multiplication."""
    found = {group.identity}
    frontier = [group.identity]
    elements = [int(a) for a in elements]
    while frontier:
        new = []
        for g in frontier:
            for a in elements:
                product = int(group.mul[g, a])
                if product not in found:
                    found.add(product)
                    new.append(product)
        frontier = new
    return frozenset(found)


def cayley_graph(group, elements):
    """Cayley graph with an edge between ``a`` and ``b`` when ``a^-1 b`` lies in the connection set.

    Examples
    --------
    >>> from vtlink.cayley import cayley_graph, cyclic_group
    >>> cayley_graph(cyclic_group(5), {1, 4})
    Graph(order=5, size=5)
    """
    elements = connection_set(group, elements)
    quotients = group.mul[group.inv[:, np.newaxis], np.arange(group.order)[np.newaxis, :]]
    adjacency = np.isin(quotients, sorted(elements))
    return Graph(adjacency, labels=group.names)


def left_translation(group, a):
    """The permutation ``g -> a g`` of the group elements."""
    return Permutation(group.mul[a])


def is_left_translation_automorphism(graph, group, a):
    image = np.asarray(left_translation(group, a).image)
    return bool(np.array_equal(graph.adjacency[np.ix_(image, image)], graph.adjacency))


###
# The semidihedral example
###

#: Connection set of the semidihedral example, by element name (``y^5x`` is ``x y^-1``)
SEMIDIHEDRAL_CONNECTION_SET = ("y", "y^7", "yx", "y^5x", "x", "y^4")


class DemoReport(NamedTuple):
    group: GroupTable  #: The semidihedral group
    connection_set: FrozenSet[int]  #: The connection set
    graph: Graph  #: The Cayley graph
    neighbourhood: Graph  #: Induced neighbourhood of the identity, labelled by element names
    graph6: bytes  #: graph6 record of ``neighbourhood``
    report: object  #: :class:`vtlink.elimination.EliminationReport` of ``neighbourhood``


def semidihedral_demo():
    """Build the semidihedral Cayley graph whose identity neighbourhood is asymmetric and check its properties.

    Raises
    ------
    InvariantViolation
        If any expected property fails.
    """
    group = semidihedral_group()
    elements = connection_set(group, [group.element(name) for name in SEMIDIHEDRAL_CONNECTION_SET])
    graph = cayley_graph(group, elements)
    stats = graph_stats(graph)
    if stats.n != 16 or set(stats.valencies) != {6} or not stats.is_connected:
        raise InvariantViolation("The Cayley graph is not a connected 6-regular graph on 16 vertices")

    neighbourhood = induced_neighbourhood(graph, group.identity).graph
    local = graph_stats(neighbourhood)
    if local.n != 6 or local.m != 6 or sorted(local.valencies) != [1, 1, 2, 2, 3, 3]:
        raise InvariantViolation("Unexpected neighbourhood of the identity: {}".format(local))
    if not is_asymmetric(neighbourhood):
        raise InvariantViolation("The neighbourhood of the identity has a non-trivial automorphism")
    if not all_isomorphisms(neighbourhood, get_sd16_neighbourhood_graph()):
        raise InvariantViolation("The neighbourhood of the identity differs from the stored neighbourhood graph")

    report = run_all(neighbourhood, all_rules=True)
    if report.overall.outcome == ELIMINATED:
        raise InvariantViolation("A Cayley neighbourhood was eliminated by {}".format(report.overall.rule))

    return DemoReport(group, elements, graph, neighbourhood, emit_graph6(neighbourhood), report)


###
# Census
###


class CensusMeta(NamedTuple):
    catalog: Tuple[str, ...]  #: Names of the groups enumerated
    max_size: Optional[int]  #: Connection-set size cap, ``None`` for no cap
    capped_order: int  #: Smallest group order the size cap applies to
    connected_only: bool  #: True if only connected Cayley graphs were used


class Census(NamedTuple):
    forms: Tuple[bytes, ...]  #: Sorted canonical graph6 forms of the neighbourhoods
    sources: Dict[bytes, Tuple[str, Tuple[str, ...]]]  #: First group and connection set giving each form
    meta: CensusMeta  #: Catalog and caps

    def graphs(self):
        return [parse_graph6(form) for form in self.forms]


def neighbourhood_census(groups, connected_only=True, max_size=8, capped_order=16, progress=False):
    """Canonical forms of the identity neighbourhoods of Cayley graphs over ``groups``.

    Parameters
    ----------
    groups : list of GroupTable
    connected_only : bool (default=True)
        Skip connection sets whose Cayley graph is disconnected.
    max_size : int or None (default=8)
        Largest connection set used for groups of order at least ``capped_order``.
    capped_order : int (default=16)
    progress : bool (default=False)
        Show a progress bar per group (requires tqdm).

    Returns
    -------
    Census

    Examples
    --------
    >>> from vtlink.cayley import cyclic_group, neighbourhood_census
    >>> census = neighbourhood_census([cyclic_group(5)])
    >>> census.forms
    (b'A?', b'C~')
    """
    sources = {}
    for group in groups:
        size_cap = max_size if group.order >= capped_order else None
        sets = connection_sets(group, size_cap)
        if progress and tqdm is not None:
            sets = tqdm(sets, desc=group.name, leave=False)
        found = 0
        for elements in sets:
            graph = cayley_graph(group, elements)
            if connected_only and not graph_stats(graph).is_connected:
                continue
            form = canonical_form(induced_neighbourhood(graph, group.identity).graph)
            if form not in sources:
                sources[form] = (group.name, tuple(sorted(group.names[a] for a in elements)))
                found += 1
        logger.info("%s: %d new neighbourhoods", group.name, found)

    meta = CensusMeta(
        catalog=tuple(group.name for group in groups),
        max_size=max_size,
        capped_order=capped_order,
        connected_only=connected_only,
    )
    return Census(tuple(sorted(sources)), sources, meta)


def save_census(census, path):
    """Write a census as a ``# meta:`` header line followed by one graph6 form per line."""
    lines = ["# meta: " + json.dumps(census.meta._asdict())]
    lines.extend(form.decode("ascii") for form in census.forms)
    Path(path).write_text("\n".join(lines) + "\n")


def load_census(path):
    """Read a census written by :func:`save_census`. Sources are not stored, so they come back empty."""
    meta = None
    forms = []
    for line in Path(path).read_text().splitlines():
        if line.startswith("# meta:"):
            fields = json.loads(line[len("# meta:") :])
            fields["catalog"] = tuple(fields["catalog"])
            meta = CensusMeta(**fields)
        elif line.strip() and not line.startswith("#"):
            forms.append(line.strip().encode("ascii"))
    if meta is None:
        raise ValueError("{} has no '# meta:' header".format(path))
    return Census(tuple(sorted(forms)), {}, meta)


class Violation(NamedTuple):
    form: bytes  #: Canonical graph6 form of the offending neighbourhood
    kind: str  #: ``"eliminated"`` or ``"fixed-subset"``
    detail: str  #: What went wrong


def proposition_check(graph, limits=None):
    """Check that the maximal fixed subset equals the common neighbourhood of a prime-minus-one orbit-restrictor.

    Applies to asymmetric graphs; every orbit-restrictor ``S`` with ``|S| + 1`` prime and
    every ``v`` in ``S`` are tested.

    Returns
    -------
    list of (frozenset, int)
        The ``(S, v)`` pairs where the two sets differ.
    """
    limits = _limits(limits)
    if not is_asymmetric(graph):
        return []
    failures = []
    for clique in orbit_restrictors(graph, limits.max_clique_order):
        if not isprime(len(clique) + 1):
            continue
        common = common_neighbourhood(graph, clique)
        for v in sorted(clique):
            if max_fixed_subset(graph, v) != common:
                failures.append((clique, v))
    return failures


def soundness_check(census, limits=None, verbose=False):
    """Run every rule on every census member and report the ones that were eliminated.

    Also runs :func:`proposition_check` on each member. An empty list means no violation.

    Parameters
    ----------
    census : Census or iterable of Graph
    limits : EliminationLimits, optional
    verbose : bool or int (default=False)
        If ``int > 0``, a progress line is printed every ``verbose`` graphs.
    """
    limits = EliminationLimits() if limits is None else limits
    graphs = census.graphs() if isinstance(census, Census) else list(census)
    violations = []
    for index, graph in enumerate(graphs):
        form = canonical_form(graph)
        report = run_all(graph, all_rules=True, limits=limits)
        if report.overall.outcome == ELIMINATED:
            violations.append(
                Violation(form, "eliminated", "{} ({} scope)".format(report.overall.rule, report.overall.scope))
            )
        for clique, v in proposition_check(graph, limits):
            detail = "F(X, {}) differs from the common neighbourhood of {}".format(v, sorted(clique))
            violations.append(Violation(form, "fixed-subset", detail))
        if verbose and (index + 1) % verbose == 0:
            print("Checked {} of {} neighbourhoods, {} violations".format(index + 1, len(graphs), len(violations)))
    return violations
