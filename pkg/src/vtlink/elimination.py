# MIT License: Copyright (c) 2026, the vtlink developers.
# See the LICENSE file in the root directory for full license text.
"""Rules certifying that a graph is not the induced neighbourhood of a vertex-transitive or Cayley graph.

Every rule returns a :class:`Verdict`. An ``"eliminated"`` verdict is a proof:
it carries a witness that :func:`verify_witness` re-checks from scratch. The
enumeration caps of :class:`EliminationLimits` only ever turn an elimination
into ``"inconclusive"``.
"""

import json
import logging
from typing import Any, Dict, NamedTuple, Optional, Tuple

from sympy import divisors, isprime, primerange

from ._utils import InvariantViolation
from .graphs import GraphStats, graph_stats, induced_neighbourhood, induced_subgraph, is_clique_set
from .permutations import canonical_form, has_involution_automorphism, is_asymmetric, perm_profile
from .structure import (
    classify_vertices,
    is_orbit_restrictor,
    max_fixed_subset,
    orbit_restrictors,
    restricted_isomorphisms,
    unique_neighbourhood_cliques,
    vertex_family,
)

__all__ = [
    "RULE_IDS",
    "Verdict",
    "Overall",
    "EliminationLimits",
    "EliminationReport",
    "rule_edge_bound",
    "rule_complete_valency",
    "rule_odd_class_involution",
    "rule_unique_clique",
    "rule_prime_clique",
    "rule_orbit_restrictor_order",
    "rule_fixed_subset",
    "run_all",
    "verify_witness",
]

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

EDGE_BOUND = "R1-edge-bound"
COMPLETE_VALENCY = "R2-complete-valency"
ODD_CLASS_INVOLUTION = "R3-odd-class-involution"
UNIQUE_CLIQUE = "R4-unique-clique"
PRIME_CLIQUE = "R5-prime-clique"
ORBIT_RESTRICTOR_ORDER = "R6-orbit-restrictor-order"
FIXED_SUBSET = "R7-fixed-subset"
RULE_IDS = (
    EDGE_BOUND,
    COMPLETE_VALENCY,
    ODD_CLASS_INVOLUTION,
    UNIQUE_CLIQUE,
    PRIME_CLIQUE,
    ORBIT_RESTRICTOR_ORDER,
    FIXED_SUBSET,
)

ELIMINATED = "eliminated"
INCONCLUSIVE = "inconclusive"
NOT_APPLICABLE = "not-applicable"
VERTEX_TRANSITIVE = "vertex-transitive"
CAYLEY_ONLY = "cayley-only"
SCOPE_FILTERS = {"any", VERTEX_TRANSITIVE}
INVOLUTION_READINGS = {"fixed-point-free", "any"}

# Witness entries holding vertex ids, translated to labels when reports are serialised
_VERTEX_FIELDS = {"vertex"}
_VERTEX_SET_FIELDS = {"class", "clique", "common", "class_intersection", "fixed_subset", "complete_valency"}


class Verdict(NamedTuple):
    rule_id: str  #: One of :data:`RULE_IDS`
    outcome: str  #: ``"eliminated"``, ``"inconclusive"`` or ``"not-applicable"``
    scope: str  #: ``"vertex-transitive"`` or ``"cayley-only"``
    witness: Dict[str, Any]  #: Rule specific evidence (vertex ids), empty unless eliminated or capped
    explanation: str  #: One sentence for humans


class Overall(NamedTuple):
    outcome: str  #: Strongest outcome over the counted verdicts
    scope: Optional[str]  #: Scope of the deciding elimination, ``None`` otherwise
    rule: Optional[str]  #: Rule of the deciding elimination, ``None`` otherwise


class EliminationLimits(NamedTuple):
    max_clique_order: int = 8  #: Largest clique order enumerated by the clique rules
    max_isomorphisms: int = 100000  #: Cap on restricted isomorphisms per fixed subset
    involutions: str = "fixed-point-free"  #: ``"any"`` allows involutions with fixed points
    ignore_asymmetry: bool = False  #: Treat every input as not asymmetric (cayley-only scope)


def _scope(graph, limits):
    if limits.ignore_asymmetry:
        return CAYLEY_ONLY
    return VERTEX_TRANSITIVE if is_asymmetric(graph) else CAYLEY_ONLY


def _limits(limits, **overrides):
    limits = EliminationLimits() if limits is None else limits
    overrides = {key: value for key, value in overrides.items() if value is not None}
    limits = limits._replace(**overrides)
    if limits.involutions not in INVOLUTION_READINGS:
        raise ValueError(
            "involutions must be one of {}, not {!r}".format(sorted(INVOLUTION_READINGS), limits.involutions)
        )
    if limits.max_clique_order < 1:
        raise ValueError("max_clique_order must be positive, not {}".format(limits.max_clique_order))
    return limits


def _lacks_involution(graph, limits):
    return not has_involution_automorphism(graph, fixed_points=limits.involutions == "any")


###
# R1 and R2: counting bounds
###


def rule_edge_bound(graph, limits=None):
    """Eliminate graphs with more than ``n(n-2)/2`` edges.

    Examples
    --------
    >>> from vtlink.graphs import Graph, make_named_graph
    >>> from vtlink.elimination import rule_edge_bound
    >>> k5_minus_edge = Graph.from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
    >>> rule_edge_bound(k5_minus_edge).outcome
    'eliminated'
    >>> rule_edge_bound(make_named_graph("cycle", 5)).outcome
    'inconclusive'
    >>> rule_edge_bound(make_named_graph("complete", 4)).outcome
    'not-applicable'
    """
    stats = graph_stats(graph)
    n, m = stats.n, stats.m
    if stats.is_clique:
        return Verdict(EDGE_BOUND, NOT_APPLICABLE, VERTEX_TRANSITIVE, {}, "The graph is complete.")
    if 2 * m > n * (n - 2):
        return Verdict(
            EDGE_BOUND,
            ELIMINATED,
            VERTEX_TRANSITIVE,
            {"n": n, "m": m},
            "The graph has m = {} edges, more than n(n-2)/2 = {:g}.".format(m, n * (n - 2) / 2),
        )
    return Verdict(
        EDGE_BOUND,
        INCONCLUSIVE,
        VERTEX_TRANSITIVE,
        {},
        "The graph has m = {} edges, at most n(n-2)/2 = {:g}.".format(m, n * (n - 2) / 2),
    )


def rule_complete_valency(graph, limits=None):
    """Eliminate graphs where more than ``(n-2)/3`` vertices are adjacent to all others.

    Examples
    --------
    >>> from vtlink.graphs import make_named_graph
    >>> from vtlink.elimination import rule_complete_valency
    >>> rule_complete_valency(make_named_graph("star", 4)).outcome
    'eliminated'
    """
    stats = graph_stats(graph)
    n = stats.n
    complete = stats.complete_valency
    if stats.is_clique:
        return Verdict(COMPLETE_VALENCY, NOT_APPLICABLE, VERTEX_TRANSITIVE, {}, "The graph is complete.")
    if 3 * len(complete) > n - 2:
        return Verdict(
            COMPLETE_VALENCY,
            ELIMINATED,
            VERTEX_TRANSITIVE,
            {"n": n, "complete_valency": complete},
            "{} vertices have complete valency, more than (n-2)/3 = {:g}.".format(len(complete), (n - 2) / 3),
        )
    return Verdict(
        COMPLETE_VALENCY,
        INCONCLUSIVE,
        VERTEX_TRANSITIVE,
        {},
        "{} vertices have complete valency, at most (n-2)/3 = {:g}.".format(len(complete), (n - 2) / 3),
    )


###
# R3: odd classes
###


def rule_odd_class_involution(graph, limits=None, ignore_asymmetry=None):
    """Eliminate graphs with a class of odd size whose neighbourhoods have no fixed-point-free involution.

    The elimination holds for every vertex-transitive host when the graph is
    asymmetric, and for Cayley hosts otherwise. The witness also records whether
    the class is a single vertex of odd valency, whether an odd number of
    vertices share its valency and whether the graph has odd order.
    """
    limits = _limits(limits, ignore_asymmetry=ignore_asymmetry)
    scope = _scope(graph, limits)
    partition = classify_vertices(graph)
    valencies = graph.valencies
    for members in partition.classes:
        if len(members) % 2 == 0:
            continue
        v = min(members)
        if not _lacks_involution(induced_neighbourhood(graph, v).graph, limits):
            continue
        same_valency = sum(1 for d in valencies if d == valencies[v])
        witness = {
            "class": members,
            "vertex": v,
            "class_size": len(members),
            "odd_valency": valencies[v] % 2 == 1,
            "unique_odd_vertex": len(members) == 1 and valencies[v] % 2 == 1 and same_valency == 1,
            "odd_valency_count": valencies[v] % 2 == 1 and same_valency % 2 == 1,
            "odd_order": graph.order % 2 == 1,
        }
        return Verdict(
            ODD_CLASS_INVOLUTION,
            ELIMINATED,
            scope,
            witness,
            "The class of {} has odd size {} and its neighbourhood has no fixed-point-free involution.".format(
                graph.label(v), len(members)
            ),
        )
    return Verdict(
        ODD_CLASS_INVOLUTION,
        INCONCLUSIVE,
        scope,
        {},
        "Every class whose neighbourhood lacks a fixed-point-free involution has even size.",
    )


###
# R4 and R5: unique-neighbourhood cliques
###


def _unique_clique_branch(graph, clique, v, common, limits):
    if _lacks_involution(induced_neighbourhood(graph, v).graph, limits):
        return "neighbourhood"
    if _lacks_involution(induced_subgraph(graph, common).graph, limits):
        return "common"
    if len(clique) % 2 == 0:
        return "parity"
    return None


def rule_unique_clique(graph, limits=None, ignore_asymmetry=None):
    """Eliminate via a clique with a unique common neighbourhood meeting some class an odd number of times.

    For such a clique ``S`` and ``v`` in ``S`` with ``|S & [v]|`` odd the graph is
    eliminated when the neighbourhood of ``v`` has no fixed-point-free involution
    (branch ``"neighbourhood"``), when the common neighbourhood of ``S`` has none
    (branch ``"common"``), or when ``|S|`` is even (branch ``"parity"``).
    """
    limits = _limits(limits, ignore_asymmetry=ignore_asymmetry)
    scope = _scope(graph, limits)
    partition = classify_vertices(graph)
    for k in range(1, min(limits.max_clique_order, graph.order) + 1):
        for candidate in unique_neighbourhood_cliques(graph, k, mode="iso"):
            clique = candidate.members
            for v in sorted(clique):
                intersection = clique & partition.members(v)
                if len(intersection) % 2 == 0:
                    continue
                branch = _unique_clique_branch(graph, clique, v, candidate.common, limits)
                if branch is None:
                    continue
                witness = {
                    "clique": clique,
                    "vertex": v,
                    "class_intersection": intersection,
                    "common": candidate.common,
                    "branch": branch,
                }
                return Verdict(
                    UNIQUE_CLIQUE,
                    ELIMINATED,
                    scope,
                    witness,
                    "The clique {} has a unique common neighbourhood, meets the class of {} in {} vertices "
                    "and fails the {} condition.".format(
                        _format_set(graph, clique), graph.label(v), len(intersection), branch
                    ),
                )
    return Verdict(
        UNIQUE_CLIQUE,
        INCONCLUSIVE,
        scope,
        {},
        "No unique-neighbourhood clique of order at most {} gives an elimination.".format(limits.max_clique_order),
    )


def rule_prime_clique(graph, limits=None, ignore_asymmetry=None):
    """Eliminate via a clique of order ``p - 1``, ``p`` prime, with a unique number of common neighbours.

    The elimination needs that number to be nonzero and not divisible by ``p``.
    """
    limits = _limits(limits, ignore_asymmetry=ignore_asymmetry)
    scope = _scope(graph, limits)
    for p in primerange(2, min(limits.max_clique_order, graph.order) + 2):
        p = int(p)
        for candidate in unique_neighbourhood_cliques(graph, p - 1, mode="count"):
            common = candidate.common
            if common and len(common) % p != 0:
                witness = {"clique": candidate.members, "prime": p, "common": common, "common_size": len(common)}
                return Verdict(
                    PRIME_CLIQUE,
                    ELIMINATED,
                    scope,
                    witness,
                    "The clique {} is the only clique of order {} with {} common neighbours, "
                    "which is not divisible by {}.".format(
                        _format_set(graph, candidate.members), p - 1, len(common), p
                    ),
                )
    return Verdict(
        PRIME_CLIQUE,
        INCONCLUSIVE,
        scope,
        {},
        "No count-unique clique of prime-minus-one order at most {} gives an elimination.".format(
            limits.max_clique_order
        ),
    )


###
# R6 and R7: restrictions to the maximal fixed subset
###


def _uniform_cycle_length(permutation):
    lengths = set(perm_profile(permutation).cycle_lengths)
    return lengths.pop() if len(lengths) == 1 else None


def _admissible_orders(restricted, allowed):
    """Uniform cycle lengths in ``allowed`` realised by some restriction."""
    found = set()
    for permutation in restricted.permutations:
        length = _uniform_cycle_length(permutation)
        if length in allowed:
            found.add(length)
    return found


def _orbit_restrictor_test(graph, clique, v, limits):
    """Outcome for one orbit-restrictor and member: ``None`` if not decisive, else a witness dict."""
    fixed = max_fixed_subset(graph, v)
    if not fixed:
        return None
    bound = len(clique) + 1
    allowed = {int(d) for d in divisors(bound) if d > 1}
    restricted = restricted_isomorphisms(
        vertex_family(graph, v), fixed, targets=(v,), max_isomorphisms=limits.max_isomorphisms
    )
    if _admissible_orders(restricted, allowed):
        return None
    witness = {
        "clique": clique,
        "vertex": v,
        "fixed_subset": fixed,
        "order_bound": bound,
        "divisors": sorted(allowed),
        "restrictions": len(restricted.permutations),
    }
    if not restricted.complete:
        witness["capped"] = True
    return witness


def rule_orbit_restrictor_order(graph, limits=None, ignore_asymmetry=None):
    """Eliminate via an orbit-restrictor ``S`` and a member ``v`` with a nonempty maximal fixed subset ``F``.

    The graph is eliminated when no isomorphism from the neighbourhood of a class
    member onto that of ``v`` restricts on ``F`` to a permutation whose cycles all
    have one length ``d > 1`` dividing ``|S| + 1``.
    """
    limits = _limits(limits, ignore_asymmetry=ignore_asymmetry)
    scope = _scope(graph, limits)
    capped = None
    for clique in orbit_restrictors(graph, limits.max_clique_order):
        for v in sorted(clique):
            witness = _orbit_restrictor_test(graph, clique, v, limits)
            if witness is None:
                continue
            if witness.get("capped"):
                capped = capped or witness
                continue
            return Verdict(
                ORBIT_RESTRICTOR_ORDER,
                ELIMINATED,
                scope,
                witness,
                "For the orbit-restrictor {} no neighbourhood isomorphism onto {} acts on the fixed subset {} "
                "with all cycles of one length dividing {}.".format(
                    _format_set(graph, clique),
                    graph.label(v),
                    _format_set(graph, witness["fixed_subset"]),
                    witness["order_bound"],
                ),
            )
    if capped is not None:
        return Verdict(
            ORBIT_RESTRICTOR_ORDER,
            INCONCLUSIVE,
            scope,
            {"capped": True, "max_isomorphisms": limits.max_isomorphisms},
            "The isomorphism enumeration reached max_isomorphisms = {}.".format(limits.max_isomorphisms),
        )
    return Verdict(
        ORBIT_RESTRICTOR_ORDER,
        INCONCLUSIVE,
        scope,
        {},
        "Every orbit-restrictor of order at most {} admits a suitable isomorphism.".format(limits.max_clique_order),
    )


def _fixed_subset_test(graph, v, limits):
    fixed = max_fixed_subset(graph, v)
    if not fixed:
        return None, False
    family = vertex_family(graph, v)
    restricted = restricted_isomorphisms(family, fixed, max_isomorphisms=limits.max_isomorphisms)
    # Any uniform cycle length above one, i.e. fixed-point-free and semiregular
    if _admissible_orders(restricted, set(range(2, len(fixed) + 1))):
        return None, True
    witness = {
        "class": frozenset(family.members),
        "vertex": v,
        "fixed_subset": fixed,
        "restrictions": len(restricted.permutations),
    }
    if not restricted.complete:
        witness["capped"] = True
    return witness, True


def rule_fixed_subset(graph, limits=None, ignore_asymmetry=None):
    """Eliminate via a class whose maximal fixed subset admits no fixed-point-free semiregular restriction."""
    limits = _limits(limits, ignore_asymmetry=ignore_asymmetry)
    scope = _scope(graph, limits)
    partition = classify_vertices(graph)
    tested = False
    capped = None
    for members in partition.classes:
        witness, nonempty = _fixed_subset_test(graph, min(members), limits)
        tested = tested or nonempty
        if witness is None:
            continue
        if witness.get("capped"):
            capped = capped or witness
            continue
        return Verdict(
            FIXED_SUBSET,
            ELIMINATED,
            scope,
            witness,
            "No isomorphism between neighbourhoods of the class of {} acts on the fixed subset {} "
            "with all cycles of one length greater than one.".format(
                graph.label(witness["vertex"]), _format_set(graph, witness["fixed_subset"])
            ),
        )
    if capped is not None:
        return Verdict(
            FIXED_SUBSET,
            INCONCLUSIVE,
            scope,
            {"capped": True, "max_isomorphisms": limits.max_isomorphisms},
            "The isomorphism enumeration reached max_isomorphisms = {}.".format(limits.max_isomorphisms),
        )
    if not tested:
        return Verdict(FIXED_SUBSET, NOT_APPLICABLE, scope, {}, "Every class has an empty maximal fixed subset.")
    return Verdict(
        FIXED_SUBSET,
        INCONCLUSIVE,
        scope,
        {},
        "Every nonempty maximal fixed subset admits a fixed-point-free semiregular restriction.",
    )


RULES = {
    EDGE_BOUND: rule_edge_bound,
    COMPLETE_VALENCY: rule_complete_valency,
    ODD_CLASS_INVOLUTION: rule_odd_class_involution,
    UNIQUE_CLIQUE: rule_unique_clique,
    PRIME_CLIQUE: rule_prime_clique,
    ORBIT_RESTRICTOR_ORDER: rule_orbit_restrictor_order,
    FIXED_SUBSET: rule_fixed_subset,
}


###
# Witness re-checks
###


def verify_witness(graph, verdict, limits=None):
    """Re-check an eliminated verdict from its witness using the underlying predicates.

    Returns
    -------
    bool
        True if the witness proves the elimination at the stated scope.

    Raises
    ------
    ValueError
        If the verdict is not an elimination.
    """
    if verdict.outcome != ELIMINATED:
        raise ValueError("Only eliminated verdicts carry a witness, got {!r}".format(verdict.outcome))
    limits = _limits(limits)
    witness = verdict.witness
    stats = graph_stats(graph)

    if verdict.rule_id in {EDGE_BOUND, COMPLETE_VALENCY}:
        if stats.is_clique or verdict.scope != VERTEX_TRANSITIVE:
            return False
        if verdict.rule_id == EDGE_BOUND:
            return witness["m"] == stats.m and 2 * stats.m > stats.n * (stats.n - 2)
        complete = witness["complete_valency"]
        return complete == stats.complete_valency and 3 * len(complete) > stats.n - 2

    if verdict.scope == VERTEX_TRANSITIVE and not is_asymmetric(graph):
        return False

    partition = classify_vertices(graph)
    if verdict.rule_id == ODD_CLASS_INVOLUTION:
        v = witness["vertex"]
        members = partition.members(v)
        return (
            members == witness["class"]
            and len(members) % 2 == 1
            and _lacks_involution(induced_neighbourhood(graph, v).graph, limits)
        )

    if verdict.rule_id == UNIQUE_CLIQUE:
        clique, v = witness["clique"], witness["vertex"]
        if not is_clique_set(graph, clique) or v not in clique:
            return False
        unique = [c for c in unique_neighbourhood_cliques(graph, len(clique), mode="iso") if c.members == clique]
        if len(unique) != 1 or unique[0].common != witness["common"]:
            return False
        if len(clique & partition.members(v)) % 2 == 0:
            return False
        branch = witness["branch"]
        if branch == "neighbourhood":
            return _lacks_involution(induced_neighbourhood(graph, v).graph, limits)
        if branch == "common":
            return _lacks_involution(induced_subgraph(graph, witness["common"]).graph, limits)
        return branch == "parity" and len(clique) % 2 == 0

    if verdict.rule_id == PRIME_CLIQUE:
        clique, p, common = witness["clique"], witness["prime"], witness["common"]
        unique = [c for c in unique_neighbourhood_cliques(graph, len(clique), mode="count") if c.members == clique]
        return (
            isprime(p)
            and len(clique) == p - 1
            and len(unique) == 1
            and unique[0].common == common
            and len(common) > 0
            and len(common) % p != 0
        )

    if verdict.rule_id == ORBIT_RESTRICTOR_ORDER:
        clique, v = witness["clique"], witness["vertex"]
        if v not in clique or not is_clique_set(graph, clique) or not is_orbit_restrictor(graph, clique):
            return False
        if max_fixed_subset(graph, v) != witness["fixed_subset"]:
            return False
        recheck = _orbit_restrictor_test(graph, clique, v, limits)
        return recheck is not None and not recheck.get("capped", False)

    if verdict.rule_id == FIXED_SUBSET:
        v = witness["vertex"]
        if partition.members(v) != witness["class"] or max_fixed_subset(graph, v) != witness["fixed_subset"]:
            return False
        recheck, _ = _fixed_subset_test(graph, v, limits)
        return recheck is not None and not recheck.get("capped", False)

    raise ValueError("Unknown rule {!r}".format(verdict.rule_id))


###
# Report
###


def _format_set(graph, vertices):
    return "{" + ", ".join(graph.label(v) for v in sorted(vertices)) + "}"


def _serialise_witness(graph, witness):
    serialised = {}
    for key, value in witness.items():
        if key in _VERTEX_FIELDS:
            serialised[key] = graph.label(value)
        elif key in _VERTEX_SET_FIELDS:
            serialised[key] = [graph.label(v) for v in sorted(value)]
        else:
            serialised[key] = value
    return serialised


_STRENGTH = {NOT_APPLICABLE: 0, INCONCLUSIVE: 1}


def _strength(verdict):
    if verdict.outcome == ELIMINATED:
        return 3 if verdict.scope == VERTEX_TRANSITIVE else 2
    return _STRENGTH[verdict.outcome]


def _counts(verdict, scope_filter):
    return verdict.outcome == ELIMINATED and (scope_filter == "any" or verdict.scope == VERTEX_TRANSITIVE)


class EliminationReport(NamedTuple):
    graph: Any  #: The analysed :class:`vtlink.graphs.Graph`
    input: str  #: Canonical graph6 form of the input
    stats: GraphStats  #: Order, size and valencies
    asymmetric: bool  #: True if the input has no non-trivial automorphism
    verdicts: Tuple[Verdict, ...]  #: Verdicts of the executed rules, in execution order
    overall: Overall  #: Strongest counted outcome
    limits: Dict[str, Any]  #: Caps and options in force

    def to_dict(self):
        return {
            "input": self.input,
            "n": self.stats.n,
            "m": self.stats.m,
            "asymmetric": self.asymmetric,
            "rules": [
                {
                    "id": verdict.rule_id,
                    "outcome": verdict.outcome,
                    "scope": verdict.scope,
                    "witness": _serialise_witness(self.graph, verdict.witness),
                    "explanation": verdict.explanation,
                }
                for verdict in self.verdicts
            ],
            "overall": self.overall._asdict(),
            "limits": dict(self.limits),
        }

    def to_json(self, indent=None):
        return json.dumps(self.to_dict(), indent=indent)

    def to_text(self):
        lines = [
            "input: {}".format(self.input),
            "n = {}, m = {}, asymmetric: {}".format(self.stats.n, self.stats.m, "yes" if self.asymmetric else "no"),
        ]
        for verdict in self.verdicts:
            lines.append(
                "{:<28} {:<15} {:<18} {}".format(verdict.rule_id, verdict.outcome, verdict.scope, verdict.explanation)
            )
        if self.overall.outcome == ELIMINATED:
            lines.append("overall: eliminated ({} scope, {})".format(self.overall.scope, self.overall.rule))
        else:
            lines.append("overall: {}".format(self.overall.outcome))
        lines.append("limits: " + ", ".join("{}={}".format(key, value) for key, value in self.limits.items()))
        return "\n".join(lines)


def run_all(
    graph,
    scope_filter="any",
    max_clique_order=None,
    all_rules=False,
    limits=None,
    check_witnesses=True,
):
    """Run the rules in order of cost and collect an :class:`EliminationReport`.

    Parameters
    ----------
    graph : Graph
    scope_filter : {"any", "vertex-transitive"}
        With ``"vertex-transitive"`` an elimination that only holds for Cayley hosts
        does not count towards the overall outcome and does not stop the run.
    max_clique_order : int, optional
        Overrides ``limits.max_clique_order``.
    all_rules : bool (default=False)
        Run every rule instead of stopping at the first counted elimination.
    limits : EliminationLimits, optional
    check_witnesses : bool (default=True)
        Re-check every elimination with :func:`verify_witness`.

    Raises
    ------
    InvariantViolation
        If a witness does not re-check.

    Examples
    --------
    >>> from vtlink.graphs import make_named_graph
    >>> from vtlink.elimination import run_all
    >>> run_all(make_named_graph("cycle", 5)).overall.outcome
    'inconclusive'
    >>> run_all(make_named_graph("star", 4)).overall
    Overall(outcome='eliminated', scope='vertex-transitive', rule='R2-complete-valency')
    """
    if scope_filter not in SCOPE_FILTERS:
        raise ValueError("scope_filter must be 'any' or 'vertex-transitive', not {!r}".format(scope_filter))
    limits = _limits(limits, max_clique_order=max_clique_order)

    verdicts = []
    for rule_id in RULE_IDS:
        verdict = RULES[rule_id](graph, limits)
        logger.info("%s: %s (%s)", rule_id, verdict.outcome, verdict.scope)
        if check_witnesses and verdict.outcome == ELIMINATED and not verify_witness(graph, verdict, limits):
            raise InvariantViolation("The witness of {} does not re-check: {}".format(rule_id, verdict.witness))
        verdicts.append(verdict)
        if _counts(verdict, scope_filter) and not all_rules:
            break

    counted = [v for v in verdicts if v.outcome != ELIMINATED or _counts(v, scope_filter)]
    if counted:
        strongest = max(counted, key=_strength)  # first of equal strength
    if counted and strongest.outcome == ELIMINATED:
        overall = Overall(ELIMINATED, strongest.scope, strongest.rule_id)
    elif any(v.outcome != NOT_APPLICABLE for v in verdicts):
        overall = Overall(INCONCLUSIVE, None, None)
    else:
        overall = Overall(NOT_APPLICABLE, None, None)

    return EliminationReport(
        graph=graph,
        input=canonical_form(graph).decode("ascii"),
        stats=graph_stats(graph),
        asymmetric=is_asymmetric(graph),
        verdicts=tuple(verdicts),
        overall=overall,
        limits={
            "max_clique_order": limits.max_clique_order,
            "max_isomorphisms": limits.max_isomorphisms,
            "involutions": limits.involutions,
            "ignore_asymmetry": limits.ignore_asymmetry,
            "scope_filter": scope_filter,
            "all_rules": all_rules,
        },
    )
