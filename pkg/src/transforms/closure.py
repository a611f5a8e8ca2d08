"""Group closure of rule generators as a Cayley graph.

Nodes are signed-permutation labels, edges ``g -> g * s`` carry the name
of the generator s. Breadth-first exploration from the identity yields one
rule per group element, built from a shortest generator word.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Sequence

import networkx as nx

from src.base.exceptions import ClosureOverflowError
from src.base.logging import get_logger
from src.transforms.rule import TransformRule, identity_rule
from src.transforms.signed_permutation import SignedPermutation

logger = get_logger(__name__)


def cayley_graph(
    generators: Sequence[TransformRule],
    limit: int,
) -> tuple[nx.DiGraph, dict[SignedPermutation, TransformRule]]:
    """Explore the group generated by ``generators``.

    Args:
        generators: Rules whose ``word`` holds their generator name.
        limit: Largest admissible group order.

    Returns:
        (graph, rules) with one rule per label, keyed by label.

    Raises:
        ClosureOverflowError: More than ``limit`` distinct labels appeared.
    """
    if not generators:
        raise ValueError("closure needs at least one generator")
    start = identity_rule(generators[0].family)
    graph = nx.DiGraph()
    graph.add_node(start.label)
    rules: dict[SignedPermutation, TransformRule] = {start.label: start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for gen in generators:
            nxt = current.then(gen)
            gen_name = gen.word[0] if gen.word else gen.name
            graph.add_edge(current.label, nxt.label, generator=gen_name)
            if nxt.label not in rules:
                rules[nxt.label] = nxt
                if len(rules) > limit:
                    raise ClosureOverflowError(
                        "group closure exceeded its expected order", limit=limit, size=len(rules)
                    )
                queue.append(nxt)
    logger.debug("Closed rule group", family=start.family.name, order=len(rules))
    return graph, rules


def generate_group(generators: Sequence[TransformRule], limit: int) -> list[TransformRule]:
    """Closure of ``generators`` in breadth-first order (identity first)."""
    _, rules = cayley_graph(generators, limit)
    return list(rules.values())


def generator_word(
    graph: nx.DiGraph,
    source: SignedPermutation,
    target: SignedPermutation,
) -> list[str]:
    """Generator names along a shortest path in the Cayley graph."""
    path = nx.shortest_path(graph, source, target)
    return [graph.edges[u, v]["generator"] for u, v in zip(path, path[1:])]


def is_closed(rules: Sequence[TransformRule]) -> bool:
    """Whether every product of two members lands back in the set (by label)."""
    labels = {r.label for r in rules}
    return all(r1.label.then(r2.label) in labels for r1 in rules for r2 in rules)
