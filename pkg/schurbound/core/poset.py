"""Hasse diagrams of dominance intervals and their saturated chains."""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

import networkx as nx

from schurbound.config import DEFAULT_CHAIN_LIMIT
from schurbound.core.partition import (
    Partition,
    RankedShape,
    covers,
    dominates,
    down_covers,
)
from schurbound.exceptions import LimitExceeded, NotACover, NotComparable

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Chain:
    """A saturated chain, listed from the top down."""

    elements: Tuple[Partition, ...]

    def __post_init__(self) -> None:
        elements = tuple(self.elements)
        if not elements:
            raise ValueError("A chain needs at least one element")
        for upper, lower in zip(elements, elements[1:]):
            if not covers(upper, lower):
                raise NotACover(f"({upper}) does not cover ({lower})")
        object.__setattr__(self, "elements", elements)

    @property
    def length(self) -> int:
        return len(self.elements) - 1

    @property
    def top(self) -> Partition:
        return self.elements[0]

    @property
    def bottom(self) -> Partition:
        return self.elements[-1]

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, index: int) -> Partition:
        return self.elements[index]

    def __str__(self) -> str:
        return " > ".join(str(p) for p in self.elements)


@dataclass(frozen=True, eq=False)
class HasseInterval:
    """
    The cover DAG of {v : top >= v >= bottom} inside Gamma(n, r).

    ``graph`` is frozen; ``order`` is a topological order that breaks ties
    reverse lexicographically, and ``longest_from_top`` maps every node to the
    length of the longest chain reaching it from ``top``.
    """

    top: Partition
    bottom: Partition
    rank: int
    graph: nx.DiGraph
    order: Tuple[Partition, ...]
    longest_from_top: Dict[Partition, int]

    @property
    def nodes(self) -> List[Partition]:
        return list(self.order)

    @property
    def edges(self) -> List[Tuple[Partition, Partition]]:
        position = {node: index for index, node in enumerate(self.order)}
        return sorted(self.graph.edges(), key=lambda e: (position[e[0]], position[e[1]]))

    def children(self, node: Partition) -> List[Partition]:
        return sorted(self.graph.successors(node), key=Partition.rev_lex_key)

    def parents(self, node: Partition) -> List[Partition]:
        return sorted(self.graph.predecessors(node), key=Partition.rev_lex_key)

    @property
    def length(self) -> int:
        return self.longest_from_top[self.bottom]


def _check_endpoints(top: Partition, bottom: Partition, rank: int) -> None:
    RankedShape(top, rank)
    RankedShape(bottom, rank)
    if not dominates(top, bottom):
        raise NotComparable(f"({top}) does not dominate ({bottom})")


def build_interval(top: Partition, bottom: Partition, rank: int) -> HasseInterval:
    """
    Build the Hasse diagram of [bottom, top] by walking covers down from top.

    Raises:
        NotComparable: if top does not dominate bottom
    """
    _check_endpoints(top, bottom, rank)
    graph = nx.DiGraph()
    graph.add_node(top)
    queue = deque([top])
    while queue:
        node = queue.popleft()
        if node == bottom:
            continue
        for child in down_covers(node, rank):
            if not dominates(child, bottom):
                continue
            if child not in graph:
                queue.append(child)
            graph.add_edge(node, child)

    order = tuple(nx.lexicographical_topological_sort(graph, key=Partition.rev_lex_key))
    longest = {top: 0}
    for node in order:
        for child in graph.successors(node):
            longest[child] = max(longest.get(child, 0), longest[node] + 1)

    logger.info(
        f"Built interval [{bottom}, {top}] at rank {rank}: "
        f"{graph.number_of_nodes()} nodes, {graph.number_of_edges()} covers"
    )
    return HasseInterval(
        top=top,
        bottom=bottom,
        rank=rank,
        graph=nx.freeze(graph),
        order=order,
        longest_from_top=longest,
    )


def longest_chain_length(top: Partition, bottom: Partition, rank: int) -> int:
    """Length of the longest saturated chain from top to bottom."""
    return build_interval(top, bottom, rank).length


def _walk(
    interval: HasseInterval, step, limit: Optional[int]
) -> List[Chain]:
    chains: List[Chain] = []
    path = [interval.top]

    def visit(node: Partition) -> None:
        if node == interval.bottom:
            chains.append(Chain(tuple(path)))
            if limit is not None and len(chains) > limit:
                raise LimitExceeded(
                    f"More than {limit} chains from ({interval.top}) to ({interval.bottom})",
                    found=len(chains),
                )
            return
        for child in step(node):
            path.append(child)
            visit(child)
            path.pop()

    visit(interval.top)
    return chains


def maximal_chains(
    top: Partition,
    bottom: Partition,
    rank: int,
    limit: Optional[int] = DEFAULT_CHAIN_LIMIT,
) -> List[Chain]:
    """
    Every saturated chain from top to bottom, children visited in reverse
    lexicographic order.

    Raises:
        NotComparable: if top does not dominate bottom
        LimitExceeded: if more than ``limit`` chains exist
    """
    interval = build_interval(top, bottom, rank)
    return _walk(interval, interval.children, limit)


def longest_chains_in(
    interval: HasseInterval, limit: Optional[int] = DEFAULT_CHAIN_LIMIT
) -> List[Chain]:
    """Chains of maximal length inside an already built interval."""
    longest = interval.longest_from_top
    # Nodes from which bottom is still reachable at the right depth.
    on_path = {interval.bottom}
    for node in reversed(interval.order):
        if node in on_path:
            for parent in interval.graph.predecessors(node):
                if longest[parent] + 1 == longest[node]:
                    on_path.add(parent)

    def tight_children(node: Partition) -> List[Partition]:
        return [
            child
            for child in interval.children(node)
            if child in on_path and longest[child] == longest[node] + 1
        ]

    return _walk(interval, tight_children, limit)


def longest_chains(
    top: Partition,
    bottom: Partition,
    rank: int,
    limit: Optional[int] = DEFAULT_CHAIN_LIMIT,
) -> List[Chain]:
    """Every chain from top to bottom whose length is the longest chain length."""
    return longest_chains_in(build_interval(top, bottom, rank), limit)


def first_chain(top: Partition, bottom: Partition, rank: int) -> Chain:
    """
    One saturated chain from top to bottom, found greedily by always stepping
    to the reverse-lexicographically largest cover that still dominates bottom.
    """
    _check_endpoints(top, bottom, rank)
    path = [top]
    while path[-1] != bottom:
        path.append(
            next(child for child in down_covers(path[-1], rank) if dominates(child, bottom))
        )
    return Chain(tuple(path))
