"""The lower bound B(lambda) and its certificates."""

import logging
from typing import Dict, List, Optional

from schurbound.config import DEFAULT_CHAIN_LIMIT
from schurbound.core.partition import Partition
from schurbound.core.poset import Chain, build_interval, longest_chains_in
from schurbound.exceptions import PartitionError
from schurbound.features.models import BoundCertificate, ChainBound

logger = logging.getLogger(__name__)


def step_contribution(node: Partition) -> int:
    """2^(l(node) - 2), the share of a non-top chain element."""
    return 2 ** (node.length - 2)


def top_element(lam: Partition) -> Partition:
    if lam.is_empty():
        raise PartitionError("B is defined for nonempty partitions only")
    return Partition((lam.size,))


def chain_bound(chain: Chain) -> int:
    """
    B(C) = 1 + sum of 2^(l(v) - 2) over every element of C except its top.

    The chain must start at the maximum (n) of Par(n).
    """
    if chain.top != top_element(chain.bottom):
        raise PartitionError(f"Chain must start at ({chain.bottom.size}), not ({chain.top})")
    return 1 + sum(step_contribution(node) for node in chain.elements[1:])


def compute_bound(lam: Partition) -> BoundCertificate:
    """
    B(lambda), the best B(C) over all longest chains C from (n) to lambda.

    Only edges that extend a longest path from (n) are kept; on that sub-DAG
    the largest sum of step contributions is found in topological order, and
    the certificate chain is read back through the recorded parents.
    """
    top = top_element(lam)
    n = lam.size
    interval = build_interval(top, lam, n)
    longest = interval.longest_from_top

    score: Dict[Partition, int] = {top: 0}
    parent: Dict[Partition, Partition] = {}
    for node in interval.order:
        if node not in score:
            continue
        for child in interval.children(node):
            if longest[child] != longest[node] + 1:
                continue
            candidate = score[node] + step_contribution(child)
            if candidate > score.get(child, -1):
                score[child] = candidate
                parent[child] = node

    path = [lam]
    while path[-1] != top:
        path.append(parent[path[-1]])
    best_chain = Chain(tuple(reversed(path)))

    per_step = tuple(step_contribution(node) for node in path[:-1])
    certificate = BoundCertificate(
        partition=lam,
        n=n,
        longest_length=interval.length,
        best_chain=best_chain,
        per_step=per_step,
        bound=1 + score[lam],
        floor_bound=2 ** (lam.length - 1),
    )
    logger.debug(f"B({lam}) = {certificate.bound} via {best_chain}")
    return certificate


def chain_bounds(lam: Partition, limit: Optional[int] = DEFAULT_CHAIN_LIMIT) -> List[ChainBound]:
    """B(C) for every longest chain C from (n) to lambda."""
    top = top_element(lam)
    interval = build_interval(top, lam, lam.size)
    return [ChainBound(chain, chain_bound(chain)) for chain in longest_chains_in(interval, limit)]
