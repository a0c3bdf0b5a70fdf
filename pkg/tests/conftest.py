"""Brute-force oracles shared by the test suite.

Everything here works on plain tuples and avoids the library's own
enumeration and cover code, so the tests compare two independent answers.
"""

from itertools import product
from typing import Dict, List, Sequence, Tuple

import pytest

Parts = Tuple[int, ...]

# Number of involutions of {1..n}, which is also the sum of #SYT(lam) over lam |- n.
INVOLUTIONS = [1, 1, 2, 4, 10, 26, 76, 232, 764]


def brute_partitions(n: int) -> List[Parts]:
    """Partitions of n obtained by sorting every composition of n."""
    if n == 0:
        return [()]
    found = set()
    for cuts in product((0, 1), repeat=n - 1):
        parts, current = [], 1
        for cut in cuts:
            if cut:
                parts.append(current)
                current = 1
            else:
                current += 1
        parts.append(current)
        found.add(tuple(sorted(parts, reverse=True)))
    return sorted(found, reverse=True)


def brute_dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    width = max(len(a), len(b))
    a = list(a) + [0] * (width - len(a))
    b = list(b) + [0] * (width - len(b))
    total_a = total_b = 0
    for x, y in zip(a, b):
        total_a += x
        total_b += y
        if total_a < total_b:
            return False
    return True


def brute_covers(a: Parts, b: Parts, universe: Sequence[Parts]) -> bool:
    if a == b or not brute_dominates(a, b):
        return False
    return not any(
        v != a and v != b and brute_dominates(a, v) and brute_dominates(v, b) for v in universe
    )


def brute_maximal_chains(top: Parts, bottom: Parts) -> List[List[Parts]]:
    universe = brute_partitions(sum(top))
    below: Dict[Parts, List[Parts]] = {
        a: [b for b in universe if brute_covers(a, b, universe)] for a in universe
    }
    chains: List[List[Parts]] = []

    def walk(path: List[Parts]) -> None:
        if path[-1] == bottom:
            chains.append(list(path))
            return
        for child in below[path[-1]]:
            if brute_dominates(child, bottom):
                walk(path + [child])

    walk([top])
    return chains


def ssyt_count(shape: Parts, content: Parts) -> int:
    """Semistandard tableaux of the given shape whose entry i occurs content[i-1] times."""
    if sum(shape) != sum(content):
        return 0
    cells = [(row, col) for row, length in enumerate(shape) for col in range(length)]
    filling: Dict[Tuple[int, int], int] = {}
    remaining = list(content)

    def place(position: int) -> int:
        if position == len(cells):
            return 1
        row, col = cells[position]
        total = 0
        for value in range(1, len(content) + 1):
            if remaining[value - 1] == 0:
                continue
            if col > 0 and value < filling[(row, col - 1)]:
                continue
            if row > 0 and value <= filling[(row - 1, col)]:
                continue
            filling[(row, col)] = value
            remaining[value - 1] -= 1
            total += place(position + 1)
            remaining[value - 1] += 1
            del filling[(row, col)]
        return total

    return place(0)


@pytest.fixture(scope="session")
def oracle():
    """Namespace of the brute-force helpers."""

    class Oracle:
        partitions = staticmethod(brute_partitions)
        dominates = staticmethod(brute_dominates)
        covers = staticmethod(brute_covers)
        maximal_chains = staticmethod(brute_maximal_chains)
        ssyt = staticmethod(ssyt_count)
        involutions = INVOLUTIONS

    return Oracle
