"""Integer partitions, the dominance ordering and its cover relation."""

import operator
import re
from dataclasses import dataclass
from itertools import accumulate, zip_longest
from typing import Iterator, List, Optional, Sequence, Tuple

from schurbound.exceptions import (
    NotACover,
    NotWeaklyDecreasing,
    PartitionError,
    PartitionParseError,
    RankError,
    RankExceeded,
    SizeMismatch,
)


def _as_ints(raw_parts: Sequence[int]) -> Tuple[int, ...]:
    try:
        return tuple(operator.index(p) for p in raw_parts)
    except TypeError:
        raise PartitionError(f"Partition parts must be integers, got {tuple(raw_parts)}")


@dataclass(frozen=True)
class Partition:
    """
    A partition in canonical form: positive parts, weakly decreasing.

    Construct through ``make_partition`` or ``parse_partition`` when the input
    may carry trailing zeros or comes from text.
    """

    parts: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = _as_ints(self.parts)
        if any(p < 1 for p in parts):
            raise PartitionError(f"Partition parts must be positive, got {parts}")
        for left, right in zip(parts, parts[1:]):
            if right > left:
                raise NotWeaklyDecreasing(
                    f"Parts {parts} are not weakly decreasing"
                )
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def largest(self) -> int:
        """Largest part, 0 for the empty partition."""
        return self.parts[0] if self.parts else 0

    def part(self, index: int) -> int:
        """1-based part lookup, zero-padded past the length."""
        if index < 1:
            raise IndexError(f"Partition indices are 1-based, got {index}")
        return self.parts[index - 1] if index <= len(self.parts) else 0

    def is_empty(self) -> bool:
        return not self.parts

    def rev_lex_key(self) -> Tuple[int, ...]:
        """Ascending sort on this key lists partitions in reverse lexicographic order."""
        return tuple(-p for p in self.parts)

    def compact(self) -> Optional[str]:
        """Digit form such as ``4111``, or None when some part exceeds 9."""
        if any(p > 9 for p in self.parts):
            return None
        return "".join(str(p) for p in self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        # A lone multi-digit part keeps a trailing comma so it never reads as compact digits.
        if len(self.parts) == 1 and self.parts[0] > 9:
            return f"{self.parts[0]},"
        return ",".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class RankedShape:
    """A partition viewed as an element of Gamma(n, r)."""

    partition: Partition
    rank: int
    checked: bool = True

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise RankError(f"Rank must be positive, got {self.rank}")
        if self.checked and self.partition.largest > self.rank:
            raise RankExceeded(
                f"Partition ({self.partition}) has a part larger than rank {self.rank}"
            )

    @property
    def size(self) -> int:
        return self.partition.size


def make_partition(raw_parts: Sequence[int]) -> Partition:
    """Build a partition from parts that may carry trailing zeros."""
    parts = list(_as_ints(raw_parts))
    if any(p < 0 for p in parts):
        raise PartitionError(f"Partition parts must be nonnegative, got {tuple(parts)}")
    while parts and parts[-1] == 0:
        parts.pop()
    if 0 in parts:
        raise NotWeaklyDecreasing(f"Parts {tuple(raw_parts)} are not weakly decreasing")
    return Partition(tuple(parts))


_DIGITS = re.compile(r"[0-9]+")


def parse_partition(text: str) -> Partition:
    """
    Parse ``4,1,1,1`` or the compact digit form ``4111``.

    The compact form is read one digit per part and rejects ``0`` so that it
    never collides with a multi-digit part.
    """
    cleaned = text.strip().strip("()").replace(" ", "")
    if not cleaned:
        return Partition()
    if "," in cleaned:
        tokens = [token for token in cleaned.split(",") if token != ""]
        if not all(_DIGITS.fullmatch(token) for token in tokens):
            raise PartitionParseError(f"Cannot parse partition '{text}'")
        return make_partition([int(token) for token in tokens])
    if not _DIGITS.fullmatch(cleaned):
        raise PartitionParseError(f"Cannot parse partition '{text}'")
    if len(cleaned) > 1 and "0" in cleaned:
        raise PartitionParseError(
            f"Compact partition '{text}' is ambiguous; use comma-separated parts"
        )
    if cleaned == "0":
        return Partition()
    return make_partition([int(digit) for digit in cleaned])


def _check_same_size(lam: Partition, mu: Partition) -> None:
    if lam.size != mu.size:
        raise SizeMismatch(
            f"Partitions ({lam}) and ({mu}) have different sizes {lam.size} and {mu.size}"
        )


def dominates(lam: Partition, mu: Partition) -> bool:
    """True iff every prefix sum of lam is at least the matching prefix sum of mu."""
    _check_same_size(lam, mu)
    lam_sums = accumulate(p for p, _ in zip_longest(lam.parts, mu.parts, fillvalue=0))
    mu_sums = accumulate(q for _, q in zip_longest(lam.parts, mu.parts, fillvalue=0))
    return all(a >= b for a, b in zip(lam_sums, mu_sums))


def _cover_pair(lam: Partition, mu: Partition) -> Optional[Tuple[int, int]]:
    _check_same_size(lam, mu)
    width = max(lam.length, mu.length)
    diffs = [(k, lam.part(k) - mu.part(k)) for k in range(1, width + 1)]
    moved = [(k, d) for k, d in diffs if d != 0]
    if len(moved) != 2:
        return None
    (i, di), (j, dj) = moved
    if di != 1 or dj != -1:
        return None
    if j == i + 1 or mu.part(i) == mu.part(j):
        return i, j
    return None


def covers(lam: Partition, mu: Partition) -> bool:
    """True iff lam > mu with nothing strictly between them in the dominance order."""
    return _cover_pair(lam, mu) is not None


def cover_indices(lam: Partition, mu: Partition) -> Tuple[int, int]:
    """
    The 1-based indices i < j with lam_i = mu_i + 1 and lam_j = mu_j - 1.

    Raises:
        NotACover: if lam does not cover mu
    """
    pair = _cover_pair(lam, mu)
    if pair is None:
        raise NotACover(f"({lam}) does not cover ({mu})")
    return pair


def down_covers(lam: Partition, rank: int) -> List[Partition]:
    """
    Partitions covered by lam, in reverse lexicographic order.

    Each one moves a single unit from part i to a later part j, where either
    j = i + 1 or the two parts end up equal.
    """
    RankedShape(lam, rank)
    parts = list(lam.parts) + [0]
    found = set()
    for i in range(len(parts) - 1):
        for j in range(i + 1, len(parts)):
            candidate = parts[:]
            candidate[i] -= 1
            candidate[j] += 1
            if any(b > a for a, b in zip(candidate, candidate[1:])):
                continue
            if j == i + 1 or candidate[i] == candidate[j]:
                found.add(make_partition(candidate))
    return sorted(found, key=Partition.rev_lex_key)


def _partitions_bounded(n: int, bound: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, bound), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


def gamma_elements(n: int, rank: int) -> List[Partition]:
    """All partitions of n with largest part at most rank, reverse lexicographic."""
    if n < 0:
        raise PartitionError(f"Cannot enumerate partitions of negative size {n}")
    if rank < 1:
        raise RankError(f"Rank must be positive, got {rank}")
    return [Partition(parts) for parts in _partitions_bounded(n, rank)]


def max_element(n: int, rank: int) -> Partition:
    """The maximum of Gamma(n, r): r repeated floor(n / r) times, then the remainder."""
    if n < 1 or rank < 1:
        raise PartitionError(f"Need n >= 1 and r >= 1, got n={n}, r={rank}")
    quotient, remainder = divmod(n, rank)
    return make_partition([rank] * quotient + [remainder])


def min_element(n: int) -> Partition:
    """The minimum (1, ..., 1) of Par(n)."""
    if n < 1:
        raise PartitionError(f"Need n >= 1, got {n}")
    return Partition((1,) * n)
