"""Schur polynomials in Chern variables and expansion into the Schur basis."""

import logging
from collections import defaultdict
from functools import lru_cache
from itertools import permutations
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from schurbound.core.partition import Partition, RankedShape
from schurbound.core.polynomial import CPolynomial, monomial
from schurbound.exceptions import (
    NotHomogeneous,
    PartitionError,
    RankError,
    RankExceeded,
    RankMismatch,
)

logger = logging.getLogger(__name__)


class SchurExpansion:
    """
    Integer coefficients a_lam of sum(a_lam * S_lam) over Gamma(degree, rank).

    The empty expansion is the zero polynomial.
    """

    __slots__ = ("rank", "degree", "coeffs")

    def __init__(self, rank: int, degree: int, coeffs: Optional[Mapping[Partition, int]] = None):
        if rank < 1:
            raise RankError(f"Rank must be positive, got {rank}")
        normalized: Dict[Partition, int] = {}
        for key, coeff in (coeffs or {}).items():
            if key.size != degree:
                raise PartitionError(f"S_({key}) does not have degree {degree}")
            if key.largest > rank:
                raise RankExceeded(f"S_({key}) vanishes at rank {rank}")
            if coeff:
                normalized[key] = int(coeff)
        self.rank = rank
        self.degree = degree
        self.coeffs = normalized

    @classmethod
    def zero(cls, rank: int, degree: int = 0) -> "SchurExpansion":
        return cls(rank, degree)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, key: Partition) -> int:
        return self.coeffs.get(key, 0)

    def sorted_terms(self) -> List[Tuple[Partition, int]]:
        return sorted(self.coeffs.items(), key=lambda item: item[0].rev_lex_key())

    def is_positive(self) -> bool:
        return all(coeff > 0 for coeff in self.coeffs.values())

    def min_coefficient(self) -> int:
        return min(self.coeffs.values(), default=0)

    def _combine(self, other: "SchurExpansion", sign: int) -> "SchurExpansion":
        if self.rank != other.rank:
            raise RankMismatch(f"Cannot combine rank {self.rank} with rank {other.rank}")
        if self.is_zero():
            return other.scale(sign)
        if other.is_zero():
            return self
        if self.degree != other.degree:
            raise NotHomogeneous(
                f"Cannot add expansions of degree {self.degree} and {other.degree}"
            )
        combined: Dict[Partition, int] = defaultdict(int, self.coeffs)
        for key, coeff in other.coeffs.items():
            combined[key] += sign * coeff
        return SchurExpansion(self.rank, self.degree, combined)

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        return self._combine(other, 1)

    def __sub__(self, other: "SchurExpansion") -> "SchurExpansion":
        return self._combine(other, -1)

    def __neg__(self) -> "SchurExpansion":
        return self.scale(-1)

    def scale(self, factor: int) -> "SchurExpansion":
        return SchurExpansion(
            self.rank, self.degree, {key: factor * coeff for key, coeff in self.coeffs.items()}
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return self.rank == other.rank
        return (self.rank, self.degree, self.coeffs) == (other.rank, other.degree, other.coeffs)

    __hash__ = None  # type: ignore[assignment]

    def __iter__(self) -> Iterator[Tuple[Partition, int]]:
        return iter(self.sorted_terms())

    def __repr__(self) -> str:
        return f"SchurExpansion(rank={self.rank}, degree={self.degree}, {self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = [
            (f"S_({key})" if coeff == 1 else f"{coeff}*S_({key})")
            for key, coeff in self.sorted_terms()
        ]
        return " + ".join(pieces).replace("+ -", "- ")


def _permutation_sign(perm: Tuple[int, ...]) -> int:
    inversions = sum(
        1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b]
    )
    return -1 if inversions % 2 else 1


def jacobi_trudi(lam: Partition, rank: int) -> CPolynomial:
    """
    S_lam(c_1, ..., c_r) = det(c_{lam_i - i + j}), expanded over all l! permutations.

    The whole first row vanishes when lam_1 > rank, so the result is zero then.
    """
    if rank < 1:
        raise RankError(f"Rank must be positive, got {rank}")
    if lam.largest > rank:
        return CPolynomial.zero(rank)
    length = lam.length
    terms: Dict[Partition, int] = defaultdict(int)
    for perm in permutations(range(length)):
        indices = [lam.parts[row] - row + perm[row] for row in range(length)]
        if any(index < 0 or index > rank for index in indices):
            continue
        key = Partition(tuple(sorted((i for i in indices if i > 0), reverse=True)))
        terms[key] += _permutation_sign(perm)
    return CPolynomial(rank, terms)


def _horizontal_strips(lam: Partition, boxes: int, rank: int) -> Iterator[Tuple[int, ...]]:
    # mu_1 >= lam_1 >= mu_2 >= lam_2 >= ... >= mu_{l+1} >= 0, mu_1 <= rank
    parts = list(lam.parts) + [0]
    ceilings = [rank] + list(lam.parts)

    def fill(row: int, remaining: int) -> Iterator[Tuple[int, ...]]:
        if row == len(parts):
            if remaining == 0:
                yield ()
            return
        room = ceilings[row] - parts[row]
        for extra in range(min(room, remaining), -1, -1):
            for rest in fill(row + 1, remaining - extra):
                yield (parts[row] + extra,) + rest

    return fill(0, boxes)


@lru_cache(maxsize=None)
def pieri(index: int, lam: Partition, rank: int) -> SchurExpansion:
    """
    c_index * S_lam as a sum of S_mu over horizontal strips of index boxes added
    to lam. Shapes with mu_1 > rank vanish and are dropped.

    Raises:
        RankExceeded: if lam_1 > rank or index lies outside [0, rank]
    """
    RankedShape(lam, rank)
    if index < 0 or index > rank:
        raise RankExceeded(f"c_{index} is not a variable at rank {rank}")
    coeffs = {}
    for parts in _horizontal_strips(lam, index, rank):
        coeffs[Partition(tuple(p for p in parts if p > 0))] = 1
    return SchurExpansion(rank, lam.size + index, coeffs)


@lru_cache(maxsize=None)
def expand_monomial(lam: Partition, rank: int) -> SchurExpansion:
    """
    Schur expansion of c_lam, applying Pieri for lam_l, lam_{l-1}, ..., lam_1
    starting from the empty partition.
    """
    RankedShape(lam, rank)
    current: Dict[Partition, int] = {Partition(): 1}
    for part in reversed(lam.parts):
        step: Dict[Partition, int] = defaultdict(int)
        for shape, coeff in current.items():
            for mu, unit in pieri(part, shape, rank).coeffs.items():
                step[mu] += coeff * unit
        current = step
    return SchurExpansion(rank, lam.size, current)


def expand_to_schur(poly: CPolynomial) -> SchurExpansion:
    """
    The unique integer vector a with poly = sum(a_lam * S_lam).

    Raises:
        NotHomogeneous: if poly mixes degrees
    """
    degree = poly.homogeneous_degree()
    if degree is None:
        raise NotHomogeneous(f"Polynomial has terms of degrees {sorted(poly.degrees())}")
    total: Dict[Partition, int] = defaultdict(int)
    for key, coeff in poly.terms.items():
        for shape, kostka in expand_monomial(key, poly.rank).coeffs.items():
            total[shape] += coeff * kostka
    logger.debug(f"Expanded {len(poly.terms)} monomial(s) of degree {degree} at rank {poly.rank}")
    return SchurExpansion(poly.rank, degree, total)


def weight(expansion: SchurExpansion) -> int:
    """Sum of the Schur coefficients."""
    return sum(expansion.coeffs.values())


def is_fl_member(expansion: SchurExpansion) -> bool:
    """True iff the expansion is nonzero with every coefficient positive."""
    return not expansion.is_zero() and expansion.is_positive()


def schur_product(lam: Partition, mu: Partition, rank: int) -> SchurExpansion:
    """Schur expansion of S_lam * S_mu."""
    return expand_to_schur(jacobi_trudi(lam, rank) * jacobi_trudi(mu, rank))


def monomial_difference(upper: Partition, lower: Partition, rank: int) -> CPolynomial:
    """c_lower - c_upper, the polynomial compared under reverse dominance."""
    return monomial(lower, rank) - monomial(upper, rank)
