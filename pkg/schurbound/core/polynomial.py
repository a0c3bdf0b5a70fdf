"""Integer polynomials in the graded variables c_1, ..., c_r.

A polynomial is a sparse map from partitions to integer coefficients: the
partition lambda stands for the monomial c_lambda = c_{lambda_1} c_{lambda_2} ...,
and the empty partition is the constant 1. Coefficients are Python ints, so
arithmetic is exact and never wraps.
"""

from collections import defaultdict
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Set, Tuple, Union

from schurbound.core.partition import Partition, RankedShape
from schurbound.exceptions import RankError, RankExceeded, RankMismatch


def merge_monomials(left: Partition, right: Partition) -> Partition:
    """Key of c_left * c_right: the union of both part multisets."""
    return Partition(tuple(sorted(left.parts + right.parts, reverse=True)))


class CPolynomial:
    """A polynomial in c_1..c_r stored in the monomial basis, zero terms dropped."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Optional[Mapping[Partition, int]] = None):
        if rank < 1:
            raise RankError(f"Rank must be positive, got {rank}")
        normalized: Dict[Partition, int] = {}
        for key, coeff in (terms or {}).items():
            if key.largest > rank:
                raise RankExceeded(f"Monomial c_({key}) needs a variable beyond c_{rank}")
            if coeff:
                normalized[key] = int(coeff)
        self.rank = rank
        self.terms = normalized

    @classmethod
    def zero(cls, rank: int) -> "CPolynomial":
        return cls(rank)

    @classmethod
    def one(cls, rank: int) -> "CPolynomial":
        return cls(rank, {Partition(): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> Set[int]:
        return {key.size for key in self.terms}

    def homogeneous_degree(self) -> Optional[int]:
        """The common degree of every term, 0 for the zero polynomial, None if mixed."""
        degrees = self.degrees()
        if not degrees:
            return 0
        return degrees.pop() if len(degrees) == 1 else None

    def coefficient(self, key: Partition) -> int:
        return self.terms.get(key, 0)

    def sorted_terms(self) -> List[Tuple[Partition, int]]:
        """Terms in reverse lexicographic key order."""
        return sorted(self.terms.items(), key=lambda item: item[0].rev_lex_key())

    def _check_rank(self, other: "CPolynomial") -> None:
        if self.rank != other.rank:
            raise RankMismatch(f"Cannot combine rank {self.rank} with rank {other.rank}")

    def __add__(self, other: "CPolynomial") -> "CPolynomial":
        self._check_rank(other)
        combined: Dict[Partition, int] = defaultdict(int, self.terms)
        for key, coeff in other.terms.items():
            combined[key] += coeff
        return CPolynomial(self.rank, combined)

    def __neg__(self) -> "CPolynomial":
        return self.scale(-1)

    def __sub__(self, other: "CPolynomial") -> "CPolynomial":
        return self + (-other)

    def scale(self, factor: int) -> "CPolynomial":
        return CPolynomial(self.rank, {key: factor * coeff for key, coeff in self.terms.items()})

    def __mul__(self, other: Union["CPolynomial", int]) -> "CPolynomial":
        if isinstance(other, int):
            return self.scale(other)
        self._check_rank(other)
        product: Dict[Partition, int] = defaultdict(int)
        for left, a in self.terms.items():
            for right, b in other.terms.items():
                product[merge_monomials(left, right)] += a * b
        return CPolynomial(self.rank, product)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CPolynomial):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __iter__(self) -> Iterator[Tuple[Partition, int]]:
        return iter(self.sorted_terms())

    def __repr__(self) -> str:
        return f"CPolynomial(rank={self.rank}, {self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for key, coeff in self.sorted_terms():
            name = "*".join(f"c{p}" for p in key.parts) or "1"
            if coeff == 1:
                pieces.append(name)
            elif coeff == -1:
                pieces.append(f"-{name}")
            else:
                pieces.append(f"{coeff}*{name}")
        return " + ".join(pieces).replace("+ -", "- ")


def monomial(lam: Partition, rank: int) -> CPolynomial:
    """
    The monomial c_lam with coefficient 1.

    Raises:
        RankExceeded: if some part of lam exceeds rank
    """
    RankedShape(lam, rank)
    return CPolynomial(rank, {lam: 1})


def chern_class(index: int, rank: int) -> CPolynomial:
    """c_index, with c_0 = 1 and c_i = 0 outside [0, rank]."""
    if index == 0:
        return CPolynomial.one(rank)
    if index < 0 or index > rank:
        return CPolynomial.zero(rank)
    return CPolynomial(rank, {Partition((index,)): 1})


def product_of(factors: Iterable[CPolynomial], rank: int) -> CPolynomial:
    result = CPolynomial.one(rank)
    for factor in factors:
        result = result * factor
    return result
