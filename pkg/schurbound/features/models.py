"""Data models for bound certificates and verification sweeps."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from schurbound.core.partition import Partition
from schurbound.core.poset import Chain


@dataclass(frozen=True)
class BoundCertificate:
    """B(lambda) together with a longest chain that attains it."""
    partition: Partition
    n: int
    longest_length: int
    best_chain: Chain
    # per_step[i] is the contribution of the element i steps above partition.
    per_step: Tuple[int, ...]
    bound: int
    floor_bound: int

    @property
    def holds_floor(self) -> bool:
        return self.bound >= self.floor_bound


@dataclass(frozen=True)
class ChainBound:
    """B(C) for one longest chain C."""
    chain: Chain
    bound: int


@dataclass
class VerificationRecord:
    """One checked item of a sweep."""
    kind: str
    partitions: Tuple[Partition, ...]
    values: Dict[str, int] = field(default_factory=dict)
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


@dataclass
class VerificationReport:
    """Outcome of a sweep; records are kept in enumeration order."""
    mode: str
    scope: Dict[str, Any]
    records: List[VerificationRecord]
    elapsed_ms: Optional[float] = None

    @property
    def all_pass(self) -> bool:
        return all(record.passed for record in self.records)

    @property
    def failures(self) -> List[VerificationRecord]:
        return [record for record in self.records if not record.passed]
