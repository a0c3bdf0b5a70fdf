"""Machine-readable renderings: JSON payloads and jinja2 templates."""

import json
import os
from typing import Any, Dict, List, Optional, Sequence, Tuple

from jinja2 import Environment, FileSystemLoader

from schurbound.core.partition import Partition
from schurbound.core.polynomial import CPolynomial
from schurbound.core.poset import Chain, HasseInterval
from schurbound.core.schur import SchurExpansion, weight
from schurbound.features.models import (
    BoundCertificate,
    ChainBound,
    VerificationRecord,
    VerificationReport,
)

TEMPLATES_DIR = os.path.join(os.path.dirname(os.path.dirname(__file__)), "templates")

env = Environment(
    loader=FileSystemLoader(TEMPLATES_DIR), trim_blocks=True, lstrip_blocks=True
)


def to_json(payload: Any) -> str:
    """Serialize with stable key order so repeated runs are byte-identical."""
    return json.dumps(payload, indent=2, ensure_ascii=False)


def interval_to_dict(interval: HasseInterval) -> Dict[str, Any]:
    return {
        "top": str(interval.top),
        "bottom": str(interval.bottom),
        "rank": interval.rank,
        "nodes": [str(node) for node in interval.nodes],
        "edges": [[str(upper), str(lower)] for upper, lower in interval.edges],
        "longest_from_top": {
            str(node): interval.longest_from_top[node] for node in interval.nodes
        },
    }


def render_dot(
    interval: HasseInterval,
    edges: Optional[Sequence[Tuple[Partition, Partition]]] = None,
    name: Optional[str] = None,
) -> str:
    """
    DOT for the interval, one rank per longest-chain distance from the top.
    Passing ``edges`` restricts the drawing to those covers and their endpoints.
    """
    if edges is None:
        edges = interval.edges
        shown = set(interval.nodes)
    else:
        edges = list(edges)
        shown = {p for edge in edges for p in edge}
    shown.add(interval.top)
    shown.add(interval.bottom)
    levels: Dict[int, List[str]] = {}
    for node in interval.nodes:
        if node in shown:
            levels.setdefault(interval.longest_from_top[node], []).append(str(node))
    template = env.get_template("hasse.dot.j2")
    return template.render(
        name=name or f"{interval.top} to {interval.bottom}",
        levels=sorted(levels.items()),
        edges=[(str(upper), str(lower)) for upper, lower in edges],
    )


def chain_edges(chains: Sequence[Chain]) -> List[Tuple[Partition, Partition]]:
    seen: List[Tuple[Partition, Partition]] = []
    for chain in chains:
        for edge in zip(chain.elements, chain.elements[1:]):
            if edge not in seen:
                seen.append(edge)
    return seen


def chains_to_dict(
    top: Partition,
    bottom: Partition,
    rank: int,
    chains: Sequence[Chain],
    longest_only: bool,
    longest_length: int,
) -> Dict[str, Any]:
    return {
        "top": str(top),
        "bottom": str(bottom),
        "rank": rank,
        "longest_only": longest_only,
        "longest_length": longest_length,
        "count": len(chains),
        "chains": [
            {"length": chain.length, "elements": [str(p) for p in chain.elements]}
            for chain in chains
        ],
    }


def _terms(items: Sequence[Tuple[Partition, int]]) -> List[Dict[str, Any]]:
    return [{"partition": list(key.parts), "coeff": coeff} for key, coeff in items]


def polynomial_to_dict(poly: CPolynomial) -> Dict[str, Any]:
    return {"rank": poly.rank, "terms": _terms(poly.sorted_terms())}


def expansion_to_dict(expansion: SchurExpansion) -> Dict[str, Any]:
    return {
        "rank": expansion.rank,
        "degree": expansion.degree,
        "terms": _terms(expansion.sorted_terms()),
    }


def expand_result_to_dict(
    label: str, poly: CPolynomial, expansion: SchurExpansion
) -> Dict[str, Any]:
    return {
        "input": label,
        "polynomial": polynomial_to_dict(poly),
        "expansion": expansion_to_dict(expansion),
        "weight": weight(expansion),
    }


def certificate_to_dict(
    certificate: BoundCertificate, chain_bounds: Optional[Sequence[ChainBound]] = None
) -> Dict[str, Any]:
    payload: Dict[str, Any] = {
        "partition": str(certificate.partition),
        "n": certificate.n,
        "B": certificate.bound,
        "floor": certificate.floor_bound,
        "longest_length": certificate.longest_length,
        "best_chain": [str(p) for p in certificate.best_chain.elements],
        "per_step": list(certificate.per_step),
    }
    if chain_bounds is not None:
        payload["chain_bounds"] = [
            {"B": entry.bound, "chain": [str(p) for p in entry.chain.elements]}
            for entry in chain_bounds
        ]
    return payload


def render_certificate_text(
    certificate: BoundCertificate, chain_bounds: Optional[Sequence[ChainBound]] = None
) -> str:
    template = env.get_template("certificate.txt.j2")
    return template.render(
        partition=str(certificate.partition),
        bound=certificate.bound,
        floor_bound=certificate.floor_bound,
        longest_length=certificate.longest_length,
        chain=str(certificate.best_chain),
        per_step=list(reversed(certificate.per_step)),
        chain_bounds=[
            {"bound": entry.bound, "chain": str(entry.chain)} for entry in chain_bounds or []
        ],
    )


def record_to_dict(record: VerificationRecord) -> Dict[str, Any]:
    return {
        "kind": record.kind,
        "partitions": [str(p) for p in record.partitions],
        **record.values,
        "checks": dict(record.checks),
        "pass": record.passed,
    }


def report_to_dict(report: VerificationReport, timing: bool = True) -> Dict[str, Any]:
    return {
        "scope": {"mode": report.mode, **report.scope},
        "records": [record_to_dict(record) for record in report.records],
        "all_pass": report.all_pass,
        "elapsed_ms": round(report.elapsed_ms, 3)
        if timing and report.elapsed_ms is not None
        else None,
    }
