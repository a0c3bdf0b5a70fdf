"""Sweeps that check the weight inequalities and Schur positivity exhaustively."""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Dict, Optional, Sequence, Tuple

from schurbound.config import DEFAULT_CHAIN_LIMIT, DEFAULT_WORKERS
from schurbound.core.partition import (
    Partition,
    RankedShape,
    cover_indices,
    covers,
    dominates,
    down_covers,
    gamma_elements,
)
from schurbound.core.polynomial import CPolynomial, chern_class, monomial, product_of
from schurbound.core.poset import Chain, first_chain, maximal_chains
from schurbound.core.schur import (
    SchurExpansion,
    expand_to_schur,
    is_fl_member,
    jacobi_trudi,
    monomial_difference,
    pieri,
    schur_product,
    weight,
)
from schurbound.exceptions import (
    NotACover,
    NotComparable,
    RankTooSmall,
    SizeMismatch,
)
from schurbound.features.bounds import compute_bound
from schurbound.features.models import VerificationRecord, VerificationReport

logger = logging.getLogger(__name__)


def _require_rank(n: int, rank: int) -> None:
    if rank < n:
        raise RankTooSmall(f"Rank {rank} is smaller than n={n}; the weight bounds need r >= n")


def _run(
    mode: str,
    scope: Dict[str, Any],
    check: Callable[..., VerificationRecord],
    items: Sequence[Tuple],
    workers: int,
) -> VerificationReport:
    logger.info(f"Starting {mode} sweep over {len(items)} items with {workers} worker(s)")
    started = time.perf_counter()
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_apply, [(check, item) for item in items]))
    else:
        records = [check(*item) for item in items]
    elapsed_ms = (time.perf_counter() - started) * 1000.0

    report = VerificationReport(mode=mode, scope=scope, records=records, elapsed_ms=elapsed_ms)
    for record in report.failures:
        logger.warning(
            f"{mode}: check failed for {', '.join(str(p) for p in record.partitions)}: "
            f"{record.checks}"
        )
    logger.info(
        f"Finished {mode} sweep: {len(records) - len(report.failures)}/{len(records)} passed "
        f"in {elapsed_ms:.1f} ms"
    )
    return report


def _apply(job: Tuple[Callable[..., VerificationRecord], Tuple]) -> VerificationRecord:
    check, item = job
    return check(*item)


def check_weight_bound(lam: Partition, rank: int) -> VerificationRecord:
    """W(c_lam) >= B(lam) >= 2^(l(lam) - 1) for one partition."""
    w = weight(expand_to_schur(monomial(lam, rank)))
    certificate = compute_bound(lam)
    return VerificationRecord(
        kind="weight-bound",
        partitions=(lam,),
        values={
            "W": w,
            "B": certificate.bound,
            "floor": certificate.floor_bound,
            "longest": certificate.longest_length,
        },
        checks={
            "weight_at_least_bound": w >= certificate.bound,
            "bound_at_least_floor": certificate.bound >= certificate.floor_bound,
        },
    )


def verify_weight_bound(
    n: int, rank: Optional[int] = None, workers: int = DEFAULT_WORKERS
) -> VerificationReport:
    """
    Check W(c_lam) >= B(lam) >= 2^(l(lam) - 1) for every lam in Par(n).

    Raises:
        RankTooSmall: if rank < n
    """
    rank = n if rank is None else rank
    _require_rank(n, rank)
    items = [(lam, rank) for lam in gamma_elements(n, n)]
    return _run("weight-bound", {"n": n, "rank": rank}, check_weight_bound, items, workers)


def cover_product(lam: Partition, mu: Partition, rank: int) -> CPolynomial:
    """S_(mu_i, mu_j) * prod over p != i, j of c_{mu_p}, for the cover indices i < j."""
    i, j = cover_indices(lam, mu)
    pair = jacobi_trudi(Partition((mu.part(i), mu.part(j))), rank)
    rest = [chern_class(mu.part(p), rank) for p in range(1, mu.length + 1) if p not in (i, j)]
    return product_of([pair] + rest, rank)


def verify_cover_step(lam: Partition, mu: Partition, rank: int) -> VerificationRecord:
    """
    For a cover lam > mu: the product identity for c_mu - c_lam, the weight
    estimate W(c_mu - c_lam) >= 2^(l(mu) - 2), and the length step rule.

    Raises:
        NotACover: if lam does not cover mu
        RankTooSmall: if rank < |lam|
    """
    if not covers(lam, mu):
        raise NotACover(f"({lam}) does not cover ({mu})")
    _require_rank(lam.size, rank)
    i, j = cover_indices(lam, mu)
    difference = monomial_difference(lam, mu, rank)
    expansion = expand_to_schur(difference)
    w = weight(expansion)
    required = 2 ** (mu.length - 2)
    step = mu.length - lam.length
    drops_length = j == mu.length and mu.part(j) == 1
    return VerificationRecord(
        kind="cover-step",
        partitions=(lam, mu),
        values={"W": w, "required": required, "i": i, "j": j, "length_step": step},
        checks={
            "product_identity": difference == cover_product(lam, mu, rank),
            "weight_at_least_required": w >= required,
            "length_step_rule": step in (0, 1) and (step == 1) == drops_length,
        },
    )


def verify_cover_steps(
    n: int, rank: Optional[int] = None, workers: int = DEFAULT_WORKERS
) -> VerificationReport:
    """Run ``verify_cover_step`` on every cover pair of Par(n)."""
    rank = n if rank is None else rank
    _require_rank(n, rank)
    items = [
        (lam, mu, rank) for lam in gamma_elements(n, n) for mu in down_covers(lam, n)
    ]
    return _run("cover-steps", {"n": n, "rank": rank}, verify_cover_step, items, workers)


def telescope(chain: Chain, rank: int) -> SchurExpansion:
    """Sum of the expansions of c_{x_{p+1}} - c_{x_p} along consecutive chain elements."""
    total = SchurExpansion.zero(rank, chain.top.size)
    for upper, lower in zip(chain.elements, chain.elements[1:]):
        total = total + expand_to_schur(monomial_difference(upper, lower, rank))
    return total


def verify_reverse_dominance(
    lam: Partition,
    mu: Partition,
    k: int,
    rank: int,
    all_chains: bool = False,
    limit: Optional[int] = DEFAULT_CHAIN_LIMIT,
) -> VerificationRecord:
    """
    Check c_mu - c_lam is Schur positive for lam >= mu in Gamma(k, r), and that
    telescoping along a chain from lam to mu gives the same expansion. With
    ``all_chains`` every maximal chain is telescoped, not just the first one.

    Raises:
        NotComparable: if lam does not dominate mu
        RankExceeded: if lam or mu leaves Gamma(k, r)
    """
    if lam.size != k or mu.size != k:
        raise SizeMismatch(f"({lam}) and ({mu}) must both be partitions of {k}")
    RankedShape(lam, rank)
    RankedShape(mu, rank)
    if not dominates(lam, mu):
        raise NotComparable(f"({lam}) does not dominate ({mu})")

    direct = expand_to_schur(monomial_difference(lam, mu, rank))
    chains = maximal_chains(lam, mu, rank, limit) if all_chains else [first_chain(lam, mu, rank)]
    steps_positive = all(
        is_fl_member(expand_to_schur(monomial_difference(upper, lower, rank)))
        for chain in chains
        for upper, lower in zip(chain.elements, chain.elements[1:])
    )
    return VerificationRecord(
        kind="dominance",
        partitions=(lam, mu),
        values={
            "W": weight(direct),
            "min_coeff": direct.min_coefficient(),
            "chain_length": chains[0].length,
            "chains": len(chains),
        },
        checks={
            "schur_positive": is_fl_member(direct) if lam != mu else direct.is_zero(),
            "steps_positive": steps_positive,
            "telescoping_matches": all(telescope(chain, rank) == direct for chain in chains),
        },
    )


def verify_reverse_dominance_sweep(
    k: int, rank: Optional[int] = None, workers: int = DEFAULT_WORKERS
) -> VerificationReport:
    """``verify_reverse_dominance`` for every pair lam > mu in Gamma(k, r)."""
    rank = k if rank is None else rank
    elements = gamma_elements(k, rank)
    items = [
        (lam, mu, k, rank)
        for lam in elements
        for mu in elements
        if lam != mu and dominates(lam, mu)
    ]
    return _run("dominance", {"k": k, "rank": rank}, verify_reverse_dominance, items, workers)


def check_pieri_bound(index: int, lam: Partition, rank: int) -> VerificationRecord:
    w = weight(pieri(index, lam, rank))
    return VerificationRecord(
        kind="pieri",
        partitions=(lam,),
        values={"i": index, "W": w},
        checks={"weight_at_least_two": w >= 2},
    )


def verify_pieri_bound(
    n: int, rank: Optional[int] = None, workers: int = DEFAULT_WORKERS
) -> VerificationReport:
    """W(c_i * S_lam) >= 2 for nonempty lam with lam_1 + i <= r and |lam| + i <= n."""
    rank = n if rank is None else rank
    items = [
        (index, lam, rank)
        for size in range(1, n)
        for index in range(1, n - size + 1)
        for lam in gamma_elements(size, rank)
        if lam.largest + index <= rank
    ]
    return _run("pieri", {"n": n, "rank": rank}, check_pieri_bound, items, workers)


def check_product_closure(lam: Partition, mu: Partition, rank: int) -> VerificationRecord:
    product = schur_product(lam, mu, rank)
    return VerificationRecord(
        kind="products",
        partitions=(lam, mu),
        values={"W": weight(product), "min_coeff": product.min_coefficient()},
        checks={"schur_positive": is_fl_member(product)},
    )


def verify_product_closure(
    k1: int, k2: int, rank: int, workers: int = DEFAULT_WORKERS
) -> VerificationReport:
    """S_lam * S_mu is Schur positive for every lam in Gamma(k1, r), mu in Gamma(k2, r)."""
    items = [
        (lam, mu, rank)
        for lam in gamma_elements(k1, rank)
        for mu in gamma_elements(k2, rank)
    ]
    return _run(
        "products", {"k1": k1, "k2": k2, "rank": rank}, check_product_closure, items, workers
    )
