import pytest

from schurbound.core.partition import Partition, dominates, gamma_elements
from schurbound.core.polynomial import monomial
from schurbound.core.poset import maximal_chains
from schurbound.core.schur import SchurExpansion, expand_to_schur, weight
from schurbound.exceptions import (
    NotACover,
    NotComparable,
    RankExceeded,
    RankTooSmall,
    SizeMismatch,
)
from schurbound.features.verify import (
    check_weight_bound,
    cover_product,
    telescope,
    verify_cover_step,
    verify_cover_steps,
    verify_pieri_bound,
    verify_product_closure,
    verify_reverse_dominance,
    verify_reverse_dominance_sweep,
    verify_weight_bound,
)


def P(*parts):
    return Partition(tuple(parts))


def by_partition(report):
    return {record.partitions: record for record in report.records}


# --- Weight bound ---
def test_weight_bound_n7():
    report = verify_weight_bound(7, 7)
    assert report.all_pass
    assert len(report.records) == 15
    records = by_partition(report)
    hook = records[(P(4, 1, 1, 1),)]
    assert hook.values["B"] == 11
    assert hook.values["floor"] == 8
    assert hook.values["W"] >= 11
    assert records[(P(1, 1, 1, 1, 1, 1, 1),)].values["W"] == 232
    assert records[(P(7),)].values == {"W": 1, "B": 1, "floor": 1, "longest": 0}


@pytest.mark.parametrize("n", range(2, 9))
def test_weight_bound_sweeps_pass(n):
    report = verify_weight_bound(n)
    assert report.all_pass, report.failures
    assert report.scope == {"n": n, "rank": n}


def test_weight_bound_needs_rank_at_least_n():
    with pytest.raises(RankTooSmall):
        verify_weight_bound(7, 3)


def test_check_weight_bound_single():
    record = check_weight_bound(P(2, 1), 3)
    assert record.values["W"] == 2
    assert record.values["B"] == 2
    assert record.passed


# --- Cover steps ---
def test_cover_step_421_to_331():
    record = verify_cover_step(P(4, 2, 1), P(3, 3, 1), 7)
    assert record.passed
    assert record.values["W"] == 2
    assert record.values["required"] == 2
    assert (record.values["i"], record.values["j"]) == (1, 2)
    expansion = expand_to_schur(cover_product(P(4, 2, 1), P(3, 3, 1), 7))
    assert expansion == SchurExpansion(7, 7, {P(4, 3): 1, P(3, 3, 1): 1})


def test_cover_step_that_adds_a_part():
    record = verify_cover_step(P(2), P(1, 1), 2)
    assert record.passed
    assert record.values["W"] == 1
    assert record.values["length_step"] == 1


def test_cover_step_rejects_non_covers():
    with pytest.raises(NotACover):
        verify_cover_step(P(4, 2, 1), P(3, 2, 2), 7)
    with pytest.raises(RankTooSmall):
        verify_cover_step(P(2), P(1, 1), 1)


@pytest.mark.parametrize("n", range(2, 9))
def test_cover_step_sweeps_pass(n):
    report = verify_cover_steps(n)
    assert report.all_pass, report.failures


# --- Reverse dominance ---
def test_reverse_dominance_single_cover():
    record = verify_reverse_dominance(P(5), P(4, 1), 5, 5)
    assert record.passed
    assert record.values["W"] == 1
    assert record.values["chain_length"] == 1


def test_reverse_dominance_equal_partitions():
    record = verify_reverse_dominance(P(3, 2), P(3, 2), 5, 5)
    assert record.passed
    assert record.values["W"] == 0
    assert record.values["chain_length"] == 0


def test_reverse_dominance_all_chains():
    record = verify_reverse_dominance(P(4, 2, 1), P(2, 2, 2, 1), 7, 7, all_chains=True)
    assert record.passed
    assert record.values["chains"] == 2


def test_reverse_dominance_rejects_bad_pairs():
    with pytest.raises(NotComparable):
        verify_reverse_dominance(P(3, 1, 1, 1), P(2, 2, 2), 6, 6)
    with pytest.raises(RankExceeded):
        verify_reverse_dominance(P(4, 1), P(3, 2), 5, 3)
    with pytest.raises(SizeMismatch):
        verify_reverse_dominance(P(4, 1), P(3, 1), 5, 5)


@pytest.mark.parametrize("k", range(2, 8))
def test_reverse_dominance_sweeps_pass(k):
    for r in range(2, 8):
        report = verify_reverse_dominance_sweep(k, r)
        assert report.all_pass, report.failures


def test_dominance_sweep_par5_has_every_pair():
    assert len(verify_reverse_dominance_sweep(5, 5).records) == 21


def test_weight_strictly_decreases_up_the_order():
    for k in range(2, 8):
        for r in range(2, 8):
            elements = gamma_elements(k, r)
            for lam in elements:
                for mu in elements:
                    if lam != mu and dominates(lam, mu):
                        w_mu = weight(expand_to_schur(monomial(mu, r)))
                        w_lam = weight(expand_to_schur(monomial(lam, r)))
                        assert w_mu > w_lam


def test_telescoping_is_chain_independent():
    direct = expand_to_schur(monomial(P(2, 2, 2, 1), 7) - monomial(P(4, 2, 1), 7))
    for chain in maximal_chains(P(4, 2, 1), P(2, 2, 2, 1), 7):
        assert telescope(chain, 7) == direct


# --- Pieri and products ---
def test_pieri_sweep_passes():
    report = verify_pieri_bound(8)
    assert report.all_pass
    assert all(record.values["W"] >= 2 for record in report.records)


def test_product_sweep_passes():
    report = verify_product_closure(2, 3, 5)
    assert report.all_pass
    assert len(report.records) == 2 * 3
    assert report.scope == {"k1": 2, "k2": 3, "rank": 5}


def test_parallel_sweep_keeps_order():
    serial = verify_weight_bound(5)
    parallel = verify_weight_bound(5, workers=2)
    assert [r.partitions for r in parallel.records] == [r.partitions for r in serial.records]
    assert [r.values for r in parallel.records] == [r.values for r in serial.records]
