"""Search-engine tests: golden counts, canonical forms, oracle agreement."""

import pytest

from zlab.algebra import FiniteZroupoid, satisfies
from zlab.catalog import axiom
from zlab.enumerator import (
    SearchSpec,
    canonical_table,
    canonicalize,
    enumerate_models,
    naive_models,
    relabelings,
)
from zlab.reference import BOOLEAN_2, SEMILATTICE_2

IZROUPOID = (axiom("I0"), axiom("I"))
SYMMETRIC = (axiom("I0"), axiom("I20"), axiom("MC"), axiom("I"))


def spec(size, required=SYMMETRIC, **kw):
    return SearchSpec(size=size, required=required, **kw)


def test_spec_validation():
    with pytest.raises(ValueError):
        SearchSpec(size=0, required=IZROUPOID)
    with pytest.raises(ValueError):
        SearchSpec(size=2, required=IZROUPOID, dedup="fuzzy")
    with pytest.raises(ValueError):
        SearchSpec(size=2, required=IZROUPOID, limit=-1)


@pytest.mark.parametrize(
    "size,count",
    [(1, 1), (2, 3), (3, 17)],
)
def test_izroupoid_counts_up_to_iso(size, count):
    assert len(enumerate_models(spec(size, IZROUPOID))) == count


@pytest.mark.parametrize(
    "size,count",
    [(1, 1), (2, 3), (3, 31)],
)
def test_izroupoid_counts_raw(size, count):
    assert len(enumerate_models(spec(size, IZROUPOID, dedup="none"))) == count


@pytest.mark.parametrize(
    "size,iso_count,raw_count",
    [(1, 1, 1), (2, 2, 2), (3, 3, 6)],
)
def test_symmetric_counts(size, iso_count, raw_count):
    assert len(enumerate_models(spec(size))) == iso_count
    assert len(enumerate_models(spec(size, dedup="none"))) == raw_count


def test_two_element_symmetric_models_are_known():
    models = enumerate_models(spec(2))
    assert set(models) == {SEMILATTICE_2, BOOLEAN_2}


def test_results_satisfy_requirements_independently():
    """Every emitted model passes the plain term evaluator on every axiom."""
    for size in (2, 3):
        for alg in enumerate_models(spec(size, IZROUPOID)):
            assert all(satisfies(alg, ident).holds for ident in IZROUPOID)


@pytest.mark.parametrize("required", [IZROUPOID, SYMMETRIC])
@pytest.mark.parametrize("size", [1, 2, 3])
def test_agrees_with_naive_oracle(required, size):
    """The propagating search matches brute force over all tables."""
    for dedup in ("none", "up_to_iso"):
        s = spec(size, required, dedup=dedup)
        assert enumerate_models(s) == naive_models(s)


def test_canonical_table_is_idempotent_and_invariant():
    for alg in enumerate_models(spec(3, IZROUPOID)):
        canon = canonical_table(alg.table)
        assert canonical_table(canon) == canon
        for variant in relabelings(alg.table):
            assert canonical_table(variant) == canon


def test_canonicalize_wraps_canonical_table():
    for alg in enumerate_models(spec(3, dedup="none")):
        image = canonicalize(alg)
        assert isinstance(image, FiniteZroupoid)
        assert image.table == canonical_table(alg.table)


def test_orbit_sizes_sum_to_raw_count():
    reps = enumerate_models(spec(3, IZROUPOID))
    raw = enumerate_models(spec(3, IZROUPOID, dedup="none"))
    assert sum(len(relabelings(r.table)) for r in reps) == len(raw)
    assert {canonical_table(a.table) for a in raw} == {r.table for r in reps}


def test_results_are_sorted_and_limit_prefixes():
    full = enumerate_models(spec(3, IZROUPOID, dedup="none"))
    assert full == sorted(full, key=lambda a: (canonical_table(a.table), a.table))
    head = enumerate_models(spec(3, IZROUPOID, dedup="none", limit=5))
    assert head == full[:5]
    assert enumerate_models(spec(3, IZROUPOID, limit=0)) == []


def test_worker_count_does_not_change_output():
    for dedup in ("none", "up_to_iso"):
        s = spec(3, IZROUPOID, dedup=dedup)
        assert enumerate_models(s, workers=1) == enumerate_models(s, workers=2)


def test_unconstrained_search_yields_all_tables():
    s = SearchSpec(size=2, required=(), dedup="none")
    assert len(enumerate_models(s)) == 16
