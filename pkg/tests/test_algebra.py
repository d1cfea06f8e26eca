"""Evaluation, satisfaction, classification and law-suite tests."""

import itertools
import json
import random

import pytest

from zlab.algebra import FiniteZroupoid, classify, eval_term, lemma_suite, satisfies
from zlab.catalog import axiom, catalog_entry
from zlab.reference import A23_NOT_SL_4, BOOLEAN_2, S_NOT_F25_3, SEMILATTICE_2
from zlab.terms import identity, parse_term

SL2 = SEMILATTICE_2
BA2 = BOOLEAN_2
W4 = A23_NOT_SL_4
W3 = S_NOT_F25_3


def all_tables(n):
    for flat in itertools.product(range(n), repeat=n * n):
        yield FiniteZroupoid(
            n, tuple(flat[i * n : (i + 1) * n] for i in range(n))
        )


def test_constructor_normalizes_and_freezes():
    alg = FiniteZroupoid(2, [[0, 1], [1, 1]])
    assert alg.table == ((0, 1), (1, 1))
    assert hash(alg) == hash(SL2)
    assert alg == SL2


@pytest.mark.parametrize(
    "size,table",
    [
        (0, ()),
        (2, ((0, 1),)),
        (2, ((0, 1), (1,))),
        (2, ((0, 2), (1, 1))),
        (2, ((0, -1), (1, 1))),
        (3, ((0, 1), (1, 1))),
    ],
)
def test_constructor_rejects_bad_tables(size, table):
    with pytest.raises(ValueError):
        FiniteZroupoid(size, table)


def test_json_round_trip():
    text = json.dumps(W4.to_dict())
    assert FiniteZroupoid.from_json(text) == W4
    with pytest.raises(ValueError):
        FiniteZroupoid.from_dict({"size": 2, "table": [[0, 1], [1, 1]], "extra": 1})
    with pytest.raises(ValueError):
        FiniteZroupoid.from_dict([2, [[0, 1], [1, 1]]])


def test_arrow_and_prime_lookups():
    assert BA2.arrow(0, 1) == 1
    assert BA2.prime_of(0) == 1
    assert SL2.prime_of(1) == 1


def test_eval_term_examples():
    env = {"x": 1, "y": 0}
    assert eval_term(BA2, parse_term("x -> y"), env) == 0
    assert eval_term(BA2, parse_term("x -> y'"), env) == 1
    assert eval_term(BA2, parse_term("0'"), {}) == 1
    with pytest.raises(KeyError, match="unbound variable"):
        eval_term(BA2, parse_term("z"), env)


def test_satisfies_reports_first_failure():
    res = satisfies(BA2, axiom("C"))
    assert not res.holds
    assert res.witness == {"x": 0, "y": 1}
    assert (res.lhs_value, res.rhs_value) == (1, 0)
    assert satisfies(SL2, catalog_entry("A12")).holds


def test_witness_is_lexicographically_first():
    """The reported witness matches an explicit odometer scan."""
    ident = axiom("C")
    for alg in all_tables(2):
        expect = None
        for x in range(2):
            for y in range(2):
                if alg.arrow(x, y) != alg.arrow(y, x):
                    expect = {"x": x, "y": y}
                    break
            if expect is not None:
                break
        res = satisfies(alg, ident)
        assert res.holds == (expect is None)
        assert res.witness == expect


def test_all_failures_collects_every_assignment():
    res = satisfies(BA2, axiom("I10"), all_failures=True)
    assert not res.holds
    assert [env["x"] for env, _, _ in res.failures] == [0, 1]
    full = satisfies(W3, catalog_entry("F25"), all_failures=True)
    assert full.failures[0] == (full.witness, full.lhs_value, full.rhs_value)
    assert len({tuple(sorted(env.items())) for env, _, _ in full.failures}) == len(
        full.failures
    )


def test_classify_fixture_models():
    sl = classify(SL2)
    assert sl.symmetric and sl.sl and sl.i10 and sl.commutative
    ba = classify(BA2)
    assert ba.symmetric and ba.dm and ba.kl and ba.ba
    assert not (ba.sl or ba.i10 or ba.commutative)
    w4 = classify(W4)
    assert w4.symmetric and not w4.sl and not w4.i10
    assert satisfies(W4, catalog_entry("A23")).holds
    assert not satisfies(W4, catalog_entry("A12")).holds
    w3 = classify(W3)
    assert w3.symmetric and w3.dm
    assert not satisfies(W3, catalog_entry("F25")).holds
    assert satisfies(W3, catalog_entry("B25")).holds


def test_classify_gates_relative_classes():
    # 0'' = 1 here, so this is not an I-zroupoid and every relative
    # class must be reported false.
    alg = FiniteZroupoid(2, ((1, 1), (1, 1)))
    rep = classify(alg)
    assert not rep.izroupoid
    assert not any(
        [rep.involutive, rep.meet_commutative, rep.symmetric, rep.commutative,
         rep.i10, rep.sl, rep.dm, rep.kl, rep.ba]
    )


def _classify_via_satisfies(alg):
    def holds(name):
        return satisfies(alg, axiom(name)).holds

    i, i0 = holds("I"), holds("I0")
    izroupoid = i and i0
    involutive = izroupoid and holds("I20")
    meet_commutative = izroupoid and holds("MC")
    commutative = izroupoid and holds("C")
    i10 = izroupoid and holds("I10")
    dm = izroupoid and holds("DM")
    return {
        "size": alg.size,
        "i": i,
        "i0": i0,
        "izroupoid": izroupoid,
        "involutive": involutive,
        "meet_commutative": meet_commutative,
        "symmetric": involutive and meet_commutative,
        "commutative": commutative,
        "i10": i10,
        "sl": commutative and i10,
        "dm": dm,
        "kl": dm and holds("KL"),
        "ba": dm and holds("BA"),
    }


def test_classify_agrees_with_term_satisfaction():
    """The hand-rolled table loops match evaluating the defining axioms."""
    for alg in all_tables(2):
        assert classify(alg).to_dict() == _classify_via_satisfies(alg)
    rng = random.Random(20260822)
    for _ in range(200):
        table = tuple(
            tuple(rng.randrange(3) for _ in range(3)) for _ in range(3)
        )
        alg = FiniteZroupoid(3, table)
        assert classify(alg).to_dict() == _classify_via_satisfies(alg)


def test_lemma_suite_passes_on_fixture_models():
    for alg in (SL2, BA2, W4, W3):
        report = lemma_suite(alg)
        assert report.passed, report.to_dict()
        assert len(report.checks) == 9


def test_lemma_suite_applicability():
    names = [c.name for c in lemma_suite(SL2).checks]
    assert names[0] == "involution_criteria_agree"
    # SL2 is idempotent and prime-fixed, so the conditional checks fire.
    by_name = {c.name: c for c in lemma_suite(SL2).checks}
    assert by_name["idempotent_forces_prime_fixed"].applicable
    assert by_name["commutative_from_meet_commutative_prime_fixed"].applicable
    # BA2 is not prime-fixed: that conditional is skipped with holds=None.
    ba_by_name = {c.name: c for c in lemma_suite(BA2).checks}
    skipped = ba_by_name["commutative_from_meet_commutative_prime_fixed"]
    assert not skipped.applicable and skipped.holds is None
    # Outside the I-zroupoid class nothing applies.
    junk = lemma_suite(FiniteZroupoid(2, ((1, 1), (1, 1))))
    assert all(not c.applicable for c in junk.checks)
    assert junk.passed
