"""Catalog generation and named-axiom tests."""

import pytest

from zlab.catalog import (
    AXIOM_NAMES,
    IDENTITY_TAGS,
    WORD_PATTERNS,
    axiom,
    bol_moufang_catalog,
    bracket,
    catalog_by_label,
    catalog_entry,
)
from zlab.terms import Var, occurrences, parse_term, print_term


def test_catalog_has_sixty_entries_in_label_order():
    entries = bol_moufang_catalog()
    assert len(entries) == 60
    expected = [
        f"{letter}{i}{j}"
        for letter in "ABCDEF"
        for i in range(1, 6)
        for j in range(i + 1, 6)
    ]
    assert [e.label for e in entries] == expected


def test_a12_and_f45_spellings():
    a12 = catalog_entry("A12")
    assert print_term(a12.lhs, "raw") == "x -> (x -> (y -> z))"
    assert print_term(a12.rhs, "raw") == "x -> ((x -> y) -> z)"
    f45 = catalog_entry("F45")
    assert print_term(f45.lhs, "raw") == "(x -> (y -> z)) -> z"
    assert print_term(f45.rhs, "raw") == "((x -> y) -> z) -> z"


def test_each_entry_rebrackets_one_word():
    for entry in bol_moufang_catalog():
        word = WORD_PATTERNS[entry.label[0]]
        assert occurrences(entry.lhs) == tuple(word)
        assert occurrences(entry.rhs) == tuple(word)
        assert entry.lhs != entry.rhs
        assert entry.var_set == ("x", "y", "z")


def test_entry_sides_match_their_bracketings():
    leaves = tuple(Var(v) for v in WORD_PATTERNS["D"])
    entry = catalog_entry("D25")
    assert entry.lhs == bracket(2, leaves)
    assert entry.rhs == bracket(5, leaves)


def test_bracket_rejects_unknown_shape():
    leaves = tuple(Var(v) for v in "xxyz")
    with pytest.raises(ValueError):
        bracket(0, leaves)
    with pytest.raises(ValueError):
        bracket(6, leaves)


def test_catalog_entry_raises_on_unknown_label():
    with pytest.raises(KeyError, match="unknown catalog label"):
        catalog_entry("G11")
    assert set(catalog_by_label()) == {e.label for e in bol_moufang_catalog()}


def test_classical_tags():
    assert IDENTITY_TAGS == {"B15": "Moufang", "E25": "Bol"}


def test_axiom_contents():
    assert axiom("I").render() == "(x -> y) -> z = ((z' -> x) -> (y -> z)')'"
    assert axiom("I0").render() == "0'' = 0"
    assert axiom("I20").render() == "x'' = x"
    assert axiom("MC").lhs == parse_term("x ^ y")
    assert axiom("MC").rhs == parse_term("y ^ x")
    assert axiom("C").render() == "x -> y = y -> x"
    assert axiom("I10").render() == "x' = x"
    assert axiom("DM").render() == "(x -> y) -> x = x"
    assert axiom("KL").render() == "(x -> x) -> (y -> y) = y -> y"
    assert axiom("BA").render() == "x -> x = 0'"


def test_sl_axiom_is_the_pair():
    pair = axiom("SL")
    assert pair == (axiom("I10"), axiom("C"))


def test_axiom_raises_on_unknown_name():
    with pytest.raises(KeyError, match="unknown axiom"):
        axiom("XYZ")
    assert set(AXIOM_NAMES) == {"I", "I0", "I20", "MC", "C", "I10", "DM", "KL", "BA", "SL"}
