"""The Bol-Moufang identity catalog and the named axioms.

A Bol-Moufang identity over (->, 0) equates two bracketings of the same
four-letter word in three variables.  The six words keep x, y, z in
alphabetical first-occurrence order with exactly one letter doubled; the
five bracketings are the five binary trees on four leaves.  Pairing each
word with an ordered pair of distinct bracketings gives the 60 entries
A12 .. F45.
"""

from __future__ import annotations

from functools import lru_cache

from .terms import Arrow, Identity, Term, Var, identity

WORD_PATTERNS = {
    "A": "xxyz",
    "B": "xyxz",
    "C": "xyyz",
    "D": "xyzx",
    "E": "xyzy",
    "F": "xyzz",
}

# Common names for entries that match classical quasigroup identities.
IDENTITY_TAGS = {"B15": "Moufang", "E25": "Bol"}


def bracket(shape: int, leaves: tuple[Term, Term, Term, Term]) -> Term:
    """Apply one of the five bracketings of o1 o2 o3 o4 to the leaves."""
    a, b, c, d = leaves
    if shape == 1:
        return Arrow(a, Arrow(b, Arrow(c, d)))
    if shape == 2:
        return Arrow(a, Arrow(Arrow(b, c), d))
    if shape == 3:
        return Arrow(Arrow(a, b), Arrow(c, d))
    if shape == 4:
        return Arrow(Arrow(a, Arrow(b, c)), d)
    if shape == 5:
        return Arrow(Arrow(Arrow(a, b), c), d)
    raise ValueError(f"unknown bracketing {shape!r}")


@lru_cache(maxsize=None)
def bol_moufang_catalog() -> tuple[Identity, ...]:
    """All 60 entries, in label order A12 .. F45."""
    entries = []
    for letter in sorted(WORD_PATTERNS):
        leaves = tuple(Var(v) for v in WORD_PATTERNS[letter])
        for i in range(1, 6):
            for j in range(i + 1, 6):
                entries.append(
                    Identity(f"{letter}{i}{j}", bracket(i, leaves), bracket(j, leaves))
                )
    return tuple(entries)


@lru_cache(maxsize=None)
def catalog_by_label() -> dict[str, Identity]:
    return {entry.label: entry for entry in bol_moufang_catalog()}


def catalog_entry(label: str) -> Identity:
    try:
        return catalog_by_label()[label]
    except KeyError:
        raise KeyError(f"unknown catalog label {label!r}") from None


def _axioms() -> dict[str, Identity]:
    return {
        "I": identity("I", "(x -> y) -> z", "((z' -> x) -> (y -> z)')'"),
        "I0": identity("I0", "0''", "0"),
        "I20": identity("I20", "x''", "x"),
        "MC": identity("MC", "x ^ y", "y ^ x"),
        "C": identity("C", "x -> y", "y -> x"),
        "I10": identity("I10", "x'", "x"),
        "DM": identity("DM", "(x -> y) -> x", "x"),
        "KL": identity("KL", "(x -> x) -> (y -> y)", "y -> y"),
        "BA": identity("BA", "x -> x", "0'"),
    }


AXIOM_NAMES = tuple(_axioms()) + ("SL",)


@lru_cache(maxsize=None)
def axiom(name: str):
    """Named axiom as an Identity; "SL" is the pair (I10, C)."""
    if name == "SL":
        return (axiom("I10"), axiom("C"))
    table = _axioms()
    if name not in table:
        raise KeyError(f"unknown axiom {name!r}")
    return table[name]
