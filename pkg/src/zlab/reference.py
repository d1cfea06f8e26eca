"""Reference classification data for the catalog over symmetric models.

The known picture: 47 of the 60 catalog identities are each equivalent,
over the symmetric base, to the semilattice axioms; the 13 survivors
fall into equality classes headed by A23, A12, F25 and B25 (the last
holding in every symmetric model); and the distinct varieties form the
inclusion diagram encoded below, with small separating models.
"""

from __future__ import annotations

from .algebra import FiniteZroupoid

# The two-element models: the join semilattice and material implication.
SEMILATTICE_2 = FiniteZroupoid(2, ((0, 1), (1, 1)))
BOOLEAN_2 = FiniteZroupoid(2, ((1, 1), (0, 1)))

# Smallest separating models beyond size 2.
A23_NOT_SL_4 = FiniteZroupoid(
    4, ((0, 1, 2, 3), (2, 3, 2, 3), (1, 1, 3, 3), (3, 3, 3, 3))
)
S_NOT_F25_3 = FiniteZroupoid(3, ((2, 2, 2), (1, 1, 2), (0, 1, 2)))

# Catalog entries equivalent to the semilattice axioms over the base.
SL_COLLAPSED_LABELS = (
    "A13", "A14", "A15", "A24", "A34", "A45", "B12", "B14",
    "B15", "B23", "B24", "B34", "B35", "B45", "C12", "C13",
    "C14", "C15", "C23", "C24", "C34", "C35", "C45", "D13",
    "D14", "D15", "D23", "D24", "D34", "D45", "E12", "E13",
    "E14", "E15", "E23", "E24", "E34", "E35", "E45", "F12",
    "F14", "F15", "F23", "F24", "F34", "F35", "F45",
)

# The rest of the catalog; these define something weaker than SL.
SURVIVOR_LABELS = (
    "A12", "A23", "A25", "A35", "B13", "B25",
    "C25", "D12", "D25", "D35", "E25", "F13", "F25",
)

# Survivors with the same models, grouped with the head label first;
# B25 holds in every symmetric model, so its class is the whole base.
EQUALITY_CLASSES = (
    ("A23", "A25", "C25", "D25", "E25"),
    ("A12", "B13", "D12", "D35", "F13"),
    ("F25", "A35"),
)
FULL_CLASS_LABEL = "B25"

# The distinct varieties and the cover edges of their inclusion diagram.
POSET_NODES = ("trivial", "SL", "BA", "A23", "A12", "F25", "S")
POSET_COVERS = (
    ("trivial", "SL"),
    ("trivial", "BA"),
    ("SL", "A23"),
    ("SL", "A12"),
    ("BA", "A12"),
    ("A23", "F25"),
    ("A12", "F25"),
    ("F25", "S"),
)

# Proper inclusions lower < upper with the size of the reference model in
# upper but not lower, and that model.
INCLUSION_WITNESSES = {
    ("SL", "A23"): A23_NOT_SL_4,
    ("SL", "A12"): BOOLEAN_2,
    ("BA", "A12"): SEMILATTICE_2,
    ("A23", "F25"): BOOLEAN_2,
    ("A12", "F25"): A23_NOT_SL_4,
    ("F25", "S"): S_NOT_F25_3,
}


def expected_class_of(label: str) -> str:
    """The poset node a catalog label's variety coincides with."""
    if label in POSET_NODES:
        return label
    if label in SL_COLLAPSED_LABELS:
        return "SL"
    if label == FULL_CLASS_LABEL:
        return "S"
    for group in EQUALITY_CLASSES:
        if label in group:
            return group[0]
    raise KeyError(f"unknown label {label!r}")


def expected_leq(x: str, y: str) -> bool:
    """Whether the reference diagram places class(x) inside class(y)."""
    a, b = expected_class_of(x), expected_class_of(y)
    if a == b:
        return True
    reach = {a}
    frontier = [a]
    while frontier:
        node = frontier.pop()
        for lo, hi in POSET_COVERS:
            if lo == node and hi not in reach:
                reach.add(hi)
                frontier.append(hi)
    return b in reach
