"""Bounded comparison of identity-defined classes of symmetric models.

Every variety here is the symmetric base (I, 0'' = 0, x'' = x, meet
commutativity) plus zero or more defining identities.  Comparisons are
over all models up to a size bound, so every verdict is "up to size n":
enlarging the bound can split classes found equal, never merge them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import reference
from .algebra import FiniteZroupoid, classify, satisfies
from .catalog import axiom, catalog_by_label
from .enumerator import SearchSpec, Table, enumerate_models
from .terms import Identity, identity

BASE_AXIOMS = (axiom("I0"), axiom("I20"), axiom("MC"), axiom("I"))

SPECIAL_LABELS = ("trivial", "SL", "BA", "S")


@dataclass(frozen=True)
class VarietyDescriptor:
    """A label plus its defining identities relative to the symmetric base."""

    label: str
    defining: tuple[Identity, ...]


@lru_cache(maxsize=None)
def variety(label: str) -> VarietyDescriptor:
    """Descriptor for a catalog label or one of trivial, SL, BA, S."""
    if label == "S":
        return VarietyDescriptor("S", ())
    if label == "SL":
        return VarietyDescriptor("SL", axiom("SL"))
    if label == "BA":
        return VarietyDescriptor("BA", (axiom("BA"),))
    if label == "trivial":
        return VarietyDescriptor("trivial", (identity("one-element", "x", "y"),))
    table = catalog_by_label()
    if label in table:
        return VarietyDescriptor(label, (table[label],))
    raise KeyError(f"unknown variety label {label!r}")


_SYMMETRIC_CACHE: dict[int, tuple[FiniteZroupoid, ...]] = {}


def symmetric_models(n: int, workers: int = 1) -> tuple[FiniteZroupoid, ...]:
    """All symmetric models of size n up to isomorphism, canonical order."""
    if n not in _SYMMETRIC_CACHE:
        _SYMMETRIC_CACHE[n] = tuple(
            enumerate_models(SearchSpec(n, BASE_AXIOMS), workers)
        )
    return _SYMMETRIC_CACHE[n]


@lru_cache(maxsize=None)
def _member_tables(label: str, n: int) -> frozenset[Table]:
    v = variety(label)
    return frozenset(
        m.table
        for m in symmetric_models(n)
        if all(satisfies(m, ident).holds for ident in v.defining)
    )


def models_of(v: VarietyDescriptor, max_n: int, workers: int = 1) -> list[FiniteZroupoid]:
    """Members of v of size <= max_n up to isomorphism, smallest first.

    Filters the enumerated symmetric base, so the result is a sublist of
    models_of(variety("S"), max_n) in the same canonical order.
    """
    out = []
    for n in range(1, max_n + 1):
        for m in symmetric_models(n, workers):
            if all(satisfies(m, ident).holds for ident in v.defining):
                out.append(m)
    return out


def distinguish(x: str, y: str, max_n: int, workers: int = 1) -> FiniteZroupoid | None:
    """Smallest canonically-least model in x but not in y, up to max_n.

    Returns None when every member of x of size <= max_n is a member of
    y; a fixed bound can therefore miss separations, never invent them.
    """
    variety(x)
    variety(y)
    for n in range(1, max_n + 1):
        symmetric_models(n, workers)
        extra = _member_tables(x, n) - _member_tables(y, n)
        if extra:
            witness = FiniteZroupoid(n, min(extra))
            _check_witness(witness, x, y)
            return witness
    return None


def _check_witness(model: FiniteZroupoid, x: str, y: str) -> None:
    rep = classify(model)
    if not rep.symmetric:
        raise AssertionError(f"witness for {x} vs {y} is not symmetric")
    if not all(satisfies(model, ident).holds for ident in variety(x).defining):
        raise AssertionError(f"witness for {x} vs {y} is not in {x}")
    if all(satisfies(model, ident).holds for ident in variety(y).defining):
        raise AssertionError(f"witness for {x} vs {y} is in {y}")


@dataclass(frozen=True)
class ComparisonReport:
    left: str
    right: str
    bound: int
    verdict: str
    left_witness: FiniteZroupoid | None = None
    right_witness: FiniteZroupoid | None = None

    def to_dict(self) -> dict:
        out = {
            "left": self.left,
            "right": self.right,
            "bound": self.bound,
            "verdict": self.verdict,
            "wording": self.wording(),
        }
        if self.left_witness is not None:
            out["left_witness"] = self.left_witness.to_dict()
        if self.right_witness is not None:
            out["right_witness"] = self.right_witness.to_dict()
        return out

    def wording(self) -> str:
        if self.verdict == "equal_up_to_n":
            return f"{self.left} and {self.right} have the same models up to size {self.bound}"
        if self.verdict == "left_proper_in_right":
            return f"{self.left} is properly inside {self.right} up to size {self.bound}"
        if self.verdict == "right_proper_in_left":
            return f"{self.right} is properly inside {self.left} up to size {self.bound}"
        return f"{self.left} and {self.right} are incomparable up to size {self.bound}"


def compare(x: str, y: str, max_n: int, workers: int = 1) -> ComparisonReport:
    """Bounded two-way comparison; witnesses live in the reported gaps."""
    in_x_only = distinguish(x, y, max_n, workers)
    in_y_only = distinguish(y, x, max_n, workers)
    if in_x_only is None and in_y_only is None:
        verdict = "equal_up_to_n"
    elif in_x_only is None:
        verdict = "left_proper_in_right"
    elif in_y_only is None:
        verdict = "right_proper_in_left"
    else:
        verdict = "incomparable"
    return ComparisonReport(x, y, max_n, verdict, in_x_only, in_y_only)


@dataclass(frozen=True)
class PosetReport:
    bound: int
    labels: tuple[str, ...]
    classes: tuple[tuple[str, ...], ...]
    covers: tuple[tuple[str, str], ...]
    flags: tuple[tuple[str, str, str], ...]

    def to_dict(self) -> dict:
        return {
            "bound": self.bound,
            "labels": list(self.labels),
            "classes": [list(c) for c in self.classes],
            "covers": [list(e) for e in self.covers],
            "flags": [
                {"left": a, "right": b, "status": s} for a, b, s in self.flags
            ],
        }

    def to_dot(self) -> str:
        lines = ["digraph inclusions {", "    rankdir=BT;"]
        rep = {c: _class_rep(c) for c in self.classes}
        for cls in self.classes:
            label = " = ".join(cls)
            if len(cls) > 1:
                label += f" (up to size {self.bound})"
            lines.append(f'    "{rep[cls]}" [label="{label}"];')
        for lo, hi in self.covers:
            lines.append(f'    "{lo}" -> "{hi}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _class_rep(labels: tuple[str, ...]) -> str:
    special = [x for x in labels if x in SPECIAL_LABELS]
    return special[0] if special else min(labels)


def _label_order(label: str) -> tuple[int, str]:
    order = ("trivial", "SL", "BA")
    if label in order:
        return (order.index(label), "")
    if label == "S":
        return (4, "")
    return (3, label)


def poset(labels: tuple[str, ...], max_n: int, workers: int = 1) -> PosetReport:
    """Bounded inclusion order of the given labels, with reference flags.

    Labels with the same members up to max_n merge into one class; the
    covers are the transitive reduction over the classes.  Each observed
    or missing inclusion is flagged against the reference diagram:
    "consistent", "exceeds-reference" (a collapse the reference does not
    claim, invisible separations being expected at small bounds), or
    "contradicts-reference" (a model refuting a claimed inclusion).
    """
    labels = tuple(dict.fromkeys(labels))
    for lab in labels:
        variety(lab)
    member: dict[str, set] = {lab: set() for lab in labels}
    for n in range(1, max_n + 1):
        symmetric_models(n, workers)
        for lab in labels:
            member[lab].update(_member_tables(lab, n))

    def leq(a: str, b: str) -> bool:
        return member[a] <= member[b]

    flags = []
    for a in labels:
        for b in labels:
            if a == b:
                continue
            holds = leq(a, b)
            expected = reference.expected_leq(a, b)
            if holds and expected:
                status = "consistent"
            elif holds:
                status = "exceeds-reference"
            elif expected:
                status = "contradicts-reference"
            else:
                continue
            flags.append((a, b, status))

    remaining = list(labels)
    classes = []
    while remaining:
        head = remaining.pop(0)
        group = [head] + [x for x in remaining if leq(head, x) and leq(x, head)]
        remaining = [x for x in remaining if x not in group]
        classes.append(tuple(sorted(group, key=_label_order)))
    classes.sort(key=lambda c: _label_order(c[0]))

    def class_leq(ca: tuple[str, ...], cb: tuple[str, ...]) -> bool:
        return leq(ca[0], cb[0])

    covers = []
    for ca in classes:
        for cb in classes:
            if ca == cb or not class_leq(ca, cb):
                continue
            if any(
                cc != ca and cc != cb and class_leq(ca, cc) and class_leq(cc, cb)
                for cc in classes
            ):
                continue
            covers.append((_class_rep(ca), _class_rep(cb)))
    covers.sort(key=lambda e: (_label_order(e[0]), _label_order(e[1])))
    return PosetReport(max_n, labels, tuple(classes), tuple(covers), tuple(flags))


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class VerifyReport:
    bound: int
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "bound": self.bound,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }


def _check_catalog() -> Check:
    from .catalog import bol_moufang_catalog
    from .terms import print_term

    entries = bol_moufang_catalog()
    problems = []
    if len(entries) != 60:
        problems.append(f"catalog has {len(entries)} entries")
    labels = [e.label for e in entries]
    if len(set(labels)) != len(labels):
        problems.append("duplicate labels")
    a12 = catalog_by_label()["A12"]
    shown = (print_term(a12.lhs, "raw"), print_term(a12.rhs, "raw"))
    wanted = ("x -> (x -> (y -> z))", "x -> ((x -> y) -> z)")
    if shown != wanted:
        problems.append(f"A12 prints as {shown}")
    collapsed = set(reference.SL_COLLAPSED_LABELS)
    survivors = set(reference.SURVIVOR_LABELS)
    if len(collapsed) != 47:
        problems.append(f"{len(collapsed)} collapsed labels")
    if collapsed & survivors or collapsed | survivors != set(labels):
        problems.append("collapsed and survivor labels do not partition the catalog")
    if problems:
        return Check("catalog-complete", False, "; ".join(problems))
    return Check(
        "catalog-complete",
        True,
        "60 entries; A12 prints as displayed; 47 + 13 labels partition the catalog",
    )


def _check_two_element_models() -> tuple[Check, Check]:
    from .catalog import bol_moufang_catalog

    failed = [
        e.label
        for e in bol_moufang_catalog()
        if not satisfies(reference.SEMILATTICE_2, e).holds
    ]
    first = Check(
        "semilattice-model-satisfies-catalog",
        not failed,
        "the two-element semilattice satisfies all 60 entries"
        if not failed
        else f"failures: {failed}",
    )
    b = reference.BOOLEAN_2
    ok_a12 = satisfies(b, catalog_by_label()["A12"]).holds
    ok_ba = satisfies(b, axiom("BA")).holds
    second = Check(
        "boolean-model-in-head-class",
        ok_a12 and ok_ba,
        "the two-element Boolean model satisfies A12 and x -> x = 0'"
        if ok_a12 and ok_ba
        else f"A12: {ok_a12}, BA axiom: {ok_ba}",
    )
    return first, second


def _check_collapse(max_n: int) -> Check:
    catalog = catalog_by_label()
    exceptions = []
    for label in reference.SL_COLLAPSED_LABELS:
        ident = catalog[label]
        for n in range(1, max_n + 1):
            for m in symmetric_models(n):
                if satisfies(m, ident).holds != classify(m).sl:
                    exceptions.append((label, m.table))
    if exceptions:
        label, table = exceptions[0]
        return Check(
            "collapsed-labels-match-semilattice",
            False,
            f"{len(exceptions)} exceptions, first {label} on {table}",
        )
    return Check(
        "collapsed-labels-match-semilattice",
        True,
        f"47 labels hold exactly on the semilattice models up to size {max_n}",
    )


def _check_equality_classes(max_n: int) -> Check:
    problems = []
    for group in reference.EQUALITY_CLASSES:
        head = group[0]
        for other in group[1:]:
            for n in range(1, max_n + 1):
                if _member_tables(head, n) != _member_tables(other, n):
                    problems.append(f"{head} != {other} at size {n}")
    full = reference.FULL_CLASS_LABEL
    for n in range(1, max_n + 1):
        if len(_member_tables(full, n)) != len(symmetric_models(n)):
            problems.append(f"{full} fails on some symmetric model of size {n}")
    if problems:
        return Check("survivor-equality-classes", False, "; ".join(problems))
    return Check(
        "survivor-equality-classes",
        True,
        f"survivor classes coincide and {full} holds in every symmetric model up to size {max_n}",
    )


def _check_inclusions(max_n: int) -> Check:
    problems = []
    notes = []
    for (lo, hi), model in reference.INCLUSION_WITNESSES.items():
        for n in range(1, max_n + 1):
            if not _member_tables(lo, n) <= _member_tables(hi, n):
                problems.append(f"{lo} not inside {hi} at size {n}")
        rep = classify(model)
        in_hi = all(satisfies(model, i).holds for i in variety(hi).defining)
        in_lo = all(satisfies(model, i).holds for i in variety(lo).defining)
        if not (rep.symmetric and in_hi and not in_lo):
            problems.append(f"reference model for {lo} < {hi} misbehaves")
        if model.size <= max_n:
            found = distinguish(hi, lo, max_n)
            if found is None or found.size > model.size:
                problems.append(f"no witness for {lo} < {hi} within size {model.size}")
        else:
            notes.append(f"{lo} = {hi} up to size {max_n} (separation needs size {model.size})")
    # The head classes meet in the semilattice class.
    catalog = catalog_by_label()
    for n in range(1, max_n + 1):
        for m in symmetric_models(n):
            both = satisfies(m, catalog["A23"]).holds and satisfies(m, catalog["A12"]).holds
            if both and not classify(m).sl:
                problems.append(f"A23 and A12 meet above SL on {m.table}")
    if problems:
        return Check("proper-inclusions-witnessed", False, "; ".join(problems))
    detail = "all six inclusions witnessed and A23 meet A12 = SL"
    if notes:
        detail = "; ".join(["inclusions hold"] + notes)
    return Check("proper-inclusions-witnessed", True, detail)


def _check_poset(max_n: int) -> Check:
    report = poset(reference.POSET_NODES, max_n)
    contradictions = [f for f in report.flags if f[2] == "contradicts-reference"]
    if contradictions:
        return Check(
            "inclusion-poset-structure", False, f"contradictions: {contradictions}"
        )
    witness_bound = max(m.size for m in reference.INCLUSION_WITNESSES.values())
    if max_n >= witness_bound:
        expected_covers = tuple(reference.POSET_COVERS)
        singleton = all(len(c) == 1 for c in report.classes)
        if not singleton or set(report.covers) != set(expected_covers):
            return Check(
                "inclusion-poset-structure",
                False,
                f"classes {report.classes}, covers {report.covers}",
            )
        return Check(
            "inclusion-poset-structure",
            True,
            "all seven varieties distinct; covers match the reference diagram",
        )
    merged = [c for c in report.classes if len(c) > 1]
    return Check(
        "inclusion-poset-structure",
        True,
        f"consistent with the reference diagram up to size {max_n}"
        + (f"; merged at this bound: {merged}" if merged else ""),
    )


def verify_paper(max_n: int, workers: int = 1) -> VerifyReport:
    """Replay the reference classification against search up to max_n.

    Runs the seven reference checks in order; bound-dependent statements
    are asserted only for sizes the bound covers, so the report is valid
    for any max_n >= 1 and complete once max_n reaches the largest
    reference witness (size 4).
    """
    for n in range(1, max_n + 1):
        symmetric_models(n, workers)
    first, second = _check_two_element_models()
    checks = (
        _check_catalog(),
        first,
        second,
        _check_collapse(max_n),
        _check_equality_classes(max_n),
        _check_inclusions(max_n),
        _check_poset(max_n),
    )
    return VerifyReport(max_n, checks)
