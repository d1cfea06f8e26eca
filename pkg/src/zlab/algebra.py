"""Finite zroupoids: evaluation, satisfaction, classification, law suites.

A finite zroupoid is a set {0, .., n-1} with a binary operation ->; the
constant is the element 0 and x' abbreviates x -> 0.  Everything here is
exhaustive: satisfaction checks run over all assignments in a fixed
order, so results (including witnesses) are deterministic.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache

from .catalog import axiom
from .terms import Arrow, Identity, Term, Var, Zero, identity

Assignment = dict[str, int]


@dataclass(frozen=True)
class FiniteZroupoid:
    """An n-element operation table; table[a][b] is a -> b."""

    size: int
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(tuple(row) for row in self.table))
        if self.size < 1:
            raise ValueError("size must be at least 1")
        if len(self.table) != self.size:
            raise ValueError("table must have one row per element")
        for row in self.table:
            if len(row) != self.size:
                raise ValueError("table rows must have one entry per element")
            for value in row:
                if not 0 <= value < self.size:
                    raise ValueError(f"table entry {value!r} out of range")

    def arrow(self, a: int, b: int) -> int:
        return self.table[a][b]

    def prime_of(self, a: int) -> int:
        return self.table[a][0]

    def to_dict(self) -> dict:
        return {"size": self.size, "table": [list(row) for row in self.table]}

    @classmethod
    def from_dict(cls, data: dict) -> "FiniteZroupoid":
        if not isinstance(data, dict) or set(data) != {"size", "table"}:
            raise ValueError('algebra JSON must have exactly the keys "size" and "table"')
        return cls(data["size"], data["table"])

    @classmethod
    def from_json(cls, text: str) -> "FiniteZroupoid":
        return cls.from_dict(json.loads(text))


def eval_term(alg: FiniteZroupoid, term: Term, env: Assignment) -> int:
    """Value of term under env; unbound variables raise KeyError."""
    if isinstance(term, Zero):
        return 0
    if isinstance(term, Var):
        try:
            return env[term.name]
        except KeyError:
            raise KeyError(f"unbound variable {term.name!r}") from None
    assert isinstance(term, Arrow)
    return alg.table[eval_term(alg, term.left, env)][eval_term(alg, term.right, env)]


@dataclass(frozen=True)
class SatisfactionResult:
    holds: bool
    witness: Assignment | None = None
    lhs_value: int | None = None
    rhs_value: int | None = None
    failures: tuple[tuple[Assignment, int, int], ...] = ()

    def to_dict(self) -> dict:
        out: dict = {"holds": self.holds}
        if self.witness is not None:
            out["witness"] = {
                "assignment": dict(self.witness),
                "lhs_value": self.lhs_value,
                "rhs_value": self.rhs_value,
            }
        if self.failures:
            out["failures"] = [
                {"assignment": dict(env), "lhs_value": lv, "rhs_value": rv}
                for env, lv, rv in self.failures
            ]
        return out


def satisfies(
    alg: FiniteZroupoid, ident: Identity, *, all_failures: bool = False
) -> SatisfactionResult:
    """Check ident over every assignment of its variables.

    Assignments run odometer-style over the alphabetical variable list,
    so the reported witness is the lexicographically first failure.  With
    all_failures the scan continues and collects every failure.
    """
    names = ident.var_set
    failures = []
    first = None
    for values in itertools.product(range(alg.size), repeat=len(names)):
        env = dict(zip(names, values))
        lv = eval_term(alg, ident.lhs, env)
        rv = eval_term(alg, ident.rhs, env)
        if lv != rv:
            if first is None:
                first = (env, lv, rv)
                if not all_failures:
                    break
            if all_failures:
                failures.append((env, lv, rv))
    if first is None:
        return SatisfactionResult(True)
    env, lv, rv = first
    return SatisfactionResult(False, env, lv, rv, tuple(failures))


@dataclass(frozen=True)
class ClassReport:
    """Membership flags; classes below the I-zroupoid row are gated on it."""

    size: int
    i: bool
    i0: bool
    izroupoid: bool
    involutive: bool
    meet_commutative: bool
    symmetric: bool
    commutative: bool
    i10: bool
    sl: bool
    dm: bool
    kl: bool
    ba: bool

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "i": self.i,
            "i0": self.i0,
            "izroupoid": self.izroupoid,
            "involutive": self.involutive,
            "meet_commutative": self.meet_commutative,
            "symmetric": self.symmetric,
            "commutative": self.commutative,
            "i10": self.i10,
            "sl": self.sl,
            "dm": self.dm,
            "kl": self.kl,
            "ba": self.ba,
        }


def classify(alg: FiniteZroupoid) -> ClassReport:
    """Membership in the named classes, primes taken by table lookup."""
    t = alg.table
    n = alg.size
    rng = range(n)

    i0 = t[t[0][0]][0] == 0
    i = True
    for a in rng:
        for b in rng:
            ab = t[a][b]
            for c in rng:
                rhs = t[t[t[c][0]][a]][t[t[b][c]][0]]
                if t[ab][c] != t[rhs][0]:
                    i = False
                    break
            if not i:
                break
        if not i:
            break

    izroupoid = i and i0
    law_i20 = all(t[t[a][0]][0] == a for a in rng)
    law_mc = all(
        t[t[a][t[b][0]]][0] == t[t[b][t[a][0]]][0] for a in rng for b in rng
    )
    law_c = all(t[a][b] == t[b][a] for a in rng for b in rng)
    law_i10 = all(t[a][0] == a for a in rng)
    law_dm = all(t[t[a][b]][a] == a for a in rng for b in rng)
    law_kl = all(t[t[a][a]][t[b][b]] == t[b][b] for a in rng for b in rng)
    law_ba = all(t[a][a] == t[0][0] for a in rng)

    involutive = izroupoid and law_i20
    meet_commutative = izroupoid and law_mc
    commutative = izroupoid and law_c
    i10 = izroupoid and law_i10
    dm = izroupoid and law_dm
    return ClassReport(
        size=n,
        i=i,
        i0=i0,
        izroupoid=izroupoid,
        involutive=involutive,
        meet_commutative=meet_commutative,
        symmetric=involutive and meet_commutative,
        commutative=commutative,
        i10=i10,
        sl=commutative and i10,
        dm=dm,
        kl=dm and law_kl,
        ba=dm and law_ba,
    )


@dataclass(frozen=True)
class LemmaCheck:
    """One law-suite entry; holds is None when the check does not apply."""

    name: str
    applicable: bool
    holds: bool | None
    details: tuple[tuple[str, bool], ...] = ()

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "applicable": self.applicable,
            "holds": self.holds,
            "details": [{"law": law, "holds": ok} for law, ok in self.details],
        }


@dataclass(frozen=True)
class LemmaSuiteReport:
    checks: tuple[LemmaCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.holds for c in self.checks if c.applicable)

    def to_dict(self) -> dict:
        return {"passed": self.passed, "checks": [c.to_dict() for c in self.checks]}


def _laws(label: str, *pairs: tuple[str, str]) -> tuple[Identity, ...]:
    return tuple(
        identity(f"{label}-{k}", lhs, rhs) for k, (lhs, rhs) in enumerate(pairs, 1)
    )


@lru_cache(maxsize=None)
def _suite_laws() -> dict[str, tuple[Identity, ...]]:
    return {
        # Four ways of saying the primes are involutive; on any I-zroupoid
        # they hold or fail together.
        "involution_equivalents": _laws(
            "inv-eq",
            ("0' -> x", "x"),
            ("x''", "x"),
            ("(x -> x')'", "x"),
            ("x' -> x", "x"),
        ),
        "involutive_zero_laws": _laws(
            "inv-zero",
            ("x' -> 0'", "0 -> x"),
            ("0 -> x'", "x -> 0'"),
        ),
        "involutive_laws": _laws(
            "inv",
            ("(x -> 0') -> y", "(x -> y') -> y"),
            ("x -> (0 -> x)'", "x'"),
            ("(y -> x) -> y", "(0 -> x) -> y"),
            ("(0 -> x) -> (0 -> y)", "x -> (0 -> y)"),
            ("x -> y", "x -> (x -> y)"),
            ("0 -> (0 -> x)'", "0 -> x'"),
            ("0 -> (x' -> y)'", "x -> (0 -> y')"),
            ("0 -> (x -> y)", "x -> (0 -> y)"),
            ("0 -> (x -> y')'", "0 -> (x' -> y)"),
            ("x -> (y -> x')", "y -> x'"),
            ("(x -> y')' -> z", "x -> (y -> z)"),
        ),
        "symmetric_exchange_laws": _laws(
            "sym",
            ("x -> (y -> z)", "y -> (x -> z)"),
            ("x' -> y", "y' -> x"),
            ("x -> y", "y' -> x'"),
            ("x -> y'", "y -> x'"),
        ),
        "zero_neutral": _laws("zn", ("0 -> x", "x")),
        "prime_splits": _laws("ps", ("(x -> y)'", "x' -> y'")),
        "idempotent": _laws("idem", ("x -> x", "x")),
        "prime_fixed": _laws("pf", ("x'", "x")),
        "self_square": _laws("ss", ("x'", "x -> x"), ("0'", "0")),
        "square_absorbs_zero": _laws("saz", ("0 -> (x -> x)", "x -> x")),
        "square_head_assoc": _laws(
            "sha", ("(x -> x) -> (y -> z)", "((x -> x) -> y) -> z")
        ),
    }


def _hold_each(alg: FiniteZroupoid, idents: tuple[Identity, ...]):
    details = tuple((ident.render(), satisfies(alg, ident).holds) for ident in idents)
    return all(ok for _, ok in details), details


def lemma_suite(alg: FiniteZroupoid) -> LemmaSuiteReport:
    """Run the derived-law checks that apply to alg's classes.

    Unconditional checks apply whenever alg is in the hypothesis class;
    conditional ones additionally require their hypothesis laws, and are
    reported inapplicable otherwise.
    """
    rep = classify(alg)
    laws = _suite_laws()
    checks: list[LemmaCheck] = []

    def skip(name: str) -> None:
        checks.append(LemmaCheck(name, False, None))

    def unconditional(name: str, gate: bool) -> None:
        if not gate:
            skip(name)
            return
        ok, details = _hold_each(alg, laws[name])
        checks.append(LemmaCheck(name, True, ok, details))

    def conditional(name: str, gate: bool, hyp_key: str, concl_key: str) -> None:
        if gate and _hold_each(alg, laws[hyp_key])[0]:
            ok, details = _hold_each(alg, laws[concl_key])
            checks.append(LemmaCheck(name, True, ok, details))
        else:
            skip(name)

    if rep.izroupoid:
        ok, details = _hold_each(alg, laws["involution_equivalents"])
        outcomes = {res for _, res in details}
        checks.append(
            LemmaCheck("involution_criteria_agree", True, len(outcomes) == 1, details)
        )
    else:
        skip("involution_criteria_agree")

    unconditional("involutive_zero_laws", rep.involutive)
    unconditional("involutive_laws", rep.involutive)
    conditional(
        "prime_splits_under_zero_neutral", rep.involutive, "zero_neutral", "prime_splits"
    )
    unconditional("symmetric_exchange_laws", rep.symmetric)
    conditional(
        "idempotent_forces_prime_fixed", rep.symmetric, "idempotent", "prime_fixed"
    )
    conditional(
        "self_square_forces_prime_fixed", rep.symmetric, "self_square", "prime_fixed"
    )
    conditional(
        "square_head_associativity", rep.symmetric, "square_absorbs_zero", "square_head_assoc"
    )

    if rep.izroupoid and rep.meet_commutative and rep.i10:
        ok = satisfies(alg, axiom("C")).holds
        checks.append(
            LemmaCheck(
                "commutative_from_meet_commutative_prime_fixed",
                True,
                ok,
                ((axiom("C").render(), ok),),
            )
        )
    else:
        skip("commutative_from_meet_commutative_prime_fixed")

    return LemmaSuiteReport(tuple(checks))
