"""Exhaustive enumeration of finite zroupoid models of identity sets.

The search fills the operation table cell by cell in row-major order.
Every ground instance of every required identity is compiled to a
straight-line checker and watched on the first undecided cell its
evaluation hits; assigning that cell re-runs exactly the watching
instances, so a branch dies the moment any fully decided instance
fails.  Watched cells only move forward, which makes undoing a cell a
LIFO pop on the buckets.

naive_models is the independent oracle: it filters every possible table
through algebra.satisfies and must produce identical results.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .algebra import FiniteZroupoid, satisfies
from .terms import Arrow, Identity, Term, Var, Zero

DEFAULT_SIZE_CAP = 6

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SearchSpec:
    size: int
    required: tuple[Identity, ...]
    dedup: str = "up_to_iso"
    limit: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "required", tuple(self.required))
        if self.size < 1:
            raise ValueError("size must be at least 1")
        if self.dedup not in ("none", "up_to_iso"):
            raise ValueError(f"unknown dedup mode {self.dedup!r}")
        if self.limit is not None and self.limit < 0:
            raise ValueError("limit must be nonnegative")


# A compiled instance maps the flat cell list (-1 for undecided) to the
# first undecided cell index it needs, or _TRUE / _FALSE once decided.
_TRUE = -1
_FALSE = -2


def _instance_source(ident: Identity, env: dict[str, int], n: int) -> str | None:
    """Straight-line checker source for one ground instance.

    Lookups appear in left-to-right evaluation order, each guarded by an
    undecided-cell return, with repeated subterms computed once and cell
    indexes of constant operands folded.  Returns None when the two sides
    reduce to the same expression.
    """
    lines: list[str] = []
    memo: dict[str, str] = {}

    def emit(term: Term) -> str:
        if isinstance(term, Zero):
            return "0"
        if isinstance(term, Var):
            return str(env[term.name])
        assert isinstance(term, Arrow)
        a = emit(term.left)
        b = emit(term.right)
        if a.isdigit() and b.isdigit():
            index = str(int(a) * n + int(b))
        else:
            index = f"{a}*{n}+{b}"
        if index in memo:
            return memo[index]
        var = f"v{len(memo)}"
        if index.isdigit():
            lines.append(f"{var} = c[{index}]")
            lines.append(f"if {var} < 0: return {index}")
        else:
            idx = f"i{len(memo)}"
            lines.append(f"{idx} = {index}")
            lines.append(f"{var} = c[{idx}]")
            lines.append(f"if {var} < 0: return {idx}")
        memo[index] = var
        return var

    lv = emit(ident.lhs)
    rv = emit(ident.rhs)
    if lv == rv:
        return None
    lines.append(f"return {_TRUE} if {lv} == {rv} else {_FALSE}")
    return "def f(c):\n    " + "\n    ".join(lines)


def compile_instances(size: int, required: tuple[Identity, ...]) -> list:
    """Compiled checkers for every ground instance of every identity."""
    sources: dict[str, None] = {}
    for ident in required:
        names = ident.var_set
        for values in itertools.product(range(size), repeat=len(names)):
            src = _instance_source(ident, dict(zip(names, values)), size)
            if src is not None:
                sources[src] = None
    out = []
    for src in sources:
        ns: dict = {}
        exec(src, {}, ns)
        out.append(ns["f"])
    return out


class _Search:
    def __init__(self, size: int, instances: list):
        self.n = size
        self.n2 = size * size
        self.cells = [-1] * self.n2
        self.buckets: list[list] = [[] for _ in range(self.n2)]
        self.alive = True
        for inst in instances:
            res = inst(self.cells)
            if res == _FALSE:
                self.alive = False
                return
            if res >= 0:
                self.buckets[res].append(inst)

    def solutions(self, prefix: tuple[int, ...] = ()) -> list[Table]:
        """All completions of the given leading cells, in fill order."""
        out: list[Table] = []
        if not self.alive:
            return out
        cells = self.cells
        for pos, v in enumerate(prefix):
            cells[pos] = v
            pending = self.buckets[pos]
            self.buckets[pos] = []
            for inst in pending:
                res = inst(cells)
                if res >= 0:
                    self.buckets[res].append(inst)
                elif res == _FALSE:
                    return out
        self._solve(len(prefix), out)
        return out

    def _solve(self, pos: int, out: list[Table]) -> None:
        if pos == self.n2:
            n = self.n
            cells = self.cells
            out.append(tuple(tuple(cells[r * n : (r + 1) * n]) for r in range(n)))
            return
        cells = self.cells
        buckets = self.buckets
        pending = buckets[pos]
        buckets[pos] = []
        for v in range(self.n):
            cells[pos] = v
            moved = []
            failed = False
            for inst in pending:
                res = inst(cells)
                if res >= 0:
                    buckets[res].append(inst)
                    moved.append(res)
                elif res == _FALSE:
                    failed = True
                    break
            if not failed:
                self._solve(pos + 1, out)
            for q in reversed(moved):
                buckets[q].pop()
        cells[pos] = -1
        buckets[pos] = pending


def canonical_table(table: Table) -> Table:
    """Least row-major relabeling of table over permutations fixing 0."""
    n = len(table)
    best = None
    for perm in itertools.permutations(range(1, n)):
        p = (0,) + perm
        q = [0] * n
        for a, pa in enumerate(p):
            q[pa] = a
        rel = tuple(
            tuple(p[table[q[i]][q[j]]] for j in range(n)) for i in range(n)
        )
        if best is None or rel < best:
            best = rel
    return best


def canonicalize(alg: FiniteZroupoid) -> FiniteZroupoid:
    """The canonical representative of alg's isomorphism class."""
    return FiniteZroupoid(alg.size, canonical_table(alg.table))


def relabelings(table: Table) -> frozenset[Table]:
    """The isomorphism orbit of table under permutations fixing 0."""
    n = len(table)
    out = set()
    for perm in itertools.permutations(range(1, n)):
        p = (0,) + perm
        q = [0] * n
        for a, pa in enumerate(p):
            q[pa] = a
        out.add(
            tuple(tuple(p[table[q[i]][q[j]]] for j in range(n)) for i in range(n))
        )
    return frozenset(out)


def _finalize(spec: SearchSpec, tables: list[Table]) -> list[FiniteZroupoid]:
    if spec.dedup == "up_to_iso":
        chosen = sorted({canonical_table(t) for t in tables})
    else:
        chosen = sorted(tables, key=lambda t: (canonical_table(t), t))
    if spec.limit is not None:
        chosen = chosen[: spec.limit]
    return [FiniteZroupoid(spec.size, t) for t in chosen]


def _search_task(args) -> list[Table]:
    spec, prefix = args
    search = _Search(spec.size, compile_instances(spec.size, spec.required))
    return search.solutions(prefix)


def _raw_tables(spec: SearchSpec, workers: int) -> list[Table]:
    if workers > 1 and spec.size >= 2:
        # Split on the first two cells; the prefix partitions are disjoint,
        # so results concatenate without duplicates.
        prefixes = list(itertools.product(range(spec.size), repeat=2))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = pool.map(_search_task, [(spec, prefix) for prefix in prefixes])
            return [t for chunk in chunks for t in chunk]
    search = _Search(spec.size, compile_instances(spec.size, spec.required))
    return search.solutions()


def enumerate_models(spec: SearchSpec, workers: int = 1) -> list[FiniteZroupoid]:
    """Every satisfying table of the given size, sorted by canonical form.

    With dedup, one representative per isomorphism class (the canonical
    form itself).  Output is independent of the worker count.
    """
    return _finalize(spec, _raw_tables(spec, workers))


def _naive_raw_tables(spec: SearchSpec) -> list[Table]:
    n = spec.size
    out = []
    for flat in itertools.product(range(n), repeat=n * n):
        rows = tuple(flat[r * n : (r + 1) * n] for r in range(n))
        alg = FiniteZroupoid(n, rows)
        if all(satisfies(alg, ident).holds for ident in spec.required):
            out.append(alg.table)
    return out


def naive_models(spec: SearchSpec) -> list[FiniteZroupoid]:
    """Oracle enumeration: test every table directly, no pruning."""
    return _finalize(spec, _naive_raw_tables(spec))
