"""Terms over the signature (->, 0), with parsing and printing.

Concrete syntax::

    term := '0' | variable | term "->" term | term "'" | '(' term ')' | term '^' term

The postfix prime binds tightest, then '^', and '->' associates to the
right.  Both sugar forms are eliminated while parsing: t' stands for
t -> 0, and a ^ b stands for (a -> b')', so a parsed tree contains only
Var, Zero and Arrow nodes.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_TERM_DEPTH = 64

CATALOG_VARIABLES = ("x", "y", "z")


class TermSyntaxError(ValueError):
    """Raised on malformed input; `offset` is the byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Term:
    pass


@dataclass(frozen=True)
class Var(Term):
    name: str


@dataclass(frozen=True)
class Zero(Term):
    pass


@dataclass(frozen=True)
class Arrow(Term):
    left: Term
    right: Term


ZERO = Zero()


def prime(t: Term) -> Term:
    """t' as a plain term: t -> 0."""
    return Arrow(t, ZERO)


def meet(a: Term, b: Term) -> Term:
    """a ^ b as a plain term: (a -> b')'."""
    return prime(Arrow(a, prime(b)))


def depth(t: Term) -> int:
    # Iterative so that adversarially deep trees cannot overflow the stack.
    best = 0
    stack = [(t, 1)]
    while stack:
        node, d = stack.pop()
        if d > best:
            best = d
        if isinstance(node, Arrow):
            stack.append((node.left, d + 1))
            stack.append((node.right, d + 1))
    return best


def variables(t: Term) -> tuple[str, ...]:
    """Distinct variable names in t, alphabetically."""
    seen = set()
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            seen.add(node.name)
        elif isinstance(node, Arrow):
            stack.append(node.left)
            stack.append(node.right)
    return tuple(sorted(seen))


def occurrences(t: Term) -> tuple[str, ...]:
    """Variable names in t in left-to-right reading order, with repeats."""
    out: list[str] = []

    def walk(node: Term) -> None:
        if isinstance(node, Var):
            out.append(node.name)
        elif isinstance(node, Arrow):
            walk(node.left)
            walk(node.right)

    walk(t)
    return tuple(out)


class _Parser:
    def __init__(self, src: str, free_vars: bool):
        self.src = src
        self.pos = 0
        self.free_vars = free_vars

    def error(self, message: str, offset: int | None = None) -> TermSyntaxError:
        return TermSyntaxError(message, self.pos if offset is None else offset)

    def skip_ws(self) -> None:
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def parse(self) -> Term:
        t = self.arrow(0)
        self.skip_ws()
        if self.pos < len(self.src):
            raise self.error(f"unexpected {self.src[self.pos]!r}")
        return t

    def arrow(self, nesting: int) -> Term:
        # Chains are collected iteratively so that very long inputs fail
        # the depth check below instead of overflowing the parse stack.
        parts = [self.meet(nesting)]
        while True:
            self.skip_ws()
            if not self.src.startswith("->", self.pos):
                break
            self.pos += 2
            parts.append(self.meet(nesting))
        t = parts[-1]
        for part in reversed(parts[:-1]):
            t = Arrow(part, t)
        return t

    def meet(self, nesting: int) -> Term:
        t = self.postfix(nesting)
        while self.peek() == "^":
            self.pos += 1
            t = meet(t, self.postfix(nesting))
        return t

    def postfix(self, nesting: int) -> Term:
        t = self.atom(nesting)
        while self.peek() == "'":
            self.pos += 1
            t = prime(t)
        return t

    def atom(self, nesting: int) -> Term:
        # The nesting guard keeps recursion bounded on inputs like "(((((...".
        if nesting > MAX_TERM_DEPTH:
            raise self.error(f"nesting deeper than {MAX_TERM_DEPTH}")
        ch = self.peek()
        if ch == "0":
            self.pos += 1
            return ZERO
        if ch == "(":
            self.pos += 1
            t = self.arrow(nesting + 1)
            if self.peek() != ")":
                raise self.error("expected ')'")
            self.pos += 1
            return t
        if ch.isalpha() and ch.islower():
            if not self.free_vars and ch not in CATALOG_VARIABLES:
                raise self.error(f"unknown variable {ch!r}")
            self.pos += 1
            return Var(ch)
        if ch == "":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {ch!r}")


def parse_term(src: str, *, free_vars: bool = False) -> Term:
    """Parse a term; only x, y, z are accepted unless free_vars is set.

    Raises TermSyntaxError (with a byte offset) on malformed input and on
    terms whose desugared depth exceeds MAX_TERM_DEPTH.
    """
    t = _Parser(src, free_vars).parse()
    if depth(t) > MAX_TERM_DEPTH:
        raise TermSyntaxError(f"term deeper than {MAX_TERM_DEPTH}", 0)
    return t


def print_term(t: Term, style: str = "sugared") -> str:
    """Render t; parse_term(print_term(t)) reproduces t exactly.

    "raw" spells out every arrow; "sugared" folds s -> 0 back to s'.
    Either way each arrow below the outermost is parenthesized.
    """
    if style == "raw":
        return _print_raw(t, child=False)
    if style == "sugared":
        return _print_sugared(t, child=False)
    raise ValueError(f"unknown style {style!r}")


def _print_raw(t: Term, child: bool) -> str:
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, Var):
        return t.name
    assert isinstance(t, Arrow)
    s = f"{_print_raw(t.left, True)} -> {_print_raw(t.right, True)}"
    return f"({s})" if child else s


def _print_sugared(t: Term, child: bool) -> str:
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, Var):
        return t.name
    assert isinstance(t, Arrow)
    if t.right == ZERO:
        return _print_sugared(t.left, child=True) + "'"
    s = f"{_print_sugared(t.left, True)} -> {_print_sugared(t.right, True)}"
    return f"({s})" if child else s


@dataclass(frozen=True)
class Identity:
    """A pair of terms asserted equal for all variable values."""

    label: str
    lhs: Term
    rhs: Term

    @property
    def var_set(self) -> tuple[str, ...]:
        return tuple(sorted(set(variables(self.lhs)) | set(variables(self.rhs))))

    def render(self, style: str = "sugared") -> str:
        return f"{print_term(self.lhs, style)} = {print_term(self.rhs, style)}"

    def __str__(self) -> str:
        return f"({self.label}) {self.render()}"


def identity(label: str, lhs_src: str, rhs_src: str, *, free_vars: bool = False) -> Identity:
    """Build an Identity from concrete syntax."""
    return Identity(
        label,
        parse_term(lhs_src, free_vars=free_vars),
        parse_term(rhs_src, free_vars=free_vars),
    )
