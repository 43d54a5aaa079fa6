"""
Half-twist (Z-notation) expressions compiled to braid words.

Nodes
-----
Z         Z_{i j} / Z̄_{i j} and their multi-point and grouped versions
Chain     Z_{i i+1 … i+k} over consecutive strands
Gen       a bare generator power σ_i^e
Product   left-to-right product
Power     a parenthesised sub-expression raised to an integer
Conjugate base^conjugator, meaning conjugator⁻¹ · base · conjugator
Inverse   formal inverse

Point labels are either plain strand numbers or :class:`DoubledIndex` values.
After regeneration every component i is carried by two strands, i ↦ 2i-1 and
i' ↦ 2i; doubled labels are resolved to strands when compiling.

A Z node holds a tuple of groups. With singleton groups and two points it is
the ordinary Z_{i j}; with k singleton points it is the half twist of those k
points, dragged together along a path passing below (Z) or above (Z̄) the
strands in between. When some group has more than one point (Z_{i i', j},
Z_{i i', j j'}, …) the expression names the full twist of the groups around
each other, so only even powers are meaningful and odd powers are rejected.

Text grammar (see :func:`parse`)::

    expr     := term*
    term     := atom postfix*
    postfix  := '^' INT | '^' '(' INT ')' | '^' '{' expr '}'
    atom     := 'Z' '[' slots ']' | 'Zb' '[' slots ']' | 's' INT | '(' expr ')'
    slots    := slot (',' slot)*
    slot     := label+ | INT '..' INT
    label    := INT | INT "'"

Commas separate groups, juxtaposition inside a slot forms one group, and
`a..b` expands to the singleton points a, a+1, …, b. Primes switch the whole
expression to doubled labels.
"""

from __future__ import annotations

import dataclasses
import re
from typing import Union

from .braid import BraidError, BraidWord, Letter, generator, inverse, power, product


class ExpressionError(BraidError):
    """Invalid half-twist expression (bad indices, odd grouped power, …)."""


class ParseError(ExpressionError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclasses.dataclass(frozen=True)
class DoubledIndex:
    base: int
    primed: bool = False

    def __str__(self) -> str:
        return f"{self.base}'" if self.primed else str(self.base)


Label = Union[int, DoubledIndex]


def doubled_strand(d: DoubledIndex) -> int:
    """Strand carrying a regenerated label: i ↦ 2i-1, i' ↦ 2i."""
    if d.base < 1:
        raise ExpressionError(f"component index must be positive, got {d.base}")
    return 2 * d.base if d.primed else 2 * d.base - 1


def _strand(label: Label) -> int:
    return doubled_strand(label) if isinstance(label, DoubledIndex) else int(label)


@dataclasses.dataclass(frozen=True)
class Z:
    groups: tuple[tuple[Label, ...], ...]
    bar: bool = False
    power: int = 1

    def __str__(self) -> str:
        name = "Zb" if self.bar else "Z"
        inner = ",".join(" ".join(str(x) for x in g) for g in self.groups)
        return f"{name}[{inner}]" + (f"^{self.power}" if self.power != 1 else "")


@dataclasses.dataclass(frozen=True)
class Chain:
    start: Label
    length: int
    power: int = 1

    def __str__(self) -> str:
        tail = f"^{self.power}" if self.power != 1 else ""
        return f"Z[{self.start}..{_label_add(self.start, self.length)}]{tail}"


@dataclasses.dataclass(frozen=True)
class Gen:
    index: int
    power: int = 1

    def __str__(self) -> str:
        return f"s{self.index}" + (f"^{self.power}" if self.power != 1 else "")


@dataclasses.dataclass(frozen=True)
class Product:
    factors: tuple["Expr", ...] = ()

    def __str__(self) -> str:
        return " ".join(_wrap(f) for f in self.factors) if self.factors else "()"


@dataclasses.dataclass(frozen=True)
class Power:
    base: "Expr"
    exponent: int

    def __str__(self) -> str:
        return f"({self.base})^{self.exponent}"


@dataclasses.dataclass(frozen=True)
class Conjugate:
    base: "Expr"
    conjugator: "Expr"

    def __str__(self) -> str:
        return f"{_wrap(self.base)} ^ {{ {self.conjugator} }}"


@dataclasses.dataclass(frozen=True)
class Inverse:
    sub: "Expr"

    def __str__(self) -> str:
        return f"({self.sub})^-1"


Expr = Union[Z, Chain, Gen, Product, Power, Conjugate, Inverse]


def _wrap(e: Expr) -> str:
    return f"({e})" if isinstance(e, (Product, Conjugate)) else str(e)


def _label_add(label: Label, k: int) -> Label:
    if isinstance(label, DoubledIndex):
        return DoubledIndex(label.base + k, label.primed)
    return label + k


def z(i: Label, j: Label, power: int = 1, bar: bool = False) -> Z:
    """Shorthand for Z_{i j}^power (or Z̄ with bar=True)."""
    return Z(((i,), (j,)), bar, power)


def zgroup(*groups, power: int = 2, bar: bool = False) -> Z:
    """Z over groups of labels, e.g. zgroup((i, i_), (j,)) for Z_{i i', j}."""
    gs = tuple(tuple(g) if isinstance(g, (tuple, list)) else (g,) for g in groups)
    return Z(gs, bar, power)


# --------------------------------------------------------------------------
# compilation


def _check_range(strands: list[int], n: int) -> None:
    for s in strands:
        if not 1 <= s <= n:
            raise ExpressionError(f"strand {s} out of range for {n} strands")


def _run(n: int, lo: int, hi: int, sign: int = 1) -> BraidWord:
    """σ_lo σ_lo+1 ⋯ σ_hi (empty when hi < lo), with the given letter sign."""
    return BraidWord(n, tuple((k, sign) for k in range(lo, hi + 1)))


def _run_down(n: int, hi: int, lo: int) -> BraidWord:
    return BraidWord(n, tuple((k, 1) for k in range(hi, lo - 1, -1)))


def _sandwich(b: BraidWord, core: BraidWord) -> BraidWord:
    return product([b, core, inverse(b)], core.strands)


def compile_z(i: int, j: int, bar: bool = False, power: int = 1, n: int | None = None, form: int = 1) -> BraidWord:
    """Z_{i j}^power (or Z̄_{i j}^power) on n strands.

    form=1 uses Z = (σ_i⋯σ_{j-2}) σ_{j-1} (σ_i⋯σ_{j-2})⁻¹ and
    Z̄ = (σ_{j-2}⋯σ_i)⁻¹ σ_{j-1} (σ_{j-2}⋯σ_i); form=2 uses
    Z = (σ_{i+1}⋯σ_{j-1})⁻¹ σ_i (σ_{i+1}⋯σ_{j-1}) and
    Z̄ = (σ_{j-1}⋯σ_{i+1}) σ_i (σ_{j-1}⋯σ_{i+1})⁻¹. The two forms are equal in B_n.
    """
    if n is None:
        n = j
    if not (1 <= i < j <= n):
        raise ExpressionError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    if form == 1:
        b = _run(n, i, j - 2, -1 if bar else 1)
        return _sandwich(b, generator(n, j - 1, power))
    if form == 2:
        if bar:
            b = _run_down(n, j - 1, i + 1)
        else:
            b = inverse(_run(n, i + 1, j - 1))
        return _sandwich(b, generator(n, i, power))
    raise ValueError(f"form must be 1 or 2, got {form}")


def compile_chain(i: int, k: int, power: int = 1, n: int | None = None) -> BraidWord:
    """Z_{i i+1 … i+k}^power = [(σ_{i+k-1}⋯σ_i)(σ_{i+k-1}⋯σ_{i+1})⋯(σ_{i+k-1})]^power."""
    if n is None:
        n = i + k
    if i < 1 or k < 1 or i + k > n:
        raise ExpressionError(f"chain Z_{{{i}..{i + k}}} does not fit on {n} strands")
    top = i + k - 1
    half = product([_run_down(n, top, lo) for lo in range(i, top + 1)], n)
    return power_word(half, power)


def power_word(w: BraidWord, e: int) -> BraidWord:
    return power(w, e)


def _gather(points: list[int], bar: bool, n: int) -> tuple[BraidWord, int]:
    """Conjugator that drags the sorted points together next to the last one.

    Points are moved right-to-left: point r travels from p_r to p_last - (k-1-r),
    passing below (σ) or above (σ⁻¹) the strands in between. Returns the
    conjugator b and the first position of the resulting block; the twist is
    then b · core · b⁻¹.
    """
    k = len(points)
    last = points[-1]
    sign = -1 if bar else 1
    pieces = []
    for r in range(k - 2, -1, -1):
        target = last - (k - 1 - r)
        pieces.append(_run(n, points[r], target - 1, sign))
    return product(pieces, n), last - (k - 1)


def _full_twist_block(n: int, start: int, size: int) -> BraidWord:
    if size < 2:
        return BraidWord.identity(n)
    return compile_chain(start, size - 1, 2, n)


def _compile_z_node(node: Z, n: int) -> BraidWord:
    groups = [sorted(_strand(x) for x in g) for g in node.groups]
    if any(len(g) == 0 for g in groups):
        raise ExpressionError(f"empty group in {node}")
    groups.sort(key=lambda g: g[0])
    points = [p for g in groups for p in g]
    _check_range(points, n)
    if len(set(points)) != len(points):
        raise ExpressionError(f"repeated strand in {node}")
    if points != sorted(points):
        raise ExpressionError(f"groups interleave in {node}")
    if len(points) < 2:
        raise ExpressionError(f"{node} needs at least two points")

    if all(len(g) == 1 for g in groups):
        if len(points) == 2:
            return compile_z(points[0], points[1], node.bar, node.power, n)
        b, start = _gather(points, node.bar, n)
        return _sandwich(b, compile_chain(start, len(points) - 1, node.power, n))

    if node.power % 2:
        raise ExpressionError(f"grouped half twist {node} only defined for even powers")
    b, start = _gather(points, node.bar, n)
    letters: list[Letter] = list(_full_twist_block(n, start, len(points)).letters)
    offset = start
    for g in groups:
        letters.extend(inverse(_full_twist_block(n, offset, len(g))).letters)
        offset += len(g)
    core = power(BraidWord(n, tuple(letters)), node.power // 2)
    return _sandwich(b, core)


def compile(expr: Expr, n: int) -> BraidWord:  # noqa: A001 - mirrors the notation's verb
    """Compile an expression to a braid word on n strands."""
    if isinstance(expr, Z):
        return _compile_z_node(expr, n)
    if isinstance(expr, Chain):
        if isinstance(expr.start, DoubledIndex):
            # consecutive components are not consecutive strands once doubled
            points = tuple((_label_add(expr.start, t),) for t in range(expr.length + 1))
            return _compile_z_node(Z(points, False, expr.power), n)
        return compile_chain(expr.start, expr.length, expr.power, n)
    if isinstance(expr, Gen):
        if not 1 <= expr.index <= n - 1:
            raise ExpressionError(f"generator s{expr.index} out of range for {n} strands")
        return generator(n, expr.index, expr.power)
    if isinstance(expr, Product):
        return product([compile(f, n) for f in expr.factors], n)
    if isinstance(expr, Power):
        return power(compile(expr.base, n), expr.exponent)
    if isinstance(expr, Conjugate):
        b = compile(expr.conjugator, n)
        return product([inverse(b), compile(expr.base, n), b], n)
    if isinstance(expr, Inverse):
        return inverse(compile(expr.sub, n))
    raise TypeError(f"not a half-twist expression: {expr!r}")


# --------------------------------------------------------------------------
# parsing

_TOKEN_RE = re.compile(r"\s*(?:(Zb|Z)|s(\d+)|(\d+)|(\.\.)|([\[\],'^{}()\-]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("Z", m.group(1), start))
        elif m.group(2):
            tokens.append(("GEN", m.group(2), start))
        elif m.group(3):
            tokens.append(("INT", m.group(3), start))
        elif m.group(4):
            tokens.append(("..", "..", start))
        else:
            tokens.append((m.group(5), m.group(5), start))
        pos = m.end()
    tokens.append(("EOF", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, doubled: bool):
        self.toks = _tokenize(text)
        self.i = 0
        self.doubled = doubled

    def peek(self) -> tuple[str, str, int]:
        return self.toks[self.i]

    def take(self, kind: str | None = None) -> tuple[str, str, int]:
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1] or 'end of input'!r}", tok[2])
        self.i += 1
        return tok

    def expr(self, stop: tuple[str, ...]) -> Expr:
        factors = []
        while self.peek()[0] not in stop:
            factors.append(self.term())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def term(self) -> Expr:
        node = self.atom()
        while self.peek()[0] == "^":
            self.take("^")
            kind = self.peek()[0]
            if kind == "{":
                self.take("{")
                conj = self.expr(("}", "EOF"))
                self.take("}")
                node = Conjugate(node, conj)
            else:
                node = _apply_power(node, self.integer())
        return node

    def integer(self) -> int:
        paren = self.peek()[0] == "("
        if paren:
            self.take("(")
        sign = 1
        if self.peek()[0] == "-":
            self.take("-")
            sign = -1
        value = sign * int(self.take("INT")[1])
        if paren:
            self.take(")")
        return value

    def atom(self) -> Expr:
        kind, value, pos = self.peek()
        if kind == "Z":
            self.take()
            return self.z_body(bar=(value == "Zb"))
        if kind == "GEN":
            self.take()
            return Gen(int(value))
        if kind == "(":
            self.take("(")
            inner = self.expr((")", "EOF"))
            self.take(")")
            return inner if not isinstance(inner, Product) else Product(inner.factors)
        raise ParseError(f"unexpected {value or 'end of input'!r}", pos)

    def label(self) -> Label:
        value = int(self.take("INT")[1])
        primed = False
        if self.peek()[0] == "'":
            self.take("'")
            primed = True
        if self.doubled:
            return DoubledIndex(value, primed)
        return value

    def z_body(self, bar: bool) -> Expr:
        self.take("[")
        groups: list[tuple[Label, ...]] = []
        while True:
            first = self.label()
            if self.peek()[0] == "..":
                self.take("..")
                last = self.label()
                lo, hi = _plain(first), _plain(last)
                if hi <= lo:
                    raise ParseError("empty range", self.peek()[2])
                groups.extend((_relabel(first, v),) for v in range(lo, hi + 1))
            else:
                group = [first]
                while self.peek()[0] == "INT":
                    group.append(self.label())
                groups.append(tuple(group))
            if self.peek()[0] == ",":
                self.take(",")
                continue
            break
        self.take("]")
        return Z(tuple(groups), bar, 1)


def _plain(label: Label) -> int:
    return label.base if isinstance(label, DoubledIndex) else label


def _relabel(template: Label, value: int) -> Label:
    return DoubledIndex(value, template.primed) if isinstance(template, DoubledIndex) else value


def _apply_power(node: Expr, e: int) -> Expr:
    if isinstance(node, Z) and node.power == 1:
        return dataclasses.replace(node, power=e)
    if isinstance(node, Gen) and node.power == 1:
        return Gen(node.index, e)
    if isinstance(node, Chain) and node.power == 1:
        return dataclasses.replace(node, power=e)
    if e == -1:
        return Inverse(node)
    return Power(node, e)


def parse(text: str, doubled: bool | None = None) -> Expr:
    """Parse the text grammar described in the module docstring.

    `doubled=None` turns on doubled labels exactly when a prime occurs.
    An empty string parses to the empty product (the identity).
    """
    if doubled is None:
        doubled = "'" in text
    p = _Parser(text, doubled)
    expr = p.expr(("EOF",))
    p.take("EOF")
    return expr


def evaluate(text: str, n: int, doubled: bool | None = None) -> BraidWord:
    """Parse and compile in one step."""
    return compile(parse(text, doubled), n)
