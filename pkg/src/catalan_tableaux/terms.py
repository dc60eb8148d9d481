"""Signatures, iterates and their Polish (prefix) words.

An iterate is a plane tree whose internal nodes are labelled by operations of
a :class:`Signature` and whose leaves are the variable ``x`` (or, for binary
projections only, the constant ``c``).  Words are the prefix renderings of
such trees, e.g. ``"VxWxx"`` for ``V(x, W(x, x))``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

VARIABLE = "x"
CONSTANT = "c"
RESERVED = frozenset({VARIABLE, CONSTANT})

DEFAULT_ENUMERATION_CAP = 10**7


class SignatureError(ValueError):
    """Invalid operation list."""


class ParseError(ValueError):
    """Base class for malformed Polish words."""


class UnknownSymbol(ParseError):
    pass


class Truncated(ParseError):
    pass


class TrailingInput(ParseError):
    pass


class PlaceOutOfRange(IndexError):
    pass


class ConstantPresent(ValueError):
    pass


class ResourceLimitExceeded(RuntimeError):
    """A predicted output size is larger than the configured cap."""

    def __init__(self, what: str, predicted: int, cap: int):
        super().__init__(f"{what}: predicted size {predicted} exceeds cap {cap}")
        self.predicted = predicted
        self.cap = cap


@dataclass(frozen=True)
class Operation:
    symbol: str
    arity: int


@dataclass(frozen=True)
class Signature:
    """Ordered, validated list of operations.

    Order matters: it fixes the enumeration order and the line order of
    tableaux.  Build instances with :func:`make_signature`.
    """

    ops: tuple[Operation, ...]

    def __post_init__(self):
        if not self.ops:
            raise SignatureError("signature needs at least one operation")
        seen = set()
        for op in self.ops:
            if not isinstance(op.symbol, str) or len(op.symbol) != 1 or not op.symbol.isprintable() or op.symbol.isspace():
                raise SignatureError(f"symbol must be a single printable character, got {op.symbol!r}")
            if op.symbol in RESERVED:
                raise SignatureError(f"symbol {op.symbol!r} is reserved for leaves")
            if op.symbol in seen:
                raise SignatureError(f"duplicate symbol {op.symbol!r}")
            if not isinstance(op.arity, int) or op.arity < 1:
                raise SignatureError(f"arity of {op.symbol!r} must be >= 1, got {op.arity!r}")
            seen.add(op.symbol)

    def __len__(self) -> int:
        return len(self.ops)

    @property
    def symbols(self) -> tuple[str, ...]:
        return tuple(op.symbol for op in self.ops)

    @property
    def arities(self) -> tuple[int, ...]:
        return tuple(op.arity for op in self.ops)

    def index(self, symbol: str) -> int:
        for i, op in enumerate(self.ops):
            if op.symbol == symbol:
                return i
        raise KeyError(symbol)

    def is_binary(self) -> bool:
        return all(a == 2 for a in self.arities)

    def spec_string(self) -> str:
        return ",".join(f"{op.symbol}:{op.arity}" for op in self.ops)


def make_signature(specs: Iterable[tuple[str, int]]) -> Signature:
    """Build a signature from ``(symbol, arity)`` pairs, keeping their order.

    >>> make_signature([("V", 2), ("W", 2)]).symbols
    ('V', 'W')
    """
    return Signature(tuple(Operation(s, a) for s, a in specs))


def parse_signature(text: str) -> Signature:
    """Parse the ``SYM:ARITY[,SYM:ARITY...]`` form, e.g. ``"V:2,W:2"``."""
    specs = []
    for item in text.split(","):
        item = item.strip()
        sym, sep, arity = item.partition(":")
        if not sep or not arity.strip().lstrip("-").isdigit():
            raise SignatureError(f"expected SYM:ARITY, got {item!r}")
        specs.append((sym.strip(), int(arity)))
    return make_signature(specs)


@dataclass(frozen=True)
class VariableLeaf:
    def __repr__(self) -> str:
        return "x"


@dataclass(frozen=True)
class ConstantLeaf:
    def __repr__(self) -> str:
        return "c"


@dataclass(frozen=True)
class Application:
    op: int
    children: tuple["Term", ...]

    def __repr__(self) -> str:
        return f"Application({self.op}, {list(self.children)!r})"


Term = Union[VariableLeaf, ConstantLeaf, Application]

X = VariableLeaf()
C = ConstantLeaf()


def generator(op: int, sig: Signature) -> Application:
    """The order-1 iterate ``O(x, ..., x)``."""
    return Application(op, (X,) * sig.ops[op].arity)


def parse_polish(word: str, sig: Signature) -> Term:
    """Decode a prefix word into its unique term.

    >>> sig = make_signature([("V", 2), ("W", 2)])
    >>> render_polish(parse_polish("VxWxx", sig), sig)
    'VxWxx'
    """
    if not word:
        raise Truncated("empty word")
    arity = {op.symbol: (i, op.arity) for i, op in enumerate(sig.ops)}
    pos = 0

    def read() -> Term:
        nonlocal pos
        if pos >= len(word):
            raise Truncated(f"word {word!r} ends before all arguments are supplied")
        ch = word[pos]
        pos += 1
        if ch == VARIABLE:
            return X
        if ch == CONSTANT:
            return C
        if ch not in arity:
            raise UnknownSymbol(f"unknown symbol {ch!r} at position {pos - 1} of {word!r}")
        i, a = arity[ch]
        return Application(i, tuple(read() for _ in range(a)))

    # recursion depth equals term depth
    term = read()
    if pos != len(word):
        raise TrailingInput(f"unexpected {word[pos:]!r} after a complete term")
    return term


def render_polish(term: Term, sig: Signature) -> str:
    out: list[str] = []
    stack = [term]
    while stack:
        t = stack.pop()
        if isinstance(t, Application):
            out.append(sig.ops[t.op].symbol)
            stack.extend(reversed(t.children))
        elif isinstance(t, ConstantLeaf):
            out.append(CONSTANT)
        else:
            out.append(VARIABLE)
    return "".join(out)


def _nodes(term: Term) -> Iterator[Term]:
    stack = [term]
    while stack:
        t = stack.pop()
        yield t
        if isinstance(t, Application):
            stack.extend(reversed(t.children))


def order_of(term: Term) -> int:
    """Number of operation applications."""
    return sum(isinstance(t, Application) for t in _nodes(term))


def operation_counts(term: Term, sig: Signature) -> list[int]:
    """How often each operation occurs, in signature order."""
    counts = [0] * len(sig)
    for t in _nodes(term):
        if isinstance(t, Application):
            counts[t.op] += 1
    return counts


def variable_places(term: Term) -> int:
    """Count of variable leaves; the term must be constant-free."""
    places = 0
    for t in _nodes(term):
        if isinstance(t, ConstantLeaf):
            raise ConstantPresent("variable places are only defined for constant-free terms")
        places += isinstance(t, VariableLeaf)
    return places


def place_formula(counts: Sequence[int], sig: Signature) -> int:
    """Leaf count predicted from operation counts: sum((arity - 1) * p) + 1."""
    return sum((a - 1) * p for a, p in zip(sig.arities, counts)) + 1


def substitute_at_place(term: Term, place: int, op: int, sig: Signature) -> Term:
    """Replace the ``place``-th variable leaf (1-based, prefix order) by ``op(x, ..., x)``.

    >>> sig = make_signature([("V", 2), ("W", 2)])
    >>> t = substitute_at_place(parse_polish("VxWxx", sig), 2, 0, sig)
    >>> render_polish(t, sig)
    'VxWVxxx'
    """
    if place < 1:
        raise PlaceOutOfRange(f"place {place} must be >= 1")
    gen = generator(op, sig)
    remaining = place

    def walk(t: Term) -> Term:
        nonlocal remaining
        if isinstance(t, VariableLeaf):
            remaining -= 1
            return gen if remaining == 0 else t
        if isinstance(t, ConstantLeaf):
            return t
        new_children = []
        for i, child in enumerate(t.children):
            new_children.append(walk(child))
            if remaining <= 0:
                return Application(t.op, tuple(new_children) + t.children[i + 1:])
        return t

    result = walk(term)
    if remaining > 0:
        raise PlaceOutOfRange(f"place {place} exceeds the {place - remaining} variable places of the term")
    return result


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` parts, lexicographic."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_iterates(sig: Signature, n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> list[Term]:
    """All constant-free iterates of order ``n``, each exactly once.

    Listing is root-major: root operation in signature order, then the tuple
    of child orders lexicographically, then the children recursively.
    """
    if n < 0:
        raise ValueError("order must be >= 0")
    from .counting import structure_catalan

    predicted = structure_catalan(sig, n)[n]
    if predicted > cap:
        raise ResourceLimitExceeded("enumerate_iterates", predicted, cap)

    levels: list[list[Term]] = [[X]]
    for m in range(1, n + 1):
        level: list[Term] = []
        for i, op in enumerate(sig.ops):
            for orders in compositions(m - 1, op.arity):
                for children in itertools.product(*(levels[k] for k in orders)):
                    level.append(Application(i, children))
        levels.append(level)
    return levels[n]
