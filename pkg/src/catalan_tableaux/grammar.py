"""Iterates seen as the words of a context-free language.

The language has start word ``x`` and one production per operation: from any
words w_1 .. w_a already in the language, ``O w_1 ... w_a`` is in it too.
Words are generated level by level, a level being the number of operation
symbols in the word.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .counting import structure_catalan
from .terms import (
    DEFAULT_ENUMERATION_CAP,
    VARIABLE,
    ResourceLimitExceeded,
    Signature,
    compositions,
    enumerate_iterates,
    render_polish,
)


@dataclass(frozen=True)
class Production:
    symbol: str
    width: int

    def apply(self, words) -> str:
        return self.symbol + "".join(words)


@dataclass(frozen=True)
class IterateGrammar:
    start: str
    productions: tuple[Production, ...]


def grammar_from_signature(sig: Signature) -> IterateGrammar:
    return IterateGrammar(VARIABLE, tuple(Production(op.symbol, op.arity) for op in sig.ops))


def generate_language(gr: IterateGrammar, max_order: int,
                      cap: int = DEFAULT_ENUMERATION_CAP) -> dict[int, set[str]]:
    """Levels 0..max_order of the language as sets of words."""
    if max_order < 0:
        raise ValueError("max_order must be >= 0")
    levels: dict[int, set[str]] = {0: {gr.start}}
    total = 1
    for m in range(1, max_order + 1):
        level: set[str] = set()
        for prod in gr.productions:
            for orders in compositions(m - 1, prod.width):
                for args in itertools.product(*(levels[k] for k in orders)):
                    level.add(prod.apply(args))
                    if len(level) + total > cap:
                        raise ResourceLimitExceeded("generate_language", len(level) + total, cap)
        levels[m] = level
        total += len(level)
    return levels


@dataclass(frozen=True)
class LanguageReport:
    n: int
    language_size: int
    enumeration_size: int
    expected_size: int
    only_in_language: tuple[str, ...]
    only_in_enumeration: tuple[str, ...]

    @property
    def equal(self) -> bool:
        return not self.only_in_language and not self.only_in_enumeration

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "equal": self.equal,
            "languageSize": self.language_size,
            "enumerationSize": self.enumeration_size,
            "expectedSize": str(self.expected_size),
            "onlyInLanguage": list(self.only_in_language),
            "onlyInEnumeration": list(self.only_in_enumeration),
        }


def language_equals_enumeration(sig: Signature, n: int) -> LanguageReport:
    language = generate_language(grammar_from_signature(sig), n)[n]
    enumerated = {render_polish(t, sig) for t in enumerate_iterates(sig, n)}
    return LanguageReport(
        n=n,
        language_size=len(language),
        enumeration_size=len(enumerated),
        expected_size=structure_catalan(sig, n)[n],
        only_in_language=tuple(sorted(language - enumerated)),
        only_in_enumeration=tuple(sorted(enumerated - language)),
    )
