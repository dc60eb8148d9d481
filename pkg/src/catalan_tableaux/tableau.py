"""Substitution tableaux T_n, their canonical labels and multiplicities.

Columns of T_n are the distinct (n-1)-iterates in label order of T_{n-1};
lines are (place, generator) pairs, place-major then signature order; the
cell at line (p, g) and column c is the parent c with ``g(x, ..., x)``
substituted at its p-th variable place.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from .counting import structure_catalan
from .terms import (
    X,
    ResourceLimitExceeded,
    Signature,
    Term,
    render_polish,
    substitute_at_place,
    variable_places,
)

DEFAULT_CELL_CAP = 10**7


class TableauError(ValueError):
    pass


@dataclass(frozen=True)
class Tableau:
    sig: Signature
    n: int
    columns: tuple[Term, ...]
    lines: tuple[tuple[int, int], ...]
    # cells[line][column]; None where the place does not exist in the parent
    cells: tuple[tuple[Optional[Term], ...], ...]

    def cell(self, line: int, column: int) -> Optional[Term]:
        return self.cells[line][column]

    def present_cells(self):
        for row in self.cells:
            for t in row:
                if t is not None:
                    yield t

    def words(self) -> list[list[Optional[str]]]:
        return [[None if t is None else render_polish(t, self.sig) for t in row] for row in self.cells]


@dataclass(frozen=True)
class LabelMap:
    to_term: tuple[Term, ...]
    to_label: dict = field(compare=False)

    def __len__(self) -> int:
        return len(self.to_term)

    def label(self, term: Term) -> int:
        return self.to_label[term]

    def term(self, label: int) -> Term:
        return self.to_term[label - 1]


@dataclass(frozen=True)
class MultiplicityTable:
    per_label: dict
    histogram: dict

    def max_multiplicity(self) -> int:
        return max(self.histogram)


@dataclass(frozen=True)
class TableauStats:
    lines: int
    columns: int
    present_cells: int
    distinct: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.lines, self.columns, self.present_cells, self.distinct)


def _check_analysable(sig: Signature) -> None:
    low = [op.symbol for op in sig.ops if op.arity < 2]
    if low:
        raise TableauError(f"tableau analysis needs arities >= 2; offending symbols: {low}")


def predicted_cells(sig: Signature, n: int) -> int:
    """Upper bound on the cell count of T_n (exact for uniform arity)."""
    parents = structure_catalan(sig, n - 1)[n - 1]
    max_places = (max(sig.arities) - 1) * (n - 1) + 1
    return parents * max_places * len(sig)


def _layer(sig: Signature, parents: tuple[Term, ...], n: int) -> Tableau:
    places = [variable_places(t) for t in parents]
    max_place = max(places)
    lines = tuple((p, g) for p in range(1, max_place + 1) for g in range(len(sig)))
    cells = tuple(
        tuple(
            substitute_at_place(parent, p, g, sig) if p <= k else None
            for parent, k in zip(parents, places)
        )
        for p, g in lines
    )
    return Tableau(sig, n, parents, lines, cells)


def build_tableau(sig: Signature, n: int, cap: int = DEFAULT_CELL_CAP) -> Tableau:
    """Build T_n by iterating from T_1 (single column ``x``).

    >>> from catalan_tableaux.terms import make_signature
    >>> tab = build_tableau(make_signature([("V", 2), ("W", 2)]), 2)
    >>> tab.words()[0]
    ['VVxxx', 'WVxxx']
    """
    if n < 1:
        raise TableauError("tableau order must be >= 1")
    _check_analysable(sig)
    predicted = predicted_cells(sig, n)
    if predicted > cap:
        raise ResourceLimitExceeded(f"tableau T_{n}", predicted, cap)

    tab = _layer(sig, (X,), 1)
    for m in range(2, n + 1):
        tab = _layer(sig, canonical_labels(tab).to_term, m)
    return tab


def canonical_labels(tab: Tableau) -> LabelMap:
    """Number distinct cells 1, 2, ... in order of first appearance, row by row."""
    to_label: dict = {}
    order: list[Term] = []
    for t in tab.present_cells():
        if t not in to_label:
            order.append(t)
            to_label[t] = len(order)
    return LabelMap(tuple(order), to_label)


def label_grid(tab: Tableau, labels: LabelMap) -> list[list[Optional[int]]]:
    return [[None if t is None else labels.label(t) for t in row] for row in tab.cells]


def multiplicity_table(tab: Tableau, labels: LabelMap) -> MultiplicityTable:
    counts = Counter(labels.label(t) for t in tab.present_cells())
    per_label = {lab: counts[lab] for lab in range(1, len(labels) + 1)}
    histogram = dict(sorted(Counter(per_label.values()).items()))
    return MultiplicityTable(per_label, histogram)


def tableau_stats(tab: Tableau) -> TableauStats:
    present = sum(1 for _ in tab.present_cells())
    distinct = len(set(tab.present_cells()))
    return TableauStats(len(tab.lines), len(tab.columns), present, distinct)


def tableau_to_dict(tab: Tableau, labels: Optional[LabelMap] = None) -> dict:
    labels = labels or canonical_labels(tab)
    mult = multiplicity_table(tab, labels)
    return {
        "n": tab.n,
        "ops": [[op.symbol, op.arity] for op in tab.sig.ops],
        "lines": [[p, tab.sig.ops[g].symbol] for p, g in tab.lines],
        "columns": [render_polish(t, tab.sig) for t in tab.columns],
        "cells": label_grid(tab, labels),
        "labels": [render_polish(t, tab.sig) for t in labels.to_term],
        "histogram": {str(k): v for k, v in mult.histogram.items()},
    }


def tableau_to_json(tab: Tableau, labels: Optional[LabelMap] = None) -> str:
    return json.dumps(tableau_to_dict(tab, labels), indent=2)


def render_tableau_text(tab: Tableau, labels: Optional[LabelMap] = None) -> str:
    """Word grid followed by the numbered grid, as in the printed tableaux."""
    labels = labels or canonical_labels(tab)
    words = tab.words()
    width = max(len(w) for row in words for w in row if w is not None)
    lab_width = len(str(len(labels)))
    out = [f"T_{tab.n}  ({tab.sig.spec_string()})", ""]
    for (p, g), row in zip(tab.lines, words):
        head = f"{p:>3}{tab.sig.ops[g].symbol} |"
        out.append(head + " ".join(f"{w or '-':<{width}}" for w in row).rstrip())
    out.append("")
    for (p, g), row in zip(tab.lines, label_grid(tab, labels)):
        head = f"{p:>3}{tab.sig.ops[g].symbol} |"
        out.append(head + " ".join(f"{'-' if v is None else v:>{lab_width}}" for v in row))
    mult = multiplicity_table(tab, labels)
    out.append("")
    out.append("histogram " + " ".join(f"{k}:{v}" for k, v in mult.histogram.items()))
    return "\n".join(out) + "\n"
