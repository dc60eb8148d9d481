"""Incidence matrix of formally reducible identities and its counting law.

Two n-iterates J_i, J_j give a formally reducible identity J_i = J_j when they
share a tableau line, i.e. both come from one and the same substitution
applied to (n-1)-iterates.  Rows are stored as Python ints used as bitsets:
bit ``j - 1`` of row ``i`` is delta(J_i, J_j).
"""
from __future__ import annotations

import csv
import io
import json
from itertools import combinations
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .counting import binomial, structure_catalan
from .tableau import (
    LabelMap,
    MultiplicityTable,
    Tableau,
    build_tableau,
    canonical_labels,
    label_grid,
    multiplicity_table,
)
from .terms import ResourceLimitExceeded, Signature

DEFAULT_MATRIX_CAP = 10**8


@dataclass(frozen=True)
class IncidenceMatrix:
    size: int
    rows: tuple[int, ...]
    row_sums: tuple[int, ...]

    def __getitem__(self, ij: tuple[int, int]) -> bool:
        """1-based access: ``mat[i, j]``."""
        i, j = ij
        return bool(self.rows[i - 1] >> (j - 1) & 1)

    def ones(self, i: int) -> list[int]:
        """Column labels of the 1-entries of row ``i``."""
        row = self.rows[i - 1]
        return [j + 1 for j in range(self.size) if row >> j & 1]

    def is_symmetric(self) -> bool:
        return all(self[i, j] == self[j, i] for i in range(1, self.size + 1) for j in self.ones(i))

    def has_full_diagonal(self) -> bool:
        return all(self[i, i] for i in range(1, self.size + 1))

    def to_dense(self) -> list[list[int]]:
        return [[row >> j & 1 for j in range(self.size)] for row in self.rows]


def line_label_sets(tab: Tableau, labels: LabelMap) -> list[int]:
    """Bitset of labels occurring on each tableau line."""
    masks = []
    for row in label_grid(tab, labels):
        mask = 0
        for lab in row:
            if lab is not None:
                mask |= 1 << (lab - 1)
        masks.append(mask)
    return masks


def incidence_matrix(tab: Tableau, labels: LabelMap, cap: int = DEFAULT_MATRIX_CAP) -> IncidenceMatrix:
    size = len(labels)
    if size * size > cap:
        raise ResourceLimitExceeded(f"incidence matrix of T_{tab.n}", size * size, cap)
    rows = [0] * size
    for row, mask in zip(label_grid(tab, labels), line_label_sets(tab, labels)):
        for lab in row:
            if lab is not None:
                rows[lab - 1] |= mask
    return IncidenceMatrix(size, tuple(rows), tuple(r.bit_count() for r in rows))


def reducible_count(mat: IncidenceMatrix) -> int:
    """I_n: number of 1-entries, ordered pairs with the diagonal included."""
    return sum(mat.row_sums)


def theorem_row_sum(multiplicity: int, n: int, sig: Signature) -> int:
    """Inclusion-exclusion row sum sum_{nu=1}^{M} (-1)^(nu-1) C(M, nu) S_{n-nu}.

    S here is the Catalan sequence of ``sig`` itself, so for two binary
    operations S_k = 2**k C_k.  Terms with ``nu > n`` vanish.
    """
    if multiplicity < 1 or n < 1:
        raise ValueError("need multiplicity >= 1 and n >= 1")
    S = structure_catalan(sig, n)
    return sum(
        (-1) ** (nu - 1) * binomial(multiplicity, nu) * S[n - nu]
        for nu in range(1, min(multiplicity, n) + 1)
    )


@dataclass(frozen=True)
class RowCheck:
    label: int
    multiplicity: int
    observed: int
    predicted: int

    @property
    def match(self) -> bool:
        return self.observed == self.predicted


@dataclass(frozen=True)
class TheoremReport:
    sig: Signature
    n: int
    rows: tuple[RowCheck, ...]
    histogram: dict
    observed_I: int
    predicted_I: int
    structure_count: int

    @property
    def all_rows_match(self) -> bool:
        return all(r.match for r in self.rows)

    @property
    def ok(self) -> bool:
        return self.all_rows_match and self.observed_I == self.predicted_I

    @property
    def frequency(self) -> Fraction:
        return Fraction(self.observed_I, self.structure_count**2)

    def mismatches(self) -> list[RowCheck]:
        return [r for r in self.rows if not r.match]

    def to_dict(self) -> dict:
        freq = self.frequency
        return {
            "ops": [[op.symbol, op.arity] for op in self.sig.ops],
            "n": self.n,
            "S_n": str(self.structure_count),
            "I_n": self.observed_I,
            "I_n_predicted": self.predicted_I,
            "allRowsMatch": self.all_rows_match,
            "ok": self.ok,
            "histogram": {str(k): v for k, v in self.histogram.items()},
            "frequency": {"num": freq.numerator, "den": freq.denominator, "decimal": float(freq)},
            "rows": [
                {"label": r.label, "M": r.multiplicity, "observed": r.observed,
                 "predicted": r.predicted, "match": r.match}
                for r in self.rows
            ],
        }


def histogram_formula(histogram: dict, n: int, sig: Signature) -> int:
    return sum(count * theorem_row_sum(k, n, sig) for k, count in histogram.items())


def reducible_count_via_histogram(sig: Signature, n: int, cap: Optional[int] = None) -> int:
    """I_n from the multiplicity histogram alone, without building the matrix."""
    tab = build_tableau(sig, n) if cap is None else build_tableau(sig, n, cap=cap)
    labels = canonical_labels(tab)
    return histogram_formula(multiplicity_table(tab, labels).histogram, n, sig)


@dataclass(frozen=True)
class Analysis:
    """Everything derived from one tableau, computed once."""

    tableau: Tableau
    labels: LabelMap
    multiplicities: MultiplicityTable
    matrix: IncidenceMatrix


def analyse(sig: Signature, n: int, cell_cap: Optional[int] = None,
            matrix_cap: int = DEFAULT_MATRIX_CAP) -> Analysis:
    tab = build_tableau(sig, n) if cell_cap is None else build_tableau(sig, n, cap=cell_cap)
    labels = canonical_labels(tab)
    return Analysis(tab, labels, multiplicity_table(tab, labels), incidence_matrix(tab, labels, cap=matrix_cap))


def verify_theorem(sig: Signature, n: int, cell_cap: Optional[int] = None,
                   matrix_cap: int = DEFAULT_MATRIX_CAP) -> TheoremReport:
    if n < 2:
        raise ValueError("theorem verification needs n >= 2")
    an = analyse(sig, n, cell_cap, matrix_cap)
    rows = tuple(
        RowCheck(lab, m, an.matrix.row_sums[lab - 1], theorem_row_sum(m, n, sig))
        for lab, m in an.multiplicities.per_label.items()
    )
    return TheoremReport(
        sig=sig,
        n=n,
        rows=rows,
        histogram=an.multiplicities.histogram,
        observed_I=reducible_count(an.matrix),
        predicted_I=histogram_formula(an.multiplicities.histogram, n, sig),
        structure_count=structure_catalan(sig, n)[n],
    )


def frequency(mat: IncidenceMatrix) -> Fraction:
    return Fraction(reducible_count(mat), mat.size**2)


def line_intersections(tab: Tableau, labels: LabelMap, nu: int) -> set[int]:
    """Sizes of intersections of ``nu`` distinct lines that share a common label."""
    masks = line_label_sets(tab, labels)
    sizes = set()
    for combo in combinations(range(len(masks)), nu):
        common = masks[combo[0]]
        for k in combo[1:]:
            common &= masks[k]
        if common:
            sizes.add(common.bit_count())
    return sizes


# -- exports ---------------------------------------------------------------

def matrix_to_dict(mat: IncidenceMatrix) -> dict:
    freq = frequency(mat)
    return {
        "size": mat.size,
        "rows": [mat.ones(i) for i in range(1, mat.size + 1)],
        "rowSums": list(mat.row_sums),
        "I_n": reducible_count(mat),
        "frequency": {"num": freq.numerator, "den": freq.denominator},
    }


def matrix_to_json(mat: IncidenceMatrix) -> str:
    return json.dumps(matrix_to_dict(mat))


def matrix_to_csv(mat: IncidenceMatrix) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in mat.to_dense():
        writer.writerow(row)
    return buf.getvalue()


def render_exhibit(mat: IncidenceMatrix, multiplicities: MultiplicityTable) -> str:
    """Text matrix in the printed layout: blanks for 0, ``1`` for incidence,
    then the row sum and the multiplicity of each row."""
    w = len(str(mat.size))
    corner = "i\\j"
    header = f"{corner:>{w + 1}} |" + "".join(f"{j:>{w + 1}}" for j in range(1, mat.size + 1))
    lines = [header + " | " + f"{'sum':>4} {'M':>3}"]
    lines.append("-" * len(lines[0]))
    for i in range(1, mat.size + 1):
        body = "".join(f"{'1' if mat[i, j] else ' ':>{w + 1}}" for j in range(1, mat.size + 1))
        lines.append(f"{i:>{w + 1}} |{body} | {mat.row_sums[i - 1]:>4} {multiplicities.per_label[i]:>3}")
    lines.append("")
    lines.append(f"I = {reducible_count(mat)}   frequency = {frequency(mat)}")
    return "\n".join(lines) + "\n"
