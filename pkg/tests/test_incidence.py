import csv
import io
import json
from fractions import Fraction

import pytest

from catalan_tableaux.counting import structure_catalan
from catalan_tableaux.incidence import (
    analyse,
    frequency,
    incidence_matrix,
    line_intersections,
    matrix_to_csv,
    matrix_to_dict,
    reducible_count,
    reducible_count_via_histogram,
    render_exhibit,
    theorem_row_sum,
    verify_theorem,
)
from catalan_tableaux.tableau import build_tableau, canonical_labels
from catalan_tableaux.terms import ResourceLimitExceeded, make_signature, render_polish
from conftest import arity_map
from oracles import brute_incidence


def matrix_for(sig, n):
    tab = build_tableau(sig, n)
    labels = canonical_labels(tab)
    return incidence_matrix(tab, labels), labels


def test_exhibit_rows(VW):
    mat, _ = matrix_for(VW, 3)
    assert mat.ones(1) == list(range(1, 9))
    assert mat.ones(5) == list(range(1, 9)) + [13, 14, 33, 34, 35, 36]
    assert mat.row_sums[4] == 14
    assert mat.ones(33) == [5, 6, 13, 14, 33, 34, 35, 36]


def test_reducible_count_examples(VW, V):
    assert reducible_count(matrix_for(VW, 3)[0]) == 368
    assert reducible_count(matrix_for(VW, 2)[0]) == 16
    mat, _ = matrix_for(V, 3)
    assert reducible_count(mat) == 11
    assert mat.row_sums == (2, 3, 2, 2, 2)


def test_theorem_row_sum_examples(VW, V):
    assert theorem_row_sum(1, 3, VW) == 8
    assert theorem_row_sum(2, 3, VW) == 14
    assert theorem_row_sum(2, 3, V) == 3


def test_verify_worked_example(VW):
    rep = verify_theorem(VW, 3)
    assert rep.ok and len(rep.rows) == 40
    assert rep.observed_I == 368
    assert rep.structure_count**2 == 1600
    assert rep.frequency == Fraction(368, 1600) == Fraction(23, 100)


def test_verify_n2(VW):
    rep = verify_theorem(VW, 2)
    assert rep.ok
    assert {r.multiplicity for r in rep.rows} == {1}
    assert {r.observed for r in rep.rows} == {structure_catalan(VW, 1)[1]}


@pytest.mark.parametrize("specs,ns", [
    ([("V", 2)], [2, 3, 4, 5]),
    ([("V", 2), ("W", 2)], [2, 3, 4]),
    ([("V", 2), ("W", 2), ("Y", 2)], [2, 3, 4]),
])
def test_theorem_equality(specs, ns):
    sig = make_signature(specs)
    for n in ns:
        rep = verify_theorem(sig, n)
        assert rep.all_rows_match, rep.mismatches()[:3]
        assert rep.observed_I == rep.predicted_I == reducible_count_via_histogram(sig, n)


def test_histogram_route_examples(VW, V):
    assert reducible_count_via_histogram(VW, 3) == 32 * 8 + 8 * 14 == 368
    assert reducible_count_via_histogram(V, 3) == 4 * 2 + 1 * 3 == 11
    assert reducible_count_via_histogram(VW, 4) == reducible_count(matrix_for(VW, 4)[0])


@pytest.mark.parametrize("specs,n", [
    ([("V", 2)], 3),
    ([("V", 2)], 4),
    ([("V", 2), ("W", 2)], 2),
    ([("V", 2), ("W", 2)], 3),
    ([("V", 2), ("U", 3)], 2),
    ([("V", 2), ("U", 3)], 3),
])
def test_matrix_matches_brute_force(specs, n):
    sig = make_signature(specs)
    mat, labels = matrix_for(sig, n)
    words = [render_polish(t, sig) for t in labels.to_term]
    assert mat.to_dense() == brute_incidence(words, arity_map(sig))


@pytest.mark.parametrize("specs,n", [([("V", 2)], 5), ([("V", 2), ("W", 2)], 4), ([("V", 2), ("U", 3)], 3)])
def test_symmetric_reflexive(specs, n):
    mat, _ = matrix_for(make_signature(specs), n)
    assert mat.is_symmetric()
    assert mat.has_full_diagonal()
    assert mat.row_sums == tuple(sum(r) for r in mat.to_dense())


@pytest.mark.parametrize("specs,max_n", [
    ([("V", 2)], 5),
    ([("V", 2), ("W", 2)], 4),
    ([("V", 2), ("W", 2), ("Y", 2)], 3),
])
def test_intersection_law(specs, max_n):
    sig = make_signature(specs)
    for n in range(2, max_n + 1):
        tab = build_tableau(sig, n)
        labels = canonical_labels(tab)
        S = structure_catalan(sig, n)
        for nu in range(1, n + 1):
            sizes = line_intersections(tab, labels, nu)
            assert sizes <= {S[n - nu]}


def test_mixed_arity_theorem_not_claimed(VU):
    # the counting law is a statement about binary operations; with a ternary
    # operation present the row sums are not determined by multiplicity alone
    rep = verify_theorem(VU, 3)
    assert not rep.all_rows_match


def test_frequency_table_recorded(VW):
    freqs = {n: verify_theorem(VW, n).frequency for n in (2, 3, 4)}
    assert freqs == {2: Fraction(1, 4), 3: Fraction(23, 100), 4: Fraction(47, 196)}


def test_matrix_cap(VW):
    tab = build_tableau(VW, 3)
    with pytest.raises(ResourceLimitExceeded):
        incidence_matrix(tab, canonical_labels(tab), cap=100)


def test_exports(VW):
    mat, _ = matrix_for(VW, 3)
    d = matrix_to_dict(mat)
    json.dumps(d)
    assert d["size"] == 40 and d["I_n"] == 368
    assert d["frequency"] == {"num": 23, "den": 100}
    assert d["rows"][4] == [1, 2, 3, 4, 5, 6, 7, 8, 13, 14, 33, 34, 35, 36]
    rows = list(csv.reader(io.StringIO(matrix_to_csv(mat))))
    assert len(rows) == 40 and all(len(r) == 40 for r in rows)
    assert sum(int(v) for r in rows for v in r) == 368
    assert frequency(mat) == Fraction(23, 100)


def test_exhibit_text(VW):
    an = analyse(VW, 3)
    text = render_exhibit(an.matrix, an.multiplicities)
    body = [line for line in text.splitlines()[2:] if "|" in line]
    assert len(body) == 40
    cells = [line.split("|")[1] for line in body]
    assert sum(c.count("1") for c in cells) == 368
    tails = [line.split("|")[2].split() for line in body]
    assert {t[0] for t in tails} == {"8", "14"}
    assert {t[1] for t in tails} == {"1", "2"}
