import json

import pytest

from catalan_tableaux.counting import structure_catalan
from catalan_tableaux.tableau import (
    TableauError,
    build_tableau,
    canonical_labels,
    label_grid,
    multiplicity_table,
    render_tableau_text,
    tableau_stats,
    tableau_to_dict,
)
from catalan_tableaux.terms import (
    ResourceLimitExceeded,
    enumerate_iterates,
    make_signature,
    render_polish,
    substitute_at_place,
    variable_places,
)
from conftest import arity_map
from oracles import brute_multiplicity

T2_WORDS = [
    ["VVxxx", "WVxxx"],
    ["VWxxx", "WWxxx"],
    ["VxVxx", "WxVxx"],
    ["VxWxx", "WxWxx"],
]


def test_t1(VW):
    tab = build_tableau(VW, 1)
    assert tab.words() == [["Vxx"], ["Wxx"]]
    assert tab.lines == ((1, 0), (1, 1))


def test_t2_matches_printed_layout(VW):
    tab = build_tableau(VW, 2)
    assert tab.words() == T2_WORDS
    assert label_grid(tab, canonical_labels(tab)) == [[1, 2], [3, 4], [5, 6], [7, 8]]


def test_t3_printed_columns(VW):
    words = build_tableau(VW, 3).words()
    column = lambda c: [row[c] for row in words]
    assert column(0) == ["VVVxxxx", "VVWxxxx", "VVxVxxx", "VVxWxxx", "VVxxVxx", "VVxxWxx"]
    assert column(1) == ["WVVxxxx", "WVWxxxx", "WVxVxxx", "WVxWxxx", "WVxxVxx", "WVxxWxx"]
    assert column(6) == ["VVxxWxx", "VWxxWxx", "VxWVxxx", "VxWWxxx", "VxWxVxx", "VxWxWxx"]
    assert column(7) == ["WVxxWxx", "WWxxWxx", "WxWVxxx", "WxWWxxx", "WxWxVxx", "WxWxWxx"]


def test_t3_labels(VW):
    tab = build_tableau(VW, 3)
    labels = canonical_labels(tab)
    grid = label_grid(tab, labels)
    assert len(labels) == 40
    assert grid[:4] == [list(range(8 * r + 1, 8 * r + 9)) for r in range(4)]
    assert grid[4] == [5, 6, 13, 14, 33, 34, 35, 36]
    assert grid[5] == [7, 8, 15, 16, 37, 38, 39, 40]


def test_single_op_t3(V):
    tab = build_tableau(V, 3)
    assert tab.words() == [["VVVxxxx", "VVxxVxx"], ["VVxVxxx", "VxVVxxx"], ["VVxxVxx", "VxVxVxx"]]
    labels = canonical_labels(tab)
    assert len(labels) == 5
    assert render_polish(labels.term(2), V) == "VVxxVxx"
    assert multiplicity_table(tab, labels).histogram == {1: 4, 2: 1}


def test_multiplicity_examples(VW):
    for n, hist in [(2, {1: 8}), (3, {1: 32, 2: 8})]:
        tab = build_tableau(VW, n)
        assert multiplicity_table(tab, canonical_labels(tab)).histogram == hist


@pytest.mark.parametrize("sig_specs,n,expected", [
    ([("V", 2), ("W", 2)], 3, (6, 8, 48, 40)),
    ([("V", 2), ("W", 2)], 4, (8, 40, 320, 224)),
    ([("V", 2)], 2, (2, 1, 2, 2)),
])
def test_stats_examples(sig_specs, n, expected):
    assert tableau_stats(build_tableau(make_signature(sig_specs), n)).as_tuple() == expected


@pytest.mark.parametrize("lam", [1, 2, 3])
def test_binary_dimensions(lam):
    sig = make_signature([(s, 2) for s in "VWY"[:lam]])
    S = structure_catalan(sig, 6)
    for n in range(1, 5 if lam < 3 else 4):
        st = tableau_stats(build_tableau(sig, n))
        assert st.lines == lam * n
        assert st.columns == S[n - 1]
        assert st.present_cells == lam * n * S[n - 1]
        assert st.distinct == S[n]


@pytest.mark.parametrize("specs,max_n", [
    ([("V", 2)], 6),
    ([("V", 2), ("W", 2)], 5),
    ([("V", 2), ("W", 2), ("Y", 2)], 4),
    ([("V", 2), ("U", 3)], 4),
])
def test_surjectivity_and_line_injectivity(specs, max_n):
    sig = make_signature(specs)
    for n in range(1, max_n + 1):
        tab = build_tableau(sig, n)
        assert set(tab.present_cells()) == set(enumerate_iterates(sig, n))
        for row in tab.cells:
            present = [t for t in row if t is not None]
            assert len(present) == len(set(present))


def test_cell_rule_and_absent_cells(VU):
    tab = build_tableau(VU, 3)
    for (p, g), row in zip(tab.lines, tab.cells):
        for parent, cell in zip(tab.columns, row):
            if p > variable_places(parent):
                assert cell is None
            else:
                assert cell == substitute_at_place(parent, p, g, VU)
    assert any(cell is None for row in tab.cells for cell in row)


def test_line_order_is_place_major(VWY):
    tab = build_tableau(VWY, 2)
    assert tab.lines == ((1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2))


@pytest.mark.parametrize("lam", [1, 2, 3])
def test_pigeonhole(lam):
    sig = make_signature([(s, 2) for s in "VWY"[:lam]])
    for n in range(3, 6 if lam < 3 else 5):
        st = tableau_stats(build_tableau(sig, n))
        assert st.present_cells > st.distinct
        assert n * (n + 1) > 2 * (2 * n - 1)
    # and equality of cells and iterates for n < 3
    for n in (1, 2):
        st = tableau_stats(build_tableau(sig, n))
        assert st.present_cells == st.distinct


@pytest.mark.parametrize("specs,n", [([("V", 2)], 5), ([("V", 2), ("W", 2)], 4), ([("V", 2), ("U", 3)], 3)])
def test_histogram_mass_and_brute_multiplicity(specs, n):
    sig = make_signature(specs)
    tab = build_tableau(sig, n)
    labels = canonical_labels(tab)
    mt = multiplicity_table(tab, labels)
    st = tableau_stats(tab)
    assert sum(k * c for k, c in mt.histogram.items()) == st.present_cells
    assert sum(mt.histogram.values()) == st.distinct
    arity = arity_map(sig)
    for lab, m in mt.per_label.items():
        assert m == brute_multiplicity(render_polish(labels.term(lab), sig), arity)


def test_max_multiplicity_vs_floor_bound(V, VW):
    # observed maxima; the (n+1)//2 range is not assumed anywhere
    for sig, n in [(V, 5), (VW, 5)]:
        tab = build_tableau(sig, n)
        assert multiplicity_table(tab, canonical_labels(tab)).max_multiplicity() == (n + 1) // 2


def test_labels_deterministic(VW):
    a = canonical_labels(build_tableau(VW, 4))
    b = canonical_labels(build_tableau(VW, 4))
    assert a.to_term == b.to_term


def test_rejects_unary_and_small_n():
    with pytest.raises(TableauError):
        build_tableau(make_signature([("P", 1), ("V", 2)]), 2)
    with pytest.raises(TableauError):
        build_tableau(make_signature([("V", 2)]), 0)


def test_cap(VW):
    with pytest.raises(ResourceLimitExceeded):
        build_tableau(VW, 5, cap=1000)


def test_json_export(VW):
    d = tableau_to_dict(build_tableau(VW, 3))
    json.dumps(d)
    assert d["n"] == 3
    assert d["lines"][4] == [3, "V"]
    assert d["columns"][:2] == ["VVxxx", "WVxxx"]
    assert d["cells"][4] == [5, 6, 13, 14, 33, 34, 35, 36]
    assert d["histogram"] == {"1": 32, "2": 8}


def test_text_render(VW):
    text = render_tableau_text(build_tableau(VW, 2))
    for row in T2_WORDS:
        for w in row:
            assert w in text
    assert "histogram 1:8" in text
