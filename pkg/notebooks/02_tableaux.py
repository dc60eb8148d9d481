# %% [markdown]
# # Substitution tableaux
#
# Columns of T_n are the (n-1)-iterates, lines are (place, operation) pairs,
# and each cell substitutes ``O(x, x)`` at that variable place of the column's
# iterate.  Distinct cells are numbered in scan order.

# %%
from catalan_tableaux import build_tableau, canonical_labels, make_signature, multiplicity_table, tableau_stats
from catalan_tableaux.tableau import render_tableau_text

VW = make_signature([("V", 2), ("W", 2)])
print(render_tableau_text(build_tableau(VW, 2)))

# %% [markdown]
# T_3 has 6 lines, 8 columns and 48 cells but only 40 distinct iterates.
# Lines 5 and 6 revisit labels first seen earlier.

# %%
t3 = build_tableau(VW, 3)
print(render_tableau_text(t3))
print(tableau_stats(t3))

# %% [markdown]
# From n = 3 on there are more cells than iterates, so some iterate must
# repeat.  The histogram T_{nk} counts iterates of multiplicity k.

# %%
for n in range(1, 6):
    tab = build_tableau(VW, n)
    st = tableau_stats(tab)
    hist = multiplicity_table(tab, canonical_labels(tab)).histogram
    print(n, st.present_cells, st.distinct, hist)
