# %% [markdown]
# # Reducible identities and the incidence matrix
#
# J_i = J_j is formally reducible when both iterates sit on one tableau line.
# The number of such pairs in row i depends only on the multiplicity M of
# J_i: sum_{nu=1}^{M} (-1)**(nu-1) C(M, nu) S_{n-nu}.

# %%
from catalan_tableaux import make_signature, theorem_row_sum, verify_theorem
from catalan_tableaux.incidence import analyse, render_exhibit

VW = make_signature([("V", 2), ("W", 2)])
an = analyse(VW, 3)
print(render_exhibit(an.matrix, an.multiplicities))

# %% [markdown]
# Row sums 8 and 14 are the values of the law for M = 1 and M = 2:

# %%
print(theorem_row_sum(1, 3, VW), theorem_row_sum(2, 3, VW))
print(32 * 8 + 8 * 14)

# %% [markdown]
# The same check for several signatures and orders.  The frequency is the
# share of reducible ordered pairs among all S_n**2 pairs.

# %%
cases = [("V:2", 5), ("V:2,W:2", 5), ("V:2,W:2,Y:2", 4)]
for text, top in cases:
    sig = make_signature([(s[0], 2) for s in text.split(",")])
    for n in range(2, top + 1):
        rep = verify_theorem(sig, n)
        print(f"{text:12} n={n}  ok={rep.ok}  I_n={rep.observed_I}  freq={float(rep.frequency):.4f}")
