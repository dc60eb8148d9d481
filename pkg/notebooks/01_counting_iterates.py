# %% [markdown]
# # Counting iterates
#
# Iterates of order n over a signature are counted by a convolution
# recursion.  For two binary operations the counts are 2**n times the
# Catalan numbers; one operation of arity a gives the Fuss-Catalan numbers.

# %%
from catalan_tableaux import (
    catalan_asymptotic_ratio,
    classical_catalan,
    enumerate_iterates,
    functional_equation_residual,
    fuss_catalan,
    make_signature,
    render_polish,
    structure_catalan,
)

VW = make_signature([("V", 2), ("W", 2)])
print(structure_catalan(VW, 8))
print([2**n * classical_catalan(n) for n in range(9)])

# %% [markdown]
# Direct enumeration agrees with the counts.  Order-2 iterates of V and W:

# %%
print([render_polish(t, VW) for t in enumerate_iterates(VW, 2)])

# %% [markdown]
# A mixed signature, one binary and one ternary operation, next to the
# Fuss-Catalan numbers of a lone ternary operation.

# %%
VU = make_signature([("V", 2), ("U", 3)])
print(structure_catalan(VU, 6))
print([fuss_catalan(3, n) for n in range(7)])

# %% [markdown]
# The generating function satisfies (phi - 1) / t = sum_i phi**a_i.  The
# residual of that equation on the truncated series is exactly zero.

# %%
print(functional_equation_residual(VU, 12))

# %% [markdown]
# C_n approaches 4**n / (sqrt(pi) n**1.5) from below, roughly like 1 - 9/(8n).

# %%
for n in (1, 10, 100, 1000):
    print(n, round(catalan_asymptotic_ratio(n), 6), round(1 - 9 / (8 * n), 6))
