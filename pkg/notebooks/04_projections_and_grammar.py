# %% [markdown]
# # Higher arities and the grammar view
#
# An a-ary operation gives C(a, 2) binary projections, fixing the other
# slots to a constant ``c``.  The projected signature is an ordinary binary
# signature, so tableaux and the row-sum law apply to it unchanged.

# %%
from catalan_tableaux import make_signature, project_signature, structure_catalan, verify_theorem
from catalan_tableaux.grammar import generate_language, grammar_from_signature, language_equals_enumeration
from catalan_tableaux.projection import provenance_to_list

UZ = make_signature([("U", 3), ("Z", 4)])
binary, prov = project_signature(UZ)
for item in provenance_to_list(prov, UZ):
    print(item["derived"], "=", item["definition"])
print(structure_catalan(binary, 6))

# %%
U = make_signature([("U", 3)])
projected, _ = project_signature(U)
print([verify_theorem(projected, n).ok for n in (2, 3)])

# %% [markdown]
# Iterates are also the words of a context-free language: start from ``x``,
# and let each operation symbol followed by any a words give a new word.

# %%
VU = make_signature([("V", 2), ("U", 3)])
levels = generate_language(grammar_from_signature(VU), 2)
print(sorted(levels[2]))
print(language_equals_enumeration(VU, 3).to_dict()["equal"])
