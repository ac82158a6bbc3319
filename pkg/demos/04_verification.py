"""Formula conformance, Gram identities, census and determinants."""
# %%
from orthokit import (
    determinant_check,
    formula_conformance,
    gram_structure_check,
    hadamard_order_guard,
    permutation_census,
    sylvester,
)

for n in (4, 6, 10, 12):
    rep = formula_conformance("II", n)
    print(n, rep.claimed_form, rep.clean, sorted(set(rep.k_witnesses.values())))

# %%
chk = gram_structure_check(sylvester(2), 3)
print(chk.holds)
print(chk.dd_t)

# %% [markdown]
# Row and column permutations of H4: 576 arrangements, fewer distinct images.

# %%
census = permutation_census(sylvester(2))
print(census.total_arrangements, census.distinct_count, census.class_labels)

# %%
print([n for n in range(1, 25) if hadamard_order_guard(n)])
print(determinant_check(sylvester(3)))
