"""Sylvester matrices, residue-table M-matrices and cycled families."""
# %%
from orthokit import cycled_family, m_matrix, residue_table, row_spectrum, sylvester
from orthokit.generators import MMatrixKind, SignRule

for k in range(4):
    h = sylvester(k)
    print(k, h.shape, row_spectrum(h).value_set() or "{}")

# %% [markdown]
# Type II tables live modulo n+1, so n+1 has to be prime.

# %%
table = residue_table(MMatrixKind.TYPE_II, 4)
print(table.modulus)
print(table.entries)
for rule in SignRule:
    m = m_matrix("II", 4, rule)
    print(rule.name)
    print(m)
    print(row_spectrum(m).histogram())

# %% [markdown]
# A cycled family shifts the rows of a seed upwards, one step per member.

# %%
fam = cycled_family(sylvester(2))
for i in range(1, fam.order + 1):
    print(i, fam.member(i)[0])
