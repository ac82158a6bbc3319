"""Kronecker products, juxtaposition, doubling and block assemblies."""
# %%
from orthokit import (
    assemble_blocks,
    circulant_table,
    classify,
    col_spectrum,
    cycled_family,
    doubling,
    juxtapose,
    kronecker,
    m_matrix,
    row_spectrum,
    sylvester,
    type_ii_table,
)

h2, m2 = sylvester(1), m_matrix("II", 2)
j = juxtapose([h2, m2])
print(j)
rep = classify(j)
print(col_spectrum(j).histogram(), rep.label_names, rep.semi_split_index)

# %% [markdown]
# Doubling a matrix doubles its spectrum and adds zeros.

# %%
print(row_spectrum(h2).histogram(), row_spectrum(doubling(h2)).histogram())
print(row_spectrum(kronecker(sylvester(2), m_matrix("II", 4))).histogram())

# %% [markdown]
# Block assembly places cycled copies of a seed according to an index table.

# %%
fam = cycled_family(sylvester(2))
for table in (circulant_table(4), type_ii_table(4)):
    print(table.entries)
    print(row_spectrum(assemble_blocks(table, fam)).histogram())
