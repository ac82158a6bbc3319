"""Orthogonal numbers and classification labels on small sign matrices.

Run with ``python demos/01_spectra_and_labels.py``.
"""
# %%
import numpy as np

from orthokit import classify, col_spectrum, gram_rows, row_spectrum, sylvester, zero_diagonal

h4 = sylvester(2)
print(h4)

# %% [markdown]
# Every pair of rows of a Hadamard matrix has inner product zero.  The pair
# loop and the Gram matrix give the same numbers; pairs are 1-based.

# %%
rs = row_spectrum(h4)
print(dict(zip(rs.pairs, rs.values)))
print(gram_rows(h4))
print(classify(h4).label_names)

# %% [markdown]
# Zeroing the diagonal leaves column products of size 0 or 2.

# %%
c = zero_diagonal(h4)
print(c)
print(col_spectrum(c).nonzero_pairs())
print(classify(c).label_names)

# %% [markdown]
# ones(2) (x) H2 splits its columns into two mutually orthogonal groups.

# %%
m = np.kron(np.ones((2, 2), dtype=np.int64), sylvester(1))
rep = classify(m)
print(col_spectrum(m).histogram())
print(rep.label_names, rep.quasi_a_groups)
