"""Algebraic invariants checked on generated sign matrices."""

from collections import Counter

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from orthokit import (
    Label,
    classify,
    col_spectrum,
    doubling,
    four_block,
    gram_rows,
    gram_structure_check,
    is_orthogonal,
    juxtapose,
    kronecker,
    row_spectrum,
    sylvester,
    zero_diagonal,
)
from orthokit.analysis import spectra_agree

from oracles import row_products

dims = st.integers(1, 6)
pm = st.sampled_from([-1, 1])
trit = st.sampled_from([-1, 0, 1])


def pm_matrices(rows=dims, cols=dims):
    return st.tuples(rows, cols).flatmap(lambda s: arrays(np.int64, s, elements=pm))


def square_pm(max_n=6):
    return st.integers(1, max_n).flatmap(lambda n: arrays(np.int64, (n, n), elements=pm))


@given(pm_matrices())
def test_parity(m):
    for g in row_spectrum(m).values:
        assert (g - m.shape[1]) % 2 == 0


@given(st.tuples(dims, dims).flatmap(lambda s: arrays(np.int64, s, elements=trit)))
def test_gram_consistency_and_bound(m):
    g = gram_rows(m)
    rs = row_spectrum(m)
    for (l, r), v in zip(rs.pairs, rs.values):
        assert g[l - 1, r - 1] == v
        assert abs(v) <= m.shape[1]
    assert len(rs) == m.shape[0] * (m.shape[0] - 1) // 2
    assert spectra_agree(m)


@given(pm_matrices(), st.randoms(use_true_random=False))
def test_permutation_invariance(m, rnd):
    rp = list(range(m.shape[0]))
    cp = list(range(m.shape[1]))
    rnd.shuffle(rp)
    rnd.shuffle(cp)
    pm_ = m[rp][:, cp]
    assert row_spectrum(pm_).multiset() == row_spectrum(m).multiset()
    assert col_spectrum(pm_).multiset() == col_spectrum(m).multiset()
    # the split label reads columns in the given order unless searched exhaustively
    assert classify(pm_, exhaustive_split=True).labels == classify(m, exhaustive_split=True).labels


@given(square_pm())
def test_square_equivalence(m):
    n = m.shape[0]
    eye = n * np.eye(n, dtype=np.int64)
    assert np.array_equal(m @ m.T, eye) == np.array_equal(m.T @ m, eye)


@given(st.integers(1, 5).flatmap(lambda r: st.integers(r + 1, 7).flatmap(lambda c: arrays(np.int64, (r, c), elements=pm))))
def test_rectangular_obstruction(m):
    assert any(v != 0 for v in col_spectrum(m).values)


@given(st.integers(0, 4))
def test_conference_bound(k):
    h = sylvester(k)
    assert {abs(v) for v in col_spectrum(zero_diagonal(h)).values} <= {0, 2}


@given(square_pm())
def test_transpose_duality(m):
    assert (Label.ORTHOGONAL in classify(m).labels) == (Label.ORTHOGONAL in classify(m.T).labels)


@given(pm_matrices(), pm_matrices())
@settings(max_examples=60)
def test_kronecker_mixed_product(a, b):
    c = kronecker(a, b)
    ga, gb = a @ a.T, b @ b.T
    q = b.shape[0]
    gc = row_products(c)
    for (x, y), v in gc.items():
        p, r = divmod(x - 1, q)
        s, t = divmod(y - 1, q)
        assert v == ga[p, s] * gb[r, t]


@given(pm_matrices(), st.data())
def test_juxtaposition_additivity(a, data):
    b = data.draw(pm_matrices(rows=st.just(a.shape[0])))
    joined = row_spectrum(juxtapose([a, b]))
    ra, rb = row_spectrum(a), row_spectrum(b)
    assert all(joined[p] == ra[p] + rb[p] for p in joined.pairs)


@given(pm_matrices())
def test_doubling_law(m):
    r = m.shape[0]
    expected = Counter()
    for v in row_spectrum(m).values:
        expected[2 * v] += 2
    expected[0] += r * r
    assert row_spectrum(doubling(m)).multiset() == expected
    assert np.all(doubling(m) != 0)


@given(pm_matrices())
def test_four_block_identity(m):
    assert np.array_equal(four_block(m), doubling(doubling(m)))
    assert np.array_equal(four_block(m), kronecker(sylvester(2), m))


@given(square_pm(5), st.integers(1, 3))
@settings(max_examples=60)
def test_gram_structure_iff_orthogonal(h, m):
    assert gram_structure_check(h, m).holds == is_orthogonal(h)
