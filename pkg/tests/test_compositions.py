import itertools

import numpy as np
import pytest

from orthokit import (
    OrderMismatch,
    PrimalityViolation,
    RowCountMismatch,
    SizeMismatch,
    all_ones,
    assemble_blocks,
    circulant_table,
    cycled_family,
    doubling,
    four_block,
    gram_cols,
    gram_rows,
    juxtapose,
    kronecker,
    m_matrix,
    mixed_block,
    row_spectrum,
    sylvester,
    type_ii_table,
)
from orthokit.compositions import BlockIndexTable

from conftest import CIRCULANT_4, H2, H2_JUXT_M2, M2, ONES_KRON_H2, TYPE_II_TABLE_4
from oracles import kron, row_products


def test_kronecker_reproduces_ones_kron_h2():
    assert kronecker(all_ones(2), sylvester(1)).tolist() == ONES_KRON_H2
    a = m_matrix("II", 4)
    assert np.array_equal(kronecker(a, [[1]]), a)
    assert kronecker(a, sylvester(1)).tolist() == kron(a, H2)


def test_ones_kron_m_spectrum():
    m = m_matrix("II", 4)
    g = set(row_spectrum(m).values)
    values = row_spectrum(kronecker(all_ones(2), m)).value_set()
    assert values <= {2 * x for x in g} | {8}
    assert 8 in values


def test_juxtapose():
    assert juxtapose([H2, M2]).tolist() == H2_JUXT_M2
    a = m_matrix("I", 5)
    assert np.array_equal(juxtapose([a]), a)
    with pytest.raises(RowCountMismatch, match="#2: 1 rows"):
        juxtapose([H2, [[1, 1]]])


def test_juxtapose_additivity():
    a, b = m_matrix("II", 4), sylvester(2)
    joined = row_spectrum(juxtapose([a, b]))
    ra, rb = row_spectrum(a), row_spectrum(b)
    for pair in joined.pairs:
        assert joined[pair] == ra[pair] + rb[pair]


def test_doubling():
    assert doubling([[1]]).tolist() == sylvester(1).tolist()
    assert np.array_equal(doubling(sylvester(1)), sylvester(2))


def test_doubling_spectrum_law():
    m = m_matrix("II", 4)
    r = m.shape[0]
    got = row_spectrum(doubling(m)).multiset()
    expected = {}
    for v in row_spectrum(m).values:
        expected[2 * v] = expected.get(2 * v, 0) + 2
    expected[0] = expected.get(0, 0) + r * r
    assert dict(got) == expected


def test_four_block():
    assert np.array_equal(four_block([[1]]), sylvester(2))
    m = m_matrix("II", 4)
    assert np.array_equal(four_block(m), doubling(doubling(m)))
    # literal block pasting of the 4-block sign pattern
    s = sylvester(2)
    pasted = np.block([[s[i, j] * m for j in range(4)] for i in range(4)])
    assert np.array_equal(four_block(m), pasted)


def test_four_block_block_structure():
    m = m_matrix("II", 4)
    n = m.shape[0]
    fb = row_products(four_block(m))
    g = row_products(m)
    for (l, r), v in fb.items():
        bl, br = (l - 1) // n, (r - 1) // n
        if bl == br:
            il, ir = (l - 1) % n + 1, (r - 1) % n + 1
            assert v == 4 * g[(il, ir)]
        else:
            # same in-block row index gives 4*n*<h_bl, h_br> = 0; others vanish too
            assert v == 0


def test_mixed_block():
    got = mixed_block(H2, M2, "hm")
    assert got.tolist() == [[1, 1, 1, -1], [1, -1, -1, 1], [1, -1, -1, -1], [-1, 1, -1, 1]]
    assert row_spectrum(got).pair_index == row_products(got)
    mh = mixed_block(H2, M2, "mh")
    assert mh.tolist() == [[1, -1, 1, 1], [-1, 1, 1, -1], [1, 1, -1, 1], [1, -1, 1, -1]]
    with pytest.raises(OrderMismatch):
        mixed_block(H2, sylvester(2))


def test_circulant_table():
    assert circulant_table(4).entries.tolist() == CIRCULANT_4
    assert circulant_table(1).entries.tolist() == [[1]]
    t = circulant_table(5).entries
    assert np.array_equal(t[1], np.roll(t[0], -1))


def test_type_ii_table():
    assert type_ii_table(4).entries.tolist() == TYPE_II_TABLE_4
    assert type_ii_table(2).entries.tolist() == [[1, 2], [2, 1]]
    with pytest.raises(PrimalityViolation):
        type_ii_table(5)


def test_block_index_table_validation():
    with pytest.raises(ValueError):
        BlockIndexTable(np.array([[1, 3], [2, 1]]))
    with pytest.raises(ValueError):
        BlockIndexTable(np.array([[1, 2, 1]]))


def test_circulant_assembly_of_hadamard():
    big = assemble_blocks(circulant_table(4), cycled_family(sylvester(2)))
    assert big.shape == (16, 16)
    values = row_spectrum(big).value_set()
    assert values == {0, 16}
    assert row_spectrum(big).pair_index == row_products(big)


def test_assembly_places_members():
    fam = cycled_family(sylvester(2))
    table = type_ii_table(4)
    big = assemble_blocks(table, fam)
    for i, j in itertools.product(range(4), range(4)):
        block = big[4 * i : 4 * i + 4, 4 * j : 4 * j + 4]
        assert np.array_equal(block, fam.member(int(table.entries[i, j])))


def test_type2_assembly_spectrum_is_0_4_8():
    big = assemble_blocks(type_ii_table(4), cycled_family(sylvester(2)))
    hist = row_spectrum(big).histogram()
    assert hist == {0: 56, 4: 32, 8: 32}


def test_assembly_size_mismatch():
    with pytest.raises(SizeMismatch):
        assemble_blocks(circulant_table(3), cycled_family(sylvester(2)))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_repeated_juxtaposition_grams(k):
    h = sylvester(k)
    n = h.shape[0]
    for m in (1, 2, 3):
        d = juxtapose([h] * m)
        assert np.array_equal(gram_rows(d), m * n * np.eye(n, dtype=np.int64))
        assert np.array_equal(gram_cols(d), np.kron(np.ones((m, m), dtype=np.int64), n * np.eye(n, dtype=np.int64)))
