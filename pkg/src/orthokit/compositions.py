"""Composite sign matrices: Kronecker products, juxtaposition, doubling, block assemblies."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import OrderMismatch, RowCountMismatch, SizeMismatch
from .generators import MatrixFamily, MMatrixKind, residue_table, sylvester
from .matrix import SignMatrix, sign_matrix


def kronecker(a, b) -> SignMatrix:
    return sign_matrix(np.kron(sign_matrix(a), sign_matrix(b)))


def juxtapose(parts: Sequence) -> SignMatrix:
    """Concatenate matrices left to right; all must have the same row count."""
    parts = [sign_matrix(p) for p in parts]
    if not parts:
        raise ValueError("juxtapose needs at least one matrix")
    counts = [p.shape[0] for p in parts]
    if len(set(counts)) != 1:
        detail = ", ".join(f"#{i + 1}: {c} rows" for i, c in enumerate(counts))
        raise RowCountMismatch(f"row counts differ ({detail})")
    return sign_matrix(np.hstack(parts))


def doubling(a) -> SignMatrix:
    """``[A A; A -A]``."""
    a = sign_matrix(a)
    return sign_matrix(np.block([[a, a], [a, -a]]))


def four_block(m) -> SignMatrix:
    """The 4x4 block sign pattern of ``H4 (x) M``, i.e. ``doubling(doubling(M))``."""
    return kronecker(sylvester(2), m)


def mixed_block(h, m, order: str = "hm") -> SignMatrix:
    """``[H M; M -H]`` for ``order="hm"``, ``[M H; H -M]`` for ``order="mh"``."""
    h = sign_matrix(h)
    m = sign_matrix(m)
    if h.shape[0] != h.shape[1] or m.shape[0] != m.shape[1] or h.shape != m.shape:
        raise OrderMismatch(
            f"mixed_block needs two square matrices of one order, got {h.shape[0]}x{h.shape[1]} "
            f"and {m.shape[0]}x{m.shape[1]}"
        )
    order = order.lower()
    if order == "hm":
        return sign_matrix(np.block([[h, m], [m, -h]]))
    if order == "mh":
        return sign_matrix(np.block([[m, h], [h, -m]]))
    raise ValueError(f"order must be 'hm' or 'mh', got {order!r}")


@dataclass(frozen=True)
class BlockIndexTable:
    """An ``n x n`` table of 1-based family indices."""

    entries: np.ndarray

    def __post_init__(self):
        e = np.asarray(self.entries, dtype=np.int64)
        if e.ndim != 2 or e.shape[0] != e.shape[1] or e.shape[0] == 0:
            raise ValueError(f"block index table must be square and non-empty, got shape {e.shape}")
        n = e.shape[0]
        if e.min() < 1 or e.max() > n:
            raise ValueError(f"block indices must lie in 1..{n}")
        e = e.copy()
        e.flags.writeable = False
        object.__setattr__(self, "entries", e)

    @property
    def n(self) -> int:
        return self.entries.shape[0]


def circulant_table(n: int) -> BlockIndexTable:
    """Entry ``(i, j)`` is ``((i + j - 2) mod n) + 1``; each row is the previous one rotated left."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    i = np.arange(n)[:, None]
    j = np.arange(n)[None, :]
    return BlockIndexTable((i + j) % n + 1)


def type_ii_table(n: int) -> BlockIndexTable:
    """The ``(i * j) mod (n+1)`` residue table read as block indices; needs ``n+1`` prime."""
    return BlockIndexTable(residue_table(MMatrixKind.TYPE_II, n).entries)


def assemble_blocks(table: BlockIndexTable, family: MatrixFamily) -> SignMatrix:
    """Place family member ``table[i, j]`` at block position ``(i, j)``."""
    if table.n != len(family):
        raise SizeMismatch(f"table order {table.n} does not match family size {len(family)}")
    p, q = family.members[0].shape
    if p != q:
        raise SizeMismatch(f"family members must be square, got {p}x{q}")
    return sign_matrix(
        np.block([[family.member(int(t)) for t in row] for row in table.entries])
    )
