"""Base matrices: Sylvester Hadamard, all-ones, residue-table M-matrices, cycled families."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from sympy import isprime

from .errors import NotSquare, OrderTooLarge, PrimalityViolation
from .matrix import SignMatrix, sign_matrix

DEFAULT_MAX_SYLVESTER_EXPONENT = 10


def sylvester(k: int, max_exponent: int = DEFAULT_MAX_SYLVESTER_EXPONENT) -> SignMatrix:
    """Sylvester Hadamard matrix of order ``2**k``, built by repeated ``[A A; A -A]``."""
    if k < 0:
        raise ValueError(f"exponent must be >= 0, got {k}")
    if k > max_exponent:
        raise OrderTooLarge(f"sylvester exponent {k} exceeds the maximum {max_exponent}")
    h = np.ones((1, 1), dtype=np.int64)
    for _ in range(k):
        h = np.block([[h, h], [h, -h]])
    return sign_matrix(h)


def all_ones(m: int) -> SignMatrix:
    if m < 1:
        raise ValueError(f"order must be >= 1, got {m}")
    return sign_matrix(np.ones((m, m), dtype=np.int64))


class MMatrixKind(str, enum.Enum):
    TYPE_I = "I"
    TYPE_II = "II"
    TYPE_III = "III"

    @classmethod
    def parse(cls, value) -> "MMatrixKind":
        if isinstance(value, cls):
            return value
        text = str(value).upper().removeprefix("TYPE_")
        return {"1": cls.TYPE_I, "2": cls.TYPE_II, "3": cls.TYPE_III}.get(text) or cls(text)


class SignRule(str, enum.Enum):
    """How residues become signs.

    PARITY: odd -> +1, even (including 0) -> -1.
    THRESHOLD: residues in ``1..ceil(n/2)`` -> +1, everything else -> -1.
    """

    PARITY = "parity"
    THRESHOLD = "threshold"


@dataclass(frozen=True)
class ResidueTable:
    kind: MMatrixKind
    n: int
    modulus: int
    entries: np.ndarray


def check_order(kind: MMatrixKind, n: int) -> None:
    """Raise :class:`PrimalityViolation` if ``n`` is not a valid order for ``kind``."""
    kind = MMatrixKind.parse(kind)
    if n < 1:
        raise PrimalityViolation(f"n must be >= 1, got {n}")
    if kind is MMatrixKind.TYPE_I and not isprime(n):
        raise PrimalityViolation(f"type I needs n prime; n must be prime, got n={n}")
    if kind is MMatrixKind.TYPE_II and not isprime(n + 1):
        raise PrimalityViolation(f"type II needs n+1 prime; n+1 must be prime, got n+1={n + 1}")


def residue_table(kind, n: int) -> ResidueTable:
    """Residue table with 1-based ``i, j``.

    =========  ==========================  =========
    kind       entry                       modulus
    =========  ==========================  =========
    TYPE_I     ``(1 + (i-1)(j-1)) mod n``  n (prime)
    TYPE_II    ``(i * j) mod (n+1)``       n+1 (prime)
    TYPE_III   ``(i + j) mod n``           n
    =========  ==========================  =========
    """
    kind = MMatrixKind.parse(kind)
    check_order(kind, n)
    i = np.arange(1, n + 1, dtype=np.int64)[:, None]
    j = np.arange(1, n + 1, dtype=np.int64)[None, :]
    if kind is MMatrixKind.TYPE_I:
        modulus = n
        entries = (1 + (i - 1) * (j - 1)) % n
    elif kind is MMatrixKind.TYPE_II:
        modulus = n + 1
        entries = (i * j) % modulus
    else:
        modulus = n
        entries = (i + j) % n
    entries.flags.writeable = False
    return ResidueTable(kind, n, modulus, entries)


def sign_map(table: ResidueTable | np.ndarray, rule=SignRule.PARITY, n: int | None = None) -> SignMatrix:
    """Map residues to +/-1 entrywise.

    ``n`` (the order used by THRESHOLD) defaults to ``table.n``, or to the
    number of columns for a bare array.
    """
    rule = SignRule(rule)
    if isinstance(table, ResidueTable):
        entries, order = table.entries, table.n
    else:
        entries = np.atleast_2d(np.asarray(table, dtype=np.int64))
        order = entries.shape[1]
    if n is not None:
        order = n
    if rule is SignRule.PARITY:
        positive = entries % 2 == 1
    else:
        positive = (entries >= 1) & (entries <= math.ceil(order / 2))
    return sign_matrix(np.where(positive, 1, -1))


def m_matrix(kind, n: int, rule=SignRule.PARITY) -> SignMatrix:
    return sign_map(residue_table(kind, n), rule)


@dataclass(frozen=True)
class MatrixFamily:
    """An ordered family ``members[0..n-1]`` of equal-size square matrices.

    Member numbering in block-index tables is 1-based: index ``t`` selects
    ``members[t - 1]``.
    """

    members: tuple[SignMatrix, ...]

    def __post_init__(self):
        if not self.members:
            raise ValueError("a family needs at least one member")
        shapes = {m.shape for m in self.members}
        if len(shapes) != 1:
            raise ValueError(f"family members differ in shape: {sorted(shapes)}")

    def __len__(self) -> int:
        return len(self.members)

    def __getitem__(self, index: int) -> SignMatrix:
        return self.members[index]

    def member(self, number: int) -> SignMatrix:
        """1-based lookup."""
        return self.members[number - 1]

    @property
    def order(self) -> int:
        return self.members[0].shape[0]


def cycled_family(h) -> MatrixFamily:
    """The ``n`` cyclic row shifts of a square matrix.

    Member ``i`` (1-based) has, as its row ``r``, row ``((r + i - 2) mod n) + 1``
    of ``h``; member 1 is ``h`` itself.
    """
    h = sign_matrix(h)
    n, c = h.shape
    if n != c:
        raise NotSquare(f"cycled_family needs a square matrix, got {n}x{c}")
    return MatrixFamily(tuple(sign_matrix(np.roll(h, -shift, axis=0)) for shift in range(n)))
