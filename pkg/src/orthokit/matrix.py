"""Sign matrices, orthogonal-number spectra and orthogonality classification.

A sign matrix is an integer matrix over {-1, 0, +1}.  Here it is a read-only
``int64`` numpy array produced by :func:`sign_matrix`; every other function
in the package accepts anything that function accepts.

Row and column indices in *reports* (spectrum pairs, column groups, split
indices) are 1-based, so they read the same as hand-written matrix
algebra.  Array indexing stays 0-based.
"""

from __future__ import annotations

import enum
import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidEntry, LengthMismatch, NotSquare

SignMatrix = np.ndarray
Pair = tuple[int, int]

#: Above this many columns the exhaustive column-split search is refused.
MAX_EXHAUSTIVE_SPLIT_COLS = 16


def sign_matrix(data) -> SignMatrix:
    """Validate ``data`` and return it as a read-only ``int64`` array.

    Accepts nested sequences, numpy arrays, or an existing sign matrix.
    Raises :class:`InvalidEntry` for empty input, non-2D input, or any entry
    outside {-1, 0, +1}.
    """
    arr = np.asarray(data)
    if arr.ndim != 2 or arr.shape[0] == 0 or arr.shape[1] == 0:
        raise InvalidEntry(f"expected a non-empty 2-D matrix, got shape {arr.shape}")
    if arr.dtype.kind not in "iub":
        if arr.dtype.kind == "f" and np.all(arr == np.round(arr)):
            arr = arr.astype(np.int64)
        else:
            raise InvalidEntry(f"entries must be integers, got dtype {arr.dtype}")
    bad = ~np.isin(arr, (-1, 0, 1))
    if bad.any():
        i, j = np.argwhere(bad)[0]
        raise InvalidEntry(f"entry ({i + 1},{j + 1}) = {arr[i, j]} is not in {{-1, 0, +1}}")
    out = np.array(arr, dtype=np.int64, copy=True)
    out.flags.writeable = False
    return out


def is_zero_free(m) -> bool:
    return bool(np.all(sign_matrix(m) != 0))


def inner_product(a: Sequence[int], b: Sequence[int]) -> int:
    """Exact integer inner product ``sum(a_j * b_j)``."""
    a = np.asarray(a, dtype=np.int64).ravel()
    b = np.asarray(b, dtype=np.int64).ravel()
    if a.size == 0 or a.size != b.size:
        raise LengthMismatch(f"vectors of length {a.size} and {b.size}")
    return int(np.dot(a, b))


class Axis(str, enum.Enum):
    ROW = "ROW"
    COLUMN = "COLUMN"


@dataclass(frozen=True)
class Spectrum:
    """Orthogonal numbers of every unordered pair of rows (or columns).

    ``pairs`` holds 1-based ``(l, m)`` with ``l < m`` in lexicographic order
    and ``values[i]`` is the inner product of pair ``pairs[i]``.  Values are
    signed; use :meth:`abs_values` where a sign-free view is wanted.
    """

    axis: Axis
    pairs: tuple[Pair, ...]
    values: tuple[int, ...]
    length: int  # length of the vectors being paired

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, pair: Pair) -> int:
        l, m = pair
        if l > m:
            l, m = m, l
        return self.pair_index[(l, m)]

    @property
    def pair_index(self) -> dict[Pair, int]:
        return dict(zip(self.pairs, self.values))

    def multiset(self) -> Counter:
        return Counter(self.values)

    def value_set(self) -> frozenset[int]:
        return frozenset(self.values)

    def abs_values(self) -> tuple[int, ...]:
        return tuple(abs(v) for v in self.values)

    def histogram(self) -> dict[int, int]:
        """Value -> count, keys in ascending order."""
        return dict(sorted(Counter(self.values).items()))

    def nonzero_pairs(self) -> dict[Pair, int]:
        return {p: v for p, v in zip(self.pairs, self.values) if v != 0}


def _pair_loop_spectrum(vectors: np.ndarray, axis: Axis) -> Spectrum:
    count = vectors.shape[0]
    pairs, values = [], []
    for l, m in itertools.combinations(range(count), 2):
        pairs.append((l + 1, m + 1))
        values.append(inner_product(vectors[l], vectors[m]))
    return Spectrum(axis, tuple(pairs), tuple(values), int(vectors.shape[1]))


def row_spectrum(m) -> Spectrum:
    """Row-pair inner products, computed pair by pair."""
    m = sign_matrix(m)
    return _pair_loop_spectrum(m, Axis.ROW)


def col_spectrum(m) -> Spectrum:
    """Column-pair inner products, computed pair by pair."""
    m = sign_matrix(m)
    return _pair_loop_spectrum(m.T, Axis.COLUMN)


def gram_rows(m) -> np.ndarray:
    m = sign_matrix(m)
    return m @ m.T


def gram_cols(m) -> np.ndarray:
    m = sign_matrix(m)
    return m.T @ m


def spectrum_from_gram(gram: np.ndarray, axis: Axis = Axis.ROW, length: int = 0) -> Spectrum:
    """Read a spectrum off the strict upper triangle of a Gram matrix.

    Independent of the pair loop in :func:`row_spectrum`; the two are used
    to cross-check each other.
    """
    gram = np.asarray(gram)
    n = gram.shape[0]
    iu, ju = np.triu_indices(n, k=1)
    pairs = tuple((int(i) + 1, int(j) + 1) for i, j in zip(iu, ju))
    values = tuple(int(v) for v in gram[iu, ju])
    return Spectrum(axis, pairs, values, length)


def zero_diagonal(m) -> SignMatrix:
    """Copy of a square matrix with its principal diagonal set to 0."""
    m = sign_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise NotSquare(f"zero_diagonal needs a square matrix, got {m.shape[0]}x{m.shape[1]}")
    out = m.copy()
    np.fill_diagonal(out, 0)
    out.flags.writeable = False
    return out


def is_orthogonal(m) -> bool:
    """``M M^T == n I`` for square ``M`` (Hadamard scaling)."""
    m = sign_matrix(m)
    n, c = m.shape
    return n == c and np.array_equal(gram_rows(m), n * np.eye(n, dtype=np.int64))


# -- classification -----------------------------------------------------------


class Label(str, enum.Enum):
    ORTHOGONAL = "ORTHOGONAL"
    QUASI_A = "QUASI_A"
    QUASI_B = "QUASI_B"
    SEMI_ROWS = "SEMI_ROWS"
    SEMI_COLS = "SEMI_COLS"
    SEMI_SPLIT = "SEMI_SPLIT"
    NON_ORTHOGONAL = "NON_ORTHOGONAL"
    MIXED = "MIXED"


Groups = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ClassificationReport:
    """Labels that hold for a matrix, plus the evidence behind them.

    ``witnesses`` maps each *rejected* label to the pairs that broke it
    (1-based; a ``(i, i)`` entry means a diagonal Gram entry was wrong).
    """

    labels: tuple[Label, ...]
    quasi_a_groups: Groups | None = None
    quasi_b_groups: Groups | None = None
    quasi_b_constant: int | None = None
    semi_split_index: int | None = None
    semi_split_columns: tuple[int, ...] | None = None
    witnesses: dict[Label, tuple[Pair, ...]] = field(default_factory=dict)

    def __contains__(self, label) -> bool:
        return Label(label) in self.labels

    @property
    def label_names(self) -> list[str]:
        return [lab.value for lab in self.labels]


def _components(n: int, edges: Iterable[Pair]) -> list[list[int]]:
    # 0-based vertices; components sorted by smallest member
    adj = {v: set() for v in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    seen, comps = set(), []
    for start in range(n):
        if start in seen:
            continue
        stack, comp = [start], []
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def minimum_coloring(n: int, edges: Iterable[Pair]) -> list[int]:
    """Exact minimum proper colouring by backtracking; 0-based vertices.

    Vertices are coloured in index order, smallest colour first, so the
    result is deterministic.  Exponential in the worst case; meant for the
    small graphs that arise from desk-scale matrices.
    """
    adj = [set() for _ in range(n)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    colors = [-1] * n

    def place(v: int, k: int, used: int) -> bool:
        if v == n:
            return True
        taken = {colors[w] for w in adj[v] if colors[w] >= 0}
        # a fresh colour beyond `used` is symmetric with any other fresh one
        for c in range(min(used + 1, k)):
            if c in taken:
                continue
            colors[v] = c
            if place(v + 1, k, max(used, c + 1)):
                return True
        colors[v] = -1
        return False

    for k in range(1, n + 1):
        if place(0, k, 0):
            return colors
    return colors  # unreachable for n >= 1


def _groups_from_colors(colors: Sequence[int]) -> Groups:
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        by_color.setdefault(c, []).append(v + 1)
    return tuple(sorted(tuple(g) for g in by_color.values()))


def _split_holds(cs: Spectrum, first: Sequence[int], second: Sequence[int]) -> list[Pair]:
    # returns offending pairs; empty means the split works
    bad = []
    for a, b in itertools.combinations(first, 2):
        if cs[(a, b)] != 0:
            bad.append((a, b))
    for a, b in itertools.combinations(second, 2):
        if cs[(a, b)] == 0:
            bad.append((a, b))
    return bad


def classify(m, *, exhaustive_split: bool = False) -> ClassificationReport:
    """Evaluate every orthogonality label independently.

    Parameters
    ----------
    m : array_like
        Sign matrix.
    exhaustive_split : bool
        If the given column order does not make ``M`` an ``n x 2n``
        half-orthogonal / half-non-orthogonal split, also try every choice of
        ``n`` columns as the orthogonal half (at most
        ``MAX_EXHAUSTIVE_SPLIT_COLS`` columns).

    Returns
    -------
    ClassificationReport
        All labels that hold.  ``MIXED`` only when nothing else does.
    """
    m = sign_matrix(m)
    rows, cols = m.shape
    rs = row_spectrum(m)
    cs = col_spectrum(m)
    gr = gram_rows(m)
    labels: list[Label] = []
    witnesses: dict[Label, tuple[Pair, ...]] = {}
    info: dict = {}

    # ORTHOGONAL
    if rows == cols and np.array_equal(gr, rows * np.eye(rows, dtype=np.int64)):
        labels.append(Label.ORTHOGONAL)
    else:
        bad = [(i + 1, i + 1) for i in range(rows) if rows == cols and gr[i, i] != rows]
        bad += list(rs.nonzero_pairs())
        witnesses[Label.ORTHOGONAL] = tuple(bad)

    # QUASI_A: non-orthogonality graph is a disjoint union of >= 2 cliques
    edges = [(a - 1, b - 1) for (a, b) in cs.nonzero_pairs()]
    comps = _components(cols, edges)
    non_clique = [
        (a + 1, b + 1)
        for comp in comps
        for a, b in itertools.combinations(comp, 2)
        if cs[(a + 1, b + 1)] == 0
    ]
    if edges and len(comps) >= 2 and not non_clique:
        labels.append(Label.QUASI_A)
        info["quasi_a_groups"] = tuple(tuple(v + 1 for v in comp) for comp in comps)
    else:
        witnesses[Label.QUASI_A] = tuple(non_clique)

    # QUASI_B: products take exactly the two values {0, c}; groups = colour
    # classes of the c-graph.  Requiring a 0 rules out all-singleton groupings.
    nonzero = cs.nonzero_pairs()
    if nonzero and len(nonzero) < len(cs):
        c = next(iter(nonzero.values()))
        off = tuple(p for p, v in nonzero.items() if v != c)
        if not off:
            colors = minimum_coloring(cols, edges)
            labels.append(Label.QUASI_B)
            info["quasi_b_groups"] = _groups_from_colors(colors)
            info["quasi_b_constant"] = c
        else:
            witnesses[Label.QUASI_B] = off
    else:
        witnesses[Label.QUASI_B] = ()

    # SEMI_ROWS / SEMI_COLS: rectangular, exactly one Gram matrix diagonal
    rows_diag = not rs.nonzero_pairs()
    cols_diag = not nonzero
    if rows != cols and rows_diag != cols_diag:
        labels.append(Label.SEMI_ROWS if rows_diag else Label.SEMI_COLS)
        witnesses[Label.SEMI_COLS if rows_diag else Label.SEMI_ROWS] = tuple(
            nonzero if rows_diag else rs.nonzero_pairs()
        )
    else:
        witnesses[Label.SEMI_ROWS] = tuple(rs.nonzero_pairs())
        witnesses[Label.SEMI_COLS] = tuple(nonzero)

    # SEMI_SPLIT: n x 2n, first half orthogonal, second half non-orthogonal
    if cols == 2 * rows:
        first = list(range(1, rows + 1))
        second = list(range(rows + 1, cols + 1))
        bad = _split_holds(cs, first, second)
        if not bad:
            labels.append(Label.SEMI_SPLIT)
            info["semi_split_index"] = rows
            info["semi_split_columns"] = tuple(first)
        elif exhaustive_split and cols <= MAX_EXHAUSTIVE_SPLIT_COLS:
            for chosen in itertools.combinations(range(1, cols + 1), rows):
                rest = [c for c in range(1, cols + 1) if c not in chosen]
                if not _split_holds(cs, chosen, rest):
                    labels.append(Label.SEMI_SPLIT)
                    info["semi_split_columns"] = tuple(chosen)
                    break
            else:
                witnesses[Label.SEMI_SPLIT] = tuple(bad)
        else:
            witnesses[Label.SEMI_SPLIT] = tuple(bad)
    else:
        witnesses[Label.SEMI_SPLIT] = ()

    # NON_ORTHOGONAL: every column pair has a nonzero product
    zero_pairs = tuple(p for p, v in zip(cs.pairs, cs.values) if v == 0)
    if len(cs) > 0 and not zero_pairs:
        labels.append(Label.NON_ORTHOGONAL)
    else:
        witnesses[Label.NON_ORTHOGONAL] = zero_pairs

    if not labels:
        labels.append(Label.MIXED)

    return ClassificationReport(labels=tuple(labels), witnesses=witnesses, **info)
