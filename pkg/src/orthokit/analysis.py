"""Verification routines: g-formula conformance, Gram identities, permutation census,
exact determinants, and claimed-vs-observed spectrum reports.

Everything here is exact integer arithmetic.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .compositions import (
    assemble_blocks,
    circulant_table,
    doubling,
    four_block,
    juxtapose,
    kronecker,
    mixed_block,
    type_ii_table,
)
from .errors import NotSquare, OrderTooLarge
from .generators import MMatrixKind, SignRule, all_ones, cycled_family, m_matrix, sylvester
from .matrix import (
    Axis,
    Groups,
    Pair,
    Spectrum,
    classify,
    col_spectrum,
    gram_cols,
    gram_rows,
    row_spectrum,
    sign_matrix,
    spectrum_from_gram,
)

DEFAULT_MAX_CENSUS_ORDER = 5


# -- g-formula conformance ------------------------------------------------------


@dataclass(frozen=True)
class ConformanceReport:
    """Row spectrum of an M-matrix checked against its orthogonal-number formula.

    A pair conforms when ``|g| = form(k)`` has a non-negative integer solution
    ``k``; that ``k`` is kept in ``k_witnesses``.  For odd ``n`` every ``g`` is
    odd and the mod-4 test only separates the two odd residues, which
    ``vacuous`` flags.
    """

    kind: MMatrixKind
    n: int
    rule: SignRule
    observed: Spectrum
    claimed_form: str
    offset: int  # |g| = 4k + offset
    conforming: tuple[bool, ...]
    k_witnesses: dict[Pair, int]
    vacuous: bool

    @property
    def clean(self) -> bool:
        return all(self.conforming)

    @property
    def abs_values(self) -> tuple[int, ...]:
        return self.observed.abs_values()


def formula_offset(kind, n: int) -> tuple[str, int]:
    """``(form, offset)`` with ``|g| = 4k + offset`` for the given kind and order."""
    kind = MMatrixKind.parse(kind)
    if kind is MMatrixKind.TYPE_I:
        return "4k+2-n", 2 - n
    if kind is MMatrixKind.TYPE_II or n % 2 == 0:
        return "4k-n", -n
    return "4k-2-n", -2 - n


def formula_conformance(kind, n: int, rule=SignRule.PARITY) -> ConformanceReport:
    kind = MMatrixKind.parse(kind)
    rule = SignRule(rule)
    spectrum = row_spectrum(m_matrix(kind, n, rule))
    form, offset = formula_offset(kind, n)
    conforming, witnesses = [], {}
    for pair, g in zip(spectrum.pairs, spectrum.values):
        k, rem = divmod(abs(g) - offset, 4)
        ok = rem == 0 and k >= 0
        conforming.append(ok)
        if ok:
            witnesses[pair] = k
    return ConformanceReport(
        kind=kind,
        n=n,
        rule=rule,
        observed=spectrum,
        claimed_form=form,
        offset=offset,
        conforming=tuple(conforming),
        k_witnesses=witnesses,
        vacuous=n % 2 == 1,
    )


# -- Gram structure of repeated juxtaposition ------------------------------------


@dataclass(frozen=True)
class GramCheck:
    holds: bool
    n: int
    m: int
    dd_t: np.ndarray
    d_t_d: np.ndarray
    rows_ok: bool
    cols_ok: bool


def gram_structure_check(h, m: int) -> GramCheck:
    """Check ``D D^T = mn I`` and ``D^T D = J_m (x) nI`` for ``D = [H : H : ... : H]`` (m copies)."""
    h = sign_matrix(h)
    n, c = h.shape
    if n != c:
        raise NotSquare(f"gram_structure_check needs a square matrix, got {n}x{c}")
    if m < 1:
        raise ValueError(f"repetition count must be >= 1, got {m}")
    d = juxtapose([h] * m)
    dd_t = gram_rows(d)
    d_t_d = gram_cols(d)
    eye = np.eye(n, dtype=np.int64)
    rows_ok = np.array_equal(dd_t, m * n * eye)
    cols_ok = np.array_equal(d_t_d, np.kron(np.ones((m, m), dtype=np.int64), n * eye))
    return GramCheck(rows_ok and cols_ok, n, m, dd_t, d_t_d, rows_ok, cols_ok)


# -- permutation census ----------------------------------------------------------


@dataclass(frozen=True)
class CensusReport:
    n: int
    total_arrangements: int
    distinct_count: int
    all_same_class: bool
    class_labels: tuple[str, ...]
    spectra_preserved: bool


def permutation_census(m, max_order: int = DEFAULT_MAX_CENSUS_ORDER) -> CensusReport:
    """Enumerate every row-permutation x column-permutation image of ``m``.

    Counts distinct images and checks that each one keeps the row and column
    spectra (as multisets) and the classification labels of ``m``.
    """
    m = sign_matrix(m)
    n, c = m.shape
    if n != c:
        raise NotSquare(f"permutation_census needs a square matrix, got {n}x{c}")
    if n > max_order:
        raise OrderTooLarge(f"census of order {n} exceeds the guard {max_order}")

    labels = classify(m).labels
    row_ms = row_spectrum(m).multiset()
    col_ms = col_spectrum(m).multiset()

    seen: set[bytes] = set()
    same_class = True
    spectra_ok = True
    total = 0
    perms = list(itertools.permutations(range(n)))
    for rp in perms:
        row_permuted = m[list(rp)]
        for cp in perms:
            total += 1
            image = row_permuted[:, list(cp)]
            key = image.tobytes()
            if key in seen:
                continue
            seen.add(key)
            if row_spectrum(image).multiset() != row_ms or col_spectrum(image).multiset() != col_ms:
                spectra_ok = False
            if classify(image).labels != labels:
                same_class = False

    return CensusReport(
        n=n,
        total_arrangements=total,
        distinct_count=len(seen),
        all_same_class=same_class,
        class_labels=tuple(lab.value for lab in labels),
        spectra_preserved=spectra_ok,
    )


# -- order guard and determinant -----------------------------------------------------


def hadamard_order_guard(n: int) -> bool:
    """Necessary condition for a Hadamard matrix of order ``n``: ``n in {1, 2}`` or ``4 | n``."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    return n in (1, 2) or n % 4 == 0


def bareiss_determinant(m) -> int:
    """Exact determinant of an integer matrix by fraction-free (Bareiss) elimination."""
    a = [[int(x) for x in row] for row in np.asarray(m)]
    n = len(a)
    if any(len(row) != n for row in a):
        raise NotSquare(f"determinant needs a square matrix, got {n}x{len(a[0]) if a else 0}")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class DeterminantCheck:
    determinant: int
    attains_bound: bool  # det^2 == n^n, i.e. |det(M / sqrt(n))| == 1


def determinant_check(m) -> DeterminantCheck:
    m = sign_matrix(m)
    n, c = m.shape
    if n != c:
        raise NotSquare(f"determinant needs a square matrix, got {n}x{c}")
    det = bareiss_determinant(m)
    return DeterminantCheck(det, det * det == n**n)


# -- claimed vs observed spectra --------------------------------------------------


@dataclass(frozen=True)
class Claim:
    """A stated spectrum for a construction.

    Either ``values`` (the exact value set that should appear) or
    ``predicate`` (a test every observed value must pass) is given.
    ``sign_free`` compares ``|g|`` instead of ``g``.  ``groups``, when set,
    is a claimed column grouping compared with the quasi-orthogonal (type A)
    groups found by :func:`classify`.
    """

    name: str
    axis: Axis
    claimed: str
    values: frozenset[int] | None = None
    predicate: Callable[[int], bool] | None = None
    sign_free: bool = False
    groups: Groups | None = None


@dataclass(frozen=True)
class ClaimResult:
    claim: Claim
    observed: dict[int, int]
    verdict: bool
    offending_values: tuple[int, ...] = ()
    observed_groups: Groups | None = None

    def as_dict(self) -> dict:
        out = {
            "claim": self.claim.name,
            "axis": self.claim.axis.value,
            "claimed": self.claim.claimed,
            "observed": self.observed,
            "verdict": "conforms" if self.verdict else "differs",
        }
        if self.offending_values:
            out["offendingValues"] = list(self.offending_values)
        if self.claim.groups is not None:
            out["claimedGroups"] = [list(g) for g in self.claim.groups]
            out["observedGroups"] = (
                None if self.observed_groups is None else [list(g) for g in self.observed_groups]
            )
        return out


def check_claim(m, claim: Claim) -> ClaimResult:
    m = sign_matrix(m)
    spectrum = row_spectrum(m) if claim.axis is Axis.ROW else col_spectrum(m)
    seen = set(spectrum.abs_values() if claim.sign_free else spectrum.values)
    if claim.values is not None:
        offending = tuple(sorted(seen - claim.values))
        ok = seen == set(claim.values)
    else:
        offending = tuple(sorted(v for v in seen if not claim.predicate(v)))
        ok = not offending
    observed_groups = None
    if claim.groups is not None:
        observed_groups = classify(m).quasi_a_groups
        normalise = lambda gs: None if gs is None else sorted(tuple(sorted(g)) for g in gs)  # noqa: E731
        ok = ok and normalise(observed_groups) == normalise(claim.groups)
    return ClaimResult(claim, spectrum.histogram(), ok, offending, observed_groups)


def _fmt_set(values: Iterable[int]) -> str:
    return "{" + ", ".join(str(v) for v in sorted(values)) + "}"


def claim_from_values(name: str, axis: Axis, values: Iterable[int], sign_free: bool = False, **kw) -> Claim:
    values = frozenset(values)
    text = ("|g| in " if sign_free else "g in ") + _fmt_set(values)
    return Claim(name, axis, text, values=values, sign_free=sign_free, **kw)


@dataclass(frozen=True)
class TaggedConstruction:
    """A construction together with the spectrum claims made about it."""

    name: str
    matrix: np.ndarray
    claims: tuple[Claim, ...]
    note: str = ""

    def results(self) -> list[ClaimResult]:
        return [check_claim(self.matrix, c) for c in self.claims]


#: The conference-style fixture exactly as displayed; it is *not*
#: ``zero_diagonal(sylvester(2))`` (row 2 differs).
CONFERENCE_FIXTURE = sign_matrix(
    [
        [0, 1, 1, 1],
        [1, 0, -1, 1],
        [1, 1, 0, -1],
        [1, -1, -1, 0],
    ]
)

#: The non-orthogonal 2x2 partner used in the half-orthogonal juxtaposition example.
NON_ORTHOGONAL_2 = sign_matrix([[1, -1], [-1, 1]])


def _times(factor: int, spectrum: Spectrum) -> set[int]:
    return {factor * g for g in spectrum.values}


def tagged_constructions(seed_kind=MMatrixKind.TYPE_II, n: int = 4, rule=SignRule.PARITY) -> list[TaggedConstruction]:
    """Every composition pattern paired with the spectrum its source states for it.

    ``n`` is the order of the Hadamard seed ``sylvester(log2 n)`` and of the
    M-matrix seed; it must be a power of two valid for ``seed_kind``.
    """
    k = int(math.log2(n))
    if 2**k != n:
        raise ValueError(f"n must be a power of two, got {n}")
    h = sylvester(k)
    mm = m_matrix(seed_kind, n, rule)
    g = row_spectrum(mm)
    h_fam = cycled_family(h)
    m_fam = cycled_family(mm)
    R, C = Axis.ROW, Axis.COLUMN

    def family(name, desc, pred) -> Claim:
        return Claim(name, R, desc, predicate=pred, sign_free=False)

    out = [
        TaggedConstruction(
            "conference-fixture",
            CONFERENCE_FIXTURE,
            (
                claim_from_values(
                    "conference-fixture", C, {0, 2}, sign_free=True, groups=((1, 4), (2, 3))
                ),
            ),
            note="claimed grouping {1,4},{2,3}; columns 1 and 4 are orthogonal",
        ),
        TaggedConstruction(
            "ones-kron-hadamard",
            kronecker(all_ones(2), sylvester(1)),
            (claim_from_values("ones-kron-hadamard", C, {0, 4}, groups=((1, 3), (2, 4))),),
        ),
        TaggedConstruction(
            "hadamard-juxt-nonorthogonal",
            juxtapose([sylvester(1), NON_ORTHOGONAL_2]),
            (claim_from_values("hadamard-juxt-nonorthogonal", C, {-2, 0, 2}),),
        ),
        TaggedConstruction(
            "ones-kron-m",
            kronecker(all_ones(2), mm),
            (claim_from_values("ones-kron-m", R, _times(2, g) | {2 * n}),),
        ),
        TaggedConstruction(
            "m-juxt-hadamard",
            juxtapose([mm, h]),
            (claim_from_values("m-juxt-hadamard", R, {0} | _times(4, g)),),
            note="juxtaposition adds inner products, so the observed values are those of M",
        ),
        TaggedConstruction(
            "hadamard-kron-m",
            kronecker(h, mm),
            (claim_from_values("hadamard-kron-m", R, {0} | _times(n, g)),),
        ),
        TaggedConstruction(
            "repeated-hadamard",
            juxtapose([h] * 3),
            (claim_from_values("repeated-hadamard", C, {0, n}),),
        ),
        TaggedConstruction(
            "doubling-m",
            doubling(mm),
            (claim_from_values("doubling-m", R, {0} | _times(2, g)),),
        ),
        TaggedConstruction(
            "four-block-m",
            four_block(mm),
            (claim_from_values("four-block-m", R, {0} | _times(4, g)),),
        ),
        TaggedConstruction(
            "mixed-block-hm",
            mixed_block(h, mm, "hm"),
            (
                family(
                    "mixed-block-hm",
                    "|g| = 2(4k-n), k >= 0",
                    lambda v: (abs(v) // 2 + n) % 4 == 0 and abs(v) % 2 == 0,
                ),
            ),
        ),
        TaggedConstruction(
            "type2-assembly",
            assemble_blocks(type_ii_table(n), h_fam),
            (
                claim_from_values("type2-assembly", R, {0, 4}),
                claim_from_values("type2-assembly-order", R, {0, n}),
            ),
        ),
        TaggedConstruction(
            "circulant-assembly",
            assemble_blocks(circulant_table(n), h_fam),
            (
                claim_from_values("circulant-assembly", R, {0, n * n}),
                claim_from_values("circulant-assembly-order", R, {0, n}),
            ),
            note="stated both as {0, n} and {0, n^2}; the worked case gives {0, 16}",
        ),
        TaggedConstruction(
            "cycled-circulant-m",
            assemble_blocks(circulant_table(n), m_fam),
            (
                family("cycled-circulant-m", "g in {4 g_i}", lambda v, s=_times(4, g): v in s),
                claim_from_values("cycled-circulant-m-order", R, {0, n}),
            ),
        ),
    ]
    return out


# -- reports ----------------------------------------------------------------------


def dual_spectra(m) -> tuple[Spectrum, Spectrum, Spectrum, Spectrum]:
    """Row and column spectra by both the pair loop and the Gram route.

    Returns ``(row_loop, row_gram, col_loop, col_gram)``.
    """
    m = sign_matrix(m)
    r, c = m.shape
    return (
        row_spectrum(m),
        spectrum_from_gram(gram_rows(m), Axis.ROW, c),
        col_spectrum(m),
        spectrum_from_gram(gram_cols(m), Axis.COLUMN, r),
    )


def spectra_agree(m) -> bool:
    rl, rg, cl, cg = dual_spectra(m)
    return rl.pairs == rg.pairs and rl.values == rg.values and cl.pairs == cg.pairs and cl.values == cg.values


def _groups_list(groups: Groups | None):
    return None if groups is None else [list(g) for g in groups]


def spectrum_report(
    m,
    claims: Sequence[Claim] = (),
    census: CensusReport | None = None,
) -> dict:
    """Machine-readable summary of a matrix.

    Keys, in order: ``dimensions``, ``rowSpectrumHistogram``,
    ``colSpectrumHistogram``, ``labels``, ``groupings``, ``conformance`` and,
    if a census is supplied, ``censusCounts``.
    """
    m = sign_matrix(m)
    report = classify(m)
    doc = {
        "dimensions": {"rows": int(m.shape[0]), "cols": int(m.shape[1])},
        "rowSpectrumHistogram": row_spectrum(m).histogram(),
        "colSpectrumHistogram": col_spectrum(m).histogram(),
        "labels": report.label_names,
        "groupings": {
            "quasiA": _groups_list(report.quasi_a_groups),
            "quasiB": _groups_list(report.quasi_b_groups),
            "quasiBConstant": report.quasi_b_constant,
            "semiSplitIndex": report.semi_split_index,
        },
        "conformance": [check_claim(m, c).as_dict() for c in claims],
    }
    if census is not None:
        doc["censusCounts"] = {
            "n": census.n,
            "totalArrangements": census.total_arrangements,
            "distinctCount": census.distinct_count,
            "allSameClass": census.all_same_class,
            "classLabels": list(census.class_labels),
            "spectraPreserved": census.spectra_preserved,
        }
    return doc


def conformance_document(report: ConformanceReport) -> dict:
    obs = report.observed
    return {
        "kind": report.kind.value,
        "n": report.n,
        "rule": report.rule.value,
        "claimedForm": report.claimed_form,
        "observed": obs.histogram(),
        "pairs": [
            {
                "pair": list(p),
                "g": g,
                "absG": abs(g),
                "conforming": ok,
                "k": report.k_witnesses.get(p),
            }
            for p, g, ok in zip(obs.pairs, obs.values, report.conforming)
        ],
        "conformingPairs": sum(report.conforming),
        "totalPairs": len(obs),
        "vacuous": report.vacuous,
        "verdict": "clean" if report.clean else "violations",
    }
