import numpy as np
import pytest

from orthokit import sign_matrix

# Matrices typed in verbatim from the worked examples.
HADAMARD_4 = [[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, -1, -1], [1, -1, -1, 1]]
CONFERENCE_4 = [[0, 1, 1, 1], [1, 0, -1, 1], [1, 1, 0, -1], [1, -1, -1, 0]]
ONES_KRON_H2 = [[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, 1, 1], [1, -1, 1, -1]]
H2 = [[1, 1], [1, -1]]
M2 = [[1, -1], [-1, 1]]
H2_JUXT_M2 = [[1, 1, 1, -1], [1, -1, -1, 1]]
TYPE_II_TABLE_4 = [[1, 2, 3, 4], [2, 4, 1, 3], [3, 1, 4, 2], [4, 3, 2, 1]]
CIRCULANT_4 = [[1, 2, 3, 4], [2, 3, 4, 1], [3, 4, 1, 2], [4, 1, 2, 3]]


@pytest.fixture
def rng():
    return np.random.default_rng(20061016)


@pytest.fixture
def fixtures():
    return {
        "hadamard4": sign_matrix(HADAMARD_4),
        "conference4": sign_matrix(CONFERENCE_4),
        "ones_kron_h2": sign_matrix(ONES_KRON_H2),
        "h2_juxt_m2": sign_matrix(H2_JUXT_M2),
    }


# -- acceptance summary: one line per criterion ----------------------------------

ACCEPTANCE_RESULTS: dict[int, tuple[str, bool]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        title, ok = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {num:2d}: {title}")
