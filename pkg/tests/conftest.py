from functools import reduce

import numpy as np
import pytest

SINGLE = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}
PHASES = [1, 1j, -1, -1j]


def pauli_matrix(p):
    """Dense matrix of a Pauli element, qubit 0 as the leftmost tensor factor."""
    return PHASES[p.phase] * reduce(np.kron, [SINGLE[c] for c in p.letters])


@pytest.fixture
def matrix_of():
    return pauli_matrix


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
