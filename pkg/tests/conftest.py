import re

import numpy as np
import pytest

from spinwigner import validate_density

CRITERIA_DESCRIPTIONS = {
    1: "numeric Wigner equals the three-qubit closed form (50x50 grid, five mixing weights)",
    2: "point value at (pi/2, pi), nu=1 equals (1-3*sqrt3)/8 within 1e-12",
    3: "one-accelerated-qubit closed form matches the channel pipeline (incl. pole spot value)",
    4: "one-accelerated-qubit coefficient table matches the channel entrywise, diagonal sums to 1",
    5: "misprinted tables/forms flagged DISCREPANT while the pipeline passes the r->0 reduction",
    6: "quadrature normalization equals 1 within 1e-8 for ten representative states",
    7: "Husimi distribution is non-negative on the 91x181 grid for the same ten states",
    8: "negativity threshold bisection returns nu* = 1/(3*sqrt3) within 1e-8",
    9: "point law (1-3*sqrt3*nu*cos^k r)/8 within 1e-12; monotone in r and ordered in k",
    10: "figure export is byte-identical across runs with the exact CSV header",
}

_acceptance_results: dict[int, bool] = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    m = re.search(r"test_criterion_(\d+)", report.nodeid)
    if m:
        _acceptance_results[int(m.group(1))] = report.passed


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_acceptance_results):
        status = "PASS" if _acceptance_results[num] else "FAIL"
        terminalreporter.write_line(
            f"[{status}] criterion {num:2d}: {CRITERIA_DESCRIPTIONS.get(num, '')}"
        )


def random_density(n_qubits, rng):
    """Random full-rank density matrix from the Ginibre ensemble."""
    dim = 2**n_qubits
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    m = g @ g.conj().T
    return validate_density(m / np.trace(m).real, n_qubits)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
