"""Shared fixtures.

The exhaustive sweeps are the slowest thing in the suite, so they run once
per session and every test reads from the same report map.
"""

import pytest

from large_atlas import sweep


@pytest.fixture(scope="session")
def sweep_reports():
    return {r.case_id: r for r in sweep.run_all()}
