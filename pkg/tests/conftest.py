"""Shared fixtures.

The five-per-side exhaustive run takes a few minutes even on several
cores, so every slow test that needs it draws from one session-scoped
computation instead of repeating it.
"""

import pytest

from genusforge.search import exhaustive_search


@pytest.fixture(scope="session")
def five_per_side_report():
    return exhaustive_search(5, jobs=6, batch_size=1 << 15)
