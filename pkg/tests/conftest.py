from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from edgedepth.enumeration import cached_connected_graphs


@pytest.fixture(scope="session")
def connected_upto_7():
    return {n: cached_connected_graphs(n, "all") for n in range(2, 8)}


@pytest.fixture(scope="session")
def chordal_upto_7():
    return {n: cached_connected_graphs(n, "chordal") for n in range(2, 8)}
