"""Shared fixtures for the partition_polynomials test suite."""

import pytest

from partition_polynomials.partpoly import build_cache


@pytest.fixture(scope="session")
def cache():
    """P_0..P_200, built once per test session."""
    return build_cache(200)
