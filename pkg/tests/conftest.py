import pytest

import graphnim as gn


@pytest.fixture(scope="session")
def solvers():
    """One shared Solver per catalog graph so memo tables persist across
    tests."""
    return {gid: gn.Solver(gn.catalog_graph(gid)) for gid in gn.CATALOG_IDS}


@pytest.fixture(scope="session")
def triangle_solver():
    return gn.Solver(gn.triangle_graph())
