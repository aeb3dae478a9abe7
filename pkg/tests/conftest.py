"""Shared fixtures; expensive enumerations are session-scoped so the
unit suites and the acceptance suite reuse one computation."""

import pytest

from fibercover import catalog, nielsen


@pytest.fixture(scope="session")
def ni_247_elements():
    return nielsen.enumerate_class(catalog.get("deg7-class-2.4.7"))


@pytest.fixture(scope="session")
def ni_327_elements():
    return nielsen.enumerate_class(catalog.get("deg7-class-3.2.7"))


@pytest.fixture(scope="session")
def ni_2227_elements():
    return nielsen.enumerate_class(catalog.get("deg7-class-2^3.7"))


@pytest.fixture(scope="session")
def ni_2227_braid_orbits():
    return nielsen.braid_orbits(catalog.get("deg7-class-2^3.7"))


@pytest.fixture(scope="session")
def ni_247_braid_orbits():
    return nielsen.braid_orbits(catalog.get("deg7-class-2.4.7"))


@pytest.fixture(scope="session")
def hs_m5_pairs():
    spec = catalog.get("hilbert-siegel-m5")
    return nielsen.paired_enumerate(
        spec.joint_spec, spec.degree_x, spec.branch_points
    )
