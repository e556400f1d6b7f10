import pytest

from osctomo import DriveProfile, solve_epsilon


@pytest.fixture(scope="session")
def constant_traj():
    return solve_epsilon(DriveProfile.constant(1.0), 20.0, 1e-3)


@pytest.fixture(scope="session")
def free_traj():
    return solve_epsilon(DriveProfile.free(), 20.0, 1e-3)


@pytest.fixture(scope="session")
def resonance_traj():
    return solve_epsilon(DriveProfile.parametric_resonance(0.01), 20.0, 1e-3)
