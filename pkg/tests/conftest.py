"""Shared fixtures for the test suite."""

import pytest

from models import BackgroundParams, ParticleParams


@pytest.fixture
def flat_bg():
    """Non-conical frame rotating at omega = 1."""
    return BackgroundParams(eta=1.0, omega=1.0)


@pytest.fixture
def cone_bg():
    return BackgroundParams(eta=0.5, omega=2.0)


@pytest.fixture
def weak_particle():
    """m = 1, d = 0.01, E0 = 1: the weak-field reference case."""
    return ParticleParams(m=1.0, d=0.01, e0=1.0)


def unit_delta_particle(bg: BackgroundParams, m: float = 1.0) -> ParticleParams:
    """Particle with d*E0*omega*eta = 1 in the given frame."""
    return ParticleParams(m=m, d=1.0 / (bg.omega * bg.eta), e0=1.0)


@pytest.fixture
def unit_delta():
    return unit_delta_particle
