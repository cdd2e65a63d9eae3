# tests/conftest.py
import numpy as np
import pytest

from src.experiments.schema import ExperimentConfig
from src.spectral.distance import SolverOptions
from src.states.measure import CircleMeasure
from src.states.pure import fejer_state, pure_from_roots


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


@pytest.fixture
def fast_options():
    """Solver options tight enough for 1e-4 comparisons at small n."""
    return SolverOptions(
        max_iters=20000,
        tol=1e-11,
        stall_window=50,
        residual_tol=1e-8,
    )


@pytest.fixture
def antipodal_pair():
    """The n = 2 pure states with densities 1 - cos t and 1 + cos t."""
    return pure_from_roots([0.0]), pure_from_roots([np.pi])


@pytest.fixture
def fejer_states():
    return [fejer_state(8, 0.0), fejer_state(8, np.pi / 2), fejer_state(8, np.pi)]


@pytest.fixture
def antipodal_atoms():
    return CircleMeasure.dirac(0.0), CircleMeasure.dirac(np.pi)


@pytest.fixture
def make_config(tmp_path):
    """Build a quiet ExperimentConfig for a subcommand with test-sized defaults."""
    def build(subcommand: str, **overrides) -> ExperimentConfig:
        values = dict(
            subcommand=subcommand,
            quiet=True,
            workers=2,
            grid=1024,
            max_iters=20000,
            tol=1e-11,
        )
        values.update(overrides)
        return ExperimentConfig(**values)
    return build
