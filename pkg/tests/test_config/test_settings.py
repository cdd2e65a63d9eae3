from src.config.settings import Settings, settings
from src.spectral.distance import SolverOptions


def test_environment_overrides_are_typed(monkeypatch):
    monkeypatch.setenv("GRID_SIZE", "512")
    monkeypatch.setenv("SOLVER_TOL", "1e-6")
    monkeypatch.setenv("SHOW_PROGRESS", "false")
    fresh = Settings()
    assert fresh.GRID_SIZE == 512
    assert fresh.SOLVER_TOL == 1e-6
    assert fresh.SHOW_PROGRESS is False


def test_unparsable_value_falls_back(monkeypatch):
    monkeypatch.setenv("MAX_WORKERS", "many")
    assert Settings().MAX_WORKERS == 4


def test_solver_options_follow_settings():
    options = SolverOptions.from_settings(strict=True)
    assert options.max_iters == settings.SOLVER_MAX_ITERS
    assert options.stall_window == settings.SOLVER_STALL_WINDOW
    assert options.strict


def test_to_dict_lists_numerical_defaults():
    values = settings.to_dict()
    assert "GRID_SIZE" in values
    assert "default_settings" not in values
