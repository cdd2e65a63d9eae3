import json

import numpy as np
import pytest

from src.fourier.trig_poly import TrigPoly
from src.states.factory import read_state, state_factory, write_state
from src.states.measure import CircleMeasure
from src.states.moments import MomentState, to_moment_state
from src.states.pure import PureState, fejer_state
from src.utils.error_handler import DomainError, StateParseError


def test_pure_state_file(tmp_path):
    path = write_state(fejer_state(4, 0.3), tmp_path / "tau.json")
    state = read_state(path)
    assert isinstance(state, PureState)
    assert state.density.allclose(fejer_state(4, 0.3).density, atol=1e-14)
    assert json.loads(path.read_text())["kind"] == "pure"


def test_moment_state_file(tmp_path):
    original = to_moment_state(fejer_state(3, 1.0))
    state = read_state(write_state(original, tmp_path / "m.json"))
    assert isinstance(state, MomentState)
    np.testing.assert_allclose(state.moments, original.moments, atol=1e-15)


def test_measure_file(tmp_path):
    density = TrigPoly.from_dict({-1: 0.5, 0: 1.0, 1: 0.5}, density=True)
    mu = CircleMeasure.mixture([0.4, 0.6], [CircleMeasure.dirac(2.0), CircleMeasure.from_density(density)])
    loaded = read_state(write_state(mu, tmp_path / "mu.json"))
    assert isinstance(loaded, CircleMeasure)
    assert loaded.total_mass == pytest.approx(1.0)
    assert loaded.moment(1) == pytest.approx(mu.moment(1))


def test_measure_without_density():
    mu = state_factory.parse('{"kind": "measure", "atoms": [[0.0, 0.5], [3.14, 0.5]]}')
    assert mu.density is None
    assert mu.atom_mass == pytest.approx(1.0)


def test_malformed_json_reports_position():
    with pytest.raises(StateParseError) as info:
        state_factory.parse('{"kind": "pure",\n "n": 2,\n "roots": [0.0,]}')
    assert info.value.line == 3
    assert info.value.column is not None


def test_unknown_kind():
    with pytest.raises(StateParseError, match="Unknown state kind"):
        state_factory.parse('{"kind": "mixed", "n": 2}')


def test_root_count_must_match_size():
    with pytest.raises(StateParseError):
        state_factory.parse('{"kind": "pure", "n": 3, "roots": [0.0]}')


def test_moment_record_needs_unit_mass():
    with pytest.raises(StateParseError):
        state_factory.parse('{"kind": "moment", "n": 2, "moments": [[0, 0], [2, 0], [0, 0]]}')


def test_negative_atom_weight():
    with pytest.raises(StateParseError):
        state_factory.parse('{"kind": "measure", "atoms": [[0.0, -1.0]]}')


def test_parse_errors_are_domain_errors():
    assert issubclass(StateParseError, DomainError)


def test_missing_file(tmp_path):
    with pytest.raises(StateParseError):
        read_state(tmp_path / "absent.json")


def test_supported_kinds():
    assert set(state_factory.get_supported_kinds()) == {"pure", "moment", "measure"}
