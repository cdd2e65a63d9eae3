import io
import json

import pytest

from src.experiments.factory import StudyFactory
from src.pipeline import ExperimentPipeline, run_pipeline
from src.states.pure import random_pure_state
from src.utils.error_handler import DomainError


def test_csv_output_is_byte_identical(make_config, tmp_path):
    first, second = tmp_path / "first.csv", tmp_path / "second.csv"
    run_pipeline(make_config("distortion", n_values=[2, 3], samples=3, out=str(first)))
    run_pipeline(make_config("distortion", n_values=[2, 3], samples=3, out=str(second)))
    assert first.read_bytes() == second.read_bytes()
    header = first.read_text().splitlines()[0]
    assert header == "n,sampled_pairs,max_discrepancy,mean_discrepancy,unconverged,max_feasibility"


def test_json_records(make_config):
    stream = io.StringIO()
    summary = ExperimentPipeline(make_config("recover-circle", n_values=[2], points=2, format="json")).run(stream)
    records = json.loads(stream.getvalue())
    assert summary["rows"] == 1
    assert summary["output"] is None
    assert records[0]["sampled_lambda_count"] == 2
    assert set(records[0]) == {
        "n", "sampled_lambda_count", "distortion_estimate", "gh_upper_bound",
        "max_relative_error", "unconverged", "max_feasibility",
    }


def test_runtime_column_only_with_timings(make_config):
    stream = io.StringIO()
    ExperimentPipeline(make_config("net", n_values=[2], samples=2, targets=2, timings=True)).run(stream)
    assert stream.getvalue().splitlines()[0].endswith(",runtime")


def test_summary_counts_unconverged_solves(make_config, rng, antipodal_pair):
    stream = io.StringIO()
    pipeline = ExperimentPipeline(make_config("distance", max_iters=1))
    summary = pipeline.run(stream, state_a=random_pure_state(4, rng), state_b=random_pure_state(4, rng))
    assert summary["unconverged"] == 1
    summary = pipeline.run(stream, state_a=antipodal_pair[0], state_b=antipodal_pair[1])
    assert summary["unconverged"] == 0


def test_output_directory_is_created(make_config, tmp_path):
    out = tmp_path / "nested" / "rows.csv"
    summary = run_pipeline(make_config("recover-circle", n_values=[2], points=1, out=str(out)))
    assert summary["output"] == str(out)
    assert out.read_text().count("\n") == 2


def test_unknown_study_in_custom_factory(make_config):
    factory = StudyFactory()
    factory._studies.pop("net")
    with pytest.raises(DomainError):
        ExperimentPipeline(make_config("net"), factory=factory)
