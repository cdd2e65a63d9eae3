# src/pipeline.py
import sys
import time
from pathlib import Path
from typing import Any, Dict, List, Optional, TextIO

import pandas as pd

from .experiments.base_study import Row
from .experiments.factory import StudyFactory, study_factory
from .experiments.schema import ExperimentConfig
from .utils.error_handler import TruncationError, error_handler
from .utils.logger import logger

FLOAT_FORMAT = "%.12g"
JSON_PRECISION = 12


class ExperimentPipeline:
    """
    Runs one experiment end to end: dispatches to the study registered for the
    subcommand, buffers its rows and writes them as a table.
    """

    def __init__(self, cfg: ExperimentConfig, factory: Optional[StudyFactory] = None):
        """
        Initialize the pipeline.

        Args:
            cfg: The experiment configuration.
            factory: Study registry. Defaults to the shared instance.
        """
        self.cfg = cfg
        self.factory = factory or study_factory
        self.study = self.factory.get_study(cfg.subcommand)

    def to_frame(self, rows: List[Row]) -> pd.DataFrame:
        """Rows as a DataFrame with the study's columns in their fixed order."""
        return pd.DataFrame(rows, columns=self.study.output_columns(self.cfg))

    def render(self, frame: pd.DataFrame) -> str:
        if self.cfg.format == "json":
            return frame.to_json(orient="records", double_precision=JSON_PRECISION) + "\n"
        return frame.to_csv(index=False, float_format=FLOAT_FORMAT)

    def write(self, frame: pd.DataFrame, stream: Optional[TextIO] = None) -> Optional[Path]:
        """
        Write the table to ``cfg.out``, or to ``stream`` (stdout) when no path is set.

        Returns:
            The output path, or None when written to a stream.
        """
        text = self.render(frame)
        if self.cfg.out is None:
            (stream or sys.stdout).write(text)
            return None
        path = Path(self.cfg.out)
        path.parent.mkdir(parents=True, exist_ok=True)
        # fixed newline keeps the bytes identical across platforms
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        logger.info(f"Wrote {len(frame)} rows to {path}")
        return path

    @error_handler(
        error_type=TruncationError,
        message="Experiment pipeline failed",
        log_traceback=True,
        raise_error=True
    )
    def run(self, stream: Optional[TextIO] = None, **kwargs) -> Dict[str, Any]:
        """
        Run the study and write its table.

        Args:
            stream: Destination when ``cfg.out`` is not set; defaults to stdout.
            **kwargs: Study-specific inputs passed through to the study.

        Returns:
            Summary dictionary of the run.
        """
        start_time = time.time()
        logger.info(f"Starting '{self.cfg.subcommand}' run (seed {self.cfg.seed})")

        rows = self.study.run(self.cfg, **kwargs)
        frame = self.to_frame(rows)
        path = self.write(frame, stream)

        duration = time.time() - start_time
        unconverged = int(frame["unconverged"].sum()) if "unconverged" in frame else 0
        if "converged" in frame:
            unconverged += int((~frame["converged"].astype(bool)).sum())
        summary = {
            "subcommand": self.cfg.subcommand,
            "rows": len(frame),
            "unconverged": unconverged,
            "output": str(path) if path else None,
            "duration_seconds": duration,
        }

        logger.info(f"Run '{self.cfg.subcommand}' completed in {duration:.2f} seconds: "
                    f"{summary['rows']} rows, {unconverged} unconverged solves")
        return summary


def run_pipeline(cfg: ExperimentConfig, **kwargs) -> Dict[str, Any]:
    """
    Convenience function to run an experiment and write its table.

    Args:
        cfg: The experiment configuration.
        **kwargs: Study-specific inputs.

    Returns:
        Summary of the run.
    """
    return ExperimentPipeline(cfg).run(**kwargs)
