# src/experiments/base_study.py
from abc import ABC, abstractmethod
from typing import Any, Dict, List

import numpy as np

from ..utils.error_handler import TruncationError, error_handler
from ..utils.logger import logger
from .schema import ExperimentConfig

Row = Dict[str, Any]


class BaseStudy(ABC):
    """
    Abstract base class for all experiment studies.
    Defines the common interface that every subcommand's study must follow.
    """

    def __init__(self):
        self.logger = logger

    @property
    @abstractmethod
    def name(self) -> str:
        """
        Subcommand handled by this study.
        Must be implemented by subclasses.
        """
        pass

    @property
    @abstractmethod
    def columns(self) -> List[str]:
        """Fixed output columns, in order; ``runtime`` is appended when timings are requested."""
        pass

    default_n_values: List[int] = []

    def n_values(self, cfg: ExperimentConfig) -> List[int]:
        return cfg.n_values if cfg.n_values is not None else list(self.default_n_values)

    def output_columns(self, cfg: ExperimentConfig) -> List[str]:
        return self.columns + (["runtime"] if cfg.timings else [])

    @staticmethod
    def rng(cfg: ExperimentConfig, *stream: int) -> np.random.Generator:
        """Generator seeded by the run seed and a per-row stream key."""
        return np.random.default_rng([cfg.seed, *stream])

    @error_handler(
        error_type=TruncationError,
        message="Study failed",
        log_traceback=True,
        raise_error=True
    )
    def run(self, cfg: ExperimentConfig, **kwargs) -> List[Row]:
        """
        Run the study and return its rows in output order.

        Args:
            cfg: The experiment configuration.
            **kwargs: Study-specific inputs, e.g. an explicit target.

        Returns:
            List of row dictionaries keyed by ``output_columns``.
        """
        self.logger.info(f"Running {self.name} study")
        rows = self._run(cfg, **kwargs)
        if not cfg.timings:
            for row in rows:
                row.pop("runtime", None)
        self.logger.info(f"{self.name} study produced {len(rows)} rows")
        return rows

    @abstractmethod
    def _run(self, cfg: ExperimentConfig, **kwargs) -> List[Row]:
        """
        Implementation-specific body of the study.
        Must be implemented by subclasses.
        """
        pass
