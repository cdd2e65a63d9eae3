# src/experiments/factory.py
from typing import Dict, List

from ..utils.error_handler import DomainError
from ..utils.logger import logger
from .approximation import ApproximationStudy
from .base_study import BaseStudy, Row
from .distance_query import DistanceQueryStudy
from .distortion import DistortionStudy
from .net import NetStudy
from .recovery import RecoveryStudy
from .schema import ExperimentConfig


class StudyFactory:
    """
    Factory class for the experiment studies.
    Manages the registry of studies keyed by subcommand and dispatches runs.
    """

    def __init__(self):
        """Initialize the factory with the built-in studies."""
        self._studies: Dict[str, BaseStudy] = {}

        self.register_study(DistortionStudy())
        self.register_study(ApproximationStudy())
        self.register_study(RecoveryStudy())
        self.register_study(DistanceQueryStudy())
        self.register_study(NetStudy())

    def register_study(self, study: BaseStudy) -> None:
        """
        Register a study under its subcommand name.

        Args:
            study: The study instance to register.
        """
        if study.name in self._studies:
            logger.warning(f"Study for '{study.name}' is being replaced by {study.__class__.__name__}")
        self._studies[study.name] = study
        logger.debug(f"Registered {study.__class__.__name__} for '{study.name}'")

    def get_supported_subcommands(self) -> List[str]:
        return list(self._studies.keys())

    def get_study(self, subcommand: str) -> BaseStudy:
        """
        Get the study for a subcommand.

        Raises:
            DomainError: If no study is registered for it.
        """
        study = self._studies.get(subcommand)
        if study is None:
            raise DomainError(
                f"No study registered for '{subcommand}'. Supported: {', '.join(self.get_supported_subcommands())}"
            )
        return study

    def run_study(self, cfg: ExperimentConfig, **kwargs) -> List[Row]:
        return self.get_study(cfg.subcommand).run(cfg, **kwargs)


# Create a singleton instance of the factory
study_factory = StudyFactory()


def get_study(subcommand: str) -> BaseStudy:
    return study_factory.get_study(subcommand)


def run_study(cfg: ExperimentConfig, **kwargs) -> List[Row]:
    """
    Convenience function to run the study selected by ``cfg.subcommand``.

    Args:
        cfg: The experiment configuration.
        **kwargs: Study-specific inputs.

    Returns:
        Rows in output order.
    """
    return study_factory.run_study(cfg, **kwargs)
