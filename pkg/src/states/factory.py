# src/states/factory.py
import json
from pathlib import Path
from typing import Dict, List, Type, Union

from pydantic import BaseModel, ValidationError

from ..utils.error_handler import DomainError, StateParseError
from ..utils.logger import logger
from .measure import CircleMeasure
from .moments import MomentState
from .pure import PureState
from .schema import CircleMeasureRecord, MomentStateRecord, PureStateRecord

PersistedState = Union[PureState, MomentState, CircleMeasure]


class StateReaderFactory:
    """
    Registry of persisted state formats, keyed by the ``kind`` field of the JSON document.
    Converts between domain objects and their pydantic records.
    """

    def __init__(self):
        """Initialize the factory with the built-in record types."""
        self._records: Dict[str, Type[BaseModel]] = {}

        self.register_record("pure", PureStateRecord)
        self.register_record("moment", MomentStateRecord)
        self.register_record("measure", CircleMeasureRecord)

    def register_record(self, kind: str, record_class: Type[BaseModel]) -> None:
        """
        Register a record class for a ``kind`` tag.

        Args:
            kind: Value of the ``kind`` field identifying the format.
            record_class: Pydantic model with a ``to_state`` method.
        """
        if kind in self._records:
            logger.warning(
                f"Record for kind '{kind}' is being overridden from "
                f"{self._records[kind].__name__} to {record_class.__name__}"
            )
        self._records[kind] = record_class
        logger.debug(f"Registered {record_class.__name__} for kind '{kind}'")

    def get_supported_kinds(self) -> List[str]:
        return list(self._records.keys())

    def parse(self, text: str) -> PersistedState:
        """
        Parse a JSON document into a state or measure.

        Raises:
            StateParseError: On malformed JSON, an unknown kind or a record
                that violates the type's invariants.
        """
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as e:
            raise StateParseError(f"Malformed state JSON: {e.msg}", e.lineno, e.colno, e) from e

        if not isinstance(payload, dict):
            raise StateParseError("State JSON must be an object")
        kind = payload.get("kind")
        if kind not in self._records:
            supported = ", ".join(self.get_supported_kinds())
            raise StateParseError(f"Unknown state kind '{kind}'. Supported kinds are: {supported}")

        try:
            record = self._records[kind].model_validate(payload)
            return record.to_state()
        except ValidationError as e:
            raise StateParseError(f"Invalid '{kind}' record: {e.errors()[0]['msg']}", original_error=e) from e
        except DomainError as e:
            raise StateParseError(f"Invalid '{kind}' record: {e.message}", original_error=e) from e

    def read_state(self, file_path: Union[str, Path]) -> PersistedState:
        file_path = Path(file_path)
        logger.info(f"Reading state from {file_path}")
        try:
            text = file_path.read_text(encoding="utf-8")
        except OSError as e:
            raise StateParseError(f"Cannot read state file {file_path}: {e}", original_error=e) from e
        return self.parse(text)

    def dumps(self, state: PersistedState) -> str:
        if isinstance(state, PureState):
            record = PureStateRecord.from_state(state)
        elif isinstance(state, MomentState):
            record = MomentStateRecord.from_state(state)
        elif isinstance(state, CircleMeasure):
            record = CircleMeasureRecord.from_measure(state)
        else:
            raise DomainError(f"Cannot persist objects of type {type(state).__name__}")
        return record.model_dump_json(indent=2)

    def write_state(self, state: PersistedState, file_path: Union[str, Path]) -> Path:
        file_path = Path(file_path)
        file_path.parent.mkdir(parents=True, exist_ok=True)
        file_path.write_text(self.dumps(state), encoding="utf-8")
        logger.info(f"Wrote {state!r} to {file_path}")
        return file_path


# Create a singleton instance of the factory
state_factory = StateReaderFactory()


def read_state(file_path: Union[str, Path]) -> PersistedState:
    """
    Convenience function to read a persisted state using the factory.

    Args:
        file_path: Path to the JSON file.

    Returns:
        A PureState, MomentState or CircleMeasure.
    """
    return state_factory.read_state(file_path)


def write_state(state: PersistedState, file_path: Union[str, Path]) -> Path:
    """Convenience function to persist a state using the factory."""
    return state_factory.write_state(state, file_path)
