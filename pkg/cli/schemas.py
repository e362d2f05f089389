# CLI request models
"""Parsed command-line request"""

from enum import Enum
from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field


class Command(str, Enum):
    BUILD = "build"
    QMIN = "qmin"
    GAMMA = "gamma"
    ENUMERATE = "enumerate"
    VERIFY = "verify"
    SWEEP = "sweep"
    EXTRACT_UNICYCLIC = "extract-unicyclic"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    GRAPH6 = "graph6"
    TEXT = "text"


DEFAULT_FORMATS: Dict[Command, OutputFormat] = {
    Command.BUILD: OutputFormat.GRAPH6,
    Command.QMIN: OutputFormat.TEXT,
    Command.GAMMA: OutputFormat.TEXT,
    Command.ENUMERATE: OutputFormat.GRAPH6,
    Command.VERIFY: OutputFormat.JSON,
    Command.SWEEP: OutputFormat.CSV,
    Command.EXTRACT_UNICYCLIC: OutputFormat.GRAPH6,
}


class CliConfig(BaseModel):
    """One parsed invocation: the command, its flags and the output format"""

    model_config = ConfigDict(frozen=True)

    command: Command
    params: Dict[str, Any] = Field(default_factory=dict)
    output_format: OutputFormat
    size_overrides: Dict[str, bool] = Field(default_factory=dict)
    threads: Optional[int] = None
    log_level: Optional[str] = None

    @property
    def allow_large(self) -> bool:
        return self.size_overrides.get("allow_large", False)
