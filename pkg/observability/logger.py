"""Structured logging for specq, built on structlog.

Everything is written to stderr. Stdout belongs to the graph6, CSV and JSON
output of the CLI.
"""

import logging
import sys
from typing import Any

import numpy as np
import structlog
from structlog.typing import EventDict, Processor, WrappedLogger

from graph_core.graph import Graph
from graph_core.graph6 import graph6_encode


def render_graph_fields(_: WrappedLogger, __: str, event_dict: EventDict) -> EventDict:
    """Replace Graph values with graph6 text and numpy scalars with Python numbers."""
    for key, value in event_dict.items():
        if isinstance(value, Graph):
            event_dict[key] = graph6_encode(value)
        elif isinstance(value, np.generic):
            event_dict[key] = value.item()
    return event_dict


def configure_logging(level: str = "WARNING", json_logs: bool = True) -> None:
    """
    Configure structlog over the stdlib logging bridge.

    Args:
        level: DEBUG, INFO, WARNING, ERROR or CRITICAL
        json_logs: JSON lines when true, the console renderer otherwise
    """
    logging.basicConfig(
        format="%(message)s",
        level=getattr(logging, level.upper()),
        stream=sys.stderr,
        force=True,
    )

    renderer: Processor = (
        structlog.processors.JSONRenderer()
        if json_logs
        else structlog.dev.ConsoleRenderer(colors=False)
    )

    processors: list[Processor] = [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.filter_by_level,
        structlog.stdlib.add_logger_name,
        structlog.stdlib.add_log_level,
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.format_exc_info,
        render_graph_fields,
        renderer,
    ]

    structlog.configure(
        processors=processors,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )


def get_logger(name: str) -> Any:
    return structlog.get_logger(name)


def bind_run_context(**context: Any) -> None:
    """Attach key-value pairs to every event logged for the current command."""
    structlog.contextvars.clear_contextvars()
    structlog.contextvars.bind_contextvars(**context)


def log_with_context(
    logger: Any,
    level: str,
    message: str,
    **context: Any,
) -> None:
    """
    Log at a level chosen at run time.

    Unknown level names fall back to info.
    """
    log_method = getattr(logger, level.lower(), logger.info)
    log_method(message, **context)
