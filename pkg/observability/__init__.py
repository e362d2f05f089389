"""Logging helpers."""

from observability.logger import (
    bind_run_context,
    configure_logging,
    get_logger,
    log_with_context,
    render_graph_fields,
)

__all__ = [
    "bind_run_context",
    "configure_logging",
    "get_logger",
    "log_with_context",
    "render_graph_fields",
]
