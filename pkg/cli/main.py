"""
specq entry point.

Exit codes: 0 pass or success, 1 verification fail, 2 indeterminate, 64 usage
or parameter-domain error, 65 malformed graph6, 70 eigensolver failure.
"""

import sys
from typing import IO, Optional, Sequence

from cli.commands import dispatch
from cli.parser import parse_args
from config.settings import settings
from execution.models.errors import (
    CliUsageError,
    EigensolverConvergenceError,
    EmptyClassError,
    FamilyAssumptionError,
    Graph6FormatError,
    GraphError,
    HypothesisError,
    ParameterDomainError,
    ProofStepError,
    SizeGuardError,
    SpecqError,
)
from observability.logger import (
    bind_run_context,
    configure_logging,
    get_logger,
    log_with_context,
)

logger = get_logger(__name__)

EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_SOFTWARE = 70

_EXIT_CODES = [
    (Graph6FormatError, EXIT_DATA),
    ((CliUsageError, ParameterDomainError, SizeGuardError, GraphError), EXIT_USAGE),
    ((EmptyClassError, HypothesisError), 2),
    ((FamilyAssumptionError, ProofStepError), 1),
    (EigensolverConvergenceError, EXIT_SOFTWARE),
]


def exit_code_for(error: SpecqError) -> int:
    for kinds, code in _EXIT_CODES:
        if isinstance(error, kinds):
            return code
    return EXIT_SOFTWARE


def _describe(error: SpecqError) -> str:
    message = f"error: {error.message}"
    if isinstance(error, Graph6FormatError) and error.line_number is not None:
        message += f" (line {error.line_number})"
    if isinstance(error, ParameterDomainError):
        message += f" [constraint: {error.constraint}]"
    if isinstance(error, FamilyAssumptionError):
        message += f" [gamma profile: {error.profile}]"
    if isinstance(error, ProofStepError) and error.graph6:
        message += f" [subgraph: {error.graph6}]"
    return message


def run(
    argv: Optional[Sequence[str]] = None,
    stdin: Optional[IO[str]] = None,
    stdout: Optional[IO[str]] = None,
    stderr: Optional[IO[str]] = None,
) -> int:
    """Parse, dispatch and map the outcome to an exit code."""
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    configure_logging(settings.log_level, settings.json_logs)
    try:
        settings.validate_threads()
    except ValueError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    try:
        config = parse_args(argv)
        bind_run_context(command=config.command.value)
        if config.log_level:
            configure_logging(config.log_level, settings.json_logs)
        return dispatch(config, stdin, stdout)
    except SpecqError as exc:
        code = exit_code_for(exc)
        level = "error" if code == EXIT_SOFTWARE else "info"
        log_with_context(
            logger, level, "command_failed", error_code=exc.error_code, exit_code=code
        )
        stderr.write(_describe(exc) + "\n")
        return code
    except SystemExit as exc:
        # --help
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
