"""Argument parsing: one subcommand per operation, usage errors raised not exited."""

import argparse
from typing import List, Optional, Sequence

from cli.schemas import DEFAULT_FORMATS, CliConfig, Command, OutputFormat
from extremal.registry import CHECKS
from extremal.sweeps import SWEEPS
from execution.models.errors import CliUsageError

FAMILIES = ("U", "V", "C", "P", "S")


class SpecqArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises CliUsageError instead of exiting with status 2"""

    def error(self, message: str):  # type: ignore[override]
        raise CliUsageError(f"{self.prog}: {message}")


def _common() -> argparse.ArgumentParser:
    common = SpecqArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=None, help="worker cap (SPECQ_THREADS)")
    common.add_argument(
        "--log-level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        default=None,
    )
    formats = common.add_mutually_exclusive_group()
    for fmt in OutputFormat:
        formats.add_argument(
            f"--{fmt.value}",
            dest="output_format",
            action="store_const",
            const=fmt.value,
            help=f"{fmt.value} output",
        )
    return common


def _graph_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "graph6",
        nargs="?",
        default=None,
        help="graph6 string; one per line on stdin when omitted",
    )


def build_parser() -> SpecqArgumentParser:
    parser = SpecqArgumentParser(
        prog="specq",
        description="Least signless-Laplacian eigenvalues, domination numbers and "
        "extremal-graph verification for small graphs.",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True
    common = [_common()]

    build = sub.add_parser("build", parents=common, help="construct a named graph")
    build.add_argument("--family", required=True, choices=FAMILIES)
    build.add_argument("--n", type=int)
    build.add_argument("--k", type=int)
    build.add_argument("--g", type=int)
    build.add_argument("--gamma", type=int)

    qmin = sub.add_parser("qmin", parents=common, help="least Q-eigenvalue with certificates")
    _graph_input(qmin)
    qmin.add_argument("--vector", action="store_true", help="include the eigenvector")

    gamma = sub.add_parser("gamma", parents=common, help="exact domination number")
    _graph_input(gamma)

    enum = sub.add_parser("enumerate", parents=common, help="graphs up to isomorphism")
    enum.add_argument("--n", type=int, required=True)
    enum.add_argument("--include-disconnected", action="store_true")
    enum.add_argument("--non-bipartite", action="store_true")
    enum.add_argument("--gamma", type=int)
    enum.add_argument("--odd-girth", type=int)
    enum.add_argument("--unicyclic", action="store_true")
    enum.add_argument("--pendants", type=int)
    enum.add_argument("--allow-large", action="store_true", help="permit order 8")

    verify = sub.add_parser("verify", parents=common, help="run a verification check")
    verify.add_argument("check_id", choices=CHECKS.list_all(), metavar="CHECK_ID")
    for flag in ("--n", "--k", "--g", "--gamma", "--max-n", "--trials", "--seed"):
        verify.add_argument(flag, type=int)
    verify.add_argument("--allow-large", action="store_true", help="permit order 8")

    sweep = sub.add_parser("sweep", parents=common, help="monotonicity sweep with CSV output")
    sweep.add_argument("kind", choices=sorted(SWEEPS))
    sweep.add_argument("--n", type=int, required=True)
    sweep.add_argument("--k", type=int)
    sweep.add_argument("--g", type=int)
    sweep.add_argument("--gamma", type=int)

    extract = sub.add_parser(
        "extract-unicyclic",
        parents=common,
        help="spanning unicyclic subgraph keeping the domination number",
    )
    _graph_input(extract)
    return parser


_GLOBAL = {"command", "output_format", "threads", "log_level", "allow_large"}


def parse_args(argv: Optional[Sequence[str]]) -> CliConfig:
    """Parse argv into a CliConfig; usage problems raise CliUsageError."""
    args = build_parser().parse_args(list(argv) if argv is not None else None)
    command = Command(args.command)
    fmt = OutputFormat(args.output_format) if args.output_format else DEFAULT_FORMATS[command]
    params = {k: v for k, v in vars(args).items() if k not in _GLOBAL}
    if args.threads is not None and args.threads < 1:
        raise CliUsageError(f"--threads must be positive, got {args.threads}")
    return CliConfig(
        command=command,
        params=params,
        output_format=fmt,
        size_overrides={"allow_large": bool(getattr(args, "allow_large", False))},
        threads=args.threads,
        log_level=args.log_level,
    )


def require(config: CliConfig, *names: str) -> List[int]:
    """Values of flags a command needs; missing ones are a usage error."""
    missing = [f"--{n.replace('_', '-')}" for n in names if config.params.get(n) is None]
    if missing:
        raise CliUsageError(
            f"{config.command.value} needs {', '.join(missing)}",
            params={"command": config.command.value},
        )
    return [config.params[n] for n in names]
