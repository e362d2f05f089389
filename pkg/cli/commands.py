"""Command handlers. Each writes to the output stream and returns an exit code."""

from typing import IO, Callable, Dict, Iterator, List, Optional

from cli.parser import require
from cli.report import emit_report, write_csv, write_json
from cli.schemas import CliConfig, Command, OutputFormat
from domination.solver import domination_number
from extremal.enumeration import enumerate_graphs
from extremal.families import build_V
from extremal.models import GraphFilter
from extremal.registry import CHECKS
from extremal.sweeps import SWEEPS
from extremal.unispan import extract_spanning_unicyclic
from execution.models.errors import CliUsageError
from graph_core.constructors import build_U, cycle, path, star
from graph_core.graph import Graph
from graph_core.graph6 import graph6_decode, graph6_encode, read_graph6_lines
from graph_core.structure import girth
from observability.logger import get_logger
from spectral.least import q_min

logger = get_logger(__name__)

Handler = Callable[[CliConfig, IO[str], IO[str]], int]


def _input_graphs(config: CliConfig, stdin: IO[str]) -> Iterator[Graph]:
    text = config.params.get("graph6")
    if text is not None:
        yield graph6_decode(text.strip(), line_number=1)
        return
    yield from read_graph6_lines(stdin)


def _build_graph(config: CliConfig) -> Graph:
    family = config.params["family"]
    if family == "U":
        n, k, g = require(config, "n", "k", "g")
        return build_U(n, k, g)
    if family == "V":
        n, gamma, g = require(config, "n", "gamma", "g")
        return build_V(n, gamma, g)
    if family == "C":
        (n,) = require(config, "n")
        return cycle(n)
    if family == "P":
        (n,) = require(config, "n")
        return path(n)
    if config.params.get("k") is not None:
        return star(config.params["k"])
    (n,) = require(config, "n")
    return star(n - 1)


def cmd_build(config: CliConfig, stdin: IO[str], out: IO[str]) -> int:
    graph = _build_graph(config)
    code = graph6_encode(graph)
    if config.output_format is OutputFormat.JSON:
        params = {k: config.params.get(k) for k in ("n", "k", "g", "gamma")}
        write_json({"family": config.params["family"], "params": params, "graph6": code}, out)
    else:
        out.write(code + "\n")
    return 0


def cmd_qmin(config: CliConfig, stdin: IO[str], out: IO[str]) -> int:
    columns = ["graph6", "qmin", "residual", "gap"]
    rows: List[list] = []
    for graph in _input_graphs(config, stdin):
        result = q_min(graph)
        code = graph6_encode(graph)
        if config.output_format is OutputFormat.JSON:
            record: Dict = {
                "graph6": code,
                "qmin": result.qmin,
                "residual": result.residual,
                "gap": result.gap,
            }
            if config.params.get("vector"):
                record["vector"] = [float(v) for v in result.vector]
            write_json(record, out)
        elif config.output_format is OutputFormat.CSV:
            rows.append([code, result.qmin, result.residual, result.gap])
        else:
            out.write(f"{code} {result.qmin:.12g}\n")
    if config.output_format is OutputFormat.CSV:
        write_csv(columns, rows, out)
    return 0


def cmd_gamma(config: CliConfig, stdin: IO[str], out: IO[str]) -> int:
    rows: List[list] = []
    for graph in _input_graphs(config, stdin):
        certificate = domination_number(graph)
        code = graph6_encode(graph)
        if config.output_format is OutputFormat.JSON:
            write_json(
                {
                    "graph6": code,
                    "gamma": certificate.gamma,
                    "witness": certificate.sorted_witness(),
                },
                out,
            )
        elif config.output_format is OutputFormat.CSV:
            rows.append([code, certificate.gamma, " ".join(map(str, certificate.sorted_witness()))])
        else:
            out.write(f"{code} {certificate.gamma}\n")
    if config.output_format is OutputFormat.CSV:
        write_csv(["graph6", "gamma", "witness"], rows, out)
    return 0


def cmd_enumerate(config: CliConfig, stdin: IO[str], out: IO[str]) -> int:
    (n,) = require(config, "n")
    filters = GraphFilter(
        connected=not config.params.get("include_disconnected", False),
        non_bipartite=config.params.get("non_bipartite", False),
        gamma=config.params.get("gamma"),
        odd_girth=config.params.get("odd_girth"),
        unicyclic=config.params.get("unicyclic", False),
        pendant_count=config.params.get("pendants"),
    )
    graphs = enumerate_graphs(
        n, filters, allow_large=config.allow_large, workers=config.threads
    )
    codes = [graph6_encode(graph) for graph in graphs]
    if config.output_format is OutputFormat.JSON:
        write_json(
            {
                "n": n,
                "filters": filters.model_dump(),
                "count": len(codes),
                "graphs": codes,
            },
            out,
        )
    elif config.output_format is OutputFormat.CSV:
        write_csv(["graph6"], [[code] for code in codes], out)
    elif config.output_format is OutputFormat.TEXT:
        out.write(f"{len(codes)} graphs\n")
    else:
        out.writelines(code + "\n" for code in codes)
    return 0


def cmd_verify(config: CliConfig, stdin: IO[str], out: IO[str]) -> int:
    overrides = dict(config.params)
    overrides.pop("check_id")
    overrides["allow_large"] = config.allow_large or None
    overrides["workers"] = config.threads
    report = CHECKS.run(config.params["check_id"], **overrides)
    emit_report(report, config.output_format, out)
    return report.verdict.exit_code


def cmd_sweep(config: CliConfig, stdin: IO[str], out: IO[str]) -> int:
    kind = config.params["kind"]
    runner, second = SWEEPS[kind]
    unused = sorted(
        f"--{name}"
        for name in ("k", "g", "gamma")
        if name != second and config.params.get(name) is not None
    )
    if config.threads is not None:
        unused.append("--threads")
    if unused:
        raise CliUsageError(
            f"sweep {kind} takes --n and --{second}, not {', '.join(unused)}",
            params={"kind": kind},
        )
    n, other = require(config, "n", second)
    report = runner(n, other)
    emit_report(report, config.output_format, out)
    return report.verdict.exit_code


def cmd_extract_unicyclic(config: CliConfig, stdin: IO[str], out: IO[str]) -> int:
    for graph in _input_graphs(config, stdin):
        result = extract_spanning_unicyclic(graph)
        code = graph6_encode(result)
        if config.output_format is OutputFormat.JSON:
            write_json(
                {
                    "source": graph6_encode(graph),
                    "graph6": code,
                    "edges": result.edge_count,
                    "girth": girth(result),
                    "gamma": domination_number(result).gamma,
                },
                out,
            )
        else:
            out.write(code + "\n")
    return 0


HANDLERS: Dict[Command, Handler] = {
    Command.BUILD: cmd_build,
    Command.QMIN: cmd_qmin,
    Command.GAMMA: cmd_gamma,
    Command.ENUMERATE: cmd_enumerate,
    Command.VERIFY: cmd_verify,
    Command.SWEEP: cmd_sweep,
    Command.EXTRACT_UNICYCLIC: cmd_extract_unicyclic,
}


def dispatch(config: CliConfig, stdin: IO[str], out: IO[str]) -> int:
    handler: Optional[Handler] = HANDLERS.get(config.command)
    if handler is None:
        raise CliUsageError(f"unknown command {config.command.value}")
    logger.info("command_dispatched", command=config.command.value, **config.params)
    return handler(config, stdin, out)
