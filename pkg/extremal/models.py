"""Report and result models for the verification surface."""

import math
from typing import Any, Dict, List, Optional, Sequence, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from execution.models.status import Verdict
from graph_core.graph import Graph
from graph_core.graph6 import graph6_encode

Scalar = Union[int, float, str, bool, None]
MAX_MERGED_WITNESSES = 20


class Witness(BaseModel):
    """A graph (as graph6) plus the numbers that make it a witness."""

    label: str
    graph6: Optional[str] = None
    values: Dict[str, Scalar] = Field(default_factory=dict)

    @classmethod
    def of(cls, label: str, graph: Optional[Graph] = None, **values: Scalar) -> "Witness":
        return cls(
            label=label,
            graph6=graph6_encode(graph) if graph is not None else None,
            values=values,
        )


class VerificationReport(BaseModel):
    """
    Outcome of one check.

    `margin` is the smallest slack observed (None when nothing numeric was
    compared, e.g. a vacuous pass); `tolerance` is the least margin a pass
    needs. Sweeps carry their CSV table in `csv_columns` / `csv_rows`.
    """

    check_id: str
    params: Dict[str, Any] = Field(default_factory=dict)
    verdict: Verdict
    margin: Optional[float] = None
    tolerance: float = 0.0
    witnesses: List[Witness] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    csv_columns: Optional[List[str]] = None
    csv_rows: List[List[Scalar]] = Field(default_factory=list)

    @model_validator(mode="after")
    def _verdict_consistent(self) -> "VerificationReport":
        if self.verdict is Verdict.PASS and self.margin is not None:
            if not self.margin >= self.tolerance:
                raise ValueError(
                    f"pass verdict with margin {self.margin} below tolerance {self.tolerance}"
                )
        if self.verdict is Verdict.FAIL and not self.witnesses:
            raise ValueError("fail verdict needs at least one witness")
        return self

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS


def verdict_from_slacks(slacks: Sequence[float], tolerance: float = 0.0) -> Verdict:
    return Verdict.PASS if all(s >= tolerance for s in slacks) else Verdict.FAIL


def min_or_none(values: Sequence[float]) -> Optional[float]:
    finite = [v for v in values if v is not None and math.isfinite(v)]
    return min(finite) if finite else None


def merge_reports(
    check_id: str,
    params: Dict[str, Any],
    reports: Sequence[VerificationReport],
    tolerance: Optional[float] = None,
) -> VerificationReport:
    """
    Ordered reduction of sub-reports: fail > indeterminate > pass.

    The margin is the least sub-margin; witnesses from failing then
    indeterminate sub-reports are kept in input order.
    """
    counts = {v: 0 for v in Verdict}
    for report in reports:
        counts[report.verdict] += 1
    if reports:
        verdict = max((r.verdict for r in reports), key=lambda v: v.severity)
    else:
        verdict = Verdict.PASS

    witnesses: List[Witness] = []
    for wanted in (Verdict.FAIL, Verdict.INDETERMINATE):
        for report in reports:
            if report.verdict is wanted:
                witnesses.extend(report.witnesses)
    notes = [
        f"{len(reports)} sub-checks: {counts[Verdict.PASS]} pass, "
        f"{counts[Verdict.INDETERMINATE]} indeterminate, {counts[Verdict.FAIL]} fail"
    ]
    for report in reports:
        if report.verdict is not Verdict.PASS:
            notes.extend(f"{report.params}: {note}" for note in report.notes)

    inherited = reports[0].tolerance if reports else 0.0
    return VerificationReport(
        check_id=check_id,
        params=params,
        verdict=verdict,
        margin=min_or_none([r.margin for r in reports if r.margin is not None]),
        tolerance=tolerance if tolerance is not None else inherited,
        witnesses=witnesses[:MAX_MERGED_WITNESSES],
        notes=notes,
    )


class GraphFilter(BaseModel):
    """Class membership filters for exhaustive enumeration."""

    model_config = ConfigDict(frozen=True)

    connected: bool = True
    non_bipartite: bool = False
    gamma: Optional[int] = None
    odd_girth: Optional[int] = None
    unicyclic: bool = False
    pendant_count: Optional[int] = None


class MinimizerResult(BaseModel):
    """
    Exhaustive minimum of q_min over a graph class.

    `argmin` holds canonical graph6 strings within the tie tolerance of
    `min_value`; `runner_up_gap` is infinite for a single-graph class.
    """

    class_params: Dict[str, Any]
    class_size: int
    argmin: List[str]
    min_value: float
    runner_up_gap: float
    expected: Optional[str] = None

    @model_validator(mode="after")
    def _check(self) -> "MinimizerResult":
        if not self.argmin:
            raise ValueError("argmin must be nonempty")
        if self.runner_up_gap < 0:
            raise ValueError("runner_up_gap must be nonnegative")
        return self

    @property
    def matches_expected(self) -> bool:
        return self.expected is not None and self.argmin == [self.expected]
