# Verdict enum
"""Verdict and execution-mode enums"""

from enum import Enum


class Verdict(str, Enum):
    """Outcome of a verification check"""

    PASS = "pass"
    FAIL = "fail"
    INDETERMINATE = "indeterminate"

    @property
    def exit_code(self) -> int:
        return _EXIT_CODES[self]

    @property
    def severity(self) -> int:
        # merge order: fail > indeterminate > pass
        return _SEVERITY[self]


_EXIT_CODES = {Verdict.PASS: 0, Verdict.FAIL: 1, Verdict.INDETERMINATE: 2}
_SEVERITY = {Verdict.PASS: 0, Verdict.INDETERMINATE: 1, Verdict.FAIL: 2}


class ExecutionMode(str, Enum):
    """Work-unit execution strategy"""

    SEQUENTIAL = "sequential"
    PARALLEL = "parallel"
