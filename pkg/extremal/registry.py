# Check discovery and dispatch
"""Registry of verification checks keyed by their stable identifiers"""

from collections import defaultdict
from typing import Any, Callable, Dict, List, Optional, Set

from pydantic import BaseModel, Field

from execution.models.errors import CliUsageError
from extremal.domination_checks import check_gamma_chain, check_half_bound, check_v_closed_form
from extremal.eigenvector_checks import check_sign_family, check_value_suite
from extremal.minimizer import check_final, check_main_g, check_minpengraph, check_minuni
from extremal.models import VerificationReport
from extremal.relocation import verify_relocation_random
from extremal.sweeps import (
    check_cycle_exclusion,
    check_uv,
    sweep_gamma,
    sweep_girth,
    sweep_girth_u,
    sweep_k,
)
from extremal.unispan import check_unispan_random
from observability.logger import get_logger

logger = get_logger(__name__)

CheckRunner = Callable[..., VerificationReport]

# worker count is passed to every check; only enumerating checks use it
_ALWAYS_SUPPLIED = {"workers"}


class CheckSpec(BaseModel):
    """Metadata about a registered check"""

    check_id: str
    description: str
    defaults: Dict[str, Any] = Field(default_factory=dict)
    options: List[str] = Field(default_factory=list)  # accepted but not defaulted
    tags: List[str] = Field(default_factory=list)

    @property
    def parameters(self) -> List[str]:
        return list(self.defaults) + self.options


class CheckRegistry:
    """Central registry for all checks"""

    def __init__(self):
        self._runners: Dict[str, CheckRunner] = {}
        self._specs: Dict[str, CheckSpec] = {}
        self._tags: Dict[str, Set[str]] = defaultdict(set)

    def register(self, spec: CheckSpec, runner: CheckRunner):
        """
        Register a check

        Args:
            spec: Check metadata, including default parameters
            runner: Callable taking the parameters as keywords
        """
        if spec.check_id in self._specs:
            logger.warning("check_overwritten", check_id=spec.check_id)
        self._runners[spec.check_id] = runner
        self._specs[spec.check_id] = spec
        for tag in spec.tags:
            self._tags[tag].add(spec.check_id)

    def get(self, check_id: str) -> Optional[CheckSpec]:
        return self._specs.get(check_id)

    def exists(self, check_id: str) -> bool:
        return check_id in self._specs

    def list_all(self) -> List[str]:
        """List all registered check ids in registration order"""
        return list(self._specs)

    def list_by_tag(self, tag: str) -> List[str]:
        return sorted(self._tags.get(tag, set()))

    def resolve_params(self, check_id: str, overrides: Dict[str, Any]) -> Dict[str, Any]:
        """
        Merge overrides into a check's defaults

        Args:
            check_id: Registered check id
            overrides: Candidate parameters; None values are ignored

        Returns:
            Keyword arguments for the runner

        Raises:
            KeyError: If the check is not registered
            CliUsageError: If an override names a parameter the check does not take
        """
        spec = self._specs[check_id]
        accepted = spec.parameters
        unknown = sorted(
            name
            for name, value in overrides.items()
            if value is not None and name not in accepted and name not in _ALWAYS_SUPPLIED
        )
        if unknown:
            flags = ", ".join("--" + name.replace("_", "-") for name in unknown)
            raise CliUsageError(
                f"check '{check_id}' does not take {flags}",
                params={"check_id": check_id, "accepted": accepted},
            )
        params = dict(spec.defaults)
        for name in accepted:
            if overrides.get(name) is not None:
                params[name] = overrides[name]
        return params

    def run(self, check_id: str, **overrides: Any) -> VerificationReport:
        if not self.exists(check_id):
            raise KeyError(f"unknown check '{check_id}'. Available checks: {self.list_all()}")
        params = self.resolve_params(check_id, overrides)
        logger.info("check_started", check_id=check_id, **params)
        report = self._runners[check_id](**params)
        logger.info("check_finished", check_id=check_id, verdict=report.verdict.value)
        return report


_ENUMERATION_OPTIONS = ["allow_large", "workers"]


def build_registry() -> CheckRegistry:
    registry = CheckRegistry()
    entries = [
        (
            CheckSpec(
                check_id="lemma-relocate",
                description="relocating a bipartite branch to a larger-|x| root never raises q_min",
                defaults={"trials": 500, "seed": 0},
                tags=["random", "eigenvector"],
            ),
            verify_relocation_random,
        ),
        (
            CheckSpec(
                check_id="lemma-value",
                description="|x| strictly increases away from the root on nonzero tree branches",
                defaults={"max_n": 16, "trials": 300, "seed": 0},
                tags=["family", "random", "eigenvector"],
            ),
            check_value_suite,
        ),
        (
            CheckSpec(
                check_id="lemma-sign",
                description="sign pattern of the first Q-eigenvector of every U_n^k(g)",
                defaults={"max_n": 16},
                tags=["family", "eigenvector"],
            ),
            check_sign_family,
        ),
        (
            CheckSpec(
                check_id="lemma-minpen-k",
                description="q_min(U_n^k(g)) strictly increasing in k",
                defaults={"n": 20, "g": 3},
                tags=["sweep"],
            ),
            sweep_k,
        ),
        (
            CheckSpec(
                check_id="lemma-minpen-g",
                description="q_min(U_n^k(g)) strictly increasing in odd g",
                defaults={"n": 15, "k": 1},
                tags=["sweep"],
            ),
            sweep_girth_u,
        ),
        (
            CheckSpec(
                check_id="cor-decr-gamma",
                description="q_min(V_n^gamma(g)) strictly decreasing in gamma",
                defaults={"n": 20, "g": 3},
                tags=["sweep"],
            ),
            sweep_gamma,
        ),
        (
            CheckSpec(
                check_id="cor-decr-girth",
                description="q_min(V_n^gamma(g)) strictly increasing in odd g",
                defaults={"n": 21, "gamma": 3},
                tags=["sweep"],
            ),
            sweep_girth,
        ),
        (
            CheckSpec(
                check_id="cor-uv",
                description="U_n^k(g) != V_n^gamma(g) implies a strictly larger q_min",
                defaults={"n": 20, "g": 3},
                tags=["sweep"],
            ),
            check_uv,
        ),
        (
            CheckSpec(
                check_id="lemma-unispan",
                description="spanning unicyclic odd-cycle subgraph with the same domination number",
                defaults={"trials": 1000, "max_n": 14, "seed": 0},
                tags=["random", "structure"],
            ),
            check_unispan_random,
        ),
        (
            CheckSpec(
                check_id="lemma-minpengraph",
                description="U_n^k(g) uniquely minimizes q_min over unicyclic graphs, k pendants",
                defaults={"n": 7, "k": 2, "g": 3},
                options=_ENUMERATION_OPTIONS,
                tags=["exhaustive"],
            ),
            check_minpengraph,
        ),
        (
            CheckSpec(
                check_id="thm-minuni",
                description="V_n^gamma(g) uniquely minimizes q_min over unicyclic graphs",
                defaults={"n": 7, "gamma": 2, "g": 3},
                options=_ENUMERATION_OPTIONS,
                tags=["exhaustive"],
            ),
            check_minuni,
        ),
        (
            CheckSpec(
                check_id="thm-main-g",
                description="V_n^gamma(g) uniquely minimizes q_min at odd girth g",
                defaults={"n": 6, "gamma": 2, "g": 5},
                options=_ENUMERATION_OPTIONS,
                tags=["exhaustive"],
            ),
            check_main_g,
        ),
        (
            CheckSpec(
                check_id="cor-final",
                description="V_n^gamma(3) uniquely minimizes q_min over non-bipartite graphs",
                defaults={"n": 7, "gamma": 2},
                options=_ENUMERATION_OPTIONS,
                tags=["exhaustive"],
            ),
            check_final,
        ),
        (
            CheckSpec(
                check_id="cor-cycle-exclusion",
                description="q_min(C_n) > q_min(U_n^1(n-2)) for odd n",
                defaults={"n": 9},
                tags=["family"],
            ),
            check_cycle_exclusion,
        ),
        (
            CheckSpec(
                check_id="v-closed-form",
                description="V_n^gamma(3) = U_n^(n-3 gamma)(3), or U_n^1(3) near n = 3 gamma",
                defaults={"n": 10, "gamma": 3},
                tags=["family", "domination"],
            ),
            check_v_closed_form,
        ),
        (
            CheckSpec(
                check_id="gamma-chain",
                description="gamma(U_n^k(g)) non-increasing in k, realizing every feasible gamma",
                defaults={"n": 20, "g": 3},
                tags=["family", "domination"],
            ),
            check_gamma_chain,
        ),
        (
            CheckSpec(
                check_id="bound-half",
                description="gamma <= n/2 without isolated vertices",
                defaults={"n": 6},
                options=["allow_large"],
                tags=["exhaustive", "domination"],
            ),
            check_half_bound,
        ),
    ]
    for spec, runner in entries:
        registry.register(spec, runner)
    return registry


CHECKS = build_registry()
