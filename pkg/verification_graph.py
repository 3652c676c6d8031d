import logging
from typing import List, Optional

from _base_verification_graph_template import BaseVerificationGraphTemplate, VerificationState
from codes.data_types import Metric
from codes.linear_code import dual_code, weight_enumerators
from config import get_settings
from data_types import CheckResult, CheckStatus, Command, MomentRow, Report
from exceptions import InexactDivisionError, InvalidEnumeratorError
from hadamard.transform import (
    character_sum,
    check_dual_vector_lemma,
    check_hamming_hat,
    check_rank_hat,
    weight_is_scale_invariant,
)
from linalg.matrix_gf import dot
from macwilliams.identities import (
    hamming_macwilliams,
    mrd_rank_distribution,
    rank_macwilliams,
    rank_macwilliams_by_kernel,
    rank_moment_table,
)
from output_manager.base_output_manager import BaseOutputManager

logger = logging.getLogger(__name__)


def _check(name: str, passed: bool, detail: str = "") -> CheckResult:
    status = CheckStatus.PASS if passed else CheckStatus.FAIL
    log = logger.info if passed else logger.warning
    log(f"Check {name}: {status.value}" + (f" ({detail})" if detail else ""))
    return CheckResult(name=name, status=status, detail=detail)


def _skipped(name: str, detail: str) -> CheckResult:
    logger.warning(f"Check {name} skipped: {detail}")
    return CheckResult(name=name, status=CheckStatus.SKIPPED, detail=detail)


class VerificationGraph(BaseVerificationGraphTemplate):
    """Implementation of the verification graph template"""

    def __init__(self, save_manager: Optional[BaseOutputManager] = None):
        super().__init__(save_manager=save_manager)

    def codeword_enumeration_node(self, state: VerificationState) -> dict:
        """Brute-force rank and Hamming enumerators of the code."""
        enumerators = weight_enumerators(state.code, guard=state.guard, workers=state.workers)
        return {"enumerators": enumerators}

    def dual_enumeration_node(self, state: VerificationState) -> dict:
        """Dual code, its orthogonality and its brute-force enumerators."""
        code = state.code
        dual = dual_code(code)
        orthogonal = all(
            dot(code.tower, row, h) == 0 for row in code.generator.entries for h in dual.generator.entries
        )
        checks = state.checks + [
            _check("dual_dimension", dual.k + code.k == code.n, f"k={code.k}, k_dual={dual.k}, n={code.n}"),
            _check("dual_orthogonality", orthogonal),
        ]
        enumerators = weight_enumerators(dual, guard=state.guard, workers=state.workers)
        return {"dual_code": dual, "dual_enumerators": enumerators, "checks": checks}

    def transform_checks_node(self, state: VerificationState) -> dict:
        """Analytic transforms against the brute-force dual enumerators."""
        params = state.params
        rank_a = state.enumerators[Metric.RANK]
        hamming_a = state.enumerators[Metric.HAMMING]
        checks: List[CheckResult] = list(state.checks)
        transforms = {}
        try:
            rank_b = rank_macwilliams(rank_a, params)
            hamming_b = hamming_macwilliams(hamming_a, params)
        except (InexactDivisionError, InvalidEnumeratorError) as e:
            logger.error(f"MacWilliams transform failed: {e.message}", exc_info=True)
            checks.append(_check("rank_macwilliams", False, e.message))
            return {"checks": checks}

        transforms[Metric.RANK] = rank_b
        transforms[Metric.HAMMING] = hamming_b
        brute_rank = state.dual_enumerators[Metric.RANK]
        brute_hamming = state.dual_enumerators[Metric.HAMMING]
        checks.append(_check("rank_macwilliams", rank_b.poly == brute_rank.poly, f"{list(rank_b.coeffs)}"))
        checks.append(
            _check("rank_kernel_form", rank_macwilliams_by_kernel(rank_a, params).poly == rank_b.poly)
        )
        checks.append(
            _check("rank_round_trip", rank_macwilliams(rank_b, params.dual()).poly == rank_a.poly)
        )
        checks.append(
            _check("hamming_macwilliams", hamming_b.poly == brute_hamming.poly, f"{list(hamming_b.coeffs)}")
        )
        checks.append(
            _check("hamming_round_trip", hamming_macwilliams(hamming_b, params.dual()).poly == hamming_a.poly)
        )
        return {"transforms": transforms, "checks": checks}

    def moment_checks_node(self, state: VerificationState) -> dict:
        """Both sides of the moment identity for every order."""
        table = rank_moment_table(state.enumerators[Metric.RANK], state.dual_enumerators[Metric.RANK], state.params)
        rows = [MomentRow(nu=nu, lhs=str(lhs), rhs=str(rhs), equal=lhs == rhs) for nu, lhs, rhs in table]
        failed = [row.nu for row in rows if not row.equal]
        checks = state.checks + [_check("rank_moments", not failed, f"failing orders {failed}" if failed else "")]
        return {"moments": rows, "checks": checks}

    def mrd_checks_node(self, state: VerificationState) -> dict:
        """MRD distribution against the enumerator, for MRD codes."""
        params = state.params
        if params.n > params.m or params.k == 0:
            return {"checks": state.checks + [_skipped("mrd_distribution", "needs n <= m and k >= 1")]}
        coeffs = state.enumerators[Metric.RANK].coeffs
        distance = next(i for i in range(1, params.n + 1) if coeffs[i])
        if distance != params.n - params.k + 1:
            return {"checks": state.checks + [_skipped("mrd_distribution", f"code is not MRD (d_R = {distance})")]}
        expected = mrd_rank_distribution(params)
        dual_expected = mrd_rank_distribution(params.dual()) if params.k < params.n else None
        checks = state.checks + [_check("mrd_distribution", expected.poly == state.enumerators[Metric.RANK].poly)]
        if dual_expected is not None:
            checks.append(
                _check("mrd_dual_distribution", dual_expected.poly == state.dual_enumerators[Metric.RANK].poly)
            )
        return {"checks": checks}

    def hadamard_decision_node(self, state: VerificationState) -> str:
        tower = state.code.tower
        guard = state.hadamard_guard if state.hadamard_guard is not None else get_settings().hadamard_guard
        if tower.s == 1 and tower.order**state.code.n <= guard:
            return "hadamard"
        return "skip"

    def hadamard_checks_node(self, state: VerificationState) -> dict:
        """Closed forms of the weight-function transforms at the zero vector and every generator row."""
        code = state.code
        tower = code.tower
        guard = state.hadamard_guard
        points = [(0,) * code.n] + list(code.generator.entries) + list(state.dual_code.generator.entries)
        checks = state.checks + [_check("character_sum", character_sum(tower).coeffs == (0,) * (tower.q - 1))]
        checks.append(
            _check(
                "weight_scale_invariance",
                all(weight_is_scale_invariant(tower, metric, v) for v in points for metric in Metric),
            )
        )
        checks.append(_check("rank_hadamard", all(check_rank_hat(tower, v, guard) for v in points)))
        checks.append(_check("hamming_hadamard", all(check_hamming_hat(tower, v, guard) for v in points)))
        checks.append(
            _check("dual_vector_lemma", all(check_dual_vector_lemma(tower, v, guard=guard) for v in points))
        )
        return {"checks": checks}

    def hadamard_skip_node(self, state: VerificationState) -> dict:
        tower = state.code.tower
        reason = "q is not prime" if tower.s != 1 else f"q^(mn) = {tower.order ** state.code.n} exceeds the Hadamard guard"
        return {"checks": state.checks + [_skipped("hadamard", reason)]}

    def report_saving_node(self, state: VerificationState) -> dict:
        """Assemble the report and hand it to the output manager."""
        failed = any(check.status is CheckStatus.FAIL for check in state.checks)
        results = {
            "enumerators": [state.enumerators[metric].to_dict() for metric in Metric],
            "dual_enumerators": [state.dual_enumerators[metric].to_dict() for metric in Metric],
            "transforms": [state.transforms[metric].to_dict() for metric in Metric if metric in state.transforms],
            "moments": [row.model_dump() for row in state.moments],
        }
        report = Report(
            command=Command.VERIFY,
            field=state.code.tower.to_dict(),
            params=state.params.to_report(),
            results=results,
            checks=state.checks,
            status=CheckStatus.FAIL if failed else CheckStatus.PASS,
        )
        if self._save_manager is not None:
            self._save_manager.save_output(report)
        return {"report": report}
