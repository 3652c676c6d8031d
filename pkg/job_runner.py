"""
rank_macwilliams.job_runner
~~~~~~~~~~~~
Runs a parsed job and builds its report
"""

import logging
from typing import Optional

from codes.data_types import Metric
from codes.linear_code import dual_code, weight_enumerator, weight_enumerators
from data_types import CheckResult, CheckStatus, CodeParams, Command, MomentRow, Report
from job_parser.data_types import ParsedJob
from macwilliams.identities import (
    hamming_macwilliams,
    mrd_rank_distribution,
    rank_macwilliams,
    rank_macwilliams_by_kernel,
    rank_moment_sides,
)
from output_manager.base_output_manager import BaseOutputManager
from verification_graph import VerificationGraph

logger = logging.getLogger(__name__)


def _params(job: ParsedJob) -> CodeParams:
    if job.code is not None:
        return CodeParams(q=job.tower.q, m=job.tower.m, n=job.code.n, k=job.code.k)
    return CodeParams(q=job.tower.q, m=job.tower.m, n=job.spec.n, k=job.spec.k)


def _base_report(job: ParsedJob) -> Report:
    return Report(command=job.spec.command, field=job.tower.to_dict(), params=_params(job).to_report())


def _enumerate(job: ParsedJob, report: Report) -> None:
    options = job.spec.options
    enumerators = weight_enumerators(job.code, guard=options.guard, workers=options.workers)
    report.results["code"] = job.code.to_dict()
    report.results["enumerators"] = [enumerators[metric].to_dict() for metric in Metric]


def _dual(job: ParsedJob, report: Report) -> None:
    options = job.spec.options
    dual = dual_code(job.code)
    enumerators = weight_enumerators(dual, guard=options.guard, workers=options.workers)
    report.results["dual_code"] = dual.to_dict()
    report.results["enumerators"] = [enumerators[metric].to_dict() for metric in Metric]


def _macwilliams(job: ParsedJob, report: Report) -> None:
    options = job.spec.options
    metric = job.spec.metric
    params = _params(job)
    a = weight_enumerator(job.code, metric, guard=options.guard, workers=options.workers)
    report.results["input"] = a.to_dict()
    if metric is Metric.RANK:
        b = rank_macwilliams(a, params, validate=options.validate_input)
        kernel = rank_macwilliams_by_kernel(a, params, validate=options.validate_input)
        agrees = kernel.poly == b.poly
        report.checks.append(
            CheckResult(name="rank_kernel_form", status=CheckStatus.PASS if agrees else CheckStatus.FAIL)
        )
    else:
        b = hamming_macwilliams(a, params, validate=options.validate_input)
    report.results["output"] = b.to_dict()


def _moments(job: ParsedJob, report: Report) -> None:
    options = job.spec.options
    params = _params(job)
    a = weight_enumerator(job.code, Metric.RANK, guard=options.guard, workers=options.workers)
    b = rank_macwilliams(a, params, validate=options.validate_input)
    orders = [job.spec.nu] if job.spec.nu is not None else list(range(params.n + 1))
    rows = []
    for nu in orders:
        lhs, rhs = rank_moment_sides(a, b, params, nu)
        rows.append(MomentRow(nu=nu, lhs=str(lhs), rhs=str(rhs), equal=lhs == rhs))
    report.results["moments"] = [row.model_dump() for row in rows]
    failed = [row.nu for row in rows if not row.equal]
    report.checks.append(
        CheckResult(
            name="rank_moments",
            status=CheckStatus.FAIL if failed else CheckStatus.PASS,
            detail=f"failing orders {failed}" if failed else "",
        )
    )


def _mrd(job: ParsedJob, report: Report) -> None:
    report.results["distribution"] = mrd_rank_distribution(_params(job)).to_dict()


HANDLERS = {
    Command.ENUMERATE: _enumerate,
    Command.DUAL: _dual,
    Command.MACWILLIAMS: _macwilliams,
    Command.MOMENTS: _moments,
    Command.MRD: _mrd,
}


def run(job: ParsedJob, save_manager: Optional[BaseOutputManager] = None) -> Report:
    """
    Execute a job.

    Args:
        job: the parsed job
        save_manager: receives the report

    Returns:
        The report; its status is FAIL when any check failed
    """
    command = job.spec.command
    logger.info(f"Running {command.value} job")
    if command is Command.VERIFY:
        options = job.spec.options
        return VerificationGraph(save_manager=save_manager).process(
            job.code, guard=options.guard, workers=options.workers, hadamard_guard=options.hadamard_guard
        )

    report = _base_report(job)
    HANDLERS[command](job, report)
    if any(check.status is CheckStatus.FAIL for check in report.checks):
        report.status = CheckStatus.FAIL
    if save_manager is not None:
        save_manager.save_output(report)
    logger.info(f"Finished {command.value} job with status '{report.status.value}'")
    return report
