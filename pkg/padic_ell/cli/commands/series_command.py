"""
Series command module for padic-ell.

This module handles the 'series' command, which reports L_p(E, alpha, psi, T) for every
requested (p, psi) pair.
"""

from typing import List

from padic_ell.charset import parse_character
from padic_ell.cli.jobs import JobConfig, expand_jobs, run_jobs, write_report
from padic_ell.curve import get_curve
from padic_ell.lpbuild import LpApproximation, choose_alpha, lp_series
from padic_ell.utils.const import SUCCESS
from padic_ell.utils.log import log


def compute_series(job: JobConfig, psi_text: str = None) -> LpApproximation:
    """The series a job describes; psi_text overrides the job's character."""
    E = get_curve(job.curve)
    psi = parse_character(psi_text or job.psi, job.p)
    alpha = choose_alpha(E, job.p, job.alpha)
    return lp_series(E, job.p, alpha, psi, job.resolved_level(), job.resolved_t_order())


def series_job(job: JobConfig) -> dict:
    return compute_series(job).to_json()


def coefficient_rows(document: dict) -> List[dict]:
    """Flatten one series document into table rows."""
    keys = {"curve": document["curve"], "p": document["p"], "psi": document["psi"], "level": document["level"]}
    return [{**keys, **row} for row in document["coefficients"]]


def execute(**kwargs):
    """Execute the series command.

    Args:
        **kwargs: Command arguments

    Returns:
        int: Command exit code
    """
    jobs = expand_jobs("series", **kwargs)
    log.info(f"Computing {len(jobs)} series for {jobs[0].curve}")
    documents = run_jobs(series_job, jobs, kwargs.get("jobs") or 1)
    rows = [row for document in documents for row in coefficient_rows(document)]
    write_report(documents[0] if len(documents) == 1 else documents, rows, jobs[0].format, jobs[0].output)
    return SUCCESS
