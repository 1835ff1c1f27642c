"""
Taylor command module for padic-ell.

This module handles the 'taylor' command: the coefficients of L_p(E, alpha, psi, s) in
powers of s - 1.
"""

from padic_ell.cli.commands.series_command import coefficient_rows, compute_series
from padic_ell.cli.jobs import JobConfig, expand_jobs, run_jobs, write_report
from padic_ell.lpbuild import taylor_at_1
from padic_ell.utils.const import SUCCESS
from padic_ell.utils.log import log


def taylor_job(job: JobConfig) -> dict:
    approx = compute_series(job)
    series_s = taylor_at_1(approx)
    document = approx.to_json()
    document["variable"] = series_s.variable
    document["log_kappa"] = str(approx.context.gen.log_kappa)
    document["coefficients"] = series_s.to_json()
    return document


def execute(**kwargs):
    """Execute the taylor command.

    Returns:
        int: Command exit code
    """
    jobs = expand_jobs("taylor", **kwargs)
    log.info(f"Expanding {len(jobs)} series at s = 1")
    documents = run_jobs(taylor_job, jobs, kwargs.get("jobs") or 1)
    rows = [row for document in documents for row in coefficient_rows(document)]
    write_report(documents[0] if len(documents) == 1 else documents, rows, jobs[0].format, jobs[0].output)
    return SUCCESS
