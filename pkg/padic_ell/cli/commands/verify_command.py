"""
Verify command module for padic-ell.

This module handles the 'verify <check>' command. Each job runs one checker and
returns its report; the exit code is 0 when every report passes, 3 when any fails and
2 when the rest are undecided.
"""

from typing import List

from padic_ell.basechange import lp_basechange, parse_field, verify_generalisations
from padic_ell.charset import char_bar
from padic_ell.cli.commands.series_command import compute_series
from padic_ell.cli.jobs import JobConfig, expand_jobs, run_jobs, verdict_exit_code, write_report
from padic_ell.curve import get_curve, root_number
from padic_ell.lpbuild import choose_alpha, taylor_at_1
from padic_ell.pseries import (
    fe_level,
    order_vanish,
    verify_fe_T,
    verify_fe_s,
    verify_mu_bar,
    verify_parity,
    verify_thm_main_T,
    verify_thm_mains,
)
from padic_ell.utils.log import log

GENERAL_K_MAX = 3


def _with_conjugate(job: JobConfig):
    approx = compute_series(job)
    bar = char_bar(approx.psi)
    approx_bar = approx if bar == approx.psi else compute_series(job, bar.to_text())
    return approx, approx_bar


def _leading(job: JobConfig, k_max: int):
    """The T-series, its certified order m, and the Taylor series up to a_{m+k_max}."""
    approx = compute_series(job)
    m = order_vanish(approx.series).m
    series_s = taylor_at_1(approx, order=m + k_max + 1)
    Q = fe_level(approx.context.E.N, job.p, approx.psi.M)
    return approx, m, series_s, Q


def verify_job(job: JobConfig) -> dict:
    """Run the job's check and return the report document."""
    match job.check:
        case "fe":
            report = verify_fe_T(*_with_conjugate(job))
        case "fe-s":
            report = verify_fe_s(*_with_conjugate(job))
        case "mains" | "mains-general":
            k_max = 1 if job.check == "mains" else GENERAL_K_MAX
            approx, m, series_s, Q = _leading(job, k_max)
            report = verify_thm_mains(series_s, Q, approx.psi, k_max=k_max, m=m)
            report.inputs.update({"curve": approx.context.E.name, "level": approx.level})
        case "main-T":
            approx, m, series_s, Q = _leading(job, 0)
            report = verify_thm_main_T(approx.series, Q, approx.psi, approx.context.gen, m=m, series_s=series_s)
            report.inputs.update({"curve": approx.context.E.name, "level": approx.level})
        case "mu-bar":
            approx = compute_series(job)
            report = verify_mu_bar(approx.context.E, job.p, approx.psi, approx=approx)
        case "parity":
            approx = compute_series(job)
            report = verify_parity(approx, root_number(approx.context.E))
        case "basechange":
            E = get_curve(job.curve)
            K = parse_field(job.field_text, job.p, E)
            alpha = choose_alpha(E, job.p, job.alpha)
            bc = lp_basechange(E, job.p, alpha, K, job.resolved_level(), job.resolved_t_order())
            report = verify_generalisations(bc)
        case _:
            raise ValueError(f"unknown check {job.check!r}")
    return report.to_json()


def report_rows(document: dict) -> List[dict]:
    keys = {"check": document["check"], "verdict": document["verdict"]}
    keys.update({k: v for k, v in document["inputs"].items() if not isinstance(v, dict)})
    return [{**keys, **entry} for entry in document["per_coefficient"]]


def execute(**kwargs):
    """Execute the verify command.

    Returns:
        int: 0 pass, 3 fail, 2 indeterminate
    """
    jobs = expand_jobs("verify", **kwargs)
    log.info(f"Running {jobs[0].check} on {len(jobs)} job(s)")
    documents = run_jobs(verify_job, jobs, kwargs.get("jobs") or 1)
    rows = [row for document in documents for row in report_rows(document)]
    write_report(documents[0] if len(documents) == 1 else documents, rows, jobs[0].format, jobs[0].output)

    verdicts = [document["verdict"] for document in documents]
    for job, verdict in zip(jobs, verdicts):
        log.info(f"{job.label()}: {verdict}")
    return verdict_exit_code(verdicts)
