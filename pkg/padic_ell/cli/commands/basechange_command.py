"""
Basechange command module for padic-ell.

This module handles the 'basechange' command: L_p(E/K, alpha, T) for an abelian field K
given by generators of its character group.
"""

from padic_ell.basechange import lp_basechange, parse_field
from padic_ell.cli.commands.series_command import coefficient_rows
from padic_ell.cli.jobs import expand_jobs, write_report
from padic_ell.curve import get_curve
from padic_ell.lpbuild import choose_alpha
from padic_ell.utils.const import SUCCESS
from padic_ell.utils.log import log


def execute(**kwargs):
    """Execute the basechange command.

    Returns:
        int: Command exit code
    """
    job = expand_jobs("basechange", **kwargs)[0]
    E = get_curve(job.curve)
    K = parse_field(job.field_text, job.p, E)
    log.info(f"Base change of {E.name} to K = {K} (degree {K.degree}) at p = {job.p}")
    alpha = choose_alpha(E, job.p, job.alpha)
    bc = lp_basechange(E, job.p, alpha, K, job.resolved_level(), job.resolved_t_order())

    document = bc.to_json()
    rows = coefficient_rows({**document, "psi": K.to_text()})
    write_report(document, rows, job.format, job.output)
    return SUCCESS
