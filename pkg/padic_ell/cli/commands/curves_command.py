"""
Curves command module for padic-ell.

This module handles 'curves list', which prints the bundled curve table, optionally
merged with a user YAML file and annotated with the cusp form dimension at each level.
"""

import json

from padic_ell.cli.jobs import render_report
from padic_ell.curve import CurveTable
from padic_ell.modsym import cuspidal_dimension
from padic_ell.utils.const import SUCCESS
from padic_ell.utils.log import log


def curve_frame(dimensions: bool = False):
    frame = CurveTable().as_frame().copy()
    frame["ainvs"] = [",".join(str(a) for a in ainvs) for ainvs in frame["ainvs"]]
    if dimensions:
        cache = {}
        for N in frame["conductor"]:
            if N not in cache:
                cache[N] = cuspidal_dimension(int(N))
        frame["dim_S2"] = [cache[N] for N in frame["conductor"]]
    return frame


def execute(**kwargs):
    """Execute the curves command.

    Returns:
        int: Command exit code
    """
    if kwargs.get("table"):
        CurveTable().extend(kwargs["table"])
    frame = curve_frame(kwargs.get("dimensions", False))
    log.info(f"Listing {len(frame)} curve(s)")
    rows = json.loads(frame.to_json(orient="records"))
    print(render_report(rows, rows, kwargs.get("format") or "pretty"))
    return SUCCESS
