"""
Validated job descriptions, the process pool that runs them, and report output.

A command line like `series --p 5 7 --psi triv teich:2` expands into one `JobConfig`
per (p, psi) pair. Each job is validated before any computation starts, so a bad prime
or a character that is wild at p fails the whole command with exit code 1.
"""

import json
import multiprocessing
import os
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Union

import pandas as pd
from pydantic import BaseModel, ConfigDict, ValidationInfo, field_validator, model_validator
from sympy import isprime
from tqdm import tqdm

from padic_ell.charset import parse_character
from padic_ell.config import Config
from padic_ell.curve import get_curve
from padic_ell.lpbuild import ALPHA_SELECTORS
from padic_ell.pseries import check_names
from padic_ell.utils.const import CHECK_FAILED, INDETERMINATE, SUCCESS
from padic_ell.utils.log import log
from padic_ell.utils.paths import Paths

FORMATS = ("json", "csv", "pretty")
COMMANDS = ("series", "taylor", "verify", "basechange")


class JobConfig(BaseModel):
    """One (curve, p, psi) computation and where its report goes."""

    model_config = ConfigDict(frozen=True)

    command: str
    curve: str
    p: int
    psi: str = "triv"
    alpha: str = "unit"
    level: Optional[int] = None
    t_order: Optional[int] = None
    check: Optional[str] = None
    field_text: Optional[str] = None
    output: Optional[str] = None
    format: str = "json"

    @field_validator("command")
    @classmethod
    def _known_command(cls, value: str) -> str:
        if value not in COMMANDS:
            raise ValueError(f"unknown command {value!r}")
        return value

    @field_validator("curve")
    @classmethod
    def _known_curve(cls, value: str) -> str:
        get_curve(value)
        return value.strip()

    @field_validator("p")
    @classmethod
    def _odd_prime(cls, value: int) -> int:
        if value % 2 == 0:
            raise ValueError(f"p must be odd, got {value}")
        if not isprime(value):
            raise ValueError(f"p must be prime, got {value}")
        return value

    @field_validator("psi")
    @classmethod
    def _tame_character(cls, value: str, info: ValidationInfo) -> str:
        p = info.data.get("p")
        if p is None:
            return value
        return parse_character(value, p).to_text()

    @field_validator("alpha")
    @classmethod
    def _root_selector(cls, value: str) -> str:
        if value not in ALPHA_SELECTORS:
            raise ValueError(f"alpha must be one of {', '.join(ALPHA_SELECTORS)}, got {value!r}")
        return value

    @field_validator("level")
    @classmethod
    def _positive_level(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and value < 1:
            raise ValueError(f"level must be at least 1, got {value}")
        return value

    @field_validator("t_order")
    @classmethod
    def _nonnegative_order(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and value < 0:
            raise ValueError(f"t_order must be non-negative, got {value}")
        return value

    @field_validator("check")
    @classmethod
    def _known_check(cls, value: Optional[str]) -> Optional[str]:
        if value is not None and value not in check_names():
            raise ValueError(f"unknown check {value!r}; expected one of {', '.join(check_names())}")
        return value

    @field_validator("format")
    @classmethod
    def _known_format(cls, value: str) -> str:
        if value not in FORMATS:
            raise ValueError(f"format must be one of {', '.join(FORMATS)}, got {value!r}")
        return value

    @model_validator(mode="after")
    def _consistent(self) -> "JobConfig":
        if self.command == "verify" and self.check is None:
            raise ValueError("verify needs a check name")
        needs_field = self.command == "basechange" or self.check == "basechange"
        if needs_field and not self.field_text:
            raise ValueError("a field K is required, e.g. --field \"K=[kron:-4]\"")
        level, t_order = self.resolved_level(), self.resolved_t_order()
        if t_order >= self.p ** (level - 1):
            raise ValueError(f"t_order = {t_order} needs a level n with p^(n-1) > t_order, got n = {level}")
        return self

    def resolved_level(self) -> int:
        return self.level if self.level is not None else Config().level

    def resolved_t_order(self) -> int:
        return self.t_order if self.t_order is not None else Config().t_order

    def label(self) -> str:
        name = f"{self.curve} p={self.p} psi={self.psi}"
        return f"{self.check} {name}" if self.check else name

    def to_json(self) -> dict:
        return self.model_dump()

    @classmethod
    def from_json(cls, data: Union[str, dict]) -> "JobConfig":
        if isinstance(data, str):
            return cls.model_validate_json(data)
        return cls.model_validate(data)


def expand_jobs(command: str, **kwargs) -> List[JobConfig]:
    """One JobConfig per (p, psi) pair from parsed command-line arguments."""
    primes = kwargs.get("p")
    primes = primes if isinstance(primes, (list, tuple)) else [primes]
    characters = kwargs.get("psi") or ["triv"]
    characters = characters if isinstance(characters, (list, tuple)) else [characters]
    jobs = []
    for p in primes:
        for psi in characters:
            jobs.append(JobConfig(
                command=command,
                curve=kwargs.get("curve"),
                p=p,
                psi=psi,
                alpha=kwargs.get("alpha") or "unit",
                level=kwargs.get("level"),
                t_order=kwargs.get("t_order"),
                check=kwargs.get("check"),
                field_text=kwargs.get("field"),
                output=kwargs.get("output"),
                format=kwargs.get("format") or "json",
            ))
    log.debug(f"Expanded {command} into {len(jobs)} job(s)")
    return jobs


def _make_executor(max_workers: int) -> ProcessPoolExecutor:
    # fork keeps the in-process symbol maps and the loaded configuration
    return ProcessPoolExecutor(max_workers=max_workers, mp_context=multiprocessing.get_context("fork"))


def run_jobs(worker: Callable[[JobConfig], dict], jobs: Sequence[JobConfig], workers: int = 1) -> List[dict]:
    """
    Run `worker` on every job and return the results in job order.

    With more than one worker the jobs go to a process pool; the first exception raised
    by a job is re-raised here once the pool has drained.
    """
    if workers <= 1 or len(jobs) == 1:
        return [worker(job) for job in tqdm(jobs, desc="Jobs", disable=len(jobs) == 1)]

    results: Dict[int, dict] = {}
    with _make_executor(min(workers, len(jobs))) as executor:
        futures = {executor.submit(worker, job): i for i, job in enumerate(jobs)}
        with tqdm(total=len(futures), desc="Jobs") as pbar:
            for future in as_completed(futures):
                pbar.update(1)
                results[futures[future]] = future.result()
    return [results[i] for i in range(len(jobs))]


def verdict_exit_code(verdicts: Iterable[str]) -> int:
    """3 if any check failed, else 2 if any was indeterminate, else 0."""
    verdicts = list(verdicts)
    if "fail" in verdicts:
        return CHECK_FAILED
    if "indeterminate" in verdicts:
        return INDETERMINATE
    return SUCCESS


def render_report(document: Union[dict, list], rows: List[dict], fmt: str) -> str:
    """The report text: the JSON document itself, or the flat rows as CSV or a table."""
    if fmt == "json":
        return json.dumps(document, indent=2, sort_keys=True)
    frame = pd.DataFrame(rows)
    if fmt == "csv":
        return frame.to_csv(index=False)
    return frame.to_string(index=False)


def write_report(document: Union[dict, list], rows: List[dict], fmt: str, output: Optional[str]) -> None:
    text = render_report(document, rows, fmt)
    if not output:
        print(text)
        return
    if not os.path.dirname(output):
        output = os.path.join(Paths().get_output_dir(), output)
    os.makedirs(os.path.dirname(os.path.abspath(output)), exist_ok=True)
    with open(output, "w", encoding="utf-8") as report_file:
        report_file.write(text)
        if not text.endswith("\n"):
            report_file.write("\n")
    log.info(f"Report written to {output}")
