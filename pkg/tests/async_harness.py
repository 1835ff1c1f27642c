"""
Base class for the padic-ell end-to-end harnesses.

A harness is a list of named criteria, each a callable returning a bool. `check` runs one
criterion, timing it and turning any exception into a failure, so a single broken curve
never hides the rest of the run. Unless PADIC_ELL_CACHE is already set, the run uses a
throwaway symbol cache.
"""

import asyncio
import os
import sys
import tempfile
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, List, Optional

import pandas as pd

from padic_ell.utils.const import EMOJI, ENV_CACHE, FAILURE, SUCCESS
from padic_ell.utils.log import log
from padic_ell.utils.paths import Paths


@dataclass
class CriterionResult:
    name: str
    passed: bool
    seconds: float
    error: Optional[str] = None


class AsyncTestHarness(ABC):
    """Runs named criteria and summarises them."""

    def __init__(self, test_name: str):
        self.test_name = test_name
        self.outcomes: List[CriterionResult] = []
        self._scratch: Optional[tempfile.TemporaryDirectory] = None

    @property
    def results(self) -> dict:
        return {r.name: r.passed for r in self.outcomes}

    @property
    def elapsed(self) -> float:
        return sum(r.seconds for r in self.outcomes)

    async def setup(self) -> bool:
        if not os.environ.get(ENV_CACHE):
            self._scratch = tempfile.TemporaryDirectory(prefix="padic_ell_cache_")
            os.environ[ENV_CACHE] = self._scratch.name
        Paths().refresh_paths()
        Paths().log_paths()
        return True

    async def teardown(self) -> None:
        if self._scratch is not None:
            os.environ.pop(ENV_CACHE, None)
            Paths().refresh_paths()
            self._scratch.cleanup()
            self._scratch = None

    @abstractmethod
    async def run_tests(self) -> bool:
        """Run every criterion; True when all pass."""

    def check(self, name: str, fn: Callable[[], bool]) -> bool:
        start = time.perf_counter()
        error = None
        try:
            passed = bool(fn())
        except Exception as e:
            log.error(f"{name} raised {type(e).__name__}: {e}", exc_info=True)
            passed, error = False, f"{type(e).__name__}: {e}"
        outcome = CriterionResult(name, passed, time.perf_counter() - start, error)
        self.outcomes.append(outcome)
        mark = EMOJI["check"] if passed else EMOJI["error"]
        log.info(f"{mark} {name} {EMOJI['clock']} {outcome.seconds:.1f}s")
        return passed

    def summary(self) -> pd.DataFrame:
        frame = pd.DataFrame([vars(r) for r in self.outcomes], columns=["name", "passed", "seconds", "error"])
        frame["seconds"] = frame["seconds"].round(1)
        return frame

    def log_results(self) -> None:
        if not self.outcomes:
            log.warning(f"{self.test_name}: nothing was run")
            return
        frame = self.summary()
        log.info(f"{self.test_name}\n{frame.to_string(index=False)}")
        failed = int((~frame["passed"]).sum())
        log.info(f"{self.test_name}: {len(frame) - failed}/{len(frame)} passed in {self.elapsed:.1f}s")

    async def execute(self) -> bool:
        if not await self.setup():
            log.error(f"{self.test_name}: setup failed")
            return False
        try:
            success = await self.run_tests()
            self.log_results()
            return success
        finally:
            await self.teardown()

    @classmethod
    def run(cls, harness_class: type) -> None:
        """Run `harness_class` and exit with SUCCESS or FAILURE."""
        if not issubclass(harness_class, AsyncTestHarness):
            raise TypeError("harness class must inherit from AsyncTestHarness")
        success = asyncio.run(harness_class().execute())
        sys.exit(SUCCESS if success else FAILURE)
