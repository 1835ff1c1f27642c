from typing import List, Type

from tests.async_harness import AsyncTestHarness, CriterionResult
from padic_ell.utils.log import log


class Runner(AsyncTestHarness):
    """Runs several harnesses in turn, each with its own cache, and records one line per harness."""

    def __init__(self, harness_classes: List[Type[AsyncTestHarness]]):
        super().__init__("padic-ell runner")
        self.harness_classes = harness_classes

    async def setup(self) -> bool:
        return True

    async def teardown(self) -> None:
        pass

    async def run_tests(self) -> bool:
        for harness_class in self.harness_classes:
            harness = harness_class()
            success = await harness.execute()
            failed = [r.name for r in harness.outcomes if not r.passed]
            self.outcomes.append(CriterionResult(harness.test_name, success, harness.elapsed,
                                                 ", ".join(failed) or None))
        return all(r.passed for r in self.outcomes)

    def log_results(self) -> None:
        log.info(f"Harness summary\n{self.summary().to_string(index=False)}")
