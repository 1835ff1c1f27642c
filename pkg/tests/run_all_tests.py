"""
Entry point for the padic-ell end-to-end harnesses.

    python tests/run_all_tests.py

Exits with SUCCESS when every harness passes, FAILURE otherwise.
"""

import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from tests.acceptance.acceptance_tests import AcceptanceTests
from tests.async_harness import AsyncTestHarness
from tests.runner import Runner

HARNESSES = [AcceptanceTests]


class AllTests(Runner):
    def __init__(self):
        super().__init__(HARNESSES)


if __name__ == "__main__":
    AsyncTestHarness.run(AllTests)
