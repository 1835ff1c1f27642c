"""
padic-ell Project Paths Utility

This module provides the `Paths` singleton class, which centralizes the directories used by
padic-ell: the modular-symbol cache, the report output directory and the bundled data
directory holding the curve table. Environment variables override the defaults and are
re-read by `refresh_paths()`, so tests can point the cache somewhere temporary.
"""

import os

from padic_ell.utils.log import log
from padic_ell.utils.decorators.singleton import singleton
from padic_ell.utils.const import (
    CACHE_DIR,
    OUTPUT_DIR,
    DATA_DIR,
    CURVE_TABLE_FILE,
    ENV_CACHE,
    ENV_OUTPUT,
)


@singleton
class Paths:
    """
    Singleton class for managing and centralizing path configurations in padic-ell.

    Directories are created on first request, not at import.
    """

    def __init__(self):
        """Initialize the paths configuration"""
        self._paths = {
            'base': {},
            'data': {},
            'env_vars': {}
        }

        package_dir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
        self._paths['base']['package_dir'] = package_dir
        self._paths['data']['curve_dir'] = os.path.join(package_dir, 'curve', DATA_DIR)
        self._paths['data']['config_dir'] = os.path.join(package_dir, 'config', 'ini')

        self.refresh_paths()

    def refresh_paths(self):
        """
        Refresh the cache and output paths from the environment.
        Changes to PADIC_ELL_CACHE or PADIC_ELL_OUTPUT_DIR take effect without a restart.
        """
        env_vars = {
            ENV_CACHE: os.getenv(ENV_CACHE),
            ENV_OUTPUT: os.getenv(ENV_OUTPUT),
        }

        if self._paths['env_vars'] == env_vars and 'cache_dir' in self._paths['base']:
            log.debug("No environment variable changes detected")
            return

        self._paths['env_vars'] = env_vars
        cwd = os.getcwd()

        cache_dir = env_vars[ENV_CACHE] or os.path.join(cwd, CACHE_DIR)
        if env_vars[ENV_CACHE]:
            log.info(f"Using {ENV_CACHE} environment variable for the symbol cache: {cache_dir}")
        self._paths['base']['cache_dir'] = cache_dir

        output_dir = env_vars[ENV_OUTPUT] or os.path.join(cwd, OUTPUT_DIR)
        self._paths['base']['output_dir'] = output_dir

        log.debug("Path refresh complete")

    def get_cache_dir(self):
        """Get the modular-symbol cache directory, creating it if needed."""
        self.refresh_paths()
        cache_dir = self._paths['base']['cache_dir']
        os.makedirs(cache_dir, exist_ok=True)
        return cache_dir

    def get_output_dir(self):
        """Get the global report output directory, creating it if needed."""
        self.refresh_paths()
        output_dir = self._paths['base']['output_dir']
        os.makedirs(output_dir, exist_ok=True)
        return output_dir

    def get_curve_table_path(self):
        """Path of the bundled curve table."""
        return os.path.join(self._paths['data']['curve_dir'], CURVE_TABLE_FILE)

    def get_config_dir(self):
        """Directory holding the bundled ini files."""
        return self._paths['data']['config_dir']

    def log_paths(self):
        """Log all currently configured paths."""
        log.info("=" * 50)
        log.info("PADIC-ELL PATH CONFIGURATION")
        log.info(f"Package: {self._paths['base'].get('package_dir', 'Not set')}")
        log.info(f"Cache: {self._paths['base'].get('cache_dir', 'Not set')}")
        log.info(f"Output: {self._paths['base'].get('output_dir', 'Not set')}")
        log.info(f"Curve table: {self.get_curve_table_path()}")
        for var_name, value in self._paths['env_vars'].items():
            status = "Set" if value else "Not set (using default)"
            log.info(f"{var_name}: {status}")
        log.info("=" * 50)
