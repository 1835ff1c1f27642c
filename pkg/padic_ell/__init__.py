"""padic-ell: p-adic L-functions of elliptic curves over Q from modular symbols."""

__version__ = "0.1.0"
__author__ = "padic-ell developers"

# The CLI is not imported here; `padic_ell.cli` pulls in every subpackage.
__all__ = []


def version():
    """Return the current version of padic-ell."""
    return __version__
