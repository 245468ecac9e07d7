"""Finite-lattice and subspace-code toolkit.

Everything is implemented in the C++ extension; this package re-exports it.
"""

from latcode._core import *  # noqa: F401,F403
from latcode._core import __doc__  # noqa: F401

__version__ = "0.1.0"
