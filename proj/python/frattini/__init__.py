"""Structural analysis of finite permutation groups.

Frattini-type group classes, chief series, normal-subgroup complements, and
executable verification suites, backed by the C++ core.
"""

from frattini._core import *  # noqa: F401,F403
from frattini._core import __doc__  # noqa: F401
