"""Planar rigidity and line incidences in space.

Lines are 4-tuples (a, b, c, d) for the line (a, b, 0) + t (c, d, 1);
points are tuples; graphs are :class:`Graph` objects.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401

__version__ = "0.1.0"
