"""Oriented special spines over 4-regular graphs: enumeration, cell
reduction, one-cell census and bound tables."""

from ._spinecensus import *  # noqa: F401,F403
from ._spinecensus import __doc__  # noqa: F401
