"""Executable, tolerance-checked reconstructions of historical claims in
mechanics and astronomy."""

from .constants import DEFAULT_CONSTANTS, PhysicalConstants
from .errors import HistmechError
from .kernels import Interval, Tolerance

__version__ = "0.1.0"

__all__ = ["DEFAULT_CONSTANTS", "PhysicalConstants", "HistmechError", "Interval", "Tolerance", "__version__"]
