"""Exact verification toolkit for norm principles of forms of higher degree."""

from .report import VerifyReport, combine

__version__ = "0.1.0"

__all__ = ["VerifyReport", "combine", "__version__"]
