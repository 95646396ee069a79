"""
Reporting utilities for procedure results.

This package turns results into canonical JSON documents and text summaries.
"""

from .report_generator import ReportGenerator

__all__ = [
    'ReportGenerator',
]
