"""Claim evaluation, algebra families, input parsing and report output."""

from .emit import emit
from .parse import parse_algebra_spec
from .report import ClaimVerdict, Report, check_algebra
from .scan import scan_nakayama, scan_radical_square_zero

__all__ = [
    "ClaimVerdict",
    "Report",
    "check_algebra",
    "emit",
    "parse_algebra_spec",
    "scan_nakayama",
    "scan_radical_square_zero",
]
