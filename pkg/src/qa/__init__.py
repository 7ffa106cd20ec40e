"""Verification harness, run logs and reports."""

from .report_generator import generate_markdown_report
from .run_log import StepStatus, VerificationLogger
from .theorem_runner import CLAIMS, verify_theorem

__all__ = [
    "CLAIMS",
    "StepStatus",
    "VerificationLogger",
    "generate_markdown_report",
    "verify_theorem",
]
