"""Pydantic schemas for verification reports."""

from src.schemas.report import (
    IdentityCase,
    IdentityReport,
    ReportMeta,
    SamplePlan,
    SuiteSummary,
    Verdict,
)

__all__ = [
    "IdentityCase",
    "IdentityReport",
    "ReportMeta",
    "SamplePlan",
    "SuiteSummary",
    "Verdict",
]
