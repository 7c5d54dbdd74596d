"""Relation suites and the machinery that runs and reports them."""

from .core import (
    DEFAULT_SEED,
    CaseRecord,
    SuiteReport,
    SuiteSpec,
    UnknownSuite,
    UnsupportedParameters,
    list_cases,
    render_report,
    run_all,
    run_suite,
    suite_names,
)

__all__ = [
    "DEFAULT_SEED",
    "CaseRecord",
    "SuiteReport",
    "SuiteSpec",
    "UnknownSuite",
    "UnsupportedParameters",
    "list_cases",
    "render_report",
    "run_all",
    "run_suite",
    "suite_names",
]
