"""
Job specifications, task registry, report verification and demos
"""
from .codec import parse_matrix, parse_module, parse_ring
from .demos import DEMOS, demo_jobs, run_demo
from .models import CheckResult, JobSpec, Report, RunReport
from .runner import TASKS, build_report, get_task, report_json, run_job, write_report
from .verify import verify_report

__all__ = [
    "DEMOS",
    "TASKS",
    "CheckResult",
    "JobSpec",
    "Report",
    "RunReport",
    "build_report",
    "demo_jobs",
    "get_task",
    "parse_matrix",
    "parse_module",
    "parse_ring",
    "report_json",
    "run_demo",
    "run_job",
    "verify_report",
    "write_report",
]
