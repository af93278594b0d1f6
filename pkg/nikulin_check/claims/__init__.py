"""
断言包

内置断言目录、执行器与报告输出。
"""

from nikulin_check.claims.catalog import LOCATIONS, builtin_claims
from nikulin_check.claims.model import FAIL, PASS, SKIPPED, Claim, ClaimReport, ClaimResult
from nikulin_check.claims.report import render_report, save_report, serialize_value
from nikulin_check.claims.runner import ClaimRunner, run_claims

__all__ = [
    'Claim', 'ClaimReport', 'ClaimResult', 'ClaimRunner', 'PASS', 'FAIL', 'SKIPPED', 'LOCATIONS',
    'builtin_claims', 'run_claims', 'render_report', 'save_report', 'serialize_value',
]
