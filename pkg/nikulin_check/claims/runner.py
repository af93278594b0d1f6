"""
断言执行器

按配置筛选断言，在线程池中并发求值，再按 id 排序汇总为报告。
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

from nikulin_check import __version__
from nikulin_check.claims.catalog import builtin_claims
from nikulin_check.claims.model import FAIL, PASS, SKIPPED, Claim, ClaimReport, ClaimResult
from nikulin_check.claims.report import serialize_value
from nikulin_check.config import RunConfig
from nikulin_check.errors import UsageError


class ClaimRunner:
    """断言执行器类"""

    def __init__(self, config: RunConfig, claims: Optional[List[Claim]] = None):
        """初始化执行器

        Args:
            config: 运行配置（构造时校验）
            claims: 断言列表（可选，默认使用内置目录）
        """
        self.logger = logging.getLogger('nikulin_check.claims.runner')
        self.config = config.validate()
        self.claims = list(claims) if claims is not None else builtin_claims()

    def select(self) -> List[Claim]:
        """按过滤前缀筛选断言，按 id 排序

        Raises:
            UsageError: 前缀没有匹配任何断言，或 expected 覆盖引用了不存在的 id
        """
        known = {c.id for c in self.claims}
        unknown = sorted(set(self.config.expected_overrides) - known)
        if unknown:
            raise UsageError(f"--expect 引用了不存在的断言: {', '.join(unknown)}")

        selected = self.claims
        prefix = self.config.filter_prefix
        if prefix:
            selected = [c for c in selected if c.id.startswith(prefix)]
            if not selected:
                raise UsageError(f"过滤前缀 {prefix!r} 没有匹配任何断言")
        return sorted(selected, key=lambda c: c.id)

    def _expected(self, claim: Claim):
        if claim.id in self.config.expected_overrides:
            return serialize_value(self.config.expected_overrides[claim.id])
        return serialize_value(claim.expected)

    def _skipped(self, claim: Claim) -> ClaimResult:
        return ClaimResult(
            id=claim.id,
            description=claim.description,
            paper_location=claim.paper_location,
            computed=None,
            expected=self._expected(claim),
            status=SKIPPED,
            note=claim.note,
        )

    def evaluate(self, claim: Claim) -> ClaimResult:
        """求值单条断言

        compute 抛出的异常在这里兜底，记为 FAIL，避免单条断言阻塞整批运行。
        """
        if not claim.is_supported(self.config):
            self.logger.info(f"{claim.id}: 超出当前配置 {dict(claim.requires)}，跳过")
            return self._skipped(claim)

        expected = self._expected(claim)
        start = time.perf_counter_ns()
        try:
            computed = serialize_value(claim.compute(self.config))
            status = PASS if computed == expected else FAIL
        except Exception as e:
            self.logger.error(f"{claim.id} 计算失败: {str(e)}", exc_info=True)
            computed = f"error: {type(e).__name__}: {e}"
            status = FAIL
        runtime_ms = (time.perf_counter_ns() - start) // 1_000_000

        self.logger.info(f"{claim.id}: {status}（{runtime_ms} ms）")
        return ClaimResult(
            id=claim.id,
            description=claim.description,
            paper_location=claim.paper_location,
            computed=computed,
            expected=expected,
            status=status,
            runtime_ms=runtime_ms,
            note=claim.note,
        )

    def run(self) -> ClaimReport:
        """执行全部选中的断言

        Returns:
            ClaimReport: 按 id 排序的报告
        """
        selected = self.select()
        self.logger.info(f"开始执行 {len(selected)} 条断言（workers={self.config.workers}）")

        if self.config.fail_fast:
            results = []
            failed = False
            for claim in selected:
                if failed:
                    results.append(self._skipped(claim))
                    continue
                result = self.evaluate(claim)
                results.append(result)
                failed = result.status == FAIL
        else:
            with ThreadPoolExecutor(max_workers=self.config.workers) as pool:
                results = list(pool.map(self.evaluate, selected))

        report = ClaimReport(
            version=__version__,
            config=self.config.as_report_dict(),
            claims=sorted(results, key=lambda r: r.id),
        )
        self.logger.info(f"执行完毕: {report.passed} 通过, {report.failed} 失败, {report.skipped} 跳过")
        return report


def run_claims(config: RunConfig, claims: Optional[List[Claim]] = None) -> ClaimReport:
    """执行断言并返回报告

    Raises:
        UsageError: 配置不合法或过滤前缀无匹配
    """
    return ClaimRunner(config, claims).run()
