"""
运行配置

扫描上界、过滤前缀与并发数。默认值可通过环境变量覆盖：
NIKULIN_MAX_GENUS、NIKULIN_MAX_H、NIKULIN_WORKERS。
"""

import os
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from nikulin_check.errors import UsageError

# 各模块的硬上限
VECTOR_BITS_CAP = 64
ENUMERATION_G_CAP = 12
MAX_H_CAP = 10000
SHORT_VECTOR_NODE_BUDGET = 2_000_000


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None or raw == '':
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"环境变量 {name} 不是整数: {raw!r}")


@dataclass(frozen=True)
class RunConfig:
    """一次校验运行的配置"""

    max_g: int = 6
    max_h: int = 100
    filter_prefix: Optional[str] = None
    fail_fast: bool = False
    workers: int = 4
    expected_overrides: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_env(cls, **overrides):
        """按环境变量构造配置，显式参数优先

        Args:
            overrides: 显式传入的字段（值为 None 的字段忽略）

        Returns:
            RunConfig: 配置对象
        """
        values = {
            'max_g': _env_int('NIKULIN_MAX_GENUS', 6),
            'max_h': _env_int('NIKULIN_MAX_H', 100),
            'workers': _env_int('NIKULIN_WORKERS', 4),
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def validate(self):
        """检查上界是否落在各模块允许的范围内"""
        if not 1 <= self.max_g <= ENUMERATION_G_CAP:
            raise UsageError(f"max_g 必须在 1..{ENUMERATION_G_CAP} 之间，当前为 {self.max_g}")
        if not 2 <= self.max_h <= MAX_H_CAP:
            raise UsageError(f"max_h 必须在 2..{MAX_H_CAP} 之间，当前为 {self.max_h}")
        if self.workers < 1:
            raise UsageError(f"workers 至少为 1，当前为 {self.workers}")
        if self.filter_prefix is not None and not self.filter_prefix.strip():
            raise UsageError("过滤前缀不能为空字符串")
        return self

    def as_report_dict(self):
        """报告中记录的配置（全部为字符串）"""
        return {
            'max_g': str(self.max_g),
            'max_h': str(self.max_h),
            'filter_prefix': self.filter_prefix or '',
            'fail_fast': 'true' if self.fail_fast else 'false',
        }
