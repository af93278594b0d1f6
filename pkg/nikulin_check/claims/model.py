"""
断言与报告的数据结构
"""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Mapping, Optional

from nikulin_check.config import RunConfig

PASS = 'PASS'
FAIL = 'FAIL'
SKIPPED = 'SKIPPED'


@dataclass(frozen=True)
class Claim:
    """一条可验证的数值断言

    compute 接收运行配置并返回计算值；expected 为期望值（Python 原生值，
    报告中与计算值按同一规则序列化后比较）。requires 形如 {'max_g': 6}，
    配置达不到时该断言记为 SKIPPED。
    """

    id: str
    description: str
    paper_location: str
    compute: Callable[[RunConfig], Any]
    expected: Any
    note: Optional[str] = None
    requires: Mapping[str, int] = field(default_factory=dict)

    def is_supported(self, config: RunConfig) -> bool:
        return all(getattr(config, key) >= value for key, value in self.requires.items())


@dataclass
class ClaimResult:
    id: str
    description: str
    paper_location: str
    computed: Any
    expected: Any
    status: str
    runtime_ms: int = 0
    note: Optional[str] = None

    def as_dict(self, canonical=False) -> Dict[str, Any]:
        data = {
            'id': self.id,
            'description': self.description,
            'paper_location': self.paper_location,
            'computed': self.computed,
            'expected': self.expected,
            'status': self.status,
        }
        if not canonical:
            data['runtime_ms'] = str(self.runtime_ms)
        if self.note:
            data['note'] = self.note
        return data


@dataclass
class ClaimReport:
    version: str
    config: Dict[str, str]
    claims: List[ClaimResult] = field(default_factory=list)

    def count(self, status: str) -> int:
        return sum(1 for c in self.claims if c.status == status)

    @property
    def passed(self) -> int:
        return self.count(PASS)

    @property
    def failed(self) -> int:
        return self.count(FAIL)

    @property
    def skipped(self) -> int:
        return self.count(SKIPPED)

    def as_dict(self, canonical=False) -> Dict[str, Any]:
        return {
            'version': self.version,
            'config': dict(self.config),
            'claims': [c.as_dict(canonical) for c in self.claims],
        }
