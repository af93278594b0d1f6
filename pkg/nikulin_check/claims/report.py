"""
报告序列化与输出

所有数值序列化为十进制字符串，布尔值为 "true"/"false"，
F₂ 对象为十六进制位串；报告中不出现浮点数。
"""

import csv
import io
import json
import logging
import numbers
import os
from fractions import Fraction

from nikulin_check.claims.model import ClaimReport
from nikulin_check.errors import InvalidParameterError, UsageError
from nikulin_check.f2 import F2Vector, QuadraticForm

logger = logging.getLogger('nikulin_check.claims.report')

FORMATS = ('json', 'csv', 'text')
CSV_HEADER = ('id', 'description', 'paper_location', 'computed', 'expected', 'status')


def serialize_value(value):
    """把计算值转换为只含字符串、列表、字典和 null 的 JSON 结构"""
    if value is None:
        return None
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, str):
        return value
    if isinstance(value, (F2Vector, QuadraticForm)):
        return value.to_hex()
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, dict):
        return {str(k): serialize_value(value[k]) for k in sorted(value, key=str)}
    if isinstance(value, (set, frozenset)):
        return [serialize_value(v) for v in sorted(value)]
    if isinstance(value, (list, tuple)):
        return [serialize_value(v) for v in value]
    raise InvalidParameterError(f"无法序列化类型 {type(value).__name__}: {value!r}")


def _cell(value) -> str:
    if value is None:
        return ''
    if isinstance(value, str):
        return value
    return json.dumps(value, ensure_ascii=False, separators=(',', ':'))


def summary_line(report: ClaimReport) -> str:
    line = f"{report.passed} passed, {report.failed} failed"
    if report.skipped:
        line += f", {report.skipped} skipped"
    return line


def _render_json(report, canonical):
    return json.dumps(report.as_dict(canonical), ensure_ascii=False, indent=2) + '\n'


def _render_csv(report):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(CSV_HEADER)
    for c in report.claims:
        writer.writerow([c.id, c.description, c.paper_location,
                         _cell(c.computed), _cell(c.expected), c.status])
    return buffer.getvalue()


def _render_text(report):
    rows = [(c.id, c.status, _cell(c.computed), _cell(c.expected)) for c in report.claims]
    lines = []
    if rows:
        widths = [max(len(row[i]) for row in rows) for i in range(3)]
        for row in rows:
            lines.append('  '.join(row[i].ljust(widths[i]) for i in range(3)) + '  ' + row[3])
    lines.append(summary_line(report))
    return '\n'.join(line.rstrip() for line in lines) + '\n'


def render_report(report: ClaimReport, fmt: str = 'json', canonical: bool = False) -> bytes:
    """按格式输出报告

    Args:
        report: 报告
        fmt: json / csv / text
        canonical: JSON 中是否省略 runtime_ms（确定性比较时使用）

    Returns:
        bytes: UTF-8 编码的报告内容

    Raises:
        UsageError: 未知格式
    """
    if fmt == 'json':
        text = _render_json(report, canonical)
    elif fmt == 'csv':
        text = _render_csv(report)
    elif fmt == 'text':
        text = _render_text(report)
    else:
        raise UsageError(f"未知的输出格式: {fmt}（可选 {', '.join(FORMATS)}）")
    return text.encode('utf-8')


def save_report(data: bytes, path: str):
    """写入报告文件，目录不存在时自动创建"""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'wb') as f:
        f.write(data)
    logger.info(f"报告已写入 {path}（{len(data)} 字节）")
