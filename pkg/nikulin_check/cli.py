"""
命令行入口

nikulin-check run   执行断言并输出报告
nikulin-check list  列出断言目录

退出码：0 全部通过，1 存在失败，2 用法错误。
"""

import argparse
import json
import logging
import sys

from nikulin_check import __version__
from nikulin_check.claims import builtin_claims, render_report, run_claims, save_report
from nikulin_check.claims.report import FORMATS
from nikulin_check.config import RunConfig
from nikulin_check.errors import UsageError
from nikulin_check.logging_setup import setup_logging

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _parse_expect(items):
    """把 ID=VALUE（VALUE 为 JSON 字面量）解析为覆盖字典"""
    overrides = {}
    for item in items or []:
        claim_id, sep, raw = item.partition('=')
        if not sep or not claim_id:
            raise UsageError(f"--expect 需要 ID=VALUE 形式: {item!r}")
        try:
            overrides[claim_id] = json.loads(raw)
        except json.JSONDecodeError:
            raise UsageError(f"--expect {claim_id} 的值不是合法 JSON: {raw!r}")
    return overrides


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='nikulin-check',
        description='F₂ 二次型、Nikulin 格与 Brill-Noether 数值的断言校验'
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    sub = parser.add_subparsers(dest='command', required=True)

    run = sub.add_parser('run', help='执行断言并输出报告')
    run.add_argument('--max-genus', type=int, default=None, help='F₂ 枚举的最大 g（默认 6）')
    run.add_argument('--max-h', type=int, default=None, help='格扫描的最大 h（默认 100）')
    run.add_argument('--filter', dest='filter_prefix', default=None, help='只执行 id 以该前缀开头的断言')
    run.add_argument('--format', dest='fmt', choices=FORMATS, default='json', help='输出格式')
    run.add_argument('--out', default=None, help='报告输出路径（默认 stdout）')
    run.add_argument('--fail-fast', action='store_true', help='首个失败后其余断言记为 SKIPPED')
    run.add_argument('--expect', action='append', metavar='ID=VALUE', help='覆盖某条断言的期望值（可重复）')
    run.add_argument('--canonical', action='store_true', help='JSON 中省略 runtime_ms')
    run.add_argument('--workers', type=int, default=None, help='并发线程数（默认 4）')
    run.add_argument('--verbose', action='store_true', help='输出调试日志')

    listing = sub.add_parser('list', help='列出断言目录')
    listing.add_argument('--filter', dest='filter_prefix', default=None, help='只列出 id 以该前缀开头的断言')
    return parser


def _write(data: bytes, out=None):
    if out:
        save_report(data, out)
        return
    stream = getattr(sys.stdout, 'buffer', None)
    if stream is None:
        sys.stdout.write(data.decode('utf-8'))
    else:
        stream.write(data)
        stream.flush()


def _cmd_run(args, logger) -> int:
    config = RunConfig.from_env(
        max_g=args.max_genus,
        max_h=args.max_h,
        filter_prefix=args.filter_prefix,
        fail_fast=args.fail_fast,
        workers=args.workers,
        expected_overrides=_parse_expect(args.expect),
    )
    report = run_claims(config)
    _write(render_report(report, args.fmt, canonical=args.canonical), args.out)
    logger.info(f"{report.passed} 通过, {report.failed} 失败, {report.skipped} 跳过")
    return EXIT_FAILED if report.failed else EXIT_OK


def _cmd_list(args) -> int:
    claims = builtin_claims()
    if args.filter_prefix:
        claims = [c for c in claims if c.id.startswith(args.filter_prefix)]
    lines = [f"{c.id}\t{c.paper_location}\t{c.description}" for c in claims]
    _write(('\n'.join(lines) + '\n').encode('utf-8'))
    return EXIT_OK


def main(argv=None) -> int:
    """命令行主函数

    Args:
        argv: 参数列表（默认读取 sys.argv）

    Returns:
        int: 退出码
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.DEBUG if getattr(args, 'verbose', False) else logging.INFO
    logger = setup_logging(level)

    try:
        if args.command == 'list':
            return _cmd_list(args)
        return _cmd_run(args, logger)
    except UsageError as e:
        logger.error(f"用法错误: {str(e)}")
        print(f"错误: {str(e)}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
