"""
日志配置

与入口脚本配合使用：输出到 stderr，配置了日志目录时同时写文件。
报告内容走 stdout，二者互不干扰。
"""

import logging
import os


def setup_logging(level=logging.INFO, log_dir=None):
    """设置日志记录

    Args:
        level: 日志级别
        log_dir: 日志目录（可选，默认读取环境变量 NIKULIN_CHECK_LOG_DIR）

    Returns:
        logging.Logger: 项目根日志记录器
    """
    log_dir = log_dir or os.environ.get('NIKULIN_CHECK_LOG_DIR')

    handlers = [logging.StreamHandler()]
    if log_dir:
        os.makedirs(log_dir, exist_ok=True)
        log_file = os.path.join(log_dir, 'nikulin_check.log')
        handlers.append(logging.FileHandler(log_file, encoding='utf-8'))

    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True
    )

    logger = logging.getLogger('nikulin_check')
    logger.setLevel(level)
    logger.debug('日志系统已初始化')
    return logger
