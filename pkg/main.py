#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Nikulin 曲面数值校验工具 - 主程序入口

与 nikulin-check 命令等价，例如：
    python main.py run --format text
    python main.py list
"""

import os
import sys

# 确保项目根目录在Python路径中
project_root = os.path.dirname(os.path.abspath(__file__))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

from nikulin_check.cli import main


if __name__ == "__main__":
    sys.exit(main())
