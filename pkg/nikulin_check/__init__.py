"""
Nikulin 曲面与 Prym-Brill-Noether 数值校验系统

有限域上的二次型、整格运算与 Brill-Noether 数值的精确计算库，
以及逐条核对各项数值断言并输出确定性报告的命令行工具。
"""

__version__ = '1.0.0'
