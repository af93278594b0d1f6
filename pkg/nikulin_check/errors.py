"""
异常定义

所有模块共用的异常层次。参数类错误同时继承 ValueError，
调用方既可以捕获 NikulinCheckError，也可以按 ValueError 处理。
"""


class NikulinCheckError(Exception):
    """本项目所有异常的基类"""


class InvalidParameterError(NikulinCheckError, ValueError):
    """参数不合法（维数不符、取值越界等）"""


class ResourceLimitError(NikulinCheckError):
    """枚举规模超过上限"""


class NoSymplecticBasisError(NikulinCheckError):
    """交错形式退化，不存在辛基"""


class NotHyperbolicPairError(NikulinCheckError, ValueError):
    """两个向量的配对为 0，不能张成双曲平面"""


class NotACurveClassError(NikulinCheckError, ValueError):
    """类的自交数不是偶整数，不能对应 K3 上的曲线"""


class DegenerateLatticeError(NikulinCheckError):
    """Gram 矩阵奇异"""


class NonStandardParityError(NikulinCheckError, ValueError):
    """非标准型 Nikulin 曲面要求亏格 h 为奇数"""


class UnsupportedLatticeError(NikulinCheckError):
    """格不定，无法做短向量枚举"""


class InternalConsistencyError(NikulinCheckError):
    """运行时自检失败（出现即为程序缺陷）"""


class UsageError(NikulinCheckError, ValueError):
    """运行配置或命令行参数错误（退出码 2）"""
