"""
定格短向量枚举

Fincke-Pohst 枚举：用 sympy 求 Gram 的精确 LDLᵀ 分解，
Q(x) = Σ Dᵢ (xᵢ + Σ_{j>i} L_{ji} xⱼ)²，自后向前逐层确定每个系数的取值区间。
区间由剩余预算精确给出，因此系数界是可证明的。
"""

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import List, NamedTuple, Optional, Tuple

import sympy

from nikulin_check.config import SHORT_VECTOR_NODE_BUDGET
from nikulin_check.errors import InvalidParameterError, ResourceLimitError, UnsupportedLatticeError
from nikulin_check.lattice.integer_lattice import (IntegerLattice, is_negative_definite,
                                                   is_positive_definite)

logger = logging.getLogger('nikulin_check.lattice.short_vectors')

MAX_ABS_TARGET = 64


class ShortVectorResult(NamedTuple):
    count: int
    vectors: Optional[Tuple[Tuple[int, ...], ...]]
    height_bound: int


def _to_fraction(x) -> Fraction:
    return Fraction(int(x.p), int(x.q))


def _ldl(gram) -> Tuple[List[List[Fraction]], List[Fraction]]:
    lower, diag = sympy.Matrix(gram).LDLdecomposition()
    n = len(gram)
    L = [[_to_fraction(lower[i, j]) for j in range(n)] for i in range(n)]
    D = [_to_fraction(diag[i, i]) for i in range(n)]
    return L, D


def height_bound(gram, bound: int) -> int:
    """系数绝对值的可证上界 max_i ⌊√(bound·(G⁻¹)ᵢᵢ)⌋"""
    inverse = sympy.Matrix(gram).inv()
    best = 0
    for i in range(len(gram)):
        value = _to_fraction(inverse[i, i]) * bound
        best = max(best, math.isqrt(value.numerator // value.denominator))
    return best


@lru_cache(maxsize=64)
def short_vectors(L: IntegerLattice, target_norm: int, collect: bool = False) -> ShortVectorResult:
    """统计自交数恰为 target_norm 的非零格向量

    Args:
        L: 定格（正定或负定）
        target_norm: 目标自交数
        collect: 是否同时返回向量列表（按枚举顺序）

    Returns:
        ShortVectorResult: (个数, 向量列表或 None, 系数高度上界)

    Raises:
        UnsupportedLatticeError: 格不定
        ResourceLimitError: |target_norm| 或枚举节点数超出预算
    """
    if not isinstance(target_norm, int):
        raise InvalidParameterError(f"目标自交数必须为整数: {target_norm!r}")
    if abs(target_norm) > MAX_ABS_TARGET:
        raise ResourceLimitError(f"|target_norm| = {abs(target_norm)} 超过枚举预算 {MAX_ABS_TARGET}")

    if is_positive_definite(L):
        sign = 1
    elif is_negative_definite(L):
        sign = -1
    else:
        raise UnsupportedLatticeError("格不定，无法做短向量枚举")

    bound = sign * target_norm
    if bound <= 0:
        return ShortVectorResult(0, () if collect else None, 0)

    gram = [[sign * x for x in row] for row in L.gram]
    lower, diag = _ldl(gram)
    n = L.rank
    x = [0] * n
    found: List[Tuple[int, ...]] = []
    count = 0
    nodes = 0

    def visit(level: int, remaining: Fraction):
        nonlocal count, nodes
        nodes += 1
        if nodes > SHORT_VECTOR_NODE_BUDGET:
            raise ResourceLimitError(f"短向量枚举节点数超过 {SHORT_VECTOR_NODE_BUDGET}")
        if level < 0:
            if remaining == 0 and any(x):
                count += 1
                if collect:
                    found.append(tuple(x))
            return
        center = -sum((lower[j][level] * x[j] for j in range(level + 1, n)), Fraction(0))
        width = math.isqrt(int(remaining / diag[level])) + 1
        low = math.floor(center) - width
        high = math.ceil(center) + width
        for value in range(low, high + 1):
            step = diag[level] * (value - center) ** 2
            if step <= remaining:
                x[level] = value
                visit(level - 1, remaining - step)
        x[level] = 0

    visit(n - 1, Fraction(bound))
    logger.debug("自交数 %d 的向量共 %d 个，枚举节点 %d", target_norm, count, nodes)
    return ShortVectorResult(count, tuple(found) if collect else None, height_bound(gram, bound))
