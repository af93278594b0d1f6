"""
整格与有理类

Gram 矩阵全部用 Python 整数保存，运算精确；有理类的分母只取 1 或 2，
用来表示 Picard 格指数 2 扩张中的粘合向量。
"""

import itertools
import logging
import numbers
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Tuple

import numpy as np
import sympy

from nikulin_check.errors import InvalidParameterError, NotACurveClassError

logger = logging.getLogger('nikulin_check.lattice')


@dataclass(frozen=True)
class IntegerLattice:
    """带标签基的整格"""

    gram: Tuple[Tuple[int, ...], ...]
    labels: Tuple[str, ...]

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InvalidParameterError(f"格中没有名为 {label} 的基向量")

    def matrix(self) -> sympy.Matrix:
        return sympy.Matrix(self.gram)

    def determinant(self) -> int:
        if self.rank == 0:
            return 1
        return int(self.matrix().det(method='bareiss'))

    def basis_class(self, label: str) -> 'RationalClass':
        i = self.index(label)
        return RationalClass(tuple(1 if j == i else 0 for j in range(self.rank)), 1)


def _as_int(entry, where):
    if isinstance(entry, bool):
        raise InvalidParameterError(f"{where} 不是整数: {entry!r}")
    if isinstance(entry, numbers.Integral):
        return int(entry)
    if isinstance(entry, (numbers.Rational, float)) and entry == int(entry):
        return int(entry)
    raise InvalidParameterError(f"{where} 不是整数: {entry!r}")


def lattice_from_gram(gram, labels: Optional[Sequence[str]] = None) -> IntegerLattice:
    """校验 Gram 矩阵并构造整格

    Args:
        gram: 方阵（嵌套序列或 numpy 数组），元素必须是整数
        labels: 基向量名称（可选，默认 b1..bn）

    Returns:
        IntegerLattice: 校验后的格

    Raises:
        InvalidParameterError: 非方阵、非对称或含非整数元素
    """
    rows = [list(row) for row in gram]
    size = len(rows)
    if size == 0:
        raise InvalidParameterError("Gram 矩阵不能为空")
    for i, row in enumerate(rows):
        if len(row) != size:
            raise InvalidParameterError(f"Gram 矩阵不是方阵：第 {i} 行长度为 {len(row)}")
    values = tuple(
        tuple(_as_int(rows[i][j], f"Gram[{i}][{j}]") for j in range(size))
        for i in range(size)
    )
    for i in range(size):
        for j in range(i + 1, size):
            if values[i][j] != values[j][i]:
                raise InvalidParameterError(f"Gram 矩阵不对称: ({i}, {j})")

    if labels is None:
        labels = tuple(f"b{i + 1}" for i in range(size))
    labels = tuple(labels)
    if len(labels) != size or len(set(labels)) != size:
        raise InvalidParameterError("基向量标签数量与秩不符或有重复")
    return IntegerLattice(values, labels)


@dataclass(frozen=True)
class RationalClass:
    """有理类 numerators / denominator（分母为 1 或 2）"""

    numerators: Tuple[int, ...]
    denominator: int = 1

    def __post_init__(self):
        if self.denominator not in (1, 2):
            raise InvalidParameterError(f"分母只能为 1 或 2，当前为 {self.denominator}")
        if self.denominator == 2 and all(n % 2 == 0 for n in self.numerators):
            raise InvalidParameterError("分母为 2 时至少要有一个奇数分子，请先约分")

    @classmethod
    def of(cls, numerators: Sequence[int], denominator: int = 1) -> 'RationalClass':
        """构造并自动约分"""
        numerators = tuple(int(n) for n in numerators)
        if denominator == 2 and all(n % 2 == 0 for n in numerators):
            return cls(tuple(n // 2 for n in numerators), 1)
        return cls(numerators, denominator)

    def __add__(self, other: 'RationalClass') -> 'RationalClass':
        if len(other.numerators) != len(self.numerators):
            raise InvalidParameterError("有理类长度不一致")
        den = max(self.denominator, other.denominator)
        a = [n * (den // self.denominator) for n in self.numerators]
        b = [n * (den // other.denominator) for n in other.numerators]
        return RationalClass.of([x + y for x, y in zip(a, b)], den)

    def scaled(self, k: int) -> 'RationalClass':
        return RationalClass.of([k * n for n in self.numerators], self.denominator)


def rational_class(L: IntegerLattice, coefficients: Mapping[str, int], denominator: int = 1) -> RationalClass:
    """由 {标签: 系数} 构造有理类，例如 (H − N1 − N2)/2"""
    numerators = [0] * L.rank
    for label, coeff in coefficients.items():
        numerators[L.index(label)] += int(coeff)
    return RationalClass.of(numerators, denominator)


def _check_class(L: IntegerLattice, u: RationalClass):
    if len(u.numerators) != L.rank:
        raise InvalidParameterError(f"有理类长度 {len(u.numerators)} 与格的秩 {L.rank} 不一致")


def inner(L: IntegerLattice, u: RationalClass, v: RationalClass) -> Fraction:
    """交点数 uᵀ·gram·v，精确有理数"""
    _check_class(L, u)
    _check_class(L, v)
    total = 0
    for i, ui in enumerate(u.numerators):
        if ui:
            row = L.gram[i]
            total += ui * sum(row[j] * vj for j, vj in enumerate(v.numerators) if vj)
    return Fraction(total, u.denominator * v.denominator)


def genus_and_euler(L: IntegerLattice, v: RationalClass) -> Tuple[int, int]:
    """K3 上类 v 的算术亏格 1 + v²/2 与 χ = 2 + v²/2

    Raises:
        NotACurveClassError: v² 不是偶整数
    """
    norm = inner(L, v, v)
    if norm.denominator != 1 or norm.numerator % 2:
        raise NotACurveClassError(f"自交数 {norm} 不是偶整数")
    half = norm.numerator // 2
    return 1 + half, 2 + half


def glue_check(L: IntegerLattice, c: RationalClass) -> bool:
    """检查半整类 c 能否生成偶的指数 2 扩张：与每个基向量的配对为整数且 c² 为偶整数"""
    _check_class(L, c)
    if c.denominator != 2:
        raise InvalidParameterError("粘合向量的分母必须为 2")
    for i in range(L.rank):
        basis = RationalClass(tuple(1 if j == i else 0 for j in range(L.rank)), 1)
        if inner(L, c, basis).denominator != 1:
            return False
    norm = inner(L, c, c)
    return norm.denominator == 1 and norm.numerator % 2 == 0


def overlattice_gram(L: IntegerLattice, c: RationalClass) -> IntegerLattice:
    """L + ℤc 在新基下的整 Gram 矩阵

    把 c 的分子模 2 约化为 (Σ_{i∈S} bᵢ)/2，再用它替换 S 中下标最小的基向量。
    """
    if not glue_check(L, c):
        raise InvalidParameterError("该类不满足粘合条件，不能生成整的扩张")
    reduced = tuple(n % 2 for n in c.numerators)
    k = reduced.index(1)
    basis = []
    for i in range(L.rank):
        if i == k:
            basis.append(RationalClass(reduced, 2))
        else:
            basis.append(RationalClass(tuple(1 if j == i else 0 for j in range(L.rank)), 1))
    gram = []
    for u in basis:
        row = []
        for v in basis:
            value = inner(L, u, v)
            if value.denominator != 1:
                raise InvalidParameterError("扩张后的 Gram 含非整数元素")
            row.append(value.numerator)
        gram.append(row)
    labels = list(L.labels)
    labels[k] = 'glue'
    return lattice_from_gram(gram, labels)


def is_negative_definite(L: IntegerLattice) -> bool:
    """顺序主子式判别：(−1)^k·det_k > 0 对所有 k 成立"""
    m = L.matrix()
    for k in range(1, L.rank + 1):
        minor = int(m[:k, :k].det(method='bareiss'))
        if (-1) ** k * minor <= 0:
            return False
    return True


def is_positive_definite(L: IntegerLattice) -> bool:
    m = L.matrix()
    return all(int(m[:k, :k].det(method='bareiss')) > 0 for k in range(1, L.rank + 1))


def count_nonnegative_short(L: IntegerLattice, height: int) -> int:
    """系数绝对值 ≤ height 的非零向量中自交数 ≥ 0 的个数（负定格应为 0）"""
    n = L.rank
    if (2 * height + 1) ** n > 5_000_000:
        raise InvalidParameterError(f"height={height} 在秩 {n} 下枚举规模过大")
    max_entry = max(abs(x) for row in L.gram for x in row)
    dtype = np.int64 if max_entry * (n * height) ** 2 < 2 ** 62 else object
    coeffs = np.array(list(itertools.product(range(-height, height + 1), repeat=n)), dtype=dtype)
    gram = np.array(L.gram, dtype=dtype)
    norms = ((coeffs @ gram) * coeffs).sum(axis=1)
    nonzero = np.any(coeffs != 0, axis=1)
    return int(np.count_nonzero((norms >= 0) & nonzero))


def lattice_summary(L: IntegerLattice) -> dict:
    """报告中使用的格摘要 {labels, gram, even, disc_order}"""
    return {
        'labels': list(L.labels),
        'gram': [list(row) for row in L.gram],
        'even': L.is_even,
        'disc_order': abs(L.determinant()),
    }
