"""
Smith 标准形与判别群

对任意整数矩阵做行列初等变换，同时记录左右幺模变换：U·M·V = D，
D 为对角阵且 dᵢ | dᵢ₊₁。全部使用 Python 整数，不会溢出。
"""

import logging
from dataclasses import dataclass
from typing import List, NamedTuple, Sequence, Tuple

from nikulin_check.errors import DegenerateLatticeError, InternalConsistencyError, InvalidParameterError
from nikulin_check.lattice.integer_lattice import IntegerLattice

logger = logging.getLogger('nikulin_check.lattice.smith')

Matrix = List[List[int]]


class SmithDecomposition(NamedTuple):
    D: Matrix
    U: Matrix
    V: Matrix


@dataclass(frozen=True)
class DiscriminantData:
    """判别群 L^∨/L 的数据（保留为 1 的初等因子）"""

    elementary_divisors: Tuple[int, ...]
    group_order: int

    @property
    def invariants(self) -> Tuple[int, ...]:
        """去掉 1 之后的不变因子，即循环分解 ⊕ ℤ/dᵢ"""
        return tuple(d for d in self.elementary_divisors if d != 1)


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m, target, source, k):
    """row_target += k·row_source"""
    if k:
        m[target] = [a + k * b for a, b in zip(m[target], m[source])]


def _add_col(m, target, source, k):
    """col_target += k·col_source"""
    if k:
        for row in m:
            row[target] += k * row[source]


def _min_pivot(a, t, rows, cols):
    best = None
    for i in range(t, rows):
        for j in range(t, cols):
            if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                best = (i, j)
    return best


def smith_normal_form(M: Sequence[Sequence[int]]) -> SmithDecomposition:
    """计算 Smith 标准形

    Args:
        M: 整数矩阵（m×n）

    Returns:
        SmithDecomposition: (D, U, V)，U·M·V = D，U、V 为幺模阵

    Raises:
        InvalidParameterError: 输入不是矩形整数矩阵
    """
    a = [[int(x) for x in row] for row in M]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if any(len(row) != cols for row in a):
        raise InvalidParameterError("输入不是矩形矩阵")
    U = identity(rows)
    V = identity(cols)

    for t in range(min(rows, cols)):
        pivot = _min_pivot(a, t, rows, cols)
        if pivot is None:
            break
        while True:
            i, j = pivot
            if i != t:
                _swap_rows(a, t, i)
                _swap_rows(U, t, i)
            if j != t:
                _swap_cols(a, t, j)
                _swap_cols(V, t, j)
            p = a[t][t]
            for i in range(t + 1, rows):
                q = a[i][t] // p
                _add_row(a, i, t, -q)
                _add_row(U, i, t, -q)
            for j in range(t + 1, cols):
                q = a[t][j] // p
                _add_col(a, j, t, -q)
                _add_col(V, j, t, -q)

            leftover = [(i, t) for i in range(t + 1, rows) if a[i][t]]
            leftover += [(t, j) for j in range(t + 1, cols) if a[t][j]]
            if leftover:
                pivot = min(leftover, key=lambda ij: abs(a[ij[0]][ij[1]]))
                continue

            bad_row = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                None
            )
            if bad_row is None:
                break
            # 把不被整除的行加到主元行，下一轮主元严格变小
            _add_row(a, t, bad_row, 1)
            _add_row(U, t, bad_row, 1)
            pivot = (t, t)

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]

    if matmul(matmul(U, M), V) != a:
        raise InternalConsistencyError("Smith 标准形校验失败: U·M·V ≠ D")
    return SmithDecomposition(a, U, V)


def diagonal(D: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    return tuple(D[i][i] for i in range(min(len(D), len(D[0]) if D else 0)))


def discriminant_group(L: IntegerLattice) -> DiscriminantData:
    """由 Gram 矩阵的 Smith 标准形得到判别群

    Raises:
        DegenerateLatticeError: Gram 奇异
    """
    D, _, _ = smith_normal_form(L.gram)
    divisors = diagonal(D)
    if any(d == 0 for d in divisors):
        raise DegenerateLatticeError(f"Gram 矩阵奇异（标签 {', '.join(L.labels)}）")
    order = 1
    for d in divisors:
        order *= d
    logger.debug("判别群初等因子 %s，阶 %d", divisors, order)
    return DiscriminantData(divisors, order)
