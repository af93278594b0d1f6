"""
极性固定的 F₂ 二次型

二次型只保存在基向量上的取值，其余向量按极化展开求值：
q(Σ cᵢbᵢ) = Σ cᵢ q(bᵢ) + Σ_{i<j} cᵢcⱼ ⟨bᵢ,bⱼ⟩。
θ-特征标与这些二次型一一对应。
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

from nikulin_check.config import ENUMERATION_G_CAP
from nikulin_check.errors import InvalidParameterError, ResourceLimitError
from nikulin_check.f2.symplectic import (F2Vector, SymplecticSpace, is_symplectic_basis, random_bits,
                                         standard_symplectic, symplectic_basis)

logger = logging.getLogger('nikulin_check.f2.quadratic')


@dataclass(frozen=True)
class QuadraticForm:
    """二次型：values 的第 i 位是 q(bᵢ)"""

    space: SymplecticSpace
    values: int

    def __post_init__(self):
        if not 0 <= self.values < (1 << self.space.dim):
            raise InvalidParameterError(f"基向量取值超出 {self.space.dim} 位: {self.values:#x}")

    @property
    def basis_values(self) -> Tuple[int, ...]:
        return tuple((self.values >> i) & 1 for i in range(self.space.dim))

    def evaluate_bits(self, x: int) -> int:
        total = (x & self.values).bit_count()
        upper = self.space.upper_rows
        rest = x
        i = 0
        while rest:
            if rest & 1:
                total += (upper[i] & x).bit_count()
            rest >>= 1
            i += 1
        return total & 1

    def to_hex(self) -> str:
        width = max(1, (self.space.dim + 3) // 4)
        return f"{self.values:0{width}x}"


def form_from_values(space: SymplecticSpace, bits: Sequence[int]) -> QuadraticForm:
    """由基向量取值序列构造二次型"""
    if len(bits) != space.dim:
        raise InvalidParameterError(f"需要 {space.dim} 个基向量取值，实际 {len(bits)} 个")
    return QuadraticForm(space, F2Vector.from_coords(bits).bits)


def _check(q: QuadraticForm, x: F2Vector):
    if not isinstance(x, F2Vector) or x.dim != q.space.dim:
        raise InvalidParameterError(f"向量维数 {getattr(x, 'dim', None)} 与二次型空间维数 {q.space.dim} 不一致")


def eval_form(q: QuadraticForm, x: F2Vector) -> int:
    """按极化展开求 q(x)"""
    _check(q, x)
    return q.evaluate_bits(x.bits)


def translate_form(q: QuadraticForm, v: F2Vector) -> QuadraticForm:
    """挠点平移：q′(x) = q(x) + ⟨x,v⟩

    Args:
        q: 二次型
        v: 平移向量

    Returns:
        QuadraticForm: 平移后的二次型（v = 0 时即 q 本身）
    """
    _check(q, v)
    shift = 0
    for i in range(q.space.dim):
        if q.space.pair_bits(1 << i, v.bits):
            shift |= 1 << i
    return QuadraticForm(q.space, q.values ^ shift)


def arf_in_basis(q: QuadraticForm, basis: Sequence[F2Vector]) -> int:
    """在给定辛基下计算 Σ q(eᵢ)q(fᵢ)"""
    if not is_symplectic_basis(q.space, basis):
        raise InvalidParameterError("给定的基不是辛基")
    g = q.space.g
    total = 0
    for i in range(g):
        total += eval_form(q, basis[i]) * eval_form(q, basis[g + i])
    return total & 1


def arf(q: QuadraticForm) -> int:
    """Arf 不变量（在 symplectic_basis 给出的基下计算，与基的选取无关）"""
    basis = symplectic_basis(q.space)
    g = q.space.g
    total = 0
    for i in range(g):
        total += q.evaluate_bits(basis[i].bits) * q.evaluate_bits(basis[g + i].bits)
    return total & 1


def check_enumeration_cap(g: int):
    if g > ENUMERATION_G_CAP:
        raise ResourceLimitError(f"g={g} 超过枚举上限 {ENUMERATION_G_CAP}（需要 2^{2 * g} 个对象）")


def enumerate_forms(space: SymplecticSpace) -> Iterator[QuadraticForm]:
    """按基向量取值的字典序列出全部 2^{2g} 个二次型

    Raises:
        ResourceLimitError: g 超过枚举上限
    """
    check_enumeration_cap(space.g)
    return _iter_forms(space)


def _iter_forms(space):
    for bits in itertools.product((0, 1), repeat=space.dim):
        values = 0
        for i, b in enumerate(bits):
            values |= b << i
        yield QuadraticForm(space, values)


def count_forms_by_arf(g: int) -> Tuple[int, int]:
    """穷举统计偶、奇二次型的个数

    Args:
        g: 半维数

    Returns:
        tuple: (偶型个数, 奇型个数)，应等于 2^{g−1}(2^g ± 1)
    """
    if not isinstance(g, int) or g < 1:
        raise InvalidParameterError(f"g 必须为正整数，当前为 {g}")
    check_enumeration_cap(g)
    space = standard_symplectic(g)
    n_odd = 0
    n_total = 0
    for q in enumerate_forms(space):
        n_odd += arf(q)
        n_total += 1
    logger.debug("g=%d: 共 %d 个二次型，其中奇型 %d 个", g, n_total, n_odd)
    return n_total - n_odd, n_odd


def zero_count(q: QuadraticForm) -> int:
    """#{x : q(x) = 0}，作为 Arf 不变量的独立校验"""
    check_enumeration_cap(q.space.g)
    return sum(1 for x in range(1 << q.space.dim) if not q.evaluate_bits(x))


def polarity_violations(q: QuadraticForm, samples=None, rng=None) -> int:
    """统计 q(x+y) ≠ q(x)+q(y)+⟨x,y⟩ 的向量对个数

    Args:
        q: 二次型
        samples: 抽样对数；None 表示穷举全部 (x, y)（要求 g ≤ 4）
        rng: 抽样时使用的 numpy.random.Generator

    Returns:
        int: 违反极性关系的向量对个数
    """
    space = q.space
    if samples is None:
        if space.g > 4:
            raise ResourceLimitError(f"穷举极性检查只支持 g ≤ 4，当前 g={space.g}")
        pairs = itertools.product(range(1 << space.dim), repeat=2)
    else:
        if rng is None:
            raise InvalidParameterError("抽样检查需要提供 rng")
        pairs = ((random_bits(rng, space.dim), random_bits(rng, space.dim)) for _ in range(samples))
    violations = 0
    for x, y in pairs:
        lhs = q.evaluate_bits(x ^ y)
        rhs = q.evaluate_bits(x) ^ q.evaluate_bits(y) ^ space.pair_bits(x, y)
        if lhs != rhs:
            violations += 1
    return violations


def even_odd_difference(g: int) -> int:
    """偶型与奇型个数之差，应为 2^g"""
    n_even, n_odd = count_forms_by_arf(g)
    return n_even - n_odd
