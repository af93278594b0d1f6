"""
双覆盖与 Nikulin 曲面相关的数值

Hurwitz 亏格公式、标准型 Nikulin 曲面上 Welters 定理失效的完整算术，
以及非标准型的覆盖数据。与 lattice 模块交叉核对 r 与亏格。
"""

import logging
from dataclasses import dataclass
from typing import List, NamedTuple

from nikulin_check.errors import (InternalConsistencyError, InvalidParameterError,
                                  NonStandardParityError)
from nikulin_check.lattice.nikulin import nonstandard_classes, pic_tilde_class
from nikulin_check.numerology.brill_noether import prym_numbers

logger = logging.getLogger('nikulin_check.numerology')


def _check_int(name, value, minimum):
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise InvalidParameterError(f"{name} 必须为 ≥ {minimum} 的整数，当前为 {value!r}")


def hurwitz_cover_genus(g: int, b: int) -> int:
    """双覆盖的亏格 2g − 1 + b/2

    Raises:
        InvalidParameterError: b 为奇数或为负
    """
    _check_int('g', g, 1)
    _check_int('b', b, 0)
    if b % 2:
        raise InvalidParameterError(f"双覆盖的分歧点个数必须为偶数，当前为 {b}")
    return 2 * g - 1 + b // 2


@dataclass(frozen=True)
class CoverNumerics:
    """底曲线亏格、分歧点个数与覆盖曲线亏格"""

    base_genus: int
    branch_count: int
    cover_genus: int

    def __post_init__(self):
        if self.cover_genus != hurwitz_cover_genus(self.base_genus, self.branch_count):
            raise InvalidParameterError("cover_genus 与 Hurwitz 公式不符")

    @classmethod
    def of(cls, base_genus: int, branch_count: int) -> 'CoverNumerics':
        return cls(base_genus, branch_count, hurwitz_cover_genus(base_genus, branch_count))

    def as_tuple(self):
        return self.base_genus, self.branch_count, self.cover_genus


class WeltersFailureRecord(NamedTuple):
    h: int
    r: int
    rho_minus: int
    fails_welters: bool
    on_nikulin_general: bool


def welters_closed_form(h: int) -> int:
    """ρ⁻(h, ⌊h/2⌋) 的闭式：h 奇数为 −(h−1)(h−7)/8，偶数为 −(h−2)(h−4)/8

    Raises:
        InternalConsistencyError: 分子不能被 8 整除
    """
    _check_int('h', h, 2)
    numerator = -(h - 1) * (h - 7) if h % 2 else -(h - 2) * (h - 4)
    if numerator % 8:
        raise InternalConsistencyError(f"h={h}: 闭式分子 {numerator} 不能被 8 整除")
    return numerator // 8


def standard_nikulin_prym_failure(h: int, cross_check: bool = True) -> WeltersFailureRecord:
    """标准型 Nikulin 曲面上亏格 h 曲线的 Prym-Brill-Noether 数

    r = ⌊h/2⌋，cross_check 为真时必须与格一侧 χ(A) − 1 一致；
    ρ⁻ 必须等于按奇偶取的闭式。on_nikulin_general 取 h ≤ 7 且 h ≠ 6。

    Args:
        h: 亏格 ≥ 2
        cross_check: 是否与 lattice.pic_tilde_class 交叉核对 r

    Returns:
        WeltersFailureRecord: r、ρ⁻ 以及两个区间判定

    Raises:
        InvalidParameterError: h < 2
        InternalConsistencyError: 交叉核对失败
    """
    _check_int('h', h, 2)
    r = h // 2
    if cross_check:
        lattice_r = pic_tilde_class(h).r
        if lattice_r != r:
            raise InternalConsistencyError(f"h={h}: ⌊h/2⌋ = {r}，格一侧 χ(A)−1 = {lattice_r}")

    minus = prym_numbers(h, r).rho_minus
    closed = welters_closed_form(h)
    if minus != closed:
        raise InternalConsistencyError(f"h={h}: ρ⁻ = {minus}，闭式给出 {closed}")

    return WeltersFailureRecord(
        h=h,
        r=r,
        rho_minus=minus,
        fails_welters=minus < 0,
        on_nikulin_general=h <= 7 and h != 6,
    )


def cover_numerics_nonstandard(h: int) -> List[CoverNumerics]:
    """非标准型 Nikulin 曲面上 R1、R2 对应的双覆盖数据

    只保留自交数 ≥ 0 的类；每个覆盖的亏格都必须为 (h+1)/2。

    Raises:
        NonStandardParityError: h 为偶数
    """
    if isinstance(h, int) and not isinstance(h, bool) and h % 2 == 0:
        raise NonStandardParityError(f"非标准型要求 h 为奇数，当前 h={h}")
    record = nonstandard_classes(h)
    covers = []
    for cls in (record.R1, record.R2):
        if cls.norm < 0:
            logger.debug("h=%d: %s 自交数 %d < 0，跳过", h, cls.name, cls.norm)
            continue
        cover = CoverNumerics.of(cls.genus, cls.branch)
        if 2 * cover.cover_genus != h + 1:
            raise InternalConsistencyError(f"h={h}: {cls.name} 的覆盖亏格 {cover.cover_genus} ≠ (h+1)/2")
        covers.append(cover)
    return covers


class CoverRealization(NamedTuple):
    g: int
    n: int
    h: int
    glue_class: str


def ramified_cover_realizations(g: int, n: int) -> CoverRealization:
    """在非标准型 Nikulin 曲面上实现 ℛ_{g,2n} 中的点

    n = 1: h = 4g−1，类 R1；n = 2: h = 4g+1，类 R1；n = 3: h = 4g+3，类 R2。
    """
    _check_int('g', g, 1)
    if n not in (1, 2, 3):
        raise InvalidParameterError(f"n 只能取 1、2、3，当前为 {n!r}")
    h, name = {1: (4 * g - 1, 'R1'), 2: (4 * g + 1, 'R1'), 3: (4 * g + 3, 'R2')}[n]
    record = nonstandard_classes(h)
    cls = record.R1 if name == 'R1' else record.R2
    if cls.genus != g or cls.branch != 2 * n:
        raise InternalConsistencyError(f"h={h}: {name} 的亏格/分歧点 ({cls.genus}, {cls.branch}) ≠ ({g}, {2 * n})")
    return CoverRealization(g, n, h, name)
