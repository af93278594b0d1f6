"""
Brill-Noether 与 Prym-Brill-Noether 数值

ρ(g, r, d)、ρ⁻、ρ⁺、ρ̃ 以及由它们给出的存在性/空集判据。
全部是整数公式，不做中间除法。
"""

import logging
from dataclasses import dataclass
from typing import List, NamedTuple, Optional

from nikulin_check.errors import InternalConsistencyError, InvalidParameterError

logger = logging.getLogger('nikulin_check.numerology')

REGIMES = ('empty', 'kernel', 'injective')


def _check_int(name, value, minimum):
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise InvalidParameterError(f"{name} 必须为 ≥ {minimum} 的整数，当前为 {value!r}")


@dataclass(frozen=True)
class BNInput:
    """ρ(g, r, d) 的参数"""

    g: int
    r: int
    d: int

    def __post_init__(self):
        _check_int('g', self.g, 1)
        _check_int('r', self.r, 0)
        _check_int('d', self.d, 0)


def rho(params: BNInput) -> int:
    """ρ(g, r, d) = g − (r + 1)(g − d + r)"""
    g, r, d = params.g, params.r, params.d
    return g - (r + 1) * (g - d + r)


def bn_number(g: int, r: int, d: int) -> int:
    return rho(BNInput(g, r, d))


def rho_minus(g: int, r: int) -> int:
    """Prym-Brill-Noether 数 ρ⁻(g, r) = g − 1 − r(r+1)/2"""
    return g - 1 - r * (r + 1) // 2


def rho_tilde(g: int, r: int) -> int:
    """覆盖曲线上的 ρ(2g−1, r, 2g−2)"""
    return bn_number(2 * g - 1, r, 2 * g - 2)


class PrymRecord(NamedTuple):
    g: int
    r: int
    rho_minus: int
    rho_plus: int
    rho_tilde: int
    kernel_condition: bool
    window_condition: bool


def prym_numbers(g: int, r: int) -> PrymRecord:
    """计算 ρ⁻、ρ⁺ = ρ̃ − ρ⁻、ρ̃ 以及两个等价条件

    kernel_condition: ρ⁻ > max{−1, ρ̃}
    window_condition: −r ≤ ρ̃ < r
    两个条件各按定义独立计算，不互相推导。

    Args:
        g: 底曲线亏格
        r: 秩

    Returns:
        PrymRecord: 五个数值字段
    """
    _check_int('g', g, 1)
    _check_int('r', r, 0)
    minus = rho_minus(g, r)
    tilde = rho_tilde(g, r)
    plus = tilde - minus
    return PrymRecord(
        g=g,
        r=r,
        rho_minus=minus,
        rho_plus=plus,
        rho_tilde=tilde,
        kernel_condition=minus > max(-1, tilde),
        window_condition=-r <= tilde < r,
    )


def schwarz_forced_empty(g: int, r: int, d: int) -> bool:
    """覆盖曲线上 ρ(2g−1, r, d) < −r 时 W^r_d 在一般覆盖上为空"""
    _check_int('g', g, 1)
    return bn_number(2 * g - 1, r, d) < -r


def bertram_nonempty(g: int, r: int) -> bool:
    """ρ⁻(g, r) ≥ 0 时 Prym-Brill-Noether 轨迹非空"""
    _check_int('g', g, 1)
    _check_int('r', r, 0)
    return rho_minus(g, r) >= 0


class Gonality(NamedTuple):
    gonality: int
    clifford_index: int


def expected_gonality(g: int) -> Gonality:
    """一般平展双覆盖 C̃ 的 gonality：g 奇数时为 g+1，偶数时为 g

    Raises:
        InvalidParameterError: g < 2
    """
    _check_int('g', g, 2)
    gonality = g + 1 if g % 2 else g
    return Gonality(gonality, gonality - 2)


class GonalityBound(NamedTuple):
    g: int
    gonality: int
    generic_bound: int
    attains_bound: bool


def gonality_bound_check(g: int) -> GonalityBound:
    """与亏格 g̃ = 2g−1 曲线的一般上界 ⌊(g̃+3)/2⌋ 比较"""
    gonality = expected_gonality(g).gonality
    bound = (2 * g - 1 + 3) // 2
    if gonality > bound:
        raise InternalConsistencyError(f"g={g}: gonality {gonality} 超过一般上界 {bound}")
    return GonalityBound(g, gonality, bound, gonality == bound)


def spin_locus_expected_dim(g: int, r: int) -> int:
    """𝒮ᵍʳ 的期望维数下界 3g − 3 − r(r+1)/2"""
    return 3 * g - 3 - r * (r + 1) // 2


def welters_dimension(g: int, r: int) -> Optional[int]:
    """一般覆盖上 V^r 的维数 ρ⁻；为空时返回 None"""
    minus = prym_numbers(g, r).rho_minus
    return minus if minus >= 0 else None


def expectation_regime(g: int, r: int) -> str:
    """按 ρ⁻ 与 ρ⁺ 的符号划分：ρ⁻ < 0 为 empty，ρ⁻ ≥ 0 > ρ⁺ 为 kernel，其余为 injective"""
    record = prym_numbers(g, r)
    if record.rho_minus < 0:
        return 'empty'
    if record.rho_plus < 0:
        return 'kernel'
    return 'injective'


def expected_kernel_dimension(g: int, r: int) -> Optional[int]:
    """Petri 型映射核的期望维数：kernel 区间内为 −ρ⁺，单射区间为 0，空集区间为 None"""
    regime = expectation_regime(g, r)
    if regime == 'empty':
        return None
    if regime == 'kernel':
        return -prym_numbers(g, r).rho_plus
    return 0


def _has_negative_window_rank(g: int) -> bool:
    r = 1
    while (r + 1) ** 2 <= 2 * g - 1 + r:
        if rho_tilde(g, r) < 0:
            return True
        r += 1
    return False


def brill_noether_special_sweep(max_g: int) -> List[int]:
    """奇数 g ≤ max_g 中，不存在 r ≥ 1 使 −r ≤ ρ̃ < 0 的那些 g

    同时用等价表述 “ρ⁻ ≥ 0 且 ρ̃ < 0” 做交叉核对。
    """
    _check_int('max_g', max_g, 1)
    result = []
    for g in range(3, max_g + 1, 2):
        direct = _has_negative_window_rank(g)
        via_prym = any(
            rho_minus(g, r) >= 0 and rho_tilde(g, r) < 0
            for r in range(1, g + 1)
        )
        if direct != via_prym:
            raise InternalConsistencyError(f"g={g}: 两种表述给出的结论不一致")
        if not direct:
            result.append(g)
    logger.debug("g ≤ %d 中无负窗口秩的奇数亏格: %s", max_g, result)
    return result
