"""
θ-特征标计数

在二次型模型上统计满足 q(η) = 0 且 arf(q) = 1 的特征标，
以及它们沿 q ↦ q + ⟨·,η⟩ 配对后得到的不变消失 θ-零值个数；
并给出 J[2] = Σ ⊕ Σ⊥ 的分解与二次型的限制。
"""

import logging
from typing import NamedTuple

from nikulin_check.errors import (InternalConsistencyError, InvalidParameterError,
                                  NotHyperbolicPairError)
from nikulin_check.f2.quadratic import (QuadraticForm, arf, check_enumeration_cap,
                                        enumerate_forms, translate_form)
from nikulin_check.f2.symplectic import (F2Vector, Subspace, orthogonal_complement, pair,
                                         standard_symplectic)

logger = logging.getLogger('nikulin_check.f2.theta')


class SpecialThetaCount(NamedTuple):
    n_solutions: int
    n_vanishing_thetanulls: int


class Decomposition(NamedTuple):
    sigma: Subspace
    sigma_perp: Subspace
    q_sigma: QuadraticForm
    q_perp: QuadraticForm


def count_special_theta(g: int, eta: F2Vector) -> SpecialThetaCount:
    """统计 q(η) = 0 且 arf(q) = 1 的二次型，并按平移 q ↦ q + ⟨·,η⟩ 两两配对

    配对的轨道大小在运行时逐一核验，不做假设。

    Args:
        g: 半维数
        eta: 非零二阶挠点

    Returns:
        SpecialThetaCount: (解的个数, 配对后的消失 θ-零值个数)

    Raises:
        InvalidParameterError: eta 为零或维数不符
        InternalConsistencyError: 出现大小不为 2 的轨道
    """
    if not isinstance(g, int) or g < 1:
        raise InvalidParameterError(f"g 必须为正整数，当前为 {g}")
    check_enumeration_cap(g)
    space = standard_symplectic(g)
    if not isinstance(eta, F2Vector) or eta.dim != space.dim:
        raise InvalidParameterError(f"eta 的维数应为 {space.dim}")
    if eta.is_zero():
        raise InvalidParameterError("eta 不能为零向量")

    solutions = set()
    for q in enumerate_forms(space):
        if q.evaluate_bits(eta.bits) == 0 and arf(q) == 1:
            solutions.add(q.values)

    orbits = set()
    for values in solutions:
        partner = translate_form(QuadraticForm(space, values), eta).values
        if partner == values or partner not in solutions:
            raise InternalConsistencyError(f"二次型 {values:#x} 在 η 平移下的轨道大小不为 2")
        orbits.add(frozenset((values, partner)))
    if 2 * len(orbits) != len(solutions):
        raise InternalConsistencyError("平移轨道没有把解集划分为两元组")

    logger.debug("g=%d, eta=%s: %d 个解, %d 个轨道", g, eta.to_hex(), len(solutions), len(orbits))
    return SpecialThetaCount(len(solutions), len(orbits))


def decompose_and_restrict(q: QuadraticForm, eta: F2Vector, eps: F2Vector) -> Decomposition:
    """把二次型限制到双曲平面 Σ = ⟨η, ε⟩ 及其正交补 Σ⊥ 上

    Args:
        q: 二次型
        eta, eps: 满足 ⟨η, ε⟩ = 1 的向量

    Returns:
        Decomposition: (Σ, Σ⊥, q|Σ, q|Σ⊥)；arf(q) = arf(q|Σ) + arf(q|Σ⊥)

    Raises:
        NotHyperbolicPairError: ⟨η, ε⟩ = 0
    """
    space = q.space
    if pair(space, eta, eps) != 1:
        raise NotHyperbolicPairError(f"⟨{eta.to_hex()}, {eps.to_hex()}⟩ = 0，不能张成双曲平面")

    sigma = Subspace((eta, eps), space)
    sigma_perp = orthogonal_complement(space, eta, eps)
    if sigma_perp.dim != space.dim - 2:
        raise InternalConsistencyError(f"正交补维数为 {sigma_perp.dim}，应为 {space.dim - 2}")

    q_sigma = _restrict(q, sigma)
    q_perp = _restrict(q, sigma_perp)
    if not q_perp.space.is_nondegenerate:
        raise InternalConsistencyError("Σ⊥ 上的限制配对退化")
    return Decomposition(sigma, sigma_perp, q_sigma, q_perp)


def _restrict(q: QuadraticForm, sub: Subspace) -> QuadraticForm:
    values = 0
    for i, v in enumerate(sub.basis):
        values |= q.evaluate_bits(v.bits) << i
    return QuadraticForm(sub.restricted_space(), values)
