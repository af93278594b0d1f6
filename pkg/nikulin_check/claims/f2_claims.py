"""
F₂ 二次型相关的断言

θ-特征标计数、Arf 不变量的稳健性检查与 Beauville 计数。
"""

import numpy as np

from nikulin_check.f2 import (QuadraticForm, arf, arf_in_basis, count_forms_by_arf,
                              count_special_theta, decompose_and_restrict, enumerate_forms,
                              eval_form, even_odd_difference, pair, polarity_violations,
                              random_symplectic_basis, standard_symplectic, translate_form,
                              zero_count)
from nikulin_check.f2.symplectic import random_bits
from nikulin_check.numerology import spin_locus_expected_dim

ARF_SEED = 20240501
POLARITY_SEED = 7


def _beauville_eta_violations(config):
    violations = 0
    for g in range(2, 5):
        space = standard_symplectic(g)
        expected = 2 ** (g - 1) * (2 ** (g - 1) - 1)
        for bits in range(1, 1 << space.dim):
            if count_special_theta(g, space.vector(bits)).n_solutions != expected:
                violations += 1
    return violations


def _arf_basis_violations(config, g=5, n_bases=100, n_forms=16):
    rng = np.random.default_rng(ARF_SEED)
    space = standard_symplectic(g)
    forms = [QuadraticForm(space, random_bits(rng, space.dim)) for _ in range(n_forms)]
    reference = [arf(q) for q in forms]
    violations = 0
    for _ in range(n_bases):
        basis = random_symplectic_basis(space, rng)
        for q, value in zip(forms, reference):
            if arf_in_basis(q, basis) != value:
                violations += 1
    return violations


def _democratic_violations(config):
    violations = 0
    for g in range(1, 5):
        even_zeros = 2 ** (2 * g - 1) + 2 ** (g - 1)
        for q in enumerate_forms(standard_symplectic(g)):
            if (arf(q) == 0) != (zero_count(q) == even_zeros):
                violations += 1
    return violations


def _translate_violations(config):
    """返回 (平移公式违反数, 自由性违反数)"""
    formula = 0
    freeness = 0
    for g in range(1, 4):
        space = standard_symplectic(g)
        for q in enumerate_forms(space):
            for v in space.vectors():
                moved = translate_form(q, v)
                if arf(moved) != arf(q) ^ eval_form(q, v):
                    formula += 1
                if moved == q and not v.is_zero():
                    freeness += 1
    return formula, freeness


def _additivity_violations(config):
    violations = 0
    for g in range(1, 4):
        space = standard_symplectic(g)
        for q in enumerate_forms(space):
            for eta in space.vectors():
                if eta.is_zero():
                    continue
                eps = next(v for v in space.vectors() if pair(space, eta, v))
                parts = decompose_and_restrict(q, eta, eps)
                if arf(q) != arf(parts.q_sigma) ^ arf(parts.q_perp):
                    violations += 1
    return violations


def _polarity_exhaustive(config):
    violations = 0
    for g in range(1, 4):
        for q in enumerate_forms(standard_symplectic(g)):
            violations += polarity_violations(q)
    space = standard_symplectic(4)
    for values in (0, 0x0f, 0xa5, 0xff):
        violations += polarity_violations(QuadraticForm(space, values))
    return violations


def _polarity_sampled(config):
    rng = np.random.default_rng(POLARITY_SEED)
    violations = 0
    for g in (5, 6):
        space = standard_symplectic(g)
        for _ in range(4):
            q = QuadraticForm(space, random_bits(rng, space.dim))
            violations += polarity_violations(q, samples=500, rng=rng)
    return violations


def _even_odd_violations(config):
    limit = min(config.max_g, 8)
    return sum(1 for g in range(1, limit + 1) if even_odd_difference(g) != 2 ** g)


def _theta_total(g):
    return sum(1 for _ in enumerate_forms(standard_symplectic(g)))


def _unit(g, index=0):
    return standard_symplectic(g).vector(1 << index)


def get_f2_claims():
    """
    获取 F₂ 二次型相关的断言

    Returns:
        list: 断言字典列表
    """
    claims = []

    for g in range(1, 7):
        claims.append({
            "id": f"f2.count.g{g}",
            "description": f"g={g} 时偶、奇 θ-特征标个数为 2^(g−1)(2^g ± 1)",
            "paper_location": "theta-characteristic counts",
            "compute": lambda config, g=g: count_forms_by_arf(g),
            "expected": (2 ** (g - 1) * (2 ** g + 1), 2 ** (g - 1) * (2 ** g - 1)),
            "requires": {"max_g": g},
        })

    for g in range(2, 7):
        claims.append({
            "id": f"f2.beauville.g{g}",
            "description": f"g={g} 时满足 q(η)=0 且 arf(q)=1 的二次型个数为 2^(g−1)(2^(g−1)−1)",
            "paper_location": "beauville counting argument",
            "compute": lambda config, g=g: count_special_theta(g, _unit(g)).n_solutions,
            "expected": 2 ** (g - 1) * (2 ** (g - 1) - 1),
            "requires": {"max_g": g},
        })
        claims.append({
            "id": f"f2.thetanull.g{g}",
            "description": f"g={g} 时配对后的不变消失 θ-零值个数为 2^(g−2)(2^(g−1)−1)",
            "paper_location": "beauville counting argument",
            "compute": lambda config, g=g: count_special_theta(g, _unit(g)).n_vanishing_thetanulls,
            "expected": 2 ** (g - 1) * (2 ** (g - 1) - 1) // 2,
            "requires": {"max_g": g},
        })

    claims += [
        {
            "id": "f2.theta.total.g4",
            "description": "θ-特征标总数为 2^(2g)（g=4）",
            "paper_location": "theta-characteristic counts",
            "compute": lambda config: _theta_total(4),
            "expected": 256,
            "requires": {"max_g": 4},
        },
        {
            "id": "f2.evenodd.sweep",
            "description": "偶型与奇型个数之差恒为 2^g（g = 1..min(max_g, 8)）",
            "paper_location": "theta-characteristic counts",
            "compute": _even_odd_violations,
            "expected": 0,
        },
        {
            "id": "f2.beauville.eta_independence",
            "description": "g ≤ 4 时 Beauville 计数与非零 η 的选取无关",
            "paper_location": "beauville counting argument",
            "compute": _beauville_eta_violations,
            "expected": 0,
            "requires": {"max_g": 4},
        },
        {
            "id": "f2.arf.basis_independence",
            "description": "g=5 时 100 个随机辛基下 Arf 不变量一致",
            "paper_location": "arf invariant",
            "compute": _arf_basis_violations,
            "expected": 0,
            "requires": {"max_g": 5},
        },
        {
            "id": "f2.arf.democratic",
            "description": "arf(q)=0 当且仅当 q 的零点个数为 2^(2g−1)+2^(g−1)（g ≤ 4 穷举）",
            "paper_location": "arf invariant",
            "compute": _democratic_violations,
            "expected": 0,
            "requires": {"max_g": 4},
        },
        {
            "id": "f2.arf.translate",
            "description": "arf(q+⟨·,v⟩) = arf(q)+q(v)，且平移作用自由（g ≤ 3 穷举）",
            "paper_location": "torsor action",
            "compute": _translate_violations,
            "expected": (0, 0),
            "requires": {"max_g": 3},
        },
        {
            "id": "f2.arf.additivity",
            "description": "Σ ⊕ Σ⊥ 分解下 Arf 不变量可加（g ≤ 3 穷举）",
            "paper_location": "beauville counting argument",
            "compute": _additivity_violations,
            "expected": 0,
            "requires": {"max_g": 3},
        },
        {
            "id": "f2.polarity.exhaustive",
            "description": "q(x+y) = q(x)+q(y)+⟨x,y⟩ 对全部向量对成立（g ≤ 3 全部二次型，g=4 抽取四个）",
            "paper_location": "weil pairing and the polarity identity",
            "compute": _polarity_exhaustive,
            "expected": 0,
            "requires": {"max_g": 4},
        },
        {
            "id": "f2.polarity.sampled",
            "description": "g=5、6 时随机抽样的极性检查无违反",
            "paper_location": "weil pairing and the polarity identity",
            "compute": _polarity_sampled,
            "expected": 0,
            "requires": {"max_g": 6},
        },
        {
            "id": "f2.spin.dim",
            "description": "𝒮ᵍʳ 的期望维数 3g−3−r(r+1)/2：(3,2) → 3，(5,1) → 11 为余维 1",
            "paper_location": "spin locus dimension",
            "compute": lambda config: (spin_locus_expected_dim(3, 2), spin_locus_expected_dim(5, 1)),
            "expected": (3, 11),
        },
    ]
    return claims
