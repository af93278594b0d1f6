"""
Brill-Noether 数值相关的断言
"""

from nikulin_check.lattice import pic_tilde_class
from nikulin_check.numerology import (bertram_nonempty, bn_number, brill_noether_special_sweep,
                                      cover_numerics_nonstandard, expectation_regime,
                                      expected_gonality, expected_kernel_dimension,
                                      gonality_bound_check, hurwitz_cover_genus, prym_numbers,
                                      ramified_cover_realizations, schwarz_forced_empty,
                                      standard_nikulin_prym_failure, welters_closed_form)

GRID_G = range(2, 501)
GRID_R = range(0, 51)


def _grid_violations(config):
    """返回 (ρ̃ 恒等式违反数, ρ̃ = ρ⁺+ρ⁻ 违反数, 两个条件不等价的个数)"""
    identity = decomposition = equivalence = 0
    for g in GRID_G:
        for r in GRID_R:
            record = prym_numbers(g, r)
            if record.rho_tilde != 2 * g - 1 - (r + 1) ** 2:
                identity += 1
            if record.rho_tilde != record.rho_plus + record.rho_minus:
                decomposition += 1
            if record.kernel_condition != record.window_condition:
                equivalence += 1
    return identity, decomposition, equivalence


def _pencil_violations(config):
    return sum(
        1 for g in GRID_G
        if bn_number(2 * g - 1, 1, g) != -1 or schwarz_forced_empty(g, 1, g)
    )


def _gonality_schwarz_violations(config):
    return sum(
        1 for g in range(2, 51)
        if schwarz_forced_empty(g, 1, expected_gonality(g).gonality)
    )


def _gonality_bound_violations(config):
    return sum(1 for g in range(2, 51) if gonality_bound_check(g).attains_bound != (g % 2 == 1))


def _prym_fields(g, r):
    record = prym_numbers(g, r)
    return (record.rho_minus, record.rho_plus, record.rho_tilde,
            record.kernel_condition, record.window_condition)


def _welters_fields(h):
    record = standard_nikulin_prym_failure(h)
    return record.r, record.rho_minus, record.fails_welters


def _closed_form_violations(config):
    return sum(
        1 for h in range(2, 10001)
        if prym_numbers(h, h // 2).rho_minus != welters_closed_form(h)
    )


def _boundary_violations(config):
    violations = 0
    for h in range(2, config.max_h + 1):
        record = standard_nikulin_prym_failure(h, cross_check=False)
        if record.fails_welters == record.on_nikulin_general:
            violations += 1
    return violations


def _r_crosscheck_violations(config):
    return sum(1 for h in range(2, 201) if pic_tilde_class(h).r != h // 2)


def _cover_tuples(h):
    return [c.as_tuple() for c in cover_numerics_nonstandard(h)]


def _cover_hurwitz_violations(config):
    violations = 0
    for h in range(3, 200, 2):
        for c in cover_numerics_nonstandard(h):
            if 2 * c.base_genus - 1 + c.branch_count // 2 != (h + 1) // 2:
                violations += 1
    return violations


def _realizations(config):
    return sum(1 for g in range(1, 21) for n in (1, 2, 3) if ramified_cover_realizations(g, n))


def _regime_violations(config):
    violations = 0
    for g in range(2, 101):
        for r in range(0, 21):
            regime = expectation_regime(g, r)
            kernel = expected_kernel_dimension(g, r)
            record = prym_numbers(g, r)
            if (regime == 'kernel') != record.window_condition:
                violations += 1
            if (regime == 'kernel') != record.kernel_condition:
                violations += 1
            if (regime == 'empty') != (record.rho_tilde < -r):
                violations += 1
            if (regime == 'empty') != (kernel is None):
                violations += 1
            if regime == 'kernel' and kernel <= 0:
                violations += 1
    return violations


def get_numerology_claims():
    """
    获取 Brill-Noether 数值相关的断言

    Returns:
        list: 断言字典列表
    """
    return [
        {
            "id": "bn.rho.r0",
            "description": "r = 0 时 ρ(g, 0, d) = d：(5, 0, 3) → 3",
            "paper_location": "brill-noether number",
            "compute": lambda config: bn_number(5, 0, 3),
            "expected": 3,
        },
        {
            "id": "bn.rho.cover_g4",
            "description": "ρ(7, 1, 6) = 2g−1−(r+1)² = 3（g=4, r=1）",
            "paper_location": "brill-noether number",
            "compute": lambda config: bn_number(7, 1, 6),
            "expected": 3,
        },
        {
            "id": "bn.grid.identities",
            "description": "2 ≤ g ≤ 500、0 ≤ r ≤ 50 上 ρ̃ = 2g−1−(r+1)² = ρ⁺+ρ⁻，且两个条件等价",
            "paper_location": "rho-plus and the kernel/window conditions",
            "compute": _grid_violations,
            "expected": (0, 0, 0),
        },
        {
            "id": "bn.pencil.sweep",
            "description": "ρ(2g−1, 1, g) = −1 对 g = 2..500 成立，且从不被 Schwarz 判据排除",
            "paper_location": "even-genus pencil",
            "compute": _pencil_violations,
            "expected": 0,
        },
        {
            "id": "bn.prym.g7r3",
            "description": "(g, r) = (7, 3)：ρ⁻ = 0，ρ⁺ = −3，ρ̃ = −3，两个条件均成立",
            "paper_location": "prym-brill-noether number",
            "compute": lambda config: _prym_fields(7, 3),
            "expected": (0, -3, -3, True, True),
        },
        {
            "id": "bn.prym.g11r5",
            "description": "ρ⁻(11, 5) = −5",
            "paper_location": "prym-brill-noether number",
            "compute": lambda config: prym_numbers(11, 5).rho_minus,
            "expected": -5,
        },
        {
            "id": "bn.bertram",
            "description": "ρ⁻ ≥ 0 时非空：(7, 3) 为真，(6, 3) 为假",
            "paper_location": "prym-brill-noether existence predicates",
            "compute": lambda config: (bertram_nonempty(7, 3), bertram_nonempty(6, 3)),
            "expected": (True, False),
        },
        {
            "id": "bn.schwarz.g3",
            "description": "Schwarz 判据：(3, 1, 2) 被排除，(3, 1, 3) 不被排除",
            "paper_location": "schwarz emptiness",
            "compute": lambda config: (schwarz_forced_empty(3, 1, 2), schwarz_forced_empty(3, 1, 3)),
            "expected": (True, False),
        },
        {
            "id": "bn.gonality.g5",
            "description": "g=5（奇数）时 gonality 为 g+1 = 6，Clifford 指标 4",
            "paper_location": "gonality and clifford index",
            "compute": lambda config: tuple(expected_gonality(5)),
            "expected": (6, 4),
        },
        {
            "id": "bn.gonality.g6",
            "description": "g=6（偶数）时 gonality 为 g = 6，Clifford 指标 4",
            "paper_location": "gonality and clifford index",
            "compute": lambda config: tuple(expected_gonality(6)),
            "expected": (6, 4),
        },
        {
            "id": "bn.gonality.schwarz",
            "description": "g = 2..50 时 gonality 次数的铅笔从不被 Schwarz 判据排除",
            "paper_location": "gonality and clifford index",
            "compute": _gonality_schwarz_violations,
            "expected": 0,
        },
        {
            "id": "bn.gonality.bound",
            "description": "gonality 不超过亏格 2g−1 曲线的一般上界，且恰在 g 为奇数时取等",
            "paper_location": "gonality and clifford index",
            "compute": _gonality_bound_violations,
            "expected": 0,
        },
        {
            "id": "bn.hurwitz.instances",
            "description": "Hurwitz 公式 2g−1+b/2：(4, 0) → 7，(2, 2) → 4，(1, 6) → 4",
            "paper_location": "hurwitz genus",
            "compute": lambda config: (hurwitz_cover_genus(4, 0), hurwitz_cover_genus(2, 2),
                                       hurwitz_cover_genus(1, 6)),
            "expected": (7, 4, 4),
        },
        {
            "id": "bn.welters.h6",
            "description": "h=6：r = 3，ρ⁻ = −1，Welters 定理失效",
            "paper_location": "welters failure on standard nikulin surfaces",
            "compute": lambda config: _welters_fields(6),
            "expected": (3, -1, True),
            "requires": {"max_h": 6},
        },
        {
            "id": "bn.welters.h7",
            "description": "h=7：r = 3，ρ⁻ = 0，Welters 定理成立",
            "paper_location": "welters failure on standard nikulin surfaces",
            "compute": lambda config: _welters_fields(7),
            "expected": (3, 0, False),
            "requires": {"max_h": 7},
        },
        {
            "id": "bn.welters.h12",
            "description": "h=12：r = 6，ρ⁻ = −(10)(8)/8 = −10",
            "paper_location": "welters failure on standard nikulin surfaces",
            "compute": lambda config: _welters_fields(12),
            "expected": (6, -10, True),
            "requires": {"max_h": 12},
        },
        {
            "id": "bn.welters.closed_form",
            "description": "h ≤ 10⁴ 时 ρ⁻(h, ⌊h/2⌋) 等于 −(h−1)(h−7)/8（奇）或 −(h−2)(h−4)/8（偶）",
            "paper_location": "welters failure on standard nikulin surfaces",
            "compute": _closed_form_violations,
            "expected": 0,
        },
        {
            "id": "bn.welters.boundary",
            "description": "失效区间 {h > 7 或 h = 6} 恰为一般 Nikulin 曲面区间 {h ≤ 7, h ≠ 6} 的补集",
            "paper_location": "agreement with the nikulin-surface genus bound for prym curves",
            "compute": _boundary_violations,
            "expected": 0,
        },
        {
            "id": "bn.welters.r_crosscheck",
            "description": "h = 2..200 时 ⌊h/2⌋ 与格一侧的 χ(A)−1 一致",
            "paper_location": "welters failure on standard nikulin surfaces",
            "compute": _r_crosscheck_violations,
            "expected": 0,
        },
        {
            "id": "bn.cover.h7",
            "description": "h=7 的非标准型覆盖数据：(2, 2, 4) 与 (1, 6, 4)",
            "paper_location": "nonstandard cover numerics",
            "compute": lambda config: _cover_tuples(7),
            "expected": [(2, 2, 4), (1, 6, 4)],
            "requires": {"max_h": 7},
        },
        {
            "id": "bn.cover.h9",
            "description": "h=9 的非标准型覆盖数据：两个 (2, 4, 5)",
            "paper_location": "nonstandard cover numerics",
            "compute": lambda config: _cover_tuples(9),
            "expected": [(2, 4, 5), (2, 4, 5)],
            "requires": {"max_h": 9},
        },
        {
            "id": "bn.cover.h11",
            "description": "h=11 的非标准型覆盖数据：(3, 2, 6) 与 (2, 6, 6)",
            "paper_location": "nonstandard cover numerics",
            "compute": lambda config: _cover_tuples(11),
            "expected": [(3, 2, 6), (2, 6, 6)],
            "requires": {"max_h": 11},
        },
        {
            "id": "bn.cover.hurwitz_sweep",
            "description": "奇数 h ≤ 199 的全部非标准型覆盖满足 2g−1+b/2 = (h+1)/2",
            "paper_location": "hurwitz genus",
            "compute": _cover_hurwitz_violations,
            "expected": 0,
        },
        {
            "id": "bn.cover.realizations",
            "description": "g = 1..20、n = 1, 2, 3 的 ℛ_{g,2n} 都能在非标准型 Nikulin 曲面上实现",
            "paper_location": "ramified cover bookkeeping",
            "compute": _realizations,
            "expected": 60,
        },
        {
            "id": "bn.special.sweep",
            "description": "奇数 g ≤ 29 中不存在 r ≥ 1 使 −r ≤ ρ̃ < 0 的亏格",
            "paper_location": "rho-plus and the kernel/window conditions",
            "compute": lambda config: brill_noether_special_sweep(29),
            "expected": [3, 5, 9, 13, 15, 19, 21, 25, 27],
        },
        {
            "id": "bn.regime.partition",
            "description": "空集、核、单射三个区间划分全部 (g, r)，核区间恰为窗口条件",
            "paper_location": "rho-plus and the kernel/window conditions",
            "compute": _regime_violations,
            "expected": 0,
        },
    ]
