"""
整格相关的断言

Nikulin 格、E8(−2)、Λ_h 的判别群，粘合条件的奇偶二分，
非标准型粘合类的亏格与分歧点个数，以及 Pic(S̃) 模型。
"""

from nikulin_check.lattice import (count_nonnegative_short, discriminant_group, e8_minus2,
                                   glue_check, inner, is_negative_definite, lambda_h,
                                   nikulin_lattice, nonstandard_classes, nonstandard_pic_tilde,
                                   overlattice_gram, pic_tilde_class, rational_class,
                                   short_vectors)
from nikulin_check.lattice.nikulin import NODE_LABELS, eighth_node

RAW_RM_NOTE = ("“R1·M = 2, R2·M = 6” 的写法实为 Ri·(N1+…+N8) = Ri·2M；"
               "按 M = ½ΣNi 直接计算 Ri·M 得 1 和 3，见 lattice.branch.h3mod4")


def _n8_products(config):
    L = nikulin_lattice()
    n8 = eighth_node(L)
    return inner(L, n8, n8), [inner(L, n8, L.basis_class(label)) for label in NODE_LABELS]


def _e8_negative(config):
    L = e8_minus2()
    return is_negative_definite(L), count_nonnegative_short(L, 2)


def _lambda_disc_violations(config):
    limit = min(config.max_h, 20)
    return sum(
        1 for h in range(2, limit + 1)
        if discriminant_group(lambda_h(h)).group_order != 128 * (h - 1)
    )


def _lambda_even_violations(config):
    return sum(1 for h in range(2, config.max_h + 1) if not lambda_h(h).is_even)


def _two_node(L):
    return rational_class(L, {'H': 1, 'N1': -1, 'N2': -1}, 2)


def _four_node(L):
    return rational_class(L, {'H': 1, 'N1': -1, 'N2': -1, 'N3': -1, 'N4': -1}, 2)


def _glue_parity_violations(config):
    """返回 (两节点类违反数, 四节点类违反数)"""
    two = four = 0
    for h in range(2, config.max_h + 1):
        L = lambda_h(h)
        if glue_check(L, _two_node(L)) != (h % 4 == 3):
            two += 1
        if glue_check(L, _four_node(L)) != (h % 4 == 1):
            four += 1
    return two, four


def _class_triples(h):
    record = nonstandard_classes(h)
    return [(c.norm, c.genus, c.branch) for c in (record.R1, record.R2)]


def _per_class(h, field):
    record = nonstandard_classes(h)
    return getattr(record.R1, field), getattr(record.R2, field)


def _genus_formula_violations(config):
    violations = 0
    for h in range(3, 200, 2):
        record = nonstandard_classes(h)
        if h % 4 == 3:
            expected = ((h + 1) // 4, (h - 3) // 4)
        else:
            expected = ((h - 1) // 4, (h - 1) // 4)
        for cls, genus in zip((record.R1, record.R2), expected):
            if cls.norm >= 0 and cls.genus != genus:
                violations += 1
    return violations


def _hurwitz_violations(config):
    violations = 0
    for h in range(3, 200, 2):
        record = nonstandard_classes(h)
        for cls in (record.R1, record.R2):
            if 2 * (2 * cls.genus - 1) + cls.branch != h + 1:
                violations += 1
    return violations


def _pic_tilde_triple(h):
    record = pic_tilde_class(h)
    return record.a_norm, record.chi, record.r


def _pic_tilde_parity(config):
    return sum(1 for h in range(2, 201) if pic_tilde_class(h).a_norm % 2)


def _overlattice_drop(h):
    L = lambda_h(h)
    before = discriminant_group(L).group_order
    after = discriminant_group(overlattice_gram(L, nonstandard_classes(h).R1.glue)).group_order
    return before, after


def get_lattice_claims():
    """
    获取整格相关的断言

    Returns:
        list: 断言字典列表
    """
    return [
        {
            "id": "lattice.nikulin.n8",
            "description": "N8 = 2M − ΣNi 满足 N8² = −2，且与 N1..N7 正交",
            "paper_location": "nikulin lattice",
            "compute": _n8_products,
            "expected": (-2, [0] * 7),
        },
        {
            "id": "lattice.nikulin.disc",
            "description": "Nikulin 格的判别群为 (ℤ/2)^6，阶 64",
            "paper_location": "nikulin lattice",
            "compute": lambda config: discriminant_group(nikulin_lattice()).elementary_divisors,
            "expected": (1, 1, 2, 2, 2, 2, 2, 2),
        },
        {
            "id": "lattice.e8m2.disc",
            "description": "E8(−2) 的判别群阶为 256",
            "paper_location": "standard pic lattice of the cover",
            "compute": lambda config: discriminant_group(e8_minus2()).group_order,
            "expected": 256,
        },
        {
            "id": "lattice.e8m2.negdef",
            "description": "E8(−2) 负定：主子式符号交替，且高度 ≤ 2 的非零向量自交数全为负",
            "paper_location": "standard pic lattice of the cover",
            "compute": _e8_negative,
            "expected": (True, 0),
        },
        {
            "id": "lattice.e8m2.roots",
            "description": "E8(−2) 中自交数为 −4 的向量有 240 个",
            "paper_location": "standard pic lattice of the cover",
            "compute": lambda config: short_vectors(e8_minus2(), -4).count,
            "expected": 240,
        },
        {
            "id": "lattice.e8m2.norm8",
            "description": "E8(−2) 中自交数为 −8 的向量有 2160 个",
            "paper_location": "standard pic lattice of the cover",
            "compute": lambda config: short_vectors(e8_minus2(), -8).count,
            "expected": 2160,
        },
        {
            "id": "lattice.e8m2.norm2",
            "description": "E8(−2) 中没有自交数为 −2 的向量",
            "paper_location": "standard pic lattice of the cover",
            "compute": lambda config: short_vectors(e8_minus2(), -2).count,
            "expected": 0,
        },
        {
            "id": "lattice.lambda.disc.h5",
            "description": "Λ_5 的判别群阶为 128·4 = 512",
            "paper_location": "nikulin surface polarization lattice",
            "compute": lambda config: discriminant_group(lambda_h(5)).group_order,
            "expected": 512,
            "requires": {"max_h": 5},
        },
        {
            "id": "lattice.lambda.disc.sweep",
            "description": "h ≤ 20 时 Λ_h 的判别群阶为 128(h−1)",
            "paper_location": "nikulin surface polarization lattice",
            "compute": _lambda_disc_violations,
            "expected": 0,
            "requires": {"max_h": 20},
        },
        {
            "id": "lattice.lambda.even",
            "description": "Λ_h 对 h = 2..max_h 都是偶格",
            "paper_location": "nikulin surface polarization lattice",
            "compute": _lambda_even_violations,
            "expected": 0,
        },
        {
            "id": "lattice.glue.h7",
            "description": "(H−N1−N2)/2 在 Λ_7 中满足粘合条件",
            "paper_location": "non-standard glue classes",
            "compute": lambda config: glue_check(lambda_h(7), _two_node(lambda_h(7))),
            "expected": True,
            "requires": {"max_h": 7},
        },
        {
            "id": "lattice.glue.h9",
            "description": "(H−N1−N2)/2 在 Λ_9 中自交数为 3，不满足粘合条件",
            "paper_location": "non-standard glue classes",
            "compute": lambda config: glue_check(lambda_h(9), _two_node(lambda_h(9))),
            "expected": False,
            "requires": {"max_h": 9},
        },
        {
            "id": "lattice.glue.single_node",
            "description": "(H−N1)/2 与 M 的配对为 1/2，不满足粘合条件",
            "paper_location": "non-standard glue classes",
            "compute": lambda config: glue_check(
                lambda_h(7), rational_class(lambda_h(7), {'H': 1, 'N1': -1}, 2)),
            "expected": False,
        },
        {
            "id": "lattice.glue.parity",
            "description": "两节点类可粘合当且仅当 h ≡ 3 (mod 4)，四节点类当且仅当 h ≡ 1 (mod 4)",
            "paper_location": "non-standard glue classes",
            "compute": _glue_parity_violations,
            "expected": (0, 0),
        },
        {
            "id": "lattice.nonstandard.h7",
            "description": "h=7：R1 为 (自交数 2, 亏格 2, 分歧点 2)，R2 为 (0, 1, 6)",
            "paper_location": "non-standard glue classes",
            "compute": lambda config: _class_triples(7),
            "expected": [(2, 2, 2), (0, 1, 6)],
            "requires": {"max_h": 7},
        },
        {
            "id": "lattice.nonstandard.h9",
            "description": "h=9：R1、R2 均为 (2, 2, 4)",
            "paper_location": "non-standard glue classes",
            "compute": lambda config: _class_triples(9),
            "expected": [(2, 2, 4), (2, 2, 4)],
            "requires": {"max_h": 9},
        },
        {
            "id": "lattice.nonstandard.genus_sweep",
            "description": "奇数 h ≤ 199 时 R1、R2 的亏格符合 (h+1)/4、(h−3)/4、(h−1)/4",
            "paper_location": "non-standard glue classes",
            "compute": _genus_formula_violations,
            "expected": 0,
        },
        {
            "id": "lattice.branch.h3mod4",
            "description": "h=7：分歧点个数 Ri·(N1+…+N8) 为 2 和 6",
            "paper_location": "branch count relations",
            "compute": lambda config: _per_class(7, "branch"),
            "expected": (2, 6),
        },
        {
            "id": "lattice.rawRM.h3mod4",
            "description": "h=7：直接计算 Ri·M 得 1 和 3（仅供对照）",
            "paper_location": "branch count relations",
            "compute": lambda config: _per_class(7, "raw_m"),
            "expected": (1, 3),
            "note": RAW_RM_NOTE,
        },
        {
            "id": "lattice.branch.h1mod4",
            "description": "h=9：两个类的分歧点个数都是 4",
            "paper_location": "branch count relations",
            "compute": lambda config: _per_class(9, "branch"),
            "expected": (4, 4),
        },
        {
            "id": "lattice.hurwitz.sweep",
            "description": "奇数 h ≤ 199 时每个 Ri 满足 2g−1+b/2 = (h+1)/2",
            "paper_location": "hurwitz genus",
            "compute": _hurwitz_violations,
            "expected": 0,
        },
        {
            "id": "lattice.overlattice.h7",
            "description": "Λ_7 加入 R1 后判别群阶由 768 降为 192",
            "paper_location": "non-standard glue classes",
            "compute": lambda config: _overlattice_drop(7),
            "expected": (768, 192),
        },
        {
            "id": "lattice.pictilde.h2",
            "description": "h=2：A² = 0，χ(A) = 2，r = 1",
            "paper_location": "standard pic lattice of the cover",
            "compute": lambda config: _pic_tilde_triple(2),
            "expected": (0, 2, 1),
        },
        {
            "id": "lattice.pictilde.h7",
            "description": "h=7：v² = −8，A² = 4，χ(A) = 4，r = 3",
            "paper_location": "standard pic lattice of the cover",
            "compute": lambda config: _pic_tilde_triple(7),
            "expected": (4, 4, 3),
        },
        {
            "id": "lattice.pictilde.h8",
            "description": "h=8：v² = −4，A² = 6，χ(A) = 5，r = 4",
            "paper_location": "standard pic lattice of the cover",
            "compute": lambda config: _pic_tilde_triple(8),
            "expected": (6, 5, 4),
        },
        {
            "id": "lattice.pictilde.parity",
            "description": "h = 2..200 时 A² 都是偶数",
            "paper_location": "standard pic lattice of the cover",
            "compute": _pic_tilde_parity,
            "expected": 0,
        },
        {
            "id": "lattice.pictilde.disc.h7",
            "description": "h=7：ℤH̃ ⊕ E8(−2) 的判别群阶 256·24 经 (H̃+v)/2 扩张降为 256·6",
            "paper_location": "standard pic lattice of the cover",
            "compute": lambda config: (pic_tilde_class(7).disc_before, pic_tilde_class(7).disc_after),
            "expected": (6144, 1536),
        },
        {
            "id": "lattice.nonstandard_pictilde.h7",
            "description": "h=7：非标准型覆盖上 R̃ 的亏格为 (h+1)/2 = 4，判别群阶 256·6",
            "paper_location": "pic lattice of the cover, non-standard type",
            "compute": lambda config: (nonstandard_pic_tilde(7).genus, nonstandard_pic_tilde(7).disc_order),
            "expected": (4, 1536),
        },
    ]
