"""
Nikulin 格与 K3 Picard 格模型

构造 Nikulin 格 𝐍（基 N1..N7, M）、Λ_h = ℤH ⊕ 𝐍、E8(−2)，
以及非标准型粘合类 R1/R2 和双覆盖一侧的 Pic(S̃) 模型。
"""

import logging
from functools import lru_cache
from typing import NamedTuple, Tuple

from nikulin_check.errors import (InternalConsistencyError, InvalidParameterError,
                                  NonStandardParityError, NotACurveClassError)
from nikulin_check.lattice.integer_lattice import (IntegerLattice, RationalClass, genus_and_euler,
                                                   glue_check, inner, lattice_from_gram,
                                                   overlattice_gram, rational_class)
from nikulin_check.lattice.short_vectors import short_vectors
from nikulin_check.lattice.smith import discriminant_group

logger = logging.getLogger('nikulin_check.lattice.nikulin')

NODE_LABELS = tuple(f"N{i}" for i in range(1, 8))

# E8 Dynkin 图（Bourbaki 编号）
E8_EDGES = ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4))


class NonStandardClass(NamedTuple):
    name: str
    glue: RationalClass
    norm: int
    genus: int
    branch: int
    raw_m: int
    glue_ok: bool


class NonStandardRecord(NamedTuple):
    h: int
    case: str
    R1: NonStandardClass
    R2: NonStandardClass


class PicTildeRecord(NamedTuple):
    h: int
    h_tilde_norm: int
    required_v_norm: int
    v: Tuple[int, ...]
    a_norm: int
    chi: int
    r: int
    disc_before: int
    disc_after: int


class NonStandardPicTilde(NamedTuple):
    h: int
    norm: int
    genus: int
    disc_order: int
    lattice: IntegerLattice


def _check_h(h, minimum=2):
    if isinstance(h, bool) or not isinstance(h, int) or h < minimum:
        raise InvalidParameterError(f"h 必须为 ≥ {minimum} 的整数，当前为 {h!r}")


def _nikulin_gram():
    gram = [[0] * 8 for _ in range(8)]
    for i in range(7):
        gram[i][i] = -2
        gram[i][7] = gram[7][i] = -1
    gram[7][7] = -4
    return gram


@lru_cache(maxsize=1)
def nikulin_lattice() -> IntegerLattice:
    """Nikulin 格 𝐍，基为 (N1..N7, M)，M = ½(N1 + … + N8)

    构造时自检导出类 N8 := 2M − ΣNi 满足 N8² = −2、N8·Nj = 0。
    """
    L = lattice_from_gram(_nikulin_gram(), NODE_LABELS + ('M',))
    n8 = eighth_node(L)
    if inner(L, n8, n8) != -2:
        raise InternalConsistencyError("N8² ≠ −2")
    for label in NODE_LABELS:
        if inner(L, n8, L.basis_class(label)) != 0:
            raise InternalConsistencyError(f"N8·{label} ≠ 0")
    return L


def eighth_node(L: IntegerLattice) -> RationalClass:
    """N8 = 2M − N1 − … − N7"""
    coefficients = {label: -1 for label in NODE_LABELS}
    coefficients['M'] = 2
    return rational_class(L, coefficients)


def branch_divisor(L: IntegerLattice) -> RationalClass:
    """N1 + … + N8 = 2M"""
    return rational_class(L, {'M': 2})


@lru_cache(maxsize=256)
def lambda_h(h: int) -> IntegerLattice:
    """Λ_h = ℤH ⊕ 𝐍，H² = 2(h − 1)

    Raises:
        InvalidParameterError: h < 2
    """
    _check_h(h)
    nikulin = _nikulin_gram()
    gram = [[2 * (h - 1)] + [0] * 8]
    gram += [[0] + row for row in nikulin]
    return lattice_from_gram(gram, ('H',) + NODE_LABELS + ('M',))


def e8_cartan():
    cartan = [[2 if i == j else 0 for j in range(8)] for i in range(8)]
    for a, b in E8_EDGES:
        cartan[a - 1][b - 1] = cartan[b - 1][a - 1] = -1
    return cartan


@lru_cache(maxsize=1)
def e8_minus2() -> IntegerLattice:
    """E8(−2)：Gram = −2 × E8 Cartan 矩阵"""
    gram = [[-2 * x for x in row] for row in e8_cartan()]
    return lattice_from_gram(gram, tuple(f"E{i}" for i in range(1, 9)))


def _classify(L: IntegerLattice, name: str, glue: RationalClass) -> NonStandardClass:
    ok = glue_check(L, glue)
    norm = inner(L, glue, glue)
    if not ok or norm.denominator != 1:
        raise InternalConsistencyError(f"{name} 不满足粘合条件")
    genus, _ = genus_and_euler(L, glue)
    m = L.basis_class('M')
    branch = inner(L, glue, branch_divisor(L))
    raw_m = inner(L, glue, m)
    return NonStandardClass(name, glue, int(norm), genus, int(branch), int(raw_m), ok)


@lru_cache(maxsize=256)
def nonstandard_classes(h: int) -> NonStandardRecord:
    """非标准型 Nikulin 曲面上的两个粘合类 R1、R2

    h ≡ 3 (mod 4)：R1 = (H − N1 − N2)/2，R2 = (H − N3 − … − N8)/2；
    h ≡ 1 (mod 4)：R1 = (H − N1 − … − N4)/2，R2 = (H − N5 − … − N8)/2。
    分歧点个数取 Ri·(N1 + … + N8)，raw_m 记录 Ri·M 以便对照。

    Args:
        h: 奇数亏格 ≥ 3

    Returns:
        NonStandardRecord: 两个类的自交数、亏格、分歧点个数

    Raises:
        NonStandardParityError: h 为偶数
    """
    _check_h(h, 3)
    if h % 2 == 0:
        raise NonStandardParityError(f"非标准型要求 h 为奇数，当前 h={h}")

    L = lambda_h(h)
    if h % 4 == 3:
        case = '3mod4'
        r1 = rational_class(L, {'H': 1, 'N1': -1, 'N2': -1}, 2)
        r2 = rational_class(L, {'H': 1, 'N1': 1, 'N2': 1, 'M': -2}, 2)
    else:
        case = '1mod4'
        r1 = rational_class(L, {'H': 1, 'N1': -1, 'N2': -1, 'N3': -1, 'N4': -1}, 2)
        r2 = rational_class(L, {'H': 1, 'N1': 1, 'N2': 1, 'N3': 1, 'N4': 1, 'M': -2}, 2)

    record = NonStandardRecord(h, case, _classify(L, 'R1', r1), _classify(L, 'R2', r2))
    logger.debug("h=%d (%s): R1 亏格 %d，R2 亏格 %d", h, case, record.R1.genus, record.R2.genus)
    return record


@lru_cache(maxsize=256)
def pic_tilde_lattice(h: int) -> IntegerLattice:
    """ℤH̃ ⊕ E8(−2)，H̃² = 4h − 4"""
    _check_h(h)
    e8 = e8_minus2().gram
    gram = [[4 * h - 4] + [0] * 8]
    gram += [[0] + list(row) for row in e8]
    return lattice_from_gram(gram, ('Ht',) + e8_minus2().labels)


def required_v_norm(h: int) -> int:
    return -4 if h % 2 == 0 else -8


@lru_cache(maxsize=256)
def pic_tilde_class(h: int) -> PicTildeRecord:
    """标准型 Nikulin 曲面双覆盖上的类 A = (H̃ + v)/2

    v 取 E8(−2) 中自交数为 −4（h 偶）或 −8（h 奇）的第一个向量（枚举序）。
    要求 A² 为偶整数，χ(A) = 2 + A²/2，r = χ(A) − 1 = ⌊h/2⌋；
    同时验证指数 2 扩张把判别群的阶从 256(4h−4) 降为 256(h−1)。

    Raises:
        InvalidParameterError: h < 2
        InternalConsistencyError: A² 不是偶整数或判别群阶不符（程序缺陷）
    """
    _check_h(h)
    v_norm = required_v_norm(h)
    found = short_vectors(e8_minus2(), v_norm, collect=True)
    if not found.vectors:
        raise InternalConsistencyError(f"E8(−2) 中没有自交数为 {v_norm} 的向量")
    v = found.vectors[0]

    L = pic_tilde_lattice(h)
    A = RationalClass.of((1,) + v, 2)
    if not glue_check(L, A):
        raise InternalConsistencyError(f"h={h}: (H̃+v)/2 不满足粘合条件")
    a_norm = inner(L, A, A)
    try:
        _, chi = genus_and_euler(L, A)
    except NotACurveClassError:
        raise InternalConsistencyError(f"h={h}: A² = {a_norm} 不是偶整数")

    disc_before = discriminant_group(L).group_order
    disc_after = discriminant_group(overlattice_gram(L, A)).group_order
    if disc_before != 4 * disc_after:
        raise InternalConsistencyError(f"h={h}: 扩张后判别群阶 {disc_after} ≠ {disc_before}/4")

    return PicTildeRecord(
        h=h,
        h_tilde_norm=4 * h - 4,
        required_v_norm=v_norm,
        v=v,
        a_norm=int(a_norm),
        chi=chi,
        r=chi - 1,
        disc_before=disc_before,
        disc_after=disc_after,
    )


@lru_cache(maxsize=256)
def nonstandard_pic_tilde(h: int) -> NonStandardPicTilde:
    """非标准型时双覆盖上的 ℤR̃ ⊕ E8(−2)，R̃² = h − 1，亏格 (h+1)/2

    Raises:
        NonStandardParityError: h 为偶数
    """
    _check_h(h, 3)
    if h % 2 == 0:
        raise NonStandardParityError(f"非标准型要求 h 为奇数，当前 h={h}")
    e8 = e8_minus2()
    gram = [[h - 1] + [0] * 8]
    gram += [[0] + list(row) for row in e8.gram]
    L = lattice_from_gram(gram, ('Rt',) + e8.labels)
    genus, _ = genus_and_euler(L, L.basis_class('Rt'))
    disc = discriminant_group(L).group_order
    return NonStandardPicTilde(h, h - 1, genus, disc, L)
