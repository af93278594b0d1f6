"""
F₂ 上的辛空间

用定宽位串表示 F₂ 向量（第 i 位是第 i 个基向量的系数），
用逐行位掩码表示交错 Gram 矩阵，对应二阶挠点群上的 Weil 配对。
"""

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, List, Sequence, Tuple

from nikulin_check.config import VECTOR_BITS_CAP
from nikulin_check.errors import InvalidParameterError, NoSymplecticBasisError

logger = logging.getLogger('nikulin_check.f2.symplectic')


def _parity(bits: int) -> int:
    return bits.bit_count() & 1


@dataclass(frozen=True)
class F2Vector:
    """F₂ 向量：dim 位的系数串"""

    dim: int
    bits: int

    def __post_init__(self):
        if self.dim < 0 or self.dim % 2 or self.dim > VECTOR_BITS_CAP:
            raise InvalidParameterError(f"向量长度必须为不超过 {VECTOR_BITS_CAP} 的偶数，当前为 {self.dim}")
        if not 0 <= self.bits < (1 << self.dim):
            raise InvalidParameterError(f"系数位串超出 {self.dim} 位: {self.bits:#x}")

    @classmethod
    def zero(cls, dim):
        return cls(dim, 0)

    @classmethod
    def unit(cls, dim, index):
        if not 0 <= index < dim:
            raise InvalidParameterError(f"基向量下标越界: {index}")
        return cls(dim, 1 << index)

    @classmethod
    def from_coords(cls, coords: Sequence[int]):
        """由 0/1 序列构造（coords[i] 为第 i 个坐标）"""
        bits = 0
        for i, c in enumerate(coords):
            if c not in (0, 1):
                raise InvalidParameterError(f"F₂ 坐标只能为 0 或 1: {c!r}")
            bits |= c << i
        return cls(len(coords), bits)

    @property
    def coords(self) -> Tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(self.dim))

    def is_zero(self) -> bool:
        return self.bits == 0

    def __add__(self, other: 'F2Vector') -> 'F2Vector':
        if not isinstance(other, F2Vector):
            return NotImplemented
        if other.dim != self.dim:
            raise InvalidParameterError(f"维数不一致: {self.dim} 与 {other.dim}")
        return F2Vector(self.dim, self.bits ^ other.bits)

    def to_hex(self) -> str:
        width = max(1, (self.dim + 3) // 4)
        return f"{self.bits:0{width}x}"


@dataclass(frozen=True)
class SymplecticSpace:
    """F₂ 上的交错空间

    rows[i] 是 Gram 矩阵第 i 行的位掩码。构造时检查交错性（对称且对角为 0），
    非退化性由 is_nondegenerate 给出，辛基算法在退化时报错。
    """

    g: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        dim = 2 * self.g
        if self.g < 0 or dim > VECTOR_BITS_CAP:
            raise InvalidParameterError(f"半维数越界: g={self.g}")
        if len(self.rows) != dim:
            raise InvalidParameterError(f"Gram 矩阵应有 {dim} 行，实际 {len(self.rows)} 行")
        for i, row in enumerate(self.rows):
            if not 0 <= row < (1 << dim):
                raise InvalidParameterError(f"Gram 第 {i} 行超出 {dim} 位")
            if (row >> i) & 1:
                raise InvalidParameterError(f"Gram 不是交错的: 第 {i} 个对角元为 1")
            for j in range(i + 1, dim):
                if ((row >> j) & 1) != ((self.rows[j] >> i) & 1):
                    raise InvalidParameterError(f"Gram 不对称: ({i}, {j})")

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]):
        """由 0/1 方阵构造（支持 list 或 numpy 数组）"""
        size = len(matrix)
        if size % 2:
            raise InvalidParameterError(f"交错空间的维数必须为偶数，当前为 {size}")
        rows = []
        for i, row in enumerate(matrix):
            if len(row) != size:
                raise InvalidParameterError(f"Gram 第 {i} 行长度为 {len(row)}，应为 {size}")
            mask = 0
            for j, entry in enumerate(row):
                entry = int(entry) % 2
                mask |= entry << j
            rows.append(mask)
        return cls(size // 2, tuple(rows))

    @property
    def dim(self) -> int:
        return 2 * self.g

    def matrix(self) -> List[List[int]]:
        return [[(row >> j) & 1 for j in range(self.dim)] for row in self.rows]

    @cached_property
    def upper_rows(self) -> Tuple[int, ...]:
        """第 i 行只保留 j > i 的部分，二次型求值时使用"""
        return tuple(row & ~((1 << (i + 1)) - 1) for i, row in enumerate(self.rows))

    @cached_property
    def rank(self) -> int:
        return f2_rank(self.rows)

    @property
    def is_nondegenerate(self) -> bool:
        return self.rank == self.dim

    def pair_bits(self, x: int, y: int) -> int:
        image = 0
        i = 0
        while x:
            if x & 1:
                image ^= self.rows[i]
            x >>= 1
            i += 1
        return _parity(image & y)

    def vector(self, bits: int) -> F2Vector:
        return F2Vector(self.dim, bits)

    def vectors(self) -> Iterable[F2Vector]:
        """按位串大小顺序列出全部向量"""
        for bits in range(1 << self.dim):
            yield F2Vector(self.dim, bits)

    def standard_vectors(self) -> List[F2Vector]:
        return [F2Vector.unit(self.dim, i) for i in range(self.dim)]


def f2_rank(rows: Iterable[int]) -> int:
    """位掩码行向量组在 F₂ 上的秩"""
    pivots = {}
    rank = 0
    for row in rows:
        row = _reduce(row, pivots)
        if row:
            pivots[row.bit_length() - 1] = row
            rank += 1
    return rank


def _reduce(row: int, pivots) -> int:
    while row:
        top = row.bit_length() - 1
        pivot = pivots.get(top)
        if pivot is None:
            break
        row ^= pivot
    return row


def standard_symplectic(g: int) -> SymplecticSpace:
    """标准辛空间：基 e₁..e_g, f₁..f_g，⟨eᵢ,fᵢ⟩ = 1，其余为 0

    Args:
        g: 半维数，1 ≤ g ≤ 32

    Returns:
        SymplecticSpace: 分块双曲 Gram 的空间
    """
    if not isinstance(g, int) or g < 1 or 2 * g > VECTOR_BITS_CAP:
        raise InvalidParameterError(f"g 必须在 1..{VECTOR_BITS_CAP // 2} 之间，当前为 {g}")
    rows = [0] * (2 * g)
    for i in range(g):
        rows[i] = 1 << (g + i)
        rows[g + i] = 1 << i
    return SymplecticSpace(g, tuple(rows))


def _check_vector(space: SymplecticSpace, x: F2Vector):
    if not isinstance(x, F2Vector) or x.dim != space.dim:
        got = getattr(x, 'dim', type(x).__name__)
        raise InvalidParameterError(f"向量维数 {got} 与空间维数 {space.dim} 不一致")


def pair(space: SymplecticSpace, x: F2Vector, y: F2Vector) -> int:
    """Weil 配对 xᵀ·gram·y（F₂ 值）"""
    _check_vector(space, x)
    _check_vector(space, y)
    return space.pair_bits(x.bits, y.bits)


@lru_cache(maxsize=256)
def symplectic_basis(space: SymplecticSpace) -> Tuple[F2Vector, ...]:
    """求辛基 (e₁..e_g, f₁..f_g)

    每一步取下标最小的非零候选向量 a，再取下标最小、与 a 配对为 1 的候选 b，
    然后把其余候选投影到 ⟨a, b⟩ 的正交补上，递归进行。

    Args:
        space: 交错空间

    Returns:
        tuple: 2g 个 F2Vector，满足 ⟨eᵢ,fⱼ⟩ = δᵢⱼ、⟨eᵢ,eⱼ⟩ = ⟨fᵢ,fⱼ⟩ = 0

    Raises:
        NoSymplecticBasisError: Gram 退化
    """
    candidates = [1 << i for i in range(space.dim)]
    es: List[int] = []
    fs: List[int] = []
    while True:
        candidates = [c for c in candidates if c]
        if not candidates:
            break
        a = candidates[0]
        partner = None
        for idx in range(1, len(candidates)):
            if space.pair_bits(a, candidates[idx]):
                partner = idx
                break
        if partner is None:
            raise NoSymplecticBasisError(f"Gram 退化（秩 {space.rank} < {space.dim}），不存在辛基")
        b = candidates[partner]
        es.append(a)
        fs.append(b)
        rest = candidates[1:partner] + candidates[partner + 1:]
        candidates = [
            c ^ (a if space.pair_bits(c, b) else 0) ^ (b if space.pair_bits(c, a) else 0)
            for c in rest
        ]
    logger.debug("求得 g=%d 空间的辛基", space.g)
    return tuple(space.vector(v) for v in es + fs)


def is_symplectic_basis(space: SymplecticSpace, basis: Sequence[F2Vector]) -> bool:
    """检查 basis 是否满足 ⟨eᵢ,fⱼ⟩ = δᵢⱼ 等辛关系"""
    if len(basis) != space.dim:
        return False
    g = space.g
    for i in range(space.dim):
        for j in range(i + 1, space.dim):
            expected = 1 if (i < g and j == i + g) else 0
            if pair(space, basis[i], basis[j]) != expected:
                return False
    return True


def random_bits(rng, dim: int) -> int:
    """用 numpy 随机数发生器生成 dim 位的随机位串"""
    bits = 0
    for i, c in enumerate(rng.integers(0, 2, size=dim)):
        bits |= int(c) << i
    return bits


def random_symplectic_basis(space: SymplecticSpace, rng, transvections=None) -> Tuple[F2Vector, ...]:
    """随机辛基：对 symplectic_basis 的结果作用若干随机辛平延 x ↦ x + ⟨x,k⟩k

    Args:
        space: 非退化交错空间
        rng: numpy.random.Generator
        transvections: 平延次数（默认 4·dim）

    Returns:
        tuple: 新的辛基
    """
    basis = [v.bits for v in symplectic_basis(space)]
    count = transvections if transvections is not None else 4 * space.dim
    for _ in range(count):
        k = random_bits(rng, space.dim)
        if not k:
            continue
        basis = [v ^ (k if space.pair_bits(v, k) else 0) for v in basis]
    result = tuple(space.vector(v) for v in basis)
    if not is_symplectic_basis(space, result):
        raise NoSymplecticBasisError("随机平延后的基不再是辛基")
    return result


@dataclass(frozen=True)
class Subspace:
    """环境辛空间中由线性无关向量张成的子空间"""

    basis: Tuple[F2Vector, ...]
    ambient: SymplecticSpace

    def __post_init__(self):
        for v in self.basis:
            _check_vector(self.ambient, v)
        if f2_rank(v.bits for v in self.basis) != len(self.basis):
            raise InvalidParameterError("子空间的基向量线性相关")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def lift(self, local: F2Vector) -> F2Vector:
        """子空间坐标 → 环境空间向量"""
        if local.dim != self.dim:
            raise InvalidParameterError(f"子空间坐标维数应为 {self.dim}，当前为 {local.dim}")
        bits = 0
        for i, v in enumerate(self.basis):
            if (local.bits >> i) & 1:
                bits ^= v.bits
        return self.ambient.vector(bits)

    def restricted_space(self) -> SymplecticSpace:
        """配对限制到子空间后得到的交错空间（在本子空间的基下）"""
        if self.dim % 2:
            raise InvalidParameterError(f"奇数维子空间 ({self.dim}) 上的交错形式必然退化")
        rows = []
        for i, u in enumerate(self.basis):
            mask = 0
            for j, v in enumerate(self.basis):
                if i != j and self.ambient.pair_bits(u.bits, v.bits):
                    mask |= 1 << j
            rows.append(mask)
        return SymplecticSpace(self.dim // 2, tuple(rows))


def orthogonal_complement(space: SymplecticSpace, eta: F2Vector, eps: F2Vector) -> Subspace:
    """双曲平面 ⟨eta, eps⟩ 的正交补

    标准基向量 b 投影为 b + ⟨b,eps⟩eta + ⟨b,eta⟩eps，按下标顺序取线性无关者。
    要求 ⟨eta, eps⟩ = 1。
    """
    pivots = {}
    chosen = []
    for b in range(space.dim):
        unit = 1 << b
        projected = unit
        if space.pair_bits(unit, eps.bits):
            projected ^= eta.bits
        if space.pair_bits(unit, eta.bits):
            projected ^= eps.bits
        reduced = _reduce(projected, pivots)
        if reduced:
            pivots[reduced.bit_length() - 1] = reduced
            chosen.append(space.vector(projected))
    return Subspace(tuple(chosen), space)
