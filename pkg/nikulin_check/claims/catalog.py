"""
内置断言目录

汇总各模块的断言字典并转换为 Claim 对象，按 id 排序。
"""

import logging
from typing import List

from nikulin_check.claims.f2_claims import get_f2_claims
from nikulin_check.claims.lattice_claims import get_lattice_claims
from nikulin_check.claims.model import Claim
from nikulin_check.claims.numerology_claims import get_numerology_claims
from nikulin_check.errors import InternalConsistencyError

logger = logging.getLogger('nikulin_check.claims.catalog')

# 断言出处登记表：每一项对应一条需要核对的结论，每项至少要有一条断言
LOCATIONS = (
    'brill-noether number',
    'prym-brill-noether number',
    'prym-brill-noether existence predicates',
    'rho-plus and the kernel/window conditions',
    'weil pairing and the polarity identity',
    'arf invariant',
    'theta-characteristic counts',
    'torsor action',
    'spin locus dimension',
    'beauville counting argument',
    'schwarz emptiness',
    'gonality and clifford index',
    'even-genus pencil',
    'ramified cover bookkeeping',
    'nikulin surface polarization lattice',
    'nikulin lattice',
    'non-standard glue classes',
    'standard pic lattice of the cover',
    'pic lattice of the cover, non-standard type',
    'branch count relations',
    'hurwitz genus',
    'welters failure on standard nikulin surfaces',
    'agreement with the nikulin-surface genus bound for prym curves',
    'nonstandard cover numerics',
)


def _to_claim(entry) -> Claim:
    if entry['paper_location'] not in LOCATIONS:
        raise InternalConsistencyError(f"断言 {entry['id']} 的出处未登记: {entry['paper_location']}")
    return Claim(
        id=entry['id'],
        description=entry['description'],
        paper_location=entry['paper_location'],
        compute=entry['compute'],
        expected=entry['expected'],
        note=entry.get('note'),
        requires=entry.get('requires', {}),
    )


def builtin_claims() -> List[Claim]:
    """
    获取全部内置断言

    Returns:
        list: 按 id 排序的 Claim 列表

    Raises:
        InternalConsistencyError: id 重复或出处未登记
    """
    entries = get_f2_claims() + get_lattice_claims() + get_numerology_claims()
    claims = [_to_claim(entry) for entry in entries]

    seen = set()
    for claim in claims:
        if claim.id in seen:
            raise InternalConsistencyError(f"断言 id 重复: {claim.id}")
        seen.add(claim.id)

    return sorted(claims, key=lambda c: c.id)
