"""
整格包

精确整格运算、Smith 标准形、短向量枚举，以及 Nikulin 格和 K3 Picard 格模型。
"""

from nikulin_check.lattice.integer_lattice import (IntegerLattice, RationalClass,
                                                   count_nonnegative_short, genus_and_euler,
                                                   glue_check, inner, is_negative_definite,
                                                   is_positive_definite, lattice_from_gram,
                                                   lattice_summary, overlattice_gram,
                                                   rational_class)
from nikulin_check.lattice.nikulin import (e8_minus2, lambda_h, nikulin_lattice,
                                           nonstandard_classes, nonstandard_pic_tilde,
                                           pic_tilde_class, pic_tilde_lattice)
from nikulin_check.lattice.short_vectors import short_vectors
from nikulin_check.lattice.smith import DiscriminantData, discriminant_group, smith_normal_form

__all__ = [
    'IntegerLattice', 'RationalClass', 'DiscriminantData',
    'lattice_from_gram', 'rational_class', 'inner', 'genus_and_euler', 'glue_check',
    'overlattice_gram', 'is_negative_definite', 'is_positive_definite',
    'count_nonnegative_short', 'lattice_summary',
    'smith_normal_form', 'discriminant_group', 'short_vectors',
    'nikulin_lattice', 'lambda_h', 'e8_minus2', 'nonstandard_classes',
    'pic_tilde_lattice', 'pic_tilde_class', 'nonstandard_pic_tilde',
]
