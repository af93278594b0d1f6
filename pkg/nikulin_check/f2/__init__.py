"""
F₂ 二次型包

辛空间、极性固定的二次型、Arf 不变量与 θ-特征标计数。
"""

from nikulin_check.f2.quadratic import (QuadraticForm, arf, arf_in_basis, count_forms_by_arf,
                                        enumerate_forms, eval_form, even_odd_difference,
                                        form_from_values, polarity_violations, translate_form,
                                        zero_count)
from nikulin_check.f2.symplectic import (F2Vector, Subspace, SymplecticSpace, pair,
                                         random_symplectic_basis, standard_symplectic,
                                         symplectic_basis)
from nikulin_check.f2.theta import count_special_theta, decompose_and_restrict

__all__ = [
    'F2Vector', 'SymplecticSpace', 'Subspace', 'QuadraticForm',
    'standard_symplectic', 'pair', 'symplectic_basis', 'random_symplectic_basis',
    'eval_form', 'translate_form', 'arf', 'arf_in_basis', 'enumerate_forms',
    'count_forms_by_arf', 'even_odd_difference', 'form_from_values', 'zero_count',
    'polarity_violations', 'count_special_theta', 'decompose_and_restrict',
]
