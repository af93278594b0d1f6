"""
数值公式包

Brill-Noether / Prym-Brill-Noether 数、覆盖亏格与 Nikulin 曲面上的算术。
"""

from nikulin_check.numerology.brill_noether import (BNInput, PrymRecord, bertram_nonempty,
                                                    bn_number, brill_noether_special_sweep,
                                                    expectation_regime, expected_gonality,
                                                    expected_kernel_dimension,
                                                    gonality_bound_check, prym_numbers, rho,
                                                    schwarz_forced_empty,
                                                    spin_locus_expected_dim, welters_dimension)
from nikulin_check.numerology.nikulin_numerics import (CoverNumerics, WeltersFailureRecord,
                                                       cover_numerics_nonstandard,
                                                       hurwitz_cover_genus,
                                                       ramified_cover_realizations,
                                                       standard_nikulin_prym_failure,
                                                       welters_closed_form)

__all__ = [
    'BNInput', 'PrymRecord', 'CoverNumerics', 'WeltersFailureRecord',
    'rho', 'bn_number', 'prym_numbers', 'schwarz_forced_empty', 'bertram_nonempty',
    'expected_gonality', 'gonality_bound_check', 'spin_locus_expected_dim',
    'welters_dimension', 'expectation_regime', 'expected_kernel_dimension',
    'brill_noether_special_sweep', 'hurwitz_cover_genus', 'welters_closed_form',
    'standard_nikulin_prym_failure', 'cover_numerics_nonstandard',
    'ramified_cover_realizations',
]
