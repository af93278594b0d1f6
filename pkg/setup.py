#!/usr/bin/env python
# -*- coding: utf-8 -*-

from setuptools import find_packages, setup

from nikulin_check import __version__

setup(
    name='nikulin-check',
    version=__version__,
    description='F₂ 二次型、Nikulin 格与 Brill-Noether 数值的精确计算与断言校验',
    packages=find_packages(exclude=['tests', 'tests.*']),
    python_requires='>=3.10',
    install_requires=[
        'sympy>=1.12',
        'numpy>=1.24',
    ],
    extras_require={
        'test': ['pytest>=7.0'],
    },
    entry_points={
        'console_scripts': [
            'nikulin-check=nikulin_check.cli:main',
        ],
    },
)
