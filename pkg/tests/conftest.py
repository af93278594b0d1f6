"""
测试共用的夹具
"""

import numpy as np
import pytest

from nikulin_check.config import RunConfig
from nikulin_check.f2 import standard_symplectic
from nikulin_check.lattice import e8_minus2, lambda_h, nikulin_lattice


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: 耗时较长的穷举或大范围扫描')


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def space3():
    return standard_symplectic(3)


@pytest.fixture
def nikulin():
    return nikulin_lattice()


@pytest.fixture
def e8m2():
    return e8_minus2()


@pytest.fixture
def lambda7():
    return lambda_h(7)


@pytest.fixture
def default_config(monkeypatch):
    for name in ('NIKULIN_MAX_GENUS', 'NIKULIN_MAX_H', 'NIKULIN_WORKERS', 'NIKULIN_CHECK_LOG_DIR'):
        monkeypatch.delenv(name, raising=False)
    return RunConfig.from_env()
