"""
Shared fixtures: a small class database, the default beta parameters and a
short synthetic zero list.
"""

import os
from fractions import Fraction

import pytest

from arithdata import db_build
from models import ZeroList
from rigor import ball
from testfn import beta_params, unconditional_b

# first spectral parameters of PSL(2, Z), rounded to 15 decimals
LEADING_ZEROS = (
    '9.533695261353557',
    '12.173008324679677',
    '13.779751351890738',
    '14.358509518259994',
)

DATA_DIR = os.environ.get('MAASSCHECK_TEST_DATA', os.path.join(os.path.dirname(__file__), 'data'))


def data_file(name: str) -> str:
    return os.path.join(DATA_DIR, name)


@pytest.fixture(scope='session')
def small_db():
    return db_build(120)


@pytest.fixture(scope='session')
def default_beta():
    return beta_params('7505/8192', unconditional_b())


@pytest.fixture
def synthetic_zeros():
    return ZeroList(entries=[ball(Fraction(r), Fraction(1, 10 ** 12)) for r in LEADING_ZEROS],
                    source='synthetic', declared_radius='1e-12')
