import random
from pathlib import Path

import pytest

from asm_hyperdet.arith.rational_function import LAMBDA_SYMBOL, RationalFunction
from asm_hyperdet.config import load_config
from asm_hyperdet.symfun.cache import MacdonaldCache
from asm_hyperdet.symfun.macdonald import clear_memory_cache

DATA_DIR = Path(__file__).resolve().parents[1] / "data"


@pytest.fixture
def cache_dir(tmp_path):
    clear_memory_cache()
    yield tmp_path / "cache"
    clear_memory_cache()


@pytest.fixture
def cache(cache_dir):
    return MacdonaldCache(cache_dir)


@pytest.fixture
def config(cache_dir):
    return load_config({"cache_dir": str(cache_dir)}, environ={})


@pytest.fixture
def rng():
    return random.Random(20240917)


@pytest.fixture
def q():
    return RationalFunction.gen()


@pytest.fixture
def lam():
    return RationalFunction.gen(LAMBDA_SYMBOL)


@pytest.fixture
def data_dir():
    return DATA_DIR
