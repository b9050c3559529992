"""
测试共用的域、群胚和语料夹具。
"""

from pathlib import Path

import pytest

from groupoid_duality.algebra.field import FieldSpec
from groupoid_duality.tools.groupoid_tools import (
    band_groupoid,
    cyclic_group,
    disjoint_union,
    load_corpus,
    pair_groupoid,
    unit_groupoid,
)

ROOT = Path(__file__).resolve().parents[1]
CORPUS_FILE = ROOT / "data" / "corpus.json"
DATA_DIR = ROOT / "data"


@pytest.fixture(scope="session")
def qq() -> FieldSpec:
    return FieldSpec.rational()


@pytest.fixture(scope="session")
def f5() -> FieldSpec:
    return FieldSpec.prime(5)


@pytest.fixture(scope="session")
def corpus():
    """标准语料，按文件顺序的 {名称: 群胚}。"""
    return dict(load_corpus(str(CORPUS_FILE)))


@pytest.fixture
def z2():
    return cyclic_group(2)


@pytest.fixture
def z3():
    return cyclic_group(3)


@pytest.fixture
def pair2():
    return pair_groupoid(2)


@pytest.fixture
def pair3():
    return pair_groupoid(3)


@pytest.fixture
def unit2():
    return unit_groupoid(2)


@pytest.fixture
def band2_z2():
    return band_groupoid(2, cyclic_group(2))


@pytest.fixture
def disjoint():
    """𝒱(2) ⊔ Z/2，两个连通分支。"""
    return disjoint_union(pair_groupoid(2), cyclic_group(2))
