"""
JSON 存储与各工具类读写的测试。
"""

import os

import pytest

from groupoid_duality.errors import MalformedInputError
from groupoid_duality.repfun import function_hopf_algebra
from groupoid_duality.storage.json_storage import CATEGORIES, JsonStorage, safe_id
from groupoid_duality.tools.groupoid_tools import GroupoidTools, cyclic_group, find_isomorphism, pair_groupoid
from groupoid_duality.tools.hopf_tools import HopfTools
from groupoid_duality.tools.representation_tools import RepresentationTools, validate_rep
from tests.conftest import DATA_DIR
from tests.test_representation import sign_rep


@pytest.fixture
def storage(tmp_path):
    return JsonStorage(str(tmp_path / "data"))


def test_storage_creates_categories(storage):
    for category in CATEGORIES:
        assert os.path.isdir(os.path.join(storage.base_dir, category))


def test_save_load_list_delete(storage):
    path = storage.save({"name": "first", "value": [1, 2]}, "reports", "run 1")
    assert os.path.basename(path) == "run_1.json"
    assert storage.load("reports", "run 1") == {"name": "first", "value": [1, 2]}
    storage.save({"value": 3}, "reports", "another")
    assert storage.list("reports") == [{"id": "another", "name": "未命名"}, {"id": "run_1", "name": "first"}]
    assert storage.delete("reports", "run 1")
    assert not storage.delete("reports", "run 1")
    with pytest.raises(FileNotFoundError):
        storage.load("reports", "run 1")


def test_broken_file_is_skipped_in_list(storage):
    with open(storage.path("hopf", "broken"), "w", encoding="utf-8") as f:
        f.write("[1,")
    with pytest.raises(MalformedInputError):
        storage.load("hopf", "broken")
    assert storage.list("hopf") == []


def test_safe_id():
    assert safe_id("a/b c") == "a_b_c"
    assert safe_id("B(pair2)+x,y") == "B(pair2)+x,y"
    assert safe_id("") == "unnamed"


def test_groupoid_tools_round_trip(storage):
    tools = GroupoidTools(storage)
    g = pair_groupoid(3)
    tools.save_groupoid(g, "pair3")
    assert tools.list_groupoids() == ["pair3"]
    assert tools.load_groupoid("pair3") == g


def test_representation_tools_resolve_groupoid_reference(storage, qq):
    z2 = cyclic_group(2)
    GroupoidTools(storage).save_groupoid(z2, "z2")
    tools = RepresentationTools(storage)
    tools.save_representation(sign_rep(z2, qq), "sign", groupoid_ref="z2")
    loaded = tools.load_representation("sign")
    assert loaded.groupoid == z2
    assert loaded.same_matrices(sign_rep(z2, qq))


def test_hopf_tools_round_trip(storage, f5):
    h = function_hopf_algebra(cyclic_group(3), f5)
    tools = HopfTools(storage)
    tools.save_hopf(h, "k_z3")
    assert tools.list_hopf() == ["k_z3"]
    assert tools.load_hopf("k_z3").to_dict() == h.to_dict()


def test_sample_data_files(qq):
    storage = JsonStorage(str(DATA_DIR))
    assert GroupoidTools(storage).load_groupoid("z2") == cyclic_group(2)
    assert find_isomorphism(GroupoidTools(storage).load_groupoid("pair2"), pair_groupoid(2)) is not None
    sign = RepresentationTools(storage).load_representation("z2_sign")
    assert sign.rank == 1
    assert validate_rep(sign).ok
    assert HopfTools(storage).load_hopf("k_z2").dimension == 2
