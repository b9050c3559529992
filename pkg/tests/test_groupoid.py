"""
群胚构造、公理校验、结构查询与态射枚举的测试。
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from groupoid_duality.errors import GuardExceededError, MalformedInputError
from groupoid_duality.models.groupoid import FiniteGroupoid, GroupoidMorphism
from groupoid_duality.tools.groupoid_tools import (
    action_groupoid,
    action_projection,
    band_automorphism,
    band_groupoid,
    build_from_recipe,
    canonical_arrows,
    component_of,
    connected_components,
    cyclic_group,
    diagonal_embedding,
    enumerate_morphisms,
    find_isomorphism,
    generating_arrows,
    group_from_table,
    induced_groupoid,
    is_transitive,
    isotropy_group,
    isotropy_groupoid,
    pair_groupoid,
    sub_groupoid,
    symmetric_group_3,
    translation_action,
    unit_groupoid,
    validate_groupoid,
    validate_morphism,
)

# 五元 Moufang 型乘法表：有单位元和逆元，但不满足结合律
LOOP_TABLE = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]


# ========================
# 标准构造
# ========================

def test_corpus_order_and_sizes(corpus):
    assert list(corpus) == [
        "unit3",
        "pair2",
        "pair3",
        "band2_z2",
        "band2_s3",
        "action_z3",
        "disjoint_pair2_z2",
    ]
    assert [g.n_arrows for g in corpus.values()] == [3, 4, 9, 8, 24, 9, 6]


def test_corpus_members_are_groupoids(corpus):
    for name, g in corpus.items():
        report = validate_groupoid(g)
        assert report.ok, (name, report.failed_axioms())


def test_pair_groupoid_numbering(pair2):
    # 箭头 y·n + x 从 x 到 y
    assert pair2.src == [0, 1, 0, 1]
    assert pair2.tgt == [0, 0, 1, 1]
    assert pair2.identity == [0, 3]
    assert pair2.inverse == [0, 2, 1, 3]
    assert pair2.compose(1, 2) == 0


def test_symmetric_group():
    s3 = symmetric_group_3()
    assert s3.n_objects == 1
    assert s3.n_arrows == 6
    assert s3.identity == [0]
    assert s3.arrow_names[0] == "012"
    assert validate_groupoid(s3).ok


def test_band_composition_convention():
    s3 = symmetric_group_3()
    band = band_groupoid(2, s3)

    def pack(x, h, y):
        return (x * 6 + h) * 2 + y

    for x in range(2):
        for y in range(2):
            for h in s3.arrows:
                f = pack(x, h, y)
                assert (band.src[f], band.tgt[f]) == (x, y)
                assert band.inverse[f] == pack(y, s3.inverse[h], x)
                for z in range(2):
                    for k in s3.arrows:
                        assert band.compose(pack(y, k, z), f) == pack(x, s3.compose(k, h), z)


def test_band_and_action_sizes():
    assert band_groupoid(2, symmetric_group_3()).n_arrows == 24
    g = action_groupoid(cyclic_group(3), translation_action(cyclic_group(3)), 3)
    assert g.n_arrows == 9
    assert is_transitive(g)
    assert all(len(g.loops(x)) == 1 for x in g.objects)


def test_action_table_must_be_an_action(z2):
    with pytest.raises(MalformedInputError):
        action_groupoid(z2, [[0, 1], [0, 0]], 2)


def test_empty_object_set_is_rejected():
    with pytest.raises(MalformedInputError):
        FiniteGroupoid(0, [], [], [], [], {})


def test_dangling_index_is_rejected():
    with pytest.raises(MalformedInputError):
        FiniteGroupoid(1, [0, 1], [0, 0], [0], [0, 1], {})


def test_group_table_without_unit():
    with pytest.raises(MalformedInputError):
        group_from_table([[1, 0], [0, 0]])


def test_dict_round_trip(pair2):
    assert FiniteGroupoid.from_dict(pair2.to_dict()) == pair2


def test_from_dict_dangling_name():
    data = {
        "objects": ["*"],
        "arrows": [{"id": "e", "src": "*", "tgt": "*"}],
        "identity": {"*": "e"},
        "inverse": {"e": "f"},
        "compose": [["e", "e", "e"]],
    }
    with pytest.raises(MalformedInputError):
        FiniteGroupoid.from_dict(data)


# ========================
# 公理变异
# ========================

def test_broken_associativity(z3):
    table = dict(z3.compose_table)
    table[(1, 1)] = 0
    report = validate_groupoid(z3.with_compose(table))
    assert not report.ok
    assert "associativity" in report.failed_axioms()


def test_non_associative_loop():
    report = validate_groupoid(group_from_table(LOOP_TABLE))
    assert "associativity" in report.failed_axioms()


def test_broken_unit_law(z2):
    table = dict(z2.compose_table)
    table[(0, 1)] = 0
    report = validate_groupoid(z2.with_compose(table))
    assert report.first("unit_law").witness == [0, 1]


def test_missing_composite(pair2):
    table = dict(pair2.compose_table)
    del table[(1, 2)]
    report = validate_groupoid(pair2.with_compose(table))
    assert report.first("composition_domain").witness == [1, 2]


def test_broken_inverse(pair2):
    g = FiniteGroupoid(
        pair2.n_objects, pair2.src, pair2.tgt, pair2.identity,
        [0, 1, 1, 3], pair2.compose_table,
    )
    assert "inverse_endpoints" in validate_groupoid(g).failed_axioms()


@pytest.mark.parametrize("name", ["unit3", "pair2", "pair3", "band2_z2", "band2_s3", "action_z3", "disjoint_pair2_z2"])
@settings(max_examples=20, deadline=None)
@given(data=st.data())
def test_single_entry_mutations_are_detected(corpus, name, data):
    g = corpus[name]
    pairs = sorted(g.compose_table)
    pair = data.draw(st.sampled_from(pairs))
    old = g.compose_table[pair]
    new = data.draw(st.sampled_from([a for a in g.arrows if a != old]))
    table = dict(g.compose_table)
    table[pair] = new
    report = validate_groupoid(g.with_compose(table))
    assert not report.ok
    assert report.errors[0].witness is not None


# ========================
# 结构查询
# ========================

def test_connected_components(disjoint):
    partition, parts = connected_components(disjoint)
    assert partition == [[0, 1], [2]]
    assert [p.n_arrows for p in parts] == [4, 2]
    assert component_of(disjoint, 2) == [2]
    assert not is_transitive(disjoint)
    assert disjoint.object_names == ["L0", "L1", "R*"]


def test_unit_groupoid_components():
    partition, _ = connected_components(unit_groupoid(3))
    assert partition == [[0], [1], [2]]


def test_isotropy(band2_z2, pair2):
    assert isotropy_group(band2_z2, 0).n_arrows == 2
    gi, inclusion = isotropy_groupoid(pair2)
    assert gi.n_objects == 2
    assert gi.n_arrows == 2
    assert inclusion.arrow_map == [0, 3]
    assert validate_morphism(inclusion).ok


def test_canonical_arrows(pair2):
    tau = canonical_arrows(pair2, 0)
    assert tau == {0: 0, 1: 1}
    assert pair2.src[tau[1]] == 1 and pair2.tgt[tau[1]] == 0


def test_generating_arrows(pair3, z3):
    assert generating_arrows(z3) == [1]
    gens = generating_arrows(pair3)
    assert all(not pair3.is_identity(a) for a in gens)
    assert len(gens) == 2


def test_sub_groupoid_must_be_closed(pair2):
    with pytest.raises(MalformedInputError):
        sub_groupoid(pair2, [1])
    sub, inclusion = sub_groupoid(pair2, [0, 3])
    assert sub.n_arrows == 2
    assert validate_morphism(inclusion).ok


def test_induced_groupoid(z2):
    induced, morphism = induced_groupoid(z2, [0, 0, 0])
    assert induced.n_objects == 3
    assert induced.n_arrows == 18
    assert validate_groupoid(induced).ok
    assert validate_morphism(morphism).ok
    assert is_transitive(induced)


def test_induced_groupoid_needs_points(z2):
    with pytest.raises(MalformedInputError):
        induced_groupoid(z2, [])


# ========================
# 态射
# ========================

def test_enumerate_group_morphisms(z2, z3):
    assert len(enumerate_morphisms(z2, z2)) == 2
    assert len(enumerate_morphisms(z3, z2)) == 1
    assert len(enumerate_morphisms(z2, z3)) == 1


def test_enumerate_from_pair_groupoid(pair2, z2):
    morphisms = enumerate_morphisms(pair2, z2)
    assert len(morphisms) == 2
    assert all(validate_morphism(phi).ok for phi in morphisms)


def test_enumerate_guard():
    band = band_groupoid(2, symmetric_group_3())
    with pytest.raises(GuardExceededError):
        enumerate_morphisms(band, cyclic_group(2))


def test_find_isomorphism(z3, pair2):
    iso = find_isomorphism(z3, cyclic_group(3))
    assert iso is not None and iso.is_bijective()
    assert find_isomorphism(z3, pair2) is None


def test_corpus_morphisms_are_functors(z3):
    for phi in (
        diagonal_embedding(3),
        action_projection(z3, translation_action(z3), 3),
        band_automorphism(2, cyclic_group(2), [1, 0]),
    ):
        assert validate_morphism(phi).ok


def test_band_automorphism_is_invertible():
    phi = band_automorphism(2, cyclic_group(2), [1, 0])
    assert phi.is_bijective()
    assert phi.compose(phi.inverse()).same_maps(GroupoidMorphism.identity(phi.codomain))


def test_broken_morphism(unit2, pair2):
    phi = GroupoidMorphism(unit2, pair2, [0, 1], [0, 0])
    failed = validate_morphism(phi).failed_axioms()
    assert "preserves_endpoints" in failed
    assert "preserves_identity" in failed


def test_unknown_recipe():
    with pytest.raises(MalformedInputError):
        build_from_recipe({"name": "x", "builder": "torus"})


def test_recipe_with_named_group():
    s3 = symmetric_group_3()
    band = build_from_recipe({"name": "b", "builder": "band", "n": 2, "group": "s3"}, known={"s3": s3})
    assert band.name == "b"
    assert band.n_arrows == 24
