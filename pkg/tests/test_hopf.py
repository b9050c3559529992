"""
Hopf 代数胚公理、态射、特征标、特征标群胚与余模的测试。
"""

import json

import pytest

from groupoid_duality.algebra import FieldSpec, Matrix
from groupoid_duality.duality import comodule_from_rep
from groupoid_duality.errors import GuardExceededError, MalformedInputError, UnsupportedCharactersError
from groupoid_duality.models.groupoid import GroupoidMorphism
from groupoid_duality.models.hopf import CommutativeAlgebra, Comodule, HopfAlgebroid, HopfMorphism, SplitAlgebra
from groupoid_duality.repfun import function_hopf_algebra, repfun_concrete
from groupoid_duality.tools.groupoid_tools import (
    band_groupoid,
    cyclic_group,
    find_isomorphism,
    group_from_table,
    unit_groupoid,
    validate_groupoid,
)
from groupoid_duality.tools.hopf_tools import (
    AXIOM_CLAUSES,
    apply_X_on_morphism,
    build_character_groupoid,
    character_groupoid,
    characters,
    check_hopf_axioms,
    check_hopf_morphism,
    trivial_comodule,
    validate_comodule,
)
from groupoid_duality.tools.representation_tools import regular_rep, trivial_rep

from tests.conftest import DATA_DIR
from tests.test_groupoid import LOOP_TABLE


def idempotent_algebra(field):
    """k[x]/(x² − x)，分裂见证的列是 x 与 1 − x。"""
    products = {(0, 0): {0: field.one}, (0, 1): {1: field.one}, (1, 1): {1: field.one}}
    witness = Matrix.from_values([[0, 1], [1, -1]], field)
    return CommutativeAlgebra(field, ["1", "x"], products, {0: field.one}, witness, "idem")


# ========================
# 公理
# ========================

@pytest.mark.parametrize("field", [FieldSpec.rational(), FieldSpec.prime(5)], ids=str)
def test_corpus_satisfies_axioms(field, corpus):
    for name, g in corpus.items():
        report = check_hopf_axioms(repfun_concrete(g, field))
        assert report.ok, (name, report.failed_axioms())
        assert report.warnings == []


def test_axiom_clauses_cover_all_names():
    names = [name for clause in AXIOM_CLAUSES.values() for name in clause]
    assert len(names) == len(set(names))
    assert "coassociativity" in AXIOM_CLAUSES["c"]


def test_tensor_basis_is_composable_pairs(qq, pair2):
    h = repfun_concrete(pair2, qq)
    assert h.tensor.dimension == len(pair2.composable_pairs) == 8
    assert h.comultiplication.shape == (8, 4)


def test_antipode_mutation(qq, z3):
    h = function_hopf_algebra(z3, qq).replace(antipode=Matrix.identity(3, qq))
    report = check_hopf_axioms(h)
    assert report.failed_axioms() == ["antipode_law"]
    assert report.first("antipode_law").witness[0] == 0


def test_coassociativity_mutation(qq):
    loop = group_from_table(LOOP_TABLE, name="loop5")
    report = check_hopf_axioms(repfun_concrete(loop, qq))
    failed = report.failed_axioms()
    assert "coassociativity" in failed
    assert "antipode_law" not in failed
    assert "counit_law" not in failed


def test_counit_mutation(qq, z2):
    h = function_hopf_algebra(z2, qq)
    broken = h.replace(counit=Matrix.zeros(1, 2, qq))
    failed = check_hopf_axioms(broken).failed_axioms()
    assert "counit_unit" in failed
    assert "counit_law" in failed


def test_source_mutation(qq, z3):
    h = function_hopf_algebra(z3, qq)
    broken = h.replace(source=h.source.scale(2))
    report = check_hopf_axioms(broken)
    assert "source_algebra_map" in report.failed_axioms()
    assert "grading" in report.failed_axioms()


def test_comultiplication_shape_is_checked(qq, z2):
    h = function_hopf_algebra(z2, qq)
    with pytest.raises(MalformedInputError):
        check_hopf_axioms(h.replace(comultiplication=Matrix.zeros(3, 2, qq)))


def test_structure_map_shapes(qq, z2):
    h = function_hopf_algebra(z2, qq)
    with pytest.raises(MalformedInputError):
        h.replace(antipode=Matrix.identity(3, qq))


def test_isotropy_block(qq, band2_z2):
    block = repfun_concrete(band2_z2, qq).isotropy_block(0)
    assert block.base_dimension == 1
    assert block.dimension == 2
    assert check_hopf_axioms(block).ok


def test_sample_file_loads(qq):
    with open(DATA_DIR / "hopf" / "k_z2.json", encoding="utf-8") as f:
        h = HopfAlgebroid.from_dict(json.load(f))
    assert check_hopf_axioms(h).ok
    assert h.antipode == function_hopf_algebra(cyclic_group(2), qq).antipode


def test_dict_round_trip_keeps_maps(f5, pair2):
    h = repfun_concrete(pair2, f5)
    again = HopfAlgebroid.from_dict(h.to_dict())
    assert again.field == f5
    assert again.comultiplication == h.comultiplication
    assert again.counit == h.counit


def test_algebra_from_delta_basis_document(qq):
    data = SplitAlgebra(qq, ["a", "b", "c"], "k3").to_dict()
    assert "products" not in data
    algebra = CommutativeAlgebra.from_dict(data, qq)
    assert isinstance(algebra, SplitAlgebra)
    assert algebra.dimension == 3
    assert algebra.name == "k3"
    with pytest.raises(MalformedInputError):
        CommutativeAlgebra.from_dict({"delta_basis": True}, qq)


# ========================
# 态射
# ========================

def test_identity_morphism(qq, pair2):
    h = repfun_concrete(pair2, qq)
    assert check_hopf_morphism(HopfMorphism.identity(h)).ok


def test_zero_total_map_is_not_a_morphism(qq, z2):
    h = function_hopf_algebra(z2, qq)
    broken = HopfMorphism(h, h, Matrix.identity(1, qq), Matrix.zeros(2, 2, qq))
    failed = check_hopf_morphism(broken).failed_axioms()
    assert "total_algebra_map" in failed
    assert "source" in failed


# ========================
# 特征标
# ========================

def test_characters_of_delta_basis(qq):
    a = SplitAlgebra(qq, ["a", "b", "c"])
    assert characters(a) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_characters_from_split_witness(qq):
    assert characters(idempotent_algebra(qq)) == [[qq.one, qq.one], [qq.one, qq.zero]]


def test_bad_split_witness(qq):
    a = idempotent_algebra(qq)
    a.split_witness = Matrix.identity(2, qq)
    with pytest.raises(MalformedInputError):
        characters(a)


def test_truncated_polynomial_brute_force():
    f2 = FieldSpec.prime(2)
    a = CommutativeAlgebra.truncated_polynomial(f2, 2)
    assert a.basis_names == ["1", "x"]
    assert characters(a) == [[f2.one, f2.zero]]
    assert characters(CommutativeAlgebra.truncated_polynomial(FieldSpec.prime(5), 3)) == [[1, 0, 0]]


def test_rational_algebra_without_witness(qq):
    with pytest.raises(UnsupportedCharactersError):
        characters(CommutativeAlgebra.truncated_polynomial(qq, 2))


def test_brute_force_guards():
    with pytest.raises(GuardExceededError):
        characters(CommutativeAlgebra.truncated_polynomial(FieldSpec.prime(7), 2))
    with pytest.raises(GuardExceededError):
        characters(CommutativeAlgebra.truncated_polynomial(FieldSpec.prime(2), 13))


def test_character_groupoid_of_pair(qq, pair2):
    chars = build_character_groupoid(repfun_concrete(pair2, qq))
    x = chars.groupoid
    assert (x.n_objects, x.n_arrows) == (2, 4)
    assert validate_groupoid(x).ok
    assert find_isomorphism(pair2, x) is not None
    assert x.arrow_names == pair2.arrow_names


def test_character_groupoid_sizes(f5):
    assert character_groupoid(repfun_concrete(unit_groupoid(3), f5)).n_arrows == 3
    band = character_groupoid(repfun_concrete(band_groupoid(2, cyclic_group(2)), f5))
    assert validate_groupoid(band).ok
    assert band.n_arrows == 8


def test_character_lookup(qq, z2):
    chars = build_character_groupoid(function_hopf_algebra(z2, qq))
    assert chars.arrow_of([0, 1]) == 1
    assert chars.object_of([1]) == 0
    assert chars.arrow_of([1, 1]) is None
    assert chars.evaluate(1, {0: qq.one, 1: qq.element(3)}) == 3


def test_X_of_identity_is_identity(qq, pair2):
    h = repfun_concrete(pair2, qq)
    chars = build_character_groupoid(h)
    functor = apply_X_on_morphism(HopfMorphism.identity(h), chars, chars)
    assert functor.same_maps(GroupoidMorphism.identity(chars.groupoid))


# ========================
# 余模
# ========================

def test_comodules_from_representations(qq, pair2, z3):
    for e in (trivial_rep(pair2, qq), regular_rep(z3, qq)):
        assert validate_comodule(comodule_from_rep(e)).ok
    assert validate_comodule(trivial_comodule(repfun_concrete(pair2, qq))).ok


def test_comodule_coassociativity_mutation(qq, z2):
    c = comodule_from_rep(regular_rep(z2, qq)).with_entry(0, 1, {})
    report = validate_comodule(c)
    assert report.first("coassociativity").witness == [0, 0]


def test_comodule_counit_mutation(qq, z2):
    c = Comodule.trivial(function_hopf_algebra(z2, qq)).with_entry(0, 0, {})
    assert validate_comodule(c).failed_axioms() == ["counit"]


def test_comodule_shape(qq, z2):
    with pytest.raises(MalformedInputError):
        Comodule(function_hopf_algebra(z2, qq), 2, [[{}]])
