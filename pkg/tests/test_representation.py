"""
表示、缠绕算子、核与余核、整体截面以及生成族的测试。
"""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from groupoid_duality.algebra import FieldSpec, Matrix
from groupoid_duality.errors import MalformedInputError, RankMismatchError
from groupoid_duality.models.representation import Representation, RepMorphism
from groupoid_duality.tools.groupoid_tools import (
    action_projection,
    diagonal_embedding,
    pair_groupoid,
    translation_action,
    unit_groupoid,
)
from groupoid_duality.tools.representation_tools import (
    coefficient_span_dimension,
    direct_sum,
    dual_rep,
    end_unit_dimension,
    global_sections,
    hom_base_change_injectivity,
    intertwiner_space,
    kernel_cokernel,
    regular_rep,
    restrict_along,
    sections_map,
    sections_square,
    sections_surjective,
    sections_tensor_iso,
    spanning_family,
    tensor_rep,
    trivial_rep,
    validate_rep,
    validate_rep_morphism,
    zero_rep,
)


def sign_rep(z2, field):
    return Representation(z2, field, 1, [Matrix.identity(1, field), Matrix.from_values([[-1]], field)], "sign")


def scaled_rep(pair2, field):
    """𝒱(2) 上的秩 2 表示，箭头 1→0 作用为 [[2,1],[0,1]]。"""
    forward = Matrix.from_values([[2, 1], [0, 1]], field)
    backward = Matrix.from_values([["1/2", "-1/2"], [0, 1]], field)
    identity = Matrix.identity(2, field)
    return Representation(pair2, field, 2, [identity, forward, backward, identity], "scaled")


def coboundary_rep(g, field, weights):
    """秩 1 表示 ϱ_(y,x) = c_y / c_x。"""
    n = g.n_objects
    matrices = [Matrix.from_values([[Fraction(weights[a // n], weights[a % n])]], field) for a in g.arrows]
    return Representation(g, field, 1, matrices, "cob")


# ========================
# 构造与校验
# ========================

def test_basic_representations_are_valid(qq, f5, pair2, z2, z3):
    for r in (
        trivial_rep(pair2, qq),
        trivial_rep(pair2, f5, 3),
        zero_rep(pair2, qq),
        regular_rep(z3, qq),
        regular_rep(z3, f5),
        sign_rep(z2, qq),
        scaled_rep(pair2, qq),
    ):
        assert validate_rep(r).ok, r.name


def test_non_invertible_matrix(qq, z2):
    broken = regular_rep(z2, qq).with_matrix(1, Matrix.zeros(2, 2, qq))
    report = validate_rep(broken)
    assert report.first("invertibility").witness == [1]
    assert "cocycle" in report.failed_axioms()


def test_identity_law_mutation(qq, z2):
    broken = sign_rep(z2, qq).with_matrix(0, Matrix.from_values([[2]], qq))
    assert validate_rep(broken).failed_axioms()[0] == "identity_law"


def test_cocycle_mutation(qq, pair2):
    broken = scaled_rep(pair2, qq).with_matrix(2, Matrix.identity(2, qq))
    report = validate_rep(broken)
    assert "cocycle" in report.failed_axioms()
    assert "invertibility" not in report.failed_axioms()


def test_matrix_shape_must_match_rank(qq, z2):
    with pytest.raises(RankMismatchError):
        Representation(z2, qq, 2, [Matrix.identity(1, qq)] * 2)
    with pytest.raises(MalformedInputError):
        Representation(z2, qq, 1, [Matrix.identity(1, qq)])


def test_tensor_dual_and_sum(qq, pair2, z3):
    reg = regular_rep(z3, qq)
    assert tensor_rep(reg, reg).rank == 9
    assert validate_rep(tensor_rep(reg, reg)).ok
    e = scaled_rep(pair2, qq)
    assert dual_rep(e).matrices[1] == Matrix.from_values([["1/2", 0], ["-1/2", 1]], qq)
    assert dual_rep(dual_rep(e)).same_matrices(e)
    s = direct_sum(trivial_rep(pair2, qq), e)
    assert s.rank == 3
    assert validate_rep(s).ok


def test_tensor_is_strictly_monoidal(corpus, qq, pair2):
    for name, g in corpus.items():
        unit = trivial_rep(g, qq)
        family = spanning_family(g, qq)
        for e in family:
            assert tensor_rep(unit, e).same_matrices(e), name
            assert tensor_rep(e, unit).same_matrices(e), name
        _check_associative([unit] + [e for e in family if e.rank <= 2], name)
    e = scaled_rep(pair2, qq)
    _check_associative([trivial_rep(pair2, qq), e, dual_rep(e)], "scaled")


def _check_associative(reps, name):
    for a, b, c in itertools.product(reps, repeat=3):
        left = tensor_rep(tensor_rep(a, b), c)
        assert left.same_matrices(tensor_rep(a, tensor_rep(b, c))), (name, a.name, b.name, c.name)
        assert validate_rep(left).ok


def test_permutation_rep_is_self_dual(qq, z3):
    reg = regular_rep(z3, qq)
    assert dual_rep(reg).same_matrices(reg)


@pytest.mark.parametrize("field", [FieldSpec.rational(), FieldSpec.prime(5)], ids=str)
@settings(max_examples=30, deadline=None)
@given(weights=st.lists(st.integers(1, 4), min_size=3, max_size=3))
def test_coboundary_representations(field, weights):
    """c_y / c_x 形式的表示都同构于 𝓘，与对偶的张量积就是 𝓘。"""
    g = pair_groupoid(3)
    e = coboundary_rep(g, field, weights)
    assert validate_rep(e).ok
    assert len(intertwiner_space(trivial_rep(g, field), e)) == 1
    product = tensor_rep(e, dual_rep(e))
    assert all(m.is_identity() for m in product.matrices)


def test_restrict_along_projection(qq, z3):
    phi = action_projection(z3, translation_action(z3), 3)
    reg = regular_rep(z3, qq)
    restricted = restrict_along(phi, reg)
    assert validate_rep(restricted).ok
    assert all(restricted.matrices[a] == reg.matrices[a // 3] for a in phi.domain.arrows)


def test_restrict_along_wrong_groupoid(qq, z2):
    with pytest.raises(MalformedInputError):
        restrict_along(diagonal_embedding(2), trivial_rep(z2, qq))


# ========================
# 缠绕算子
# ========================

def test_intertwiner_dimensions(qq, pair2, z2, disjoint):
    assert len(intertwiner_space(trivial_rep(pair2, qq), trivial_rep(pair2, qq))) == 1
    assert len(intertwiner_space(trivial_rep(disjoint, qq), trivial_rep(disjoint, qq))) == 2
    reg = regular_rep(z2, qq)
    assert len(intertwiner_space(reg, reg)) == 2
    assert len(intertwiner_space(trivial_rep(z2, qq), reg)) == 1
    assert intertwiner_space(trivial_rep(z2, qq), sign_rep(z2, qq)) == []


def test_sign_is_trivial_in_characteristic_two(z2):
    f2 = FieldSpec.prime(2)
    assert len(intertwiner_space(trivial_rep(z2, f2), sign_rep(z2, f2))) == 1


def test_intertwiners_satisfy_intertwining(qq, pair2):
    e = scaled_rep(pair2, qq)
    homs = intertwiner_space(e, e)
    assert len(homs) == 4
    assert all(validate_rep_morphism(m).ok for m in homs)


def test_broken_intertwiner(qq, z2):
    reg = regular_rep(z2, qq)
    m = RepMorphism(reg, reg, [Matrix.from_values([[1, 0], [0, 0]], qq)])
    assert validate_rep_morphism(m).first("intertwining").witness == [1]


def test_morphism_composition(qq, z2):
    reg = regular_rep(z2, qq)
    identity = RepMorphism(reg, reg, [Matrix.identity(2, qq)])
    augmentation = RepMorphism(reg, trivial_rep(z2, qq), [Matrix.from_values([[1, 1]], qq)])
    assert identity.is_isomorphism()
    assert not augmentation.is_isomorphism()
    assert augmentation.compose(identity).components == augmentation.components
    assert augmentation.fiber_ranks() == [1]


# ========================
# 核与余核
# ========================

def test_kernel_of_augmentation(qq, z2):
    reg = regular_rep(z2, qq)
    augmentation = RepMorphism(reg, trivial_rep(z2, qq), [Matrix.from_values([[1, 1]], qq)])
    (kernel, inclusion), (cokernel, projection) = kernel_cokernel(augmentation)
    assert kernel.rank == 1
    assert kernel.matrices[1] == Matrix.from_values([[-1]], qq)
    assert cokernel.rank == 0
    assert validate_rep(kernel).ok
    assert validate_rep_morphism(inclusion).ok
    assert validate_rep_morphism(projection).ok
    assert all((a @ i).is_zero() for a, i in zip(augmentation.components, inclusion.components))


def test_cokernel_of_zero_morphism(qq, pair2):
    e = scaled_rep(pair2, qq)
    zero = RepMorphism(trivial_rep(pair2, qq), e, [Matrix.zeros(2, 1, qq)] * 2)
    (kernel, _), (cokernel, projection) = kernel_cokernel(zero)
    assert kernel.rank == 1
    assert cokernel.rank == 2
    assert cokernel.same_matrices(e)
    assert validate_rep_morphism(projection).ok


def test_non_constant_rank_is_rejected(qq, unit2):
    i = trivial_rep(unit2, qq)
    m = RepMorphism(i, i, [Matrix.identity(1, qq), Matrix.zeros(1, 1, qq)])
    with pytest.raises(RankMismatchError) as info:
        kernel_cokernel(m)
    assert info.value.ranks == {0: 1, 1: 0}


# ========================
# 整体截面
# ========================

def test_global_sections_dimension(qq, pair3, z2):
    assert global_sections(trivial_rep(pair3, qq, 2)).dimension == 6
    assert global_sections(regular_rep(z2, qq)).dimension == 2


def test_sections_map_is_block_diagonal(qq, z2):
    reg = regular_rep(z2, qq)
    augmentation = RepMorphism(reg, trivial_rep(z2, qq), [Matrix.from_values([[1, 1]], qq)])
    assert sections_map(augmentation) == Matrix.from_values([[1, 1]], qq)
    assert sections_surjective(augmentation)
    zero = RepMorphism(reg, trivial_rep(z2, qq), [Matrix.zeros(1, 2, qq)])
    assert not sections_surjective(zero)


def test_sections_tensor_iso(qq, pair2):
    e = scaled_rep(pair2, qq)
    iso = sections_tensor_iso(e, e)
    report = iso.check()
    assert report.ok
    assert report.details["domain_dim"] == report.details["codomain_dim"] == 8


def test_hom_base_change_transitive(qq, pair3):
    report = hom_base_change_injectivity(trivial_rep(pair3, qq), trivial_rep(pair3, qq))
    assert report.details["injective"]
    assert report.details["rank"] == 3
    assert report.violations == []


def test_hom_base_change_disconnected(qq, disjoint):
    report = hom_base_change_injectivity(trivial_rep(disjoint, qq), trivial_rep(disjoint, qq))
    assert report.details["hom_dim"] == 2
    assert report.details["domain_dim"] == 6
    assert not report.details["injective"]
    assert report.ok
    assert report.warnings[0].axiom == "injectivity"


def test_end_of_unit(qq, pair2, disjoint):
    assert end_unit_dimension(pair2, qq).details["dimension"] == 1
    report = end_unit_dimension(disjoint, qq)
    assert report.details == {"dimension": 2, "components": 2}
    assert report.warnings[0].axiom == "end_unit_is_field"


def test_sections_square(qq, pair2):
    report = sections_square(diagonal_embedding(2), scaled_rep(pair2, qq))
    assert report.ok
    assert report.details["dimension"] == 4


# ========================
# 生成族
# ========================

def test_spanning_family_spans_functions(qq, corpus):
    for name, g in corpus.items():
        family = spanning_family(g, qq)
        assert all(validate_rep(r).ok for r in family), name
        assert coefficient_span_dimension(g, family) == g.n_arrows, name


def test_spanning_family_sizes(qq, pair2, band2_z2, disjoint):
    assert [r.rank for r in spanning_family(pair2, qq)] == [1]
    assert [r.rank for r in spanning_family(band2_z2, qq)] == [2]
    assert [r.rank for r in spanning_family(unit_groupoid(3), qq)] == [1]
    assert [r.rank for r in spanning_family(disjoint, qq)] == [2, 2]


def test_empty_family_spans_nothing(pair2):
    assert coefficient_span_dimension(pair2, []) == 0


def test_dual_pairing_is_exact(corpus, qq, pair2):
    reps = [scaled_rep(pair2, qq)]
    for g in corpus.values():
        reps.extend(spanning_family(g, qq))
    for r in reps:
        dual = dual_rep(r)
        assert validate_rep(dual).ok
        for a in r.groupoid.arrows:
            assert (dual.matrices[a].transpose() @ r.matrices[a]).is_identity()
