"""
ℛₖ 的具体模型、余端模型、ζ、函子性、迷向商与传递分解的测试。
"""

import pytest

from groupoid_duality.errors import MalformedInputError, NonTransitiveError
from groupoid_duality.models.representation import Representation
from groupoid_duality.repfun import (
    build_repfun,
    function_hopf_algebra,
    functoriality_check,
    gt_check,
    isotropy_conjugation_iso,
    isotropy_hopf_algebra,
    isotropy_quotient,
    repfun_concrete,
    repfun_on_morphism,
    spanning_coend,
    transitive_decomposition_iso,
    zeta,
)
from groupoid_duality.repfun.coend import coend_from_family, coend_hopf_algebroid, compare_with_concrete
from groupoid_duality.tools.groupoid_tools import (
    band_automorphism,
    cyclic_group,
    diagonal_embedding,
    enumerate_morphisms,
    is_transitive,
    pair_groupoid,
    symmetric_group_3,
)
from groupoid_duality.tools.hopf_tools import check_hopf_axioms, check_hopf_morphism
from groupoid_duality.tools.representation_tools import permutation_matrix

CORPUS_DIMENSIONS = {
    "unit3": 3,
    "pair2": 4,
    "pair3": 9,
    "band2_z2": 8,
    "band2_s3": 24,
    "action_z3": 9,
    "disjoint_pair2_z2": 6,
}


# ========================
# 具体模型
# ========================

@pytest.mark.parametrize("name,dimension", sorted(CORPUS_DIMENSIONS.items()))
def test_concrete_dimension_is_arrow_count(corpus, qq, name, dimension):
    h = repfun_concrete(corpus[name], qq)
    assert h.dimension == dimension
    assert h.base.dimension == corpus[name].n_objects
    assert check_hopf_axioms(h).ok


def test_function_hopf_algebra_of_group(qq, z3):
    h = function_hopf_algebra(z3, qq)
    assert h.dimension == 3
    assert h.base.dimension == 1
    assert check_hopf_axioms(h).ok


def test_gt_on_unit_groupoid_has_empty_blocks(unit2, qq):
    report = gt_check(repfun_concrete(unit2, qq))
    assert report.ok
    assert not report.details["faithfully_flat"]
    assert report.details["empty_blocks"] == [(0, 1), (1, 0)]
    assert report.details["projective"]
    assert [v.axiom for v in report.warnings] == ["faithfully_flat", "faithfully_flat"]


def test_gt_on_transitive_groupoid(band2_z2, qq):
    report = gt_check(repfun_concrete(band2_z2, qq))
    assert report.details["faithfully_flat"]
    assert report.details["empty_blocks"] == []
    assert set(report.details["block_sizes"].values()) == {2}
    assert not report.violations


# ========================
# 余端模型与 ζ
# ========================

@pytest.mark.parametrize("name", sorted(CORPUS_DIMENSIONS))
def test_build_repfun_on_corpus(corpus, qq, name):
    repfun, report = build_repfun(corpus[name], qq)
    assert report.ok, (name, report.failed_axioms())
    assert report.details["dimension"] == CORPUS_DIMENSIONS[name]
    assert report.details["coend_dimension"] == report.details["dimension"]
    assert report.details["zeta"]["kernel_dimension"] == 0
    assert repfun.dimension == CORPUS_DIMENSIONS[name]
    # 每个张量积都参与乘法检查
    assert report.details["skipped_products"] == []
    assert report.details["zeta"]["products_skipped"] == 0
    assert report.details["zeta"]["well_defined_skipped"] == 0
    assert repfun.coend.is_product_complete


def test_build_repfun_embeds_large_products(corpus, qq):
    _, report = build_repfun(corpus["band2_s3"], qq, max_rank=16)
    assert report.ok, report.failed_axioms()
    assert report.details["closure_embedded"]
    assert report.details["zeta"]["products_embedded"] > 0
    assert report.details["zeta"]["products_skipped"] == 0
    assert report.details["zeta"]["well_defined_checked"] > 0


def test_product_outside_family_is_a_violation(qq):
    s3 = symmetric_group_3()
    perm = Representation(
        s3, qq, 3, [permutation_matrix([int(c) for c in name], qq) for name in s3.arrow_names], "perm"
    )
    # perm⊗perm 含符号表示，它不能嵌入 𝓘 与 perm 的直和
    repfun, report = build_repfun(s3, qq, max_rank=3, family=[perm])
    assert repfun.coend.skipped_products == [(1, 1)]
    assert "product_closure" in report.failed_axioms()
    assert "zeta.zeta_multiplicative" in report.failed_axioms()
    with pytest.raises(MalformedInputError):
        coend_hopf_algebroid(repfun.coend)


def test_build_repfun_over_prime_field(pair2, f5):
    _, report = build_repfun(pair2, f5)
    assert report.ok, report.failed_axioms()
    assert report.details["coend_dimension"] == 4


def test_build_repfun_reports_gt_caveat_as_warning(disjoint, qq):
    _, report = build_repfun(disjoint, qq)
    assert report.ok
    assert report.details["gt"]["faithfully_flat"] is False
    assert report.details["gt"]["transitive"] is False
    assert "gt.faithfully_flat" in {v.axiom for v in report.warnings}


def test_zeta_on_spanning_coend(pair2, qq):
    model = spanning_coend(pair2, qq)
    z, report = zeta(model, seed=3, samples=10)
    assert report.ok, report.failed_axioms()
    assert report.details["kernel_dimension"] == 0
    assert report.details["image_dimension"] == 4
    assert report.details["dimension"] == 4
    assert z.shape == (4, 4)


def test_trivial_family_gives_too_small_coend(z2, qq):
    model = coend_from_family(z2, [], field=qq)
    assert model.dimension == 1
    _, report = zeta(model, samples=5)
    assert report.details["kernel_dimension"] == 0
    comparison = compare_with_concrete(model, repfun_concrete(z2, qq))
    assert "bijective" in comparison.failed_axioms()


def test_empty_family_needs_field(z2):
    with pytest.raises(MalformedInputError):
        coend_from_family(z2, [])


def test_coend_hopf_algebroid_satisfies_axioms(pair3, qq):
    h = coend_hopf_algebroid(spanning_coend(pair3, qq))
    assert h.dimension == 9
    assert check_hopf_axioms(h).ok


def test_coend_hopf_algebroid_with_embedded_products(band2_z2, qq):
    model = spanning_coend(band2_z2, qq)
    assert model.embedded_products
    assert model.is_product_complete
    h = coend_hopf_algebroid(model)
    assert h.dimension == 8
    assert check_hopf_axioms(h).ok


# ========================
# 函子性
# ========================

def test_repfun_on_diagonal_embedding(qq):
    phi = diagonal_embedding(2)
    alpha, report = repfun_on_morphism(phi, qq, model=spanning_coend(phi.codomain, qq))
    assert report.ok, report.failed_axioms()
    assert alpha.total_map.shape == (2, 4)
    assert check_hopf_morphism(alpha).ok


def test_repfun_on_band_automorphism(qq):
    phi = band_automorphism(2, cyclic_group(2), [1, 0])
    alpha, report = repfun_on_morphism(phi, qq)
    assert report.ok
    assert alpha.total_map.shape == (8, 8)


def test_functoriality_of_composites(qq):
    phi = diagonal_embedding(2)
    for psi in enumerate_morphisms(pair_groupoid(2), cyclic_group(2)):
        assert functoriality_check(phi, psi, qq).ok
    swap = band_automorphism(2, cyclic_group(2), [1, 0])
    assert functoriality_check(swap, swap, qq).ok


# ========================
# 迷向商与传递分解
# ========================

@pytest.mark.parametrize("name,quotient", [("pair2", 2), ("band2_z2", 4), ("unit3", 3), ("disjoint_pair2_z2", 4)])
def test_isotropy_quotient(corpus, qq, name, quotient):
    gi, alpha, report = isotropy_quotient(corpus[name], qq)
    assert report.ok, report.failed_axioms()
    assert report.details["quotient_dimension"] == quotient
    assert report.details["kernel_dimension"] == CORPUS_DIMENSIONS[name] - quotient
    assert gi.n_arrows == quotient


def test_isotropy_hopf_algebra(band2_z2, qq):
    for x in band2_z2.objects:
        algebra, report = isotropy_hopf_algebra(band2_z2, x, qq)
        assert report.ok, report.failed_axioms()
        assert algebra.dimension == 2


def test_isotropy_conjugation_within_component(pair3, band2_z2, qq):
    _, _, report = isotropy_conjugation_iso(pair3, 0, 2, qq)
    assert report.ok
    conjugation, alpha, report = isotropy_conjugation_iso(band2_z2, 0, 1, qq)
    assert report.ok, report.failed_axioms()
    assert conjugation.is_bijective()
    assert alpha.total_map.shape == (2, 2)


def test_isotropy_conjugation_across_components(disjoint, qq):
    with pytest.raises(NonTransitiveError) as info:
        isotropy_conjugation_iso(disjoint, 0, 2, qq)
    assert info.value.components == [[0, 1], [2]]


@pytest.mark.parametrize("name,order", [("pair3", 1), ("band2_z2", 2), ("action_z3", 1), ("band2_s3", 6)])
def test_transitive_decomposition(corpus, qq, name, order):
    _, report = transitive_decomposition_iso(corpus[name], 0, qq)
    assert report.ok, report.failed_axioms()
    assert report.details["isotropy_order"] == order
    assert report.details["dimension"] == CORPUS_DIMENSIONS[name]


def test_transitive_decomposition_rejects_disconnected(disjoint, qq):
    with pytest.raises(NonTransitiveError) as info:
        transitive_decomposition_iso(disjoint, 0, qq)
    assert info.value.components == [[0, 1], [2]]


@pytest.mark.parametrize("name", sorted(CORPUS_DIMENSIONS))
def test_gt_matches_transitivity_and_isotropy_blocks(corpus, qq, name):
    g = corpus[name]
    report = gt_check(repfun_concrete(g, qq))
    assert report.details["faithfully_flat"] == is_transitive(g)
    for x in g.objects:
        algebra, block = isotropy_hopf_algebra(g, x, qq)
        assert block.ok, (name, x, block.failed_axioms())
        assert algebra.dimension == len(g.loops(x))
