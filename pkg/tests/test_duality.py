"""
Θ、Ω、𝓕、三角恒等式、hom 集双射以及往返检查的测试。
"""

import pytest

from groupoid_duality.algebra import FieldSpec
from groupoid_duality.duality import (
    comodule_from_rep,
    duality_bijection_check,
    f_functor,
    omega,
    omega_naturality,
    omega_oracle,
    reconstruction_check,
    round_trip,
    theta,
    theta_naturality,
    triangle_one,
    triangle_two,
)
from groupoid_duality.duality.round_trip import GT_CAVEAT
from groupoid_duality.errors import GuardExceededError, MalformedInputError
from groupoid_duality.models.hopf import HopfAlgebroid
from groupoid_duality.repfun import function_hopf_algebra, repfun_concrete
from groupoid_duality.repfun.concrete import precomposition_morphism
from groupoid_duality.storage.json_storage import load_json_file
from groupoid_duality.tools.groupoid_tools import (
    action_projection,
    band_automorphism,
    band_groupoid,
    cyclic_group,
    diagonal_embedding,
    pair_groupoid,
    translation_action,
    unit_groupoid,
)
from groupoid_duality.tools.hopf_tools import build_character_groupoid, trivial_comodule, validate_comodule
from groupoid_duality.tools.representation_tools import regular_rep, spanning_family, trivial_rep
from tests.conftest import DATA_DIR
from tests.test_representation import scaled_rep, sign_rep

QQ = FieldSpec.rational()
TRANSITIVE = ["unit3", "pair2", "pair3", "band2_z2", "action_z3"]


# ========================
# Θ
# ========================

@pytest.mark.parametrize("name", ["unit3", "pair2", "pair3", "band2_z2", "band2_s3", "action_z3", "disjoint_pair2_z2"])
def test_theta_is_isomorphism(corpus, qq, name):
    g = corpus[name]
    morphism, report = theta(g, qq)
    assert report.ok, report.failed_axioms()
    assert report.details["theta_iso"]
    assert report.details["arrows"] == [g.n_arrows, g.n_arrows]
    assert morphism.is_bijective()


def test_theta_over_prime_field(band2_z2, f5):
    _, report = theta(band2_z2, f5)
    assert report.details["theta_iso"]


@pytest.mark.parametrize(
    "phi",
    [
        diagonal_embedding(2),
        action_projection(cyclic_group(3), translation_action(cyclic_group(3)), 3),
        band_automorphism(2, cyclic_group(2), [1, 0]),
    ],
    ids=["diagonal", "projection", "band_swap"],
)
def test_theta_naturality(qq, phi):
    assert theta_naturality(phi, qq).ok


# ========================
# Ω
# ========================

@pytest.mark.parametrize("name", TRANSITIVE + ["disjoint_pair2_z2"])
def test_omega_is_bijective(corpus, qq, name):
    h = repfun_concrete(corpus[name], qq)
    alpha, report = omega(h)
    assert report.ok, report.failed_axioms()
    assert report.details["bijective"]
    assert alpha.target.dimension == h.dimension


@pytest.mark.parametrize("name", ["pair2", "band2_z2", "action_z3", "disjoint_pair2_z2"])
def test_omega_agrees_with_coend_route(corpus, qq, name):
    report = omega_oracle(corpus[name], qq)
    assert report.ok, report.failed_axioms()
    assert report.details["coefficients"] >= repfun_concrete(corpus[name], qq).dimension


def test_omega_oracle_needs_spanning_family(z2, qq):
    report = omega_oracle(z2, qq, family=[trivial_rep(z2, qq)])
    assert report.failed_axioms() == ["oracle_spanning"]


def test_omega_on_sample_file(qq):
    h = HopfAlgebroid.from_dict(load_json_file(str(DATA_DIR / "hopf" / "k_z2.json")))
    alpha, report = omega(h)
    assert report.ok
    assert report.details["bijective"]


@pytest.mark.parametrize(
    "phi",
    [diagonal_embedding(2), band_automorphism(2, cyclic_group(2), [1, 0])],
    ids=["diagonal", "band_swap"],
)
def test_omega_naturality(qq, phi):
    alpha = precomposition_morphism(phi, qq)
    assert omega_naturality(alpha).ok


# ========================
# 三角恒等式
# ========================

@pytest.mark.parametrize("name", TRANSITIVE)
def test_triangles_on_transitive_groupoids(corpus, qq, name):
    g = corpus[name]
    assert triangle_one(g, qq).ok
    assert triangle_two(repfun_concrete(g, qq)).ok


def test_triangles_over_prime_field(pair3, f5):
    assert triangle_one(pair3, f5).ok
    assert triangle_two(repfun_concrete(pair3, f5)).ok


def test_triangle_two_on_group_algebra(qq, z3):
    assert triangle_two(function_hopf_algebra(z3, qq)).ok


# ========================
# 余模与 𝓕
# ========================

def test_reconstruction_of_representations(qq, z2, pair2):
    for g, e in [(z2, sign_rep(z2, qq)), (z2, regular_rep(z2, qq)), (pair2, scaled_rep(pair2, qq))]:
        h = repfun_concrete(g, qq)
        chars = build_character_groupoid(h)
        theta_g, _ = theta(g, qq, h, chars)
        comodule = comodule_from_rep(e, h)
        assert comodule.rank == e.rank
        assert validate_comodule(comodule).ok
        assert reconstruction_check(e, theta_g, chars).ok


def test_f_functor_keeps_rank(band2_z2, qq):
    h = repfun_concrete(band2_z2, qq)
    chars = build_character_groupoid(h)
    for e in spanning_family(band2_z2, qq):
        rep = f_functor(comodule_from_rep(e, h), chars)
        assert rep.rank == e.rank
        assert rep.groupoid == chars.groupoid


def test_f_functor_rejects_broken_comodule(z2, qq):
    h = repfun_concrete(z2, qq)
    broken = trivial_comodule(h).with_entry(0, 0, {})
    with pytest.raises(MalformedInputError):
        f_functor(broken, build_character_groupoid(h))


# ========================
# hom 集双射
# ========================

@pytest.mark.parametrize(
    "h,g,count",
    [
        (function_hopf_algebra(cyclic_group(2), QQ), cyclic_group(2), 2),
        (function_hopf_algebra(cyclic_group(2), QQ), cyclic_group(3), 1),
        (repfun_concrete(pair_groupoid(2), QQ), unit_groupoid(1), 2),
        (repfun_concrete(band_groupoid(2, cyclic_group(2)), QQ), cyclic_group(2), 4),
    ],
    ids=["z2_z2", "z3_z2", "point_pair2", "z2_band"],
)
def test_duality_bijection_counts(h, g, count):
    report = duality_bijection_check(h, g)
    assert report.ok, report.failed_axioms()
    assert report.details == {"morphisms": count, "verified": count, "distinct_images": count}


def test_duality_bijection_guard(corpus, qq):
    with pytest.raises(GuardExceededError):
        duality_bijection_check(repfun_concrete(pair_groupoid(2), qq), corpus["band2_s3"], guard=10)


# ========================
# 往返
# ========================

def test_round_trip_row(pair2, qq):
    row, report = round_trip(pair2, qq)
    assert report.ok, report.failed_axioms()
    assert not report.warnings
    assert row == {
        "groupoid": pair2.name,
        "theta_iso": True,
        "triangle_one": True,
        "triangle_two": True,
        "gt_check": True,
        "transitive": True,
        "dims": {"objects": 2, "arrows": 4, "total": 4, "characters": 4},
    }


def test_round_trip_on_disconnected_groupoid(disjoint, qq):
    row, report = round_trip(disjoint, qq)
    assert report.ok, report.failed_axioms()
    assert row["theta_iso"]
    assert row["gt_check"] is False
    assert row["transitive"] is False
    caveat = report.first("gt_caveat")
    assert caveat.severity == "warning"
    assert caveat.message == GT_CAVEAT


def test_round_trip_on_unit_groupoid(qq):
    row, report = round_trip(unit_groupoid(2), qq)
    assert report.ok
    assert row["dims"]["characters"] == 2
    assert report.has(["gt_caveat"])
