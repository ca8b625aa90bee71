"""Identity engine: evaluation, verification, registry, mutation checks."""

from __future__ import annotations

import random
from dataclasses import replace
from fractions import Fraction

import pytest

from qrsl import (
    BIVARIATE_NAMES,
    ConstAtom,
    IdentitySpec,
    MonomialAtom,
    PochFactorSpec,
    PochInfAtom,
    ProductSideSpec,
    ResidueAtom,
    Series,
    SumSideSpec,
    bivariate_sides,
    builtin,
    builtin_registry,
    count_gap2,
    eval_product_side,
    eval_sum_side,
    verify_a1_specialization,
    verify_bivariate_relation,
    verify_combination,
    verify_identity,
)
from qrsl.identities import LinExpr, lin, quad

from _specgen import mutate_spec


def test_registry_size_and_names():
    specs = builtin_registry()
    assert len(specs) == 12
    assert [s.name for s in specs] == [
        "rr1", "rr2", "ram12", "slater110", "slater125", "slater124",
        "ram36", "new36", "m18-1", "m18-2", "m18-3", "m18-4",
    ]


def test_registry_new36_shape():
    spec = builtin("new36")
    assert spec.lhs.lead == quad(2, 2, 0)
    nums = [f for f in spec.lhs.factors if not f.denominator]
    dens = [f for f in spec.lhs.factors if f.denominator]
    assert len(nums) == 1 and nums[0].base.at(0) == 3 and nums[0].step == 6
    assert {(f.base.c0, f.step, (f.length.c1, f.length.c0)) for f in dens} == {
        (2, 2, (2, 0)),
        (1, 2, (1, 1)),
    }
    atom = spec.rhs.atoms[0]
    assert atom.w_exp == 18 and atom.x_exp == 1


def test_registry_m18_4_shifted_base():
    spec = builtin("m18-4")
    shifted = [f for f in spec.lhs.factors if f.base.c1 == 1]
    assert len(shifted) == 1
    f = shifted[0]
    assert f.base == LinExpr(1, 2) and f.step == 1 and f.length == LinExpr(1, 1)
    assert f.denominator


def test_sum_side_examples():
    spec = builtin("rr1")
    s = eval_sum_side(spec.lhs, 9)
    # partitions with gaps >= 2: (9),(8,1),(7,2),(6,3),(5,3,1)
    assert s.coeff(9) == 5 == count_gap2(9, 1)
    assert eval_sum_side(spec.lhs, 0).coeff(0) == 1
    m18_1 = builtin("m18-1")
    assert eval_sum_side(m18_1.lhs, 0) .coeff(0) == 1  # j=0 term is 1


def test_product_side_examples():
    for spec in builtin_registry():
        assert eval_product_side(spec.rhs, 0).coeff(0) == 1
    assert eval_product_side(builtin("ram36").rhs, 2).coeff(2) == 1
    assert eval_product_side(builtin("m18-3").rhs, 3).coeff(3) == 1


def test_every_builtin_verifies():
    for spec in builtin_registry():
        rep = verify_identity(spec, 80)
        assert rep.passed, (spec.name, rep.mismatch)
        assert rep.mismatch is None
        assert rep.status == "pass"


def test_identity_at_order_zero():
    for spec in builtin_registry():
        assert verify_identity(spec, 0).passed


def test_wrong_residues_fail_at_n1():
    spec = builtin("rr1")
    bad = replace(spec, rhs=ProductSideSpec((ResidueAtom(5, frozenset({2, 3})),)))
    rep = verify_identity(bad, 30)
    assert not rep.passed
    assert rep.mismatch == (1, Fraction(1), Fraction(0))


def test_order_monotonicity_by_truncation():
    for name in ("rr1", "new36", "m18-4"):
        spec = builtin(name)
        lhs = eval_sum_side(spec.lhs, 40)
        rhs = eval_product_side(spec.rhs, 40)
        for m in (0, 13, 27):
            assert lhs.truncate(m) == eval_sum_side(spec.lhs, m)
            assert rhs.truncate(m) == eval_product_side(spec.rhs, m)


def test_report_serialization():
    rep = verify_identity(builtin("rr2"), 12)
    rec = rep.to_record()
    assert rec["name"] == "rr2" and rec["order"] == 12
    assert rec["status"] == "pass" and rec["mismatch"] is None
    assert isinstance(rec["millis"], int)
    bad = replace(
        builtin("rr1"),
        rhs=ProductSideSpec((ResidueAtom(5, frozenset({2, 3})),)),
    )
    rec = verify_identity(bad, 12).to_record()
    assert rec["mismatch"] == {"n": 1, "lhs": "1", "rhs": "0"}


def test_nonterminating_lead_rejected():
    spec = SumSideSpec(0, quad(0, 0, 1), ())
    with pytest.raises(ValueError):
        eval_sum_side(spec, 5)


def test_zero_denominator_detected():
    spec = SumSideSpec(
        0, quad(1, 0, 0), (PochFactorSpec(1, lin(0, 0), 1, lin(0, 2), True),)
    )
    with pytest.raises(ZeroDivisionError):
        eval_sum_side(spec, 5)


def test_dipping_lead_still_complete():
    # lead 2j^2-3j+2 dips between j=0 and j=2; every term with lead <= N
    # must still be collected
    spec = SumSideSpec(0, quad(2, -3, 2), ())
    s = eval_sum_side(spec, 2)
    # j=0 -> q^2, j=1 -> q^1, j=2 -> q^4 (dropped at N=2)
    assert list(s.coeffs) == [0, 1, 1]


def test_monomial_and_const_atoms():
    side = ProductSideSpec(
        (ConstAtom(3), MonomialAtom(2), ConstAtom(2, denominator=True))
    )
    s = eval_product_side(side, 4)
    assert s == Series.monomial(2, 4, Fraction(3, 2))


def test_shift_metadata_in_comparison():
    # sum_j q^(j+1)/(q;q)_j counts all partitions with weight bumped by
    # one, so it matches the plain partition series at index n-1
    lhs = SumSideSpec(
        0, quad(0, 1, 1), (PochFactorSpec(1, lin(0, 1), 1, lin(1, 0), True),)
    )
    spec = IdentitySpec(
        "shift-demo",
        lhs,
        ProductSideSpec((PochInfAtom(1, 1, 1, denominator=True),), shift=1),
    )
    assert verify_identity(spec, 20).passed
    unshifted = replace(spec, rhs=replace(spec.rhs, shift=0))
    assert not verify_identity(unshifted, 20).passed


# -- bivariate relations ------------------------------------------------------


def test_bivariate_relations_pass():
    for name in BIVARIATE_NAMES:
        rep = verify_bivariate_relation(name, 30)
        assert rep.passed, (name, rep.mismatch, rep.mismatch_a_deg)


def test_bivariate_unknown_name():
    with pytest.raises(ValueError):
        verify_bivariate_relation("nope", 10)


def test_bivariate_sides_triangular():
    for name in BIVARIATE_NAMES:
        lhs, rhs = bivariate_sides(name, 24)
        assert lhs.is_triangular(), name
        assert rhs.is_triangular(), name


def test_a1_specializations():
    for name in ("arr2", "arr1", "aram12", "aslater110"):
        rep = verify_a1_specialization(name, 30)
        assert rep.passed, (name, rep.mismatch)


def test_f_qde_interpretations():
    # adding one to every part of a gap->=2 partition kills the ones and
    # preserves the gap condition; checked through the registry helpers
    from qrsl.registry import gen_all, gen_no_ones

    f2 = gen_all(20)
    f1 = gen_no_ones(20)
    assert f1 == f2.subst_aq(1)
    # row l counts the gap->=2 partitions with exactly l parts:
    # 9 = (9) | (8,1),(7,2),(6,3) | (5,3,1)
    assert f2.coeff(1, 9) == 1
    assert f2.coeff(2, 9) == 3
    assert f2.coeff(3, 9) == 1


# -- the combination -----------------------------------------------------------


def test_combination_routes():
    assert verify_combination(100, "sum").passed
    assert verify_combination(100, "product").passed
    rep = verify_combination(100, "both")
    assert rep.passed and rep.name == "mod36-combination"
    assert verify_combination(0).passed
    with pytest.raises(ValueError):
        verify_combination(10, "sideways")


# -- mutation sensitivity --------------------------------------------------------


def test_single_site_mutations_all_fail():
    rng = random.Random(61803)
    specs = builtin_registry()
    for i in range(24):
        spec = specs[i % len(specs)]
        mutant = mutate_spec(spec, rng)
        rep = verify_identity(mutant, 60)
        assert not rep.passed, (spec.name, mutant)
