import random
from fractions import Fraction

import pytest

from conftest import load_metric
from fusionwitt.errors import CapExceededError
from fusionwitt.metric_group import direct_sum, gauss_sum, metric_group
from fusionwitt.witt import (
    IDENTITY_CLASS,
    IDENTITY_WORD,
    ISING_GENERATOR_WORD,
    WittWord,
    anisotropic_reduction,
    class_eq,
    class_inverse,
    class_multiply,
    class_order,
    from_ising_category,
    generated_subgroup,
    isotropic_elements,
    metric_iso,
    pointed_witt_class,
    reduce_once,
    word_compose,
    word_eq,
    word_inverse,
    word_is_identity,
    word_order,
)

F = Fraction


# ------------------------------------------------------------ reductions


def test_isotropic_elements_listing(semion, hyperbolic3):
    assert isotropic_elements(semion) == []
    iso = isotropic_elements(hyperbolic3)
    assert (1, 0) in iso and (0, 1) in iso
    assert all(hyperbolic3.q(x) == 0 and any(x) for x in iso)


def test_reduce_once_z8():
    z8 = load_metric("z8_sixteenth.mg")
    reduced = reduce_once(z8, (4,))
    assert reduced.orders == (2,)
    assert reduced.q((1,)) == F(1, 4)


def test_reduce_once_hyperbolic_kills_everything(hyperbolic3):
    reduced = reduce_once(hyperbolic3, (1, 0))
    assert reduced.size == 1
    assert gauss_sum(reduced).argument == gauss_sum(hyperbolic3).argument == 0


def test_reduce_once_rejects_bad_input(semion, hyperbolic3):
    with pytest.raises(ValueError):
        reduce_once(hyperbolic3, (0, 0))
    with pytest.raises(ValueError):
        reduce_once(hyperbolic3, (1, 1))  # q = 1/3, not isotropic
    degenerate = load_metric("z2_fermion_degenerate.mg")
    with pytest.raises(ValueError):
        reduce_once(degenerate, (1,))


def test_anisotropic_reduction_fixes_anisotropic(semion):
    rep, steps = anisotropic_reduction(semion)
    assert rep is semion
    assert steps == ()


def test_anisotropic_reduction_of_z8():
    z8 = load_metric("z8_sixteenth.mg")
    rep, steps = anisotropic_reduction(z8)
    assert rep.orders == (2,)
    assert rep.q((1,)) == F(1, 4)
    assert len(steps) == 1
    assert steps[0].orders_before == (8,)
    assert steps[0].chosen == (4,)
    assert steps[0].argument == F(1, 8)


def test_gauss_argument_constant_along_reduction():
    tower = direct_sum(load_metric("z4_eighth.mg"), load_metric("z2z2_hyperbolic.mg"))
    argument = gauss_sum(tower).argument
    rep, steps = anisotropic_reduction(tower)
    assert steps  # something reduced
    for step in steps:
        assert step.argument == argument
    assert gauss_sum(rep).argument == argument


# ---------------------------------------------------------- witt classes


def test_class_of_hyperbolic_is_identity(hyperbolic3):
    cls = pointed_witt_class(hyperbolic3)
    assert cls.is_identity()
    assert class_eq(cls, IDENTITY_CLASS)


def test_class_splits_by_prime(semion, z3_third):
    cls = pointed_witt_class(direct_sum(semion, z3_third))
    assert cls.primes == (2, 3)
    assert cls.part(2).orders == (2,)
    assert cls.part(3).orders == (3,)
    assert cls.part(5) is None


def test_odd_parts_have_small_representatives():
    for name in ("z3_third.mg", "z3_two_thirds.mg", "z5_fifth.mg", "z5_two_fifths.mg", "hyperbolic3.mg"):
        cls = pointed_witt_class(load_metric(name))
        for p, rep in cls.parts:
            assert rep.size in (p, p * p)


def test_class_rejects_degenerate():
    with pytest.raises(ValueError):
        pointed_witt_class(load_metric("z2_fermion_degenerate.mg"))


# ------------------------------------------------------------- metric_iso


def test_metric_iso_reflexive(semion, hyperbolic3):
    assert metric_iso(semion, semion) is not None
    assert metric_iso(hyperbolic3, hyperbolic3) is not None


def test_metric_iso_distinguishes_conjugates(semion, semion_bar):
    assert metric_iso(semion, semion_bar) is None


def test_metric_iso_nontrivial_generator_image():
    a = load_metric("z5_fifth.mg")
    b = metric_group((5,), [F(4, 5)])
    images = metric_iso(a, b)
    assert images is not None
    assert b.q(images[0]) == F(1, 5)
    assert metric_iso(a, load_metric("z5_two_fifths.mg")) is None


def test_metric_iso_respects_cross_terms():
    hyper = load_metric("z2z2_hyperbolic.mg")
    diag = load_metric("z2z2_diag.mg")
    assert metric_iso(hyper, diag) is None


# --------------------------------------------------------- group structure


def test_class_multiply_cancels_conjugates(z3_third, z3_two_thirds):
    c1 = pointed_witt_class(z3_third)
    c2 = pointed_witt_class(z3_two_thirds)
    assert class_eq(class_multiply(c1, c2), IDENTITY_CLASS)


def test_class_inverse(semion):
    c = pointed_witt_class(semion)
    assert class_eq(class_multiply(c, class_inverse(c)), IDENTITY_CLASS)


def test_class_orders(semion, z3_third, hyperbolic3):
    assert class_order(pointed_witt_class(semion)) == 8
    assert class_order(pointed_witt_class(z3_third)) == 4
    assert class_order(pointed_witt_class(load_metric("z5_fifth.mg"))) == 2
    assert class_order(pointed_witt_class(hyperbolic3)) == 1


def test_class_order_cap(semion):
    with pytest.raises(CapExceededError):
        class_order(pointed_witt_class(semion), cap=3)


def test_generated_subgroup_z4(z3_third, z3_two_thirds):
    sub = generated_subgroup([pointed_witt_class(z3_third), pointed_witt_class(z3_two_thirds)])
    assert sub.order == 4
    assert sub.invariant_factors == (4,)
    assert sub.name() == "Z4"
    assert sub.elements[0].is_identity()
    for j in range(sub.order):
        assert sub.table[0][j] == j


def test_generated_subgroup_closure_cap(z3_third):
    with pytest.raises(CapExceededError):
        generated_subgroup([pointed_witt_class(z3_third)], cap=3)


def test_randomized_choices_reach_the_same_class():
    tower = direct_sum(load_metric("z4_eighth.mg"), load_metric("z2z2_hyperbolic.mg"))
    baseline = pointed_witt_class(tower)
    for seed in range(5):
        rng = random.Random(seed)
        cls = pointed_witt_class(tower, choose=rng.choice)
        assert class_eq(cls, baseline)


# ------------------------------------------------------------------ words


def test_identity_word():
    assert word_is_identity(IDENTITY_WORD)
    assert word_order(IDENTITY_WORD) == 1


def test_ising_generator_has_order_sixteen():
    assert word_order(ISING_GENERATOR_WORD) == 16


def test_ising_categories_carry_odd_exponents():
    for e in range(1, 16, 2):
        w = from_ising_category(e)
        assert w.ising_exponent == e
    for e in (0, 2, 8, 16, -1):
        with pytest.raises(ValueError):
            from_ising_category(e)


def test_word_composition_wraps_mod_sixteen():
    w = word_compose(from_ising_category(9), from_ising_category(7))
    assert w.ising_exponent == 0
    assert word_is_identity(w)


def test_word_with_pointed_part(semion):
    w = WittWord(pointed=pointed_witt_class(semion), ising_exponent=2)
    assert word_order(w) == 8
    assert word_eq(w, w)
    assert not word_eq(w, ISING_GENERATOR_WORD)
    assert word_is_identity(word_compose(w, word_inverse(w)))


def test_word_equality_is_formal(semion):
    # same exponent, different pointed parts: formally different
    w1 = WittWord(pointed=pointed_witt_class(semion), ising_exponent=3)
    w2 = WittWord(pointed=IDENTITY_CLASS, ising_exponent=3)
    assert not word_eq(w1, w2)
