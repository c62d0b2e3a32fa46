import math
import random
from fractions import Fraction as F

from noarb import lab
from noarb.concepts import emm_budget_check, full_verdict
from noarb.market import Measure, find_emm, in_budget_set, superreplication_price


def test_binomial_all_true(binomial):
    v = full_verdict(binomial)
    assert v.agree and v.na
    assert v.as_dict() == {k: True for k in v.as_dict()}


def test_dominance_all_false(dominance):
    v = full_verdict(dominance)
    assert v.agree and not v.na
    assert v.nfl_equiv is False


def test_constant_asset_all_true(constant_market):
    assert full_verdict(constant_market).na


def test_two_period_agreement(two_period):
    assert full_verdict(two_period).agree


def test_emm_budget_check(binomial):
    q = find_emm(binomial).measure
    assert emm_budget_check(binomial, q)
    assert emm_budget_check(binomial, Measure(binomial.space, [F(1, 2), F(1, 2)]))


def test_emm_budget_check_unbounded(dominance):
    q = Measure(dominance.space, [F(1, 2), F(1, 2)])
    assert not emm_budget_check(dominance, q)


def test_zero_gauge_set_equals_all_levels_intersection():
    # points of gauge zero are exactly the points inside every budget level
    rng = random.Random(17)
    for _ in range(25):
        model = lab.random_market(rng, max_outcomes=4, max_periods=2)
        x = lab.random_point(rng, model.space)
        price = superreplication_price(model, x).price
        in_all = all(in_budget_set(model, x, F(1, d)) for d in (1, 7, 101))
        gauge_zero = price <= 0 or price == -math.inf
        if x.is_zero:
            assert in_all
            continue
        if gauge_zero:
            assert in_all
        else:
            assert not in_budget_set(model, x, price / 2)
            assert in_budget_set(model, x, price)


def test_randomized_agreement_sample():
    rng = random.Random(99)
    for _ in range(60):
        model = lab.random_market(rng, max_outcomes=6, max_periods=2)
        assert full_verdict(model).agree
