import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from noarb.cones import (
    PolyhedralCone,
    SemiSolidSet,
    cone_member,
    is_bounded,
    minkowski,
    semisolid_member,
    sup_squared_norm,
    zero_set_trivial,
)
from noarb.errors import StructureError
from noarb.lattice import RandomVariable, SampleSpace

TWO = SampleSpace(["a", "b"], [F(1, 2), F(1, 2)])


def test_cone_membership_examples():
    cone = PolyhedralCone(TWO, [TWO.variable([1, -1])], includes_neg_orthant=True)
    assert cone_member(cone, TWO.variable([1, -2]))      # λ=1, w=(0,1)
    assert not cone_member(cone, TWO.variable([1, 0]))   # Farkas-backed "no"
    assert cone_member(cone, TWO.zero())


def test_cone_without_orthant_is_strict():
    cone = PolyhedralCone(TWO, [TWO.variable([1, -1])])
    assert cone_member(cone, TWO.variable([2, -2]))
    assert not cone_member(cone, TWO.variable([1, -2]))


def test_semisolid_membership_examples():
    B = SemiSolidSet(TWO, [TWO.variable([1, 1])])
    half = TWO.variable([F(1, 2), F(1, 2)])
    assert semisolid_member(B, half, 1)
    assert not semisolid_member(B, half, F(1, 4))   # needs Σλ ≥ 1/2
    assert not semisolid_member(B, TWO.variable([1, -1]), 1)


def test_semisolid_rejects_negative_generators():
    with pytest.raises(StructureError):
        SemiSolidSet(TWO, [TWO.variable([1, -1])])


def counterexample_set(n):
    space = SampleSpace.uniform(n)
    gens = [space.indicator(space.outcomes[k]).scale(k + 1) for k in range(n)]
    return space, SemiSolidSet(space, gens)


def test_minkowski_examples():
    space, B = counterexample_set(3)
    assert minkowski(B, space.zero()) == 0
    assert minkowski(B, space.indicator("w2")) == F(1, 2)
    assert minkowski(B, space.variable([1, 1, 0])) == F(3, 2)


def test_minkowski_infinite_off_support():
    B = SemiSolidSet(TWO, [TWO.variable([1, 0])])
    assert minkowski(B, TWO.variable([0, 1])) == math.inf
    assert minkowski(B, TWO.variable([-1, 0])) == math.inf
    assert zero_set_trivial(B)


def test_bound_report():
    assert is_bounded(SemiSolidSet(TWO, [TWO.variable([1, 1])])).sup_norm == 1
    assert is_bounded(SemiSolidSet(TWO, [])).sup_norm == 0
    _, B100 = counterexample_set(100)
    report = is_bounded(B100)
    assert report.bounded and report.sup_norm == 100
    assert sup_squared_norm(B100) == 10000


def test_zero_set_trivial_examples():
    B = SemiSolidSet(TWO, [TWO.variable([1, 1])])
    assert minkowski(B, TWO.indicator("a")) == 1
    assert minkowski(B, TWO.indicator("b")) == 1
    assert zero_set_trivial(B)


def test_empty_set_is_origin_only():
    B = SemiSolidSet(TWO, [])
    assert semisolid_member(B, TWO.zero(), 1)
    assert not semisolid_member(B, TWO.variable([F(1, 9), 0]), 1)
    assert minkowski(B, TWO.zero()) == 0


def random_semisolid(rng, space):
    gens = []
    for _ in range(rng.randint(1, 4)):
        gens.append(RandomVariable(
            space, [F(rng.randint(0, 6), rng.randint(1, 4)) for _ in space.outcomes]))
    return SemiSolidSet(space, gens)


def random_member(rng, bset):
    weights = [F(rng.randint(0, 5), 1) for _ in bset.generators]
    total = sum(weights) or F(1)
    lam = [w / total * F(rng.randint(0, 4), 4) for w in weights]
    dominating = bset.space.zero()
    for coef, g in zip(lam, bset.generators):
        dominating = dominating + g.scale(coef)
    shrink = [F(rng.randint(0, 4), 4) for _ in bset.space.outcomes]
    return RandomVariable(bset.space, [s * v for s, v in zip(shrink, dominating.values)])


def test_gauge_vs_membership_boundary():
    # lemma: αB = {gauge ≤ α} ∩ V₊ for α in (0,1); attainment makes it exact
    rng = random.Random(5)
    space = SampleSpace.uniform(3)
    for _ in range(40):
        B = random_semisolid(rng, space)
        x = random_member(rng, B) if rng.random() < 0.7 else RandomVariable(
            space, [F(rng.randint(0, 8), rng.randint(1, 3)) for _ in space.outcomes])
        alpha = F(rng.randint(1, 9), 10)
        gauge = minkowski(B, x)
        assert semisolid_member(B, x, alpha) == (gauge <= alpha)
        if gauge not in (0, math.inf):
            assert semisolid_member(B, x, gauge)            # infimum attained
            assert not semisolid_member(B, x, gauge / 2)


def test_gauge_monotone_and_homogeneous():
    rng = random.Random(6)
    space = SampleSpace.uniform(3)
    for _ in range(30):
        B = random_semisolid(rng, space)
        y = random_member(rng, B)
        x = RandomVariable(space, [v * F(rng.randint(0, 4), 4) for v in y.values])
        gx, gy = minkowski(B, x), minkowski(B, y)
        assert gx <= gy
        alpha = F(rng.randint(1, 8), rng.randint(1, 4))
        gax = minkowski(B, x.scale(alpha))
        if gx == math.inf:
            assert gax == math.inf
        else:
            assert gax == alpha * gx


def test_semisolidity_and_convexity_of_members():
    rng = random.Random(7)
    space = SampleSpace.uniform(4)
    for _ in range(30):
        B = random_semisolid(rng, space)
        x = random_member(rng, B)
        y = random_member(rng, B)
        assert semisolid_member(B, x, 1) and semisolid_member(B, y, 1)
        mid = RandomVariable(space, [(a + b) / 2 for a, b in zip(x.values, y.values)])
        assert semisolid_member(B, mid, 1)
        down = RandomVariable(space, [v * F(rng.randint(0, 3), 3) for v in x.values])
        assert semisolid_member(B, down, 1)


@settings(max_examples=40, deadline=None)
@given(scale=st.fractions(min_value=F(1, 6), max_value=4, max_denominator=6))
def test_gauge_values_on_and_off_the_set(scale):
    space, B = counterexample_set(2)
    x = space.variable([scale, 0])
    gauge = minkowski(B, x)
    inside = semisolid_member(B, x, 1)
    assert (gauge <= 1) == inside
    if not inside:
        assert gauge >= 1
