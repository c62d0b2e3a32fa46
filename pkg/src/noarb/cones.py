"""Polyhedral cones and semi-solid sets, with every decision made by LP.

Two finite generator representations cover all the set machinery this
library needs:

* ``PolyhedralCone`` is the conic hull of finitely many generators,
  optionally widened by subtracting the whole nonnegative orthant.
* ``SemiSolidSet`` is the downward closure, within the nonnegative orthant,
  of all sub-convex combinations of finitely many nonnegative generators
  (``x ≥ 0`` with ``x ≤ Σ λ_g·g``, ``λ ≥ 0``, ``Σ λ_g ≤ 1``).  Such a set is
  convex and semi-solid, and its Minkowski gauge is computed exactly as the
  value of a small LP.

Both sets are closed polyhedra, so every infimum below is attained and the
boundary convention ``gauge(x) ≤ 1  ⟺  x ∈ B`` is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence, Union

from . import lp
from .errors import StructureError
from .lattice import RandomVariable, SampleSpace
from .rationals import as_fraction

Gauge = Union[Fraction, float]  # exact value, or math.inf when nothing dominates x

_ZERO = Fraction(0)


@dataclass(frozen=True)
class PolyhedralCone:
    """Conic hull of ``generators``; subtracts the orthant when flagged.

    The represented set is {Σ λ_g·g : λ ≥ 0}, minus {w ≥ 0} when
    ``includes_neg_orthant`` is set.  Zero generators are legal and harmless.
    """

    space: SampleSpace
    generators: tuple[RandomVariable, ...]
    includes_neg_orthant: bool = False

    def __init__(self, space: SampleSpace, generators: Sequence[RandomVariable],
                 includes_neg_orthant: bool = False) -> None:
        gens = tuple(generators)
        for g in gens:
            if g.space != space:
                raise StructureError("cone generator on a different sample space")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "includes_neg_orthant", bool(includes_neg_orthant))


@dataclass(frozen=True)
class SemiSolidSet:
    """Downward closure in V₊ of the sub-convex hull of nonnegative generators."""

    space: SampleSpace
    generators: tuple[RandomVariable, ...]

    def __init__(self, space: SampleSpace, generators: Sequence[RandomVariable]) -> None:
        gens = tuple(generators)
        for g in gens:
            if g.space != space:
                raise StructureError("generator on a different sample space")
            if not g.is_nonneg:
                raise StructureError("semi-solid sets require nonnegative generators")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "generators", gens)


class BoundReport(NamedTuple):
    bounded: bool
    sup_norm: Fraction


def _check_space(container, x: RandomVariable) -> None:
    if x.space != container.space:
        raise StructureError("point lives on a different sample space")


def cone_member(cone: PolyhedralCone, x: RandomVariable) -> bool:
    """Decide x = Σ λ_g·g − w with λ ≥ 0 and w ≥ 0 (w = 0 without the orthant)."""
    _check_space(cone, x)
    n = len(cone.space)
    gens = cone.generators
    cols = len(gens) + (n if cone.includes_neg_orthant else 0)
    rows = []
    for i in range(n):
        row = [g.values[i] for g in gens]
        if cone.includes_neg_orthant:
            row += [Fraction(-1) if k == i else _ZERO for k in range(n)]
        rows.append(row)
    problem = lp.LpProblem([0] * cols, rows, ["=="] * n, list(x.values))
    return lp.feasible(problem).feasible


def semisolid_member(bset: SemiSolidSet, x: RandomVariable, scale=1) -> bool:
    """Decide x ∈ scale·B: x ≥ 0 and x ≤ Σ λ_g·g with λ ≥ 0, Σ λ_g ≤ scale."""
    _check_space(bset, x)
    scale = as_fraction(scale)
    if scale <= 0:
        raise StructureError("scale must be > 0")
    if not x.is_nonneg:
        return False
    gens = bset.generators
    n = len(bset.space)
    rows = [[g.values[i] for g in gens] for i in range(n)]
    rows.append([Fraction(1)] * len(gens))
    rels = [">="] * n + ["<="]
    rhs = list(x.values) + [scale]
    problem = lp.LpProblem([0] * len(gens), rows, rels, rhs)
    return lp.feasible(problem).feasible


def minkowski(bset: SemiSolidSet, x: RandomVariable) -> Gauge:
    """Gauge of B at x: the least α ≥ 0 with x ∈ αB, or +inf when there is none.

    Computed as min Σ λ_g subject to 0 ≤ x ≤ Σ λ_g·g, λ ≥ 0; the minimum is
    attained because B is a closed polyhedron.  Read as the minimal
    superreplication price of x out of the budget set B.
    """
    _check_space(bset, x)
    if not x.is_nonneg:
        return math.inf
    gens = bset.generators
    n = len(bset.space)
    rows = [[g.values[i] for g in gens] for i in range(n)]
    problem = lp.LpProblem([1] * len(gens), rows, [">="] * n, list(x.values), sense="min")
    outcome = lp.solve(problem)
    if outcome.status != lp.OPTIMAL:
        return math.inf
    return outcome.objective_value


def is_bounded(bset: SemiSolidSet) -> BoundReport:
    """Finite generator sets are always bounded; returns the exact sup-norm bound."""
    best = _ZERO
    for g in bset.generators:
        best = max(best, max(g.values, default=_ZERO))
    return BoundReport(True, best)


def sup_squared_norm(bset: SemiSolidSet) -> Fraction:
    """Exact sup of Σ x_ω² over B.

    For 0 ≤ x ≤ Σ λ_g·g with Σ λ ≤ 1 the Euclidean norm is dominated by
    max_g ‖g‖, and each generator is itself a member, so the sup is the
    largest generator norm (attained at a vertex).
    """
    best = _ZERO
    for g in bset.generators:
        best = max(best, sum((v * v for v in g.values), _ZERO))
    return best


def zero_set_trivial(bset: SemiSolidSet) -> bool:
    """True iff the gauge is positive on every nonzero nonnegative point.

    By monotonicity and homogeneity of the gauge it is enough to check the
    outcome indicators; equivalently ⋂_{α>0} αB = {0}.
    """
    return all(_positive_gauge(minkowski(bset, e)) for e in bset.space.indicators())


def _positive_gauge(value: Gauge) -> bool:
    return value == math.inf or value > 0
