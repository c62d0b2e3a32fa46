"""Constructive separating functionals for polyhedral payoff cones.

On a finite outcome space every linear functional is a coefficient vector,
so separation becomes a small LP: find nonnegative coefficients that are
nonpositive on every cone generator yet positive at a target.  A strictly
positive separator is assembled the same way a countable dense family would
be in general spaces: separate each outcome indicator, normalize, average.
All certificates are re-verified by exact substitution before being
returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import lp
from .cones import PolyhedralCone
from .errors import ContractViolation, InternalInconsistency, StructureError
from .lattice import RandomVariable, SampleSpace
from .market import Measure
from .rationals import as_fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class Functional:
    """Element of the dual space: acts on x as Σ_ω coefficients_ω · x_ω."""

    space: SampleSpace
    coefficients: tuple[Fraction, ...]

    def __init__(self, space: SampleSpace, coefficients) -> None:
        coeffs = tuple(as_fraction(c) for c in coefficients)
        if len(coeffs) != len(space):
            raise StructureError("one coefficient per outcome required")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "coefficients", coeffs)

    def __call__(self, x: RandomVariable) -> Fraction:
        if x.space != self.space:
            raise StructureError("argument on a different sample space")
        return sum((c * v for c, v in zip(self.coefficients, x.values)), _ZERO)

    @property
    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.coefficients)

    @property
    def is_strictly_positive(self) -> bool:
        return all(c > 0 for c in self.coefficients)

    def l1_norm(self) -> Fraction:
        return sum((abs(c) for c in self.coefficients), _ZERO)


@dataclass(frozen=True)
class SeparationReport:
    functional: Functional
    verified_on: int
    normalization: Fraction


@dataclass(frozen=True)
class StrictSeparation:
    report: Optional[SeparationReport] = None
    violating: Optional[RandomVariable] = None

    @property
    def functional(self) -> Optional[Functional]:
        return self.report.functional if self.report else None


def _require_widened(cone: PolyhedralCone) -> None:
    if not cone.includes_neg_orthant:
        raise StructureError(
            "separation requires a cone that already contains the negative orthant")


def _is_separating(cone: PolyhedralCone, functional: Functional) -> bool:
    return functional.is_positive and all(functional(g) <= 0 for g in cone.generators)


def separate_at(cone: PolyhedralCone, target: RandomVariable) -> Optional[Functional]:
    """A positive functional vanishing-or-negative on the cone and equal to 1
    at the target, or None exactly when the target lies in the (closed) cone.

    Positivity comes for free because the cone contains −V₊, but it is
    enforced as a variable bound and re-checked on the way out.
    """
    _require_widened(cone)
    if target.space != cone.space:
        raise StructureError("target on a different sample space")
    if not target.is_nonneg or target.is_zero:
        raise ContractViolation("separation target must be nonnegative and nonzero")
    n = len(cone.space)
    rows = [list(g.values) for g in cone.generators]
    rels = ["<="] * len(rows)
    rhs = [_ZERO] * len(rows)
    rows.append(list(target.values))
    rels.append("<=")
    rhs.append(_ONE)
    problem = lp.LpProblem(list(target.values), rows, rels, rhs)
    outcome = lp.solve(problem)
    if outcome.status != lp.OPTIMAL:
        raise InternalInconsistency("separation LP must have optimum 0 or 1",
                                    cone=cone, target=target, outcome=outcome)
    if outcome.objective_value == 0:
        return None
    if outcome.objective_value != 1:
        raise InternalInconsistency("separation LP produced a value other than 0 or 1",
                                    cone=cone, target=target, outcome=outcome)
    functional = Functional(cone.space, outcome.primal)
    if not _is_separating(cone, functional) or functional(target) != 1:
        raise InternalInconsistency("separator failed re-verification",
                                    cone=cone, target=target, functional=functional)
    return functional


def strict_separator(cone: PolyhedralCone) -> StrictSeparation:
    """A strictly positive separating functional, or a violating direction.

    Separates every outcome indicator, rescales each separator to unit ℓ¹
    norm, and averages: the average stays nonpositive on all generators by
    convexity and is positive in every coordinate because the ω-th summand
    is.  The first indicator that cannot be separated is returned as the
    violating direction (it lies inside the cone).
    """
    _require_widened(cone)
    space = cone.space
    parts = []
    for e in space.indicators():
        functional = separate_at(cone, e)
        if functional is None:
            return StrictSeparation(violating=e)
        parts.append(functional)
    n = len(space)
    avg = [_ZERO] * n
    for f in parts:
        norm = f.l1_norm()
        for i, c in enumerate(f.coefficients):
            avg[i] += c / (norm * n)
    functional = Functional(space, avg)
    if not functional.is_strictly_positive or not _is_separating(cone, functional):
        raise InternalInconsistency("averaged separator failed re-verification",
                                    cone=cone, functional=functional)
    report = SeparationReport(functional=functional,
                              verified_on=len(cone.generators),
                              normalization=functional.l1_norm())
    return StrictSeparation(report=report)


def functional_to_measure(functional: Functional) -> tuple[Measure, Fraction]:
    """Represent a strictly positive functional as c·E_Q, with Q a probability
    measure of full support: q_ω = coeff_ω / Σ coeff and c = Σ coeff."""
    if not functional.is_strictly_positive:
        raise ContractViolation("only strictly positive functionals induce equivalent measures")
    total = sum(functional.coefficients, _ZERO)
    measure = Measure(functional.space, [c / total for c in functional.coefficients])
    return measure, total
