"""Finite filtered markets: strategies, arbitrage deciders, martingale
measures and superreplication prices.

A market is a finite filtered sample space together with nonnegative,
adapted asset paths.  Trading strategies are predictable (holdings over
(t−1, t] are constant on each information cell at t−1), and the zero-wealth
payoff cone is spanned exactly by the ± elementary one-period, one-cell,
one-asset gains.  Every decider below reduces to one exact LP, and every
witness it returns is re-verified by direct substitution before being
handed back.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from . import lp
from .cones import PolyhedralCone
from .errors import ContractViolation, InternalInconsistency, StructureError
from .lattice import RandomVariable, SampleSpace
from .rationals import as_fraction

Price = Union[Fraction, float]  # exact, or ±inf sentinels

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class Filtration:
    """Refining partitions of the outcome set, trivial at 0, discrete at T."""

    space: SampleSpace
    partitions: tuple[tuple[tuple[int, ...], ...], ...]

    def __init__(self, space: SampleSpace, partitions) -> None:
        parts = []
        for t, cells in enumerate(partitions):
            level = []
            seen: set[int] = set()
            for cell in cells:
                idx = tuple(sorted(
                    o if isinstance(o, int) else space.index(o) for o in cell))
                if not idx:
                    raise StructureError(f"empty cell in partition at t={t}")
                if seen.intersection(idx):
                    raise StructureError(f"overlapping cells in partition at t={t}")
                seen.update(idx)
                level.append(idx)
            if seen != set(range(len(space))):
                raise StructureError(f"partition at t={t} does not cover all outcomes")
            parts.append(tuple(sorted(level)))
        if not parts:
            raise StructureError("a filtration needs at least the t=0 partition")
        if len(parts[0]) != 1:
            raise StructureError("partition at t=0 must be trivial")
        if len(parts[-1]) != len(space):
            raise StructureError("partition at T must separate all outcomes")
        for t in range(len(parts) - 1):
            coarse = {o: k for k, cell in enumerate(parts[t]) for o in cell}
            for cell in parts[t + 1]:
                if len({coarse[o] for o in cell}) != 1:
                    raise StructureError(f"partition at t={t + 1} does not refine t={t}")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "partitions", tuple(parts))

    @property
    def horizon(self) -> int:
        return len(self.partitions) - 1

    @classmethod
    def single_period(cls, space: SampleSpace) -> "Filtration":
        everything = tuple(range(len(space)))
        return cls(space, [[everything], [(i,) for i in everything]])


@dataclass(frozen=True)
class Asset:
    """A named, adapted, nonnegative price path (one value per outcome per t)."""

    name: str
    path: tuple[RandomVariable, ...]


@dataclass(frozen=True)
class MarketModel:
    filtration: Filtration
    assets: tuple[Asset, ...]

    def __init__(self, filtration: Filtration, assets: Sequence[Asset]) -> None:
        assets = tuple(assets)
        if not assets:
            raise StructureError("a market needs at least one asset")
        space = filtration.space
        T = filtration.horizon
        names = [a.name for a in assets]
        if len(set(names)) != len(names):
            raise StructureError("asset names must be unique")
        for asset in assets:
            if len(asset.path) != T + 1:
                raise StructureError(
                    f"asset {asset.name!r} has {len(asset.path)} prices, expected {T + 1}")
            for t, x in enumerate(asset.path):
                if x.space != space:
                    raise StructureError(f"asset {asset.name!r} priced on a different space")
                if not x.is_nonneg:
                    raise StructureError(f"asset {asset.name!r} has a negative price at t={t}")
                for cell in filtration.partitions[t]:
                    vals = {x.values[i] for i in cell}
                    if len(vals) != 1:
                        raise StructureError(
                            f"asset {asset.name!r} is not adapted at t={t}")
        object.__setattr__(self, "filtration", filtration)
        object.__setattr__(self, "assets", assets)

    @property
    def space(self) -> SampleSpace:
        return self.filtration.space

    @property
    def horizon(self) -> int:
        return self.filtration.horizon

    def elementary_gains(self) -> list["ElementaryGain"]:
        """One gain per (period, asset, information cell): hold one unit of one
        asset over one period on one cell.  These span the payoff cone."""
        space = self.space
        n = len(space)
        gains = []
        for t in range(1, self.horizon + 1):
            cells = self.filtration.partitions[t - 1]
            for a, asset in enumerate(self.assets):
                diff = asset.path[t] - asset.path[t - 1]
                for ci, cell in enumerate(cells):
                    values = [_ZERO] * n
                    for i in cell:
                        values[i] = diff.values[i]
                    gains.append(ElementaryGain(t, a, ci, RandomVariable(space, values)))
        return gains


@dataclass(frozen=True)
class ElementaryGain:
    t: int
    asset: int
    cell: int
    vector: RandomVariable


@dataclass(frozen=True)
class Strategy:
    """Predictable holdings: one value per (period, asset, cell at t−1)."""

    holdings: tuple[tuple[tuple[Fraction, ...], ...], ...]

    def __init__(self, holdings) -> None:
        frozen = tuple(
            tuple(tuple(as_fraction(h) for h in per_asset) for per_asset in per_t)
            for per_t in holdings)
        object.__setattr__(self, "holdings", frozen)

    @classmethod
    def zero(cls, model: MarketModel) -> "Strategy":
        return cls([
            [[0] * len(model.filtration.partitions[t - 1]) for _ in model.assets]
            for t in range(1, model.horizon + 1)])

    def scale(self, factor) -> "Strategy":
        f = as_fraction(factor)
        return Strategy([[[f * h for h in cells] for cells in per_t]
                         for per_t in self.holdings])

    def __add__(self, other: "Strategy") -> "Strategy":
        if _shape(self) != _shape(other):
            raise StructureError("strategies have different shapes")
        return Strategy([
            [[a + b for a, b in zip(ca, cb)] for ca, cb in zip(pa, pb)]
            for pa, pb in zip(self.holdings, other.holdings)])


def _shape(strategy: Strategy):
    return tuple(tuple(len(cells) for cells in per_t) for per_t in strategy.holdings)


def _check_strategy(model: MarketModel, strategy: Strategy) -> None:
    want = tuple(
        tuple(len(model.filtration.partitions[t - 1]) for _ in model.assets)
        for t in range(1, model.horizon + 1))
    if _shape(strategy) != want:
        raise StructureError("strategy shape does not match the model's filtration")


def terminal_gain(model: MarketModel, strategy: Strategy) -> RandomVariable:
    """Pathwise Σ_t holdings·(X_t − X_{t−1}); linear in the strategy."""
    _check_strategy(model, strategy)
    n = len(model.space)
    total = [_ZERO] * n
    for t in range(1, model.horizon + 1):
        cells = model.filtration.partitions[t - 1]
        for a, asset in enumerate(model.assets):
            diff = asset.path[t] - asset.path[t - 1]
            for ci, cell in enumerate(cells):
                h = strategy.holdings[t - 1][a][ci]
                if h:
                    for i in cell:
                        total[i] += h * diff.values[i]
    return RandomVariable(model.space, total)


def payoff_cone(model: MarketModel, include_neg_orthant: bool = False) -> PolyhedralCone:
    """The zero-initial-wealth payoff cone, generated by ± elementary gains.

    With ``include_neg_orthant`` the cone is widened to "payoff or anything
    below it", the set whose intersection with V₊ must be {0} for the market
    to be arbitrage-free.
    """
    gens = []
    for gain in model.elementary_gains():
        gens.append(gain.vector)
        gens.append(-gain.vector)
    return PolyhedralCone(model.space, gens, includes_neg_orthant=include_neg_orthant)


def _strategy_from_coefficients(model, gains, coefficients) -> Strategy:
    strategy = Strategy.zero(model)
    holdings = [[list(cells) for cells in per_t] for per_t in strategy.holdings]
    for gain, coef in zip(gains, coefficients):
        holdings[gain.t - 1][gain.asset][gain.cell] = as_fraction(coef)
    return Strategy(holdings)


def _nonzero_gains(model):
    return [g for g in model.elementary_gains() if not g.vector.is_zero]


@dataclass(frozen=True)
class NaResult:
    holds: bool
    arbitrage: Optional[Strategy] = None


def check_na(model: MarketModel) -> NaResult:
    """No arbitrage: the payoff cone meets the nonnegative orthant only at 0.

    Decided by maximizing the total payoff over strategies with payoff ≥ 0,
    capped at 1 per outcome so the cone's scaling cannot blow up the LP: the
    optimum is 0 exactly when NA holds.  A failing market yields an explicit
    strategy whose payoff is re-verified to be ≥ 0 and ≠ 0.
    """
    gains = _nonzero_gains(model)
    if not gains:
        return NaResult(holds=True)
    n = len(model.space)
    E = len(gains)
    columns = [g.vector.values for g in gains]
    rows, rels, rhs = [], [], []
    for i in range(n):
        row = [col[i] for col in columns]
        rows.append(row)
        rels.append(">=")
        rhs.append(_ZERO)
        rows.append(row)
        rels.append("<=")
        rhs.append(_ONE)
    objective = [sum(col, _ZERO) for col in columns]
    problem = lp.LpProblem(objective, rows, rels, rhs, lower=[None] * E)
    outcome = lp.solve(problem)
    if outcome.status != lp.OPTIMAL:
        raise InternalInconsistency("arbitrage LP must be bounded and feasible",
                                    model=model, outcome=outcome)
    if outcome.objective_value == 0:
        return NaResult(holds=True)
    strategy = _strategy_from_coefficients(model, gains, outcome.primal)
    payoff = terminal_gain(model, strategy)
    if not payoff.is_nonneg or payoff.is_zero:
        raise InternalInconsistency("arbitrage witness failed re-verification",
                                    model=model, strategy=strategy, payoff=payoff)
    return NaResult(holds=False, arbitrage=strategy)


@dataclass(frozen=True)
class Measure:
    """A probability measure on the space's outcomes (not necessarily ≈ ℙ)."""

    space: SampleSpace
    weights: tuple[Fraction, ...]

    def __init__(self, space: SampleSpace, weights) -> None:
        ws = tuple(as_fraction(w) for w in weights)
        if len(ws) != len(space):
            raise StructureError("one weight per outcome required")
        if any(w < 0 for w in ws):
            raise StructureError("measure weights must be nonnegative")
        if sum(ws) != 1:
            raise StructureError(f"weights sum to {sum(ws)}, not 1")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "weights", ws)

    @property
    def is_equivalent(self) -> bool:
        return all(w > 0 for w in self.weights)

    def expectation(self, x: RandomVariable) -> Fraction:
        if x.space != self.space:
            raise StructureError("random variable on a different space")
        return sum((w * v for w, v in zip(self.weights, x.values)), _ZERO)

    def density(self) -> tuple[Fraction, ...]:
        """dQ/dℙ per outcome; bounded and strictly positive when equivalent."""
        return tuple(w / p for w, p in zip(self.weights, self.space.probabilities))


@dataclass(frozen=True)
class EmmResult:
    measure: Optional[Measure] = None
    arbitrage: Optional[Strategy] = None


def is_martingale_measure(model: MarketModel, measure: Measure) -> bool:
    """Exact check of every conditional martingale equality, cell by cell."""
    return all(measure.expectation(g.vector) == 0 for g in model.elementary_gains())


def find_emm(model: MarketModel) -> EmmResult:
    """An equivalent martingale measure, or an arbitrage certifying none exists.

    Strict positivity is obtained in a single solve by maximizing the
    minimum weight subject to the martingale equalities; the optimum is
    positive exactly when an EMM exists.
    """
    n = len(model.space)
    gains = _nonzero_gains(model)
    # variables: q_1..q_n, then the min-weight level m
    rows = [[_ONE] * n + [_ZERO]]
    rels = ["=="]
    rhs = [_ONE]
    for g in gains:
        rows.append(list(g.vector.values) + [_ZERO])
        rels.append("==")
        rhs.append(_ZERO)
    for i in range(n):
        row = [_ZERO] * (n + 1)
        row[i] = _ONE
        row[n] = Fraction(-1)
        rows.append(row)
        rels.append(">=")
        rhs.append(_ZERO)
    objective = [_ZERO] * n + [_ONE]
    outcome = lp.solve(lp.LpProblem(objective, rows, rels, rhs))
    if outcome.status == lp.OPTIMAL and outcome.objective_value > 0:
        measure = Measure(model.space, outcome.primal[:n])
        if not measure.is_equivalent or not is_martingale_measure(model, measure):
            raise InternalInconsistency("martingale measure failed re-verification",
                                        model=model, measure=measure)
        return EmmResult(measure=measure)
    na = check_na(model)
    if na.holds:
        raise InternalInconsistency(
            "no equivalent martingale measure found although no arbitrage exists",
            model=model, outcome=outcome)
    return EmmResult(arbitrage=na.arbitrage)


@dataclass(frozen=True)
class Superreplication:
    price: Price
    hedge: Optional[Strategy] = None


def superreplication_price(model: MarketModel, payoff: RandomVariable) -> Superreplication:
    """Cheapest initial wealth whose terminal value dominates the payoff.

    Minimizes α over (α, strategy) with α + gain ≥ payoff in every outcome.
    Always feasible on a finite space; −inf only when the market admits a
    strictly positive gain (arbitrage), in which case no hedge is returned.
    """
    if payoff.space != model.space:
        raise StructureError("payoff on a different sample space")
    if not payoff.is_nonneg:
        raise ContractViolation("superreplication expects a nonnegative payoff")
    gains = _nonzero_gains(model)
    n = len(model.space)
    E = len(gains)
    rows, rhs = [], []
    for i in range(n):
        rows.append([_ONE] + [g.vector.values[i] for g in gains])
        rhs.append(payoff.values[i])
    problem = lp.LpProblem([_ONE] + [_ZERO] * E, rows, [">="] * n, rhs,
                           lower=[None] * (E + 1), sense="min")
    outcome = lp.solve(problem)
    if outcome.status == lp.UNBOUNDED:
        return Superreplication(price=-math.inf)
    if outcome.status != lp.OPTIMAL:
        raise InternalInconsistency("superreplication LP cannot be infeasible",
                                    model=model, payoff=payoff)
    alpha = outcome.objective_value
    hedge = _strategy_from_coefficients(model, gains, outcome.primal[1:])
    value = terminal_gain(model, hedge)
    if not all(alpha + v >= p for v, p in zip(value.values, payoff.values)):
        raise InternalInconsistency("superreplication hedge failed re-verification",
                                    model=model, payoff=payoff, hedge=hedge)
    return Superreplication(price=alpha, hedge=hedge)


def in_budget_set(model: MarketModel, x: RandomVariable, alpha) -> bool:
    """Membership of x in ℬ_α: 0 ≤ x ≤ α + gain(ξ) for some strategy ξ."""
    if x.space != model.space:
        raise StructureError("point on a different sample space")
    alpha = as_fraction(alpha)
    if alpha < 0:
        raise ContractViolation("budget level must be >= 0")
    if not x.is_nonneg:
        return False
    gains = _nonzero_gains(model)
    rows = [[g.vector.values[i] for g in gains] for i in range(len(model.space))]
    rhs = [v - alpha for v in x.values]
    problem = lp.LpProblem([_ZERO] * len(gains), rows, [">="] * len(rows), rhs,
                           lower=[None] * len(gains))
    return lp.feasible(problem).feasible


def check_na1(model: MarketModel) -> bool:
    """No arbitrage of the first kind: every outcome indicator has a strictly
    positive superreplication price (enough by monotonicity + homogeneity of
    the price as a gauge)."""
    for e in model.space.indicators():
        if not superreplication_price(model, e).price > 0:
            return False
    return True


def _budget_ceiling_problem(model: MarketModel, objective_weights) -> lp.LpProblem:
    # variables: x_1..x_n >= 0, then free strategy coefficients
    gains = _nonzero_gains(model)
    n = len(model.space)
    E = len(gains)
    rows, rhs = [], []
    for i in range(n):
        row = [_ZERO] * n + [-g.vector.values[i] for g in gains]
        row[i] = _ONE
        rows.append(row)
        rhs.append(_ONE)
    objective = list(objective_weights) + [_ZERO] * E
    return lp.LpProblem(objective, rows, ["<="] * n, rhs,
                        lower=[_ZERO] * n + [None] * E)


def check_nupbr(model: MarketModel) -> bool:
    """Boundedness of the unit budget set {x ≥ 0 : x ≤ 1 + gain}, by LP."""
    outcome = lp.solve(_budget_ceiling_problem(model, [_ONE] * len(model.space)))
    return outcome.status == lp.OPTIMAL


def emm_budget(model: MarketModel, measure: Measure) -> Price:
    """sup of E_Q over the unit budget set; exactly 1 when Q is an EMM."""
    if measure.space != model.space:
        raise StructureError("measure on a different sample space")
    if not measure.is_equivalent:
        raise ContractViolation("budget bound requires an equivalent measure")
    outcome = lp.solve(_budget_ceiling_problem(model, measure.weights))
    if outcome.status == lp.OPTIMAL:
        return outcome.objective_value
    return math.inf
