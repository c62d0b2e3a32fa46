"""Named no-arbitrage concepts decided by independent routes, cross-checked.

On a finite outcome space the classical concept zoo collapses: no arbitrage,
no arbitrage of the first kind, no unbounded profit with bounded risk, the
free-lunch variants (the relevant cone is polyhedral, hence closed, so every
closure-strengthened condition coincides with plain NA), existence of an
equivalent martingale measure, and existence of a strictly positive
separating functional are all equivalent.  ``full_verdict`` computes each by
its own route and raises if they ever disagree; that disagreement hook is
the library's primary regression tripwire.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InternalInconsistency
from .market import (
    MarketModel,
    Measure,
    check_na,
    check_na1,
    check_nupbr,
    emm_budget,
    find_emm,
    payoff_cone,
)
from .separation import strict_separator


@dataclass(frozen=True)
class ConceptVerdicts:
    na: bool
    na1: bool
    nupbr: bool
    nfl_equiv: bool
    emm_exists: bool
    separator_exists: bool

    def as_dict(self) -> dict[str, bool]:
        return {
            "na": self.na,
            "na1": self.na1,
            "nupbr": self.nupbr,
            "nfl_equiv": self.nfl_equiv,
            "emm_exists": self.emm_exists,
            "separator_exists": self.separator_exists,
        }

    @property
    def agree(self) -> bool:
        return len(set(self.as_dict().values())) == 1


def full_verdict(model: MarketModel) -> ConceptVerdicts:
    """All six verdicts, each by its own decision route, asserted to agree.

    NA runs the gain LP; NA₁ prices every outcome indicator; NUPBR bounds
    the unit budget set; the martingale route builds a measure; the
    separation route builds a strictly positive functional on the widened
    payoff cone.  The free-lunch verdict equals NA because the widened cone
    is polyhedral and therefore already closed, so no extra computation can
    distinguish them here.
    """
    na = check_na(model).holds
    verdicts = ConceptVerdicts(
        na=na,
        na1=check_na1(model),
        nupbr=check_nupbr(model),
        nfl_equiv=na,
        emm_exists=find_emm(model).measure is not None,
        separator_exists=strict_separator(
            payoff_cone(model, include_neg_orthant=True)).functional is not None,
    )
    if not verdicts.agree:
        raise InternalInconsistency(
            f"concept routes disagree: {verdicts.as_dict()}",
            verdicts=verdicts, model=model)
    return verdicts


def emm_budget_check(model: MarketModel, measure: Measure) -> bool:
    """True iff the unit budget set has finite Q-expected value (it equals 1
    exactly when Q is a martingale measure)."""
    return emm_budget(model, measure) != math.inf
