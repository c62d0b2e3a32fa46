"""noarb: exact-arithmetic no-arbitrage analysis for finite-state markets.

The library decides no-arbitrage properties, computes equivalent martingale
measures and superreplication prices by exact rational linear programming,
and makes the gauge machinery of convex semi-solid sets executable in finite
dimensions.  No floating point is used anywhere on a decision path.
"""

from .concepts import ConceptVerdicts, emm_budget_check, full_verdict
from .cones import (
    BoundReport,
    PolyhedralCone,
    SemiSolidSet,
    cone_member,
    is_bounded,
    minkowski,
    semisolid_member,
    sup_squared_norm,
    zero_set_trivial,
)
from .errors import ContractViolation, InternalInconsistency, StructureError
from .lab import (
    CounterexampleReport,
    LemmaSuiteReport,
    build_counterexample,
    counterexample_report,
    random_market,
    random_semisolid,
    verify_lemma_suite,
)
from .lattice import RandomVariable, SampleSpace
from .lp import Feasibility, LpOutcome, LpProblem, feasible, solve
from .market import (
    Asset,
    ElementaryGain,
    EmmResult,
    Filtration,
    MarketModel,
    Measure,
    NaResult,
    Strategy,
    Superreplication,
    check_na,
    check_na1,
    check_nupbr,
    emm_budget,
    find_emm,
    in_budget_set,
    is_martingale_measure,
    payoff_cone,
    superreplication_price,
    terminal_gain,
)
from .separation import (
    Functional,
    SeparationReport,
    StrictSeparation,
    functional_to_measure,
    separate_at,
    strict_separator,
)

__version__ = "0.1.0"
