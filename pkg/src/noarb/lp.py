"""Exact rational linear programming by two-phase primal simplex.

This is the single decision oracle behind every set-membership and
no-arbitrage question in the library, so it never rounds: all arithmetic is
over exact rationals, pivoting uses Bland's anti-cycling rule (lowest
eligible index, ties by lowest basic variable index), and every answer is
certified: optimal outcomes carry exact duals with zero duality gap,
infeasible outcomes carry a Farkas vector, unbounded outcomes carry a
feasible point plus an improving recession ray.  Identical inputs always
produce identical outcomes, including the chosen vertex.

Problems are dense and desk-scale by design; there is no floating-point
fast path and no sparse machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import StructureError
from .rationals import as_fraction, fast_rational

LE = "<="
EQ = "=="
GE = ">="
_RELATIONS = (LE, EQ, GE)

MAXIMIZE = "max"
MINIMIZE = "min"

OPTIMAL = "optimal"
UNBOUNDED = "unbounded"
INFEASIBLE = "infeasible"

_ZERO = Fraction(0)


@dataclass(frozen=True)
class LpProblem:
    """A dense exact LP: optimize c·x subject to Ax {≤,=,≥} b and bounds.

    Per-variable bounds are restricted to lower ∈ {0, −∞} (``None`` means
    free) and upper ∈ {+∞, finite} (``None`` means no upper bound).
    Immutable after construction; solving shares no state between calls.
    """

    objective: tuple[Fraction, ...]
    rows: tuple[tuple[Fraction, ...], ...]
    relations: tuple[str, ...]
    rhs: tuple[Fraction, ...]
    lower: tuple[Optional[Fraction], ...]
    upper: tuple[Optional[Fraction], ...]
    sense: str

    def __init__(self, objective, rows, relations, rhs, *,
                 lower=None, upper=None, sense: str = MAXIMIZE) -> None:
        set_ = object.__setattr__
        set_(self, "objective", tuple(as_fraction(c) for c in objective))
        n = len(self.objective)
        set_(self, "rows", tuple(tuple(as_fraction(a) for a in row) for row in rows))
        set_(self, "relations", tuple("==" if r == "=" else r for r in relations))
        set_(self, "rhs", tuple(as_fraction(v) for v in rhs))
        m = len(self.rows)
        if len(self.relations) != m or len(self.rhs) != m:
            raise StructureError(
                f"{m} rows but {len(self.relations)} relations and {len(self.rhs)} rhs entries"
            )
        for i, row in enumerate(self.rows):
            if len(row) != n:
                raise StructureError(f"row {i} has {len(row)} coefficients, expected {n}")
        for rel in self.relations:
            if rel not in _RELATIONS:
                raise StructureError(f"unknown relation {rel!r}")
        if lower is None:
            lower = [_ZERO] * n
        if upper is None:
            upper = [None] * n
        set_(self, "lower", tuple(None if lo is None else as_fraction(lo) for lo in lower))
        set_(self, "upper", tuple(None if up is None else as_fraction(up) for up in upper))
        if len(self.lower) != n or len(self.upper) != n:
            raise StructureError("bound vectors must have one entry per variable")
        for lo in self.lower:
            if lo is not None and lo != 0:
                raise StructureError("lower bounds are restricted to 0 or None (free)")
        if sense not in (MAXIMIZE, MINIMIZE):
            raise StructureError(f"sense must be {MAXIMIZE!r} or {MINIMIZE!r}")
        set_(self, "sense", sense)

    @property
    def num_vars(self) -> int:
        return len(self.objective)

    @property
    def num_rows(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class LpOutcome:
    """Certified result of an exact solve.

    * ``OPTIMAL``: ``primal`` and ``objective_value`` are set; ``dual`` holds
      one multiplier per constraint row and ``upper_duals`` one per variable
      (nonzero only where a finite upper bound is active), with
      ``objective_value == rhs·dual + Σ upper_j·upper_duals_j`` exactly.
    * ``UNBOUNDED``: ``primal`` is a feasible point and ``ray`` an exact
      recession direction with strictly improving objective.
    * ``INFEASIBLE``: ``dual``/``upper_duals`` form a Farkas certificate.
    """

    status: str
    primal: Optional[tuple[Fraction, ...]] = None
    dual: Optional[tuple[Fraction, ...]] = None
    upper_duals: Optional[tuple[Fraction, ...]] = None
    objective_value: Optional[Fraction] = None
    ray: Optional[tuple[Fraction, ...]] = None


@dataclass(frozen=True)
class Feasibility:
    """Phase-one verdict: an exact witness or an exact Farkas certificate."""

    feasible: bool
    witness: Optional[tuple[Fraction, ...]] = None
    certificate: Optional[tuple[Fraction, ...]] = None
    upper_certificate: Optional[tuple[Fraction, ...]] = None


class _Simplex:
    """Two-phase tableau simplex over the standardized split/slack form."""

    def __init__(self, problem: LpProblem) -> None:
        self.problem = problem
        R = fast_rational
        one = R(1)
        n = problem.num_vars
        sense_flip = problem.sense == MINIMIZE
        obj = [-R(c.numerator, c.denominator) if sense_flip else R(c.numerator, c.denominator)
               for c in problem.objective]

        # augmented row list: original rows, then one row per finite upper bound
        aug_rows: list[tuple] = []
        for row, rel, rhs in zip(problem.rows, problem.relations, problem.rhs):
            aug_rows.append((row, rel, rhs))
        self.bound_vars: list[int] = []
        for j, up in enumerate(problem.upper):
            if up is not None:
                unit = [_ZERO] * n
                unit[j] = Fraction(1)
                aug_rows.append((tuple(unit), LE, up))
                self.bound_vars.append(j)
        m_aug = len(aug_rows)

        # split free variables into differences of nonnegative columns
        col_pairs: list[tuple[int, Optional[int]]] = []
        ncols = 0
        for j in range(n):
            if problem.lower[j] is None:
                col_pairs.append((ncols, ncols + 1))
                ncols += 2
            else:
                col_pairs.append((ncols, None))
                ncols += 1
        self.col_pairs = col_pairs
        n_struct = ncols

        obj_split = [R(0)] * n_struct
        for j, (pc, nc) in enumerate(col_pairs):
            obj_split[pc] = obj[j]
            if nc is not None:
                obj_split[nc] = -obj[j]

        # normalize rows to nonnegative rhs, then attach slack and artificial columns
        T: list[list] = []
        b: list = []
        flipped: list[bool] = []
        slack_sign: list[int] = []          # +1 slack, -1 surplus, 0 none
        for row, rel, rhs in aug_rows:
            coeffs = [R(0)] * n_struct
            for j, (pc, nc) in enumerate(col_pairs):
                a = row[j]
                if a:
                    fa = R(a.numerator, a.denominator)
                    coeffs[pc] = fa
                    if nc is not None:
                        coeffs[nc] = -fa
            rv = R(rhs.numerator, rhs.denominator)
            # also flip ≥ rows with zero rhs: as ≤ rows they start on a slack
            # basis, which keeps artificial variables out of the hot paths
            flip = rv < 0 or (rv == 0 and rel == GE)
            if flip:
                coeffs = [-a for a in coeffs]
                rv = -rv
                rel = {LE: GE, GE: LE, EQ: EQ}[rel]
            T.append(coeffs)
            b.append(rv)
            flipped.append(flip)
            slack_sign.append(1 if rel == LE else (-1 if rel == GE else 0))

        n_slack = sum(1 for s in slack_sign if s)
        self.first_art = n_struct + n_slack
        n_art = sum(1 for s in slack_sign if s <= 0)
        total = self.first_art + n_art

        ident_col: list[int] = [0] * m_aug
        basis: list[int] = [0] * m_aug
        scol = n_struct
        acol = self.first_art
        for i, s in enumerate(slack_sign):
            ext = [R(0)] * (total - n_struct)
            if s:
                ext[scol - n_struct] = R(s)
            if s <= 0:
                ext[acol - n_struct] = one
                ident_col[i] = acol
                acol += 1
            else:
                ident_col[i] = scol
            basis[i] = ident_col[i]
            T[i] = T[i] + ext
            if s:
                scol += 1

        self.T = T
        self.b = b
        self.basis = basis
        self.ident_col = ident_col
        self.flipped = flipped
        self.m_aug = m_aug
        self.n_struct = n_struct
        self.ncols = total
        self.obj_split = obj_split + [R(0)] * (total - n_struct)
        self.alive = list(range(m_aug))     # augmented row index per tableau row
        self.R = R

    # --- pivoting ---------------------------------------------------------

    def _pivot(self, r: int, j: int) -> None:
        T, b = self.T, self.b
        prow = T[r]
        piv = prow[j]
        if piv != 1:
            inv = 1 / piv
            prow = [v * inv for v in prow]
            T[r] = prow
            b[r] = b[r] * inv
        br = b[r]
        for i in range(len(T)):
            if i == r:
                continue
            f = T[i][j]
            if f:
                row = T[i]
                T[i] = [a - f * p for a, p in zip(row, prow)]
                b[i] = b[i] - f * br
        self.basis[r] = j

    def _run_phase(self, costs, entering_limit: int):
        """Bland's rule to optimality; returns ('optimal', value) or ('unbounded', col)."""
        T, b, basis = self.T, self.b, self.basis
        z = list(costs)
        value = self.R(0)
        for r, col in enumerate(basis):
            cb = costs[col]
            if cb:
                row = T[r]
                z = [a - cb * t for a, t in zip(z, row)]
                value += cb * b[r]
        while True:
            enter = -1
            for j in range(entering_limit):
                if z[j] > 0:
                    enter = j
                    break
            if enter < 0:
                return OPTIMAL, value
            leave = -1
            best = None
            for r in range(len(T)):
                t = T[r][enter]
                if t > 0:
                    ratio = b[r] / t
                    if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                        best = ratio
                        leave = r
            if leave < 0:
                return UNBOUNDED, enter
            self._pivot(leave, enter)
            zf = z[enter]
            prow = self.T[leave]
            z = [a - zf * p for a, p in zip(z, prow)]
            value += zf * self.b[leave]

    def _phase_one(self):
        """Feasibility phase; returns None when feasible, else Farkas data."""
        R = self.R
        if all(col < self.first_art for col in self.basis):
            return None
        costs = [R(0)] * self.first_art + [R(-1)] * (self.ncols - self.first_art)
        status, value = self._run_phase(costs, self.ncols)
        assert status == OPTIMAL  # phase one is always bounded by zero
        if value < 0:
            return self._dual_values(costs)
        self._drive_out_artificials()
        return None

    def _drive_out_artificials(self) -> None:
        r = 0
        while r < len(self.T):
            if self.basis[r] >= self.first_art:
                row = self.T[r]
                enter = next((j for j in range(self.first_art) if row[j] != 0), -1)
                if enter >= 0:
                    self._pivot(r, enter)
                else:
                    # redundant constraint: the row reads "artificial = 0"
                    del self.T[r], self.b[r], self.basis[r], self.alive[r]
                    continue
            r += 1

    # --- extraction -------------------------------------------------------

    def _dual_values(self, costs) -> list:
        """Multipliers for all augmented rows from the final basis inverse."""
        R = self.R
        cb = [costs[col] for col in self.basis]
        y = []
        alive_pos = {k: r for r, k in enumerate(self.alive)}
        for k in range(self.m_aug):
            r = alive_pos.get(k)
            if r is None:
                y.append(R(0))
                continue
            col = self.ident_col[k]
            yk = R(0)
            for i, c in enumerate(cb):
                if c:
                    t = self.T[i][col]
                    if t:
                        yk += c * t
            y.append(-yk if self.flipped[k] else yk)
        return y

    def _structural_point(self) -> list:
        R = self.R
        xs = [R(0)] * self.n_struct
        for r, col in enumerate(self.basis):
            if col < self.n_struct:
                xs[col] = self.b[r]
        return xs

    def _to_original(self, xs) -> tuple[Fraction, ...]:
        out = []
        for pc, nc in self.col_pairs:
            v = xs[pc] - (xs[nc] if nc is not None else 0)
            out.append(Fraction(v.numerator, v.denominator))
        return tuple(out)

    def _split_duals(self, y):
        m = self.problem.num_rows
        dual = tuple(Fraction(v.numerator, v.denominator) for v in y[:m])
        upper = [_ZERO] * self.problem.num_vars
        for k, j in enumerate(self.bound_vars):
            v = y[m + k]
            upper[j] = Fraction(v.numerator, v.denominator)
        return dual, tuple(upper)


def solve(problem: LpProblem) -> LpOutcome:
    """Solve exactly; deterministic for a fixed input."""
    sx = _Simplex(problem)
    farkas = sx._phase_one()
    if farkas is not None:
        dual, upper = sx._split_duals(farkas)
        return LpOutcome(status=INFEASIBLE, dual=dual, upper_duals=upper)

    status, info = sx._run_phase(sx.obj_split, sx.first_art)
    if status == UNBOUNDED:
        enter = info
        R = sx.R
        d = [R(0)] * sx.n_struct
        if enter < sx.n_struct:
            d[enter] = R(1)
        for r, col in enumerate(sx.basis):
            if col < sx.n_struct:
                d[col] = -sx.T[r][enter]
        base = sx._to_original(sx._structural_point())
        ray = sx._to_original(d)
        return LpOutcome(status=UNBOUNDED, primal=base, ray=ray)

    primal = sx._to_original(sx._structural_point())
    value = info
    y = sx._dual_values(sx.obj_split)
    if problem.sense == MINIMIZE:
        value = -value
        y = [-v for v in y]
    dual, upper = sx._split_duals(y)
    return LpOutcome(
        status=OPTIMAL,
        primal=primal,
        dual=dual,
        upper_duals=upper,
        objective_value=Fraction(value.numerator, value.denominator),
    )


def feasible(problem: LpProblem) -> Feasibility:
    """Phase-one only: an exact witness, or a Farkas certificate of emptiness."""
    sx = _Simplex(problem)
    farkas = sx._phase_one()
    if farkas is not None:
        dual, upper = sx._split_duals(farkas)
        return Feasibility(feasible=False, certificate=dual, upper_certificate=upper)
    return Feasibility(feasible=True, witness=sx._to_original(sx._structural_point()))


# --- direct-substitution checks -------------------------------------------
#
# These re-derive every claim an LpOutcome makes from the problem data alone,
# so callers can re-verify witnesses without trusting the solver's path.

def is_feasible_point(problem: LpProblem, x: Sequence) -> bool:
    x = [as_fraction(v) for v in x]
    if len(x) != problem.num_vars:
        return False
    for j, v in enumerate(x):
        if problem.lower[j] is not None and v < problem.lower[j]:
            return False
        if problem.upper[j] is not None and v > problem.upper[j]:
            return False
    for row, rel, rhs in zip(problem.rows, problem.relations, problem.rhs):
        lhs = sum((a * v for a, v in zip(row, x)), _ZERO)
        if rel == LE and lhs > rhs:
            return False
        if rel == GE and lhs < rhs:
            return False
        if rel == EQ and lhs != rhs:
            return False
    return True


def objective_value(problem: LpProblem, x: Sequence) -> Fraction:
    return sum((c * as_fraction(v) for c, v in zip(problem.objective, x)), _ZERO)


def _dual_signs_ok(problem: LpProblem, dual, sign: int) -> bool:
    for rel, y in zip(problem.relations, dual):
        if rel == LE and sign * y < 0:
            return False
        if rel == GE and sign * y > 0:
            return False
    return True


def check_optimal(problem: LpProblem, outcome: LpOutcome) -> bool:
    """Primal feasibility, dual feasibility and a zero duality gap, exactly."""
    if outcome.status != OPTIMAL:
        return False
    if not is_feasible_point(problem, outcome.primal):
        return False
    if objective_value(problem, outcome.primal) != outcome.objective_value:
        return False
    y, w = outcome.dual, outcome.upper_duals
    sign = 1 if problem.sense == MAXIMIZE else -1
    if not _dual_signs_ok(problem, y, sign):
        return False
    dual_obj = sum((b * v for b, v in zip(problem.rhs, y)), _ZERO)
    for j, wj in enumerate(w):
        if problem.upper[j] is None:
            if wj != 0:
                return False
        else:
            if sign * wj < 0:
                return False
            dual_obj += problem.upper[j] * wj
    if dual_obj != outcome.objective_value:
        return False
    for j in range(problem.num_vars):
        lhs = sum((problem.rows[i][j] * y[i] for i in range(problem.num_rows)), _ZERO)
        lhs += w[j]
        slack = sign * (lhs - problem.objective[j])
        if problem.lower[j] is None:
            if lhs != problem.objective[j]:
                return False
        elif slack < 0:
            return False
    return True


def check_farkas(problem: LpProblem, dual: Sequence, upper_duals: Sequence) -> bool:
    """Exact infeasibility proof: multipliers that no feasible point can satisfy."""
    y = [as_fraction(v) for v in dual]
    w = [as_fraction(v) for v in upper_duals]
    if not _dual_signs_ok(problem, y, 1):
        return False
    total = sum((b * v for b, v in zip(problem.rhs, y)), _ZERO)
    for j, wj in enumerate(w):
        if problem.upper[j] is None:
            if wj != 0:
                return False
        else:
            if wj < 0:
                return False
            total += problem.upper[j] * wj
    if total >= 0:
        return False
    for j in range(problem.num_vars):
        t = sum((problem.rows[i][j] * y[i] for i in range(problem.num_rows)), _ZERO) + w[j]
        if problem.lower[j] is None:
            if t != 0:
                return False
        elif t < 0:
            return False
    return True


def check_ray(problem: LpProblem, outcome: LpOutcome) -> bool:
    """The ray is a recession direction from a feasible point, strictly improving."""
    if outcome.status != UNBOUNDED or outcome.ray is None or outcome.primal is None:
        return False
    if not is_feasible_point(problem, outcome.primal):
        return False
    d = outcome.ray
    for j, v in enumerate(d):
        if problem.lower[j] is not None and v < 0:
            return False
        if problem.upper[j] is not None and v > 0:
            return False
    for row, rel in zip(problem.rows, problem.relations):
        move = sum((a * v for a, v in zip(row, d)), _ZERO)
        if rel == LE and move > 0:
            return False
        if rel == GE and move < 0:
            return False
        if rel == EQ and move != 0:
            return False
    gain = sum((c * v for c, v in zip(problem.objective, d)), _ZERO)
    return gain > 0 if problem.sense == MAXIMIZE else gain < 0


def check_outcome(problem: LpProblem, outcome: LpOutcome) -> bool:
    """Dispatch to the exact re-substitution check for the outcome's status."""
    if outcome.status == OPTIMAL:
        return check_optimal(problem, outcome)
    if outcome.status == UNBOUNDED:
        return check_ray(problem, outcome)
    if outcome.status == INFEASIBLE:
        return check_farkas(problem, outcome.dual, outcome.upper_duals)
    return False
