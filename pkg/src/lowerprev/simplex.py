"""Exact-rational linear programming.

A dense two-phase primal simplex over :class:`fractions.Fraction`
entries, with Bland's rule for anti-cycling.  Problem sizes in this
library are desk scale (tens of variables and constraints), so the
solver favours exactness and determinism over speed: identical
programs always produce identical outcomes, optimizers satisfy every
constraint exactly, and infeasible programs come with a Farkas
certificate that re-checks by direct substitution.

Free variables are handled by the standard split into a difference of
two nonnegative variables, which keeps the tableau uniform.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

__all__ = [
    "Relation",
    "Constraint",
    "LinearProgram",
    "LPStatus",
    "LPOutcome",
    "LPFormatError",
    "solve",
]

ZERO = Fraction(0)
ONE = Fraction(1)


class LPFormatError(ValueError):
    """Malformed program: width mismatch or no variables."""


class Relation(enum.Enum):
    GE = ">="
    EQ = "=="


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple[Fraction, ...]
    relation: Relation
    rhs: Fraction


@dataclass(frozen=True)
class LinearProgram:
    """Minimize ``objective . x`` subject to rows of ``A x {>=,==} b``.

    ``nonnegative[j]`` says whether variable j is sign-constrained
    (True) or free (False).
    """

    objective: tuple[Fraction, ...]
    constraints: tuple[Constraint, ...]
    nonnegative: tuple[bool, ...]

    def __post_init__(self) -> None:
        n = len(self.objective)
        if n == 0:
            raise LPFormatError("a linear program needs at least one variable")
        if len(self.nonnegative) != n:
            raise LPFormatError("variable bound vector width mismatch")
        for row in self.constraints:
            if len(row.coeffs) != n:
                raise LPFormatError(
                    f"constraint width {len(row.coeffs)} != objective width {n}"
                )

    @staticmethod
    def make(
        objective: Sequence[Fraction | int],
        constraints: Sequence[tuple[Sequence[Fraction | int], Relation, Fraction | int]],
        nonnegative: Sequence[bool] | bool = True,
    ) -> "LinearProgram":
        objective = tuple(Fraction(c) for c in objective)
        if isinstance(nonnegative, bool):
            nonnegative = (nonnegative,) * len(objective)
        rows = tuple(
            Constraint(tuple(Fraction(a) for a in coeffs), rel, Fraction(rhs))
            for coeffs, rel, rhs in constraints
        )
        return LinearProgram(objective, rows, tuple(nonnegative))


class LPStatus(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPOutcome:
    """Solver result.

    ``optimizer`` and ``value`` are set exactly when the status is
    OPTIMAL.  ``certificate`` is set exactly when the status is
    INFEASIBLE: one Farkas multiplier per constraint row, nonnegative
    on >= rows, with ``sum_r y_r A_r <= 0`` componentwise on
    nonnegative variables (== 0 on free ones) and ``sum_r y_r b_r > 0``.
    """

    status: LPStatus
    value: Fraction | None = None
    optimizer: tuple[Fraction, ...] | None = None
    certificate: tuple[Fraction, ...] | None = None


class _Tableau:
    """Dense simplex tableau; columns = structural, surplus, artificial."""

    def __init__(
        self,
        rows: list[list[Fraction]],
        rhs: list[Fraction],
        basis: list[int],
        ncols: int,
    ):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.ncols = ncols

    def pivot(self, i: int, j: int) -> None:
        piv = self.rows[i][j]
        inv = ONE / piv
        self.rows[i] = [a * inv for a in self.rows[i]]
        self.rhs[i] *= inv
        for k in range(len(self.rows)):
            if k == i:
                continue
            factor = self.rows[k][j]
            if factor == 0:
                continue
            row_i = self.rows[i]
            row_k = self.rows[k]
            self.rows[k] = [row_k[c] - factor * row_i[c] for c in range(self.ncols)]
            self.rhs[k] -= factor * self.rhs[i]
        self.basis[i] = j

    def reduced_costs(self, cost: list[Fraction]) -> list[Fraction]:
        # r_j = c_j - sum_i c_{basis_i} T_ij, computed fresh for the basis
        multipliers = [cost[b] for b in self.basis]
        reduced = list(cost)
        for i, mult in enumerate(multipliers):
            if mult == 0:
                continue
            row = self.rows[i]
            for j in range(self.ncols):
                if row[j] != 0:
                    reduced[j] -= mult * row[j]
        return reduced

    def objective_value(self, cost: list[Fraction]) -> Fraction:
        return sum((cost[b] * self.rhs[i] for i, b in enumerate(self.basis)), ZERO)

    def run(self, cost: list[Fraction], allowed: Sequence[bool]) -> bool:
        """Minimize; returns False when unbounded.  Bland's rule throughout."""
        reduced = self.reduced_costs(cost)
        while True:
            entering = -1
            for j in range(self.ncols):
                if allowed[j] and reduced[j] < 0:
                    entering = j
                    break
            if entering < 0:
                return True
            leaving = -1
            best = None
            for i in range(len(self.rows)):
                a = self.rows[i][entering]
                if a > 0:
                    ratio = self.rhs[i] / a
                    if best is None or ratio < best or (
                        ratio == best and self.basis[i] < self.basis[leaving]
                    ):
                        best = ratio
                        leaving = i
            if leaving < 0:
                return False
            self.pivot(leaving, entering)
            reduced = self.reduced_costs(cost)


def solve(lp: LinearProgram) -> LPOutcome:
    """Solve exactly; see :class:`LPOutcome` for the contract."""
    nvars = len(lp.objective)

    # Split free variables into differences of nonnegative ones.
    split: list[tuple[int, int]] = []  # var -> (plus column, minus column or -1)
    col_of: list[tuple[int, int]] = []  # structural column -> (var, sign)
    for j in range(nvars):
        plus = len(col_of)
        col_of.append((j, +1))
        if lp.nonnegative[j]:
            split.append((plus, -1))
        else:
            col_of.append((j, -1))
            split.append((plus, plus + 1))
    nstruct = len(col_of)

    nrows = len(lp.constraints)
    surplus_col = [-1] * nrows
    ncols = nstruct
    for r, row in enumerate(lp.constraints):
        if row.relation is Relation.GE:
            surplus_col[r] = ncols
            ncols += 1
    art0 = ncols
    ncols += nrows

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    row_sign: list[int] = []
    for r, row in enumerate(lp.constraints):
        coeffs = [ZERO] * ncols
        for c, (var, sign) in enumerate(col_of):
            coeffs[c] = sign * row.coeffs[var]
        if surplus_col[r] >= 0:
            coeffs[surplus_col[r]] = Fraction(-1)
        b = row.rhs
        if b < 0:
            coeffs = [-a for a in coeffs]
            b = -b
            row_sign.append(-1)
        else:
            row_sign.append(+1)
        coeffs[art0 + r] = ONE
        rows.append(coeffs)
        rhs.append(b)

    tableau = _Tableau(rows, rhs, [art0 + r for r in range(nrows)], ncols)

    if nrows:
        # Phase one: drive the sum of artificials to zero.
        phase1_cost = [ZERO] * ncols
        for r in range(nrows):
            phase1_cost[art0 + r] = ONE
        tableau.run(phase1_cost, [True] * ncols)
        infeas = tableau.objective_value(phase1_cost)
        if infeas > 0:
            certificate = _farkas_certificate(
                lp, tableau, phase1_cost, art0, row_sign
            )
            return LPOutcome(LPStatus.INFEASIBLE, certificate=certificate)
        _expel_artificials(tableau, art0)

    # Phase two over structural and surplus columns only.
    allowed = [True] * art0 + [False] * nrows
    phase2_cost = [ZERO] * ncols
    for c, (var, sign) in enumerate(col_of):
        phase2_cost[c] = sign * lp.objective[var]
    bounded = tableau.run(phase2_cost, allowed)
    if not bounded:
        return LPOutcome(LPStatus.UNBOUNDED)

    x = [ZERO] * nvars
    for i, b in enumerate(tableau.basis):
        if b < nstruct:
            var, sign = col_of[b]
            x[var] += sign * tableau.rhs[i]
    optimizer = tuple(x)
    value = sum((c * v for c, v in zip(lp.objective, optimizer)), ZERO)
    _check_feasible(lp, optimizer)
    return LPOutcome(LPStatus.OPTIMAL, value=value, optimizer=optimizer)


def _expel_artificials(tableau: _Tableau, art0: int) -> None:
    """Pivot zero-valued artificials out of the basis; drop redundant rows."""
    i = 0
    while i < len(tableau.rows):
        b = tableau.basis[i]
        if b >= art0:
            pivot_col = -1
            for j in range(art0):
                if tableau.rows[i][j] != 0:
                    pivot_col = j
                    break
            if pivot_col >= 0:
                tableau.pivot(i, pivot_col)
            else:
                del tableau.rows[i]
                del tableau.rhs[i]
                del tableau.basis[i]
                continue
        i += 1


def _farkas_certificate(
    lp: LinearProgram,
    tableau: _Tableau,
    phase1_cost: list[Fraction],
    art0: int,
    row_sign: list[int],
) -> tuple[Fraction, ...]:
    # Simplex multipliers off the artificial columns: the reduced cost of
    # artificial r is 1 - y_r in the standardized row space.
    reduced = tableau.reduced_costs(phase1_cost)
    y = tuple(
        row_sign[r] * (ONE - reduced[art0 + r]) for r in range(len(lp.constraints))
    )
    _check_certificate(lp, y)
    return y


def _check_certificate(lp: LinearProgram, y: tuple[Fraction, ...]) -> None:
    total = ZERO
    for r, row in enumerate(lp.constraints):
        if row.relation is Relation.GE and y[r] < 0:
            raise AssertionError("infeasibility certificate has a negative >= multiplier")
        total += y[r] * row.rhs
    if total <= 0:
        raise AssertionError("infeasibility certificate does not separate")
    for j in range(len(lp.objective)):
        s = sum((y[r] * row.coeffs[j] for r, row in enumerate(lp.constraints)), ZERO)
        if lp.nonnegative[j]:
            if s > 0:
                raise AssertionError("infeasibility certificate violates a column bound")
        elif s != 0:
            raise AssertionError("infeasibility certificate violates a free column")


def _check_feasible(lp: LinearProgram, x: tuple[Fraction, ...]) -> None:
    for j, nonneg in enumerate(lp.nonnegative):
        if nonneg and x[j] < 0:
            raise AssertionError("optimizer violates a sign constraint")
    for row in lp.constraints:
        lhs = sum((a * v for a, v in zip(row.coeffs, x)), ZERO)
        if row.relation is Relation.GE:
            if lhs < row.rhs:
                raise AssertionError("optimizer violates a >= constraint")
        elif lhs != row.rhs:
            raise AssertionError("optimizer violates an == constraint")
