"""A small exact linear-programming solver over rationals.

Solves  min c.x  subject to  A_ge x >= b_ge,  A_eq x = b_eq,  x >= 0
with a dense two-phase primal simplex using Bland's rule, so it terminates
on every input and never rounds: all arithmetic is ``fractions.Fraction``.

Problem sizes here are tiny (tens of rows, a few hundred columns), which is
exactly the regime where a dense exact tableau is the simplest correct tool.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Row = Sequence[Fraction | int]

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpResult:
    status: str
    x: tuple[Fraction, ...] | None = None
    value: Fraction | None = None


def _pivot(tableau: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    piv = tableau[row][col]
    tableau[row] = [v / piv for v in tableau[row]]
    for r, line in enumerate(tableau):
        if r != row and line[col] != 0:
            factor = line[col]
            pivot_line = tableau[row]
            tableau[r] = [v - factor * p for v, p in zip(line, pivot_line)]
    basis[row] = col


def _reduced_costs(
    tableau: list[list[Fraction]], basis: list[int], costs: list[Fraction]
) -> tuple[list[Fraction], Fraction]:
    """Objective row (c_j - c_B . column_j) and the current objective value."""
    ncols = len(tableau[0]) - 1
    reduced = list(costs)
    value = Fraction(0)
    for r, bvar in enumerate(basis):
        cb = costs[bvar]
        if cb == 0:
            continue
        line = tableau[r]
        value += cb * line[-1]
        for j in range(ncols):
            if line[j] != 0:
                reduced[j] -= cb * line[j]
    return reduced, value


def _run_simplex(
    tableau: list[list[Fraction]], basis: list[int], costs: list[Fraction]
) -> str:
    """Iterate to optimality (or unboundedness) under Bland's rule."""
    ncols = len(tableau[0]) - 1
    while True:
        reduced, _ = _reduced_costs(tableau, basis, costs)
        entering = next((j for j in range(ncols) if reduced[j] < 0), None)
        if entering is None:
            return OPTIMAL
        leaving = None
        best_ratio: Fraction | None = None
        for r, line in enumerate(tableau):
            coeff = line[entering]
            if coeff > 0:
                ratio = line[-1] / coeff
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[r] < basis[leaving])
                ):
                    best_ratio = ratio
                    leaving = r
        if leaving is None:
            return UNBOUNDED
        _pivot(tableau, basis, leaving, entering)


def solve_lp(
    c: Row,
    a_ge: Sequence[Row] = (),
    b_ge: Row = (),
    a_eq: Sequence[Row] = (),
    b_eq: Row = (),
) -> LpResult:
    """Exact minimum of c.x over {x >= 0, A_ge x >= b_ge, A_eq x = b_eq}."""
    n = len(c)
    m_ge = len(a_ge)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for i, (row, b) in enumerate(zip(a_ge, b_ge)):
        coeffs = [Fraction(v) for v in row] + [Fraction(0)] * m_ge
        coeffs[n + i] = Fraction(-1)  # surplus
        rows.append(coeffs)
        rhs.append(Fraction(b))
    for row, b in zip(a_eq, b_eq):
        rows.append([Fraction(v) for v in row] + [Fraction(0)] * m_ge)
        rhs.append(Fraction(b))
    for r in range(len(rows)):
        if rhs[r] < 0:
            rows[r] = [-v for v in rows[r]]
            rhs[r] = -rhs[r]

    ncols = n + m_ge
    # A negated surplus column (+1 coefficient, appears in one row only) can
    # start basic; every other row gets an artificial variable.
    basis: list[int] = []
    art_rows: list[int] = []
    for r, coeffs in enumerate(rows):
        start = next((j for j in range(n, ncols) if coeffs[j] == 1), None)
        if start is None:
            art_rows.append(r)
            basis.append(-1)  # placeholder, filled below
        else:
            basis.append(start)
    n_art = len(art_rows)
    total = ncols + n_art
    tableau: list[list[Fraction]] = []
    for r, coeffs in enumerate(rows):
        line = list(coeffs) + [Fraction(0)] * n_art + [rhs[r]]
        tableau.append(line)
    for k, r in enumerate(art_rows):
        tableau[r][ncols + k] = Fraction(1)
        basis[r] = ncols + k

    if n_art:
        phase1 = [Fraction(0)] * ncols + [Fraction(1)] * n_art
        status = _run_simplex(tableau, basis, phase1)
        assert status == OPTIMAL  # phase-one objective is bounded below by 0
        _, value = _reduced_costs(tableau, basis, phase1)
        if value != 0:
            return LpResult(INFEASIBLE)
        # Drive leftover artificials out of the basis (they sit at zero).
        for r in range(len(tableau)):
            if basis[r] >= ncols:
                col = next(
                    (j for j in range(ncols) if tableau[r][j] != 0),
                    None,
                )
                if col is not None:
                    _pivot(tableau, basis, r, col)
        keep = [r for r in range(len(tableau)) if basis[r] < ncols]
        tableau = [tableau[r][:ncols] + [tableau[r][-1]] for r in keep]
        basis = [basis[r] for r in keep]
        total = ncols

    phase2 = [Fraction(v) for v in c] + [Fraction(0)] * (total - n)
    status = _run_simplex(tableau, basis, phase2)
    if status == UNBOUNDED:
        return LpResult(UNBOUNDED)
    _, value = _reduced_costs(tableau, basis, phase2)
    x = [Fraction(0)] * n
    for r, bvar in enumerate(basis):
        if bvar < n:
            x[bvar] = tableau[r][-1]
    return LpResult(OPTIMAL, tuple(x), value)


def feasible(
    a_ge: Sequence[Row] = (),
    b_ge: Row = (),
    a_eq: Sequence[Row] = (),
    b_eq: Row = (),
    n: int | None = None,
) -> bool:
    """Whether {x >= 0, A_ge x >= b_ge, A_eq x = b_eq} is non-empty."""
    if n is None:
        if a_ge:
            n = len(a_ge[0])
        elif a_eq:
            n = len(a_eq[0])
        else:
            return True
    result = solve_lp([Fraction(0)] * n, a_ge, b_ge, a_eq, b_eq)
    return result.status == OPTIMAL


def lexicographic_minimum(
    a_ge: Sequence[Row],
    b_ge: Row,
    a_eq: Sequence[Row],
    b_eq: Row,
    n: int,
) -> tuple[Fraction, ...] | None:
    """Lexicographically smallest feasible point, coordinate by coordinate.

    Minimises x_0 first, pins it, then x_1, and so on; the result is the
    unique lex-least vertex of the region, or None when infeasible.
    """
    eq_rows = [list(map(Fraction, row)) for row in a_eq]
    eq_rhs = [Fraction(b) for b in b_eq]
    fixed: list[Fraction] = []
    for k in range(n):
        objective = [Fraction(0)] * n
        objective[k] = Fraction(1)
        result = solve_lp(objective, a_ge, b_ge, eq_rows, eq_rhs)
        if result.status != OPTIMAL:
            if k == 0:
                return None
            raise AssertionError("region became infeasible after pinning a minimum")
        pin = [Fraction(0)] * n
        pin[k] = Fraction(1)
        eq_rows.append(pin)
        eq_rhs.append(result.value)
        fixed.append(result.value)
    return tuple(fixed)
