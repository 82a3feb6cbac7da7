"""Exact two-phase tableau simplex over Fractions with Bland's rule.

Solves::

    minimise    c . x
    subject to  A_ub x <= b_ub
                A_eq x == b_eq
                x >= 0

Dual values follow the convention ``c - A^T y >= 0`` at the optimum, so
``y`` is non-positive on ``<=`` rows, free on equality rows, and
``b . y`` equals the optimal objective.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: str
    x: list[Fraction] | None = None
    objective: Fraction | None = None
    duals_ub: list[Fraction] = field(default_factory=list)
    duals_eq: list[Fraction] = field(default_factory=list)
    pivots: int = 0


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.pivots = 0

    def pivot(self, r: int, j: int) -> None:
        prow = self.rows[r]
        p = prow[j]
        if p != 1:
            inv = 1 / p
            prow[:] = [a * inv if a else a for a in prow]
            self.rhs[r] *= inv
        nz = [(k, a) for k, a in enumerate(prow) if a]
        prhs = self.rhs[r]
        for q, row in enumerate(self.rows):
            if q == r:
                continue
            f = row[j]
            if not f:
                continue
            for k, a in nz:
                row[k] -= f * a
            self.rhs[q] -= f * prhs
        self.basis[r] = j
        self.pivots += 1

    def reduced_costs(self, cost: Sequence[Fraction]) -> tuple[list[Fraction], Fraction]:
        d = list(cost)
        value = Fraction(0)
        for r, b in enumerate(self.basis):
            cb = cost[b]
            if not cb:
                continue
            value += cb * self.rhs[r]
            for k, a in enumerate(self.rows[r]):
                if a:
                    d[k] -= cb * a
        return d, value

    def run(self, cost: Sequence[Fraction], allowed: Sequence[bool]) -> str:
        while True:
            d, _ = self.reduced_costs(cost)
            # Bland: lowest-index improving column
            enter = next((j for j, dj in enumerate(d) if dj < 0 and allowed[j]), None)
            if enter is None:
                return OPTIMAL
            best = None
            for r, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    ratio = self.rhs[r] / a
                    key = (ratio, self.basis[r])
                    if best is None or key < best[0]:
                        best = (key, r)
            if best is None:
                return UNBOUNDED
            self.pivot(best[1], enter)


def linprog_exact(c, A_ub=(), b_ub=(), A_eq=(), b_eq=()) -> LPResult:
    c = [Fraction(v) for v in c]
    nvar = len(c)
    A_ub = [[Fraction(a) for a in row] for row in A_ub]
    A_eq = [[Fraction(a) for a in row] for row in A_eq]
    b_ub = [Fraction(b) for b in b_ub]
    b_eq = [Fraction(b) for b in b_eq]
    if any(len(row) != nvar for row in A_ub + A_eq):
        raise ValueError("constraint rows must match the number of variables")
    if len(A_ub) != len(b_ub) or len(A_eq) != len(b_eq):
        raise ValueError("constraint matrix and right-hand side lengths differ")

    m_ub, m_eq = len(A_ub), len(A_eq)
    m = m_ub + m_eq
    # columns: structural | one slack per <= row | one artificial per row
    slack0 = nvar
    art0 = nvar + m_ub
    ncol = art0 + m
    rows, rhs, basis, flipped = [], [], [], []
    for r in range(m):
        if r < m_ub:
            coeffs, b = A_ub[r], b_ub[r]
        else:
            coeffs, b = A_eq[r - m_ub], b_eq[r - m_ub]
        row = coeffs + [Fraction(0)] * (ncol - nvar)
        if r < m_ub:
            row[slack0 + r] = Fraction(1)
        flip = b < 0
        if flip:
            row = [-a for a in row]
            b = -b
        row[art0 + r] = Fraction(1)
        rows.append(row)
        rhs.append(b)
        flipped.append(flip)
        # an unflipped <= row starts with its slack basic
        basis.append(slack0 + r if r < m_ub and not flip else art0 + r)
    tab = _Tableau(rows, rhs, basis)

    is_art = [j >= art0 for j in range(ncol)]
    needs_phase1 = any(is_art[b] for b in basis)
    if needs_phase1:
        cost1 = [Fraction(1) if is_art[j] else Fraction(0) for j in range(ncol)]
        tab.run(cost1, [True] * ncol)
        _, infeas = tab.reduced_costs(cost1)
        if infeas > 0:
            return LPResult(INFEASIBLE, pivots=tab.pivots)
        for r in range(m):
            if is_art[tab.basis[r]]:
                j = next((k for k in range(art0) if tab.rows[r][k]), None)
                if j is not None:
                    tab.pivot(r, j)
                # otherwise the row is redundant and its artificial stays at 0

    cost2 = c + [Fraction(0)] * (ncol - nvar)
    status = tab.run(cost2, [not a for a in is_art])
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, pivots=tab.pivots)

    x = [Fraction(0)] * nvar
    for r, b in enumerate(tab.basis):
        if b < nvar:
            x[b] = tab.rhs[r]
    d, value = tab.reduced_costs(cost2)
    duals = []
    for r in range(m):
        # identity column of row r is its artificial; reduced cost = -y'_r
        y = -d[art0 + r]
        duals.append(-y if flipped[r] else y)
    return LPResult(
        OPTIMAL,
        x=x,
        objective=value,
        duals_ub=duals[:m_ub],
        duals_eq=duals[m_ub:],
        pivots=tab.pivots,
    )
