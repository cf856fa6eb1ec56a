"""Exact primal simplex for the weighted-cover LP behind polyhedron membership.

The only LP this package ever needs is

    maximize    sum(mu_j)
    subject to  sum_j mu_j * a_j <= v   componentwise
                mu >= 0

over nonnegative integer columns ``a_j`` and target ``v``, and the only
question asked of it is whether the optimum reaches a given threshold.  The
slack basis is feasible from the start (no phase one), Bland's smallest-index
rule rules out cycling, and all arithmetic is on ``Fraction``.

Two refinements matter to callers:

* the solver stops the moment the objective crosses the threshold, taking a
  partial step on the final pivot so the returned weights sum to the
  threshold exactly (this keeps their denominators small, which downstream
  dependence-witness search relies on);
* when the optimum stays below the threshold, the terminal dual vector is
  returned.  It is nonnegative, satisfies y . a_j >= 1 for every column and
  y . v = optimum, i.e. it is an exact separating functional.
"""

from __future__ import annotations

from fractions import Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def max_weight_lp(columns, target, threshold=1):
    """Decide whether max{sum(mu) : A mu <= target, mu >= 0} >= threshold.

    Returns ``("inside", weights)`` with ``weights`` a dict {column index:
    positive Fraction} summing to exactly ``threshold``, or
    ``("outside", separator, optimum)`` with ``separator`` a tuple of
    nonnegative Fractions.
    """
    n = len(target)
    ngens = len(columns)
    thr = Fraction(threshold)
    if thr <= 0:
        return "inside", {}

    ncols = ngens + n
    tab = []
    for i in range(n):
        row = [Fraction(columns[j][i]) for j in range(ngens)]
        row.extend(_ONE if t == i else _ZERO for t in range(n))
        tab.append(row)
    rhs = [Fraction(c) for c in target]
    basis = list(range(ngens, ngens + n))
    in_basis = [False] * ngens + [True] * n
    obj = _ZERO

    while True:
        # Entering column: smallest index with negative reduced cost (Bland).
        enter = -1
        enter_red = _ZERO
        for j in range(ncols):
            if in_basis[j]:
                continue
            red = _ZERO
            for i in range(n):
                if basis[i] < ngens:
                    red += tab[i][j]
            if j < ngens:
                red -= _ONE
            if red < 0:
                enter, enter_red = j, red
                break
        if enter < 0:
            # Optimal below threshold; read the dual off the slack columns.
            sep = []
            for i in range(n):
                y = _ZERO
                for t in range(n):
                    if basis[t] < ngens:
                        y += tab[t][ngens + i]
                sep.append(y)
            return "outside", tuple(sep), obj

        direction = [tab[i][enter] for i in range(n)]
        piv_row = -1
        theta_max = None
        for i in range(n):
            if direction[i] > 0:
                ratio = rhs[i] / direction[i]
                if (
                    theta_max is None
                    or ratio < theta_max
                    or (ratio == theta_max and basis[i] < basis[piv_row])
                ):
                    theta_max = ratio
                    piv_row = i

        # The objective climbs at rate -enter_red; if the threshold falls
        # within this step (always true when the column is unbounded), stop
        # at it exactly instead of pivoting through.
        theta_need = (thr - obj) / -enter_red
        if theta_max is None or theta_need <= theta_max:
            weights = {}
            for i in range(n):
                if basis[i] < ngens:
                    w = rhs[i] - theta_need * direction[i]
                    if w:
                        weights[basis[i]] = w
            if enter < ngens and theta_need:
                weights[enter] = weights.get(enter, _ZERO) + theta_need
            return "inside", weights

        pd = tab[piv_row][enter]
        prow = [x / pd for x in tab[piv_row]]
        tab[piv_row] = prow
        rhs[piv_row] /= pd
        prhs = rhs[piv_row]
        for i in range(n):
            if i == piv_row:
                continue
            f = tab[i][enter]
            if f:
                row = tab[i]
                tab[i] = [a - f * b for a, b in zip(row, prow)]
                rhs[i] -= f * prhs
        in_basis[basis[piv_row]] = False
        in_basis[enter] = True
        basis[piv_row] = enter
        obj = _ZERO
        for i in range(n):
            if basis[i] < ngens:
                obj += rhs[i]
