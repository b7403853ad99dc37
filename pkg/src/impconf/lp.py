"""Exact two-phase simplex over the rationals, Bland's rule throughout."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class InfeasibleLP(ArithmeticError):
    pass


class UnboundedLP(ArithmeticError):
    pass


@dataclass(frozen=True)
class LPSolution:
    value: Fraction
    primal: tuple[Fraction, ...]
    dual: tuple[Fraction, ...]
    basis: tuple[int, ...]


def _pivot(T, basis, i, j):
    row = T[i]
    piv = row[j]
    if piv != 1:
        T[i] = row = [v / piv for v in row]
    for k, other in enumerate(T):
        if k != i and other[j] != 0:
            f = other[j]
            T[k] = [a - f * b for a, b in zip(other, row)]
    basis[i] = j


def _run(T, basis, cost, allowed):
    """Minimize ``cost`` over the tableau in place."""
    m = len(T)
    while True:
        cb = [cost[b] for b in basis]
        basic = set(basis)
        enter = None
        for j in allowed:
            if j in basic:
                continue
            rj = cost[j] - sum(cb[i] * T[i][j] for i in range(m) if T[i][j] != 0)
            if rj < 0:
                enter = j
                break
        if enter is None:
            return
        leave = None
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            raise UnboundedLP("objective unbounded below")
        _pivot(T, basis, leave, enter)


def _solve_square(M, rhs):
    """Solve ``M z = rhs`` for square nonsingular ``M`` by exact elimination."""
    n = len(M)
    A = [list(M[i]) + [rhs[i]] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if A[r][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        A[col] = [v / p for v in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [a - f * b for a, b in zip(A[r], A[col])]
    return [A[i][n] for i in range(n)]


def solve_standard_form(E, f, c) -> LPSolution:
    """Minimize ``c . y`` subject to ``E y = f`` and ``y >= 0``.

    Returns an optimal basic solution together with the dual vector
    ``pi`` solving ``B^T pi = c_B``, which is optimal for
    ``max f . pi  s.t.  E^T pi <= c``.
    """
    m = len(E)
    n = len(c)
    E = [[Fraction(v) for v in row] for row in E]
    f = [Fraction(v) for v in f]
    c = [Fraction(v) for v in c]
    sign = [(-1 if f[i] < 0 else 1) for i in range(m)]
    T = []
    for i in range(m):
        row = [sign[i] * v for v in E[i]] + [Fraction(int(k == i)) for k in range(m)] + [sign[i] * f[i]]
        T.append(row)
    basis = list(range(n, n + m))
    phase1 = [Fraction(0)] * n + [Fraction(1)] * m
    _run(T, basis, phase1, range(n + m))
    if sum(T[i][-1] for i in range(m) if basis[i] >= n) != 0:
        raise InfeasibleLP("no nonnegative solution of E y = f")

    # Drive artificial variables out of the basis; drop redundant rows.
    keep = list(range(m))
    i = 0
    while i < len(T):
        if basis[i] >= n:
            j = next((j for j in range(n) if T[i][j] != 0), None)
            if j is None:
                del T[i], basis[i], keep[i]
                continue
            _pivot(T, basis, i, j)
        i += 1
    T = [row[:n] + [row[-1]] for row in T]
    _run(T, basis, c, range(n))

    y = [Fraction(0)] * n
    for i, b in enumerate(basis):
        y[b] = T[i][-1]
    # B^T pi = c_B over the kept rows of the original system.
    Bt = [[E[keep[r]][b] for r in range(len(keep))] for b in basis]
    pi_kept = _solve_square(Bt, [c[b] for b in basis]) if basis else []
    pi = [Fraction(0)] * m
    for r, val in zip(keep, pi_kept):
        pi[r] = val
    value = sum(ci * yi for ci, yi in zip(c, y))
    return LPSolution(value, tuple(y), tuple(pi), tuple(basis))


def maximize_margin(rows, rhs, mask) -> tuple[Fraction, list[Fraction], list[Fraction]]:
    """Solve ``max s`` subject to ``rows[k] . x + mask[k] * s <= rhs[k]``.

    ``x`` and ``s`` are free.  The problem is solved through its dual
    ``min rhs . y`` s.t. ``rows^T y = 0``, ``mask . y = 1``, ``y >= 0``,
    whose optimal ``y`` is returned as the third component; when the
    optimum is not positive it is a Farkas-type certificate.
    """
    nvars = len(rows[0]) if rows else 0
    E = [[rows[k][v] for k in range(len(rows))] for v in range(nvars)]
    E.append(list(mask))
    f = [0] * nvars + [1]
    sol = solve_standard_form(E, f, rhs)
    x = list(sol.dual[:nvars])
    s = sol.dual[nvars]
    return s, x, list(sol.primal)
