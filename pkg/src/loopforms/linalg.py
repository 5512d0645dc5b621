"""Exact linear algebra over the rationals and integer lattice normal forms."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def rref(matrix: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rref, pivot column indices)."""
    m = [row[:] for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(matrix: list[list[Fraction]]) -> int:
    return len(rref(matrix)[1])


def solve(columns: list[list[Fraction]], target: list[Fraction]) -> list[Fraction] | None:
    """Solve sum_j x_j * columns[j] = target; None if inconsistent.

    Requires the columns to be linearly independent (raises otherwise), which
    is the situation for basis-coordinate extraction.
    """
    if not columns:
        return None if any(t != 0 for t in target) else []
    rows = len(target)
    aug = [[col[i] for col in columns] + [target[i]] for i in range(rows)]
    red, pivots = rref(aug)
    ncols = len(columns)
    if ncols in pivots:
        return None  # inconsistent system
    if len(pivots) != ncols:
        raise ValueError("columns are linearly dependent")
    sol = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        sol[c] = red[r][ncols]
    return sol


def hermite_normal_form(matrix: list[list[int]]) -> list[list[int]]:
    """Row-style HNF of an integer matrix (zero rows dropped).

    Pivots are positive, entries above a pivot are reduced into [0, pivot).
    The row span over Z is preserved, so equal lattices give equal HNFs.
    Elimination always reduces against the smallest remaining column entry,
    which keeps intermediate entries from blowing up.
    """
    m = [row[:] for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    r = 0
    for c in range(cols):
        while True:
            nz = [i for i in range(r, rows) if m[i][c] != 0]
            if not nz:
                break
            pivot = min(nz, key=lambda i: abs(m[i][c]))
            if pivot != r:
                m[r], m[pivot] = m[pivot], m[r]
            done = True
            for i in range(r + 1, rows):
                if m[i][c] != 0:
                    q = m[i][c] // m[r][c]
                    if q:
                        m[i] = [a - q * b for a, b in zip(m[i], m[r])]
                    if m[i][c] != 0:
                        done = False
            if done:
                break
        if r < rows and m[r][c] != 0:
            if m[r][c] < 0:
                m[r] = [-a for a in m[r]]
            for i in range(r):
                q = m[i][c] // m[r][c]
                if q:
                    m[i] = [a - q * b for a, b in zip(m[i], m[r])]
            r += 1
            if r == rows:
                break
    return [row for row in m[:r] if any(row)]


def clear_denominators(rows: list[list[Fraction]]) -> tuple[int, list[list[int]]]:
    """Scale rational rows by the lcm of all denominators; returns (scale, int rows)."""
    denom = 1
    for row in rows:
        for x in row:
            denom = lcm(denom, x.denominator)
    out = [[int(x * denom) for x in row] for row in rows]
    return denom, out


def integer_solve_triangular(hnf: list[list[int]], target: list[int]) -> list[Fraction] | None:
    """Coordinates of target in the row span of an HNF basis (exact, rational)."""
    coords: list[Fraction] = []
    t = [Fraction(x) for x in target]
    for row in hnf:
        lead = next((j for j, x in enumerate(row) if x != 0), None)
        if lead is None:
            coords.append(Fraction(0))
            continue
        c = t[lead] / row[lead]
        coords.append(c)
        t = [a - c * b for a, b in zip(t, row)]
    if any(x != 0 for x in t):
        return None
    return coords
