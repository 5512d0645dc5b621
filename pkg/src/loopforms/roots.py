"""Root systems of the twisted loop algebras, at general rank.

Finite part: simple roots a_1..a_n with Cartan pairing a[i][j] given by the
tridiagonal matrix with 2 on the diagonal, a[1][2] = -2 and every other
off-diagonal entry -1 (rank >= 2); for rank 1 the finite part is the single
root a_1.  Positive finite roots split into the "s" family (consecutive sums
a_i + ... + a_j) and the "m" family (2a_1 + ... + 2a_i + a_{i+1} + ... + a_j).

Real affine roots come in three families: s and m roots with arbitrary loop
offset, and doubled s-roots 2*alpha + (2m+1)*delta.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


def cartan_matrix(n: int) -> list[list[int]]:
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
    for i in range(n - 1):
        a[i][i + 1] = -1
        a[i + 1][i] = -1
    if n >= 2:
        a[0][1] = -2
    return a


@dataclass(frozen=True)
class AffineRoot:
    """finite part (coefficients over simple roots) plus a delta coefficient."""

    finite: tuple[int, ...]
    delta: int = 0
    doubled: bool = False  # marks the 2*alpha + odd*delta family

    def family(self) -> str:
        if self.doubled:
            return "l"
        if 2 in self.finite:
            return "m"
        return "s"

    def __repr__(self):
        return f"AffineRoot({self.finite}, delta={self.delta}{', doubled' if self.doubled else ''})"


def finite_positive_roots(n: int) -> tuple[list[AffineRoot], list[AffineRoot]]:
    """(s family, m family) of positive finite roots."""
    s_roots = []
    for i in range(n):
        for j in range(i, n):
            coeffs = [0] * n
            for k in range(i, j + 1):
                coeffs[k] = 1
            s_roots.append(AffineRoot(tuple(coeffs)))
    m_roots = []
    for i in range(n - 1):
        for j in range(i + 1, n):
            coeffs = [0] * n
            for k in range(i + 1):
                coeffs[k] = 2
            for k in range(i + 1, j + 1):
                coeffs[k] = 1
            m_roots.append(AffineRoot(tuple(coeffs)))
    return s_roots, m_roots


def enumerate_roots(n: int, loop_window: int) -> list[AffineRoot]:
    """All positive real roots with |delta coefficient| <= loop_window."""
    s_roots, m_roots = finite_positive_roots(n)
    out: list[AffineRoot] = []
    for alpha in s_roots + m_roots:
        for m in range(-loop_window, loop_window + 1):
            out.append(AffineRoot(alpha.finite, m))
    for alpha in s_roots:
        for m in range(-loop_window, loop_window + 1):
            if m % 2 == 1:
                out.append(AffineRoot(tuple(2 * c for c in alpha.finite), m, doubled=True))
    return out


def weyl_reflect(i: int, root: AffineRoot, n: int) -> AffineRoot:
    """Simple reflection s_i on the finite part (delta is fixed).

    For a doubled root 2*alpha + m*delta the reflection acts through alpha.
    """
    if not 1 <= i <= n:
        raise ValueError("reflection index out of range")
    a = cartan_matrix(n)
    coeffs = list(root.finite)
    if root.doubled:
        if any(c % 2 for c in coeffs):
            raise ValueError("doubled root must have even finite part")
        half = [c // 2 for c in coeffs]
        pairing = sum(a[i - 1][j] * half[j] for j in range(n))
        half[i - 1] -= pairing
        return AffineRoot(tuple(2 * c for c in half), root.delta, doubled=True)
    pairing = sum(a[i - 1][j] * coeffs[j] for j in range(n))
    coeffs[i - 1] -= pairing
    return AffineRoot(tuple(coeffs), root.delta)


def convex_order(n: int = 2) -> list[tuple[int, ...]]:
    """Finite positive roots of rank 2 in the order generated by the fixed
    reduced expression s2 s1 s2 s1 of the longest Weyl element."""
    if n != 2:
        raise ValueError("convex order is fixed only at rank 2")
    return [(0, 1), (1, 1), (2, 1), (1, 0)]


def root_iter(n: int) -> Iterator[AffineRoot]:
    s_roots, m_roots = finite_positive_roots(n)
    yield from s_roots
    yield from m_roots
