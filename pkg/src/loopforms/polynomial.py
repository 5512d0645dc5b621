"""Sparse exact polynomials in the graded generators h_1, h_2, h_3, ...

A GradedPolynomial is a dictionary mapping a Partition (the monomial
prod h_r^{e_r}, keyed by its exponent map) to a nonzero Fraction.  The grading
gives h_r degree r, so the monomial keyed by a partition of d is homogeneous
of degree d.  Zero coefficients are never stored; the zero polynomial is the
empty dict wrapped in a GradedPolynomial.

Also provides the univariate specializations used to turn the exponential
generators into binomial coefficients and divided powers of a single variable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .partitions import EMPTY, Partition, degree, make_partition, merge, scale_parts


class GradedPolynomial:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Partition, Fraction] | None = None):
        clean: dict[Partition, Fraction] = {}
        if terms:
            for lam, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    clean[lam] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "GradedPolynomial":
        return GradedPolynomial()

    @staticmethod
    def one() -> "GradedPolynomial":
        return GradedPolynomial({EMPTY: Fraction(1)})

    @staticmethod
    def constant(c) -> "GradedPolynomial":
        return GradedPolynomial({EMPTY: Fraction(c)})

    @staticmethod
    def gen(r: int, coeff=1) -> "GradedPolynomial":
        """The generator h_r, optionally scaled."""
        if r < 1:
            raise ValueError("generator index must be >= 1")
        return GradedPolynomial({make_partition([r]): Fraction(coeff)})

    @staticmethod
    def monomial(lam: Partition, coeff=1) -> "GradedPolynomial":
        return GradedPolynomial({lam: Fraction(coeff)})

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "GradedPolynomial") -> "GradedPolynomial":
        out = dict(self.terms)
        for lam, c in other.terms.items():
            s = out.get(lam, Fraction(0)) + c
            if s == 0:
                out.pop(lam, None)
            else:
                out[lam] = s
        res = GradedPolynomial()
        res.terms = out
        return res

    def __neg__(self) -> "GradedPolynomial":
        res = GradedPolynomial()
        res.terms = {lam: -c for lam, c in self.terms.items()}
        return res

    def __sub__(self, other: "GradedPolynomial") -> "GradedPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "GradedPolynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out: dict[Partition, Fraction] = {}
        for lam, a in self.terms.items():
            for mu, b in other.terms.items():
                key = merge(lam, mu)
                s = out.get(key, Fraction(0)) + a * b
                if s == 0:
                    out.pop(key, None)
                else:
                    out[key] = s
        res = GradedPolynomial()
        res.terms = out
        return res

    def __rmul__(self, other) -> "GradedPolynomial":
        return self.scale(other)

    def scale(self, c) -> "GradedPolynomial":
        c = Fraction(c)
        if c == 0:
            return GradedPolynomial()
        res = GradedPolynomial()
        res.terms = {lam: a * c for lam, a in self.terms.items()}
        return res

    def __pow__(self, n: int) -> "GradedPolynomial":
        if n < 0:
            raise ValueError("negative powers are not defined here")
        result = GradedPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- structure ----------------------------------------------------

    def is_homogeneous(self, d: int) -> bool:
        return all(degree(lam) == d for lam in self.terms)

    def homogeneous_components(self) -> dict[int, "GradedPolynomial"]:
        comps: dict[int, dict[Partition, Fraction]] = {}
        for lam, c in self.terms.items():
            comps.setdefault(degree(lam), {})[lam] = c
        out = {}
        for d, terms in comps.items():
            p = GradedPolynomial()
            p.terms = terms
            out[d] = p
        return out

    def coefficient(self, lam: Partition) -> Fraction:
        return self.terms.get(lam, Fraction(0))

    def lambda_shift(self, m: int) -> "GradedPolynomial":
        """The algebra endomorphism h_r -> h_{m r}; multiplies degrees by m."""
        if m < 1:
            raise ValueError("shift factor must be >= 1")
        if m == 1:
            return self
        res = GradedPolynomial()
        res.terms = {scale_parts(lam, m): c for lam, c in self.terms.items()}
        return res

    def __repr__(self) -> str:
        return f"GradedPolynomial({self.to_text()})"

    def to_text(self) -> str:
        """Canonical rendering: terms sorted by (degree, partition)."""
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda kv: (degree(kv[0]), kv[0]))
        chunks = []
        for lam, c in items:
            mono = "*".join(
                f"h{p}" + (f"^{m}" if m > 1 else "") for p, m in lam
            )
            if not mono:
                chunks.append(str(c))
            elif c == 1:
                chunks.append(mono)
            elif c == -1:
                chunks.append(f"-{mono}")
            else:
                chunks.append(f"{c}*{mono}")
        text = " + ".join(chunks)
        return text.replace("+ -", "- ")


def poly_add(p: GradedPolynomial, q: GradedPolynomial) -> GradedPolynomial:
    return p + q


def poly_mul(p: GradedPolynomial, q: GradedPolynomial) -> GradedPolynomial:
    return p * q


def lambda_shift(m: int, p: GradedPolynomial) -> GradedPolynomial:
    return p.lambda_shift(m)


# -- univariate specializations ---------------------------------------

class Poly1:
    """Dense univariate polynomial over the rationals (coefficient list)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):  # coeffs[k] multiplies x^k
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = cs

    @staticmethod
    def x() -> "Poly1":
        return Poly1([0, 1])

    @staticmethod
    def const(c) -> "Poly1":
        return Poly1([c])

    def __add__(self, other: "Poly1") -> "Poly1":
        n = max(len(self.coeffs), len(other.coeffs))
        out = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            out[i] += c
        for i, c in enumerate(other.coeffs):
            out[i] += c
        return Poly1(out)

    def __mul__(self, other) -> "Poly1":
        if isinstance(other, (int, Fraction)):
            return Poly1([c * other for c in self.coeffs])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly1(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly1):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        chunks = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                chunks.append(str(c))
            elif k == 1:
                chunks.append(f"{c}*x" if c != 1 else "x")
            else:
                chunks.append(f"{c}*x^{k}" if c != 1 else f"x^{k}")
        return " + ".join(chunks).replace("+ -", "- ")


def binomial_poly(r: int) -> Poly1:
    """x(x-1)...(x-r+1)/r! as an exact univariate polynomial."""
    out = Poly1.const(1)
    for i in range(r):
        out = out * Poly1([-i, 1])
    fact = 1
    for i in range(2, r + 1):
        fact *= i
    return out * Fraction(1, fact)


def specialize_b(p: GradedPolynomial) -> Poly1:
    """Send h_r to (-1)^(r-1) x.

    The sign makes the exponential generators land on the binomial
    coefficients: the degree-r generator of the ONE family maps to
    binom(x, r).
    """
    out = Poly1()
    for lam, c in p.terms.items():
        mono = Poly1.const(c)
        for part, mult in lam:
            factor = Poly1([0, 1 if part % 2 == 1 else -1])
            for _ in range(mult):
                mono = mono * factor
        out = out + mono
    return out


def specialize_dp(p: GradedPolynomial) -> Poly1:
    """Send h_1 to x and every h_r with r > 1 to 0."""
    out = Poly1()
    for lam, c in p.terms.items():
        if any(part != 1 for part, _ in lam):
            continue
        k = lam[0][1] if lam else 0
        mono = [Fraction(0)] * (k + 1)
        mono[k] = c
        out = out + Poly1(mono)
    return out
