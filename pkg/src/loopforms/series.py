"""Truncated one-variable series with GradedPolynomial coefficients.

The exponential families are generated as

    series(a, u) = exp( sum_{r>0} a_r h_r u^r / r ),

truncated at a caller-chosen degree N.  With deg(h_r) = r the k-th
coefficient is homogeneous of degree k.  Four named families are used
throughout:

    HAT    a = ONE
    BAR    a = HALF_ONE2   (supported on even degrees only)
    CHECK  a = HALF_ONE
    TILDE  HAT twisted by the inverse square root of its degree-4 part

All arithmetic is exact rational; series inversion and inverse square roots
require constant term exactly 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .polynomial import GradedPolynomial
from .sequences import ONE, HALF_ONE, HALF_ONE2, SequenceSpec


class TruncatedSeries1:
    """coeffs[k] is the k-th coefficient; truncation at index n (inclusive)."""

    __slots__ = ("coeffs", "n")

    def __init__(self, coeffs: list[GradedPolynomial], n: int):
        if len(coeffs) != n + 1:
            raise ValueError("coefficient list does not match truncation")
        self.coeffs = coeffs
        self.n = n

    @staticmethod
    def one(n: int) -> "TruncatedSeries1":
        return TruncatedSeries1(
            [GradedPolynomial.one()] + [GradedPolynomial.zero() for _ in range(n)], n
        )

    def __getitem__(self, k: int) -> GradedPolynomial:
        if 0 <= k <= self.n:
            return self.coeffs[k]
        return GradedPolynomial.zero()

    def mul(self, other: "TruncatedSeries1") -> "TruncatedSeries1":
        n = min(self.n, other.n)
        out = [GradedPolynomial.zero() for _ in range(n + 1)]
        for i in range(n + 1):
            a = self.coeffs[i]
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries1(out, n)

    def negate_variable(self) -> "TruncatedSeries1":
        """Substitute -u for u."""
        out = [c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)]
        return TruncatedSeries1(out, self.n)

    def inverse(self) -> "TruncatedSeries1":
        if self.coeffs[0] != GradedPolynomial.one():
            raise ValueError("series inversion requires constant term 1")
        inv = [GradedPolynomial.one()]
        for k in range(1, self.n + 1):
            acc = GradedPolynomial.zero()
            for j in range(1, k + 1):
                acc = acc + self.coeffs[j] * inv[k - j]
            inv.append(-acc)
        return TruncatedSeries1(inv, self.n)

    def log(self) -> "TruncatedSeries1":
        if self.coeffs[0] != GradedPolynomial.one():
            raise ValueError("series logarithm requires constant term 1")
        # k L_k = k F_k - sum_{j<k} j L_j F_{k-j}
        logs = [GradedPolynomial.zero()]
        for k in range(1, self.n + 1):
            acc = self.coeffs[k].scale(k)
            for j in range(1, k):
                acc = acc - logs[j].scale(j) * self.coeffs[k - j]
            logs.append(acc.scale(Fraction(1, k)))
        return TruncatedSeries1(logs, self.n)

    def exp(self) -> "TruncatedSeries1":
        if self.coeffs[0]:
            raise ValueError("series exponential requires zero constant term")
        out = [GradedPolynomial.one()]
        for k in range(1, self.n + 1):
            acc = GradedPolynomial.zero()
            for j in range(1, k + 1):
                acc = acc + self.coeffs[j].scale(j) * out[k - j]
            out.append(acc.scale(Fraction(1, k)))
        return TruncatedSeries1(out, self.n)

    def fractional_power(self, alpha: Fraction) -> "TruncatedSeries1":
        """F^alpha = exp(alpha log F); needs constant term 1."""
        scaled = self.log()
        out = [c.scale(alpha) for c in scaled.coeffs]
        return TruncatedSeries1(out, self.n).exp()

    def inverse_sqrt(self) -> "TruncatedSeries1":
        return self.fractional_power(Fraction(-1, 2))

    def lambda_shift(self, m: int) -> "TruncatedSeries1":
        """Apply h_r -> h_{m r} to every coefficient (no variable change)."""
        return TruncatedSeries1([c.lambda_shift(m) for c in self.coeffs], self.n)

    def reindex(self, m: int, n: int) -> "TruncatedSeries1":
        """Interpret self as a series in u^m: coefficient k moves to index m*k."""
        out = [GradedPolynomial.zero() for _ in range(n + 1)]
        for k, c in enumerate(self.coeffs):
            if m * k > n:
                break
            out[m * k] = c
        return TruncatedSeries1(out, n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries1):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs


@lru_cache(maxsize=None)
def _hat_cached(spec: SequenceSpec, n: int) -> TruncatedSeries1:
    log_coeffs = [GradedPolynomial.zero()]
    for r in range(1, n + 1):
        a = spec.value(r)
        log_coeffs.append(
            GradedPolynomial.gen(r, Fraction(a, r)) if a else GradedPolynomial.zero()
        )
    return TruncatedSeries1(log_coeffs, n).exp()


def expand_hat_series(spec: SequenceSpec, n: int) -> TruncatedSeries1:
    """Coefficients 0..n of exp(sum a_r h_r u^r / r)."""
    if n < 0:
        raise ValueError("truncation must be >= 0")
    return _hat_cached(spec, n)


SERIES_NAMES = ("HAT", "BAR", "CHECK", "TILDE")


def bar_even_part(n: int) -> TruncatedSeries1:
    """The BAR family laid out in the squared variable: coefficient k is the
    degree-2k BAR coefficient.  Odd-degree BAR coefficients vanish, so this
    carries the whole series."""
    bar = expand_hat_series(HALF_ONE2, 2 * n)
    return TruncatedSeries1([bar[2 * k] for k in range(n + 1)], n)


def named_series(name: str, n: int) -> TruncatedSeries1:
    if name == "HAT":
        return expand_hat_series(ONE, n)
    if name == "BAR":
        return expand_hat_series(HALF_ONE2, n)
    if name == "CHECK":
        return expand_hat_series(HALF_ONE, n)
    if name == "TILDE":
        return _tilde_series(n)
    raise ValueError(f"unknown series name {name!r}")


@lru_cache(maxsize=None)
def _tilde_series(n: int) -> TruncatedSeries1:
    # HAT(u) * (lambda_4 of the inverse square root of HAT)(u^4)
    hat = expand_hat_series(ONE, n)
    inner = expand_hat_series(ONE, n // 4).inverse_sqrt().lambda_shift(4)
    return hat.mul(inner.reindex(4, n))


# -- identity checks ---------------------------------------------------

@dataclass
class SeriesVerdict:
    identity: str
    equal: bool
    detail: str = ""

    def __bool__(self) -> bool:
        return self.equal


COMM_IDENTITIES = (
    "HATBAR",
    "HATBAR_CONVOLUTION",
    "CHECK_SQUARE",
    "BAR_FROM_CHECK",
    "TILDE_FACTORIZATION",
)


def _first_mismatch(name: str, lhs: TruncatedSeries1, rhs: TruncatedSeries1) -> SeriesVerdict:
    for k in range(min(lhs.n, rhs.n) + 1):
        diff = lhs[k] - rhs[k]
        if diff:
            lam = sorted(diff.terms)[0]
            return SeriesVerdict(
                name, False,
                f"first mismatch at coefficient {k}, monomial {lam}: "
                f"lhs {lhs[k].coefficient(lam)} vs rhs {rhs[k].coefficient(lam)}",
            )
    return SeriesVerdict(name, True)


def verify_comm_identity(identity: str, n: int) -> SeriesVerdict:
    """Expand both sides of a catalogued series identity and compare exactly."""
    if identity == "HATBAR":
        hat = expand_hat_series(ONE, n)
        prod = hat.mul(hat.negate_variable())
        for k in range(1, n + 1, 2):
            if prod[k]:
                return SeriesVerdict(identity, False, f"odd coefficient {k} of hat(u)hat(-u) nonzero")
        m = n // 2
        lam2 = TruncatedSeries1([hat[k].lambda_shift(2) for k in range(m + 1)], m)
        even = TruncatedSeries1([prod[2 * k] for k in range(m + 1)], m)
        v = _first_mismatch(identity, lam2, even)
        if not v:
            return v
        barsq = bar_even_part(m).mul(bar_even_part(m))
        return _first_mismatch(identity, even, barsq)

    if identity == "HATBAR_CONVOLUTION":
        # alternating hat convolution equals the bar convolution, degree 2r
        rmax = n
        hat = expand_hat_series(ONE, 2 * rmax)
        bar = expand_hat_series(HALF_ONE2, 2 * rmax)
        for r in range(1, rmax + 1):
            lhs = GradedPolynomial.zero()
            for s in range(0, 2 * r + 1):
                term = hat[2 * r - s] * hat[s]
                lhs = lhs + (term if s % 2 == 0 else -term)
            rhs = GradedPolynomial.zero()
            for s in range(0, r + 1):
                rhs = rhs + bar[2 * r - 2 * s] * bar[2 * s]
            if lhs != rhs:
                return SeriesVerdict(identity, False, f"mismatch at r={r}")
        return SeriesVerdict(identity, True)

    if identity == "CHECK_SQUARE":
        hat = expand_hat_series(ONE, n)
        check = expand_hat_series(HALF_ONE, n)
        return _first_mismatch(identity, hat, check.mul(check))

    if identity == "BAR_FROM_CHECK":
        bar = expand_hat_series(HALF_ONE2, n)
        check = expand_hat_series(HALF_ONE, n)
        return _first_mismatch(identity, bar, check.mul(check.negate_variable()))

    if identity == "TILDE_FACTORIZATION":
        # inverse-square-root route against the inverted even-part route
        lhs = _tilde_series(n)
        hat = expand_hat_series(ONE, n)
        factor = bar_even_part(n // 2).inverse().lambda_shift(2)
        rhs = hat.mul(factor.reindex(4, n))
        return _first_mismatch(identity, lhs, rhs)

    raise ValueError(f"unknown identity {identity!r}")


def homogeneity_check(series: TruncatedSeries1) -> bool:
    """Every coefficient k homogeneous of degree k."""
    return all(series[k].is_homogeneous(k) for k in range(series.n + 1))
