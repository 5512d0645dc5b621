"""Arithmetic functions and the divisibility criteria for series integrality.

The membership question "do all coefficients of the exponential family lie in
a given integral form" reduces to divisibility statements about the Mobius
convolution mu * a.  This module implements the Mobius function, Dirichlet
convolution, the prime-power congruence test (Gauss congruences), and the
per-form divisibility criteria, together with a cross-validation harness that
compares the criteria against the direct coordinate-integrality oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import forms
from .sequences import SequenceSpec
from .series import expand_hat_series


def divisors(n: int) -> list[int]:
    out = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    out += [n // d for d in reversed(out) if d * d != n]
    return out


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization by trial division; fine for desk-scale bounds."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def mobius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def primes_upto(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if factorize(p) == ((p, 1),)]


def convolve(f: SequenceSpec, g: SequenceSpec, n: int) -> Fraction:
    """Dirichlet convolution (f * g)(n) = sum_{d | n} f(n/d) g(d)."""
    return sum((f.value(n // d) * g.value(d) for d in divisors(n)), Fraction(0))


def mobius_convolve(a: SequenceSpec, n: int) -> Fraction:
    return sum((mobius(n // d) * a.value(d) for d in divisors(n)), Fraction(0))


def _divides(q: Fraction) -> bool:
    return q.denominator == 1


@dataclass
class CriterionVerdict:
    name: str
    passed: bool
    witness: tuple | None = None
    per_index: dict[int, bool] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed


def check_gauss_congruences(a: SequenceSpec, bound: int) -> CriterionVerdict:
    """p^s | a(m p^s) - a(m p^(s-1)) for all m p^s <= bound, p prime, gcd(m,p)=1.

    FAIL carries the smallest violating (m, p, s) ordered by (m p^s, p, s).
    """
    violations = []
    for p in primes_upto(bound):
        s = 1
        while p**s <= bound:
            for m in range(1, bound // (p**s) + 1):
                if m % p == 0:
                    continue
                diff = a.value(m * p**s) - a.value(m * p ** (s - 1))
                if not _divides(diff / (p**s)):
                    violations.append((m * p**s, p, s, m))
            s += 1
    if not violations:
        return CriterionVerdict("gauss_congruences", True)
    n, p, s, m = min(violations)
    return CriterionVerdict("gauss_congruences", False, (m, p, s))


def hat_criterion(a: SequenceSpec, bound: int, require_integer: bool = True) -> CriterionVerdict:
    """All coefficients up to `bound` lie in the SYMMETRIC form
    iff r | (mu * a)(r) for every r <= bound."""
    if require_integer and not a.is_integral(bound):
        raise ValueError("criterion requires integer sequence")
    per = {r: _divides(mobius_convolve(a, r) / r) for r in range(1, bound + 1)}
    bad = [r for r, ok in per.items() if not ok]
    return CriterionVerdict("hat", not bad, (min(bad),) if bad else None, per)


def check_criterion(a: SequenceSpec, bound: int) -> CriterionVerdict:
    """HALF-form version: r | 2 (mu * a)(r)."""
    per = {r: _divides(2 * mobius_convolve(a, r) / r) for r in range(1, bound + 1)}
    bad = [r for r, ok in per.items() if not ok]
    return CriterionVerdict("check_form", not bad, (min(bad),) if bad else None, per)


def bar_criterion(a: SequenceSpec, bound: int, require_integer: bool = True) -> CriterionVerdict:
    """BAR-subring version: (2r) | 2 (mu * a)(2r) and a-supported-on-evens."""
    if require_integer and not a.is_integral(bound):
        raise ValueError("criterion requires integer sequence")
    per = {}
    for r in range(1, bound + 1):
        if r % 2 == 1:
            per[r] = a.value(r) == 0
        else:
            per[r] = _divides(2 * mobius_convolve(a, r) / r)
    bad = [r for r, ok in per.items() if not ok]
    return CriterionVerdict("bar", not bad, (min(bad),) if bad else None, per)


def mix_criterion(a: SequenceSpec, bound: int, require_integer: bool = True) -> CriterionVerdict:
    """MIXED-form version: odd r | (mu*a)(r) and even r | 2 (mu*a)(r)."""
    if require_integer and not a.is_integral(bound):
        raise ValueError("criterion requires integer sequence")
    per = {}
    for r in range(1, bound + 1):
        conv = mobius_convolve(a, r)
        per[r] = _divides(conv / r) if r % 2 == 1 else _divides(2 * conv / r)
    bad = [r for r, ok in per.items() if not ok]
    return CriterionVerdict("mix", not bad, (min(bad),) if bad else None, per)


_FORM_CRITERIA = {
    "SYMMETRIC": lambda a, b: hat_criterion(a, b, require_integer=False),
    "MIXED": lambda a, b: mix_criterion(a, b, require_integer=False),
    "HALF": check_criterion,
}


@dataclass
class CrossValidationReport:
    sequence: str
    bound: int
    agreements: list[tuple] = field(default_factory=list)
    disagreements: list[tuple] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not self.disagreements


def cross_validate(a: SequenceSpec, n: int) -> CrossValidationReport:
    """Criterion verdicts against direct coordinate-integrality, per degree.

    For each k <= n and each form, the cumulative criterion verdict up to k
    must match "coefficients 1..k all have integer coordinates".
    """
    report = CrossValidationReport(a.label(), n)
    series = expand_hat_series(a, n)
    for form, criterion in _FORM_CRITERIA.items():
        member_so_far = True
        for k in range(1, n + 1):
            member_so_far = member_so_far and bool(forms.membership(series[k], form))
            crit = criterion(a, k).passed
            record = (form, k, crit, member_so_far)
            if crit == member_so_far:
                report.agreements.append(record)
            else:
                report.disagreements.append(record)
    # Gauss congruences characterize the SYMMETRIC form for integer sequences
    if a.is_integral(n):
        member_so_far = True
        for k in range(1, n + 1):
            member_so_far = member_so_far and bool(forms.membership(series[k], "SYMMETRIC"))
            crit = check_gauss_congruences(a, k).passed
            record = ("SYMMETRIC/gauss", k, crit, member_so_far)
            if crit == member_so_far:
                report.agreements.append(record)
            else:
                report.disagreements.append(record)
    return report
