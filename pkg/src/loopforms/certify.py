"""Integer-coordinate certificates for divided powers of composite root vectors.

The group commutator  exp(-uA) exp(-vB) exp(uA) exp(vB)  expands with
coefficients that are visibly integer combinations of ordered products of
divided powers of A and B.  When [A, B] = C with the higher brackets arranged
as in the catalogued exponential-pair identities, the (k, k) coefficient is
C^(k) and the (2k, k) coefficient is the k-th divided power of the
double-bracket factor.  Matching those coefficients in PBW normal form
certifies that the divided powers of the composite root vectors lie in the
subring generated by divided powers of the plain generators, and the
certificate records the explicit combination.

Also houses the imaginary-part integrality statements: the commutative
membership oracle applied to the exponential families sitting inside the
enveloping algebra, and the lattice identity expressing the mixed form by the
alternative generator set (twisted family, doubled-power family, even family).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from . import a4 as _a4
from . import forms
from .a22 import LieElement
from .pbw import TruncatedSeries2, UEAElement, exp_gen, uea_mul
from .sequences import CPOW2, SequenceSpec
from .series import expand_hat_series, named_series


@dataclass
class Certificate:
    target: str
    k: int
    combination: list = field(default_factory=list)  # (sign, ((gen, exp), ...))
    verified: bool = False
    notes: list = field(default_factory=list)

    def __bool__(self):
        return self.verified


def _group_commutator(algebra: str, a_idx, b_idx, n: int) -> TruncatedSeries2:
    return (
        exp_gen(algebra, a_idx, 1, 0, n, -1)
        .mul(exp_gen(algebra, b_idx, 0, 1, n, -1))
        .mul(exp_gen(algebra, a_idx, 1, 0, n))
        .mul(exp_gen(algebra, b_idx, 0, 1, n))
    )


def _combination(a_idx, b_idx, p: int, q: int) -> list:
    out = []
    for i1 in range(p + 1):
        i2 = p - i1
        for j1 in range(q + 1):
            j2 = q - j1
            sign = -1 if (i1 + j1) % 2 else 1
            word = tuple(
                (idx, e)
                for idx, e in ((a_idx, i1), (b_idx, j1), (a_idx, i2), (b_idx, j2))
                if e > 0
            )
            out.append((sign, word))
    return out


def certify_sum_root(r: int, s: int, k: int) -> Certificate:
    """(sum-root vector at loop r+s)^(k) from generators at nodes 1 and 2."""
    a_idx = _a4.x(1, _a4.ALPHA_1, r)
    b_idx = _a4.x(1, _a4.ALPHA_2, s)
    series = _group_commutator("a4", a_idx, b_idx, 2 * k)
    got = series[(k, k)]
    target_el = LieElement.basis(_a4.x(1, _a4.ALPHA_11, r + s)).scale(-1)
    want = _divided_power_of(target_el, k)
    cert = Certificate(f"(-x_sum[{r + s}])^({k})", k, _combination(a_idx, b_idx, k, k))
    cert.verified = got == want
    return cert


def certify_doubled_root(r: int, s: int, k: int) -> Certificate:
    """(doubled-root vector at loop 2r+s)^(k); the (2k, k) coefficient."""
    a_idx = _a4.x(1, _a4.ALPHA_1, r)
    b_idx = _a4.x(1, _a4.ALPHA_2, s)
    series = _group_commutator("a4", a_idx, b_idx, 3 * k)
    got = series[(2 * k, k)]
    sign = 1 if r % 2 else -1  # (-1)^(r+1)
    target_el = LieElement.basis(_a4.x(1, _a4.ALPHA_21, 2 * r + s)).scale(sign)
    want = _divided_power_of(target_el, k)
    cert = Certificate(f"({'+' if sign > 0 else '-'}x_dbl[{2 * r + s}])^({k})", k,
                       _combination(a_idx, b_idx, 2 * k, k))
    cert.verified = got == want
    return cert


def certify_long_root(r: int, s: int, k: int) -> Certificate:
    """(half long-root vector at odd loop r+s)^(k) from a medium pair; the
    medium generator is itself certified by certify_doubled_root."""
    if (r + s) % 2 == 0:
        raise ValueError("the long family carries odd loop degree")
    a_idx = _a4.x(1, _a4.ALPHA_2, r)
    b_idx = _a4.x(1, _a4.ALPHA_21, s)
    series = _group_commutator("a4", a_idx, b_idx, 2 * k)
    got = series[(k, k)]
    c_el = _a4.bracket_elements(LieElement.basis(a_idx), LieElement.basis(b_idx))
    want = _divided_power_of(c_el, k)
    cert = Certificate(f"(half-long[{r + s}] up to sign)^({k})", k,
                       _combination(a_idx, b_idx, k, k))
    cert.verified = got == want and set(c_el.terms) == {_a4.xx(1, 2, r + s)} and abs(
        c_el.terms[_a4.xx(1, 2, r + s)]
    ) == Fraction(1, 2)
    cert.notes.append("medium-root divided powers certified separately")
    return cert


def _divided_power_of(el: LieElement, k: int) -> UEAElement:
    base = UEAElement.from_lie("a4", el)
    out = UEAElement.one("a4")
    for _ in range(k):
        out = uea_mul(out, base)
    return out.scale(Fraction(1, factorial(k)))


def certify_all(kmax: int = 2, loops=(0, 1)) -> list[Certificate]:
    out = []
    for k in range(1, kmax + 1):
        for r in loops:
            out.append(certify_sum_root(r, 1 - r, k))
            out.append(certify_doubled_root(r, 1, k))
            out.append(certify_long_root(r, 1 - r if (1 - r + r) % 2 else 1, k))
    return out


# -- imaginary-part integrality -----------------------------------------

def imaginary_integrality(spec: SequenceSpec, form: str, kmax: int) -> list[tuple[int, bool]]:
    """Membership of the exponential-family coefficients, degree by degree.

    The Cartan loop elements of a fixed sign commute, so the statement inside
    the enveloping algebra is exactly the commutative one.
    """
    series = expand_hat_series(spec, kmax)
    return [(k, bool(forms.membership(series[k], form))) for k in range(1, kmax + 1)]


def mixed_generator_lattice_check(dmax: int) -> bool:
    """The twisted family, the doubled-power family, and the even family
    generate the mixed form, degree by degree."""
    tilde = named_series("TILDE", dmax)
    circ = expand_hat_series(CPOW2, dmax)
    bar = named_series("BAR", dmax)
    gens = []
    for kk in range(1, dmax + 1):
        if tilde[kk]:
            gens.append(tilde[kk])
        if circ[kk]:
            gens.append(circ[kk])
        if kk % 2 == 0 and bar[kk]:
            gens.append(bar[kk])
    for d in range(1, dmax + 1):
        got = forms.algebra_lattice_at_degree(gens, d)
        want = forms.form_lattice("MIXED", d)
        if got != want:
            return False
    return True
