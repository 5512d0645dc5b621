"""The rank-one twisted loop algebra given by its structure-constant table.

Basis: the central element c, Cartan-loop elements h_r (r in Z), real vectors
x_r^+ / x_r^- (r in Z), and doubled-root vectors X_r^+ / X_r^- (odd r only).
Indices are tuples:

    ("c",)          ("h", r)          ("x", s, r)          ("X", s, r)

with s = +1 or -1 the root sign.  All brackets follow the fixed table below;
`jacobi_exhaust` certifies antisymmetry and the Jacobi identity on a window,
which is the correctness gate for the table.

The structure constant attached to a Cartan generator acting on a real vector
is 2*(2 + (-1)^(r-1)): 6 for odd loop index, 2 for even.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Index = tuple
C: Index = ("c",)


def h(r: int) -> Index:
    return ("h", r)


def x(sign: int, r: int) -> Index:
    return ("x", sign, r)


def xx(sign: int, r: int) -> Index:
    if r % 2 == 0:
        raise ValueError("doubled-root vectors carry odd loop index")
    return ("X", sign, r)


class LieElement:
    """Finite rational linear combination of basis indices."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for idx, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff != 0:
                    clean[idx] = coeff
        self.terms = clean

    @staticmethod
    def basis(idx: Index) -> "LieElement":
        return LieElement({idx: 1})

    @staticmethod
    def zero() -> "LieElement":
        return LieElement()

    def __add__(self, other):
        out = dict(self.terms)
        for idx, coeff in other.terms.items():
            s = out.get(idx, Fraction(0)) + coeff
            if s == 0:
                out.pop(idx, None)
            else:
                out[idx] = s
        res = LieElement()
        res.terms = out
        return res

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "LieElement":
        c = Fraction(c)
        if c == 0:
            return LieElement()
        res = LieElement()
        res.terms = {idx: a * c for idx, a in self.terms.items()}
        return res

    __rmul__ = scale
    __mul__ = scale

    def __eq__(self, other):
        return isinstance(other, LieElement) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{idx}" for idx, c in sorted(self.terms.items(), key=repr))


def sign_pow(k: int) -> int:
    """(-1)**k, exact for any integer k."""
    return -1 if k % 2 else 1


def _cartan_const(r: int) -> int:
    # 2*(2+(-1)^(r-1))
    return 6 if r % 2 else 2


@lru_cache(maxsize=None)
def bracket_indices(a: Index, b: Index) -> LieElement:
    """Bracket of two basis vectors, straight from the table."""
    if a == C or b == C:
        return LieElement.zero()
    ta, tb = a[0], b[0]

    if ta == "h" and tb == "h":
        r, s = a[1], b[1]
        if r + s == 0:
            return LieElement({C: 2 * r * (2 + sign_pow(r - 1))})
        return LieElement.zero()

    if ta == "h" and tb == "x":
        r, (sg, s) = a[1], (b[1], b[2])
        return LieElement({x(sg, r + s): sg * _cartan_const(r)})
    if ta == "x" and tb == "h":
        return bracket_indices(b, a).scale(-1)

    if ta == "h" and tb == "X":
        r, (sg, s) = a[1], (b[1], b[2])
        if r % 2 == 0:
            return LieElement({xx(sg, r + s): 4 * sg})
        return LieElement.zero()
    if ta == "X" and tb == "h":
        return bracket_indices(b, a).scale(-1)

    if ta == "x" and tb == "x":
        sa, r = a[1], a[2]
        sb, s = b[1], b[2]
        if sa == sb:
            if (r + s) % 2 == 0:
                return LieElement.zero()
            return LieElement({xx(sa, r + s): sa * sign_pow(s)})
        if sa == 1:  # [x_r^+, x_s^-]
            out = {h(r + s): 1}
            if r + s == 0 and r != 0:
                out[C] = r
            return LieElement(out)
        return bracket_indices(b, a).scale(-1)

    if ta == "x" and tb == "X":
        sa, r = a[1], a[2]
        sb, s = b[1], b[2]
        if sa == sb:
            return LieElement.zero()
        # [x_r^{sa}, X_s^{-sa}] = sa * (-1)^r * 4 * x_{r+s}^{-sa}
        return LieElement({x(sb, r + s): sa * sign_pow(r) * 4})
    if ta == "X" and tb == "x":
        return bracket_indices(b, a).scale(-1)

    if ta == "X" and tb == "X":
        sa, r = a[1], a[2]
        sb, s = b[1], b[2]
        if sa == sb:
            return LieElement.zero()
        if sa == 1:
            out = {h(r + s): 8}
            if r + s == 0:
                out[C] = 4 * r
            return LieElement(out)
        return bracket_indices(b, a).scale(-1)

    raise ValueError(f"unknown basis indices {a!r}, {b!r}")


def bracket(a: LieElement, b: LieElement) -> LieElement:
    out = LieElement.zero()
    for ia, ca in a.terms.items():
        for ib, cb in b.terms.items():
            out = out + bracket_indices(ia, ib).scale(ca * cb)
    return out


def basis_window(window: int) -> list[Index]:
    """All basis indices with loop index in [-window, window]."""
    out: list[Index] = [C]
    out += [h(r) for r in range(-window, window + 1)]
    for sg in (1, -1):
        out += [x(sg, r) for r in range(-window, window + 1)]
        out += [xx(sg, r) for r in range(-window, window + 1) if r % 2]
    return out


@dataclass
class CheckVerdict:
    passed: bool
    detail: str = ""

    def __bool__(self):
        return self.passed


def jacobi_exhaust(window: int) -> CheckVerdict:
    """Antisymmetry and Jacobi on all basis triples within the window."""
    basis = basis_window(window)
    for a in basis:
        for b in basis:
            ab = bracket_indices(a, b)
            ba = bracket_indices(b, a)
            if ab + ba:
                return CheckVerdict(False, f"antisymmetry fails at [{a}, {b}]")
    for a in basis:
        ea = LieElement.basis(a)
        for b in basis:
            eb = LieElement.basis(b)
            ab = bracket_indices(a, b)
            for c in basis:
                ec = LieElement.basis(c)
                total = (
                    bracket(ab, ec)
                    + bracket(bracket_indices(b, c), ea)
                    + bracket(bracket_indices(c, a), eb)
                )
                if total:
                    return CheckVerdict(False, f"Jacobi fails at ({a}, {b}, {c})")
    return CheckVerdict(True, f"window {window}: antisymmetry and Jacobi hold")


# -- morphisms ---------------------------------------------------------

MORPHISMS = ("SIGMA", "OMEGA", "T", "T_INV")


def _morphism_index(name: str, idx: Index) -> LieElement:
    if name == "SIGMA":
        # antiautomorphism: x fixed, X negated, h negated, c negated
        if idx == C:
            return LieElement({C: -1})
        if idx[0] == "h":
            return LieElement({idx: -1})
        if idx[0] == "x":
            return LieElement.basis(idx)
        return LieElement({idx: -1})
    if name == "OMEGA":
        # antiautomorphism: loop index negated, root sign flipped
        if idx == C:
            return LieElement.basis(C)
        if idx[0] == "h":
            return LieElement.basis(h(-idx[1]))
        if idx[0] == "x":
            return LieElement.basis(x(-idx[1], -idx[2]))
        return LieElement.basis(xx(-idx[1], -idx[2]))
    if name in ("T", "T_INV"):
        # loop translation: shifts real vectors by -sign (T) or +sign (T_INV)
        step = -1 if name == "T" else 1
        if idx == C:
            return LieElement.basis(C)
        if idx[0] == "h":
            out = {idx: 1}
            if idx[1] == 0:
                out[C] = step
            return LieElement(out)
        if idx[0] == "x":
            sg, r = idx[1], idx[2]
            return LieElement.basis(x(sg, r + step * sg))
        sg, r = idx[1], idx[2]
        return LieElement({xx(sg, r + 2 * step * sg): -1})
    raise ValueError(f"unknown morphism {name!r}")


def morphism(name: str, el: LieElement) -> LieElement:
    out = LieElement.zero()
    for idx, c in el.terms.items():
        out = out + _morphism_index(name, idx).scale(c)
    return out


def is_antimorphism(name: str) -> bool:
    return name in ("SIGMA", "OMEGA")


def check_morphism(name: str, window: int) -> CheckVerdict:
    """phi([a,b]) equals [phi a, phi b] (auto) or [phi b, phi a] (anti)."""
    basis = basis_window(window)
    anti = is_antimorphism(name)
    for a in basis:
        fa = _morphism_index(name, a)
        for b in basis:
            fb = _morphism_index(name, b)
            lhs = morphism(name, bracket_indices(a, b))
            rhs = bracket(fb, fa) if anti else bracket(fa, fb)
            if lhs != rhs:
                return CheckVerdict(False, f"{name} fails on [{a}, {b}]")
    return CheckVerdict(True, f"{name} respects brackets on window {window}")


# -- inner automorphisms ----------------------------------------------

def exp_ad(gen: Index, el: LieElement, sign: int = 1, cap: int = 6) -> LieElement:
    """exp(sign * ad gen) applied to el; errors if nilpotency exceeds the cap."""
    total = el
    term = el
    k = 0
    g = LieElement.basis(gen)
    while True:
        term = bracket(g, term).scale(Fraction(sign, k + 1))
        k += 1
        if not term:
            return total
        if k > cap:
            raise RuntimeError("exp did not terminate within the nilpotency cap")
        total = total + term


def tau(el: LieElement) -> LieElement:
    """exp(ad x_0^+) exp(-ad x_0^-) exp(ad x_0^+)."""
    step1 = exp_ad(x(1, 0), el)
    step2 = exp_ad(x(-1, 0), step1, sign=-1)
    return exp_ad(x(1, 0), step2)
