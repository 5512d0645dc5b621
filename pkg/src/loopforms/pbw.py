"""PBW normal forms in the enveloping algebras, with truncated 2-variable series.

An enveloping-algebra element is a rational linear combination of PBW
monomials: tuples ((index, exponent), ...) with indices strictly increasing
in a fixed total order on the Lie basis.  Products are computed by
straightening: an out-of-order adjacent pair xy is rewritten as yx + [x, y],
with the bracket supplied by a LieData table; the rewriting terminates
because bracket terms shorten the word.  Straightened letter words are
memoized per algebra.

The block order mirrors the triangular product shape of the integral-form
bases: lowering vectors, then Cartan loops (negative, zero+central,
positive), then raising vectors, refined inside each block by loop degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Iterable

from . import a22 as _a22
from . import a4 as _a4
from .a22 import LieElement

Monomial = tuple  # ((index, exponent), ...)


@dataclass(frozen=True)
class LieData:
    """A Lie algebra presented to the engine: bracket, sort key, gradings."""

    name: str
    bracket: Callable[[object, object], LieElement]
    sort_key: Callable[[object], tuple]
    weight: Callable[[object], tuple]
    loop_degree: Callable[[object], int]


def _a22_sort_key(idx) -> tuple:
    kind = idx[0]
    if kind == "c":
        return (4, 0, 0)
    if kind == "h":
        r = idx[1]
        block = 3 if r < 0 else (4 if r == 0 else 5)
        return (block, r, 1)
    if kind == "x":
        sg, r = idx[1], idx[2]
        if sg == -1:
            block = 0 if r % 2 else 2
        else:
            block = 6 if r % 2 else 8
        return (block, r, 0)
    sg, r = idx[1], idx[2]
    return (1 if sg == -1 else 7, r, 0)


def _a22_weight(idx) -> tuple:
    kind = idx[0]
    if kind in ("c", "h"):
        return (0,)
    if kind == "x":
        return (2 * idx[1],)
    return (4 * idx[1],)


def _a22_loop(idx) -> int:
    if idx[0] == "c":
        return 0
    return idx[-1]


A22 = LieData(
    "a22",
    bracket=_a22.bracket_indices,
    sort_key=_a22_sort_key,
    weight=_a22_weight,
    loop_degree=_a22_loop,
)

_A4_CLASS = {
    _a4.ALPHA_2: 0,
    _a4.ALPHA_11: 1,
    "X2": 2,
    _a4.ALPHA_21: 3,
    _a4.ALPHA_1: 4,
    "X1": 5,
}


def _a4_sort_key(idx) -> tuple:
    kind = idx[0]
    if kind == "c":
        return (4, 0, 0, 0)
    if kind == "h":
        i, r = idx[1], idx[2]
        block = 3 if r < 0 else (4 if r == 0 else 5)
        return (block, r, i, 1)
    if kind == "x":
        sg, alpha, r = idx[1], idx[2], idx[3]
        cls = _A4_CLASS[alpha]
    else:
        sg, i, r = idx[1], idx[2], idx[3]
        cls = _A4_CLASS[f"X{i}"]
    block = 6 if sg == 1 else 2
    return (block, cls, r, 0)


def _a4_weight(idx) -> tuple:
    return _a4.weight_of(idx)


def _a4_loop(idx) -> int:
    if idx[0] == "c":
        return 0
    return idx[-1]


A4 = LieData(
    "a4",
    bracket=_a4.bracket_abstract,
    sort_key=_a4_sort_key,
    weight=_a4_weight,
    loop_degree=_a4_loop,
)

_ALGEBRAS = {"a22": A22, "a4": A4}


class UEAElement:
    """Finite rational combination of PBW monomials over a named algebra."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: str, terms=None):
        self.algebra = algebra
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    clean[mono] = c
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(algebra: str) -> "UEAElement":
        return UEAElement(algebra)

    @staticmethod
    def one(algebra: str) -> "UEAElement":
        return UEAElement(algebra, {(): Fraction(1)})

    @staticmethod
    def generator(algebra: str, idx, coeff=1) -> "UEAElement":
        return UEAElement(algebra, {((idx, 1),): Fraction(coeff)})

    @staticmethod
    def from_lie(algebra: str, el: LieElement) -> "UEAElement":
        return UEAElement(algebra, {((idx, 1),): c for idx, c in el.terms.items()})

    @staticmethod
    def divided_power(algebra: str, idx, k: int) -> "UEAElement":
        """x^(k) = x^k / k! for a single basis vector: one normal monomial."""
        if k < 0:
            raise ValueError("divided-power exponent must be >= 0")
        if k == 0:
            return UEAElement.one(algebra)
        return UEAElement(algebra, {((idx, k),): Fraction(1, factorial(k))})

    # -- linear structure -------------------------------------------------

    def __add__(self, other: "UEAElement") -> "UEAElement":
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, Fraction(0)) + c
            if s == 0:
                out.pop(mono, None)
            else:
                out[mono] = s
        res = UEAElement(self.algebra)
        res.terms = out
        return res

    def __sub__(self, other: "UEAElement") -> "UEAElement":
        return self + other.scale(-1)

    def __neg__(self) -> "UEAElement":
        return self.scale(-1)

    def scale(self, c) -> "UEAElement":
        c = Fraction(c)
        if c == 0:
            return UEAElement(self.algebra)
        res = UEAElement(self.algebra)
        res.terms = {m: a * c for m, a in self.terms.items()}
        return res

    def __mul__(self, other) -> "UEAElement":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return uea_mul(self, other)

    __rmul__ = scale

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UEAElement)
            and self.algebra == other.algebra
            and self.terms == other.terms
        )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for mono, c in sorted(self.terms.items(), key=lambda kv: repr(kv[0])):
            word = " ".join(f"{idx}^{e}" if e > 1 else f"{idx}" for idx, e in mono)
            bits.append(f"{c}*[{word}]" if word else f"{c}")
        return " + ".join(bits)


def _letters(mono: Monomial) -> tuple:
    out = []
    for idx, e in mono:
        out.extend([idx] * e)
    return tuple(out)


def _merge_word(word: tuple) -> Monomial:
    out = []
    for idx in word:
        if out and out[-1][0] == idx:
            out[-1] = (idx, out[-1][1] + 1)
        else:
            out.append((idx, 1))
    return tuple(out)


class _Straightener:
    """Memoized rewriting of letter words into PBW normal form."""

    def __init__(self, data: LieData):
        self.data = data
        self.cache: dict[tuple, dict[Monomial, Fraction]] = {}

    def normal_form(self, word: tuple) -> dict[Monomial, Fraction]:
        hit = self.cache.get(word)
        if hit is not None:
            return hit
        key = self.data.sort_key
        pos = None
        for i in range(len(word) - 1):
            if key(word[i]) > key(word[i + 1]):
                pos = i
                break
        if pos is None:
            result = {_merge_word(word): Fraction(1)}
            self.cache[word] = result
            return result
        a, b = word[pos], word[pos + 1]
        swapped = word[:pos] + (b, a) + word[pos + 2:]
        result: dict[Monomial, Fraction] = {}
        for mono, c in self.normal_form(swapped).items():
            s = result.get(mono, Fraction(0)) + c
            if s == 0:
                result.pop(mono, None)
            else:
                result[mono] = s
        bracket = self.data.bracket(a, b)
        for idx, coeff in bracket.terms.items():
            sub = self.normal_form(word[:pos] + (idx,) + word[pos + 2:])
            for mono, c in sub.items():
                s = result.get(mono, Fraction(0)) + coeff * c
                if s == 0:
                    result.pop(mono, None)
                else:
                    result[mono] = s
        self.cache[word] = result
        return result


_STRAIGHTENERS = {"a22": _Straightener(A22), "a4": _Straightener(A4)}


def uea_mul(a: UEAElement, b: UEAElement) -> UEAElement:
    if a.algebra != b.algebra:
        raise ValueError("mixed algebras")
    st = _STRAIGHTENERS[a.algebra]
    out: dict[Monomial, Fraction] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            c = ca * cb
            word = _letters(ma) + _letters(mb)
            for mono, k in st.normal_form(word).items():
                s = out.get(mono, Fraction(0)) + c * k
                if s == 0:
                    out.pop(mono, None)
                else:
                    out[mono] = s
    res = UEAElement(a.algebra)
    res.terms = out
    return res


def monomial_weight(data: LieData, mono: Monomial) -> tuple:
    w = None
    for idx, e in mono:
        wi = data.weight(idx)
        if w is None:
            w = tuple(e * x for x in wi)
        else:
            w = tuple(a + e * x for a, x in zip(w, wi))
    return w if w is not None else None


def monomial_loop_degree(data: LieData, mono: Monomial) -> int:
    return sum(e * data.loop_degree(idx) for idx, e in mono)


# -- truncated series in two variables ---------------------------------

class TruncatedSeries2:
    """Coefficients indexed by (i, j) with i + j <= n, over UEAElement."""

    __slots__ = ("algebra", "coeffs", "n")

    def __init__(self, algebra: str, n: int, coeffs=None):
        self.algebra = algebra
        self.n = n
        self.coeffs: dict[tuple[int, int], UEAElement] = {}
        if coeffs:
            for key, el in coeffs.items():
                if el:
                    self.coeffs[key] = el

    @staticmethod
    def one(algebra: str, n: int) -> "TruncatedSeries2":
        return TruncatedSeries2(algebra, n, {(0, 0): UEAElement.one(algebra)})

    @staticmethod
    def term(algebra: str, n: int, i: int, j: int, el: UEAElement) -> "TruncatedSeries2":
        if i + j > n:
            return TruncatedSeries2(algebra, n)
        return TruncatedSeries2(algebra, n, {(i, j): el})

    def __getitem__(self, key) -> UEAElement:
        return self.coeffs.get(key, UEAElement.zero(self.algebra))

    def __add__(self, other: "TruncatedSeries2") -> "TruncatedSeries2":
        n = min(self.n, other.n)
        out = TruncatedSeries2(self.algebra, n)
        keys = set(self.coeffs) | set(other.coeffs)
        for key in keys:
            if key[0] + key[1] > n:
                continue
            s = self[key] + other[key]
            if s:
                out.coeffs[key] = s
        return out

    def __sub__(self, other: "TruncatedSeries2") -> "TruncatedSeries2":
        return self + other.scale(-1)

    def scale(self, c) -> "TruncatedSeries2":
        out = TruncatedSeries2(self.algebra, self.n)
        for key, el in self.coeffs.items():
            s = el.scale(c)
            if s:
                out.coeffs[key] = s
        return out

    def mul(self, other: "TruncatedSeries2") -> "TruncatedSeries2":
        n = min(self.n, other.n)
        out = TruncatedSeries2(self.algebra, n)
        for (i1, j1), a in self.coeffs.items():
            for (i2, j2), b in other.coeffs.items():
                i, j = i1 + i2, j1 + j2
                if i + j > n:
                    continue
                prod = uea_mul(a, b)
                if prod:
                    key = (i, j)
                    cur = out.coeffs.get(key)
                    s = prod if cur is None else cur + prod
                    if s:
                        out.coeffs[key] = s
                    else:
                        out.coeffs.pop(key, None)
        return out

    def exp(self) -> "TruncatedSeries2":
        if (0, 0) in self.coeffs:
            raise ValueError("series exponential requires zero constant term")
        result = TruncatedSeries2.one(self.algebra, self.n)
        power = TruncatedSeries2.one(self.algebra, self.n)
        for k in range(1, self.n + 1):
            power = power.mul(self)
            if not power.coeffs:
                break
            result = result + power.scale(Fraction(1, factorial(k)))
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedSeries2)
            and self.n == other.n
            and self.coeffs == other.coeffs
        )

    def first_difference(self, other: "TruncatedSeries2"):
        keys = sorted(set(self.coeffs) | set(other.coeffs))
        for key in keys:
            diff = self[key] - other[key]
            if diff:
                mono = sorted(diff.terms, key=repr)[0]
                return (key, mono, self[key].terms.get(mono), other[key].terms.get(mono))
        return None

    def homogeneous_by(self, data: LieData) -> bool:
        """Each coefficient has a single (weight, loop degree); scalars allowed."""
        for el in self.coeffs.values():
            seen = set()
            for mono in el.terms:
                if not mono:
                    continue
                seen.add((monomial_weight(data, mono), monomial_loop_degree(data, mono)))
            if len(seen) > 1:
                return False
        return True


def exp_gen(algebra: str, idx, i_deg: int, j_deg: int, n: int, scalar=1) -> TruncatedSeries2:
    """exp(scalar * x * u^i_deg v^j_deg) as a truncated series of divided powers."""
    step = i_deg + j_deg
    if step < 1:
        raise ValueError("the exponent must carry positive total degree")
    out = TruncatedSeries2.one(algebra, n)
    k = 1
    while k * step <= n:
        el = UEAElement.divided_power(algebra, idx, k).scale(Fraction(scalar) ** k)
        out.coeffs[(k * i_deg, k * j_deg)] = el
        k += 1
    return out


def exp_series(arg: TruncatedSeries2) -> TruncatedSeries2:
    return arg.exp()
