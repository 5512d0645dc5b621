"""Integral forms of Q[h_r]: basis enumeration, coordinates, membership.

Three Z-forms are handled, all full-rank lattices in every graded piece:

  SYMMETRIC  generated by the HAT coefficients; basis LAMBDA
             (products of index-shifted HAT coefficients)
  MIXED      generated by HAT and BAR coefficients; bases LAMBDA_MIXED
             and QUASI_POLY
  HALF       generated by the CHECK coefficients (= SYMMETRIC in h_r/2);
             basis the CHECK monomials

Membership in a form means integer coordinates in the corresponding basis,
computed degree by degree with exact rational elimination.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable

from . import linalg
from .partitions import (
    Partition,
    degree,
    euler_count,
    partition_count,
    partitions_distinct,
    partitions_even,
    partitions_of,
    parts_list,
)
from .polynomial import GradedPolynomial
from .sequences import ONE, HALF_ONE, HALF_ONE2
from .series import expand_hat_series

BASIS_KINDS = ("LAMBDA", "LAMBDA_MIXED", "QUASI_POLY", "MONOMIAL")
FORM_KINDS = ("SYMMETRIC", "MIXED", "HALF")

_FORM_BASIS = {"SYMMETRIC": "LAMBDA", "MIXED": "QUASI_POLY", "HALF": "CHECK_MONOMIAL"}


@dataclass(frozen=True)
class BasisElement:
    kind: str
    descriptor: tuple
    poly: GradedPolynomial

    def label(self) -> str:
        return f"{self.kind}{self.descriptor}"


def _hat(k: int) -> GradedPolynomial:
    return expand_hat_series(ONE, k)[k]


def _check(k: int) -> GradedPolynomial:
    return expand_hat_series(HALF_ONE, k)[k]


def _bar(k: int) -> GradedPolynomial:
    return expand_hat_series(HALF_ONE2, k)[k]


@lru_cache(maxsize=None)
def enumerate_basis(kind: str, d: int) -> tuple[BasisElement, ...]:
    """All degree-d basis elements of the given kind, expanded into monomials.

    Every kind has exactly p(d) elements in degree d; descriptors are listed
    in a fixed canonical order so coordinate vectors are reproducible.
    """
    if d < 0:
        raise ValueError("degree must be >= 0")
    out: list[BasisElement] = []

    if kind in ("LAMBDA", "LAMBDA_MIXED"):
        # index map m -> k_m, encoded by the partition with part m repeated k_m
        # times contributing m * k_m to the degree
        for lam in partitions_of(d):
            poly = GradedPolynomial.one()
            for m, k_m in lam:
                base = _hat(k_m) if (kind == "LAMBDA" or m % 2 == 1) else _check(k_m)
                poly = poly * base.lambda_shift(m)
            out.append(BasisElement(kind, lam, poly))
        return tuple(out)

    if kind == "QUASI_POLY":
        # squarefree HAT part indexed by distinct parts, BAR part by even parts
        for d1 in range(d, -1, -1):
            for eps in partitions_distinct(d1):
                hat_part = GradedPolynomial.one()
                for k, _ in eps:
                    hat_part = hat_part * _hat(k)
                for ev in partitions_even(d - d1):
                    poly = hat_part
                    for k, mult in ev:
                        poly = poly * _bar(k) ** mult
                    desc = (tuple(sorted(parts_list(eps))), tuple(sorted(parts_list(ev))))
                    out.append(BasisElement(kind, desc, poly))
        return tuple(out)

    if kind == "MONOMIAL":
        for lam in partitions_of(d):
            out.append(BasisElement(kind, lam, GradedPolynomial.monomial(lam)))
        return tuple(out)

    if kind == "CHECK_MONOMIAL":
        for lam in partitions_of(d):
            poly = GradedPolynomial.one()
            for k, mult in lam:
                poly = poly * _check(k) ** mult
            out.append(BasisElement(kind, lam, poly))
        return tuple(out)

    if kind == "BAR_MONOMIAL":
        # only even degrees are populated; spans Q[h_even] degreewise
        for lam in partitions_even(d):
            poly = GradedPolynomial.one()
            for k, mult in lam:
                poly = poly * _bar(k) ** mult
            out.append(BasisElement(kind, lam, poly))
        return tuple(out)

    raise ValueError(f"unknown basis kind {kind!r}")


def _monomial_axis(d: int) -> list[Partition]:
    return sorted(partitions_of(d))


def _poly_vector(p: GradedPolynomial, axis: list[Partition]) -> list[Fraction]:
    return [p.coefficient(lam) for lam in axis]


@lru_cache(maxsize=None)
def _basis_inverse(kind: str, d: int) -> list[list[Fraction]]:
    """Inverse of the (square, full-rank) degree-d coordinate matrix; rows of
    the inverse give coordinates directly, so repeated membership queries pay
    the elimination cost once."""
    basis = enumerate_basis(kind, d)
    axis = _monomial_axis(d)
    m = len(axis)
    if len(basis) != m:
        raise ValueError(f"basis kind {kind!r} is not square at degree {d}")
    aug = [[basis[j].poly.coefficient(axis[i]) for j in range(m)]
           + [Fraction(1) if k == i else Fraction(0) for k in range(m)]
           for i in range(m)]
    red, pivots = linalg.rref(aug)
    if pivots != list(range(m)):
        raise ValueError(f"basis kind {kind!r} is singular at degree {d}")
    return [row[m:] for row in red]


@dataclass
class CoordinateVector:
    kind: str
    entries: dict[tuple, Fraction] = field(default_factory=dict)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.entries.values())

    def first_non_integral(self) -> tuple | None:
        for desc in sorted(self.entries, key=_desc_sort_key):
            if self.entries[desc].denominator != 1:
                return (desc, self.entries[desc])
        return None


def _desc_sort_key(desc: tuple):
    d, inner = desc
    return (d, repr(inner))


def coordinates(p: GradedPolynomial, kind: str) -> CoordinateVector:
    """Exact expansion of p over the degree-graded basis of the given kind.

    Raises ValueError("not in span") when a homogeneous component falls
    outside the basis span (possible only for the partial-span kinds).
    """
    vec = CoordinateVector(kind)
    for d, comp in sorted(p.homogeneous_components().items()):
        basis = enumerate_basis(kind, d)
        axis = _monomial_axis(d)
        target = _poly_vector(comp, axis)
        if len(basis) == len(axis):
            inv = _basis_inverse(kind, d)
            sol = [sum((row[i] * target[i] for i in range(len(axis))), Fraction(0))
                   for row in inv]
        else:
            cols = [_poly_vector(b.poly, axis) for b in basis]
            sol = linalg.solve(cols, target)
            if sol is None:
                raise ValueError(f"not in span: degree-{d} component")
            # partial-span kinds: confirm the reconstruction
            recon = GradedPolynomial.zero()
            for b, c in zip(basis, sol):
                recon = recon + b.poly.scale(c)
            if recon != comp:
                raise ValueError(f"not in span: degree-{d} component")
        for b, c in zip(basis, sol):
            if c != 0:
                vec.entries[(d, b.descriptor)] = c
    return vec


@dataclass
class MembershipVerdict:
    member: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.member


def membership(p: GradedPolynomial, form: str) -> MembershipVerdict:
    """IN iff every coordinate in the form's basis is an integer."""
    if form not in _FORM_BASIS:
        raise ValueError(f"unknown form {form!r}")
    try:
        vec = coordinates(p, _FORM_BASIS[form])
    except ValueError:
        return MembershipVerdict(False, ("outside ambient span", None))
    if vec.is_integral():
        return MembershipVerdict(True)
    return MembershipVerdict(False, vec.first_non_integral())


def bar_membership(p: GradedPolynomial) -> MembershipVerdict:
    """Membership in the subring generated by the BAR coefficients."""
    try:
        vec = coordinates(p, "BAR_MONOMIAL")
    except ValueError:
        return MembershipVerdict(False, ("outside even-index span", None))
    if vec.is_integral():
        return MembershipVerdict(True)
    return MembershipVerdict(False, vec.first_non_integral())


def basis_rank(kind: str, d: int) -> int:
    basis = enumerate_basis(kind, d)
    axis = _monomial_axis(d)
    return linalg.rank([_poly_vector(b.poly, axis) for b in basis])


# -- lattices ----------------------------------------------------------

@dataclass
class Lattice:
    """Degree-d lattice over the monomial axis: integer HNF rows / scale."""

    degree: int
    scale: int
    rows: tuple[tuple[int, ...], ...]

    def rank(self) -> int:
        return len(self.rows)

    def _rescaled_rows(self, new_scale: int) -> list[list[int]]:
        factor = new_scale // self.scale
        return [[x * factor for x in row] for row in self.rows]

    def contains(self, other: "Lattice") -> bool:
        # stored rows are HNF; scaling preserves the triangular shape
        common = lcm(self.scale, other.scale)
        mine = self._rescaled_rows(common)
        theirs = other._rescaled_rows(common)
        for row in theirs:
            coords = linalg.integer_solve_triangular(mine, row)
            if coords is None or any(c.denominator != 1 for c in coords):
                return False
        return True

    def contains_poly(self, p: GradedPolynomial) -> bool:
        if not p:
            return True
        if not p.is_homogeneous(self.degree):
            return False
        axis = _monomial_axis(self.degree)
        target = [p.coefficient(lam) * self.scale for lam in axis]
        if any(t.denominator != 1 for t in target):
            return False
        hnf = linalg.hermite_normal_form([list(r) for r in self.rows])
        coords = linalg.integer_solve_triangular(hnf, [int(t) for t in target])
        return coords is not None and all(c.denominator == 1 for c in coords)

    def coordinates_of(self, p: GradedPolynomial) -> list[Fraction] | None:
        axis = _monomial_axis(self.degree)
        target = [p.coefficient(lam) * self.scale for lam in axis]
        if any(t.denominator != 1 for t in target):
            return None
        return linalg.integer_solve_triangular(
            [list(r) for r in self.rows], [int(t) for t in target]
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Lattice):
            return NotImplemented
        if self.degree != other.degree:
            return False
        # canonical HNF scales entrywise, so rescaled rows compare directly
        common = lcm(self.scale, other.scale)
        return self._rescaled_rows(common) == other._rescaled_rows(common)


def lattice_at_degree(gens: Iterable[GradedPolynomial], d: int) -> Lattice:
    """Canonical description of the Z-span of homogeneous degree-d generators."""
    axis = _monomial_axis(d)
    rows = []
    for g in gens:
        if g and not g.is_homogeneous(d):
            raise ValueError("lattice generators must be homogeneous of the stated degree")
        rows.append(_poly_vector(g, axis))
    if not rows:
        return Lattice(d, 1, ())
    scale, int_rows = linalg.clear_denominators(rows)
    hnf = linalg.hermite_normal_form(int_rows)
    return Lattice(d, scale, tuple(tuple(r) for r in hnf))


@lru_cache(maxsize=None)
def form_lattice(form: str, d: int) -> Lattice:
    basis = enumerate_basis(_FORM_BASIS[form], d)
    return lattice_at_degree([b.poly for b in basis], d)


def algebra_lattice_at_degree(gens: list[GradedPolynomial], d: int) -> Lattice:
    """Degree-d piece of the Z-algebra generated by homogeneous generators.

    Enumerates all products of generators with total degree d (with
    repetition); fine at desk scale.
    """
    by_degree: dict[int, list[GradedPolynomial]] = {}
    for g in gens:
        comps = g.homogeneous_components()
        if len(comps) > 1:
            raise ValueError("generators must be homogeneous")
        for dd, comp in comps.items():
            if dd > 0:
                by_degree.setdefault(dd, []).append(comp)

    products: list[GradedPolynomial] = []

    def extend(current: GradedPolynomial, remaining: int, min_deg: int):
        if remaining == 0:
            products.append(current)
            return
        for dd in sorted(by_degree):
            if dd < min_deg or dd > remaining:
                continue
            for g in by_degree[dd]:
                extend(current * g, remaining - dd, dd)

    extend(GradedPolynomial.one(), d, 1)
    return lattice_at_degree(products, d)


# -- closure -----------------------------------------------------------

@dataclass
class ClosureVerdict:
    closed: bool
    failure: tuple | None = None

    def __bool__(self) -> bool:
        return self.closed


def closure_check(form: str, d: int) -> ClosureVerdict:
    """Products of basis elements with degree sum <= d stay integral."""
    if d < 2:
        raise ValueError("need d >= 2")
    kind = _FORM_BASIS[form]
    for d1 in range(1, d):
        for d2 in range(d1, d - d1 + 1):
            for b1 in enumerate_basis(kind, d1):
                for b2 in enumerate_basis(kind, d2):
                    prod = b1.poly * b2.poly
                    verdict = membership(prod, form)
                    if not verdict:
                        return ClosureVerdict(
                            False, (d1, b1.descriptor, d2, b2.descriptor, verdict.witness)
                        )
    return ClosureVerdict(True)


__all__ = [
    "BASIS_KINDS",
    "FORM_KINDS",
    "BasisElement",
    "CoordinateVector",
    "Lattice",
    "MembershipVerdict",
    "algebra_lattice_at_degree",
    "bar_membership",
    "basis_rank",
    "closure_check",
    "coordinates",
    "enumerate_basis",
    "euler_count",
    "form_lattice",
    "lattice_at_degree",
    "membership",
    "partition_count",
]
