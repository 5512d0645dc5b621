"""Coefficient sequences a: Z_{>0} -> Q for the exponential generating series.

A SequenceSpec is either a closed-form tag or an explicit finite table.
Closed forms:

  ONE        a_r = 1
  ONE_M(m)   a_r = m if m | r else 0
  HALF_ONE   a_r = 1/2
  HALF_ONE2  a_r = 1 if 2 | r else 0
  CPOW2      a_r = 2^(r-1)

A TABLE sequence is defined only on 1..len(table); evaluating past the end
raises SequenceUnderspecified.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class SequenceUnderspecified(ValueError):
    pass


@dataclass(frozen=True)
class SequenceSpec:
    tag: str
    param: int = 0
    table: tuple[Fraction, ...] = ()

    def value(self, r: int) -> Fraction:
        if r < 1:
            raise ValueError("sequence index must be >= 1")
        t = self.tag
        if t == "ONE":
            return Fraction(1)
        if t == "ONE_M":
            return Fraction(self.param) if r % self.param == 0 else Fraction(0)
        if t == "HALF_ONE":
            return Fraction(1, 2)
        if t == "HALF_ONE2":
            return Fraction(1) if r % 2 == 0 else Fraction(0)
        if t == "CPOW2":
            return Fraction(2 ** (r - 1))
        if t == "TABLE":
            if r > len(self.table):
                raise SequenceUnderspecified(
                    f"sequence underspecified: index {r} beyond table of length {len(self.table)}"
                )
            return self.table[r - 1]
        raise ValueError(f"unknown sequence tag {t!r}")

    def values(self, n: int) -> list[Fraction]:
        return [self.value(r) for r in range(1, n + 1)]

    def is_integral(self, upto: int) -> bool:
        return all(self.value(r).denominator == 1 for r in range(1, upto + 1))

    def label(self) -> str:
        if self.tag == "ONE_M":
            return f"ONE_M({self.param})"
        if self.tag == "TABLE":
            return "TABLE" + str(tuple(str(v) for v in self.table))
        return self.tag


ONE = SequenceSpec("ONE")
HALF_ONE = SequenceSpec("HALF_ONE")
HALF_ONE2 = SequenceSpec("HALF_ONE2")
CPOW2 = SequenceSpec("CPOW2")


def one_m(m: int) -> SequenceSpec:
    if m < 1:
        raise ValueError("m must be >= 1")
    return SequenceSpec("ONE_M", param=m)


def table(values: Sequence) -> SequenceSpec:
    return SequenceSpec("TABLE", table=tuple(Fraction(v) for v in values))
