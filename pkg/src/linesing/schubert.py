"""Exact arithmetic in the cohomology ring of the space of lines in P^3.

The ring has a six element Schubert basis.  Products of basis classes follow
the classical multiplication table below; anything of degree greater than
four is truncated away, because the space of lines is four dimensional.
All coefficients are exact rationals and every value is immutable, so the
whole module is safe to use from concurrent code.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from math import lcm


class SchubertBasis(Enum):
    """The six Schubert classes, ordered by codimension."""

    ONE = 0
    S1 = 1
    S11 = 2
    S2 = 3
    S21 = 4
    S22 = 5

    @property
    def degree(self) -> int:
        """Half the cohomological degree."""
        return _DEGREES[self]

    def __repr__(self):
        return self.name


_DEGREES = {
    SchubertBasis.ONE: 0,
    SchubertBasis.S1: 1,
    SchubertBasis.S11: 2,
    SchubertBasis.S2: 2,
    SchubertBasis.S21: 3,
    SchubertBasis.S22: 4,
}

_NAMES = {
    SchubertBasis.ONE: "1",
    SchubertBasis.S1: "s1",
    SchubertBasis.S11: "s11",
    SchubertBasis.S2: "s2",
    SchubertBasis.S21: "s21",
    SchubertBasis.S22: "s22",
}

# Products of positive-degree generators, keyed with the members in
# nondecreasing enum order.  Absent pairs vanish: (S11, S2) by the table,
# every other missing pair because its total degree exceeds four.
MUL_TABLE = {
    (SchubertBasis.S1, SchubertBasis.S1): (SchubertBasis.S11, SchubertBasis.S2),
    (SchubertBasis.S1, SchubertBasis.S11): (SchubertBasis.S21,),
    (SchubertBasis.S1, SchubertBasis.S2): (SchubertBasis.S21,),
    (SchubertBasis.S1, SchubertBasis.S21): (SchubertBasis.S22,),
    (SchubertBasis.S11, SchubertBasis.S11): (SchubertBasis.S22,),
    (SchubertBasis.S11, SchubertBasis.S2): (),
    (SchubertBasis.S2, SchubertBasis.S2): (SchubertBasis.S22,),
}


def _as_fraction(a):
    # floats are rejected: the engine is exact end to end
    if isinstance(a, Fraction):
        return a
    if isinstance(a, int):
        return Fraction(a)
    raise TypeError(f"expected an int or Fraction coefficient, got {a!r}")


class CohClass:
    """A rational combination of Schubert classes.

    Coefficients are stored sparsely (absent means zero) and are always
    reduced Fractions.  Instances are immutable; arithmetic returns new
    values and never rounds.
    """

    __slots__ = ("_coeff",)

    def __init__(self, coeff=None):
        data = {}
        if coeff:
            for basis, a in coeff.items():
                if not isinstance(basis, SchubertBasis):
                    raise TypeError(f"expected a SchubertBasis key, got {basis!r}")
                a = _as_fraction(a)
                if a:
                    data[basis] = a
        self._coeff = data

    @classmethod
    def _make(cls, data):
        # internal: data is already a clean {SchubertBasis: Fraction} dict
        obj = cls.__new__(cls)
        obj._coeff = data
        return obj

    @classmethod
    def scalar(cls, a) -> "CohClass":
        """The multiple a * 1 of the identity class."""
        a = _as_fraction(a)
        return cls._make({SchubertBasis.ONE: a} if a else {})

    # -- queries ---------------------------------------------------------

    def coefficient(self, basis: SchubertBasis) -> Fraction:
        """The coefficient on one basis class (zero if absent)."""
        return self._coeff.get(basis, Fraction(0))

    def terms(self):
        """Iterate over (basis, coefficient) pairs of the nonzero terms."""
        return self._coeff.items()

    def degree_component(self, j: int) -> "CohClass":
        """Projection onto the basis classes of degree j, 0 <= j <= 4."""
        if not isinstance(j, int) or not 0 <= j <= 4:
            raise ValueError(f"degree must lie in 0..4, got {j!r}")
        return CohClass._make(
            {b: a for b, a in self._coeff.items() if b.degree == j})

    def is_homogeneous(self, j: int) -> bool:
        return all(b.degree == j for b in self._coeff)

    def __bool__(self):
        return bool(self._coeff)

    def __eq__(self, other):
        if isinstance(other, CohClass):
            return self._coeff == other._coeff
        if isinstance(other, (int, Fraction)):
            return self == CohClass.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._coeff.items()))

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, CohClass):
            return x
        if isinstance(x, (int, Fraction)):
            return CohClass.scalar(x)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        data = dict(self._coeff)
        for b, a in other._coeff.items():
            s = data.get(b, 0) + a
            if s:
                data[b] = s
            else:
                del data[b]
        return CohClass._make(data)

    __radd__ = __add__

    def __neg__(self):
        return CohClass._make({b: -a for b, a in self._coeff.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, CohClass):
            acc = {}
            for b1, a1 in self._coeff.items():
                for b2, a2 in other._coeff.items():
                    if b1 is SchubertBasis.ONE:
                        targets = (b2,)
                    elif b2 is SchubertBasis.ONE:
                        targets = (b1,)
                    else:
                        key = (b1, b2) if b1.value <= b2.value else (b2, b1)
                        targets = MUL_TABLE.get(key, ())
                    if not targets:
                        continue
                    c = a1 * a2
                    for t in targets:
                        s = acc.get(t, 0) + c
                        if s:
                            acc[t] = s
                        else:
                            del acc[t]
            return CohClass._make(acc)
        if isinstance(other, (int, Fraction)):
            if not other:
                return CohClass._make({})
            return CohClass._make({b: a * other for b, a in self._coeff.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, a):
        a = _as_fraction(a)
        return self * (1 / a)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = one
        for _ in range(n):
            out = out * self
        return out

    # -- raw kernel representation ----------------------------------------

    def ratvec(self):
        """(n0, .., n5, den): integer numerators over one positive denominator.

        This is the flat layout the series kernels work on; entry i belongs
        to the basis member with enum value i.
        """
        den = 1
        for a in self._coeff.values():
            den = lcm(den, a.denominator)
        nums = [0, 0, 0, 0, 0, 0]
        for b, a in self._coeff.items():
            nums[b.value] = a.numerator * (den // a.denominator)
        return (*nums, den)

    @classmethod
    def from_ratvec(cls, v) -> "CohClass":
        den = v[6]
        data = {}
        for b in SchubertBasis:
            if v[b.value]:
                data[b] = Fraction(v[b.value], den)
        return cls._make(data)

    def __repr__(self):
        if not self._coeff:
            return "0"
        parts = []
        for b in SchubertBasis:
            a = self._coeff.get(b)
            if a is None:
                continue
            if b is SchubertBasis.ONE:
                parts.append(str(a))
            elif a == 1:
                parts.append(_NAMES[b])
            elif a == -1:
                parts.append("-" + _NAMES[b])
            else:
                parts.append(f"{a}*{_NAMES[b]}")
        return " + ".join(parts).replace("+ -", "- ")


zero = CohClass._make({})
one = CohClass.scalar(1)
sigma1 = CohClass._make({SchubertBasis.S1: Fraction(1)})
sigma11 = CohClass._make({SchubertBasis.S11: Fraction(1)})
sigma2 = CohClass._make({SchubertBasis.S2: Fraction(1)})
sigma21 = CohClass._make({SchubertBasis.S21: Fraction(1)})
sigma22 = CohClass._make({SchubertBasis.S22: Fraction(1)})
