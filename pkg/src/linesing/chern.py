"""Total Chern classes, Chern characters, and power-sum conversions.

A total class and a character are both stored as five graded pieces of
degrees 0..4.  Conversions between the three presentations (total class,
character, power sums) run through two deliberately different code paths:
the Newton recurrence in chern_from_power_sums and the expanded degree-4
polynomial in c4_from_power_sums, so each acts as a check on the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .schubert import CohClass, SchubertBasis, one, sigma1, sigma11, sigma2, zero


def _check_graded(parts, start, what):
    for j, p in enumerate(parts, start):
        if not isinstance(p, CohClass):
            raise TypeError(f"{what} pieces must be CohClass, got {p!r}")
        if not p.is_homogeneous(j):
            raise ValueError(f"{what} piece {p!r} is not homogeneous of degree {j}")


@dataclass(frozen=True)
class TotalChernClass:
    """A unit total class 1 + c1 + c2 + c3 + c4, one graded piece per slot."""

    parts: tuple

    def __post_init__(self):
        if len(self.parts) != 5:
            raise ValueError("a total class has exactly five graded pieces")
        _check_graded(self.parts, 0, "total class")
        if self.parts[0] != one:
            raise ValueError("the degree-0 piece of a total class must be 1")

    @classmethod
    def unit(cls) -> "TotalChernClass":
        return cls((one, zero, zero, zero, zero))

    def __getitem__(self, j: int) -> CohClass:
        return self.parts[j]

    def __mul__(self, other: "TotalChernClass") -> "TotalChernClass":
        ps = tuple(
            sum((self.parts[i] * other.parts[j - i] for i in range(j + 1)), zero)
            for j in range(5))
        return TotalChernClass(ps)


@dataclass(frozen=True)
class ChernCharacter:
    """Graded pieces ch_0 .. ch_4; ch_0 is the integer (virtual) rank."""

    parts: tuple

    def __post_init__(self):
        if len(self.parts) != 5:
            raise ValueError("a character has exactly five graded pieces")
        _check_graded(self.parts, 0, "character")
        r = self.parts[0].coefficient(SchubertBasis.ONE)
        if r.denominator != 1:
            raise ValueError(f"the degree-0 piece must be an integer rank, got {r}")

    @property
    def rank(self) -> int:
        return int(self.parts[0].coefficient(SchubertBasis.ONE))

    def __getitem__(self, j: int) -> CohClass:
        return self.parts[j]

    def __add__(self, other: "ChernCharacter") -> "ChernCharacter":
        return ChernCharacter(tuple(a + b for a, b in zip(self.parts, other.parts)))

    def __sub__(self, other: "ChernCharacter") -> "ChernCharacter":
        return ChernCharacter(tuple(a - b for a, b in zip(self.parts, other.parts)))

    def __mul__(self, other):
        if isinstance(other, ChernCharacter):
            ps = tuple(
                sum((self.parts[i] * other.parts[j - i] for i in range(j + 1)), zero)
                for j in range(5))
            return ChernCharacter(ps)
        if isinstance(other, int):
            return ChernCharacter(tuple(other * p for p in self.parts))
        return NotImplemented

    __rmul__ = __mul__


@dataclass(frozen=True)
class PowerSums:
    """Power sums s_1 .. s_4 of the (virtual) Chern roots, s_l of degree l."""

    parts: tuple

    def __post_init__(self):
        if len(self.parts) != 4:
            raise ValueError("power sums have exactly four graded pieces")
        _check_graded(self.parts, 1, "power sum")

    def __getitem__(self, l: int) -> CohClass:
        if not 1 <= l <= 4:
            raise IndexError("power sums are indexed 1..4")
        return self.parts[l - 1]

    def __neg__(self) -> "PowerSums":
        return PowerSums(tuple(-p for p in self.parts))


def chern_tau_star() -> TotalChernClass:
    """Total Chern class of the dual tautological subbundle on the line space."""
    return TotalChernClass((one, sigma1, sigma11, zero, zero))


def chern_nu() -> TotalChernClass:
    """Total Chern class of the rank-2 bundle of functionals vanishing on the line.

    Equals the inverse of chern_tau_star(), because the two bundles sum to a
    trivial bundle in K-theory.
    """
    return TotalChernClass((one, -sigma1, sigma2, zero, zero))


def invert_total(c: TotalChernClass) -> TotalChernClass:
    """The unique unit total class d with c * d = 1 in the truncated ring.

    Solves degree by degree: d_j = -(c_1 d_{j-1} + ... + c_j d_0).
    """
    if c[0] != one:
        raise ValueError("only unit total classes (degree-0 piece 1) invert")
    d = [one]
    for j in range(1, 5):
        d.append(-sum((c[i] * d[j - i] for i in range(1, j + 1)), zero))
    return TotalChernClass(tuple(d))


def power_sums_from_negated_character(ch: ChernCharacter) -> PowerSums:
    """Power sums of the K-theoretic negation: s_l = -(l! * ch_l)."""
    return PowerSums(tuple(-factorial(l) * ch[l] for l in range(1, 5)))


def c4_from_power_sums(s: PowerSums) -> CohClass:
    """Degree-4 elementary symmetric function of the roots, expanded form.

    24*c4 = s1^4 + 8*s3*s1 - 6*s1^2*s2 + 3*s2^2 - 6*s4.
    """
    s1, s2, s3, s4 = s.parts
    return (s1 ** 4 + 8 * (s3 * s1) - 6 * (s1 * s1 * s2) + 3 * (s2 * s2) - 6 * s4) / 24


def chern_from_power_sums(s: PowerSums) -> TotalChernClass:
    """Total class of the virtual bundle with the given root power sums.

    Uses the Newton recurrence j*c_j = sum_{i<=j} (-1)^(i-1) c_{j-i} s_i, a
    different route than the expanded polynomial in c4_from_power_sums.
    """
    c = [one]
    for j in range(1, 5):
        acc = zero
        sign = 1
        for i in range(1, j + 1):
            acc = acc + sign * (c[j - i] * s[i])
            sign = -sign
        c.append(acc / j)
    return TotalChernClass(tuple(c))
