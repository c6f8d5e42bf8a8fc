"""Truncated formal power series with coefficients in the Schubert ring.

All arithmetic truncates at a fixed order carried by each series.  The
convolution and the exponential are delegated to the kernel backend (compiled
when available, pure Python otherwise); everything here is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _kernel
from .schubert import CohClass, zero


class RingSeries:
    """A series sum(c_i * z^i, i <= order) with CohClass coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()):
        if not isinstance(order, int) or order < 0:
            raise ValueError(f"order must be a nonnegative integer, got {order!r}")
        cs = []
        for c in list(coeffs)[: order + 1]:
            coerced = CohClass._coerce(c)
            if coerced is None:
                raise TypeError(f"bad series coefficient {c!r}")
            cs.append(coerced)
        cs.extend([zero] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, order: int) -> "RingSeries":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "RingSeries":
        return cls(order, (1,))

    def coefficient(self, i: int) -> CohClass:
        return self.coeffs[i]

    def valuation(self):
        """Index of the first nonzero coefficient, None for the zero series."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def __eq__(self, other):
        if not isinstance(other, RingSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def _check_order(self, other):
        if self.order != other.order:
            raise ValueError(
                f"series orders differ: {self.order} != {other.order}")

    def __add__(self, other):
        if isinstance(other, RingSeries):
            self._check_order(other)
            return RingSeries(
                self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])
        c = CohClass._coerce(other)
        if c is None:
            return NotImplemented
        return RingSeries(self.order, (self.coeffs[0] + c,) + self.coeffs[1:])

    __radd__ = __add__

    def __neg__(self):
        return RingSeries(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, RingSeries):
            self._check_order(other)
            return RingSeries(
                self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RingSeries):
            self._check_order(other)
            raw = _kernel.series_mul(
                [c.ratvec() for c in self.coeffs],
                [c.ratvec() for c in other.coeffs],
                self.order)
            return RingSeries(self.order, [CohClass.from_ratvec(v) for v in raw])
        c = CohClass._coerce(other)
        if c is None:
            return NotImplemented
        return RingSeries(self.order, [a * c for a in self.coeffs])

    __rmul__ = __mul__

    def exp(self) -> "RingSeries":
        """Exponential, defined when the constant coefficient vanishes.

        The argument then has valuation >= 1, so exp is the finite sum of at
        most `order` series powers; the kernel evaluates exactly that sum.
        """
        if self.coeffs[0]:
            raise ValueError("series exponential needs a zero constant term")
        raw = _kernel.series_exp([c.ratvec() for c in self.coeffs], self.order)
        return RingSeries(self.order, [CohClass.from_ratvec(v) for v in raw])

    def __repr__(self):
        terms = [f"({c!r})*z^{i}" for i, c in enumerate(self.coeffs) if c]
        body = " + ".join(terms) if terms else "0"
        return f"RingSeries(order={self.order}: {body})"


@dataclass(frozen=True)
class AdamsWeightPolynomial:
    """The polynomial p_k with p_k(z/(1-z)) = sum(i^k z^i, i >= 1).

    p_0 = z and each successor is obtained by applying (z + z^2) d/dz, which
    is how z d/dz acts through the substitution z -> z/(1-z).
    """

    k: int
    coeffs: tuple  # integer coefficient of z^j at index j

    @classmethod
    def build(cls, k: int) -> "AdamsWeightPolynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"k must be a nonnegative integer, got {k!r}")
        cs = [0, 1]
        for _ in range(k):
            deriv = [j * cs[j] for j in range(1, len(cs))]
            # multiply by z + z^2: shift the derivative up by one and by two
            nxt = [0] * (len(cs) + 1)
            for j, c in enumerate(deriv):
                nxt[j + 1] += c
                nxt[j + 2] += c
            cs = nxt
        return cls(k, tuple(cs))


def adams_weight_series(k: int, order: int) -> RingSeries:
    """The scalar series sum(i^k z^i, i >= 1), truncated at z^order.

    Defined for k >= -1; the k = -1 member is sum(z^i / i) = -log(1-z).
    For k >= 0 the series is evaluated as p_k at the geometric series
    f = z/(1-z) rather than summed directly.
    """
    if not isinstance(k, int) or k < -1:
        raise ValueError(f"k must be an integer >= -1, got {k!r}")
    if k == -1:
        return RingSeries(
            order, [zero] + [CohClass.scalar(Fraction(1, i)) for i in range(1, order + 1)])
    f = RingSeries(order, [0] + [1] * order)
    acc = RingSeries.zero(order)
    for c in reversed(AdamsWeightPolynomial.build(k).coeffs):
        acc = acc * f + c
    return acc
