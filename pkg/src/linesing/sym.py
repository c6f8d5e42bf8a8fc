"""Chern characters of the line-vanishing bundle and its associated bundles.

ch_sym_direct and ch_sym_adams compute the character of the t-th symmetric
power of the rank-2 bundle nu by two independent routes: a closed binomial
formula, and the exponential generating function driven by Adams operations.
Exact agreement of the two for every t is one of the package's main
verification levers.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .chern import ChernCharacter
from .schubert import one, sigma1, sigma11, sigma2, sigma21, sigma22, zero
from .series import RingSeries, adams_weight_series


def ch_nu() -> ChernCharacter:
    """Character of the rank-2 bundle of functionals vanishing on the line."""
    return ChernCharacter((
        2 * one,
        -sigma1,
        (sigma11 - sigma2) / 2,
        sigma21 / 6,
        zero,
    ))


def ch_wedge2_nu() -> ChernCharacter:
    """Character of the determinant line bundle wedge^2(nu) = exp(-sigma1)."""
    return ChernCharacter((
        one,
        -sigma1,
        (sigma11 + sigma2) / 2,
        -sigma21 / 3,
        sigma22 / 12,
    ))


def ch_sym_direct(t: int) -> ChernCharacter:
    """Character of Sym^t(nu) by the closed binomial formula."""
    if not isinstance(t, int) or t < 0:
        raise ValueError(f"symmetric power degree must be a nonnegative integer, got {t!r}")
    b2 = comb(t + 1, 2)
    b3 = comb(t + 1, 3)
    return ChernCharacter((
        (t + 1) * one,
        -b2 * sigma1,
        (Fraction(b2, 2) + b3) * sigma11 - Fraction(b2, 2) * sigma2,
        (Fraction(b2, 6) + Fraction(b3, 2)) * sigma21,
        Fraction(b3, 12) * sigma22,
    ))


def ch_sym_adams(t: int) -> ChernCharacter:
    """Character of Sym^t(nu) via the Adams generating function.

    The character of the full symmetric algebra series is
    exp(sum over k of ch_k(nu) * W_{k-1}(z)) where W_k(z) = sum(i^k z^i) is
    the weight series of the Adams operations; taking the z^t coefficient
    yields Sym^t.  The whole computation runs at truncation order exactly t.
    """
    if not isinstance(t, int) or t < 0:
        raise ValueError(f"symmetric power degree must be a nonnegative integer, got {t!r}")
    nu = ch_nu()
    arg = RingSeries.zero(t)
    for k in range(5):
        arg = arg + adams_weight_series(k - 1, t) * nu[k]
    full = arg.exp().coefficient(t)
    return ChernCharacter(tuple(full.degree_component(j) for j in range(5)))
