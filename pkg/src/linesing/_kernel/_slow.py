"""Pure Python fallback for the series kernels.

A coefficient vector is a 7-tuple (n0, .., n5, den): six integer numerators
over one positive denominator, indexed by SchubertBasis enum value.  Vectors
need not be reduced; den > 0 always.  The compiled backend in _fast.pyx
implements the same functions and must stay in lockstep with this module.
"""

from math import gcd

ZERO_VEC = (0, 0, 0, 0, 0, 0, 1)
ONE_VEC = (1, 0, 0, 0, 0, 0, 1)


def vec_is_zero(v):
    return not (v[0] or v[1] or v[2] or v[3] or v[4] or v[5])


def vec_mul(a, b):
    """Structure-constant contraction of the six-class ring, unreduced."""
    a0, a1, a2, a3, a4, a5, da = a
    b0, b1, b2, b3, b4, b5, db = b
    x11 = a1 * b1
    return (
        a0 * b0,
        a0 * b1 + a1 * b0,
        a0 * b2 + a2 * b0 + x11,
        a0 * b3 + a3 * b0 + x11,
        a0 * b4 + a4 * b0 + a1 * (b2 + b3) + (a2 + a3) * b1,
        a0 * b5 + a5 * b0 + a1 * b4 + a4 * b1 + a2 * b2 + a3 * b3,
        da * db,
    )


def vec_add(a, b):
    da = a[6]
    db = b[6]
    if da == db:
        return (a[0] + b[0], a[1] + b[1], a[2] + b[2],
                a[3] + b[3], a[4] + b[4], a[5] + b[5], da)
    g = gcd(da, db)
    ma = db // g
    mb = da // g
    return (
        a[0] * ma + b[0] * mb,
        a[1] * ma + b[1] * mb,
        a[2] * ma + b[2] * mb,
        a[3] * ma + b[3] * mb,
        a[4] * ma + b[4] * mb,
        a[5] * ma + b[5] * mb,
        da * ma,
    )


def vec_reduce(v):
    g = gcd(v[0], v[1], v[2], v[3], v[4], v[5], v[6])
    if g == 1:
        return v
    return (v[0] // g, v[1] // g, v[2] // g, v[3] // g,
            v[4] // g, v[5] // g, v[6] // g)


def series_mul(a, b, order):
    """Coefficient vectors of the product series, truncated at z^order."""
    out = []
    for m in range(order + 1):
        acc = ZERO_VEC
        for j in range(m + 1):
            u = a[j]
            v = b[m - j]
            if vec_is_zero(u) or vec_is_zero(v):
                continue
            acc = vec_add(acc, vec_mul(u, v))
        out.append(vec_reduce(acc))
    return out


def series_exp(a, order):
    """exp of a series with zero constant term, as the finite sum of powers.

    The n-th power has valuation >= n, so sum(a^n / n!) terminates at
    n = order within the truncation.
    """
    if not vec_is_zero(a[0]):
        raise ValueError("series exponential needs valuation >= 1")
    exp_out = [ONE_VEC] + [ZERO_VEC] * order
    power = [ONE_VEC] + [ZERO_VEC] * order
    fact = 1
    for n in range(1, order + 1):
        nxt = [ZERO_VEC] * (order + 1)
        lo = n - 1  # valuation of the previous power
        for m in range(n, order + 1):
            acc = ZERO_VEC
            for j in range(lo, m):
                p = power[j]
                if vec_is_zero(p):
                    continue
                q = a[m - j]
                if vec_is_zero(q):
                    continue
                acc = vec_add(acc, vec_mul(p, q))
            nxt[m] = vec_reduce(acc)
        power = nxt
        fact *= n
        done = True
        for m in range(n, order + 1):
            p = power[m]
            if vec_is_zero(p):
                continue
            done = False
            exp_out[m] = vec_add(exp_out[m], p[:6] + (p[6] * fact,))
        if done:
            break
    return [vec_reduce(e) for e in exp_out]
