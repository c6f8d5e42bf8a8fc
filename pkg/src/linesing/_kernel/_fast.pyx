# cython: language_level=3
"""Compiled series kernels; mirrors _slow exactly (same raw vector layout).

Numerators and denominators are arbitrary-precision Python ints, so part of
the cost is irreducible big-int work; the compiled win comes from removing
interpreter and tuple-allocation overhead in the convolution loops.
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


cdef tuple _convolve_at(list a, list b, Py_ssize_t m, Py_ssize_t lo):
    """Reduced coefficient of z^m in a*b, summing j = lo .. m-lo' style range.

    a is indexed by j in [lo, m], b by m - j; zero coefficients are skipped.
    The accumulator is kept as six numerators over one denominator in local
    variables, with a gcd rescale only when a term's denominator differs.
    """
    cdef object c0 = 0, c1 = 0, c2 = 0, c3 = 0, c4 = 0, c5 = 0, cd = 1
    cdef object a0, a1, a2, a3, a4, a5, da
    cdef object b0, b1, b2, b3, b4, b5, db
    cdef object x11, td, g, ma, mb
    cdef tuple p, q
    cdef Py_ssize_t j
    cdef bint started = 0
    for j in range(lo, m + 1):
        p = <tuple> a[j]
        if not (p[0] or p[1] or p[2] or p[3] or p[4] or p[5]):
            continue
        q = <tuple> b[m - j]
        if not (q[0] or q[1] or q[2] or q[3] or q[4] or q[5]):
            continue
        a0, a1, a2, a3, a4, a5, da = p
        b0, b1, b2, b3, b4, b5, db = q
        x11 = a1 * b1
        td = da * db
        if not started:
            started = 1
            cd = td
            c0 = a0 * b0
            c1 = a0 * b1 + a1 * b0
            c2 = a0 * b2 + a2 * b0 + x11
            c3 = a0 * b3 + a3 * b0 + x11
            c4 = a0 * b4 + a4 * b0 + a1 * (b2 + b3) + (a2 + a3) * b1
            c5 = a0 * b5 + a5 * b0 + a1 * b4 + a4 * b1 + a2 * b2 + a3 * b3
            continue
        if cd == td:
            c0 = c0 + a0 * b0
            c1 = c1 + a0 * b1 + a1 * b0
            c2 = c2 + a0 * b2 + a2 * b0 + x11
            c3 = c3 + a0 * b3 + a3 * b0 + x11
            c4 = c4 + a0 * b4 + a4 * b0 + a1 * (b2 + b3) + (a2 + a3) * b1
            c5 = c5 + a0 * b5 + a5 * b0 + a1 * b4 + a4 * b1 + a2 * b2 + a3 * b3
        else:
            g = gcd(cd, td)
            ma = td // g
            mb = cd // g
            c0 = c0 * ma + (a0 * b0) * mb
            c1 = c1 * ma + (a0 * b1 + a1 * b0) * mb
            c2 = c2 * ma + (a0 * b2 + a2 * b0 + x11) * mb
            c3 = c3 * ma + (a0 * b3 + a3 * b0 + x11) * mb
            c4 = c4 * ma + (a0 * b4 + a4 * b0 + a1 * (b2 + b3) + (a2 + a3) * b1) * mb
            c5 = c5 * ma + (a0 * b5 + a5 * b0 + a1 * b4 + a4 * b1 + a2 * b2 + a3 * b3) * mb
            cd = cd * ma
    if not started:
        return ZERO_VEC
    g = gcd(c0, c1, c2, c3, c4, c5, cd)
    if g == 1:
        return (c0, c1, c2, c3, c4, c5, cd)
    return (c0 // g, c1 // g, c2 // g, c3 // g, c4 // g, c5 // g, cd // g)


def series_mul(a, b, order):
    """Coefficient vectors of the product series, truncated at z^order."""
    cdef Py_ssize_t m
    cdef list av = list(a), bv = list(b)
    cdef list out = []
    for m in range(order + 1):
        out.append(_convolve_at(av, bv, m, 0))
    return out


def series_exp(a, order):
    """exp of a series with zero constant term, as the finite sum of powers.

    The n-th power has valuation >= n, so sum(a^n / n!) terminates at
    n = order within the truncation.
    """
    cdef Py_ssize_t n, m
    cdef list av = list(a)
    cdef list exp_out, power, nxt
    cdef tuple pm
    cdef object fact
    cdef bint done
    if not vec_is_zero(av[0]):
        raise ValueError("series exponential needs valuation >= 1")
    exp_out = [ONE_VEC] + [ZERO_VEC] * order
    power = [ONE_VEC] + [ZERO_VEC] * order
    fact = 1
    for n in range(1, order + 1):
        nxt = [ZERO_VEC] * (order + 1)
        for m in range(n, order + 1):
            # previous power has valuation n - 1
            nxt[m] = _convolve_at(power, av, m, n - 1)
        power = nxt
        fact = fact * n
        done = True
        for m in range(n, order + 1):
            pm = <tuple> power[m]
            if not (pm[0] or pm[1] or pm[2] or pm[3] or pm[4] or pm[5]):
                continue
            done = False
            exp_out[m] = vec_add(
                exp_out[m], (pm[0], pm[1], pm[2], pm[3], pm[4], pm[5], pm[6] * fact))
        if done:
            break
    return [vec_reduce(e) for e in exp_out]
