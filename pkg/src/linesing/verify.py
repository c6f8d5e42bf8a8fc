"""Self-verification suites behind the `verify` CLI command.

Each suite returns (ok, detail) and never raises: an exception inside a
check is itself a failure.  The suites deliberately recompute everything
through the public entry points so that a perturbation anywhere in the ring
or the pipeline surfaces here.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from . import schubert
from .chern import (
    PowerSums,
    TotalChernClass,
    c4_from_power_sums,
    chern_from_power_sums,
    invert_total,
    power_sums_from_negated_character,
)
from .counting import (
    SurfaceQuery,
    character_closed_form,
    character_via_resolution,
    count_closed_form,
    count_via_pipeline,
    power_sums_closed_form,
)
from .oracles import (
    monomial_rank,
    planes_count_cases,
    planes_count_closed,
    reference_table,
)
from .schubert import CohClass, SchubertBasis, one, sigma1, sigma11, sigma2, sigma21, sigma22
from .sym import ch_sym_adams, ch_sym_direct

GRID_MAX = 40
SYM_MAX = 60


def _grid(dmax=GRID_MAX):
    for d in range(1, dmax + 1):
        for k in range(1, d + 1):
            yield SurfaceQuery(d, k)


def check_ring():
    """Exhaustive ring axioms and pairing values over the basis."""
    basis = [CohClass({b: 1}) for b in SchubertBasis]
    for p, q in itertools.product(basis, repeat=2):
        if p * q != q * p:
            return False, f"commutativity fails on {p!r}, {q!r}"
    for p, q, r in itertools.product(basis, repeat=3):
        if (p * q) * r != p * (q * r):
            return False, f"associativity fails on {p!r}, {q!r}, {r!r}"
    for p in basis:
        if one * p != p or p * one != p:
            return False, f"identity fails on {p!r}"
    pairings = [
        (sigma1, sigma21, sigma22),
        (sigma11, sigma11, sigma22),
        (sigma2, sigma2, sigma22),
        (sigma11, sigma2, schubert.zero),
    ]
    for p, q, expect in pairings:
        if p * q != expect:
            return False, f"pairing {p!r} * {q!r} != {expect!r}"
    for b1, b2 in itertools.product(SchubertBasis, repeat=2):
        prod = CohClass({b1: 1}) * CohClass({b2: 1})
        deg = b1.degree + b2.degree
        if deg > 4:
            if prod:
                return False, f"product above degree 4 not truncated: {b1!r} * {b2!r}"
        elif not prod.is_homogeneous(deg):
            return False, f"product {b1!r} * {b2!r} not homogeneous of degree {deg}"
    return True, "216 triples, pairings, gradedness"


def check_table():
    """Pipeline counts reproduce all reference cells exactly."""
    table = reference_table()
    for d, k, n in table.entries:
        got = count_via_pipeline(SurfaceQuery(d, k)).n
        if got != n:
            return False, f"(d={d}, k={k}): pipeline {got} != reference {n}"
    return True, f"{len(table.entries)} cells"


def check_grid():
    """Pipeline, closed count formula, and power-sum routes agree on the grid."""
    cells = 0
    for q in _grid():
        cells += 1
        res = count_via_pipeline(q)
        closed = count_closed_form(q)
        if res.n != closed:
            return False, f"(d={q.d}, k={q.k}): pipeline {res.n} != closed {closed}"
        direct = power_sums_from_negated_character(character_closed_form(q))
        if direct != power_sums_closed_form(q):
            return False, f"(d={q.d}, k={q.k}): power-sum routes disagree"
        if res.n < 0:
            return False, f"(d={q.d}, k={q.k}): negative count {res.n}"
    return True, f"{cells} queries, d <= {GRID_MAX}"


def check_sym():
    """Adams-operation route equals the binomial route for Sym^t."""
    for t in range(SYM_MAX + 1):
        if ch_sym_adams(t) != ch_sym_direct(t):
            return False, f"Sym^{t}: generating-function route disagrees"
    return True, f"t <= {SYM_MAX}"


def check_rank():
    """Monomial counting reproduces the bundle rank on the grid."""
    for q in _grid():
        expect = monomial_rank(q.d, q.k)
        got = character_via_resolution(q).rank
        if got != expect:
            return False, f"(d={q.d}, k={q.k}): rank {got} != monomial count {expect}"
    return True, f"d <= {GRID_MAX}"


def check_planes():
    """Case analysis, product formula, and surface count agree at d = k."""
    for k in range(1, GRID_MAX + 1):
        cases = planes_count_cases(k)
        closed = planes_count_closed(k)
        if cases != closed:
            return False, f"k={k}: cases {cases} != closed {closed}"
        if k >= 2 and closed != count_closed_form(SurfaceQuery(k, k)):
            return False, f"k={k}: plane count != surface count"
    return True, f"k <= {GRID_MAX}"


def check_newton():
    """Newton conversions invert consistently on a deterministic sample."""
    samples = []
    vals = [Fraction(-2), Fraction(1, 2), Fraction(3), Fraction(-1, 3), Fraction(5)]
    for i, a in enumerate(vals):
        b = vals[(i + 1) % len(vals)]
        c = vals[(i + 2) % len(vals)]
        samples.append(PowerSums((
            a * sigma1, b * sigma11 + c * sigma2, (a + b) * sigma21, (b - c) * sigma22)))
    for s in samples:
        total = chern_from_power_sums(s)
        if c4_from_power_sums(s) != total[4]:
            return False, f"c4 routes disagree on {s!r}"
        if chern_from_power_sums(-s) != invert_total(total):
            return False, f"negation/inversion mismatch on {s!r}"
        prod = total * invert_total(total)
        if prod != TotalChernClass.unit():
            return False, f"total class times inverse is not 1 on {s!r}"
    return True, f"{len(samples)} samples"


SUITES = {
    "ring": (check_ring, "exhaustive ring axioms"),
    "table": (check_table, "reference table reproduction"),
    "grid": (check_grid, "pipeline vs closed form, d <= 40"),
    "sym": (check_sym, "Sym^t method equality, t <= 60"),
    "rank": (check_rank, "monomial rank oracle"),
    "planes": (check_planes, "d = k plane arrangement chain"),
    "newton": (check_newton, "Newton identity round trips"),
}


def run_suites(names=None, out=print) -> bool:
    """Run the named suites (all by default); report one line per suite."""
    if names is None:
        names = list(SUITES)
    all_ok = True
    for name in names:
        func, _ = SUITES[name]
        try:
            ok, detail = func()
        except Exception as exc:  # a crashing check is a failing check
            ok, detail = False, f"raised {exc!r}"
        all_ok &= ok
        out(f"{name:<8} {'PASS' if ok else 'FAIL'}  {detail}")
    return all_ok
