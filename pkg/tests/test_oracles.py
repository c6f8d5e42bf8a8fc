import pytest

from linesing.counting import SurfaceQuery, count_closed_form
from linesing.oracles import (
    monomial_rank,
    planes_count_cases,
    planes_count_closed,
    reference_table,
)


def brute_monomial_count(d, k):
    """Literal enumeration of monomials x^p y^q z^r t^s, p+q+r+s = d, p+q >= k."""
    count = 0
    for p in range(d + 1):
        for q in range(d + 1 - p):
            for r in range(d + 1 - p - q):
                s = d - p - q - r
                if p + q >= k:
                    count += 1
    return count


def test_planes_count_closed_values():
    assert planes_count_closed(1) == 0
    assert planes_count_closed(2) == 10
    assert planes_count_closed(3) == 175


def test_planes_count_cases_values():
    # k = 2: only the two-triples configuration survives: 6!/(3! 3! 2) = 10
    assert planes_count_cases(2) == 10
    # k = 3: 70 two-triples plus 105 triple-and-two-pairs
    assert planes_count_cases(3) == 70 + 105 == 175
    assert planes_count_cases(4) == count_closed_form(SurfaceQuery(4, 4)) == 1330


def test_planes_chain():
    for k in range(1, 21):
        assert planes_count_cases(k) == planes_count_closed(k)
    for k in range(2, 21):
        assert planes_count_closed(k) == count_closed_form(SurfaceQuery(k, k))


def test_planes_count_validation():
    with pytest.raises(ValueError):
        planes_count_closed(0)
    with pytest.raises(ValueError):
        planes_count_cases(0)


def test_monomial_rank_values():
    assert monomial_rank(3, 1) == 16
    assert monomial_rank(2, 2) == 3
    for d in range(1, 20):
        assert monomial_rank(d, d) == d + 1


def test_monomial_rank_against_enumeration():
    for d in range(1, 13):
        for k in range(1, d + 1):
            assert monomial_rank(d, k) == brute_monomial_count(d, k), (d, k)


def test_monomial_rank_validation():
    with pytest.raises(ValueError):
        monomial_rank(2, 3)
    with pytest.raises(ValueError):
        monomial_rank(2, 0)


def test_reference_table():
    table = reference_table()
    assert len(table.entries) == 27
    assert table.lookup(6, 6) == 24150
    assert table.lookup(7, 1) == 29960
    assert table.lookup(2, 1) == 0
    with pytest.raises(KeyError):
        table.lookup(8, 1)
    # triangular coverage for 2 <= d <= 7
    assert sorted((d, k) for d, k, _ in table.entries) \
        == [(d, k) for d in range(2, 8) for k in range(1, d + 1)]
