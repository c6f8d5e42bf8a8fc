"""Independent checks: combinatorial counts, a rank oracle, reference values.

Nothing here touches the characteristic-class machinery, which is the point:
these values come from elementary counting and serve as external anchors for
the pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

# The 27 known reference counts, one triple (d, k, n) per populated cell of
# the triangular range 1 <= k <= d <= 7 starting at d = 2.
REFERENCE_ENTRIES = (
    (2, 1, 0), (2, 2, 10),
    (3, 1, 27), (3, 2, 522), (3, 3, 175),
    (4, 1, 320), (4, 2, 7674), (4, 3, 9624), (4, 4, 1330),
    (5, 1, 1990), (5, 2, 58315), (5, 3, 139572), (5, 4, 76335), (5, 5, 6510),
    (6, 1, 8680), (6, 2, 296190), (6, 3, 1043290), (6, 4, 1115310),
    (6, 5, 387360), (6, 6, 24150),
    (7, 1, 29960), (7, 2, 1147440), (7, 3, 5224695), (7, 4, 8332500),
    (7, 5, 5710755), (7, 6, 1480920), (7, 7, 73920),
)


@dataclass(frozen=True)
class ReferenceTable:
    entries: tuple

    def lookup(self, d: int, k: int) -> int:
        for dd, kk, n in self.entries:
            if (dd, kk) == (d, k):
                return n
        raise KeyError(f"no reference value for (d={d}, k={k})")


def reference_table() -> ReferenceTable:
    return ReferenceTable(REFERENCE_ENTRIES)


def planes_count_closed(k: int) -> int:
    """Arrangements of k planes with a common line through k+4 generic points.

    Closed product formula; the count is the d = k special case of the
    surface count.
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    n = Fraction(
        (k - 1) * k * (k + 1) * (k + 2) * (k + 3) * (k + 4) * (3 * k * k - 3 * k + 2),
        24 ** 2)
    assert n.denominator == 1, n
    return int(n)


def _falling(n: int, m: int) -> int:
    out = 1
    for i in range(m):
        out *= n - i
    return out


def planes_count_cases(k: int) -> int:
    """The same plane count by direct case analysis of point configurations.

    With k planes through k+4 generic points, either two planes carry three
    points each, or one carries three and two carry pairs, or four carry
    pairs (with two choices of the common line in the last case, already
    folded into the constant).  Falling factorials make impossible
    configurations vanish for small k.
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    two_triples = Fraction(_falling(k + 4, 6), 3 * 2 * 3 * 2 * 2)
    triple_and_pairs = Fraction(_falling(k + 4, 7), 3 * 2 * 2 ** 3)
    four_pairs = Fraction(_falling(k + 4, 8), 4 * 3 * 2 * 2 ** 3)
    n = two_triples + triple_and_pairs + four_pairs
    assert n.denominator == 1, n
    return int(n)


def monomial_rank(d: int, k: int) -> int:
    """Dimension of the degree-d forms vanishing k-fold on a fixed line.

    Counts monomials x^p y^q z^r t^s with p + q + r + s = d and p + q >= k,
    sliced by m = p + q: there are m + 1 choices of (p, q) and d - m + 1 of
    (r, s).
    """
    if not isinstance(d, int) or not isinstance(k, int) or not 1 <= k <= d:
        raise ValueError(f"need 1 <= k <= d, got d={d!r}, k={k!r}")
    return sum((m + 1) * (d - m + 1) for m in range(k, d + 1))
