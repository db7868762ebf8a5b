"""Root systems and Weyl-group combinatorics for the simple complex Lie algebras.

Weights are kept in fundamental-weight coordinates throughout: the tuple
(c1, ..., cr) stands for c1*w1 + ... + cr*wr.  Simple-root coordinates are
derived on demand through the inverse Cartan matrix.  The Cartan matrix
convention is C[i][j] = 2(a_i, a_j)/(a_i, a_i), so the j-th simple root has
fundamental-weight coordinates equal to the j-th column of C.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import factorial

Weight = tuple[int, ...]

__all__ = [
    "Weight",
    "RootSystem",
    "build_root_system",
    "from_label",
    "is_dominant",
    "positive_root_count",
    "weyl_group_order",
    "weight_sum",
    "weight_diff",
    "weight_scale",
]


def weight_sum(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def weight_diff(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def weight_scale(factor: int, a: Weight) -> Weight:
    return tuple(factor * x for x in a)


def is_dominant(mu: Weight) -> bool:
    return all(c >= 0 for c in mu)


_SERIES_RANK_OK = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 3,
    "D": lambda r: r >= 4,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}


def positive_root_count(series: str, rank: int) -> int:
    if series == "A":
        return rank * (rank + 1) // 2
    if series in ("B", "C"):
        return rank * rank
    if series == "D":
        return rank * (rank - 1)
    if series == "E":
        return {6: 36, 7: 63, 8: 120}[rank]
    if series == "F":
        return 24
    if series == "G":
        return 6
    raise ValueError("unknown series %r" % series)


def weyl_group_order(series: str, rank: int) -> int:
    if series == "A":
        return factorial(rank + 1)
    if series in ("B", "C"):
        return 2**rank * factorial(rank)
    if series == "D":
        return 2 ** (rank - 1) * factorial(rank)
    if series == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[rank]
    if series == "F":
        return 1152
    if series == "G":
        return 12
    raise ValueError("unknown series %r" % series)


def _cartan_data(series: str, rank: int):
    """Cartan matrix (tuple of rows) and symmetrizer diag(d) with D*C symmetric."""
    matrix = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        matrix[i][i] = 2
    ones = [Fraction(1)] * rank

    def chain(nodes):
        for a, b in zip(nodes, nodes[1:]):
            matrix[a][b] = -1
            matrix[b][a] = -1

    if series == "A":
        chain(range(rank))
        sym = ones
    elif series == "B":
        chain(range(rank))
        matrix[rank - 1][rank - 2] = -2  # last simple root short
        sym = ones[:-1] + [Fraction(1, 2)]
    elif series == "C":
        chain(range(rank))
        matrix[rank - 2][rank - 1] = -2  # last simple root long
        sym = ones[:-1] + [Fraction(2)]
    elif series == "D":
        chain(range(rank - 1))
        matrix[rank - 3][rank - 1] = -1
        matrix[rank - 1][rank - 3] = -1
        sym = ones
    elif series == "E":
        chain([0] + list(range(2, rank)))
        matrix[1][3] = -1
        matrix[3][1] = -1
        sym = ones
    elif series == "F":
        chain(range(4))
        matrix[2][1] = -2  # third and fourth simple roots short
        sym = [Fraction(1), Fraction(1), Fraction(1, 2), Fraction(1, 2)]
    elif series == "G":
        matrix[0][1] = -3  # first simple root short
        matrix[1][0] = -1
        sym = [Fraction(1), Fraction(3)]
    else:
        raise ValueError("unknown series %r" % series)
    return tuple(tuple(row) for row in matrix), tuple(sym)


def _invert(matrix) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse of a small integer matrix by Gaussian elimination."""
    n = len(matrix)
    work = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if work[r][col])
        work[col], work[pivot] = work[pivot], work[col]
        scale = work[col][col]
        work[col] = [x / scale for x in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                shift = work[r][col]
                work[r] = [x - shift * y for x, y in zip(work[r], work[col])]
    return tuple(tuple(row[n:]) for row in work)


@dataclass(frozen=True)
class RootSystem:
    """Immutable root-system data for one simple type.

    positive_roots are in fundamental-weight coordinates; rho is the
    half-sum of positive roots, always (1, ..., 1) in this basis.
    """

    series: str
    rank: int
    cartan_matrix: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[Fraction, ...]
    positive_roots: tuple[Weight, ...]
    rho: Weight

    @property
    def label(self) -> str:
        return "%s%d" % (self.series, self.rank)

    @cached_property
    def _cartan_inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        return _invert(self.cartan_matrix)

    @cached_property
    def _gram(self) -> tuple[tuple[Fraction, ...], ...]:
        # Gram matrix of the fundamental weights: diag(d) * C^-1.
        inv = self._cartan_inverse
        return tuple(
            tuple(self.symmetrizer[i] * inv[i][j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def simple_root(self, i: int) -> Weight:
        """The i-th simple root (1-based) in fundamental-weight coordinates."""
        if not 1 <= i <= self.rank:
            raise IndexError("simple-root index %d out of range 1..%d" % (i, self.rank))
        return tuple(self.cartan_matrix[k][i - 1] for k in range(self.rank))

    def reflect(self, i: int, mu: Weight) -> Weight:
        """Simple reflection s_i(mu) = mu - <mu, a_i^v> a_i (1-based index)."""
        alpha = self.simple_root(i)
        coeff = mu[i - 1]
        return tuple(m - coeff * a for m, a in zip(mu, alpha))

    def orbit(self, mu: Weight) -> list[Weight]:
        """The full Weyl orbit of mu, sorted lexicographically."""
        mu = tuple(mu)
        seen = {mu}
        frontier = [mu]
        while frontier:
            nxt = []
            for weight in frontier:
                for i in range(1, self.rank + 1):
                    image = self.reflect(i, weight)
                    if image not in seen:
                        seen.add(image)
                        nxt.append(image)
            frontier = nxt
        return sorted(seen)

    def dominant_representative(self, mu: Weight) -> Weight:
        """The unique dominant weight in the Weyl orbit of mu."""
        current = tuple(mu)
        while True:
            for i, c in enumerate(current, start=1):
                if c < 0:
                    current = self.reflect(i, current)
                    break
            else:
                return current

    def inner(self, mu, nu) -> Fraction:
        """Weyl-invariant symmetric form on the weight space, exact."""
        gram = self._gram
        total = Fraction(0)
        for i, a in enumerate(mu):
            if a:
                row = gram[i]
                total += a * sum(row[j] * b for j, b in enumerate(nu) if b)
        return total

    def root_coordinates(self, mu) -> tuple[Fraction, ...]:
        """Coordinates of mu in the simple-root basis (exact rationals)."""
        inv = self._cartan_inverse
        return tuple(
            sum(inv[i][j] * mu[j] for j in range(self.rank)) for i in range(self.rank)
        )

    def height(self, mu) -> Fraction:
        return sum(self.root_coordinates(mu), Fraction(0))


def build_root_system(series: str, rank: int) -> RootSystem:
    """Construct the root system of the given simple type.

    Positive roots are generated by reflection closure from the simple
    roots; the classical count for the type is asserted afterwards.
    """
    if not isinstance(series, str) or series.upper() not in _SERIES_RANK_OK:
        raise ValueError("unknown series %r; expected one of A..G" % (series,))
    series = series.upper()
    if not isinstance(rank, int) or not _SERIES_RANK_OK[series](rank):
        raise ValueError(
            "invalid rank %r for series %s (A: r>=1, B: r>=2, C: r>=3, D: r>=4, "
            "E: 6..8, F: 4, G: 2)" % (rank, series)
        )
    cartan, symmetrizer = _cartan_data(series, rank)
    inverse = _invert(cartan)

    simple_roots = [tuple(cartan[k][j] for k in range(rank)) for j in range(rank)]

    def reflect(i: int, beta: Weight) -> Weight:
        coeff = beta[i]
        alpha = simple_roots[i]
        return tuple(b - coeff * a for b, a in zip(beta, alpha))

    all_roots = set(simple_roots)
    frontier = list(simple_roots)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(rank):
                image = reflect(i, beta)
                if image not in all_roots:
                    all_roots.add(image)
                    nxt.append(image)
        frontier = nxt

    def root_coords(beta: Weight):
        return tuple(sum(inverse[i][j] * beta[j] for j in range(rank)) for i in range(rank))

    positive = [beta for beta in all_roots if all(c >= 0 for c in root_coords(beta))]
    positive.sort(key=lambda beta: (sum(root_coords(beta)), beta))

    expected = positive_root_count(series, rank)
    assert len(positive) == expected, "positive-root closure mismatch for %s%d" % (series, rank)
    assert len(all_roots) == 2 * expected

    # D * C must be symmetric for the chosen symmetrizer.
    for i in range(rank):
        for j in range(rank):
            assert symmetrizer[i] * cartan[i][j] == symmetrizer[j] * cartan[j][i]

    return RootSystem(
        series=series,
        rank=rank,
        cartan_matrix=cartan,
        symmetrizer=symmetrizer,
        positive_roots=tuple(positive),
        rho=(1,) * rank,
    )


_LABEL_RE = re.compile(r"^([A-Ga-g])(\d+)$")


def from_label(label: str) -> RootSystem:
    """Build a root system from a selector string such as "A2" or "G2"."""
    match = _LABEL_RE.match(label.strip())
    if not match:
        raise ValueError("malformed algebra label %r (expected e.g. A1, B2, G2)" % (label,))
    return build_root_system(match.group(1).upper(), int(match.group(2)))
