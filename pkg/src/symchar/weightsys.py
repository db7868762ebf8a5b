"""Weight systems of irreducible highest-weight modules.

Multiplicities come from the Freudenthal recursion with exact rational
intermediate arithmetic; dimensions come from the Weyl dimension formula.
The two are computed independently and cross-checked against each other on
every construction, so a bug in one shows up immediately.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polyring import LaurentPoly
from .rootsys import RootSystem, Weight, is_dominant, weight_diff, weight_scale, weight_sum

__all__ = ["MultiplicityTable", "weight_system", "dim_irrep"]


@dataclass(frozen=True)
class MultiplicityTable:
    """Finite map weight -> multiplicity for one irreducible module."""

    highest_weight: Weight
    entries: dict[Weight, int]

    @property
    def rank(self) -> int:
        return len(self.highest_weight)

    def dimension(self) -> int:
        return sum(self.entries.values())

    def multiplicity(self, mu) -> int:
        return self.entries.get(tuple(mu), 0)

    def support(self) -> list[Weight]:
        return sorted(self.entries)

    def character_poly(self) -> LaurentPoly:
        """The character as a Laurent polynomial (sum of m(mu) q^mu)."""
        return LaurentPoly(self.rank, dict(self.entries))

    def to_json(self) -> list[dict]:
        return [{"weight": list(mu), "mult": self.entries[mu]} for mu in self.support()]


def _support_closure(rs: RootSystem, highest: Weight) -> set[Weight]:
    """All weights of the module, generated by descending root strings.

    From any weight mu with mu[i] > 0 the string mu - t*a_i stays inside
    the weight diagram for t = 1..mu[i]; iterating this from the highest
    weight reaches the entire support.
    """
    simple = [rs.simple_root(i) for i in range(1, rs.rank + 1)]
    seen = {highest}
    frontier = [highest]
    while frontier:
        nxt = []
        for mu in frontier:
            for i, coeff in enumerate(mu):
                if coeff > 0:
                    alpha = simple[i]
                    for t in range(1, coeff + 1):
                        down = tuple(m - t * a for m, a in zip(mu, alpha))
                        if down not in seen:
                            seen.add(down)
                            nxt.append(down)
        frontier = nxt
    return seen


def weight_system(rs: RootSystem, highest) -> MultiplicityTable:
    """Complete multiplicity table of the irreducible module with this highest weight."""
    highest = tuple(highest)
    if len(highest) != rs.rank:
        raise ValueError("highest weight has %d coordinates, expected %d" % (len(highest), rs.rank))
    if not all(isinstance(c, int) for c in highest):
        raise ValueError("highest weight coordinates must be integers")
    if not is_dominant(highest):
        raise ValueError("highest weight %r is not dominant" % (highest,))

    support = _support_closure(rs, highest)
    heights = {mu: rs.height(weight_diff(highest, mu)) for mu in support}
    order = sorted(support, key=lambda mu: (heights[mu], mu))

    top_norm = rs.inner(weight_sum(highest, rs.rho), weight_sum(highest, rs.rho))
    mult: dict[Weight, int] = {highest: 1}
    for mu in order:
        if mu == highest:
            continue
        acc = Fraction(0)
        for alpha in rs.positive_roots:
            t = 1
            nu = weight_sum(mu, alpha)
            while nu in support:
                count = mult.get(nu)
                if count:
                    acc += count * rs.inner(nu, alpha)
                t += 1
                nu = weight_sum(mu, weight_scale(t, alpha))
        denom = top_norm - rs.inner(weight_sum(mu, rs.rho), weight_sum(mu, rs.rho))
        assert denom != 0, "Freudenthal denominator vanished below the highest weight"
        value = 2 * acc / denom
        assert value.denominator == 1 and value >= 1, "non-integral Freudenthal multiplicity"
        mult[mu] = int(value)

    table = MultiplicityTable(highest_weight=highest, entries=mult)
    # Cross-checks: Weyl dimension formula and reflection invariance.
    assert table.dimension() == dim_irrep(rs, highest)
    for mu, count in mult.items():
        for i in range(1, rs.rank + 1):
            assert mult.get(rs.reflect(i, mu)) == count
    return table


def dim_irrep(rs: RootSystem, highest) -> int:
    """Dimension of the irreducible module, by the Weyl dimension formula."""
    highest = tuple(highest)
    if len(highest) != rs.rank or not is_dominant(highest):
        raise ValueError("highest weight %r is not dominant of rank %d" % (highest, rs.rank))
    shifted = weight_sum(highest, rs.rho)
    value = Fraction(1)
    for alpha in rs.positive_roots:
        value *= rs.inner(shifted, alpha) / rs.inner(rs.rho, alpha)
    assert value.denominator == 1 and value >= 1
    return int(value)
