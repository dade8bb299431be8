"""Restriction from G to K: weights, characters and branching multiplicities."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .charring import WeightPolynomial, weyl_character
from .errors import NegativeMultiplicity, SearchExhausted
from .folding import FoldedDatum
from .rootdata import Weight, check_weight, is_dominant, weight_key, weyl_dim


def restrict_character(f: WeightPolynomial, folded: FoldedDatum) -> WeightPolynomial:
    """Push e^lam to e^res(lam), summing coefficients."""
    return f.map_weights(folded.res)


def dominated_by(mu: Sequence[int], nu: Sequence[int]) -> bool:
    """mu <= nu in the dominance order (nu - mu a nonnegative root combination)."""
    return all(b - a >= 0 for a, b in zip(mu, nu))


# ---------------------------------------------------------------------------
# extension of dominant weights


def _symmetric_lift(mu: Weight, folded: FoldedDatum) -> Weight | None:
    sizes = [0] * folded.lattice_rank
    for k in folded.orbit_map:
        sizes[k - 1] += 1
    lam = [Fraction(mu[k - 1], sizes[k - 1]) for k in folded.orbit_map]
    if any(c.denominator != 1 for c in lam):
        return None
    return tuple(int(c) for c in lam)


def extend_weight(mu: Sequence[int], folded: FoldedDatum) -> Weight:
    """A dominant weight lam of G with res(lam) = mu.

    Returns the theta-symmetric lift when it is integral; otherwise the
    lexicographically greatest dominant preimage whose coordinates lie in
    [-B, B], B = (coordinate sum of mu) + rank.
    """
    mu = check_weight(folded.datum_K, mu)
    datum = folded.datum
    lam = _symmetric_lift(mu, folded)
    if lam is not None and is_dominant(datum, lam):
        return lam

    n = datum.rank
    bound = sum(mu) + n
    orbits = folded.theta.orbits()
    lo = [0] * n
    hi = [0] * n
    for k, orb in enumerate(orbits):
        target = mu[k]
        if len(orb) == 1:
            lo[orb[0] - 1] = hi[orb[0] - 1] = target
        else:
            a, b = orb
            lo[a - 1] = max(-bound, target - bound)
            hi[a - 1] = min(bound, target + bound)
            lo[b - 1], hi[b - 1] = target - hi[a - 1], target - lo[a - 1]
    free = [orb for orb in orbits if len(orb) == 2]
    cartan = datum.cartan

    def feasible() -> bool:
        # upper bound on each pairing over the remaining box
        for i in range(n):
            row = cartan[i]
            best = sum(row[j] * (hi[j] if row[j] > 0 else lo[j]) for j in range(n) if row[j])
            if best < 0:
                return False
        return True

    def search(k: int) -> Weight | None:
        if not feasible():
            return None
        if k == len(free):
            cand = tuple(lo)
            return cand if is_dominant(datum, cand) else None
        a, b = free[k]
        saved = (lo[a - 1], hi[a - 1], lo[b - 1], hi[b - 1])
        target = mu[folded.orbit_map[a - 1] - 1]
        for t in range(saved[1], saved[0] - 1, -1):
            lo[a - 1] = hi[a - 1] = t
            lo[b - 1] = hi[b - 1] = target - t
            found = search(k + 1)
            if found is not None:
                return found
        lo[a - 1], hi[a - 1], lo[b - 1], hi[b - 1] = saved
        return None

    found = search(0)
    if found is None:
        raise SearchExhausted(f"no dominant preimage of {list(mu)} within |coords| <= {bound}")
    return found


# ---------------------------------------------------------------------------
# branching


@dataclass(frozen=True)
class BranchingResult:
    lam: Weight
    head: Weight
    constituents: tuple[tuple[Weight, int], ...]
    dims: tuple[int, ...]
    dim_G: int

    @property
    def rank(self) -> int:
        """Dimension of the head constituent."""
        return dict(zip((mu for mu, _ in self.constituents), self.dims))[self.head]

    def multiplicity(self, mu: Sequence[int]) -> int:
        return dict(self.constituents).get(tuple(mu), 0)

    def dimension_conserved(self) -> bool:
        return sum(m * d for (_, m), d in zip(self.constituents, self.dims)) == self.dim_G

    def head_is_top(self) -> bool:
        """head has multiplicity 1 and every other constituent lies strictly below it."""
        if self.multiplicity(self.head) != 1:
            return False
        return all(mu == self.head or dominated_by(mu, self.head) for mu, _ in self.constituents)

    def to_dict(self) -> dict:
        return {
            "lambda": list(self.lam),
            "head": list(self.head),
            "rank": self.rank,
            "constituents": [
                {"mu": list(mu), "mult": m, "dim": d} for (mu, m), d in zip(self.constituents, self.dims)
            ],
        }


def _height_lex(w: Weight) -> tuple:
    return weight_key(w)


def _height_revlex(w: Weight) -> tuple:
    return (sum(w), tuple(reversed(w)))


ORDERS: dict[str, Callable[[Weight], tuple]] = {"height_lex": _height_lex, "height_revlex": _height_revlex}


def branch(lam: Sequence[int], folded: FoldedDatum, order: str = "height_lex") -> BranchingResult:
    """Decompose the restriction of the simple G-module of highest weight lam.

    Peels off K-characters from the top of the restricted character.  A
    negative leading coefficient raises NegativeMultiplicity.
    """
    datum = folded.datum
    lam = check_weight(datum, lam)
    key = ORDERS[order]
    dk = folded.datum_K
    rem = restrict_character(weyl_character(datum, lam), folded)
    found: dict[Weight, int] = {}
    while rem:
        mu = max((w for w in rem.support if is_dominant(dk, w)), key=key)
        c = rem[mu]
        if c < 0:
            raise NegativeMultiplicity(f"coefficient {c} at {list(mu)} restricting {list(lam)}")
        found[mu] = found.get(mu, 0) + c
        rem = rem - weyl_character(dk, mu) * c
    constituents = tuple(sorted(found.items(), key=lambda t: weight_key(t[0]), reverse=True))
    return BranchingResult(
        lam=lam,
        head=folded.res(lam),
        constituents=constituents,
        dims=tuple(weyl_dim(dk, mu) for mu, _ in constituents),
        dim_G=weyl_dim(datum, lam),
    )


def bundle_rank(lam: Sequence[int], folded: FoldedDatum) -> int:
    """Rank of the bundle attached to lam: dim of the K-module with highest weight res(lam)."""
    lam = check_weight(folded.datum, lam)
    return weyl_dim(folded.datum_K, folded.res(lam))

