"""Index counts for the rational Grothendieck group of the wonderful compactification.

Only the indices are computed; K(X) itself is not modelled.

    orbit_count = [W : W^theta]        number of B-orbits in G/K
    k_dim       = [W : W(R^theta)]     dimension of K(X) over Q
    free_rank   = [W^theta : W(R^theta)]
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .folding import InvolutionDatum, fixed_roots, rank_bookkeeping
from .rootdata import RootDatum
from .weyl import enumerate_weyl, reflection_subgroup


@dataclass(frozen=True)
class IndexReport:
    orbit_count: int
    k_dim: int
    free_rank: int
    r: int
    s: int
    proper: bool
    order_W: int
    order_fixed: int
    order_reflection: int

    def to_dict(self) -> dict:
        return asdict(self)


def indices(datum: RootDatum, theta: InvolutionDatum) -> IndexReport:
    group = enumerate_weyl(datum)
    tmap = group.theta_map(theta.sigma)
    n_w = len(group)
    n_fixed = sum(1 for k in range(n_w) if tmap[k] == k)
    n_refl = len(reflection_subgroup(datum, fixed_roots(datum, theta)))
    if n_w % n_fixed or n_w % n_refl or n_fixed % n_refl:
        raise AssertionError(f"non-integral index: {n_w}, {n_fixed}, {n_refl}")
    rb = rank_bookkeeping(datum, theta)
    orbit_count = n_w // n_fixed
    k_dim = n_w // n_refl
    return IndexReport(
        orbit_count=orbit_count,
        k_dim=k_dim,
        free_rank=n_fixed // n_refl,
        r=rb.r,
        s=rb.s,
        proper=orbit_count < k_dim,
        order_W=n_w,
        order_fixed=n_fixed,
        order_reflection=n_refl,
    )
