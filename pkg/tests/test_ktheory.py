from __future__ import annotations

import pytest

from minrank.folding import CATALOG, build_space, fixed_roots
from minrank.ktheory import indices
from minrank.orbits import enumerate_orbits
from minrank.weyl import enumerate_weyl, reflection_subgroup


@pytest.mark.parametrize(
    "spec, expected",
    [("group:A2", (6, 36, 6)), ("fold:A3", (3, 6, 2)), ("fold:D4", (4, 8, 2)), ("fold:E6", (45, 270, 6)), ("group:A1", (2, 4, 2))],
)
def test_index_values(spec: str, expected: tuple[int, int, int]) -> None:
    rep = indices(*build_space(spec))
    assert (rep.orbit_count, rep.k_dim, rep.free_rank) == expected
    assert rep.proper


@pytest.mark.parametrize("spec", CATALOG)
def test_identities(spec: str) -> None:
    datum, theta = build_space(spec)
    rep = indices(datum, theta)
    assert rep.k_dim == rep.orbit_count * rep.free_rank
    assert rep.r + rep.s == datum.rank
    assert rep.proper == (rep.orbit_count < rep.k_dim) is True
    assert rep.orbit_count == len(enumerate_orbits(datum, theta))
    assert rep.k_dim == len(enumerate_weyl(datum)) // len(reflection_subgroup(datum, fixed_roots(datum, theta)))


def test_report_json() -> None:
    d = indices(*build_space("fold:A3")).to_dict()
    assert d["orbit_count"] == 3 and d["order_W"] == 24 and d["order_reflection"] == 4
