from __future__ import annotations

import pytest

from minrank.errors import AdjacentOrbit, UnsupportedSpace
from minrank.folding import CATALOG, build_space, fixed_roots, fold, involution, rank_bookkeeping, verify_structure
from minrank.rootdata import build_datum
from minrank.weyl import enumerate_weyl

import oracles


class TestBuildSpace:
    def test_group_a1(self) -> None:
        datum, theta = build_space("group:A1")
        assert datum.type_label == "A1xA1" and theta.sigma == (2, 1)

    def test_fold_a3(self) -> None:
        datum, theta = build_space("fold:A3")
        assert theta.sigma == (3, 2, 1)
        assert theta.apply((1, 0, 0)) == (0, 0, 1)

    def test_fold_e6_fixes_two_nodes(self) -> None:
        _, theta = build_space("fold:E6")
        assert [i for i in range(1, 7) if theta.sigma[i - 1] == i] == [2, 4]

    def test_products(self) -> None:
        datum, theta = build_space("group:A1*fold:A3")
        assert datum.rank == 5 and theta.sigma == (2, 1, 5, 4, 3)

    @pytest.mark.parametrize("spec", ["fold:A2", "fold:A4", "fold:B3", "fold:E7", "group:Z2", "sym:A3", "", "fold:A1"])
    def test_unsupported(self, spec: str) -> None:
        with pytest.raises(UnsupportedSpace):
            build_space(spec)

    def test_bad_involutions(self) -> None:
        d = build_datum("A3")
        with pytest.raises(ValueError):
            involution(d, (2, 1, 3))  # not a diagram automorphism
        with pytest.raises(ValueError):
            involution(d, (2, 3, 1))
        flip = involution(build_datum("A2"), (2, 1))
        assert not flip.catalogued
        with pytest.raises(AdjacentOrbit):
            fold(build_datum("A2"), flip)


class TestFold:
    @pytest.mark.parametrize(
        "spec, label",
        [
            ("fold:A3", "C2"),
            ("fold:A5", "C3"),
            ("fold:D4", "B3"),
            ("fold:D5", "B4"),
            ("fold:E6", "F4"),
            ("group:A2", "A2"),
            ("group:G2", "G2"),
            ("group:B3", "B3"),
            ("group:A1*fold:A3", "A1xC2"),
        ],
    )
    def test_folded_type(self, spec: str, label: str) -> None:
        assert fold(*build_space(spec)).datum_K.type_label == label

    def test_fold_a3_cartan(self) -> None:
        # orbits {1,3}, {2}: sum over the orbit of rows, any column representative
        folded = fold(*build_space("fold:A3"))
        assert folded.datum_K.cartan == ((2, -2), (-1, 2))

    def test_group_a2_res(self) -> None:
        folded = fold(*build_space("group:A2"))
        assert folded.res((1, 2, 3, 5)) == (4, 7)
        assert folded.datum_K.cartan == build_datum("A2").cartan

    @pytest.mark.parametrize("spec", CATALOG)
    def test_res_sums_orbits(self, spec: str) -> None:
        datum, theta = build_space(spec)
        folded = fold(datum, theta)
        for k, orb in enumerate(theta.orbits()):
            assert folded.res_matrix[k] == tuple(int(i + 1 in orb) for i in range(datum.rank))
        assert folded.torsion_free
        # kernel of res is spanned by theta(a) - a
        assert oracles.snf_divisors(folded.res_matrix) == [1] * folded.lattice_rank

    @pytest.mark.parametrize("spec", CATALOG)
    def test_restriction_multiplicities(self, spec: str) -> None:
        datum, theta = build_space(spec)
        folded = fold(datum, theta)
        counts: dict = {}
        for a in datum.positive_roots:
            counts[folded.res(a)] = counts.get(folded.res(a), 0) + 1
        assert set(counts) == set(folded.datum_K.positive_roots)
        assert set(counts.values()) <= {1, 2}
        assert sum(v == 1 for v in counts.values()) == len(fixed_roots(datum, theta)) // 2

    @pytest.mark.parametrize("spec", CATALOG)
    def test_fixed_weyl_order(self, spec: str) -> None:
        datum, theta = build_space(spec)
        g = enumerate_weyl(datum)
        tmap = g.theta_map(theta.sigma)
        assert sum(tmap[k] == k for k in range(len(g))) == len(enumerate_weyl(fold(datum, theta).datum_K))


class TestStructure:
    @pytest.mark.parametrize("spec, n_fixed", [("fold:A3", 4), ("fold:E6", 24), ("group:A1", 0), ("fold:D4", 12)])
    def test_fixed_roots(self, spec: str, n_fixed: int) -> None:
        assert len(fixed_roots(*build_space(spec))) == n_fixed

    @pytest.mark.parametrize("spec", CATALOG)
    def test_verify_structure_passes(self, spec: str) -> None:
        report = verify_structure(*build_space(spec))
        assert report.passed, report.falsified

    @pytest.mark.parametrize(
        "spec, r, s", [("group:A1", 1, 1), ("fold:A3", 1, 2), ("fold:D4", 1, 3), ("fold:E6", 2, 4), ("group:B3", 3, 3)]
    )
    def test_rank_bookkeeping(self, spec: str, r: int, s: int) -> None:
        rb = rank_bookkeeping(*build_space(spec))
        assert (rb.r, rb.s) == (r, s)

    def test_uncatalogued_report(self) -> None:
        d = build_datum("D4")
        theta = involution(d, (1, 2, 4, 3))  # same diagram flip as fold:D4, entered by hand
        report = verify_structure(d, theta)
        assert report.passed
        assert report.to_dict()["uncatalogued"] is True
