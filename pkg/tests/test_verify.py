from __future__ import annotations

import pytest

from minrank.folding import CATALOG
from minrank.verify import verify_space

# spaces whose K has a dominant weight of coordinate sum <= 3 without a dominant lift
STRANDED = {"fold:A3", "fold:D4", "group:A1*fold:A3"}


@pytest.mark.parametrize("spec", CATALOG)
def test_every_other_claim_passes(spec: str) -> None:
    report = verify_space(spec)
    failing = {c.id for c in report.falsified}
    assert failing == ({"extend_round_trip"} if spec in STRANDED else set())


@pytest.mark.parametrize("spec", ["group:A2", "group:B2", "fold:A3", "fold:D4"])
def test_deep(spec: str) -> None:
    report = verify_space(spec, deep=True)
    ids = [c.id for c in report.claims]
    assert "closure_order" in ids and "coset_constancy" in ids
    assert all(c.passed for c in report.claims if c.id != "extend_round_trip")


def test_stranded_weight_is_reported() -> None:
    claim = next(c for c in verify_space("fold:A3").claims if c.id == "extend_round_trip")
    assert not claim.passed and "[1, 1]" in claim.detail


def test_report_shape() -> None:
    d = verify_space("group:A1").to_dict()
    assert set(d) == {"claims"}
    assert all(set(c) == {"id", "pass", "detail"} for c in d["claims"])
