"""Pass/fail claim reports; failures are data, never exceptions."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Claim:
    id: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"id": self.id, "pass": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class Report:
    claims: tuple[Claim, ...]
    catalogued: bool = True

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    @property
    def falsified(self) -> list[Claim]:
        return [c for c in self.claims if not c.passed]

    def __add__(self, other: "Report") -> "Report":
        return Report(self.claims + other.claims, self.catalogued and other.catalogued)

    def to_dict(self) -> dict:
        out: dict = {"claims": [c.to_dict() for c in self.claims]}
        if not self.catalogued:
            out["uncatalogued"] = True
        return out
