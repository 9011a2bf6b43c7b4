"""Small check/report containers shared by the verification entry points."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str

    def to_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


@dataclass(frozen=True, eq=False)
class Report:
    name: str
    checks: tuple[Check, ...]
    data: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.ok), None)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "checks": [c.to_dict() for c in self.checks],
            "data": self.data,
        }


class ReportBuilder:
    """Collects named pass/fail lines; failures carry the witness detail."""

    def __init__(self, name: str):
        self.name = name
        self._checks: list[Check] = []
        self.data: dict = {}

    def add(self, name: str, ok: bool, detail: str = "") -> bool:
        self._checks.append(Check(name, bool(ok), detail))
        return bool(ok)

    def expect(self, name: str, actual, expected) -> bool:
        ok = actual == expected
        detail = f"{actual}" if ok else f"expected {expected!r}, got {actual!r}"
        return self.add(name, ok, detail)

    def build(self) -> Report:
        return Report(self.name, tuple(self._checks), self.data)
