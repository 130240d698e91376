"""Pass/fail bookkeeping shared by the verification suites."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckReport:
    name: str
    items: list[tuple[str, bool]] = field(default_factory=list)

    def add(self, label: str, ok: bool) -> bool:
        self.items.append((label, bool(ok)))
        return bool(ok)

    @property
    def ok(self) -> bool:
        return all(v for _, v in self.items)

    def failures(self) -> list[str]:
        return [k for k, v in self.items if not v]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "status": "pass" if self.ok else "fail",
            "details": {"checked": len(self.items), "failed": self.failures()},
        }
