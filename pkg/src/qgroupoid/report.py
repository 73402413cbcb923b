"""Named pass/fail checks with witnesses."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable


@dataclass
class Check:
    name: str
    passed: bool
    witness: Any = None
    detail: str = ""
    # informational checks never make a report fail
    diagnostic: bool = False

    def line(self) -> str:
        tag = "PASS" if self.passed else ("INFO" if self.diagnostic else "FAIL")
        s = f"{tag} {self.name}"
        if self.detail:
            s += f": {self.detail}"
        if not self.passed and self.witness is not None:
            s += f" [witness {self.witness}]"
        return s

    def as_dict(self) -> dict:
        d = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            d["witness"] = _jsonable(self.witness)
        if self.detail:
            d["detail"] = self.detail
        if self.diagnostic:
            d["diagnostic"] = True
        return d


def _jsonable(x):
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (int, str, float, bool)) or x is None:
        return x
    return str(x)


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, witness: Any = None, detail: str = "",
            diagnostic: bool = False) -> Check:
        c = Check(name, bool(passed), witness, detail, diagnostic)
        self.checks.append(c)
        return c

    def extend(self, other: "Report", prefix: str = "") -> "Report":
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.witness, c.detail, c.diagnostic))
        return self

    @property
    def ok(self) -> bool:
        return all(c.passed or c.diagnostic for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed and not c.diagnostic]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.checks)

    def __bool__(self) -> bool:
        return self.ok

    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]

    def text(self) -> str:
        return "\n".join(self.lines())

    def to_json(self) -> str:
        return json.dumps({"ok": self.ok, "checks": [c.as_dict() for c in self.checks]},
                          indent=1, sort_keys=True)


def first_mismatch(pairs: Iterable[tuple[Any, Any, Any]]):
    """Return the first key whose two values differ, else None."""
    for key, a, b in pairs:
        if a != b:
            return key
    return None
